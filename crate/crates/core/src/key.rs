//! Opaque byte-string query keys and deduplicated key sets.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// Maximum key length in bytes.
pub const MAX_KEY_LEN: usize = 4096;

/// An opaque query key: a byte string of length 1..=4096.
///
/// Keys compare byte-wise; the library never interprets their contents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key(Vec<u8>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KeyError {
    #[error("key must not be empty")]
    Empty,
    #[error("key length {0} exceeds {MAX_KEY_LEN} bytes")]
    TooLong(usize),
}

impl Key {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self, KeyError> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(KeyError::Empty);
        }
        if bytes.len() > MAX_KEY_LEN {
            return Err(KeyError::TooLong(bytes.len()));
        }
        Ok(Key(bytes))
    }

    #[inline]
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl AsRef<[u8]> for Key {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// An ordered collection of distinct keys; the positive set over which
/// filters are built.
///
/// Construction deduplicates byte-wise, keeping first occurrences in
/// input order and counting what was dropped so callers can warn.
#[derive(Debug, Clone, Default)]
pub struct KeySet {
    keys: Vec<Key>,
    duplicates_dropped: usize,
}

impl KeySet {
    pub fn new(input: impl IntoIterator<Item = Key>) -> Self {
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut keys = Vec::new();
        let mut duplicates_dropped = 0;
        for k in input {
            if seen.insert(k.0.clone()) {
                keys.push(k);
            } else {
                duplicates_dropped += 1;
            }
        }
        KeySet {
            keys,
            duplicates_dropped,
        }
    }

    pub fn empty() -> Self {
        KeySet::default()
    }

    /// Number of keys `m`.
    #[inline]
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// How many byte-wise duplicates were dropped at construction.
    pub fn duplicates_dropped(&self) -> usize {
        self.duplicates_dropped
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Key> {
        self.keys.iter()
    }

    pub fn keys(&self) -> &[Key] {
        &self.keys
    }

    pub fn contains(&self, key: &Key) -> bool {
        // Linear scan; the set is not indexed. Callers needing fast
        // membership (the harness) keep their own index.
        self.keys.iter().any(|k| k == key)
    }
}

impl<'a> IntoIterator for &'a KeySet {
    type Item = &'a Key;
    type IntoIter = core::slice::Iter<'a, Key>;
    fn into_iter(self) -> Self::IntoIter {
        self.keys.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn key_length_bounds() {
        assert_eq!(Key::new(vec![]), Err(KeyError::Empty));
        assert!(Key::new(vec![0u8; 1]).is_ok());
        assert!(Key::new(vec![0u8; MAX_KEY_LEN]).is_ok());
        assert_eq!(
            Key::new(vec![0u8; MAX_KEY_LEN + 1]),
            Err(KeyError::TooLong(MAX_KEY_LEN + 1))
        );
    }

    #[test]
    fn keyset_dedups_keeping_first() {
        let ks = KeySet::new([
            Key::new(*b"aa").unwrap(),
            Key::new(*b"bb").unwrap(),
            Key::new(*b"aa").unwrap(),
        ]);
        assert_eq!(ks.len(), 2);
        assert_eq!(ks.duplicates_dropped(), 1);
        assert_eq!(ks.keys()[0].bytes(), b"aa");
        assert_eq!(ks.keys()[1].bytes(), b"bb");
    }

    #[test]
    fn equality_is_bytewise() {
        let a = Key::new(*b"abc").unwrap();
        let b = Key::new(vec![b'a', b'b', b'c']).unwrap();
        assert_eq!(a, b);
    }
}
