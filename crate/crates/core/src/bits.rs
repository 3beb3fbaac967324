//! Word-backed bit vectors and MSB-first variable-width bit packing.

use alloc::vec;
use alloc::vec::Vec;

/// Fixed-length bit vector backed by little-endian `u64` words.
///
/// Bit `i` lives in word `i / 64` at bit position `i % 64` (LSB first),
/// which is also the serialized layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
    len: u64,
}

impl BitVec {
    pub fn zeroed(len: u64) -> Self {
        let n_words = len.div_ceil(64) as usize;
        BitVec {
            words: vec![0; n_words],
            len,
        }
    }

    pub fn from_words(words: Vec<u64>, len: u64) -> Option<Self> {
        if words.len() as u64 != len.div_ceil(64) {
            return None;
        }
        // Bits past `len` in the last word must be zero.
        if len % 64 != 0 {
            if let Some(&last) = words.last() {
                if last >> (len % 64) != 0 {
                    return None;
                }
            }
        }
        Some(BitVec { words, len })
    }

    #[inline]
    pub fn len(&self) -> u64 {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, i: u64) {
        debug_assert!(i < self.len);
        self.words[(i / 64) as usize] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.len);
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }
}

/// Appends values of varying bit width to a byte stream, most significant
/// bit first, packing bytes from bit 7 down to bit 0.
#[derive(Debug, Default)]
pub struct MsbBitWriter {
    bytes: Vec<u8>,
    // Bits already used in the trailing byte, 0..8.
    used: u8,
}

impl MsbBitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, value: u64, width: u8) {
        debug_assert!(width <= 64);
        debug_assert!(width == 64 || value >> width == 0);
        for bit in (0..width).rev() {
            if self.used == 0 {
                self.bytes.push(0);
            }
            let b = (value >> bit) & 1;
            let last = self.bytes.last_mut().unwrap();
            *last |= (b as u8) << (7 - self.used);
            self.used = (self.used + 1) % 8;
        }
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }
}

/// Reads back values written by [`MsbBitWriter`].
pub struct MsbBitReader<'a> {
    bytes: &'a [u8],
    pos: u64,
}

impl<'a> MsbBitReader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        MsbBitReader { bytes, pos: 0 }
    }

    pub fn read(&mut self, width: u8) -> Option<u64> {
        debug_assert!(width <= 64);
        if self.pos + u64::from(width) > self.bytes.len() as u64 * 8 {
            return None;
        }
        let mut v = 0u64;
        for _ in 0..width {
            let byte = self.bytes[(self.pos / 8) as usize];
            let bit = (byte >> (7 - (self.pos % 8))) & 1;
            v = (v << 1) | u64::from(bit);
            self.pos += 1;
        }
        Some(v)
    }

    /// Reads the value at an absolute bit offset without advancing.
    pub fn read_at(&self, offset: u64, width: u8) -> Option<u64> {
        let mut r = MsbBitReader {
            bytes: self.bytes,
            pos: offset,
        };
        r.read(width)
    }
}

/// Reads a `width`-bit value at bit `offset` from a packed MSB-first stream.
#[inline]
pub fn read_bits_at(bytes: &[u8], offset: u64, width: u8) -> Option<u64> {
    MsbBitReader::new(bytes).read_at(offset, width)
}
