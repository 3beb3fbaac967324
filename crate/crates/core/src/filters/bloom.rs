//! Standard Bloom filter over byte-string keys.
//!
//! One keyed 128-bit hash per key, split into two 64-bit halves used in
//! double-hashing form `h1 + i*h2 mod L` for the `k` probe indices. The
//! second half is forced odd so the probe sequence does not degenerate
//! on even-length bit arrays.

use crate::bits::BitVec;
use crate::hash::hash128;
use crate::key::{Key, KeySet};
use crate::math;

/// Frozen Bloom filter. `total_bits == 0` with a nonempty build set is the
/// degenerate always-yes filter; an empty build set always answers no.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BloomFilter {
    bits: BitVec,
    k: u8,
    hash_seed: u64,
    n_keys: u64,
}

/// k = round(ln 2 * L / n), clamped to [1, 64].
pub(crate) fn optimal_k(total_bits: u64, n_keys: u64) -> u8 {
    if n_keys == 0 || total_bits == 0 {
        return 0;
    }
    let k = math::round(core::f64::consts::LN_2 * total_bits as f64 / n_keys as f64);
    k.clamp(1.0, 64.0) as u8
}

impl BloomFilter {
    /// Builds over `keys` with exactly `total_bits` bits of bit array.
    pub fn build(keys: &KeySet, total_bits: u64, hash_seed: u64) -> Self {
        let n_keys = keys.len() as u64;
        let k = optimal_k(total_bits, n_keys);
        let mut bits = BitVec::zeroed(total_bits);
        if total_bits > 0 {
            for key in keys {
                let (h1, h2) = probe_pair(key, hash_seed);
                for i in 0..u64::from(k) {
                    bits.set(h1.wrapping_add(i.wrapping_mul(h2)) % total_bits);
                }
            }
        }
        BloomFilter {
            bits,
            k,
            hash_seed,
            n_keys,
        }
    }

    pub fn contains(&self, key: &Key) -> bool {
        if self.n_keys == 0 {
            return false;
        }
        let len = self.bits.len();
        if len == 0 {
            return true;
        }
        let (h1, h2) = probe_pair(key, self.hash_seed);
        (0..u64::from(self.k))
            .all(|i| self.bits.get(h1.wrapping_add(i.wrapping_mul(h2)) % len))
    }

    pub fn total_bits(&self) -> u64 {
        self.bits.len()
    }

    pub fn num_hashes(&self) -> u8 {
        self.k
    }

    pub fn hash_seed(&self) -> u64 {
        self.hash_seed
    }

    pub fn n_keys(&self) -> u64 {
        self.n_keys
    }

    pub(crate) fn bit_words(&self) -> &[u64] {
        self.bits.words()
    }

    pub(crate) fn from_parts(bits: BitVec, k: u8, hash_seed: u64, n_keys: u64) -> Self {
        BloomFilter {
            bits,
            k,
            hash_seed,
            n_keys,
        }
    }

    /// Occupancy-based false positive estimate `(ones/L)^k`.
    pub fn model_fpr(&self) -> f64 {
        if self.n_keys == 0 {
            return 0.0;
        }
        if self.bits.len() == 0 {
            return 1.0;
        }
        let fill = self.bits.count_ones() as f64 / self.bits.len() as f64;
        math::powf(fill, f64::from(self.k))
    }
}

#[inline]
fn probe_pair(key: &Key, seed: u64) -> (u64, u64) {
    let (h1, h2) = hash128(key.bytes(), seed);
    (h1, h2 | 1)
}
