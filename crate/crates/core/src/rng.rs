//! Seed derivation and integer draws on top of SplitMix64.
//!
//! Integer ranges are sampled by rejection on raw 64-bit outputs so a stream
//! is fully determined by the SplitMix64 algorithm and can be replayed from
//! any language.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

/// First SplitMix64 output for seed `master ^ index`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    SplitMix64::seed_from_u64(master ^ index).next_u64()
}

pub struct SeedStream {
    inner: SplitMix64,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        SeedStream { inner: SplitMix64::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn uniform(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi as i128 - lo as i128 + 1) as u128;
        if span > u64::MAX as u128 {
            return self.next_u64() as i64;
        }
        let span = span as u64;
        // Largest multiple of span that fits in the u64 range.
        let zone = u64::MAX - (u64::MAX % span + 1) % span;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return (lo as i128 + (x % span) as i128) as i64;
            }
        }
    }
}
