//! Seeded random streams.
//!
//! Every optimizer draws from a [`RandomSource`]. The production source is
//! [`RngStream`], a ChaCha8 generator whose output for a given seed is fixed
//! across platforms. Tests substitute deterministic sources to force
//! particular draws.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub trait RandomSource {
    /// Uniform draw from the open interval (0, 1).
    fn unit_open(&mut self) -> f64;

    /// Uniform draw from `[lo, hi]`.
    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit_open()
    }

    /// Uniform integer in `[0, n)`. `n` must be positive.
    fn index_below(&mut self, n: usize) -> usize {
        assert!(n > 0, "index_below requires n > 0");
        ((self.unit_open() * n as f64) as usize).min(n - 1)
    }
}

impl<R: RandomSource + ?Sized> RandomSource for &mut R {
    fn unit_open(&mut self) -> f64 {
        (**self).unit_open()
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        (**self).uniform(lo, hi)
    }

    fn index_below(&mut self, n: usize) -> usize {
        (**self).index_below(n)
    }
}

#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent stream derived from this stream's seed and `index`.
    ///
    /// Derivation depends only on the seed, never on how many draws the
    /// parent has made, so children can be created in any order.
    pub fn child(&self, index: u64) -> Self {
        Self::new(splitmix64(
            self.seed ^ splitmix64(index.wrapping_add(0x9E37_79B9_7F4A_7C15)),
        ))
    }
}

impl RandomSource for RngStream {
    fn unit_open(&mut self) -> f64 {
        // 53 random mantissa bits, offset by half an ulp so 0 is excluded.
        ((self.inner.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    fn index_below(&mut self, n: usize) -> usize {
        assert!(n > 0, "index_below requires n > 0");
        self.inner.gen_range(0..n as u64) as usize
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
