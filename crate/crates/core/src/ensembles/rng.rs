//! Per-sample random streams.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// ChaCha8 keyed by the run seed, with one stream per sample index, so a
/// sample depends only on `(seed, index)`.
#[derive(Debug, Clone)]
pub struct SampleRng {
    inner: ChaCha8Rng,
}

impl SampleRng {
    pub fn new(seed: u64, index: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(index);
        Self { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on `(0, 1]`.
    pub fn uniform(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.uniform() * n as f64) as usize).min(n - 1)
    }

    /// Standard complex normal, `E|z|² = 1`, via Box–Muller.
    pub fn complex_normal(&mut self) -> Complex64 {
        let r = (-2.0 * self.uniform().ln()).sqrt();
        let theta = TAU * self.uniform();
        Complex64::new(r * theta.cos(), r * theta.sin()) * FRAC_1_SQRT_2
    }
}
