//! Small deterministic pseudo-random generator (SplitMix64).
//!
//! Generated point configurations must reproduce bit-for-bit from a seed
//! across platforms and dependency upgrades, so the generator is pinned here
//! rather than taken from an external crate.

use crate::arith::Rational;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n` (n > 0).
    pub fn next_below(&mut self, n: u64) -> u64 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// Uniform integer in `lo..=hi`.
    pub fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + self.next_below(span) as i64
    }

    /// Random rational with |numerator| <= `num_bound` and
    /// 1 <= denominator <= `den_bound`.
    pub fn next_rational(&mut self, num_bound: i64, den_bound: i64) -> Rational {
        let num = self.next_in(-num_bound, num_bound);
        let den = self.next_in(1, den_bound);
        Rational::from_frac(num, den).expect("denominator is positive")
    }
}
