use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Rational;

/// Default number of reduction steps allowed per basis computation.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Bound on numerators and denominators of random specialization values.
pub const SAMPLE_BOUND: i64 = 97;

/// Resource limit and random seed shared by every computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Reduction steps allowed per standard basis computation.
    pub budget: usize,
    /// Seed for random specializations.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { budget: DEFAULT_BUDGET, seed: 0 }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Config { seed, ..Config::default() }
    }

    /// A reproducible sampler; distinct `stream`s give independent draws.
    pub fn sampler(&self, stream: u64) -> Sampler {
        Sampler::new(self.seed, stream)
    }
}

/// Draws nonzero rationals `p/q` with `|p| <= 97` and `1 <= q <= 97`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        let mut num = 0;
        while num == 0 {
            num = self.rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        }
        let den = self.rng.random_range(1..=SAMPLE_BOUND);
        Rational::new(num, den)
    }

    /// `k` pairwise distinct values, none of them in `avoid`.
    pub fn distinct(&mut self, k: usize, avoid: &[Rational]) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        while out.len() < k {
            let r = self.nonzero_rational();
            if !out.contains(&r) && !avoid.contains(&r) {
                out.push(r);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_reproducible_and_bounded() {
        let mut first = Sampler::new(7, 1);
        let a: Vec<_> = (0..20).map(|_| first.nonzero_rational()).collect();
        let mut s = Sampler::new(7, 1);
        for r in &a {
            assert_eq!(*r, s.nonzero_rational());
            assert!(!crate::poly::Field::is_zero(r));
        }
        let mut other = Sampler::new(7, 2);
        let b: Vec<_> = (0..20).map(|_| other.nonzero_rational()).collect();
        assert_ne!(a, b);
    }
}
