//! Seeded random matrices for property checks and the CLI's random mode.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Matrix;

/// Deterministic generator; the same seed yields the same matrices on every
/// platform.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An `n x n` matrix with entries drawn uniformly from `lo..=hi`.
pub fn random_matrix<R: From<i64>>(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Matrix<R> {
    (0..n)
        .map(|_| (0..n).map(|_| R::from(rng.gen_range(lo..=hi))).collect())
        .collect()
}
