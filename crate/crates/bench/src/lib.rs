//! Seeded inputs shared by the benchmarks.

use effspec::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// An `n×n` matrix with entries uniform in `[0, 1)`, reproducible from `seed`.
pub fn random_nonnegative(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::new(n, (0..n * n).map(|_| rng.gen::<f64>()).collect()).expect("finite entries")
}
