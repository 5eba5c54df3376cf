//! Seeded random tensors for the randomized suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linear::{int, Matrix, TwoTensor};

/// Entries are drawn uniformly from `-3..=3`.
pub const ENTRY_BOUND: i64 = 3;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_tensor(rng: &mut impl Rng, n: usize) -> TwoTensor {
    TwoTensor::from_fn(n, |_, _| int(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)))
}

/// Mostly zero entries, so that the defect vanishes more often than for a
/// dense draw.
pub fn sparse_random_tensor(rng: &mut impl Rng, n: usize) -> TwoTensor {
    TwoTensor::from_fn(n, |_, _| {
        if rng.gen_bool(0.25) {
            int(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))
        } else {
            int(0)
        }
    })
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)))
}

/// `n` tensors from `seed`, alternating dense and sparse draws.
pub fn tensor_batch(seed: u64, n: usize, count: usize) -> Vec<TwoTensor> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                random_tensor(&mut rng, n)
            } else {
                sparse_random_tensor(&mut rng, n)
            }
        })
        .collect()
}
