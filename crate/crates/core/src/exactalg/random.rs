//! Seeded random matrices for probes, mutations and property tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::matrix::Matrix;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random matrix with small entries.
pub fn random_matrix<K: Field, R: Rng>(field: &K, rows: usize, cols: usize, rng: &mut R) -> Matrix<K> {
    Matrix::from_triplets(
        field,
        rows,
        cols,
        (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| (i, j, field.random_small(rng))).collect::<Vec<_>>(),
    )
}

/// A random invertible matrix together with its inverse, built as a product
/// of a unit lower and a unit upper triangular matrix with a permutation.
pub fn random_invertible<K: Field, R: Rng>(field: &K, n: usize, rng: &mut R) -> (Matrix<K>, Matrix<K>) {
    let mut trip = Vec::new();
    for i in 0..n {
        trip.push((i, i, field.one()));
        for j in 0..i {
            trip.push((i, j, field.random_small(rng)));
        }
    }
    let lower = Matrix::from_triplets(field, n, n, trip);
    let upper = random_unit_upper(field, n, rng);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let p = Matrix::permutation(field, n, &perm);
    let m = &(&p * &lower) * &upper;
    let inv = m.try_invert().inverse.expect("unit triangular factors are invertible");
    (m, inv)
}

fn random_unit_upper<K: Field, R: Rng>(field: &K, n: usize, rng: &mut R) -> Matrix<K> {
    let mut trip = Vec::new();
    for i in 0..n {
        trip.push((i, i, field.one()));
        for j in i + 1..n {
            trip.push((i, j, field.random_small(rng)));
        }
    }
    Matrix::from_triplets(field, n, n, trip)
}
