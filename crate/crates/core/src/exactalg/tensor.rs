//! Index bookkeeping for tensor products of based spaces.

use super::field::Field;
use super::matrix::Matrix;

/// Splits a flat row-major index into per-factor indices.
pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
    out
}

/// Inverse of [`multi_index`].
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    dims.iter().zip(idx).fold(0, |acc, (d, i)| acc * d + i)
}

/// The map `V₀⊗…⊗Vₙ₋₁ → V_{order[0]}⊗…⊗V_{order[n-1]}` permuting tensor factors.
pub fn permute_factors<K: Field>(field: &K, dims: &[usize], order: &[usize]) -> Matrix<K> {
    assert_eq!(dims.len(), order.len(), "permutation arity");
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let targets: Vec<usize> = (0..total)
        .map(|flat| {
            let idx = multi_index(dims, flat);
            let out: Vec<usize> = order.iter().map(|&k| idx[k]).collect();
            flat_index(&out_dims, &out)
        })
        .collect();
    Matrix::permutation(field, total, &targets)
}

/// The flip `V⊗W → W⊗V`.
pub fn flip<K: Field>(field: &K, v: usize, w: usize) -> Matrix<K> {
    permute_factors(field, &[v, w], &[1, 0])
}

/// Kronecker product of several maps.
pub fn tensor_all<K: Field>(maps: &[&Matrix<K>]) -> Matrix<K> {
    let (first, rest) = maps.split_first().expect("at least one factor");
    rest.iter().fold((*first).clone(), |acc, m| acc.tensor(m))
}

/// Identity on a space of the given dimension.
pub fn id<K: Field>(field: &K, n: usize) -> Matrix<K> {
    Matrix::identity(field, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Rationals;

    #[test]
    fn flip_of_lines_is_identity() {
        assert!(flip(&Rationals, 1, 1).is_identity());
        assert_eq!(flip(&Rationals, 2, 2), Matrix::from_i64_rows(&Rationals, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn permutation_moves_factors() {
        let q = Rationals;
        let a = Matrix::from_i64_rows(&q, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64_rows(&q, &[&[0, 1, 1], &[5, 0, 0], &[1, 1, 1]]);
        let p_in = permute_factors(&q, &[2, 3], &[1, 0]);
        let p_out = permute_factors(&q, &[2, 3], &[1, 0]);
        assert_eq!(&p_out * &a.tensor(&b), &b.tensor(&a) * &p_in);
    }

    #[test]
    fn index_round_trip() {
        let dims = [2, 3, 4];
        for flat in 0..24 {
            assert_eq!(flat_index(&dims, &multi_index(&dims, flat)), flat);
        }
    }
}

/// `(f⊗g)∘x` computed as `(f⊗id)∘((id⊗g)∘x)`, which avoids forming the
/// dense Kronecker product of two dense factors.
pub fn tensor_then<K: Field>(f: &Matrix<K>, g: &Matrix<K>, x: &Matrix<K>) -> Matrix<K> {
    let field = f.field();
    let inner = &id(field, f.cols()).tensor(g) * x;
    &f.tensor(&id(field, g.rows())) * &inner
}
