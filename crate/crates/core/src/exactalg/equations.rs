//! Solving linear equations whose unknown is a matrix.

use super::field::Field;
use super::matrix::Matrix;

fn flatten<K: Field>(parts: &[Matrix<K>]) -> Vec<(usize, K::Elem)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for m in parts {
        for (i, j, v) in m.entries() {
            out.push((offset + i * m.cols() + j, v.clone()));
        }
        offset += m.rows() * m.cols();
    }
    out
}

fn total_len<K: Field>(parts: &[Matrix<K>]) -> usize {
    parts.iter().map(|m| m.rows() * m.cols()).sum()
}

fn coefficient_matrix<K, F>(field: &K, rows: usize, cols: usize, lin: &F) -> Matrix<K>
where
    K: Field,
    F: Fn(&Matrix<K>) -> Vec<Matrix<K>>,
{
    let n = rows * cols;
    let mut out_len = None;
    let mut trip = Vec::new();
    for u in 0..n {
        let e = Matrix::from_triplets(field, rows, cols, [(u / cols, u % cols, field.one())]);
        let image = lin(&e);
        out_len.get_or_insert(total_len(&image));
        for (k, v) in flatten(&image) {
            trip.push((k, u, v));
        }
    }
    let zero_image = lin(&Matrix::zeros(field, rows, cols));
    let len = out_len.unwrap_or_else(|| total_len(&zero_image));
    Matrix::from_triplets(field, len, n, trip)
}

fn unflatten<K: Field>(field: &K, rows: usize, cols: usize, column: &Matrix<K>, k: usize) -> Matrix<K> {
    let trip: Vec<_> = (0..column.rows()).map(|u| (u, column.get(u, k))).filter(|(_, v)| !field.is_zero(v)).map(|(u, v)| (u / cols, u % cols, v)).collect();
    Matrix::from_triplets(field, rows, cols, trip)
}

/// A basis of the solution space `{X : lin(X) = 0}` for a linear map `lin`
/// from `rows x cols` matrices to lists of matrices.
pub fn homogeneous_solutions<K, F>(field: &K, rows: usize, cols: usize, lin: F) -> Vec<Matrix<K>>
where
    K: Field,
    F: Fn(&Matrix<K>) -> Vec<Matrix<K>>,
{
    let kernel = coefficient_matrix(field, rows, cols, &lin).kernel();
    (0..kernel.cols()).map(|k| unflatten(field, rows, cols, &kernel, k)).collect()
}

/// All solutions of `lin(X) = rhs`: one particular solution and a basis of
/// the homogeneous solutions, or `None` if the system is inconsistent.
pub fn affine_solutions<K, F>(
    field: &K,
    rows: usize,
    cols: usize,
    lin: F,
    rhs: &[Matrix<K>],
) -> Option<(Matrix<K>, Vec<Matrix<K>>)>
where
    K: Field,
    F: Fn(&Matrix<K>) -> Vec<Matrix<K>>,
{
    let coeff = coefficient_matrix(field, rows, cols, &lin);
    let target = Matrix::from_triplets(field, total_len(rhs), 1, flatten(rhs).into_iter().map(|(k, v)| (k, 0, v)));
    let particular = coeff.solve(&target)?;
    let kernel = coeff.kernel();
    let basis = (0..kernel.cols()).map(|k| unflatten(field, rows, cols, &kernel, k)).collect();
    Some((unflatten(field, rows, cols, &particular, 0), basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Rationals;

    #[test]
    fn commutant_of_a_diagonal_matrix() {
        let q = Rationals;
        let d = Matrix::from_i64_rows(&q, &[&[1, 0], &[0, 2]]);
        let sols = homogeneous_solutions(&q, 2, 2, |x| vec![&(&d * x) - &(x * &d)]);
        assert_eq!(sols.len(), 2);
    }

    #[test]
    fn affine_inverse() {
        let q = Rationals;
        let a = Matrix::from_i64_rows(&q, &[&[1, 1], &[0, 1]]);
        let (x, hom) = affine_solutions(&q, 2, 2, |x| vec![&a * x], &[Matrix::identity(&q, 2)]).unwrap();
        assert!(hom.is_empty());
        assert!((&a * &x).is_identity());
    }
}
