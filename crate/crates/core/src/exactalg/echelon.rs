//! Row reduction with leftmost pivots and the operations built on it.

use std::collections::BTreeMap;

use super::field::Field;
use super::matrix::{LinAlgError, Matrix};
use super::space::BasedSpace;

/// Incremental row echelon form over sparse rows.
///
/// Rows are kept normalized (leading coefficient 1); a row is only reduced
/// far enough to find its leading column until [`Echelon::into_reduced`].
pub(crate) struct Echelon<K: Field> {
    field: K,
    rows: Vec<Vec<(usize, K::Elem)>>,
    pivot_row: Vec<Option<usize>>,
}

impl<K: Field> Echelon<K> {
    pub(crate) fn new(field: &K, width: usize) -> Self {
        Echelon { field: field.clone(), rows: Vec::new(), pivot_row: vec![None; width] }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns `false` if it was dependent on the rows already present.
    pub(crate) fn insert(&mut self, row: &[(usize, K::Elem)]) -> bool {
        let f = &self.field;
        let mut v: BTreeMap<usize, K::Elem> = row.iter().filter(|(_, x)| !f.is_zero(x)).cloned().collect();
        let mut cursor = 0;
        loop {
            let Some((c, coef)) = v.range(cursor..).next().map(|(c, x)| (*c, x.clone())) else {
                return false;
            };
            match self.pivot_row[c] {
                Some(p) => {
                    for (j, pv) in &self.rows[p] {
                        let updated = f.sub(v.get(j).unwrap_or(&f.zero()), &f.mul(&coef, pv));
                        if f.is_zero(&updated) {
                            v.remove(j);
                        } else {
                            v.insert(*j, updated);
                        }
                    }
                    cursor = c + 1;
                }
                None => {
                    let inv = f.inv(&coef).expect("nonzero leading coefficient");
                    let normalized = v.into_iter().map(|(j, x)| (j, f.mul(&inv, &x))).collect();
                    self.pivot_row[c] = Some(self.rows.len());
                    self.rows.push(normalized);
                    return true;
                }
            }
        }
    }

    /// Fully reduced echelon form: rows sorted by pivot column, each pivot
    /// column zero outside its own row.
    pub(crate) fn into_reduced(self) -> Rref<K> {
        let f = self.field;
        let mut order: Vec<(usize, usize)> =
            self.pivot_row.iter().enumerate().filter_map(|(c, r)| r.map(|r| (c, r))).collect();
        order.sort();
        let pivots: Vec<usize> = order.iter().map(|(c, _)| *c).collect();
        let mut is_pivot = vec![false; self.pivot_row.len()];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut rows = self.rows;
        let mut reduced: Vec<Option<Vec<(usize, K::Elem)>>> = vec![None; order.len()];
        let index_of_pivot: BTreeMap<usize, usize> = pivots.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        for k in (0..order.len()).rev() {
            let (c, r) = order[k];
            let mut v: BTreeMap<usize, K::Elem> = std::mem::take(&mut rows[r]).into_iter().collect();
            let mut cursor = c + 1;
            while let Some((col, coef)) =
                v.range(cursor..).find(|(col, _)| is_pivot[**col]).map(|(col, x)| (*col, x.clone()))
            {
                let other = reduced[index_of_pivot[&col]].as_ref().expect("later rows reduced first");
                for (j, pv) in other {
                    let updated = f.sub(v.get(j).unwrap_or(&f.zero()), &f.mul(&coef, pv));
                    if f.is_zero(&updated) {
                        v.remove(j);
                    } else {
                        v.insert(*j, updated);
                    }
                }
                cursor = col + 1;
            }
            reduced[k] = Some(v.into_iter().collect());
        }
        Rref { pivots, rows: reduced.into_iter().map(|r| r.expect("reduced")).collect() }
    }
}

/// Reduced row echelon form: `rows[k]` has leading 1 in column `pivots[k]`.
pub(crate) struct Rref<K: Field> {
    pub(crate) pivots: Vec<usize>,
    pub(crate) rows: Vec<Vec<(usize, K::Elem)>>,
}

pub(crate) fn rref_of_rows<K: Field>(m: &Matrix<K>) -> Rref<K> {
    let mut e = Echelon::new(m.field(), m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i));
    }
    e.into_reduced()
}

/// Result of [`Matrix::try_invert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inversion<K: Field> {
    pub inverse: Option<Matrix<K>>,
    pub rank: usize,
}

/// Kernel and image bases, stored as the columns of two matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelImage<K: Field> {
    pub kernel: Matrix<K>,
    pub image: Matrix<K>,
}

/// A splitting `(i, q)` of an idempotent `e`: `q∘i = id` and `i∘q = e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting<K: Field> {
    pub section: Matrix<K>,
    pub retraction: Matrix<K>,
}

/// A quotient space together with a projection and a section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient<K: Field> {
    pub space: BasedSpace,
    pub projection: Matrix<K>,
    pub section: Matrix<K>,
}

impl<K: Field> Matrix<K> {
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field(), self.cols());
        for i in 0..self.rows() {
            e.insert(self.row(i));
        }
        e.rank()
    }

    /// Two-sided inverse if the matrix is square of full rank; otherwise no
    /// inverse and the computed rank.
    pub fn try_invert(&self) -> Inversion<K> {
        let n = self.rows();
        if !self.is_square() {
            return Inversion { inverse: None, rank: self.rank() };
        }
        let field = self.field();
        let mut e = Echelon::new(field, 2 * n);
        for i in 0..n {
            let mut row: Vec<(usize, K::Elem)> = self.row(i).to_vec();
            row.push((n + i, field.one()));
            e.insert(&row);
        }
        let rref = e.into_reduced();
        let rank = rref.pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Inversion { inverse: None, rank };
        }
        let data = rref.rows.into_iter().map(|r| r.into_iter().filter(|(j, _)| *j >= n).map(|(j, v)| (j - n, v)).collect()).collect();
        Inversion { inverse: Some(Matrix::from_sparse_rows(field, n, data)), rank }
    }

    /// Reduced-echelon bases of the kernel and the image.
    pub fn kernel_and_image(&self) -> KernelImage<K> {
        KernelImage { kernel: self.kernel(), image: self.image() }
    }

    /// Kernel basis (one column per free variable, in increasing order).
    pub fn kernel(&self) -> Matrix<K> {
        let field = self.field();
        let rref = rref_of_rows(self);
        let mut is_pivot = vec![false; self.cols()];
        for &c in &rref.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols()).filter(|c| !is_pivot[*c]).collect();
        let mut free_index = vec![usize::MAX; self.cols()];
        for (k, &c) in free.iter().enumerate() {
            free_index[c] = k;
        }
        let mut trip = Vec::new();
        for (k, &c) in free.iter().enumerate() {
            trip.push((c, k, field.one()));
        }
        for (p, row) in rref.pivots.iter().zip(&rref.rows) {
            for (j, v) in row {
                if *j != *p {
                    trip.push((*p, free_index[*j], field.neg(v)));
                }
            }
        }
        Matrix::from_triplets(field, self.cols(), free.len(), trip)
    }

    /// Image basis in reduced column echelon form.
    pub fn image(&self) -> Matrix<K> {
        let rref = rref_of_rows(&self.transpose());
        Matrix::from_sparse_rows(self.field(), self.rows(), rref.rows).transpose()
    }

    /// Some `X` with `self ∘ X = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix<K>) -> Option<Matrix<K>> {
        assert_eq!(self.rows(), rhs.rows(), "solve: row mismatch");
        let n = self.cols();
        let rref = rref_of_rows(&self.hstack(rhs));
        if rref.pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut trip = Vec::new();
        for (p, row) in rref.pivots.iter().zip(&rref.rows) {
            for (j, v) in row {
                if *j >= n {
                    trip.push((*p, j - n, v.clone()));
                }
            }
        }
        Some(Matrix::from_triplets(self.field(), n, rhs.cols(), trip))
    }

    /// Splits an idempotent through its image, with the image basis in
    /// reduced column echelon form.
    pub fn split_idempotent(&self) -> Result<Splitting<K>, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare(self.rows(), self.cols()));
        }
        if &(self * self) != self {
            return Err(LinAlgError::NotIdempotent);
        }
        let field = self.field();
        let rref = rref_of_rows(&self.transpose());
        let r = rref.pivots.len();
        let section = Matrix::from_sparse_rows(field, self.rows(), rref.rows).transpose();
        let selector = Matrix::from_triplets(field, r, self.rows(), rref.pivots.iter().enumerate().map(|(k, &p)| (k, p, field.one())));
        let retraction = &selector * self;
        Ok(Splitting { section, retraction })
    }
}

/// Quotient of `ambient` by the span of the columns of `relations`; the basis
/// is the set of non-pivot coordinates of the reduced relation span.
pub fn quotient_by_span<K: Field>(ambient: &BasedSpace, relations: &Matrix<K>) -> Quotient<K> {
    assert_eq!(relations.rows(), ambient.dim(), "relation vectors must lie in the ambient space");
    let field = relations.field();
    let n = ambient.dim();
    let rref = rref_of_rows(&relations.transpose());
    let mut is_pivot = vec![false; n];
    for &c in &rref.pivots {
        is_pivot[c] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|c| !is_pivot[*c]).collect();
    let mut kept_index = vec![usize::MAX; n];
    for (k, &c) in kept.iter().enumerate() {
        kept_index[c] = k;
    }
    let mut trip: Vec<(usize, usize, K::Elem)> = kept.iter().enumerate().map(|(k, &c)| (k, c, field.one())).collect();
    for (p, row) in rref.pivots.iter().zip(&rref.rows) {
        for (j, v) in row {
            if *j != *p {
                trip.push((kept_index[*j], *p, field.neg(v)));
            }
        }
    }
    let projection = Matrix::from_triplets(field, kept.len(), n, trip);
    let section = Matrix::from_triplets(field, n, kept.len(), kept.iter().enumerate().map(|(k, &c)| (c, k, field.one())));
    let space = ambient.subspace(&kept);
    Quotient { space, projection, section }
}

/// [`quotient_by_span`] for an ambient space known only by dimension.
pub fn quotient_by_span_dim<K: Field>(dim: usize, relations: &Matrix<K>) -> Quotient<K> {
    quotient_by_span(&BasedSpace::indexed("e", dim), relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Rationals;

    #[test]
    fn try_invert_examples() {
        let q = Rationals;
        let id4 = Matrix::identity(&q, 4);
        assert_eq!(id4.try_invert().inverse, Some(id4.clone()));
        let ones = Matrix::from_i64_rows(&q, &[&[1, 1], &[1, 1]]);
        let inv = ones.try_invert();
        assert_eq!(inv.inverse, None);
        assert_eq!(inv.rank, 1);
        let swap = Matrix::from_i64_rows(&q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.try_invert().inverse, Some(swap.clone()));
    }

    #[test]
    fn inverse_of_upper_triangular() {
        let q = Rationals;
        let a = Matrix::from_i64_rows(&q, &[&[2, 1, 0], &[0, 1, 3], &[0, 0, 4]]);
        let inv = a.try_invert().inverse.unwrap();
        assert!((&a * &inv).is_identity());
        assert!((&inv * &a).is_identity());
    }

    #[test]
    fn kernel_and_image_examples() {
        let q = Rationals;
        let zero = Matrix::zeros(&q, 2, 2);
        let ki = zero.kernel_and_image();
        assert_eq!((ki.kernel.cols(), ki.image.cols()), (2, 0));
        let ki = Matrix::identity(&q, 3).kernel_and_image();
        assert_eq!((ki.kernel.cols(), ki.image.cols()), (0, 3));
        let row = Matrix::from_i64_rows(&q, &[&[1, 1]]);
        let ki = row.kernel_and_image();
        assert_eq!(ki.kernel, Matrix::from_i64_rows(&q, &[&[-1], &[1]]));
        assert_eq!(ki.image.cols(), 1);
    }

    #[test]
    fn split_idempotent_examples() {
        let q = Rationals;
        let id = Matrix::identity(&q, 3);
        let s = id.split_idempotent().unwrap();
        assert_eq!((s.section.clone(), s.retraction.clone()), (id.clone(), id));
        let zero = Matrix::zeros(&q, 2, 2);
        assert_eq!(zero.split_idempotent().unwrap().section.cols(), 0);
        let e = Matrix::from_i64_rows(&q, &[&[1, 0], &[0, 0]]);
        let s = e.split_idempotent().unwrap();
        assert_eq!(s.section, Matrix::from_i64_rows(&q, &[&[1], &[0]]));
        let not = Matrix::from_i64_rows(&q, &[&[2]]);
        assert_eq!(not.split_idempotent(), Err(LinAlgError::NotIdempotent));
    }

    #[test]
    fn quotient_examples() {
        let q = Rationals;
        let amb = BasedSpace::indexed("e", 2);
        let none = quotient_by_span(&amb, &Matrix::zeros(&q, 2, 0));
        assert!(none.projection.is_identity());
        let all = quotient_by_span(&amb, &Matrix::identity(&q, 2));
        assert_eq!(all.space.dim(), 0);
        let one = quotient_by_span(&amb, &Matrix::from_i64_rows(&q, &[&[1], &[-1]]));
        assert_eq!(one.space.dim(), 1);
        assert!((&one.projection * &one.section).is_identity());
        assert!((&one.projection * &Matrix::from_i64_rows(&q, &[&[1], &[-1]])).is_zero());
    }

    #[test]
    fn solve_finds_particular_solution() {
        let q = Rationals;
        let a = Matrix::from_i64_rows(&q, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64_rows(&q, &[&[5], &[6]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(&a * &x, b);
        let sing = Matrix::from_i64_rows(&q, &[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&Matrix::from_i64_rows(&q, &[&[1], &[0]])).is_none());
    }
}
