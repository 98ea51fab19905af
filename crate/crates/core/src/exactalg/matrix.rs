//! Sparse exact matrices with a row-major Kronecker convention.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use super::field::{Field, FieldSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: cannot compose {left_rows}x{left_cols} with {right_rows}x{right_cols}")]
    DimensionMismatch { left_rows: usize, left_cols: usize, right_rows: usize, right_cols: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
}

/// A linear map between based spaces, stored as zero-free sorted rows.
///
/// Column `j` is the image of the `j`-th domain basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, K::Elem)>>,
}

impl<K: Field> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} over {} [", self.rows, self.cols, self.field.spec())?;
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                write!(f, " ({i},{j})={}", self.field.render(v))?;
            }
        }
        write!(f, " ]")
    }
}

impl<K: Field> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|j| self.field.render(&self.get(i, j))).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Scratch accumulator for building one sparse row.
pub(crate) struct RowAccumulator<E> {
    values: Vec<Option<E>>,
    touched: Vec<usize>,
}

impl<E: Clone> RowAccumulator<E> {
    pub(crate) fn new(width: usize) -> Self {
        RowAccumulator { values: vec![None; width], touched: Vec::new() }
    }

    pub(crate) fn add<K: Field<Elem = E>>(&mut self, field: &K, col: usize, v: E) {
        match &mut self.values[col] {
            Some(existing) => *existing = field.add(existing, &v),
            slot @ None => {
                *slot = Some(v);
                self.touched.push(col);
            }
        }
    }

    pub(crate) fn drain<K: Field<Elem = E>>(&mut self, field: &K) -> Vec<(usize, E)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &c in &self.touched {
            if let Some(v) = self.values[c].take() {
                if !field.is_zero(&v) {
                    out.push((c, v));
                }
            }
        }
        self.touched.clear();
        out
    }
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, field.one())]).collect();
        Matrix { field: field.clone(), rows: n, cols: n, data }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions are summed.
    ///
    /// # Panics
    /// If a triplet lies outside `rows x cols`.
    pub fn from_triplets<I>(field: &K, rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, K::Elem)>,
    {
        let mut per_row: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); rows];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "triplet ({i},{j}) outside {rows}x{cols}");
            per_row[i].push((j, v));
        }
        let data = per_row.into_iter().map(|r| normalize_row(field, r)).collect();
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub(crate) fn from_sparse_rows(field: &K, cols: usize, data: Vec<Vec<(usize, K::Elem)>>) -> Self {
        Matrix { field: field.clone(), rows: data.len(), cols, data }
    }

    pub fn from_dense(field: &K, rows: usize, cols: usize, entries: &[K::Elem]) -> Self {
        assert_eq!(entries.len(), rows * cols, "dense entry count");
        Matrix::from_triplets(
            field,
            rows,
            cols,
            entries.iter().enumerate().map(|(k, v)| (k / cols.max(1), k % cols.max(1), v.clone())),
        )
    }

    /// Convenience constructor from integer rows.
    pub fn from_i64_rows(field: &K, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut trip = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged integer rows");
            for (j, &v) in r.iter().enumerate() {
                trip.push((i, j, field.from_i64(v)));
            }
        }
        Matrix::from_triplets(field, rows.len(), cols, trip)
    }

    /// Builds a matrix column by column: `image(j)` lists the coordinates of the image of `e_j`.
    pub fn from_columns<F>(field: &K, rows: usize, cols: usize, mut image: F) -> Self
    where
        F: FnMut(usize) -> Vec<(usize, K::Elem)>,
    {
        let mut trip = Vec::new();
        for j in 0..cols {
            for (i, v) in image(j) {
                trip.push((i, j, v));
            }
        }
        Matrix::from_triplets(field, rows, cols, trip)
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_column_vectors(field: &K, rows: usize, columns: &[Vec<K::Elem>]) -> Self {
        Matrix::from_columns(field, rows, columns.len(), |j| {
            columns[j].iter().enumerate().filter(|(_, v)| !field.is_zero(v)).map(|(i, v)| (i, v.clone())).collect()
        })
    }

    /// The map `e_j ↦ e_{targets[j]}`.
    pub fn permutation(field: &K, rows: usize, targets: &[usize]) -> Self {
        Matrix::from_triplets(field, rows, targets.len(), targets.iter().enumerate().map(|(j, &t)| (t, j, field.one())))
    }

    pub fn scalar(field: &K, v: K::Elem) -> Self {
        Matrix::from_triplets(field, 1, 1, [(0, 0, v)])
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn row(&self, i: usize) -> &[(usize, K::Elem)] {
        &self.data[i]
    }
    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> K::Elem {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// All nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &K::Elem)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && self.field.is_one(&r[0].1))
    }

    /// Column `j` as a dense vector.
    pub fn column(&self, j: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<K::Elem>> {
        let mut out = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    fn check_field(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch(self.field.spec(), other.field.spec()));
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Self) -> Result<Self, LinAlgError> {
        self.check_field(g)?;
        if self.cols != g.rows {
            return Err(LinAlgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: g.rows,
                right_cols: g.cols,
            });
        }
        Ok(self.mul_unchecked(g))
    }

    fn mul_unchecked(&self, g: &Self) -> Self {
        let field = &self.field;
        let mut acc = RowAccumulator::new(g.cols);
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &g.data[*k] {
                    acc.add(field, *j, field.mul(a, b));
                }
            }
            data.push(acc.drain(field));
        }
        Matrix { field: field.clone(), rows: self.rows, cols: g.cols, data }
    }

    /// Kronecker product: basis `(i, j)` of the product sits at `i·dim₂ + j`.
    pub fn kron(&self, g: &Self) -> Result<Self, LinAlgError> {
        self.check_field(g)?;
        let field = &self.field;
        let mut data = Vec::with_capacity(self.rows * g.rows);
        for ra in &self.data {
            for rb in &g.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * g.cols + jb, field.mul(a, b)));
                    }
                }
                data.push(row);
            }
        }
        Ok(Matrix { field: field.clone(), rows: self.rows * g.rows, cols: self.cols * g.cols, data })
    }

    /// Kronecker product of matrices known to share a field.
    ///
    /// # Panics
    /// On field mismatch.
    pub fn tensor(&self, g: &Self) -> Self {
        self.kron(g).expect("tensor: field mismatch")
    }

    pub fn transpose(&self) -> Self {
        let mut per_row: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                per_row[*j].push((i, v.clone()));
            }
        }
        Matrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data: per_row }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        if self.field.is_zero(c) {
            return Matrix::zeros(&self.field, self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, v)| (*j, self.field.mul(c, v))).collect()).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        assert!(self.field == other.field, "matrix sum field mismatch");
        let field = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut x, mut y) = (0, 0);
                while x < a.len() || y < b.len() {
                    let take_a = y >= b.len() || (x < a.len() && a[x].0 < b[y].0);
                    let take_b = x >= a.len() || (y < b.len() && b[y].0 < a[x].0);
                    if take_a {
                        out.push(a[x].clone());
                        x += 1;
                    } else if take_b {
                        let v = if sign { b[y].1.clone() } else { field.neg(&b[y].1) };
                        out.push((b[y].0, v));
                        y += 1;
                    } else {
                        let v = if sign { field.add(&a[x].1, &b[y].1) } else { field.sub(&a[x].1, &b[y].1) };
                        if !field.is_zero(&v) {
                            out.push((a[x].0, v));
                        }
                        x += 1;
                        y += 1;
                    }
                }
                out
            })
            .collect();
        Matrix { field: field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum `self ⊕ g`.
    pub fn direct_sum(&self, g: &Self) -> Self {
        let mut data = self.data.clone();
        for r in &g.data {
            data.push(r.iter().map(|(j, v)| (j + self.cols, v.clone())).collect());
        }
        Matrix { field: self.field.clone(), rows: self.rows + g.rows, cols: self.cols + g.cols, data }
    }

    /// `[self | g]`.
    pub fn hstack(&self, g: &Self) -> Self {
        assert_eq!(self.rows, g.rows, "hstack row mismatch");
        let data = self
            .data
            .iter()
            .zip(&g.data)
            .map(|(a, b)| a.iter().cloned().chain(b.iter().map(|(j, v)| (j + self.cols, v.clone()))).collect())
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols + g.cols, data }
    }

    /// `[self; g]`.
    pub fn vstack(&self, g: &Self) -> Self {
        assert_eq!(self.cols, g.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(g.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + g.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut position = vec![None; self.cols];
        for (new, &old) in cols.iter().enumerate() {
            position[old] = Some(new);
        }
        let trip = self.entries().filter_map(|(i, j, v)| position[j].map(|n| (i, n, v.clone()))).collect::<Vec<_>>();
        Matrix::from_triplets(&self.field, self.rows, cols.len(), trip)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows.iter().map(|&i| self.data[i].clone()).collect();
        Matrix { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    /// Applies the map to a dense vector.
    pub fn apply(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(v.len(), self.cols, "vector length");
        self.data
            .iter()
            .map(|r| r.iter().fold(self.field.zero(), |acc, (j, a)| self.field.add(&acc, &self.field.mul(a, &v[*j]))))
            .collect()
    }

    /// The first position (ordered by column, then row) where two equally shaped
    /// matrices differ; `None` when they are equal.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        let diff = self.combine(other, false);
        diff.entries().map(|(i, j, _)| (j, i)).min().map(|(j, i)| (i, j))
    }

    /// `sum_j self[i,j]` style trace for square matrices.
    pub fn trace(&self) -> K::Elem {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| self.field.add(&acc, &self.get(i, i)))
    }
}

pub(crate) fn normalize_row<K: Field>(field: &K, mut row: Vec<(usize, K::Elem)>) -> Vec<(usize, K::Elem)> {
    row.sort_by_key(|(j, _)| *j);
    let mut out: Vec<(usize, K::Elem)> = Vec::with_capacity(row.len());
    for (j, v) in row {
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv = field.add(lv, &v),
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    out
}

impl<K: Field> Mul for &Matrix<K> {
    type Output = Matrix<K>;

    /// Composition `self ∘ rhs`.
    ///
    /// # Panics
    /// On dimension or field mismatch; use [`Matrix::compose`] for a checked version.
    fn mul(self, rhs: &Matrix<K>) -> Matrix<K> {
        match self.compose(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl<K: Field> Add for &Matrix<K> {
    type Output = Matrix<K>;
    fn add(self, rhs: &Matrix<K>) -> Matrix<K> {
        self.combine(rhs, true)
    }
}

impl<K: Field> Sub for &Matrix<K> {
    type Output = Matrix<K>;
    fn sub(self, rhs: &Matrix<K>) -> Matrix<K> {
        self.combine(rhs, false)
    }
}

impl<K: Field> Neg for &Matrix<K> {
    type Output = Matrix<K>;
    fn neg(self) -> Matrix<K> {
        self.scale(&self.field.from_i64(-1))
    }
}

/// Composes a chain of maps written left to right as in `f ∘ g ∘ h`.
pub fn chain<K: Field>(maps: &[&Matrix<K>]) -> Matrix<K> {
    let (last, rest) = maps.split_last().expect("chain of at least one map");
    rest.iter().rev().fold((*last).clone(), |acc, m| *m * &acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{PrimeField, Rationals};

    #[test]
    fn composition_examples() {
        let q = Rationals;
        let id2 = Matrix::identity(&q, 2);
        assert_eq!(id2.compose(&id2).unwrap(), id2);
        let swap = Matrix::from_i64_rows(&q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.compose(&swap).unwrap(), id2);
        let f5 = PrimeField::new(5).unwrap();
        let two = Matrix::from_i64_rows(&f5, &[&[2]]);
        let three = Matrix::from_i64_rows(&f5, &[&[3]]);
        assert_eq!(two.compose(&three).unwrap(), Matrix::identity(&f5, 1));
    }

    #[test]
    fn compose_reports_dimension_and_field_mismatch() {
        let q = Rationals;
        let a = Matrix::zeros(&q, 2, 3);
        assert!(matches!(a.compose(&a), Err(LinAlgError::DimensionMismatch { .. })));
        let f5 = PrimeField::new(5).unwrap();
        let f7 = PrimeField::new(7).unwrap();
        let b = Matrix::identity(&f5, 1);
        let c = Matrix::identity(&f7, 1);
        assert!(matches!(b.compose(&c), Err(LinAlgError::FieldMismatch(..))));
        assert!(matches!(b.kron(&c), Err(LinAlgError::FieldMismatch(..))));
    }

    #[test]
    fn kron_examples() {
        let q = Rationals;
        assert_eq!(Matrix::identity(&q, 2).tensor(&Matrix::identity(&q, 3)), Matrix::identity(&q, 6));
        let two = Matrix::from_i64_rows(&q, &[&[2]]);
        let three = Matrix::from_i64_rows(&q, &[&[3]]);
        assert_eq!(two.tensor(&three), Matrix::from_i64_rows(&q, &[&[6]]));
        let swap = Matrix::from_i64_rows(&q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.tensor(&Matrix::identity(&q, 1)), swap);
    }

    #[test]
    fn kron_index_convention_is_row_major() {
        let q = Rationals;
        // e_1 ⊗ e_0 in 2 ⊗ 3 sits at index 3.
        let e1 = Matrix::from_i64_rows(&q, &[&[0], &[1]]);
        let e0 = Matrix::from_i64_rows(&q, &[&[1], &[0], &[0]]);
        let t = e1.tensor(&e0);
        assert_eq!(t.column(0).iter().position(|v| *v == q.one()), Some(3));
    }

    #[test]
    fn first_difference_orders_by_column() {
        let q = Rationals;
        let a = Matrix::from_i64_rows(&q, &[&[1, 0], &[0, 1]]);
        let b = Matrix::from_i64_rows(&q, &[&[1, 0], &[5, 2]]);
        assert_eq!(a.first_difference(&b), Some((1, 0)));
        assert_eq!(a.first_difference(&a), None);
    }
}
