//! Independent reference computations used by the integration tests.
//! Everything here works on raw entries with its own dense elimination.
#![allow(dead_code)]

use hopfkit::hopfcore::BraidedBialgebra;
use hopfkit::{Field, Matrix};

/// Dense Gaussian elimination; returns the unique solution of `a·x = b` or
/// `None` when the system is inconsistent or underdetermined.
pub fn solve_unique<K: Field>(field: &K, mut a: Vec<Vec<K::Elem>>, mut b: Vec<K::Elem>, unknowns: usize) -> Option<Vec<K::Elem>> {
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(p) = (row..a.len()).find(|&r| !field.is_zero(&a[r][col])) else { continue };
        a.swap(row, p);
        b.swap(row, p);
        let inv = field.inv(&a[row][col]).unwrap();
        for c in 0..unknowns {
            a[row][c] = field.mul(&a[row][c], &inv);
        }
        b[row] = field.mul(&b[row], &inv);
        for r in 0..a.len() {
            if r != row && !field.is_zero(&a[r][col]) {
                let factor = a[r][col].clone();
                for c in 0..unknowns {
                    let t = field.mul(&factor, &a[row][c]);
                    a[r][c] = field.sub(&a[r][c], &t);
                }
                let t = field.mul(&factor, &b[row]);
                b[r] = field.sub(&b[r], &t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    if (row..a.len()).any(|r| !field.is_zero(&b[r])) || pivots.len() < unknowns {
        return None;
    }
    let mut x = vec![field.zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = b[r].clone();
    }
    Some(x)
}

/// Solves `m(S⊗id)Δ = uε = m(id⊗S)Δ` for `S` entry by entry.
pub fn oracle_antipode<K: Field>(b: &BraidedBialgebra<K>) -> Option<Matrix<K>> {
    let f = b.field();
    let n = b.dim();
    let unknown = |i: usize, a: usize| i * n + a;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for left in [true, false] {
        for k in 0..n {
            for c in 0..n {
                let mut eq = vec![f.zero(); n * n];
                for a in 0..n {
                    for bb in 0..n {
                        let d = b.coalg.delta.get(a * n + bb, k);
                        if f.is_zero(&d) {
                            continue;
                        }
                        for i in 0..n {
                            let (col, var) = if left { (i * n + bb, unknown(i, a)) } else { (a * n + i, unknown(i, bb)) };
                            let coeff = f.mul(&d, &b.alg.m.get(c, col));
                            eq[var] = f.add(&eq[var], &coeff);
                        }
                    }
                }
                rows.push(eq);
                rhs.push(f.mul(&b.alg.u.get(c, 0), &b.coalg.eps.get(0, k)));
            }
        }
    }
    let x = solve_unique(f, rows, rhs, n * n)?;
    Some(Matrix::from_triplets(f, n, n, (0..n).flat_map(|i| (0..n).map(move |a| (i, a))).map(|(i, a)| (i, a, x[unknown(i, a)].clone()))))
}

/// Rank by dense elimination.
pub fn oracle_rank<K: Field>(m: &Matrix<K>) -> usize {
    let f = m.field();
    let mut a = m.to_dense();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !f.is_zero(&a[r][col])) else { continue };
        a.swap(rank, p);
        let inv = f.inv(&a[rank][col]).unwrap();
        for r in rank + 1..a.len() {
            let factor = f.mul(&a[r][col], &inv);
            for c in col..m.cols() {
                let t = f.mul(&factor, &a[rank][c]);
                a[r][c] = f.sub(&a[r][c], &t);
            }
        }
        rank += 1;
    }
    rank
}

/// Column vector of basis element `i`.
pub fn basis<K: Field>(field: &K, n: usize, i: usize) -> Matrix<K> {
    Matrix::from_triplets(field, n, 1, [(i, 0, field.one())])
}
