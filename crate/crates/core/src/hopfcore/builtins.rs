//! Built-in bialgebras and constructions producing new ones.

use std::sync::Arc;

use super::object::ObjData;
use super::structures::{
    AlgebraData, Bicharacter, BraidedBialgebra, BraidingContext, CoalgebraData, HopfAlgebraData, HopfError,
};
use crate::exactalg::{permute_factors, BasedSpace, Field, Matrix};

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 8] =
    ["kZ2", "kZ3", "kS3", "monoid", "sweedler", "taft3", "super-line", "nichols-line"];

/// Looks up a built-in bialgebra by name.
pub fn builtin<K: Field>(field: &K, name: &str) -> Result<BraidedBialgebra<K>, HopfError> {
    match name {
        "kZ2" => Ok(cyclic_group_algebra(field, 2)),
        "kZ3" => Ok(cyclic_group_algebra(field, 3)),
        "kS3" => Ok(symmetric_group_algebra_s3(field)),
        "monoid" => Ok(idempotent_monoid_bialgebra(field)),
        "sweedler" => sweedler(field),
        "taft3" => {
            let zeta = primitive_root_of_unity(field, 3)
                .ok_or_else(|| HopfError::UnsupportedField(format!("{} has no primitive cube root of unity", field.spec())))?;
            taft(field, 3, &zeta)
        }
        "super-line" => super_line(field),
        "nichols-line" => nichols_line_over_kz2(field),
        other => Err(HopfError::InvalidContext(format!("unknown built-in {other:?}"))),
    }
}

/// Smallest `ζ ∈ {2, 3, …}` (or `−1` for `n = 2`) of exact multiplicative order `n`.
pub fn primitive_root_of_unity<K: Field>(field: &K, n: u64) -> Option<K::Elem> {
    if n == 1 {
        return Some(field.one());
    }
    let has_order_n = |z: &K::Elem| {
        field.is_one(&field.pow(z, n)) && (1..n).filter(|d| n % d == 0).all(|d| !field.is_one(&field.pow(z, d)))
    };
    let minus_one = field.from_i64(-1);
    if n == 2 && has_order_n(&minus_one) {
        return Some(minus_one);
    }
    let p = field.characteristic();
    if p == 0 {
        return None;
    }
    (2..p as i64).map(|k| field.from_i64(k)).find(|z| has_order_n(z))
}

fn basis_vector<K: Field>(field: &K, n: usize, i: usize) -> Matrix<K> {
    Matrix::from_triplets(field, n, 1, [(i, 0, field.one())])
}

/// Bialgebra of a finite monoid given by its multiplication table
/// (element 0 must be the identity); every element is group-like.
pub fn monoid_bialgebra<K: Field>(field: &K, labels: &[&str], table: &[Vec<usize>]) -> BraidedBialgebra<K> {
    let n = labels.len();
    let space = BasedSpace::new(labels.iter().copied()).expect("distinct labels");
    let m = Matrix::from_triplets(
        field,
        n,
        n * n,
        (0..n).flat_map(|a| (0..n).map(move |b| (table[a][b], a * n + b, field.one()))),
    );
    let u = basis_vector(field, n, 0);
    let delta = Matrix::from_triplets(field, n * n, n, (0..n).map(|a| (a * n + a, a, field.one())));
    let eps = Matrix::from_triplets(field, 1, n, (0..n).map(|a| (0, a, field.one())));
    let alg = AlgebraData::new(space.clone(), m, u).expect("shapes");
    let coalg = CoalgebraData::new(space, delta, eps).expect("shapes");
    BraidedBialgebra::ordinary(alg, coalg).expect("ordinary context")
}

/// `kℤ/n` with basis `1, g, g2, …`.
pub fn cyclic_group_algebra<K: Field>(field: &K, n: usize) -> BraidedBialgebra<K> {
    let g = power_label("g");
    let labels: Vec<String> = (0..n).map(|k| if k == 0 { "1".into() } else { g(k) }).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    monoid_bialgebra(field, &refs, &table)
}

fn power_label(base: &'static str) -> impl Fn(usize) -> String {
    move |k| match k {
        0 => String::new(),
        1 => base.to_string(),
        k => format!("{base}{k}"),
    }
}

/// Group algebra of `S₃`, elements as permutations in one-line notation.
pub fn symmetric_group_algebra_s3<K: Field>(field: &K) -> BraidedBialgebra<K> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let labels = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed under composition");
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
        .collect();
    monoid_bialgebra(field, &labels, &table)
}

/// The monoid `{1, a}` with `a² = a`: a bialgebra without antipode.
pub fn idempotent_monoid_bialgebra<K: Field>(field: &K) -> BraidedBialgebra<K> {
    monoid_bialgebra(field, &["1", "a"], &[vec![0, 1], vec![1, 1]])
}

/// Product in the tensor-square algebra `A⊗A` (ordinary flip).
fn square_product<K: Field>(alg: &AlgebraData<K>, x: &Matrix<K>, y: &Matrix<K>) -> Matrix<K> {
    let f = alg.field();
    let n = alg.dim();
    let shuffle = permute_factors(f, &[n, n, n, n], &[0, 2, 1, 3]);
    &alg.m.tensor(&alg.m) * &(&shuffle * &x.tensor(y))
}

/// Taft algebra `T_n(ζ)`: `gⁿ = 1`, `xⁿ = 0`, `xg = ζgx`, `Δg = g⊗g`,
/// `Δx = x⊗1 + g⊗x`. Basis `gⁱxʲ` at index `i + n·j`.
pub fn taft<K: Field>(field: &K, n: usize, zeta: &K::Elem) -> Result<BraidedBialgebra<K>, HopfError> {
    let order_ok = field.is_one(&field.pow(zeta, n as u64))
        && (1..n).filter(|d| n % d == 0).all(|d| !field.is_one(&field.pow(zeta, d as u64)));
    if n < 2 || !order_ok {
        return Err(HopfError::UnsupportedField(format!("{} is not a primitive {n}-th root of unity", field.render(zeta))));
    }
    let dim = n * n;
    let g_label = power_label("g");
    let x_label = power_label("x");
    let labels: Vec<String> = (0..dim)
        .map(|k| {
            let (i, j) = (k % n, k / n);
            let s = format!("{}{}", g_label(i), x_label(j));
            if s.is_empty() {
                "1".into()
            } else {
                s
            }
        })
        .collect();
    let space = BasedSpace::new(labels).expect("distinct labels");
    let mut trip = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            let (i, j, k, l) = (a % n, a / n, b % n, b / n);
            if j + l < n {
                let coeff = field.pow(zeta, (j * k) as u64);
                trip.push((((i + k) % n) + n * (j + l), a * dim + b, coeff));
            }
        }
    }
    let m = Matrix::from_triplets(field, dim, dim * dim, trip);
    let u = basis_vector(field, dim, 0);
    let alg = AlgebraData::new(space.clone(), m, u).expect("shapes");

    let e = |k: usize| basis_vector(field, dim, k);
    let dg = e(1).tensor(&e(1));
    let dx = &e(n).tensor(&e(0)) + &e(1).tensor(&e(n));
    let mut columns = Vec::with_capacity(dim);
    for k in 0..dim {
        let (i, j) = (k % n, k / n);
        let mut acc = e(0).tensor(&e(0));
        for _ in 0..i {
            acc = square_product(&alg, &acc, &dg);
        }
        for _ in 0..j {
            acc = square_product(&alg, &acc, &dx);
        }
        columns.push(acc.column(0));
    }
    let delta = Matrix::from_column_vectors(field, dim * dim, &columns);
    let eps = Matrix::from_triplets(field, 1, dim, (0..n).map(|i| (0, i, field.one())));
    let coalg = CoalgebraData::new(space, delta, eps).expect("shapes");
    BraidedBialgebra::ordinary(alg, coalg)
}

/// Sweedler's four-dimensional Hopf algebra `T₂(−1)`.
pub fn sweedler<K: Field>(field: &K) -> Result<BraidedBialgebra<K>, HopfError> {
    if field.characteristic() == 2 {
        return Err(HopfError::UnsupportedField("Sweedler's algebra needs characteristic ≠ 2".into()));
    }
    taft(field, 2, &field.from_i64(-1))
}

/// `k[θ]/(θ²)` with `θ` odd and primitive, in super vector spaces.
pub fn super_line<K: Field>(field: &K) -> Result<BraidedBialgebra<K>, HopfError> {
    let (alg, coalg) = primitive_line(field, "θ");
    BraidedBialgebra::new(
        alg,
        coalg,
        BraidingContext::GradedBicharacter(Bicharacter::super_sign(field)),
        ObjData::Graded(vec![vec![0], vec![1]]),
    )
}

/// `k[x]/(x²)` with `x` primitive: the algebra and coalgebra parts.
fn primitive_line<K: Field>(field: &K, var: &str) -> (AlgebraData<K>, CoalgebraData<K>) {
    let space = BasedSpace::new(["1", var]).expect("distinct labels");
    let one = field.one();
    let m = Matrix::from_triplets(field, 2, 4, [(0, 0, one.clone()), (1, 1, one.clone()), (1, 2, one.clone())]);
    let u = basis_vector(field, 2, 0);
    let delta = Matrix::from_triplets(field, 4, 2, [(0, 0, one.clone()), (2, 1, one.clone()), (1, 1, one.clone())]);
    let eps = Matrix::from_triplets(field, 1, 2, [(0, 0, one)]);
    (AlgebraData::new(space.clone(), m, u).expect("shapes"), CoalgebraData::new(space, delta, eps).expect("shapes"))
}

/// The ordinary group Hopf algebra `kℤ/2`.
pub fn kz2_hopf<K: Field>(field: &K) -> HopfAlgebraData<K> {
    HopfAlgebraData::from_bialgebra(cyclic_group_algebra(field, 2)).expect("group algebras have antipodes")
}

/// `k[x]/(x²)` in Yetter–Drinfeld modules over `kℤ/2`: `g·x = −x`, `δx = g⊗x`,
/// `x` primitive. Its bosonization is Sweedler's algebra.
pub fn nichols_line_over_kz2<K: Field>(field: &K) -> Result<BraidedBialgebra<K>, HopfError> {
    let h = kz2_hopf(field);
    let (alg, coalg) = primitive_line(field, "x");
    let one = field.one();
    // H⊗A index = h·2 + a
    let action = Matrix::from_triplets(
        field,
        2,
        4,
        [(0, 0, one.clone()), (1, 1, one.clone()), (0, 2, one.clone()), (1, 3, field.from_i64(-1))],
    );
    let coaction = Matrix::from_triplets(field, 4, 2, [(0, 0, one.clone()), (3, 1, one)]);
    BraidedBialgebra::new(
        alg,
        coalg,
        BraidingContext::YetterDrinfeld(Arc::new(h)),
        ObjData::YetterDrinfeld { action: Arc::new(action), coaction: Arc::new(coaction) },
    )
}

/// Tensor product of two ordinary bialgebras.
pub fn tensor_bialgebra<K: Field>(a: &BraidedBialgebra<K>, b: &BraidedBialgebra<K>) -> Result<BraidedBialgebra<K>, HopfError> {
    if a.ctx != BraidingContext::Trivial || b.ctx != BraidingContext::Trivial {
        return Err(HopfError::InvalidContext("tensor products are built for ordinary bialgebras only".into()));
    }
    let f = a.field();
    let (p, q) = (a.dim(), b.dim());
    let middle = permute_factors(f, &[p, q, p, q], &[0, 2, 1, 3]);
    let back = permute_factors(f, &[p, p, q, q], &[0, 2, 1, 3]);
    let m = &a.alg.m.tensor(&b.alg.m) * &middle;
    let u = a.alg.u.tensor(&b.alg.u);
    let delta = &back * &a.coalg.delta.tensor(&b.coalg.delta);
    let eps = a.coalg.eps.tensor(&b.coalg.eps);
    let space = a.space().tensor(b.space());
    BraidedBialgebra::ordinary(AlgebraData::new(space.clone(), m, u)?, CoalgebraData::new(space, delta, eps)?)
}

/// Transport of an ordinary bialgebra along the basis change `P` (new
/// coordinates `P·v`); the result has basis labels `b0, b1, …`.
pub fn transport<K: Field>(b: &BraidedBialgebra<K>, p: &Matrix<K>, p_inv: &Matrix<K>) -> Result<BraidedBialgebra<K>, HopfError> {
    if b.ctx != BraidingContext::Trivial {
        return Err(HopfError::InvalidContext("transport is defined for ordinary bialgebras only".into()));
    }
    let m = p * &(&b.alg.m * &p_inv.tensor(p_inv));
    let u = p * &b.alg.u;
    let delta = &p.tensor(p) * &(&b.coalg.delta * p_inv);
    let eps = &b.coalg.eps * p_inv;
    let space = BasedSpace::indexed("b", b.dim());
    BraidedBialgebra::ordinary(AlgebraData::new(space.clone(), m, u)?, CoalgebraData::new(space, delta, eps)?)
}

/// Replaces one structure constant: `Δ`, `ε`, `m` or `u` entry `(row, col)`.
pub fn mutate_entry<K: Field>(
    b: &BraidedBialgebra<K>,
    map: &str,
    row: usize,
    col: usize,
    value: K::Elem,
) -> Result<BraidedBialgebra<K>, HopfError> {
    let mut out = b.clone();
    let target = match map {
        "m" => &mut out.alg.m,
        "u" => &mut out.alg.u,
        "delta" => &mut out.coalg.delta,
        "eps" => &mut out.coalg.eps,
        other => return Err(HopfError::Shape(format!("unknown structure map {other:?}"))),
    };
    if row >= target.rows() || col >= target.cols() {
        return Err(HopfError::Shape(format!("entry ({row},{col}) outside a {}x{} matrix", target.rows(), target.cols())));
    }
    let f = target.field().clone();
    let delta = f.sub(&value, &target.get(row, col));
    *target = &*target + &Matrix::from_triplets(&f, target.rows(), target.cols(), [(row, col, delta)]);
    Ok(out)
}
