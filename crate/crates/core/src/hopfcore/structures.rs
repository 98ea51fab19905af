//! Algebras, coalgebras, braiding contexts and (braided) bialgebras given by
//! structure constants.

use std::sync::Arc;

use thiserror::Error;

use super::object::{Degree, Obj, ObjData};
use crate::exactalg::{flip, homogeneous_solutions, id, permute_factors, BasedSpace, Field, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("missing object data: {0}")]
    MissingObjectData(String),
    #[error("the braiding τ_(A,A) is not invertible")]
    BraidingNotInvertible,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no antipode: fusion operator has rank {rank} of {size}")]
    NoAntipode { rank: usize, size: usize },
    #[error("invalid braiding context: {0}")]
    InvalidContext(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
}

fn expect_shape<K: Field>(what: &str, m: &Matrix<K>, rows: usize, cols: usize) -> Result<(), HopfError> {
    if m.shape() != (rows, cols) {
        return Err(HopfError::Shape(format!("{what} is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(())
}

/// Label of basis vector `j` of the `k`-th tensor power of `space`.
pub fn tensor_power_label(space: &BasedSpace, k: usize, j: usize) -> String {
    if k == 0 {
        return "1".into();
    }
    let dims = vec![space.dim(); k];
    crate::exactalg::multi_index(&dims, j).iter().map(|&i| space.label(i).to_string()).collect::<Vec<_>>().join("⊗")
}

/// An associative unital algebra: `m: A⊗A → A`, `u: k → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData<K: Field> {
    pub space: BasedSpace,
    pub m: Matrix<K>,
    pub u: Matrix<K>,
}

impl<K: Field> AlgebraData<K> {
    pub fn new(space: BasedSpace, m: Matrix<K>, u: Matrix<K>) -> Result<Self, HopfError> {
        let n = space.dim();
        expect_shape("multiplication", &m, n, n * n)?;
        expect_shape("unit", &u, n, 1)?;
        Ok(AlgebraData { space, m, u })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> &K {
        self.m.field()
    }

    /// Associativity and unitality.
    pub fn check(&self) -> crate::report::CheckReport {
        let f = self.field();
        let n = self.dim();
        let i = id(f, n);
        let mut r = crate::report::CheckReport::new();
        let lbl = |k: usize| move |j: usize| tensor_power_label(&self.space, k, j);
        r.equal("associativity", &(&self.m * &self.m.tensor(&i)), &(&self.m * &i.tensor(&self.m)), lbl(3));
        r.equal("left unit", &(&self.m * &self.u.tensor(&i)), &i, lbl(1));
        r.equal("right unit", &(&self.m * &i.tensor(&self.u)), &i, lbl(1));
        r
    }

    /// Product of two elements given as column vectors.
    pub fn product(&self, a: &Matrix<K>, b: &Matrix<K>) -> Matrix<K> {
        &self.m * &a.tensor(b)
    }

    /// Left multiplication by the element `a` (a column vector).
    pub fn left_mult(&self, a: &Matrix<K>) -> Matrix<K> {
        &self.m * &a.tensor(&id(self.field(), self.dim()))
    }

    /// Right multiplication by the element `a`.
    pub fn right_mult(&self, a: &Matrix<K>) -> Matrix<K> {
        &self.m * &id(self.field(), self.dim()).tensor(a)
    }

    /// Basis vector `i` as a column.
    pub fn basis(&self, i: usize) -> Matrix<K> {
        Matrix::from_triplets(self.field(), self.dim(), 1, [(i, 0, self.field().one())])
    }
}

/// A coassociative counital coalgebra: `Δ: C → C⊗C`, `ε: C → k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData<K: Field> {
    pub space: BasedSpace,
    pub delta: Matrix<K>,
    pub eps: Matrix<K>,
}

impl<K: Field> CoalgebraData<K> {
    pub fn new(space: BasedSpace, delta: Matrix<K>, eps: Matrix<K>) -> Result<Self, HopfError> {
        let n = space.dim();
        expect_shape("coproduct", &delta, n * n, n)?;
        expect_shape("counit", &eps, 1, n)?;
        Ok(CoalgebraData { space, delta, eps })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> &K {
        self.delta.field()
    }

    /// Coassociativity and counitality.
    pub fn check(&self) -> crate::report::CheckReport {
        let f = self.field();
        let i = id(f, self.dim());
        let mut r = crate::report::CheckReport::new();
        let lbl = |j: usize| self.space.label(j).to_string();
        r.equal("coassociativity", &(&self.delta.tensor(&i) * &self.delta), &(&i.tensor(&self.delta) * &self.delta), lbl);
        r.equal("left counit", &(&self.eps.tensor(&i) * &self.delta), &i, lbl);
        r.equal("right counit", &(&i.tensor(&self.eps) * &self.delta), &i, lbl);
        r
    }
}

/// A bicharacter on `ℤ/n₁ × … × ℤ/n_r` (an order of 0 means a free factor ℤ),
/// determined by its values on pairs of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter<K: Field> {
    pub orders: Vec<u64>,
    pub values: Vec<Vec<K::Elem>>,
}

impl<K: Field> Bicharacter<K> {
    /// The super sign rule on ℤ/2: `χ(1,1) = −1`.
    pub fn super_sign(field: &K) -> Self {
        Bicharacter { orders: vec![2], values: vec![vec![field.from_i64(-1)]] }
    }

    /// The trivial bicharacter on a group with the given cyclic orders.
    pub fn trivial(field: &K, orders: Vec<u64>) -> Self {
        let r = orders.len();
        Bicharacter { orders, values: vec![vec![field.one(); r]; r] }
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn reduce(&self, d: &[i64]) -> Degree {
        d.iter().zip(&self.orders).map(|(x, &n)| if n == 0 { *x } else { x.rem_euclid(n as i64) }).collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Degree {
        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&s)
    }

    pub fn eval(&self, field: &K, g: &[i64], h: &[i64]) -> K::Elem {
        let mut acc = field.one();
        for (i, gi) in g.iter().enumerate() {
            for (j, hj) in h.iter().enumerate() {
                let v = field.pow_signed(&self.values[i][j], gi * hj).expect("bicharacter values are units");
                acc = field.mul(&acc, &v);
            }
        }
        acc
    }

    /// Values must be units with `χ(eᵢ,eⱼ)^{nᵢ} = 1 = χ(eᵢ,eⱼ)^{nⱼ}` for finite orders.
    pub fn validate(&self, field: &K) -> Result<(), HopfError> {
        let r = self.rank();
        if self.values.len() != r || self.values.iter().any(|row| row.len() != r) {
            return Err(HopfError::InvalidContext("bicharacter table must be square in the number of generators".into()));
        }
        for i in 0..r {
            for j in 0..r {
                let v = &self.values[i][j];
                if field.is_zero(v) {
                    return Err(HopfError::InvalidContext(format!("χ(e{i},e{j}) is zero")));
                }
                for n in [self.orders[i], self.orders[j]] {
                    if n > 0 && !field.is_one(&field.pow(v, n)) {
                        return Err(HopfError::InvalidContext(format!("χ(e{i},e{j}) is not an {n}-th root of unity")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Where a bialgebra lives: plain vector spaces with the flip, group-graded
/// spaces with a bicharacter braiding, or Yetter–Drinfeld modules over an
/// ordinary Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidingContext<K: Field> {
    Trivial,
    GradedBicharacter(Bicharacter<K>),
    YetterDrinfeld(Arc<HopfAlgebraData<K>>),
}

impl<K: Field> BraidingContext<K> {
    pub fn validate(&self, field: &K) -> Result<(), HopfError> {
        match self {
            BraidingContext::Trivial => Ok(()),
            BraidingContext::GradedBicharacter(chi) => chi.validate(field),
            BraidingContext::YetterDrinfeld(h) => {
                if h.bialg.ctx != BraidingContext::Trivial {
                    return Err(HopfError::InvalidContext("Yetter–Drinfeld base must be an ordinary Hopf algebra".into()));
                }
                h.verify().map_err(|e| HopfError::InvalidContext(format!("base Hopf algebra: {e}")))
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            BraidingContext::Trivial => "trivial",
            BraidingContext::GradedBicharacter(_) => "graded-bicharacter",
            BraidingContext::YetterDrinfeld(_) => "yetter-drinfeld",
        }
    }

    /// The unit object `k` with its canonical extra structure.
    pub fn unit_object(&self) -> Obj<K> {
        match self {
            BraidingContext::Trivial => Obj::plain(1),
            BraidingContext::GradedBicharacter(chi) => Obj::graded(vec![vec![0; chi.rank()]]).named("k"),
            BraidingContext::YetterDrinfeld(h) => {
                Obj::yetter_drinfeld(h.bialg.coalg.eps.clone(), h.bialg.alg.u.clone()).named("k")
            }
        }
    }

    /// Tensor product of objects in this context.
    pub fn tensor_objects(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Obj<K>, HopfError> {
        let name = format!("{}⊗{}", x.name, y.name);
        match self {
            BraidingContext::Trivial => Ok(Obj::plain(x.dim * y.dim).named(name)),
            BraidingContext::GradedBicharacter(chi) => {
                let (dx, dy) = (graded(x)?, graded(y)?);
                let degrees = dx.iter().flat_map(|a| dy.iter().map(move |b| chi.add(a, b))).collect();
                Ok(Obj::graded(degrees).named(name))
            }
            BraidingContext::YetterDrinfeld(h) => {
                let action = tensor_action(h, action_of(x)?, action_of(y)?, x.dim, y.dim);
                match (x.coaction(), y.coaction()) {
                    (Some(cx), Some(cy)) => {
                        Ok(Obj::yetter_drinfeld(action, tensor_coaction(h, cx, cy, x.dim, y.dim)).named(name))
                    }
                    _ => Ok(Obj::module(action).named(name)),
                }
            }
        }
    }

    /// The braiding `τ_{X,Y}: X⊗Y → Y⊗X` of the context.
    pub fn braiding(&self, x: &Obj<K>, y: &Obj<K>, field: &K) -> Result<Matrix<K>, HopfError> {
        match self {
            BraidingContext::Trivial => Ok(flip(field, x.dim, y.dim)),
            BraidingContext::GradedBicharacter(chi) => {
                let (dx, dy) = (graded(x)?, graded(y)?);
                let (n, m) = (x.dim, y.dim);
                let mut trip = Vec::with_capacity(n * m);
                for i in 0..n {
                    for j in 0..m {
                        trip.push((j * n + i, i * m + j, chi.eval(field, &dx[i], &dy[j])));
                    }
                }
                Ok(Matrix::from_triplets(field, n * m, n * m, trip))
            }
            BraidingContext::YetterDrinfeld(h) => {
                let coaction = x.coaction().ok_or_else(|| {
                    HopfError::MissingObjectData(format!("{} has no coaction for the Yetter–Drinfeld braiding", x.name))
                })?;
                let action = action_of(y)?;
                let hd = h.dim();
                // v⊗w ↦ v₍₋₁₎⊗v₍₀₎⊗w ↦ v₍₋₁₎⊗w⊗v₍₀₎ ↦ v₍₋₁₎·w⊗v₍₀₎
                let step1 = coaction.tensor(&id(field, y.dim));
                let step2 = permute_factors(field, &[hd, x.dim, y.dim], &[0, 2, 1]);
                let step3 = action.tensor(&id(field, x.dim));
                Ok(&step3 * &(&step2 * &step1))
            }
        }
    }

    /// `None` if `f: X → Y` is a morphism of the context, else a description
    /// of the first violation.
    pub fn morphism_violation(&self, f: &Matrix<K>, x: &Obj<K>, y: &Obj<K>) -> Option<String> {
        match self {
            BraidingContext::Trivial => None,
            BraidingContext::GradedBicharacter(_) => match (x.degrees(), y.degrees()) {
                (Some(dx), Some(dy)) => {
                    f.entries().find(|(i, j, _)| dx[*j] != dy[*i]).map(|(i, j, _)| format!("entry ({i},{j}) changes degree"))
                }
                _ => Some("objects are not graded".into()),
            },
            BraidingContext::YetterDrinfeld(h) => {
                let field = f.field();
                if let (Some(ax), Some(ay)) = (x.action(), y.action()) {
                    let lhs = f * ax;
                    let rhs = ay * &id(field, h.dim()).tensor(f);
                    if let Some((_, c)) = lhs.first_difference(&rhs) {
                        return Some(format!("not H-linear at basis index {c} of H⊗X"));
                    }
                }
                if let (Some(cx), Some(cy)) = (x.coaction(), y.coaction()) {
                    let lhs = cy * f;
                    let rhs = &id(field, h.dim()).tensor(f) * cx;
                    if let Some((_, c)) = lhs.first_difference(&rhs) {
                        return Some(format!("not H-colinear at basis index {c}"));
                    }
                }
                None
            }
        }
    }

    /// A basis of the morphisms `X → Y` (a generating set for naturality checks).
    pub fn hom_basis(&self, x: &Obj<K>, y: &Obj<K>, field: &K) -> Vec<Matrix<K>> {
        let elementary = |i: usize, j: usize| Matrix::from_triplets(field, y.dim, x.dim, [(i, j, field.one())]);
        match self {
            BraidingContext::Trivial => {
                (0..y.dim).flat_map(|i| (0..x.dim).map(move |j| (i, j))).map(|(i, j)| elementary(i, j)).collect()
            }
            BraidingContext::GradedBicharacter(_) => match (x.degrees(), y.degrees()) {
                (Some(dx), Some(dy)) => (0..y.dim)
                    .flat_map(|i| (0..x.dim).map(move |j| (i, j)))
                    .filter(|(i, j)| dy[*i] == dx[*j])
                    .map(|(i, j)| elementary(i, j))
                    .collect(),
                _ => Vec::new(),
            },
            BraidingContext::YetterDrinfeld(h) => {
                let hd = h.dim();
                homogeneous_solutions(field, y.dim, x.dim, |f| {
                    let mut eqs = Vec::new();
                    if let (Some(ax), Some(ay)) = (x.action(), y.action()) {
                        eqs.push(&(f * ax) - &(ay * &id(field, hd).tensor(f)));
                    }
                    if let (Some(cx), Some(cy)) = (x.coaction(), y.coaction()) {
                        eqs.push(&(cy * f) - &(&id(field, hd).tensor(f) * cx));
                    }
                    eqs
                })
            }
        }
    }
}

fn graded<K: Field>(x: &Obj<K>) -> Result<&[Degree], HopfError> {
    x.degrees().ok_or_else(|| HopfError::MissingObjectData(format!("{} carries no grading", x.name)))
}

fn action_of<K: Field>(x: &Obj<K>) -> Result<&Matrix<K>, HopfError> {
    x.action().ok_or_else(|| HopfError::MissingObjectData(format!("{} carries no H-action", x.name)))
}

/// Diagonal action `h·(x⊗y) = h₍₁₎x ⊗ h₍₂₎y`.
pub fn tensor_action<K: Field>(h: &HopfAlgebraData<K>, ax: &Matrix<K>, ay: &Matrix<K>, nx: usize, ny: usize) -> Matrix<K> {
    let field = ax.field();
    let hd = h.dim();
    let split = h.bialg.coalg.delta.tensor(&id(field, nx * ny));
    let arrange = permute_factors(field, &[hd, hd, nx, ny], &[0, 2, 1, 3]);
    &ax.tensor(ay) * &(&arrange * &split)
}

/// Codiagonal coaction `x⊗y ↦ x₍₋₁₎y₍₋₁₎ ⊗ x₍₀₎⊗y₍₀₎`.
pub fn tensor_coaction<K: Field>(h: &HopfAlgebraData<K>, cx: &Matrix<K>, cy: &Matrix<K>, nx: usize, ny: usize) -> Matrix<K> {
    let field = cx.field();
    let hd = h.dim();
    let arrange = permute_factors(field, &[hd, nx, hd, ny], &[0, 2, 1, 3]);
    &h.bialg.alg.m.tensor(&id(field, nx * ny)) * &(&arrange * &cx.tensor(cy))
}

/// A bialgebra in a (lax) braided category, given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedBialgebra<K: Field> {
    pub alg: AlgebraData<K>,
    pub coalg: CoalgebraData<K>,
    pub ctx: BraidingContext<K>,
    /// Extra structure of the underlying object (grading or YD data).
    pub data: ObjData<K>,
}

impl<K: Field> BraidedBialgebra<K> {
    pub fn new(
        alg: AlgebraData<K>,
        coalg: CoalgebraData<K>,
        ctx: BraidingContext<K>,
        data: ObjData<K>,
    ) -> Result<Self, HopfError> {
        if alg.space != coalg.space {
            return Err(HopfError::Shape("algebra and coalgebra live on different spaces".into()));
        }
        let n = alg.dim();
        match (&ctx, &data) {
            (BraidingContext::Trivial, ObjData::Plain) => {}
            (BraidingContext::GradedBicharacter(chi), ObjData::Graded(d)) => {
                if d.len() != n || d.iter().any(|g| g.len() != chi.rank()) {
                    return Err(HopfError::Shape("grading vector does not match the basis or the group".into()));
                }
            }
            (BraidingContext::YetterDrinfeld(h), ObjData::YetterDrinfeld { action, coaction }) => {
                expect_shape("YD action", action, n, h.dim() * n)?;
                expect_shape("YD coaction", coaction, h.dim() * n, n)?;
            }
            _ => {
                return Err(HopfError::MissingObjectData(format!(
                    "object data does not match the {} context",
                    ctx.kind_name()
                )))
            }
        }
        Ok(BraidedBialgebra { alg, coalg, ctx, data })
    }

    /// A bialgebra over the trivial (flip) braiding.
    pub fn ordinary(alg: AlgebraData<K>, coalg: CoalgebraData<K>) -> Result<Self, HopfError> {
        BraidedBialgebra::new(alg, coalg, BraidingContext::Trivial, ObjData::Plain)
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> &K {
        self.alg.field()
    }

    pub fn space(&self) -> &BasedSpace {
        &self.alg.space
    }

    /// The underlying object with its context data.
    pub fn object(&self) -> Obj<K> {
        Obj { dim: self.dim(), data: self.data.clone(), name: "A".into() }
    }

    /// `τ_{A,A}` from the context.
    pub fn tau(&self) -> Result<Matrix<K>, HopfError> {
        let a = self.object();
        self.ctx.braiding(&a, &a, self.field())
    }

    /// `τ_{A,X}`, the half-braiding of `A` at `X`.
    pub fn sigma(&self, x: &Obj<K>) -> Result<Matrix<K>, HopfError> {
        self.ctx.braiding(&self.object(), x, self.field())
    }

    pub fn label(&self, k: usize, j: usize) -> String {
        tensor_power_label(self.space(), k, j)
    }
}

/// A Hopf algebra: a bialgebra with its (invertible) antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData<K: Field> {
    pub bialg: BraidedBialgebra<K>,
    pub antipode: Matrix<K>,
    pub antipode_inv: Matrix<K>,
}

impl<K: Field> HopfAlgebraData<K> {
    /// Extracts the antipode through the fusion operator and inverts it.
    pub fn from_bialgebra(bialg: BraidedBialgebra<K>) -> Result<Self, HopfError> {
        match super::fusion::extract_antipode(&bialg)? {
            super::fusion::AntipodeOutcome::Antipode(s) => {
                let inv = s.try_invert().inverse.ok_or_else(|| {
                    HopfError::InternalInconsistency("extracted antipode is not invertible".into())
                })?;
                Ok(HopfAlgebraData { bialg, antipode: s, antipode_inv: inv })
            }
            super::fusion::AntipodeOutcome::Singular { rank, size } => Err(HopfError::NoAntipode { rank, size }),
        }
    }

    pub fn dim(&self) -> usize {
        self.bialg.dim()
    }

    pub fn field(&self) -> &K {
        self.bialg.field()
    }

    pub fn space(&self) -> &BasedSpace {
        self.bialg.space()
    }

    /// Re-checks the antipode axioms and the stored inverse.
    pub fn verify(&self) -> Result<(), HopfError> {
        let b = &self.bialg;
        let f = b.field();
        let i = id(f, b.dim());
        let unit_counit = &b.alg.u * &b.coalg.eps;
        let left = &b.alg.m * &(&self.antipode.tensor(&i) * &b.coalg.delta);
        let right = &b.alg.m * &(&i.tensor(&self.antipode) * &b.coalg.delta);
        if left != unit_counit || right != unit_counit {
            return Err(HopfError::InternalInconsistency("antipode axioms fail".into()));
        }
        if !(&self.antipode * &self.antipode_inv).is_identity() || !(&self.antipode_inv * &self.antipode).is_identity() {
            return Err(HopfError::InternalInconsistency("stored antipode inverse is wrong".into()));
        }
        Ok(())
    }

    /// The regular left module `(H, m)`.
    pub fn regular_module(&self) -> Obj<K> {
        Obj::module(self.bialg.alg.m.clone()).named("H")
    }

    /// The trivial module `k` with action `ε`.
    pub fn trivial_module(&self) -> Obj<K> {
        Obj::module(self.bialg.coalg.eps.clone()).named("k")
    }
}
