//! Comodules over a cocommutative central coalgebra and their cotensor
//! products `M □_C N`.

use std::fmt;
use std::sync::Arc;

use super::HopfModError;
use crate::exactalg::{chain, flip, id, Field, Matrix};
use crate::hopfcore::structures::CoalgebraData;
use crate::report::CheckReport;

type HalfBraiding<K> = Arc<dyn Fn(&Comodule<K>) -> Matrix<K> + Send + Sync>;

/// A coalgebra `C` with a half-braiding `σ_M: C⊗M → M⊗C` on comodules.
#[derive(Clone)]
pub struct CentralCoalgebra<K: Field> {
    pub coalg: CoalgebraData<K>,
    sigma: HalfBraiding<K>,
}

impl<K: Field> fmt::Debug for CentralCoalgebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CentralCoalgebra(dim {})", self.coalg.dim())
    }
}

impl<K: Field> CentralCoalgebra<K> {
    /// `σ` is the flip of vector spaces.
    pub fn with_flip(coalg: CoalgebraData<K>) -> Self {
        let c = coalg.dim();
        let field = coalg.field().clone();
        CentralCoalgebra { coalg, sigma: Arc::new(move |m: &Comodule<K>| flip(&field, c, m.dim)) }
    }

    pub fn with_half_braiding(coalg: CoalgebraData<K>, sigma: impl Fn(&Comodule<K>) -> Matrix<K> + Send + Sync + 'static) -> Self {
        CentralCoalgebra { coalg, sigma: Arc::new(sigma) }
    }

    pub fn dim(&self) -> usize {
        self.coalg.dim()
    }

    pub fn sigma(&self, m: &Comodule<K>) -> Matrix<K> {
        (self.sigma)(m)
    }

    /// `C` as a comodule over itself.
    pub fn regular(&self) -> Comodule<K> {
        Comodule { name: "C".into(), dim: self.dim(), coaction: self.coalg.delta.clone() }
    }

    /// `C⊗X` with coaction `Δ⊗X`.
    pub fn cofree(&self, x: usize) -> Comodule<K> {
        Comodule { name: format!("C⊗k{x}"), dim: self.dim() * x, coaction: self.coalg.delta.tensor(&id(self.coalg.field(), x)) }
    }

    /// Coalgebra axioms and `σ_C Δ = Δ`.
    pub fn check(&self) -> CheckReport {
        let mut r = self.coalg.check();
        let delta = &self.coalg.delta;
        r.equal_indexed("σ_C Δ = Δ (cocommutative)", &(&self.sigma(&self.regular()) * delta), delta);
        r
    }
}

/// A left comodule `(M, δ: M → C⊗M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<K: Field> {
    pub name: String,
    pub dim: usize,
    pub coaction: Matrix<K>,
}

impl<K: Field> Comodule<K> {
    pub fn new(c: &CentralCoalgebra<K>, name: impl Into<String>, coaction: Matrix<K>) -> Result<Self, HopfModError> {
        let dim = coaction.cols();
        let out = Comodule { name: name.into(), dim, coaction };
        let r = comodule_check(c, &out);
        if let Some(bad) = r.first_failure() {
            return Err(HopfModError::InvalidComodule(bad.name.clone()));
        }
        Ok(out)
    }
}

pub fn comodule_check<K: Field>(c: &CentralCoalgebra<K>, m: &Comodule<K>) -> CheckReport {
    let f = c.coalg.field();
    let mut r = CheckReport::new();
    if m.coaction.shape() != (c.dim() * m.dim, m.dim) {
        r.fail("coaction shape", Some(format!("{:?}", m.coaction.shape())));
        return r;
    }
    let (ic, im) = (id(f, c.dim()), id(f, m.dim));
    let delta = &m.coaction;
    r.equal_indexed("coaction coassociative", &(&c.coalg.delta.tensor(&im) * delta), &(&ic.tensor(delta) * delta));
    r.equal_indexed("coaction counital", &(&c.coalg.eps.tensor(&im) * delta), &im);
    r
}

#[derive(Clone, Debug)]
pub struct Cotensor<K: Field> {
    pub comodule: Comodule<K>,
    /// `M □_C N → M⊗N`.
    pub inclusion: Matrix<K>,
    pub report: CheckReport,
}

/// The kernel of `σ_M δ ⊗ N − M ⊗ δ′: M⊗N → M⊗C⊗N` with the coaction
/// induced by `δ⊗N`.
pub fn cotensor<K: Field>(m: &Comodule<K>, n: &Comodule<K>, c: &CentralCoalgebra<K>) -> Result<Cotensor<K>, HopfModError> {
    let f = c.coalg.field();
    if !c.check().all_passed() {
        return Err(HopfModError::NotCocommutative);
    }
    for x in [m, n] {
        if let Some(bad) = comodule_check(c, x).first_failure() {
            return Err(HopfModError::InvalidComodule(format!("{}: {}", x.name, bad.name)));
        }
    }
    let (im, in_, ic) = (id(f, m.dim), id(f, n.dim), id(f, c.dim()));
    let via_m = (&c.sigma(m) * &m.coaction).tensor(&in_);
    let via_n = im.tensor(&n.coaction);
    let inclusion = (&via_m - &via_n).kernel();
    let k = inclusion.cols();
    let target = &m.coaction.tensor(&in_) * &inclusion;
    let coaction = ic.tensor(&inclusion).solve(&target).ok_or(HopfModError::CoactionUndefined)?;
    let comodule = Comodule { name: format!("{}□{}", m.name, n.name), dim: k, coaction };
    let mut report = CheckReport::new();
    report.pass("induced coaction lands in the cotensor product");
    report.extend_prefixed("cotensor", comodule_check(c, &comodule));
    Ok(Cotensor { comodule, inclusion, report })
}

/// The canonical isomorphism `M □_C (C⊗X) ≅ M⊗X`.
#[derive(Clone, Debug)]
pub struct CotensorFusion<K: Field> {
    pub cotensor: Cotensor<K>,
    /// `M□(C⊗X) → M⊗X`, `M⊗ε⊗X` on the inclusion.
    pub forward: Matrix<K>,
    /// `M⊗X → M□(C⊗X)`, `m⊗x ↦ σ_M δ(m)⊗x`.
    pub inverse: Matrix<K>,
    pub report: CheckReport,
}

pub fn cotensor_fusion<K: Field>(m: &Comodule<K>, x: usize, c: &CentralCoalgebra<K>) -> Result<CotensorFusion<K>, HopfModError> {
    let f = c.coalg.field();
    let cofree = c.cofree(x);
    let ct = cotensor(m, &cofree, c)?;
    let (im, ix) = (id(f, m.dim), id(f, x));
    let forward = chain(&[&im.tensor(&c.coalg.eps.tensor(&ix)), &ct.inclusion]);
    let spread = (&c.sigma(m) * &m.coaction).tensor(&ix);
    let inverse = ct.inclusion.solve(&spread).ok_or_else(|| HopfModError::NotAnIso(format!("σδ⊗X leaves {}", ct.comodule.name)))?;
    let mut report = CheckReport::new();
    report.equal_indexed("forward ∘ inverse = id", &(&forward * &inverse), &id(f, m.dim * x));
    report.equal_indexed("inverse ∘ forward = id", &(&inverse * &forward), &id(f, ct.comodule.dim));
    if let Some(bad) = report.first_failure() {
        return Err(HopfModError::NotAnIso(bad.name.clone()));
    }
    Ok(CotensorFusion { cotensor: ct, forward, inverse, report })
}
