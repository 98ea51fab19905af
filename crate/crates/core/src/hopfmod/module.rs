//! Left Hopf modules over a Hopf algebra, their coinvariants and the
//! decomposition `M ≅ A⊗M^coA`.

use std::sync::Arc;

use rand::Rng;

use super::HopfModError;
use crate::exactalg::random::random_invertible;
use crate::exactalg::{chain, id, tensor_all, BasedSpace, Field, Matrix};
use crate::hopfcore::structures::HopfAlgebraData;
use crate::report::CheckReport;

/// `(M, r: A⊗M → M, ρ: M → A⊗M)`.
#[derive(Clone, Debug)]
pub struct HopfModule<K: Field> {
    pub hopf: Arc<HopfAlgebraData<K>>,
    pub name: String,
    pub space: BasedSpace,
    pub action: Matrix<K>,
    pub coaction: Matrix<K>,
}

impl<K: Field> HopfModule<K> {
    pub fn new(hopf: Arc<HopfAlgebraData<K>>, space: BasedSpace, action: Matrix<K>, coaction: Matrix<K>) -> Result<Self, HopfModError> {
        let out = HopfModule { hopf, name: "M".into(), space, action, coaction };
        let r = check_hopf_module(&out);
        if let Some(bad) = r.first_failure() {
            return Err(HopfModError::InvalidHopfModule(format!("{} ({})", bad.name, bad.witness.clone().unwrap_or_default())));
        }
        Ok(out)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `(A, m, Δ)`.
    pub fn regular(hopf: Arc<HopfAlgebraData<K>>) -> Self {
        let b = &hopf.bialg;
        let (action, coaction, space) = (b.alg.m.clone(), b.coalg.delta.clone(), b.space().clone());
        HopfModule { hopf, name: "A".into(), space, action, coaction }
    }

    /// `(A⊗X, m⊗X, Δ⊗X)` with `dim X = d`.
    pub fn free(hopf: Arc<HopfAlgebraData<K>>, d: usize) -> Self {
        let f = hopf.field().clone();
        let b = &hopf.bialg;
        let action = b.alg.m.tensor(&id(&f, d));
        let coaction = b.coalg.delta.tensor(&id(&f, d));
        let space = b.space().tensor(&BasedSpace::indexed("x", d));
        HopfModule { hopf, name: format!("A⊗k{d}"), space, action, coaction }
    }

    pub fn zero(hopf: Arc<HopfAlgebraData<K>>) -> Self {
        let f = hopf.field().clone();
        let space = BasedSpace::new(Vec::<String>::new()).expect("no labels");
        HopfModule { hopf, name: "0".into(), space, action: Matrix::zeros(&f, 0, 0), coaction: Matrix::zeros(&f, 0, 0) }
    }

    pub fn direct_sum(&self, other: &HopfModule<K>) -> HopfModule<K> {
        let f = self.hopf.field();
        let n = self.hopf.dim();
        let (p, q) = (self.dim(), other.dim());
        // A⊗(M⊕N) ≅ (A⊗M)⊕(A⊗N), reindexed coordinatewise
        let embed = |a: usize, i: usize, second: bool| a * (p + q) + if second { p + i } else { i };
        let mut act = Vec::new();
        for (row, col, v) in self.action.entries() {
            act.push((row, embed(col / p, col % p, false), v.clone()));
        }
        for (row, col, v) in other.action.entries() {
            act.push((p + row, embed(col / q, col % q, true), v.clone()));
        }
        let mut co = Vec::new();
        for (row, col, v) in self.coaction.entries() {
            co.push((embed(row / p, row % p, false), col, v.clone()));
        }
        for (row, col, v) in other.coaction.entries() {
            co.push((embed(row / q, row % q, true), p + col, v.clone()));
        }
        HopfModule {
            hopf: self.hopf.clone(),
            name: format!("{}⊕{}", self.name, other.name),
            space: self.space.direct_sum(&other.space),
            action: Matrix::from_triplets(f, p + q, n * (p + q), act),
            coaction: Matrix::from_triplets(f, n * (p + q), p + q, co),
        }
    }

    /// The same Hopf module in the coordinates `P·v`.
    pub fn transported(&self, p: &Matrix<K>, p_inv: &Matrix<K>) -> HopfModule<K> {
        let ia = id(self.hopf.field(), self.hopf.dim());
        HopfModule {
            hopf: self.hopf.clone(),
            name: format!("{}'", self.name),
            space: BasedSpace::indexed("m", self.dim()),
            action: chain(&[p, &self.action, &ia.tensor(p_inv)]),
            coaction: chain(&[&ia.tensor(p), &self.coaction, p_inv]),
        }
    }
}

/// Module, comodule and compatibility axioms for raw structure maps.
pub fn check_hopf_module_parts<K: Field>(h: &HopfAlgebraData<K>, action: &Matrix<K>, coaction: &Matrix<K>) -> CheckReport {
    let f = h.field();
    let b = &h.bialg;
    let n = h.dim();
    let d = action.rows();
    let mut r = CheckReport::new();
    if action.shape() != (d, n * d) || coaction.shape() != (n * d, d) {
        r.fail("shapes", Some(format!("action {:?}, coaction {:?}", action.shape(), coaction.shape())));
        return r;
    }
    let (ia, im) = (id(f, n), id(f, d));
    r.equal_indexed("action associative", &(action * &ia.tensor(action)), &(action * &b.alg.m.tensor(&im)));
    r.equal_indexed("action unital", &(action * &b.alg.u.tensor(&im)), &im);
    r.equal_indexed("coaction coassociative", &(&ia.tensor(coaction) * coaction), &(&b.coalg.delta.tensor(&im) * coaction));
    r.equal_indexed("coaction counital", &(&b.coalg.eps.tensor(&im) * coaction), &im);
    match b.tau() {
        Ok(tau) => {
            let rhs = chain(&[&b.alg.m.tensor(action), &tensor_all(&[&ia, &tau, &im]), &b.coalg.delta.tensor(coaction)]);
            r.equal_indexed("Hopf module compatibility ρr = (m⊗r)(A⊗σ⊗M)(Δ⊗ρ)", &(coaction * action), &rhs);
        }
        Err(e) => r.fail("Hopf module compatibility ρr = (m⊗r)(A⊗σ⊗M)(Δ⊗ρ)", Some(e.to_string())),
    }
    r
}

pub fn check_hopf_module<K: Field>(x: &HopfModule<K>) -> CheckReport {
    check_hopf_module_parts(&x.hopf, &x.action, &x.coaction)
}

/// `f: M → N` commutes with actions and coactions.
pub fn hopf_module_morphism_check<K: Field>(f: &Matrix<K>, x: &HopfModule<K>, y: &HopfModule<K>) -> CheckReport {
    let ia = id(x.hopf.field(), x.hopf.dim());
    let mut r = CheckReport::new();
    r.equal_indexed("A-linear", &(f * &x.action), &(&y.action * &ia.tensor(f)));
    r.equal_indexed("A-colinear", &(&y.coaction * f), &(&ia.tensor(f) * &x.coaction));
    r
}

#[derive(Clone, Debug)]
pub struct Coinvariants<K: Field> {
    pub dim: usize,
    /// `Π = r(S⊗id)ρ`.
    pub projector: Matrix<K>,
    /// `M^coA → M`.
    pub inclusion: Matrix<K>,
    /// `M → M^coA`, equal to the splitting of `Π`.
    pub retraction: Matrix<K>,
}

/// Coinvariants through the idempotent `Π`, cross-checked against the
/// equalizer of `ρ` and `η⊗M`.
pub fn coinvariants<K: Field>(x: &HopfModule<K>) -> Result<Coinvariants<K>, HopfModError> {
    let f = x.hopf.field();
    let b = &x.hopf.bialg;
    let d = x.dim();
    let projector = chain(&[&x.action, &x.hopf.antipode.tensor(&id(f, d)), &x.coaction]);
    let split = projector.split_idempotent().map_err(|e| HopfModError::IdempotentMismatch(format!("Π: {e}")))?;
    let equalizer = (&x.coaction - &b.alg.u.tensor(&id(f, d))).kernel();
    let r = split.section.cols();
    let joint = split.section.hstack(&equalizer).rank();
    if equalizer.cols() != r || joint != r {
        return Err(HopfModError::IdempotentMismatch(format!("image of Π has dim {r}, equalizer has dim {}", equalizer.cols())));
    }
    Ok(Coinvariants { dim: r, projector, inclusion: split.section, retraction: split.retraction })
}

#[derive(Clone, Debug)]
pub struct SweedlerDecomposition<K: Field> {
    pub coinvariants: Coinvariants<K>,
    /// `A⊗M^coA → M`, `a⊗v ↦ a·v`.
    pub iso: Matrix<K>,
    /// `m ↦ m₍₋₁₎⊗Π(m₍₀₎)`.
    pub inverse: Matrix<K>,
    pub report: CheckReport,
}

pub fn sweedler_decompose<K: Field>(x: &HopfModule<K>) -> Result<SweedlerDecomposition<K>, HopfModError> {
    let co = coinvariants(x)?;
    let f = x.hopf.field();
    let n = x.hopf.dim();
    let ia = id(f, n);
    let iso = &x.action * &ia.tensor(&co.inclusion);
    let inverse = &ia.tensor(&co.retraction) * &x.coaction;
    let free = HopfModule::free(x.hopf.clone(), co.dim);
    let mut report = CheckReport::new();
    report.equal_indexed("inverse ∘ iso = id", &(&inverse * &iso), &id(f, n * co.dim));
    report.equal_indexed("iso ∘ inverse = id", &(&iso * &inverse), &id(f, x.dim()));
    report.extend_prefixed("iso", hopf_module_morphism_check(&iso, &free, x));
    report.extend_prefixed("inverse", hopf_module_morphism_check(&inverse, x, &free));
    if let Some(bad) = report.first_failure() {
        return Err(HopfModError::NotAnIso(bad.name.clone()));
    }
    Ok(SweedlerDecomposition { coinvariants: co, iso, inverse, report })
}

/// The map `M^coA → N^coA` induced by a Hopf module morphism.
pub fn coinvariant_map<K: Field>(f: &Matrix<K>, x: &Coinvariants<K>, y: &Coinvariants<K>) -> Matrix<K> {
    chain(&[&y.retraction, f, &x.inclusion])
}

/// A seeded Hopf module: regular, free, or a direct sum of those, in
/// randomly changed coordinates.
pub fn random_hopf_module<K: Field, R: Rng>(hopf: Arc<HopfAlgebraData<K>>, rng: &mut R, max_free: usize) -> HopfModule<K> {
    let pick = |rng: &mut R| -> HopfModule<K> {
        if rng.gen_bool(0.3) {
            HopfModule::regular(hopf.clone())
        } else {
            HopfModule::free(hopf.clone(), rng.gen_range(1..=max_free.max(1)))
        }
    };
    let mut m = pick(rng);
    if rng.gen_bool(0.5) {
        m = m.direct_sum(&pick(rng));
    }
    let (p, p_inv) = random_invertible(hopf.field(), m.dim(), rng);
    let name = m.name.clone();
    m.transported(&p, &p_inv).named(format!("{name} (rebased)"))
}
