//! Radford's decomposition `K ≅ A#H` of a Hopf algebra with a projection.

use std::sync::Arc;

use super::bosonize::{bosonization, Bosonization};
use super::{bialgebra_morphism_check, describe_failure, CrossError};
use crate::exactalg::{chain, id, permute_factors, BasedSpace, Field, Matrix, Splitting};
use crate::hopfcore::check_bialgebra;
use crate::hopfcore::object::ObjData;
use crate::hopfcore::structures::{AlgebraData, BraidedBialgebra, BraidingContext, CoalgebraData, HopfAlgebraData};
use crate::report::CheckReport;

/// An idempotent bialgebra endomorphism of `K` commuting with the antipode.
#[derive(Clone, Debug)]
pub struct HopfProjection<K: Field> {
    pub hopf: HopfAlgebraData<K>,
    pub p: Matrix<K>,
}

impl<K: Field> HopfProjection<K> {
    pub fn new(hopf: HopfAlgebraData<K>, p: Matrix<K>) -> Result<Self, CrossError> {
        let r = projection_check(&hopf, &p);
        if !r.all_passed() {
            return Err(CrossError::ProjectionInvariants(describe_failure(&r)));
        }
        Ok(HopfProjection { hopf, p })
    }
}

pub fn projection_check<K: Field>(k: &HopfAlgebraData<K>, p: &Matrix<K>) -> CheckReport {
    let mut r = CheckReport::new();
    if k.bialg.ctx != BraidingContext::Trivial {
        r.fail("ordinary Hopf algebra", Some(k.bialg.ctx.kind_name().into()));
        return r;
    }
    r.extend_prefixed("p", bialgebra_morphism_check(p, &k.bialg, &k.bialg));
    if p.shape() != (k.dim(), k.dim()) {
        return r;
    }
    let lbl = |j: usize| k.space().label(j).to_string();
    r.equal("p∘p = p", &(p * p), p, lbl);
    r.equal("p∘S = S∘p", &(p * &k.antipode), &(&k.antipode * p), lbl);
    r
}

/// `Π = m(id⊗S∘p)Δ`, the projection onto the right coinvariants of `(id⊗p)Δ`.
pub fn coinvariant_projector<K: Field>(k: &HopfAlgebraData<K>, p: &Matrix<K>) -> Matrix<K> {
    let f = k.field();
    let b = &k.bialg;
    chain(&[&b.alg.m, &id(f, k.dim()).tensor(&(&k.antipode * p)), &b.coalg.delta])
}

#[derive(Clone, Debug)]
pub struct RadfordDecomposition<K: Field> {
    /// `H = p(K)`.
    pub base: Arc<HopfAlgebraData<K>>,
    /// `A = Π(K)` as a Hopf algebra in Yetter–Drinfeld modules over `H`.
    pub coinvariants: BraidedBialgebra<K>,
    pub base_inclusion: Matrix<K>,
    pub coinvariant_inclusion: Matrix<K>,
    pub bosonization: Bosonization<K>,
    /// `k ↦ Π(k₍₁₎)#p(k₍₂₎)`.
    pub iso: Matrix<K>,
    /// `a#h ↦ ah`.
    pub iso_inv: Matrix<K>,
    pub report: CheckReport,
}

fn image_space(ambient: &BasedSpace, section: &Matrix<impl Field>, prefix: &str) -> BasedSpace {
    let labels: Option<Vec<String>> = (0..section.cols())
        .map(|c| {
            let col: Vec<_> = section.entries().filter(|(_, j, _)| *j == c).collect();
            match col.as_slice() {
                [(i, _, v)] if section.field().is_one(v) => Some(ambient.label(*i).to_string()),
                _ => None,
            }
        })
        .collect();
    labels.and_then(|l| BasedSpace::new(l).ok()).unwrap_or_else(|| BasedSpace::indexed(prefix, section.cols()))
}

fn restrict_algebra<K: Field>(k: &BraidedBialgebra<K>, s: &Splitting<K>, space: BasedSpace) -> Result<AlgebraData<K>, CrossError> {
    let m = chain(&[&s.retraction, &k.alg.m, &s.section.tensor(&s.section)]);
    let u = &s.retraction * &k.alg.u;
    Ok(AlgebraData::new(space, m, u)?)
}

pub fn radford_decompose<K: Field>(proj: &HopfProjection<K>) -> Result<RadfordDecomposition<K>, CrossError> {
    let k = &proj.hopf;
    let pre = projection_check(k, &proj.p);
    if !pre.all_passed() {
        return Err(CrossError::ProjectionInvariants(describe_failure(&pre)));
    }
    let f = k.field();
    let kb = &k.bialg;
    let n = k.dim();
    let inconsistent = |what: &str| CrossError::DecompositionInconsistent(what.to_string());

    let hs = proj.p.split_idempotent().map_err(|e| inconsistent(&e.to_string()))?;
    let h_space = image_space(k.space(), &hs.section, "h");
    let h_alg = restrict_algebra(kb, &hs, h_space.clone())?;
    let h_delta = chain(&[&hs.retraction.tensor(&hs.retraction), &kb.coalg.delta, &hs.section]);
    let h_eps = &kb.coalg.eps * &hs.section;
    let h_bialg = BraidedBialgebra::ordinary(h_alg, CoalgebraData::new(h_space, h_delta, h_eps)?)?;
    let h = Arc::new(HopfAlgebraData::from_bialgebra(h_bialg)?);

    let pi = coinvariant_projector(k, &proj.p);
    let as_ = pi.split_idempotent().map_err(|e| inconsistent(&format!("Π: {e}")))?;
    let a_space = image_space(k.space(), &as_.section, "a");
    let a_alg = restrict_algebra(kb, &as_, a_space.clone())?;
    let a_delta = chain(&[&as_.retraction.tensor(&as_.retraction), &pi.tensor(&id(f, n)), &kb.coalg.delta, &as_.section]);
    let a_eps = &kb.coalg.eps * &as_.section;
    let adjoint = chain(&[
        &kb.alg.m,
        &kb.alg.m.tensor(&k.antipode),
        &permute_factors(f, &[n, n, n], &[0, 2, 1]),
        &kb.coalg.delta.tensor(&id(f, n)),
    ]);
    let action = chain(&[&as_.retraction, &adjoint, &hs.section.tensor(&as_.section)]);
    let coaction = chain(&[&hs.retraction.tensor(&as_.retraction), &kb.coalg.delta, &as_.section]);
    let coinvariants = BraidedBialgebra::new(
        a_alg,
        CoalgebraData::new(a_space, a_delta, a_eps)?,
        BraidingContext::YetterDrinfeld(h.clone()),
        ObjData::YetterDrinfeld { action: Arc::new(action), coaction: Arc::new(coaction) },
    )?;
    let a_check = check_bialgebra(&coinvariants);
    if !a_check.all_passed() {
        return Err(inconsistent(&format!("coinvariants: {}", describe_failure(&a_check))));
    }
    let bos = bosonization(&coinvariants)?;

    let iso = chain(&[&as_.retraction.tensor(&hs.retraction), &kb.coalg.delta]);
    let iso_inv = chain(&[&kb.alg.m, &as_.section.tensor(&hs.section)]);
    let mut report = CheckReport::new();
    let lbl = |j: usize| k.space().label(j).to_string();
    report.equal("inverse ∘ iso = id_K", &(&iso_inv * &iso), &id(f, n), lbl);
    report.equal("iso ∘ inverse = id_(A#H)", &(&iso * &iso_inv), &id(f, bos.bialg.dim()), |j| bos.bialg.space().label(j).to_string());
    report.extend_prefixed("a#h ↦ ah", bialgebra_morphism_check(&iso_inv, &bos.bialg, kb));
    if !report.all_passed() {
        return Err(inconsistent(&describe_failure(&report)));
    }
    Ok(RadfordDecomposition {
        base: h,
        coinvariants,
        base_inclusion: hs.section,
        coinvariant_inclusion: as_.section,
        bosonization: bos,
        iso,
        iso_inv,
        report,
    })
}
