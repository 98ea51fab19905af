//! Induction `K⊗_L N` along a Hopf algebra map `L → K`.

use super::{bialgebra_morphism_check, describe_failure, CrossError};
use crate::exactalg::{chain, id, quotient_by_span, Field, Matrix};
use crate::hopfcore::structures::BraidedBialgebra;
use crate::report::CheckReport;

#[derive(Clone, Debug)]
pub struct InducedModule<K: Field> {
    pub dim: usize,
    /// `K⊗Q → Q`.
    pub action: Matrix<K>,
    /// `K⊗N → Q`.
    pub projection: Matrix<K>,
    pub section: Matrix<K>,
    pub report: CheckReport,
}

/// `K⊗_L N` as the quotient of `K⊗N` by `k f(ℓ)⊗n − k⊗ℓn`, with the
/// `K`-action by left multiplication.
pub fn cross_quotient_modules<K: Field>(
    l: &BraidedBialgebra<K>,
    k: &BraidedBialgebra<K>,
    f: &Matrix<K>,
    n_action: &Matrix<K>,
) -> Result<InducedModule<K>, CrossError> {
    let morphism = bialgebra_morphism_check(f, l, k);
    if !morphism.all_passed() {
        return Err(CrossError::NotAMorphism(describe_failure(&morphism)));
    }
    let field = k.field();
    let (kd, ld) = (k.dim(), l.dim());
    let nd = n_action.rows();
    if n_action.cols() != ld * nd {
        return Err(CrossError::InvalidModule(format!("action is {}x{}, expected {nd}x{}", nd, n_action.cols(), ld * nd)));
    }
    let (ik, in_) = (id(field, kd), id(field, nd));
    let mut module = CheckReport::new();
    module.equal_indexed("associative", &(n_action * &id(field, ld).tensor(n_action)), &(n_action * &l.alg.m.tensor(&in_)));
    module.equal_indexed("unital", &(n_action * &l.alg.u.tensor(&in_)), &in_);
    if !module.all_passed() {
        return Err(CrossError::InvalidModule(describe_failure(&module)));
    }

    let through_f = chain(&[&k.alg.m.tensor(&in_), &ik.tensor(&f.tensor(&in_))]);
    let through_n = ik.tensor(n_action);
    let relations = &through_f - &through_n;
    let q = quotient_by_span(&k.space().tensor(&crate::exactalg::BasedSpace::indexed("n", nd)), &relations);
    let left_mult = k.alg.m.tensor(&in_);
    let action = chain(&[&q.projection, &left_mult, &ik.tensor(&q.section)]);

    let mut report = CheckReport::new();
    let leak = chain(&[&q.projection, &left_mult, &ik.tensor(&relations)]);
    report.record("action preserves the relations", leak.is_zero(), (!leak.is_zero()).then(|| "relation span".to_string()));
    let iq = id(field, q.space.dim());
    report.equal_indexed("action associative", &(&action * &ik.tensor(&action)), &(&action * &k.alg.m.tensor(&iq)));
    report.equal_indexed("action unital", &(&action * &k.alg.u.tensor(&iq)), &iq);
    Ok(InducedModule { dim: q.space.dim(), action, projection: q.projection, section: q.section, report })
}
