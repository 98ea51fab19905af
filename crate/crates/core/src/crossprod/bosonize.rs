//! Bosonization `A#H` of a Hopf algebra in Yetter–Drinfeld modules over `H`.

use std::sync::Arc;

use super::smash::{smash_multiplication, smash_space};
use super::{bialgebra_morphism_check, describe_failure, CrossError};
use crate::exactalg::{chain, id, permute_factors, tensor_all, Field, Matrix};
use crate::hopfcore::fusion::{extract_antipode, fusion_operator, AntipodeOutcome};
use crate::hopfcore::object::{Obj, ObjData};
use crate::hopfcore::structures::{tensor_action, AlgebraData, BraidedBialgebra, BraidingContext, CoalgebraData, HopfAlgebraData};
use crate::hopfcore::check_bialgebra;
use crate::monadrep::{fusion_left, hopf_operator_left, Backend, Mor, RepresentableBimonad, TModule};
use crate::report::CheckReport;

/// `A#H` together with the retraction `π ∘ ι = id_H`.
#[derive(Clone, Debug)]
pub struct Bosonization<K: Field> {
    pub base: Arc<HopfAlgebraData<K>>,
    pub bialg: BraidedBialgebra<K>,
    /// `ι(h) = 1#h`.
    pub inclusion: Matrix<K>,
    /// `π(a#h) = ε(a)h`.
    pub projection: Matrix<K>,
}

fn yd_parts<K: Field>(a: &BraidedBialgebra<K>) -> Result<(Arc<HopfAlgebraData<K>>, Matrix<K>, Matrix<K>), CrossError> {
    match (&a.ctx, &a.data) {
        (BraidingContext::YetterDrinfeld(h), ObjData::YetterDrinfeld { action, coaction }) => {
            Ok((h.clone(), (**action).clone(), (**coaction).clone()))
        }
        _ => Err(CrossError::YetterDrinfeldAxioms(format!("bialgebra lives in the {} context", a.ctx.kind_name()))),
    }
}

/// Builds `A#H` with the smash product and the coproduct
/// `Δ(a#h) = a₍₁₎#(a₍₂₎)₍₋₁₎h₍₁₎ ⊗ (a₍₂₎)₍₀₎#h₍₂₎`.
pub fn bosonization<K: Field>(a: &BraidedBialgebra<K>) -> Result<Bosonization<K>, CrossError> {
    let (h, action, coaction) = yd_parts(a)?;
    let input = check_bialgebra(a);
    if let Some(bad) = input.failures().find(|i| i.name.starts_with("object:")) {
        return Err(CrossError::YetterDrinfeldAxioms(bad.name.clone()));
    }
    if !input.all_passed() {
        return Err(CrossError::BialgebraCheck(format!("input: {}", describe_failure(&input))));
    }
    if let AntipodeOutcome::Singular { rank, size } = extract_antipode(a)? {
        return Err(CrossError::Hopf(crate::hopfcore::structures::HopfError::NoAntipode { rank, size }));
    }
    let f = a.field();
    let (ad, hd) = (a.dim(), h.dim());
    let (ia, ih) = (id(f, ad), id(f, hd));
    let hb = &h.bialg;

    let m = smash_multiplication(&h, &a.alg.m, &action);
    let u = a.alg.u.tensor(&hb.alg.u);
    let delta = chain(&[
        &tensor_all(&[&ia, &hb.alg.m, &ia, &ih]),
        &permute_factors(f, &[ad, hd, ad, hd, hd], &[0, 1, 3, 2, 4]),
        &tensor_all(&[&ia, &coaction, &ih, &ih]),
        &a.coalg.delta.tensor(&hb.coalg.delta),
    ]);
    let eps = a.coalg.eps.tensor(&hb.coalg.eps);
    let space = smash_space(a.space(), h.space());
    let bialg = BraidedBialgebra::ordinary(AlgebraData::new(space.clone(), m, u)?, CoalgebraData::new(space, delta, eps)?)?;
    let r = check_bialgebra(&bialg);
    if !r.all_passed() {
        return Err(CrossError::BialgebraCheck(describe_failure(&r)));
    }
    let inclusion = a.alg.u.tensor(&ih);
    let projection = a.coalg.eps.tensor(&ih);
    Ok(Bosonization { base: h, bialg, inclusion, projection })
}

/// `π∘ι = id` and both maps are bialgebra morphisms.
pub fn retract_check<K: Field>(b: &Bosonization<K>) -> CheckReport {
    let mut r = CheckReport::new();
    let composite = &b.projection * &b.inclusion;
    r.record("π∘ι = id", composite.is_identity(), (!composite.is_identity()).then(|| "H".to_string()));
    r.extend_prefixed("ι", bialgebra_morphism_check(&b.inclusion, &b.base.bialg, &b.bialg));
    r.extend_prefixed("π", bialgebra_morphism_check(&b.projection, &b.bialg, &b.base.bialg));
    r
}

/// The verified pair `(ι, π)`.
pub fn retract_maps<K: Field>(b: &Bosonization<K>) -> Result<(Matrix<K>, Matrix<K>), CrossError> {
    let r = retract_check(b);
    if !r.all_passed() {
        return Err(CrossError::NotAMorphism(describe_failure(&r)));
    }
    Ok((b.inclusion.clone(), b.projection.clone()))
}

/// The fusion operator of `A#H` against the composite of the fusion
/// operator of `A⊗−` on `H`-modules at `(H, H)` with the Hopf operator of
/// `H⊗−` on the diagonal module `A⊗H`.
pub fn composite_fusion_check<K: Field>(a: &BraidedBialgebra<K>, b: &Bosonization<K>) -> Result<CheckReport, CrossError> {
    let (h, action, _) = yd_parts(a)?;
    let f = a.field();
    let (ad, hd) = (a.dim(), h.dim());
    let monad_err = |e: crate::monadrep::MonadError| CrossError::DecompositionInconsistent(e.to_string());

    let over_h = RepresentableBimonad::new(Backend::ModH(h.clone()), a.clone()).map_err(monad_err)?;
    let regular = h.regular_module();
    let outer = fusion_left(&over_h, &regular, &regular).map_err(monad_err)?;

    let plain_h = RepresentableBimonad::new(Backend::VectK, h.bialg.clone()).map_err(monad_err)?;
    let diag = Obj::plain(ad * hd).named("A⊗H");
    let diag_action = tensor_action(&h, &action, &h.bialg.alg.m, ad, hd);
    let t_diag = crate::monadrep::Bimonad::apply(&plain_h, &diag).map_err(monad_err)?;
    let module = TModule::new(&plain_h, diag.clone(), Mor::new(t_diag, diag, diag_action).map_err(monad_err)?).map_err(monad_err)?;
    let inner = hopf_operator_left(&plain_h, &Obj::plain(1).named("k"), &module).map_err(monad_err)?;

    let composite = &outer.mat * &id(f, ad).tensor(&inner.forward.mat);
    let mut r = CheckReport::new();
    let bb = &b.bialg;
    r.equal("fusion of A#H = composite of A- and H-level operators", &fusion_operator(bb), &composite, |j| bb.label(2, j));
    Ok(r)
}
