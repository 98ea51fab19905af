//! The induced central coalgebra `(T𝟙, σ̂)` of a pre-Hopf bimonad, the
//! comonad morphisms given by the Hopf operators, and the equalizer
//! property of `T₂`.

use super::HopfModError;
use crate::antipodes::tensor_modules;
use crate::exactalg::{BasedSpace, Field};
use crate::hopfcore::structures::CoalgebraData;
use crate::hopfcore::Obj;
use crate::monadrep::{compose_all, hopf_operator_left, hopf_operator_right, Bimonad, Mor, SweepLimits, TModule};
use crate::report::CheckReport;

/// `Ĉ = (T𝟙, T₂(𝟙,𝟙), T₀)` with `σ̂ = 𝔥^r_{−,𝟙}∘(𝔥^l_{𝟙,−})⁻¹`.
pub struct InducedCentralCoalgebra<'a, K: Field> {
    t: &'a dyn Bimonad<K>,
    pub object: Obj<K>,
    pub coalg: CoalgebraData<K>,
    pub report: CheckReport,
}

impl<K: Field> std::fmt::Debug for InducedCentralCoalgebra<'_, K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "InducedCentralCoalgebra({} of dim {})", self.t.name(), self.object.dim)
    }
}

impl<'a, K: Field> InducedCentralCoalgebra<'a, K> {
    /// `σ̂_M: T𝟙⊗M → M⊗T𝟙`.
    pub fn sigma(&self, m: &TModule<K>) -> Result<Mor<K>, HopfModError> {
        let one = self.t.backend().unit();
        let left = hopf_operator_left(self.t, &one, m)?;
        let right = hopf_operator_right(self.t, m, &one)?;
        Ok(left.inverse.then(&right.forward)?)
    }
}

/// `(T𝟙⊗r)T₂(𝟙,M)`.
fn hopf_map_left<K: Field>(t: &dyn Bimonad<K>, m: &TModule<K>) -> Result<Mor<K>, HopfModError> {
    let b = t.backend();
    let t1 = t.apply(&b.unit())?;
    Ok(t.t2(&b.unit(), &m.obj)?.then(&b.tensor_mor(&Mor::identity(&t1, t.field()), &m.action)?)?)
}

/// `(r⊗T𝟙)T₂(M,𝟙)`.
fn hopf_map_right<K: Field>(t: &dyn Bimonad<K>, m: &TModule<K>) -> Result<Mor<K>, HopfModError> {
    let b = t.backend();
    let t1 = t.apply(&b.unit())?;
    Ok(t.t2(&m.obj, &b.unit())?.then(&b.tensor_mor(&m.action, &Mor::identity(&t1, t.field()))?)?)
}

/// Builds `Ĉ` after confirming `H^l_{𝟙,X}` and `H^r_{X,𝟙}` are invertible on
/// the probe objects, then checks the coalgebra axioms, cocommutativity
/// `σ̂_Ĉ Δ = Δ`, the triangle `σ̂_{Tc} T₂(𝟙,c) = T₂(c,𝟙)` and the lax
/// half-braiding laws on the probe modules.
pub fn induced_central_coalgebra<'a, K: Field>(
    t: &'a dyn Bimonad<K>,
    probes: &[Obj<K>],
    modules: &[TModule<K>],
) -> Result<InducedCentralCoalgebra<'a, K>, HopfModError> {
    let b = t.backend();
    let f = t.field();
    let one = b.unit();
    for x in probes {
        if t.fusion_left_inverse(&one, x)?.0.is_none() {
            return Err(HopfModError::PreHopfFails(format!("H^l at (1, {})", x.name)));
        }
        if t.fusion_right_inverse(x, &one)?.0.is_none() {
            return Err(HopfModError::PreHopfFails(format!("H^r at ({}, 1)", x.name)));
        }
    }
    let object = t.apply(&one)?;
    let delta = t.t2(&one, &one)?;
    let counit = t.t0()?;
    let coalg = CoalgebraData::new(BasedSpace::indexed("c", object.dim), delta.mat.clone(), counit.mat.clone())?;
    let mut out = InducedCentralCoalgebra { t, object, coalg, report: CheckReport::new() };
    let mut r = out.coalg.check();

    let c_hat = TModule::free(t, &one)?;
    let sigma_c = out.sigma(&c_hat)?;
    r.equal_indexed("σ̂_Ĉ Δ = Δ (cocommutative)", &(&sigma_c.mat * &delta.mat), &delta.mat);

    for c in probes {
        let free = TModule::free(t, c)?;
        let lhs = t.t2(&one, c)?.then(&out.sigma(&free)?)?;
        r.equal_indexed(format!("σ̂_(T{0}) T₂(1,{0}) = T₂({0},1)", c.name), &lhs.mat, &t.t2(c, &one)?.mat);
    }

    let unit_module = TModule::new(t, one.clone(), t.t0()?)?;
    let s1 = out.sigma(&unit_module)?;
    r.record("σ̂ at the unit module is the identity", s1.is_identity(), (!s1.is_identity()).then(|| "1".to_string()));
    for m in modules {
        for n in modules {
            let mn = tensor_modules(t, m, n)?;
            let lhs = out.sigma(&mn)?;
            let step1 = b.tensor_mor(&out.sigma(m)?, &Mor::identity(&n.obj, f))?;
            let step2 = b.tensor_mor(&Mor::identity(&m.obj, f), &out.sigma(n)?)?;
            let rhs = compose_all(&[&step1, &step2])?;
            r.equal_indexed(format!("σ̂ multiplicative at ({}, {})", m.obj.name, n.obj.name), &lhs.mat, &rhs.mat);
        }
    }
    out.report = r;
    Ok(out)
}

/// The Hopf maps `𝔥^l_{𝟙,−}: T̂ → Ĉ⊗−` and `𝔥^r_{−,𝟙}: T̂ → −⊗Ĉ` preserve
/// the counits and comultiplications of the comonads on the probe modules.
pub fn comonad_morphism_check<K: Field>(t: &dyn Bimonad<K>, modules: &[TModule<K>]) -> Result<CheckReport, HopfModError> {
    let b = t.backend();
    let f = t.field();
    let one = b.unit();
    let t1 = t.apply(&one)?;
    let id_t1 = Mor::identity(&t1, f);
    let mut r = CheckReport::new();
    for m in modules {
        let n = &m.obj.name;
        let id_m = Mor::identity(&m.obj, f);
        let free = TModule::free(t, &m.obj)?;
        let eta_m = t.apply_mor(&t.eta(&m.obj)?)?;

        let hl = hopf_map_left(t, m)?;
        let counit = hl.then(&b.tensor_mor(&t.t0()?, &id_m)?)?;
        r.equal_indexed(format!("left: counit preserved at {n}"), &counit.mat, &m.action.mat);
        let lhs = hl.then(&b.tensor_mor(&t.t2(&one, &one)?, &id_m)?)?;
        let rhs = compose_all(&[&eta_m, &hopf_map_left(t, &free)?, &b.tensor_mor(&id_t1, &hl)?])?;
        r.equal_indexed(format!("left: comultiplication preserved at {n}"), &lhs.mat, &rhs.mat);

        let hr = hopf_map_right(t, m)?;
        let counit = hr.then(&b.tensor_mor(&id_m, &t.t0()?)?)?;
        r.equal_indexed(format!("right: counit preserved at {n}"), &counit.mat, &m.action.mat);
        let lhs = hr.then(&b.tensor_mor(&id_m, &t.t2(&one, &one)?)?)?;
        let rhs = compose_all(&[&eta_m, &hopf_map_right(t, &free)?, &b.tensor_mor(&hr, &id_t1)?])?;
        r.equal_indexed(format!("right: comultiplication preserved at {n}"), &lhs.mat, &rhs.mat);
    }
    Ok(r)
}

/// `T₂(X,Y)` is the equalizer of `T₂(X,𝟙)⊗TY` and `TX⊗T₂(𝟙,Y)`.
pub fn equalizer_condition_check<K: Field>(t: &dyn Bimonad<K>, probes: &[Obj<K>], limits: SweepLimits) -> Result<CheckReport, HopfModError> {
    let b = t.backend();
    let f = t.field();
    let one = b.unit();
    let t1 = t.apply(&one)?;
    let mut r = CheckReport::new();
    let mut skipped = 0;
    for x in probes {
        for y in probes {
            let (tx, ty) = (t.apply(x)?, t.apply(y)?);
            if tx.dim * t1.dim * ty.dim > limits.max_dim {
                skipped += 1;
                continue;
            }
            let left = b.tensor_mor(&t.t2(x, &one)?, &Mor::identity(&ty, f))?;
            let right = b.tensor_mor(&Mor::identity(&tx, f), &t.t2(&one, y)?)?;
            let equalizer = (&left.mat - &right.mat).kernel();
            let t2 = t.t2(x, y)?.mat;
            let rank = t2.rank();
            let joint = t2.hstack(&equalizer).rank();
            let name = format!("T₂ is the equalizer at ({}, {})", x.name, y.name);
            let ok = rank == t2.cols() && rank == equalizer.cols() && joint == rank;
            r.record(name, ok, (!ok).then(|| format!("rank T₂ {rank} of {}, equalizer dim {}", t2.cols(), equalizer.cols())));
            r.annotate(format!("equalizer dim {} in {}", equalizer.cols(), tx.dim * ty.dim));
        }
    }
    if skipped > 0 {
        r.pass("equalizer: tuple coverage");
        r.annotate(format!("{skipped} of {} pairs skipped above the sweep limit", probes.len() * probes.len()));
    }
    Ok(r)
}
