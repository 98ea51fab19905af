//! Augmented bimonads and the central bialgebra they are represented by.

use super::backend::{compose_all, Backend, Mor, MonadError};
use super::bimonad::{Bimonad, SweepLimits};
use super::instances::RepresentableBimonad;
use crate::exactalg::{id, BasedSpace, Field, Matrix};
use crate::hopfcore::{AlgebraData, BraidedBialgebra, BraidingContext, CoalgebraData, Obj, ObjData};
use crate::report::CheckReport;

type AugmentationFn<'a, K> = Box<dyn Fn(&Obj<K>) -> Result<Mor<K>, MonadError> + 'a>;

/// A bimonad with a bimonad morphism `e: T → 1`.
pub struct Augmented<'a, K: Field> {
    inner: &'a dyn Bimonad<K>,
    e: AugmentationFn<'a, K>,
    labels: Option<BasedSpace>,
}

impl<'a, K: Field> Augmented<'a, K> {
    /// Checks on the probes that `e` is natural, a monad morphism
    /// (`e μ = e e_T`, `e η = id`) and comonoidal (`(e⊗e)T₂ = e`, `T₀ = e_1`).
    pub fn new(
        inner: &'a dyn Bimonad<K>,
        e: impl Fn(&Obj<K>) -> Result<Mor<K>, MonadError> + 'a,
        probes: &[Obj<K>],
        limits: SweepLimits,
    ) -> Result<Self, MonadError> {
        let aug = Augmented { inner, e: Box::new(e), labels: None };
        let r = aug.check_augmentation(probes, limits)?;
        if let Some(f) = r.first_failure() {
            return Err(MonadError::PreconditionViolated(format!("augmentation: {}", f.name)));
        }
        Ok(aug)
    }

    /// `e_X = ε⊗X` on a representable bimonad.
    pub fn counit(t: &'a RepresentableBimonad<K>, probes: &[Obj<K>], limits: SweepLimits) -> Result<Self, MonadError> {
        let eps = t.bialgebra().coalg.eps.clone();
        let field = t.field().clone();
        let mut aug = Augmented::new(
            t,
            move |x: &Obj<K>| Mor::new(t.apply(x)?, x.clone(), eps.tensor(&id(&field, x.dim))),
            probes,
            limits,
        )?;
        aug.labels = Some(t.bialgebra().space().clone());
        Ok(aug)
    }

    /// The identity bimonad augmented by the identity.
    pub fn trivial(t: &'a dyn Bimonad<K>, probes: &[Obj<K>], limits: SweepLimits) -> Result<Self, MonadError> {
        let field = t.field().clone();
        Augmented::new(t, move |x: &Obj<K>| Ok(Mor::identity(x, &field)), probes, limits)
    }

    pub fn inner(&self) -> &dyn Bimonad<K> {
        self.inner
    }

    /// `e_X: TX → X`.
    pub fn augmentation(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        (self.e)(x)
    }

    fn check_augmentation(&self, probes: &[Obj<K>], limits: SweepLimits) -> Result<CheckReport, MonadError> {
        let t = self.inner;
        let b = t.backend();
        let f = t.field();
        let mut r = CheckReport::new();
        let one = b.unit();
        r.equal_indexed("T₀ = e_1", &t.t0()?.mat, &self.augmentation(&one)?.mat);
        for x in probes {
            let ex = self.augmentation(x)?;
            let tx = t.apply(x)?;
            r.equal_indexed(format!("e∘μ = e∘e_T at {}", x.name), &t.mu(x)?.then(&ex)?.mat, &self.augmentation(&tx)?.then(&ex)?.mat);
            r.record(format!("e∘η = id at {}", x.name), t.eta(x)?.then(&ex)?.is_identity(), None);
            for y in probes {
                if x.dim * y.dim > limits.max_hom_size {
                    continue;
                }
                let ey = self.augmentation(y)?;
                let xy = b.tensor(x, y)?;
                r.equal_indexed(
                    format!("(e⊗e)T₂ = e at ({}, {})", x.name, y.name),
                    &t.t2(x, y)?.then(&b.tensor_mor(&ex, &ey)?)?.mat,
                    &self.augmentation(&xy)?.mat,
                );
                let mut bad = None;
                for (k, g) in b.hom_basis(x, y, f).into_iter().enumerate() {
                    let m = Mor::new(x.clone(), y.clone(), g)?;
                    if t.apply_mor(&m)?.then(&ey)?.mat != ex.then(&m)?.mat {
                        bad.get_or_insert(k);
                    }
                }
                r.record(format!("e natural along {} → {}", x.name, y.name), bad.is_none(), bad.map(|k| format!("basis morphism #{k}")));
            }
        }
        Ok(r)
    }

    /// `u^e_X = (T1⊗e_X)T₂(1,X): TX → T1⊗X`.
    pub fn left_comparison(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let t = self.inner;
        let b = t.backend();
        let t1 = t.apply(&b.unit())?;
        t.t2(&b.unit(), x)?.then(&b.tensor_mor(&Mor::identity(&t1, t.field()), &self.augmentation(x)?)?)
    }

    /// `v^e_X = (e_X⊗T1)T₂(X,1): TX → X⊗T1`.
    pub fn right_comparison(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let t = self.inner;
        let b = t.backend();
        let t1 = t.apply(&b.unit())?;
        t.t2(x, &b.unit())?.then(&b.tensor_mor(&self.augmentation(x)?, &Mor::identity(&t1, t.field()))?)
    }

    fn left_comparison_inverse(&self, x: &Obj<K>) -> Result<Matrix<K>, MonadError> {
        self.left_comparison(x)?
            .mat
            .try_invert()
            .inverse
            .ok_or_else(|| MonadError::NotInvertible { what: "u^e (not left regular)".into(), probe: x.name.clone() })
    }

    /// `σ_X = v^e_X (u^e_X)⁻¹: T1⊗X → X⊗T1`.
    pub fn half_braiding(&self, x: &Obj<K>) -> Result<Matrix<K>, MonadError> {
        Ok(&self.right_comparison(x)?.mat * &self.left_comparison_inverse(x)?)
    }
}

impl<K: Field> Bimonad<K> for Augmented<'_, K> {
    fn name(&self) -> String {
        format!("augmented {}", self.inner.name())
    }
    fn backend(&self) -> &Backend<K> {
        self.inner.backend()
    }
    fn field(&self) -> &K {
        self.inner.field()
    }
    fn apply(&self, x: &Obj<K>) -> Result<Obj<K>, MonadError> {
        self.inner.apply(x)
    }
    fn apply_mor(&self, f: &Mor<K>) -> Result<Mor<K>, MonadError> {
        self.inner.apply_mor(f)
    }
    fn mu(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        self.inner.mu(x)
    }
    fn eta(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        self.inner.eta(x)
    }
    fn t2(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
        self.inner.t2(x, y)
    }
    fn t0(&self) -> Result<Mor<K>, MonadError> {
        self.inner.t0()
    }
    fn fusion_left_inverse(&self, x: &Obj<K>, y: &Obj<K>) -> Result<(Option<Mor<K>>, usize), MonadError> {
        self.inner.fusion_left_inverse(x, y)
    }
    fn fusion_right_inverse(&self, x: &Obj<K>, y: &Obj<K>) -> Result<(Option<Mor<K>>, usize), MonadError> {
        self.inner.fusion_right_inverse(x, y)
    }
}

/// The bialgebra `(T1, m, u, Δ, ε)` recovered from an augmentation, with
/// the report showing that `u^e` identifies `T` with `T1⊗_σ−`.
#[derive(Clone, Debug)]
pub struct CentralBialgebra<K: Field> {
    pub bialg: BraidedBialgebra<K>,
    pub report: CheckReport,
}

/// Recovers `m = μ_1(u^e_{T1})⁻¹`, `u = η_1`, `Δ = T₂(1,1)`, `ε = T₀` and
/// `σ = v^e(u^e)⁻¹`, then checks on the probes that `u^e` is an isomorphism
/// of bimonads onto the representable bimonad of the result.
pub fn augmentation_to_central_bialgebra<K: Field>(aug: &Augmented<'_, K>, probes: &[Obj<K>]) -> Result<CentralBialgebra<K>, MonadError> {
    let t = aug.inner;
    let b = t.backend();
    let f = t.field();
    let one = b.unit();
    let t1 = t.apply(&one)?;
    let n = t1.dim;
    let space = match &aug.labels {
        Some(s) if s.dim() == n => s.clone(),
        _ => BasedSpace::indexed("t", n),
    };
    let m = &t.mu(&one)?.mat * &aug.left_comparison_inverse(&t1)?;
    let u = t.eta(&one)?.mat;
    let delta = t.t2(&one, &one)?.mat;
    let eps = t.t0()?.mat;
    let alg = AlgebraData::new(space.clone(), m, u)?;
    let coalg = CoalgebraData::new(space, delta, eps)?;
    let (ctx, data) = match b {
        Backend::VectK => (BraidingContext::Trivial, ObjData::Plain),
        Backend::Graded(chi) => {
            let degrees = t1.degrees().ok_or_else(|| MonadError::ContextMismatch("T1 carries no grading".into()))?;
            (BraidingContext::GradedBicharacter(chi.clone()), ObjData::Graded(degrees.to_vec()))
        }
        Backend::ModH(h) => {
            let action = t1.action().ok_or_else(|| MonadError::ContextMismatch("T1 carries no action".into()))?.clone();
            let regular = h.regular_module();
            let sigma = aug.half_braiding(&regular)?;
            let coaction = &sigma * &id(f, n).tensor(&h.bialg.alg.u);
            (BraidingContext::YetterDrinfeld(h.clone()), ObjData::YetterDrinfeld { action: action.into(), coaction: coaction.into() })
        }
        Backend::Bimodules(_) => {
            return Err(MonadError::ContextMismatch("augmentations are reconstructed over braided backends only".into()))
        }
    };
    let bialg = BraidedBialgebra::new(alg, coalg, ctx, data)?;
    let rep = RepresentableBimonad::new(b.clone(), bialg.clone())?;
    let mut r = CheckReport::new();
    r.equal_indexed("T₀ = ε ∘ u^e_1", &t.t0()?.mat, &rep.t0()?.then(&Mor::identity(&one, f))?.mat);
    for x in probes {
        let ux = aug.left_comparison(x)?;
        aug.left_comparison_inverse(x)?;
        let tag = &x.name;
        r.equal_indexed(format!("σ matches the recovered braiding at {tag}"), &aug.half_braiding(x)?, &bialg.sigma(x)?);
        let tx = t.apply(x)?;
        let utx = aug.left_comparison(&tx)?;
        let lhs = &ux.mat * &t.mu(x)?.mat;
        let rhs = compose_all(&[&utx, &rep.apply_mor(&Mor::new(tx.clone(), rep.apply(x)?, ux.mat.clone())?)?, &rep.mu(x)?])?;
        r.equal_indexed(format!("u^e is a monad morphism at {tag}"), &lhs, &rhs.mat);
        r.equal_indexed(format!("u^e∘η = η at {tag}"), &(&ux.mat * &t.eta(x)?.mat), &rep.eta(x)?.mat);
        for y in probes {
            let uy = aug.left_comparison(y)?;
            let xy = b.tensor(x, y)?;
            let uxy = aug.left_comparison(&xy)?;
            r.equal_indexed(
                format!("u^e is comonoidal at ({tag}, {})", y.name),
                &(&ux.mat.tensor(&uy.mat) * &t.t2(x, y)?.mat),
                &(&rep.t2(x, y)?.mat * &uxy.mat),
            );
        }
    }
    Ok(CentralBialgebra { bialg, report: r })
}

/// Compares `(e_X⊗T1)T₂(X,1)` with `(e_X⊗T1)τ_{T1,TX}T₂(1,X)` for a given
/// braiding `τ`; passing everywhere means `σ = τ_{T1,−}`.
pub fn braided_compatibility_check<K: Field>(
    aug: &Augmented<'_, K>,
    probes: &[Obj<K>],
    braiding: &dyn Fn(&Obj<K>, &Obj<K>) -> Result<Matrix<K>, MonadError>,
) -> Result<CheckReport, MonadError> {
    let t = aug.inner;
    let b = t.backend();
    let f = t.field();
    let one = b.unit();
    let t1 = t.apply(&one)?;
    let mut r = CheckReport::new();
    for x in probes {
        let tx = t.apply(x)?;
        let ex = b.tensor_mor(&aug.augmentation(x)?, &Mor::identity(&t1, f))?;
        let lhs = aug.right_comparison(x)?;
        let tau = braiding(&t1, &tx)?;
        let rhs = &ex.mat * &(&tau * &t.t2(&one, x)?.mat);
        r.equal_indexed(format!("σ = τ at {}", x.name), &lhs.mat, &rhs);
    }
    Ok(r)
}
