//! Rebuilding `μ` and `T₂` from a left fusion operator together with `T`,
//! `η` and `T₀`.

use super::backend::{compose_all, Backend, Mor, MonadError};
use super::bimonad::{fusion_left, Bimonad, SweepLimits};
use crate::exactalg::Field;
use crate::hopfcore::Obj;

type FusionFn<'a, K> = Box<dyn Fn(&Obj<K>, &Obj<K>) -> Result<Mor<K>, MonadError> + 'a>;

/// The input of a reconstruction: `T`, `η` and `T₀` from `base`, and a
/// candidate left fusion operator `H_{X,Y}: T(X⊗TY) → TX⊗TY`.
pub struct FusionData<'a, K: Field> {
    base: &'a dyn Bimonad<K>,
    fusion: FusionFn<'a, K>,
}

impl<'a, K: Field> FusionData<'a, K> {
    pub fn new(base: &'a dyn Bimonad<K>, fusion: impl Fn(&Obj<K>, &Obj<K>) -> Result<Mor<K>, MonadError> + 'a) -> Self {
        FusionData { base, fusion: Box::new(fusion) }
    }

    /// The left fusion operator of an existing bimonad.
    pub fn of(base: &'a dyn Bimonad<K>) -> Self {
        FusionData::new(base, move |x, y| fusion_left(base, x, y))
    }

    pub fn fusion(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
        (self.fusion)(x, y)
    }
}

/// The bimonad with `μ_X = (T₀⊗TX)H_{1,X}` and `T₂(X,Y) = H_{X,Y}T(X⊗η_Y)`.
pub struct ReconstructedBimonad<'a, K: Field> {
    data: FusionData<'a, K>,
}

impl<K: Field> Bimonad<K> for ReconstructedBimonad<'_, K> {
    fn name(&self) -> String {
        format!("reconstructed {}", self.data.base.name())
    }
    fn backend(&self) -> &Backend<K> {
        self.data.base.backend()
    }
    fn field(&self) -> &K {
        self.data.base.field()
    }
    fn apply(&self, x: &Obj<K>) -> Result<Obj<K>, MonadError> {
        self.data.base.apply(x)
    }
    fn apply_mor(&self, f: &Mor<K>) -> Result<Mor<K>, MonadError> {
        self.data.base.apply_mor(f)
    }
    fn mu(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let b = self.backend();
        let tx = self.apply(x)?;
        let h = self.data.fusion(&b.unit(), x)?;
        let t0 = b.tensor_mor(&self.t0()?, &Mor::identity(&tx, self.field()))?;
        Mor::new(h.dom.clone(), tx, &t0.mat * &h.mat)
    }
    fn eta(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        self.data.base.eta(x)
    }
    fn t2(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let b = self.backend();
        let lift = self.apply_mor(&b.tensor_mor(&Mor::identity(x, self.field()), &self.eta(y)?)?)?;
        let h = self.data.fusion(x, y)?;
        Ok(Mor { dom: lift.dom.clone(), cod: h.cod.clone(), mat: &h.mat * &lift.mat })
    }
    fn t0(&self) -> Result<Mor<K>, MonadError> {
        self.data.base.t0()
    }
}

fn require<K: Field>(name: String, lhs: Result<Mor<K>, MonadError>, rhs: Result<Mor<K>, MonadError>) -> Result<(), MonadError> {
    let (l, r) = (lhs?, rhs?);
    if l.mat != r.mat {
        return Err(MonadError::PreconditionViolated(name));
    }
    Ok(())
}

/// Checks the left pentagon, `Hη = η⊗TY`, `T₀η₁ = id`,
/// `(TX⊗T₀)H_{X,1} = T(X⊗T₀)` and `(T₀⊗TX)H_{1,X}T(η_X) = id` on the
/// probes, then returns the reconstructed bimonad.
pub fn reconstruct_from_fusion<'a, K: Field>(
    data: FusionData<'a, K>,
    probes: &[Obj<K>],
    limits: SweepLimits,
) -> Result<ReconstructedBimonad<'a, K>, MonadError> {
    let t = data.base;
    let b = t.backend();
    let f = t.field();
    let one = b.unit();
    let t0 = t.t0()?;
    let idm = |x: &Obj<K>| Mor::identity(x, f);
    require("T₀η₁ = id".into(), t.eta(&one).and_then(|e| e.then(&t0)), Ok(idm(&one)))?;
    for x in probes {
        let tx = t.apply(x)?;
        require(
            format!("(TX⊗T₀)H_(X,1) = T(X⊗T₀) at {}", x.name),
            (|| data.fusion(x, &one)?.then(&b.tensor_mor(&idm(&tx), &t0)?))(),
            (|| t.apply_mor(&b.tensor_mor(&idm(x), &t0)?))(),
        )?;
        require(
            format!("(T₀⊗TX)H_(1,X)T(η_X) = id at {}", x.name),
            (|| compose_all(&[&t.apply_mor(&t.eta(x)?)?, &data.fusion(&one, x)?, &b.tensor_mor(&t0, &idm(&tx))?]))(),
            Ok(idm(&tx)),
        )?;
    }
    for x in probes {
        for y in probes {
            let ty = t.apply(y)?;
            require(
                format!("Hη = η⊗TY at ({}, {})", x.name, y.name),
                (|| t.eta(&b.tensor(x, &ty)?)?.then(&data.fusion(x, y)?))(),
                (|| b.tensor_mor(&t.eta(x)?, &idm(&ty)))(),
            )?;
        }
    }
    let ratio = probes.iter().map(|p| Ok(t.apply(p)?.dim.div_ceil(p.dim.max(1)))).collect::<Result<Vec<_>, MonadError>>()?;
    let ratio = ratio.into_iter().max().unwrap_or(1);
    for x in probes {
        for y in probes {
            for z in probes {
                if ratio.saturating_pow(3).saturating_mul(x.dim * y.dim * z.dim) > limits.max_dim {
                    continue;
                }
                let (tx, ty, tz) = (t.apply(x)?, t.apply(y)?, t.apply(z)?);
                let y_tz = b.tensor(y, &tz)?;
                let x_ty = b.tensor(x, &ty)?;
                require(
                    format!("left pentagon at ({}, {}, {})", x.name, y.name, z.name),
                    (|| data.fusion(x, &y_tz)?.then(&b.tensor_mor(&idm(&tx), &data.fusion(y, z)?)?))(),
                    (|| {
                        compose_all(&[
                            &t.apply_mor(&b.tensor_mor(&idm(x), &data.fusion(y, z)?)?)?,
                            &data.fusion(&x_ty, z)?,
                            &b.tensor_mor(&data.fusion(x, y)?, &idm(&tz))?,
                        ])
                    })(),
                )?;
            }
        }
    }
    Ok(ReconstructedBimonad { data })
}
