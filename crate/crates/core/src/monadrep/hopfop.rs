//! Hopf operators of a bimonad on its modules and their inverses through
//! the fusion operators.

use super::backend::{compose_all, Mor, MonadError};
use super::bimonad::Bimonad;
use crate::exactalg::Field;
use crate::hopfcore::Obj;

/// A `T`-module `(M, r: TM → M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TModule<K: Field> {
    pub obj: Obj<K>,
    pub action: Mor<K>,
}

impl<K: Field> TModule<K> {
    /// Checks `r∘μ_M = r∘T(r)` and `r∘η_M = id`.
    pub fn new<T: Bimonad<K> + ?Sized>(t: &T, obj: Obj<K>, action: Mor<K>) -> Result<Self, MonadError> {
        let tm = t.apply(&obj)?;
        if action.dom.dim != tm.dim || action.cod.dim != obj.dim {
            return Err(MonadError::InvalidModule(format!("action of {} has the wrong shape", obj.name)));
        }
        let assoc = t.mu(&obj)?.then(&action)?;
        let twice = t.apply_mor(&action)?.then(&action)?;
        if assoc.mat != twice.mat {
            return Err(MonadError::InvalidModule(format!("action on {} is not associative", obj.name)));
        }
        if !t.eta(&obj)?.then(&action)?.is_identity() {
            return Err(MonadError::InvalidModule(format!("action on {} is not unital", obj.name)));
        }
        Ok(TModule { obj, action })
    }

    /// The free module `(TY, μ_Y)`.
    pub fn free<T: Bimonad<K> + ?Sized>(t: &T, y: &Obj<K>) -> Result<Self, MonadError> {
        let obj = t.apply(y)?;
        let action = t.mu(y)?;
        Ok(TModule { obj, action })
    }
}

/// A Hopf operator with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfOperator<K: Field> {
    pub forward: Mor<K>,
    pub inverse: Mor<K>,
}

/// `𝔥^l_{X,M} = (TX⊗r)T₂(X,M)` and its inverse
/// `T(X⊗r)H^{l,-1}_{X,M}(TX⊗η_M)`; the two are checked to be mutually inverse.
pub fn hopf_operator_left<K: Field, T: Bimonad<K> + ?Sized>(t: &T, x: &Obj<K>, m: &TModule<K>) -> Result<HopfOperator<K>, MonadError> {
    let b = t.backend();
    let f = t.field();
    let tx = t.apply(x)?;
    let forward = t.t2(x, &m.obj)?.then(&b.tensor_mor(&Mor::identity(&tx, f), &m.action)?)?;
    let (hinv, _) = t.fusion_left_inverse(x, &m.obj)?;
    let hinv = hinv.ok_or_else(|| MonadError::NotInvertible { what: "H^l".into(), probe: format!("({}, {})", x.name, m.obj.name) })?;
    let inverse = compose_all(&[
        &b.tensor_mor(&Mor::identity(&tx, f), &t.eta(&m.obj)?)?,
        &hinv,
        &t.apply_mor(&b.tensor_mor(&Mor::identity(x, f), &m.action)?)?,
    ])?;
    confirm(HopfOperator { forward, inverse }, "𝔥^l", x, m)
}

/// `𝔥^r_{M,X} = (r⊗TX)T₂(M,X)` and its inverse
/// `T(r⊗X)H^{r,-1}_{M,X}(η_M⊗TX)`.
pub fn hopf_operator_right<K: Field, T: Bimonad<K> + ?Sized>(t: &T, m: &TModule<K>, x: &Obj<K>) -> Result<HopfOperator<K>, MonadError> {
    let b = t.backend();
    let f = t.field();
    let tx = t.apply(x)?;
    let forward = t.t2(&m.obj, x)?.then(&b.tensor_mor(&m.action, &Mor::identity(&tx, f))?)?;
    let (hinv, _) = t.fusion_right_inverse(&m.obj, x)?;
    let hinv = hinv.ok_or_else(|| MonadError::NotInvertible { what: "H^r".into(), probe: format!("({}, {})", m.obj.name, x.name) })?;
    let inverse = compose_all(&[
        &b.tensor_mor(&t.eta(&m.obj)?, &Mor::identity(&tx, f))?,
        &hinv,
        &t.apply_mor(&b.tensor_mor(&m.action, &Mor::identity(x, f))?)?,
    ])?;
    confirm(HopfOperator { forward, inverse }, "𝔥^r", x, m)
}

fn confirm<K: Field>(op: HopfOperator<K>, what: &str, x: &Obj<K>, m: &TModule<K>) -> Result<HopfOperator<K>, MonadError> {
    let there = op.forward.then(&op.inverse)?;
    let back = op.inverse.then(&op.forward)?;
    if !there.is_identity() || !back.is_identity() {
        return Err(MonadError::NotInvertible { what: what.into(), probe: format!("({}, {})", x.name, m.obj.name) });
    }
    Ok(op)
}
