//! Left unary antipodes `𝔰_X: T(ˇTX) → ˇX` on autonomous backends.

use super::binary::{record, small_pairs, BinaryAntipode};
use super::inthom::{dual_mor, lcoev, left_dual, lev, Side};
use crate::exactalg::Field;
use crate::hopfcore::Obj;
use crate::monadrep::{compose_all, Bimonad, MonadError, Mor, SweepLimits};
use crate::report::CheckReport;

type Component<'a, K> = Box<dyn Fn(&Obj<K>) -> Result<Mor<K>, MonadError> + 'a>;

pub struct UnaryAntipode<'a, K: Field> {
    component: Component<'a, K>,
}

impl<'a, K: Field> UnaryAntipode<'a, K> {
    pub fn new(component: impl Fn(&Obj<K>) -> Result<Mor<K>, MonadError> + 'a) -> Self {
        UnaryAntipode { component: Box::new(component) }
    }

    /// `𝔰_X = (T₀⊗ˇX) s_{X,1}` for the binary antipode obtained from fusion.
    pub fn from_fusion<T: Bimonad<K> + ?Sized>(t: &'a T) -> Self {
        UnaryAntipode::new(move |x| unary_antipode(t, x))
    }

    pub fn at(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        (self.component)(x)
    }
}

/// `𝔰_X = (T₀⊗ˇX) s_{X,1}`, with `[TX,1] = ˇTX` and `[X,T1] = T1⊗ˇX`.
pub fn unary_from_binary<K: Field, T: Bimonad<K> + ?Sized>(t: &T, s: &BinaryAntipode<'_, K>, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
    if s.side != Side::Left {
        return Err(MonadError::ContextMismatch("unary antipodes are built from the left binary antipode".into()));
    }
    let b = t.backend();
    let one = b.unit();
    let dx = left_dual(b, x)?;
    let s1 = s.at(x, &one)?;
    let collapse = b.tensor_mor(&t.t0()?, &Mor::identity(&dx, t.field()))?;
    let dtx = left_dual(b, &t.apply(x)?)?;
    Mor::new(t.apply(&dtx)?, dx, &collapse.mat * &s1.mat)
}

/// `𝔰^l_X` from the inverse fusion operator.
pub fn unary_antipode<K: Field, T: Bimonad<K> + ?Sized>(t: &T, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
    unary_from_binary(t, &BinaryAntipode::from_fusion(t, Side::Left), x)
}

/// `s_{X,Y} = (TY⊗𝔰_X) T₂(Y, ˇTX)`.
pub fn binary_from_unary<K: Field, T: Bimonad<K> + ?Sized>(t: &T, u: &UnaryAntipode<'_, K>, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
    let b = t.backend();
    let dtx = left_dual(b, &t.apply(x)?)?;
    let ty = t.apply(y)?;
    t.t2(y, &dtx)?.then(&b.tensor_mor(&Mor::identity(&ty, t.field()), &u.at(x)?)?)
}

/// The two unary antipode axioms on every probe.
pub fn unary_axiom_check<K: Field, T: Bimonad<K> + ?Sized>(t: &T, u: &UnaryAntipode<'_, K>, probes: &[Obj<K>]) -> Result<CheckReport, MonadError> {
    let b = t.backend();
    let f = t.field();
    let mut r = CheckReport::new();
    for x in probes {
        let tx = t.apply(x)?;
        let dtx = left_dual(b, &tx)?;
        let dx = left_dual(b, x)?;
        record(
            &mut r,
            format!("unary axiom 1 at {}", x.name),
            (|| {
                let inner = b.tensor_mor(&dual_mor(b, &t.eta(x)?, Side::Left)?, &Mor::identity(x, f))?;
                compose_all(&[&t.apply_mor(&inner)?, &t.apply_mor(&lev(b, x, f)?)?, &t.t0()?])
            })(),
            (|| {
                let pulled = t.apply_mor(&dual_mor(b, &t.mu(x)?, Side::Left)?)?.then(&u.at(&tx)?)?;
                compose_all(&[&t.t2(&dtx, x)?, &b.tensor_mor(&pulled, &Mor::identity(&tx, f))?, &lev(b, &tx, f)?])
            })(),
        );
        record(
            &mut r,
            format!("unary axiom 2 at {}", x.name),
            (|| compose_all(&[&t.t0()?, &lcoev(b, x, f)?, &b.tensor_mor(&t.eta(x)?, &Mor::identity(&dx, f))?]))(),
            (|| {
                compose_all(&[
                    &t.apply_mor(&lcoev(b, &tx, f)?)?,
                    &t.t2(&tx, &dtx)?,
                    &b.tensor_mor(&t.mu(x)?, &u.at(x)?)?,
                ])
            })(),
        );
    }
    Ok(r)
}

/// Both unary axioms and agreement of `(TY⊗𝔰_X)T₂(Y,ˇTX)` with the binary
/// antipode from fusion on the small probe pairs.
pub fn unary_relation_check<K: Field, T: Bimonad<K> + ?Sized>(t: &T, probes: &[Obj<K>], limits: SweepLimits) -> Result<CheckReport, MonadError> {
    let u = UnaryAntipode::from_fusion(t);
    let s = BinaryAntipode::from_fusion(t, Side::Left);
    let mut r = unary_axiom_check(t, &u, probes)?;
    for (x, y) in small_pairs(probes, limits) {
        record(
            &mut r,
            format!("binary antipode from unary at ({}, {})", x.name, y.name),
            binary_from_unary(t, &u, x, y),
            s.at(x, y),
        );
    }
    Ok(r)
}
