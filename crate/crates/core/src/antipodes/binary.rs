//! Binary antipodes `s_{X,Y}: T[TX,Y] → [X,TY]`, computed from the inverse
//! fusion operators, with their axiom and property suites.

use super::inthom::{coeval, curry, eval, hom_mor, hom_obj, Side};
use crate::exactalg::Field;
use crate::hopfcore::Obj;
use crate::monadrep::{compose_all, Bimonad, MonadError, Mor, SweepLimits};
use crate::report::CheckReport;

type Component<'a, K> = Box<dyn Fn(&Obj<K>, &Obj<K>) -> Result<Mor<K>, MonadError> + 'a>;

/// A family of components `s_{X,Y}` on one side.
pub struct BinaryAntipode<'a, K: Field> {
    pub side: Side,
    component: Component<'a, K>,
}

impl<'a, K: Field> BinaryAntipode<'a, K> {
    pub fn new(side: Side, component: impl Fn(&Obj<K>, &Obj<K>) -> Result<Mor<K>, MonadError> + 'a) -> Self {
        BinaryAntipode { side, component: Box::new(component) }
    }

    /// The antipode obtained from the inverse fusion operator of `t`.
    pub fn from_fusion<T: Bimonad<K> + ?Sized>(t: &'a T, side: Side) -> Self {
        BinaryAntipode::new(side, move |x, y| binary_antipode_from_fusion(t, x, y, side))
    }

    pub fn at(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
        (self.component)(x, y)
    }
}

fn idm<K: Field, T: Bimonad<K> + ?Sized>(t: &T, x: &Obj<K>) -> Mor<K> {
    Mor::identity(x, t.field())
}

/// Left: `s^l_{X,Y} = [X, T ev_{TX,Y}] [η_X, H^{l,-1}_{[TX,Y],X}] coev`,
/// computed as the adjunct of `T(ev)∘H^{l,-1}∘(T[TX,Y]⊗η_X)`.
/// Right: the mirror image with `H^{r,-1}_{X,[TX,Y]ʳ}`.
pub fn binary_antipode_from_fusion<K: Field, T: Bimonad<K> + ?Sized>(t: &T, x: &Obj<K>, y: &Obj<K>, side: Side) -> Result<Mor<K>, MonadError> {
    let b = t.backend();
    let f = t.field();
    let tx = t.apply(x)?;
    let u = hom_obj(b, &tx, y, side)?;
    let w = t.apply(&u)?;
    let t_ev = t.apply_mor(&eval(b, &tx, y, side, f)?)?;
    let not_inv = |what: &str| MonadError::NotInvertible { what: what.into(), probe: format!("({}, {})", u.name, x.name) };
    let phi = match side {
        Side::Left => {
            let (hinv, _) = t.fusion_left_inverse(&u, x)?;
            let hinv = hinv.ok_or_else(|| not_inv("H^l"))?;
            compose_all(&[&b.tensor_mor(&idm(t, &w), &t.eta(x)?)?, &hinv, &t_ev])?
        }
        Side::Right => {
            let (hinv, _) = t.fusion_right_inverse(x, &u)?;
            let hinv = hinv.ok_or_else(|| not_inv("H^r"))?;
            compose_all(&[&b.tensor_mor(&t.eta(x)?, &idm(t, &w))?, &hinv, &t_ev])?
        }
    };
    curry(b, &w, x, &phi, side)
}

/// Rebuilds the inverse fusion operator from an antipode.
/// Left: `H^{l,-1}_{X,Y} = T(X⊗μ_Y) ev (s_{TY,X⊗T²Y} T(coev_{T²Y,X}) ⊗ TY)`.
/// Right: `H^{r,-1}_{X,Y} = T(μ_X⊗Y) ev (TX ⊗ s_{TX,T²X⊗Y} T(coev_{T²X,Y}))`.
pub fn fusion_inverse_from_antipode<K: Field, T: Bimonad<K> + ?Sized>(
    t: &T,
    s: &BinaryAntipode<'_, K>,
    x: &Obj<K>,
    y: &Obj<K>,
) -> Result<Mor<K>, MonadError> {
    let b = t.backend();
    let f = t.field();
    match s.side {
        Side::Left => {
            let ty = t.apply(y)?;
            let tty = t.apply(&ty)?;
            let inner = b.tensor(x, &tty)?;
            let lift = t.apply_mor(&coeval(b, &tty, x, Side::Left, f)?)?;
            let s_c = s.at(&ty, &inner)?;
            let curried = lift.then(&s_c)?;
            let t_inner = t.apply(&inner)?;
            let ev = eval(b, &ty, &t_inner, Side::Left, f)?;
            compose_all(&[
                &b.tensor_mor(&curried, &idm(t, &ty))?,
                &Mor { dom: b.tensor(&curried.cod, &ty)?, ..ev },
                &t.apply_mor(&b.tensor_mor(&idm(t, x), &t.mu(y)?)?)?,
            ])
        }
        Side::Right => {
            let tx = t.apply(x)?;
            let ttx = t.apply(&tx)?;
            let inner = b.tensor(&ttx, y)?;
            let lift = t.apply_mor(&coeval(b, &ttx, y, Side::Right, f)?)?;
            let s_c = s.at(&tx, &inner)?;
            let curried = lift.then(&s_c)?;
            let t_inner = t.apply(&inner)?;
            let ev = eval(b, &tx, &t_inner, Side::Right, f)?;
            compose_all(&[
                &b.tensor_mor(&idm(t, &tx), &curried)?,
                &Mor { dom: b.tensor(&tx, &curried.cod)?, ..ev },
                &t.apply_mor(&b.tensor_mor(&t.mu(x)?, &idm(t, y))?)?,
            ])
        }
    }
}

pub(crate) fn record<K: Field>(r: &mut CheckReport, name: String, lhs: Result<Mor<K>, MonadError>, rhs: Result<Mor<K>, MonadError>) {
    match (lhs, rhs) {
        (Ok(l), Ok(rr)) => {
            let dom = l.dom.name.clone();
            r.equal(name, &l.mat, &rr.mat, |c| format!("basis vector {c} of {dom}"));
        }
        (Err(e), _) | (_, Err(e)) => r.fail(name, Some(e.to_string())),
    }
}

/// Pairs `(X, Y)` of probes with `dim X · dim Y` within the hom-size limit.
pub(crate) fn small_pairs<'p, K: Field>(probes: &'p [Obj<K>], limits: SweepLimits) -> Vec<(&'p Obj<K>, &'p Obj<K>)> {
    let mut out = Vec::new();
    for x in probes {
        for y in probes {
            if x.dim * y.dim <= limits.max_hom_size {
                out.push((x, y));
            }
        }
    }
    out
}

type Sides<K> = (Result<Mor<K>, MonadError>, Result<Mor<K>, MonadError>);

/// Both sides of the two defining axioms of a binary antipode at `(X, Y)`.
pub fn antipode_axiom_sides<K: Field, T: Bimonad<K> + ?Sized>(
    s: &BinaryAntipode<'_, K>,
    t: &T,
    x: &Obj<K>,
    y: &Obj<K>,
) -> Result<[Sides<K>; 2], MonadError> {
    let b = t.backend();
    let f = t.field();
    let side = s.side;
    let (tx, ty) = (t.apply(x)?, t.apply(y)?);
    let u = hom_obj(b, &tx, y, side)?;
    let ix = idm(t, x);
    let itx = idm(t, &tx);
    let lhs1 = (|| {
        let restrict = hom_mor(b, &t.eta(x)?, &idm(t, y), side)?;
        let inner = match side {
            Side::Left => b.tensor_mor(&restrict, &ix)?,
            Side::Right => b.tensor_mor(&ix, &restrict)?,
        };
        t.apply_mor(&inner.then(&eval(b, x, y, side, f)?)?)
    })();
    let rhs1 = (|| {
        let pre = t.apply_mor(&hom_mor(b, &t.mu(x)?, &idm(t, y), side)?)?;
        let comp = pre.then(&s.at(&tx, y)?)?;
        let (t2, wide) = match side {
            Side::Left => (t.t2(&u, x)?, b.tensor_mor(&comp, &itx)?),
            Side::Right => (t.t2(x, &u)?, b.tensor_mor(&itx, &comp)?),
        };
        let ev = eval(b, &tx, &ty, side, f)?;
        compose_all(&[&t2, &wide, &Mor { dom: wide.cod.clone(), ..ev }])
    })();
    let lhs2 = (|| {
        let ity = idm(t, &ty);
        let widen = match side {
            Side::Left => b.tensor_mor(&ity, &t.eta(x)?)?,
            Side::Right => b.tensor_mor(&t.eta(x)?, &ity)?,
        };
        coeval(b, x, &ty, side, f)?.then(&hom_mor(b, &ix, &widen, side)?)
    })();
    let rhs2 = (|| {
        let (inner, fold) = match side {
            Side::Left => (b.tensor(y, &tx)?, t.t2(y, &tx)?.then(&b.tensor_mor(&idm(t, &ty), &t.mu(x)?)?)?),
            Side::Right => (b.tensor(&tx, y)?, t.t2(&tx, y)?.then(&b.tensor_mor(&t.mu(x)?, &idm(t, &ty))?)?),
        };
        let lift = t.apply_mor(&coeval(b, &tx, y, side, f)?)?;
        compose_all(&[&lift, &s.at(x, &inner)?, &hom_mor(b, &ix, &fold, side)?])
    })();
    Ok([(lhs1, rhs1), (lhs2, rhs2)])
}

/// The two defining axioms of a binary antipode on every small probe pair.
pub fn antipode_axiom_check<K: Field, T: Bimonad<K> + ?Sized>(
    s: &BinaryAntipode<'_, K>,
    t: &T,
    probes: &[Obj<K>],
    limits: SweepLimits,
) -> Result<CheckReport, MonadError> {
    let mut r = CheckReport::new();
    for (x, y) in small_pairs(probes, limits) {
        let tag = format!("({}, {})", x.name, y.name);
        let [(l1, r1), (l2, r2)] = antipode_axiom_sides(s, t, x, y)?;
        record(&mut r, format!("{} antipode axiom 1 at {tag}", s.side.name()), l1, r1);
        record(&mut r, format!("{} antipode axiom 2 at {tag}", s.side.name()), l2, r2);
    }
    Ok(r)
}

/// The currying isomorphisms. Left: `[X⊗Y,Z] → [X,[Y,Z]]`.
/// Right: `[Y⊗X,Z]ʳ → [X,[Y,Z]ʳ]ʳ`.
pub fn currying_iso<K: Field>(b: &crate::monadrep::Backend<K>, x: &Obj<K>, y: &Obj<K>, z: &Obj<K>, side: Side, f: &K) -> Result<Mor<K>, MonadError> {
    match side {
        Side::Left => {
            let xy = b.tensor(x, y)?;
            let w = hom_obj(b, &xy, z, side)?;
            let ev = eval(b, &xy, z, side, f)?;
            let wx = b.tensor(&w, x)?;
            let inner = curry(b, &wx, y, &Mor { dom: b.tensor(&wx, y)?, ..ev }, side)?;
            curry(b, &w, x, &inner, side)
        }
        Side::Right => {
            let yx = b.tensor(y, x)?;
            let w = hom_obj(b, &yx, z, side)?;
            let ev = eval(b, &yx, z, side, f)?;
            let xw = b.tensor(x, &w)?;
            let inner = curry(b, &xw, y, &Mor { dom: b.tensor(y, &xw)?, ..ev }, side)?;
            curry(b, &w, x, &inner, side)
        }
    }
}

fn currying_iso_inverse<K: Field>(b: &crate::monadrep::Backend<K>, x: &Obj<K>, y: &Obj<K>, z: &Obj<K>, side: Side, f: &K) -> Result<Mor<K>, MonadError> {
    let yz = hom_obj(b, y, z, side)?;
    let v = hom_obj(b, x, &yz, side)?;
    let ev_outer = eval(b, x, &yz, side, f)?;
    let ev_inner = eval(b, y, z, side, f)?;
    match side {
        Side::Left => {
            let xy = b.tensor(x, y)?;
            let first = b.tensor_mor(&ev_outer, &Mor::identity(y, f))?;
            let phi = first.then(&ev_inner)?;
            curry(b, &v, &xy, &Mor { dom: b.tensor(&v, &xy)?, ..phi }, side)
        }
        Side::Right => {
            let yx = b.tensor(y, x)?;
            let first = b.tensor_mor(&Mor::identity(y, f), &ev_outer)?;
            let phi = first.then(&ev_inner)?;
            curry(b, &v, &yx, &Mor { dom: b.tensor(&yx, &v)?, ..phi }, side)
        }
    }
}

/// The multiplicativity, unit, comonoidality and counit identities of a
/// binary antipode, on the small probe pairs and triples.
pub fn antipode_property_suite<K: Field, T: Bimonad<K> + ?Sized>(
    s: &BinaryAntipode<'_, K>,
    t: &T,
    probes: &[Obj<K>],
    limits: SweepLimits,
) -> Result<CheckReport, MonadError> {
    let b = t.backend();
    let f = t.field();
    let side = s.side;
    let sn = side.name();
    let mut r = CheckReport::new();
    let one = b.unit();
    for (x, y) in small_pairs(probes, limits) {
        let tag = format!("({}, {})", x.name, y.name);
        let (tx, ty) = (t.apply(x)?, t.apply(y)?);
        let u = hom_obj(b, &tx, y, side)?;
        record(
            &mut r,
            format!("{sn} s∘μ = [X,μ_Y] s T(s) T²[μ_X,Y] at {tag}"),
            (|| t.mu(&u)?.then(&s.at(x, y)?))(),
            (|| {
                let pull = hom_mor(b, &t.mu(x)?, &idm(t, y), side)?;
                compose_all(&[
                    &t.apply_mor(&t.apply_mor(&pull)?)?,
                    &t.apply_mor(&s.at(&tx, y)?)?,
                    &s.at(x, &ty)?,
                    &hom_mor(b, &idm(t, x), &t.mu(y)?, side)?,
                ])
            })(),
        );
        record(
            &mut r,
            format!("{sn} s∘η = [η_X, η_Y] at {tag}"),
            (|| t.eta(&u)?.then(&s.at(x, y)?))(),
            (|| hom_mor(b, &t.eta(x)?, &t.eta(y)?, side))(),
        );
    }
    for x in probes {
        record(
            &mut r,
            format!("{sn} s_(1,X) T[T₀,X] = id at {}", x.name),
            (|| t.apply_mor(&hom_mor(b, &t.t0()?, &idm(t, x), side)?)?.then(&s.at(&one, x)?))(),
            Ok(idm(t, &t.apply(x)?)),
        );
    }
    for x in probes {
        for y in probes {
            for z in probes {
                if x.dim * y.dim * z.dim > limits.max_hom_size {
                    continue;
                }
                let tag = format!("({}, {}, {})", x.name, y.name, z.name);
                let (tx, ty, tz) = (t.apply(x)?, t.apply(y)?, t.apply(z)?);
                let lhs = (|| {
                    // T[TX,[TY,Z]] → T[TX⊗TY,Z] → T[T(X⊗Y),Z] → [X⊗Y,TZ] → [X,[Y,TZ]]
                    let (first, second, pair, t2) = match side {
                        Side::Left => (&tx, &ty, b.tensor(x, y)?, t.t2(x, y)?),
                        Side::Right => (&tx, &ty, b.tensor(y, x)?, t.t2(y, x)?),
                    };
                    compose_all(&[
                        &t.apply_mor(&currying_iso_inverse(b, first, second, z, side, f)?)?,
                        &t.apply_mor(&hom_mor(b, &t2, &idm(t, z), side)?)?,
                        &s.at(&pair, z)?,
                        &currying_iso(b, x, y, &tz, side, f)?,
                    ])
                })();
                let rhs = (|| {
                    let inner = hom_obj(b, &ty, z, side)?;
                    s.at(x, &inner)?.then(&hom_mor(b, &idm(t, x), &s.at(y, z)?, side)?)
                })();
                record(&mut r, format!("{sn} s comonoidal at {tag}"), lhs, rhs);
            }
        }
    }
    Ok(r)
}
