//! The bimonad interface, fusion operators and the generic axiom sweeps.

use serde::Serialize;

use super::backend::{compose_all, Backend, Mor, MonadError};
use crate::exactalg::Field;
use crate::hopfcore::Obj;
use crate::report::{CheckItem, CheckReport};

/// A bimonad evaluated object by object: `(T, μ, η, T₂, T₀)`.
pub trait Bimonad<K: Field> {
    fn name(&self) -> String;
    fn backend(&self) -> &Backend<K>;
    fn field(&self) -> &K;
    /// `T(X)`.
    fn apply(&self, x: &Obj<K>) -> Result<Obj<K>, MonadError>;
    /// `T(f)`.
    fn apply_mor(&self, f: &Mor<K>) -> Result<Mor<K>, MonadError>;
    /// `μ_X: T²X → TX`.
    fn mu(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError>;
    /// `η_X: X → TX`.
    fn eta(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError>;
    /// `T₂(X,Y): T(X⊗Y) → TX⊗TY`.
    fn t2(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError>;
    /// `T₀: T1 → 1`.
    fn t0(&self) -> Result<Mor<K>, MonadError>;

    /// Inverse of `H^l_{X,Y}`, or `None` with the rank when singular.
    fn fusion_left_inverse(&self, x: &Obj<K>, y: &Obj<K>) -> Result<(Option<Mor<K>>, usize), MonadError> {
        invert(&fusion_left(self, x, y)?)
    }

    /// Inverse of `H^r_{X,Y}`, or `None` with the rank when singular.
    fn fusion_right_inverse(&self, x: &Obj<K>, y: &Obj<K>) -> Result<(Option<Mor<K>>, usize), MonadError> {
        invert(&fusion_right(self, x, y)?)
    }
}

/// Inverse of a morphism, or `None` together with its rank.
pub fn invert<K: Field>(f: &Mor<K>) -> Result<(Option<Mor<K>>, usize), MonadError> {
    let inv = f.mat.try_invert();
    let m = match inv.inverse {
        Some(m) => Some(Mor::new(f.cod.clone(), f.dom.clone(), m)?),
        None => None,
    };
    Ok((m, inv.rank))
}

fn ident<K: Field, T: Bimonad<K> + ?Sized>(t: &T, x: &Obj<K>) -> Mor<K> {
    Mor::identity(x, t.field())
}

fn tens<K: Field, T: Bimonad<K> + ?Sized>(t: &T, f: &Mor<K>, g: &Mor<K>) -> Result<Mor<K>, MonadError> {
    t.backend().tensor_mor(f, g)
}

fn tensor_obj<K: Field, T: Bimonad<K> + ?Sized>(t: &T, x: &Obj<K>, y: &Obj<K>) -> Result<Obj<K>, MonadError> {
    t.backend().tensor(x, y)
}

/// `H^l_{X,Y} = (TX⊗μ_Y)T₂(X,TY): T(X⊗TY) → TX⊗TY`.
pub fn fusion_left<K: Field, T: Bimonad<K> + ?Sized>(t: &T, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
    let ty = t.apply(y)?;
    let tx = t.apply(x)?;
    let step = tens(t, &ident(t, &tx), &t.mu(y)?)?;
    t.t2(x, &ty)?.then(&step)
}

/// `H^r_{X,Y} = (μ_X⊗TY)T₂(TX,Y): T(TX⊗Y) → TX⊗TY`.
pub fn fusion_right<K: Field, T: Bimonad<K> + ?Sized>(t: &T, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
    let tx = t.apply(x)?;
    let ty = t.apply(y)?;
    let step = tens(t, &t.mu(x)?, &ident(t, &ty))?;
    t.t2(&tx, y)?.then(&step)
}

/// Bounds on the size of the sweeps over probe tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepLimits {
    /// Tuples whose largest intermediate object is estimated above this
    /// dimension are skipped (and counted in the report).
    pub max_dim: usize,
    /// Naturality is checked only between probes with `dim X · dim Y` at most this.
    pub max_hom_size: usize,
}

impl Default for SweepLimits {
    fn default() -> Self {
        SweepLimits { max_dim: 4096, max_hom_size: 64 }
    }
}

/// Size estimates for probe tuples: `ratio^depth · Π dims`.
struct Sizer {
    ratio: usize,
    limits: SweepLimits,
    skipped: usize,
}

impl Sizer {
    fn new<K: Field, T: Bimonad<K> + ?Sized>(t: &T, probes: &[Obj<K>], limits: SweepLimits) -> Result<Self, MonadError> {
        let mut ratio = 1;
        for p in probes {
            let tp = t.apply(p)?;
            ratio = ratio.max(tp.dim.div_ceil(p.dim.max(1)));
        }
        Ok(Sizer { ratio, limits, skipped: 0 })
    }

    fn allows(&mut self, depth: u32, dims: &[usize]) -> bool {
        let est = self.ratio.saturating_pow(depth).saturating_mul(dims.iter().product::<usize>().max(1));
        let ok = est <= self.limits.max_dim;
        if !ok {
            self.skipped += 1;
        }
        ok
    }

    fn note(&self, r: &mut CheckReport, what: &str) {
        if self.skipped > 0 {
            r.pass(format!("{what}: tuple coverage"));
            r.annotate(format!("skipped {} probe tuples above dimension {}", self.skipped, self.limits.max_dim));
        }
    }
}

fn record_eq<K: Field>(r: &mut CheckReport, name: String, lhs: Result<Mor<K>, MonadError>, rhs: Result<Mor<K>, MonadError>) {
    match (lhs, rhs) {
        (Ok(l), Ok(rr)) => {
            if l.mat.shape() != rr.mat.shape() {
                r.fail(name, Some(format!("shapes {:?} vs {:?}", l.mat.shape(), rr.mat.shape())));
            } else {
                let dom = l.dom.name.clone();
                r.equal(name, &l.mat, &rr.mat, |c| format!("basis vector {c} of {dom}"));
            }
        }
        (Err(e), _) | (_, Err(e)) => r.fail(name, Some(e.to_string())),
    }
}

fn pairs<K: Field>(probes: &[Obj<K>]) -> impl Iterator<Item = (&Obj<K>, &Obj<K>)> {
    probes.iter().flat_map(move |x| probes.iter().map(move |y| (x, y)))
}

fn triples<K: Field>(probes: &[Obj<K>]) -> impl Iterator<Item = (&Obj<K>, &Obj<K>, &Obj<K>)> {
    probes.iter().flat_map(move |x| probes.iter().flat_map(move |y| probes.iter().map(move |z| (x, y, z))))
}

/// Monad, comonoidal-functor and comonoidal-monad axioms on the probes,
/// plus naturality of `μ`, `η` and `T₂` along basis morphisms between probes.
pub fn check_bimonad_axioms<K: Field, T: Bimonad<K> + ?Sized>(t: &T, probes: &[Obj<K>], limits: SweepLimits) -> Result<CheckReport, MonadError> {
    let mut r = CheckReport::new();
    let mut sizer = Sizer::new(t, probes, limits)?;
    let one = t.backend().unit();
    for x in probes {
        let n = &x.name;
        if !sizer.allows(3, &[x.dim]) {
            continue;
        }
        let tx = t.apply(x)?;
        let mu = t.mu(x)?;
        record_eq(
            &mut r,
            format!("μ associative at {n}"),
            t.apply_mor(&mu).and_then(|tm| tm.then(&mu)),
            t.mu(&tx).and_then(|m| m.then(&mu)),
        );
        record_eq(&mut r, format!("μ∘η_T = id at {n}"), t.eta(&tx).and_then(|e| e.then(&mu)), Ok(ident(t, &tx)));
        record_eq(
            &mut r,
            format!("μ∘T(η) = id at {n}"),
            t.eta(x).and_then(|e| t.apply_mor(&e)).and_then(|te| te.then(&mu)),
            Ok(ident(t, &tx)),
        );
        let t0 = t.t0()?;
        record_eq(
            &mut r,
            format!("left counit of T₂ at {n}"),
            t.t2(&one, x).and_then(|d| d.then(&tens(t, &t0, &ident(t, &tx))?)),
            Ok(ident(t, &tx)),
        );
        record_eq(
            &mut r,
            format!("right counit of T₂ at {n}"),
            t.t2(x, &one).and_then(|d| d.then(&tens(t, &ident(t, &tx), &t0)?)),
            Ok(ident(t, &tx)),
        );
    }
    let t0 = t.t0()?;
    record_eq(&mut r, "T₀∘μ_1 = T₀∘T(T₀)".into(), t.mu(&one).and_then(|m| m.then(&t0)), t.apply_mor(&t0).and_then(|tt| tt.then(&t0)));
    record_eq(&mut r, "T₀∘η_1 = id".into(), t.eta(&one).and_then(|e| e.then(&t0)), Ok(ident(t, &one)));

    for (x, y) in pairs(probes) {
        if !sizer.allows(2, &[x.dim, y.dim]) {
            continue;
        }
        let tag = format!("({}, {})", x.name, y.name);
        let xy = tensor_obj(t, x, y)?;
        let t2 = t.t2(x, y)?;
        let (tx, ty) = (t.apply(x)?, t.apply(y)?);
        record_eq(
            &mut r,
            format!("μ comonoidal at {tag}"),
            t.mu(&xy).and_then(|m| m.then(&t2)),
            (|| compose_all(&[&t.apply_mor(&t2)?, &t.t2(&tx, &ty)?, &tens(t, &t.mu(x)?, &t.mu(y)?)?]))(),
        );
        record_eq(
            &mut r,
            format!("η comonoidal at {tag}"),
            t.eta(&xy).and_then(|e| e.then(&t2)),
            tens(t, &t.eta(x)?, &t.eta(y)?),
        );
    }
    for (x, y, z) in triples(probes) {
        if !sizer.allows(1, &[x.dim, y.dim, z.dim]) {
            continue;
        }
        let tag = format!("({}, {}, {})", x.name, y.name, z.name);
        let xy = tensor_obj(t, x, y)?;
        let yz = tensor_obj(t, y, z)?;
        let (tx, tz) = (t.apply(x)?, t.apply(z)?);
        record_eq(
            &mut r,
            format!("T₂ coassociative at {tag}"),
            (|| t.t2(&xy, z)?.then(&tens(t, &t.t2(x, y)?, &ident(t, &tz))?))(),
            (|| t.t2(x, &yz)?.then(&tens(t, &ident(t, &tx), &t.t2(y, z)?)?))(),
        );
    }
    check_naturality(t, probes, limits, &mut r)?;
    sizer.note(&mut r, "bimonad axioms");
    Ok(r)
}

fn check_naturality<K: Field, T: Bimonad<K> + ?Sized>(t: &T, probes: &[Obj<K>], limits: SweepLimits, r: &mut CheckReport) -> Result<(), MonadError> {
    let field = t.field();
    for (x, y) in pairs(probes) {
        if x.dim * y.dim > limits.max_hom_size {
            continue;
        }
        let basis = t.backend().hom_basis(x, y, field);
        let mut bad_eta = None;
        let mut bad_mu = None;
        let mut bad_t2 = None;
        let (eta_x, eta_y) = (t.eta(x)?, t.eta(y)?);
        let (mu_x, mu_y) = (t.mu(x)?, t.mu(y)?);
        for (k, g) in basis.iter().enumerate() {
            let f = Mor::new(x.clone(), y.clone(), g.clone())?;
            let tf = t.apply_mor(&f)?;
            if eta_x.then(&tf)?.mat != f.then(&eta_y)?.mat {
                bad_eta.get_or_insert(k);
            }
            let ttf = t.apply_mor(&tf)?;
            if mu_x.then(&tf)?.mat != ttf.then(&mu_y)?.mat {
                bad_mu.get_or_insert(k);
            }
            for z in probes {
                if x.dim * z.dim > limits.max_hom_size {
                    continue;
                }
                let idz = ident(t, z);
                let tz = t.apply(z)?;
                let lhs = t.apply_mor(&tens(t, &f, &idz)?)?.then(&t.t2(y, z)?)?;
                let rhs = t.t2(x, z)?.then(&tens(t, &tf, &ident(t, &tz))?)?;
                let lhs2 = t.apply_mor(&tens(t, &idz, &f)?)?.then(&t.t2(z, y)?)?;
                let rhs2 = t.t2(z, x)?.then(&tens(t, &ident(t, &tz), &tf)?)?;
                if lhs.mat != rhs.mat || lhs2.mat != rhs2.mat {
                    bad_t2.get_or_insert(k);
                }
            }
        }
        let tag = format!("{} → {}", x.name, y.name);
        let w = |k: Option<usize>| k.map(|k| format!("basis morphism #{k}"));
        r.record(format!("η natural along {tag}"), bad_eta.is_none(), w(bad_eta));
        r.record(format!("μ natural along {tag}"), bad_mu.is_none(), w(bad_mu));
        r.record(format!("T₂ natural along {tag}"), bad_t2.is_none(), w(bad_t2));
    }
    Ok(())
}

/// The six left and six right fusion-operator identities and both pentagon
/// equations on all probe tuples within the size limits.
pub fn fusion_identity_suite<K: Field, T: Bimonad<K> + ?Sized>(t: &T, probes: &[Obj<K>], limits: SweepLimits) -> Result<CheckReport, MonadError> {
    let mut r = CheckReport::new();
    let mut sizer = Sizer::new(t, probes, limits)?;
    let one = t.backend().unit();
    let t0 = t.t0()?;
    for x in probes {
        if !sizer.allows(2, &[x.dim]) {
            continue;
        }
        let n = &x.name;
        let tx = t.apply(x)?;
        record_eq(
            &mut r,
            format!("(T₀⊗TX)H^l_(1,X) = μ_X at {n}"),
            fusion_left(t, &one, x).and_then(|h| h.then(&tens(t, &t0, &ident(t, &tx))?)),
            t.mu(x),
        );
        record_eq(
            &mut r,
            format!("(TX⊗T₀)H^l_(X,1) = T(X⊗T₀) at {n}"),
            fusion_left(t, x, &one).and_then(|h| h.then(&tens(t, &ident(t, &tx), &t0)?)),
            tens(t, &ident(t, x), &t0).and_then(|m| t.apply_mor(&m)),
        );
        record_eq(
            &mut r,
            format!("(TX⊗T₀)H^r_(X,1) = μ_X at {n}"),
            fusion_right(t, x, &one).and_then(|h| h.then(&tens(t, &ident(t, &tx), &t0)?)),
            t.mu(x),
        );
        record_eq(
            &mut r,
            format!("(T₀⊗TX)H^r_(1,X) = T(T₀⊗X) at {n}"),
            fusion_right(t, &one, x).and_then(|h| h.then(&tens(t, &t0, &ident(t, &tx))?)),
            tens(t, &t0, &ident(t, x)).and_then(|m| t.apply_mor(&m)),
        );
    }
    for (x, y) in pairs(probes) {
        if !sizer.allows(3, &[x.dim, y.dim]) {
            continue;
        }
        let tag = format!("({}, {})", x.name, y.name);
        let (tx, ty) = (t.apply(x)?, t.apply(y)?);
        let (ix, iy, itx, ity) = (ident(t, x), ident(t, y), ident(t, &tx), ident(t, &ty));
        let hl = fusion_left(t, x, y)?;
        let hr = fusion_right(t, x, y)?;
        let (mu_x, mu_y) = (t.mu(x)?, t.mu(y)?);
        let (eta_x, eta_y) = (t.eta(x)?, t.eta(y)?);
        let t2 = t.t2(x, y)?;

        record_eq(
            &mut r,
            format!("H^l T(X⊗μ_Y) = (TX⊗μ_Y) H^l_(X,TY) at {tag}"),
            (|| t.apply_mor(&tens(t, &ix, &mu_y)?)?.then(&hl))(),
            (|| fusion_left(t, x, &ty)?.then(&tens(t, &itx, &mu_y)?))(),
        );
        record_eq(
            &mut r,
            format!("H^l T(X⊗η_Y) = T₂ at {tag}"),
            (|| t.apply_mor(&tens(t, &ix, &eta_y)?)?.then(&hl))(),
            Ok(t2.clone()),
        );
        record_eq(
            &mut r,
            format!("H^l η = η_X⊗TY at {tag}"),
            (|| t.eta(&tensor_obj(t, x, &ty)?)?.then(&hl))(),
            tens(t, &eta_x, &ity),
        );
        record_eq(
            &mut r,
            format!("H^r T(μ_X⊗Y) = (μ_X⊗TY) H^r_(TX,Y) at {tag}"),
            (|| t.apply_mor(&tens(t, &mu_x, &iy)?)?.then(&hr))(),
            (|| fusion_right(t, &tx, y)?.then(&tens(t, &mu_x, &ity)?))(),
        );
        record_eq(
            &mut r,
            format!("H^r T(η_X⊗Y) = T₂ at {tag}"),
            (|| t.apply_mor(&tens(t, &eta_x, &iy)?)?.then(&hr))(),
            Ok(t2.clone()),
        );
        record_eq(
            &mut r,
            format!("H^r η = TX⊗η_Y at {tag}"),
            (|| t.eta(&tensor_obj(t, &tx, y)?)?.then(&hr))(),
            tens(t, &itx, &eta_y),
        );
    }
    for (x, y, z) in triples(probes) {
        if !sizer.allows(3, &[x.dim, y.dim, z.dim]) {
            continue;
        }
        let tag = format!("({}, {}, {})", x.name, y.name, z.name);
        let (tx, ty, tz) = (t.apply(x)?, t.apply(y)?, t.apply(z)?);
        let (ix, iz, itx, itz) = (ident(t, x), ident(t, z), ident(t, &tx), ident(t, &tz));
        let xy = tensor_obj(t, x, y)?;
        let yz = tensor_obj(t, y, z)?;
        let y_tz = tensor_obj(t, y, &tz)?;
        let x_ty = tensor_obj(t, x, &ty)?;
        let tx_y = tensor_obj(t, &tx, y)?;
        let ty_z = tensor_obj(t, &ty, z)?;

        record_eq(
            &mut r,
            format!("(T₂⊗TZ) H^l_(X⊗Y,Z) = (TX⊗H^l_(Y,Z)) T₂(X,Y⊗TZ) at {tag}"),
            (|| fusion_left(t, &xy, z)?.then(&tens(t, &t.t2(x, y)?, &itz)?))(),
            (|| t.t2(x, &y_tz)?.then(&tens(t, &itx, &fusion_left(t, y, z)?)?))(),
        );
        record_eq(
            &mut r,
            format!("(TX⊗T₂) H^r_(X,Y⊗Z) = (H^r_(X,Y)⊗TZ) T₂(TX⊗Y,Z) at {tag}"),
            (|| fusion_right(t, x, &yz)?.then(&tens(t, &itx, &t.t2(y, z)?)?))(),
            (|| t.t2(&tx_y, z)?.then(&tens(t, &fusion_right(t, x, y)?, &itz)?))(),
        );
        record_eq(
            &mut r,
            format!("left pentagon at {tag}"),
            (|| fusion_left(t, x, &y_tz)?.then(&tens(t, &itx, &fusion_left(t, y, z)?)?))(),
            (|| {
                compose_all(&[
                    &t.apply_mor(&tens(t, &ix, &fusion_left(t, y, z)?)?)?,
                    &fusion_left(t, &x_ty, z)?,
                    &tens(t, &fusion_left(t, x, y)?, &itz)?,
                ])
            })(),
        );
        record_eq(
            &mut r,
            format!("right pentagon at {tag}"),
            (|| fusion_right(t, &tx_y, z)?.then(&tens(t, &fusion_right(t, x, y)?, &itz)?))(),
            (|| {
                compose_all(&[
                    &t.apply_mor(&tens(t, &fusion_right(t, x, y)?, &iz)?)?,
                    &fusion_right(t, x, &ty_z)?,
                    &tens(t, &itx, &fusion_right(t, y, z)?)?,
                ])
            })(),
        );
    }
    sizer.note(&mut r, "fusion identities");
    Ok(r)
}

/// Invertibility verdicts for the fusion operators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfVerdicts {
    pub left_hopf: CheckItem,
    pub right_hopf: CheckItem,
    pub left_pre_hopf: CheckItem,
    pub right_pre_hopf: CheckItem,
}

impl HopfVerdicts {
    pub fn to_report(&self) -> CheckReport {
        CheckReport {
            items: vec![self.left_hopf.clone(), self.right_hopf.clone(), self.left_pre_hopf.clone(), self.right_pre_hopf.clone()],
        }
    }
}

fn verdict(name: &str, failure: Option<(String, String, usize, usize)>) -> CheckItem {
    match failure {
        None => CheckItem { name: name.into(), passed: true, witness: None, detail: None },
        Some((x, y, rank, size)) => CheckItem {
            name: name.into(),
            passed: false,
            witness: Some(format!("({x}, {y})")),
            detail: Some(format!("rank {rank}, domain dim {size}")),
        },
    }
}

/// Invertibility of `H^l_{X,Y}`, `H^r_{X,Y}` on all probe pairs (Hopf) and
/// of `H^l_{1,X}`, `H^r_{X,1}` (pre-Hopf); each verdict names the first
/// failing pair.
pub fn hopf_check<K: Field, T: Bimonad<K> + ?Sized>(t: &T, probes: &[Obj<K>]) -> Result<HopfVerdicts, MonadError> {
    let one = t.backend().unit();
    let singular = |res: (Option<Mor<K>>, usize), dom: usize, x: &Obj<K>, y: &Obj<K>, codim: usize| {
        let (inv, rank) = res;
        (inv.is_none() || dom != codim).then(|| (x.name.clone(), y.name.clone(), rank, dom))
    };
    let mut left = None;
    let mut right = None;
    for (x, y) in pairs(probes) {
        if left.is_none() {
            let h = fusion_left(t, x, y)?;
            left = singular(t.fusion_left_inverse(x, y)?, h.dom.dim, x, y, h.cod.dim);
        }
        if right.is_none() {
            let h = fusion_right(t, x, y)?;
            right = singular(t.fusion_right_inverse(x, y)?, h.dom.dim, x, y, h.cod.dim);
        }
    }
    let mut left_pre = None;
    let mut right_pre = None;
    for x in probes {
        if left_pre.is_none() {
            let h = fusion_left(t, &one, x)?;
            left_pre = singular(t.fusion_left_inverse(&one, x)?, h.dom.dim, &one, x, h.cod.dim);
        }
        if right_pre.is_none() {
            let h = fusion_right(t, x, &one)?;
            right_pre = singular(t.fusion_right_inverse(x, &one)?, h.dom.dim, x, &one, h.cod.dim);
        }
    }
    Ok(HopfVerdicts {
        left_hopf: verdict("left Hopf", left),
        right_hopf: verdict("right Hopf", right),
        left_pre_hopf: verdict("left pre-Hopf", left_pre),
        right_pre_hopf: verdict("right pre-Hopf", right_pre),
    })
}
