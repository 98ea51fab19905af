//! Duals and internal Homs on the autonomous backends.
//!
//! Left: `[X,Y] = Y⊗ˇX` with `ev = Y⊗lev_X`, `lev_X: ˇX⊗X → 1`,
//! `lcoev_X: 1 → X⊗ˇX`. Right: `[X,Y]ʳ = X^∨⊗Y` with `rev_X: X⊗X^∨ → 1`,
//! `rcoev_X: 1 → X^∨⊗X`. Over `ModH` the left dual is twisted by `S` and
//! the right dual by `S⁻¹`.

use serde::Serialize;

use crate::exactalg::{id, Field, Matrix};
use crate::hopfcore::{HopfAlgebraData, Obj};
use crate::monadrep::{Backend, MonadError, Mor};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

fn dual_action<K: Field>(h: &HopfAlgebraData<K>, action: &Matrix<K>, n: usize, twist: &Matrix<K>) -> Matrix<K> {
    // (b·ξ)(v) = ξ(twist(b)·v), so entry (i, b·n + j) is Σ_c twist[c,b]·action[j, c·n + i]
    let f = h.field();
    let hd = h.dim();
    let mut trip = Vec::new();
    for b in 0..hd {
        for (c, coeff) in twist.column(b).into_iter().enumerate() {
            if f.is_zero(&coeff) {
                continue;
            }
            for i in 0..n {
                for (j, x) in action.column(c * n + i).into_iter().enumerate() {
                    if !f.is_zero(&x) {
                        trip.push((i, b * n + j, f.mul(&coeff, &x)));
                    }
                }
            }
        }
    }
    Matrix::from_triplets(f, n, hd * n, trip)
}

fn dual<K: Field>(b: &Backend<K>, x: &Obj<K>, side: Side) -> Result<Obj<K>, MonadError> {
    let name = match side {
        Side::Left => format!("ˇ{}", x.name),
        Side::Right => format!("{}^∨", x.name),
    };
    let out = match b {
        Backend::VectK => Obj::plain(x.dim),
        Backend::Graded(chi) => {
            let degrees = x.degrees().ok_or_else(|| MonadError::ContextMismatch(format!("{} is not graded", x.name)))?;
            Obj::graded(degrees.iter().map(|d| chi.reduce(&d.iter().map(|g| -g).collect::<Vec<_>>())).collect())
        }
        Backend::ModH(h) => {
            let action = x.action().ok_or_else(|| MonadError::ContextMismatch(format!("{} is not a module", x.name)))?;
            let twist = match side {
                Side::Left => &h.antipode,
                Side::Right => &h.antipode_inv,
            };
            Obj::module(dual_action(h, action, x.dim, twist))
        }
        Backend::Bimodules(_) => {
            return Err(MonadError::ContextMismatch("duals are not available on the bimodule backend".into()))
        }
    };
    Ok(out.named(name))
}

/// `ˇX`.
pub fn left_dual<K: Field>(b: &Backend<K>, x: &Obj<K>) -> Result<Obj<K>, MonadError> {
    dual(b, x, Side::Left)
}

/// `X^∨`.
pub fn right_dual<K: Field>(b: &Backend<K>, x: &Obj<K>) -> Result<Obj<K>, MonadError> {
    dual(b, x, Side::Right)
}

fn pairing<K: Field>(field: &K, n: usize) -> Matrix<K> {
    Matrix::from_triplets(field, 1, n * n, (0..n).map(|j| (0, j * n + j, field.one())))
}

/// `lev_X: ˇX⊗X → 1`.
pub fn lev<K: Field>(b: &Backend<K>, x: &Obj<K>, field: &K) -> Result<Mor<K>, MonadError> {
    Mor::new(b.tensor(&left_dual(b, x)?, x)?, b.unit(), pairing(field, x.dim))
}

/// `lcoev_X: 1 → X⊗ˇX`.
pub fn lcoev<K: Field>(b: &Backend<K>, x: &Obj<K>, field: &K) -> Result<Mor<K>, MonadError> {
    Mor::new(b.unit(), b.tensor(x, &left_dual(b, x)?)?, pairing(field, x.dim).transpose())
}

/// `rev_X: X⊗X^∨ → 1`.
pub fn rev<K: Field>(b: &Backend<K>, x: &Obj<K>, field: &K) -> Result<Mor<K>, MonadError> {
    Mor::new(b.tensor(x, &right_dual(b, x)?)?, b.unit(), pairing(field, x.dim))
}

/// `rcoev_X: 1 → X^∨⊗X`.
pub fn rcoev<K: Field>(b: &Backend<K>, x: &Obj<K>, field: &K) -> Result<Mor<K>, MonadError> {
    Mor::new(b.unit(), b.tensor(&right_dual(b, x)?, x)?, pairing(field, x.dim).transpose())
}

/// `ˇf: ˇY → ˇX` for `f: X → Y` (same matrix for the right dual).
pub fn dual_mor<K: Field>(b: &Backend<K>, f: &Mor<K>, side: Side) -> Result<Mor<K>, MonadError> {
    Mor::new(dual(b, &f.cod, side)?, dual(b, &f.dom, side)?, f.mat.transpose())
}

/// The internal Hom object on the given side.
pub fn hom_obj<K: Field>(b: &Backend<K>, x: &Obj<K>, y: &Obj<K>, side: Side) -> Result<Obj<K>, MonadError> {
    let o = match side {
        Side::Left => b.tensor(y, &left_dual(b, x)?)?,
        Side::Right => b.tensor(&right_dual(b, x)?, y)?,
    };
    let name = match side {
        Side::Left => format!("[{},{}]", x.name, y.name),
        Side::Right => format!("[{},{}]ʳ", x.name, y.name),
    };
    Ok(o.named(name))
}

/// `[f, g]: [X,Y] → [X',Y']` for `f: X' → X`, `g: Y → Y'`.
pub fn hom_mor<K: Field>(b: &Backend<K>, f: &Mor<K>, g: &Mor<K>, side: Side) -> Result<Mor<K>, MonadError> {
    let mat = match side {
        Side::Left => g.mat.tensor(&f.mat.transpose()),
        Side::Right => f.mat.transpose().tensor(&g.mat),
    };
    Mor::new(hom_obj(b, &f.cod, &g.dom, side)?, hom_obj(b, &f.dom, &g.cod, side)?, mat)
}

/// Left: `ev: [X,Y]⊗X → Y`. Right: `ev: X⊗[X,Y]ʳ → Y`.
pub fn eval<K: Field>(b: &Backend<K>, x: &Obj<K>, y: &Obj<K>, side: Side, field: &K) -> Result<Mor<K>, MonadError> {
    let h = hom_obj(b, x, y, side)?;
    let (dom, mat) = match side {
        Side::Left => (b.tensor(&h, x)?, id(field, y.dim).tensor(&pairing(field, x.dim))),
        Side::Right => (b.tensor(x, &h)?, pairing(field, x.dim).tensor(&id(field, y.dim))),
    };
    Mor::new(dom, y.clone(), mat)
}

/// Left: `coev: W → [X, W⊗X]`. Right: `coev: W → [X, X⊗W]ʳ`.
pub fn coeval<K: Field>(b: &Backend<K>, x: &Obj<K>, w: &Obj<K>, side: Side, field: &K) -> Result<Mor<K>, MonadError> {
    let (cod, mat) = match side {
        Side::Left => (hom_obj(b, x, &b.tensor(w, x)?, side)?, id(field, w.dim).tensor(&pairing(field, x.dim).transpose())),
        Side::Right => (hom_obj(b, x, &b.tensor(x, w)?, side)?, pairing(field, x.dim).transpose().tensor(&id(field, w.dim))),
    };
    Mor::new(w.clone(), cod, mat)
}

/// The adjunct of `φ`. Left: `φ: W⊗X → Z` gives `W → [X,Z]`.
/// Right: `φ: X⊗W → Z` gives `W → [X,Z]ʳ`.
pub fn curry<K: Field>(b: &Backend<K>, w: &Obj<K>, x: &Obj<K>, phi: &Mor<K>, side: Side) -> Result<Mor<K>, MonadError> {
    let (nw, nx, nz) = (w.dim, x.dim, phi.cod.dim);
    if phi.dom.dim != nw * nx {
        return Err(MonadError::Shape(format!("cannot curry a map out of {} over {}", phi.dom.name, x.name)));
    }
    let trip = phi.mat.entries().map(|(z, col, v)| match side {
        // φ[z, w·nx + j] ↦ entry (z·nx + j, w)
        Side::Left => (z * nx + col % nx, col / nx, v.clone()),
        // φ[z, j·nw + w] ↦ entry (j·nz + z, w)
        Side::Right => ((col / nw) * nz + z, col % nw, v.clone()),
    });
    let mat = Matrix::from_triplets(phi.field(), nz * nx, nw, trip);
    Mor::new(w.clone(), hom_obj(b, x, &phi.cod, side)?, mat)
}

/// The inverse of [`curry`]: `ψ: W → [X,Z]` gives `W⊗X → Z` (left) or
/// `X⊗W → Z` (right).
pub fn uncurry<K: Field>(b: &Backend<K>, x: &Obj<K>, z: &Obj<K>, psi: &Mor<K>, side: Side) -> Result<Mor<K>, MonadError> {
    let (nw, nx, nz) = (psi.dom.dim, x.dim, z.dim);
    if psi.cod.dim != nz * nx {
        return Err(MonadError::Shape(format!("{} is not a map into [{}, {}]", psi.cod.name, x.name, z.name)));
    }
    let trip = psi.mat.entries().map(|(row, w, v)| match side {
        Side::Left => (row / nx, w * nx + row % nx, v.clone()),
        Side::Right => (row % nz, (row / nz) * nw + w, v.clone()),
    });
    let mat = Matrix::from_triplets(psi.field(), nz, nw * nx, trip);
    let dom = match side {
        Side::Left => b.tensor(&psi.dom, x)?,
        Side::Right => b.tensor(x, &psi.dom)?,
    };
    Mor::new(dom, z.clone(), mat)
}

/// A chosen internal Hom with its evaluation and coevaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalHom<K: Field> {
    pub side: Side,
    pub source: Obj<K>,
    pub target: Obj<K>,
    pub hom: Obj<K>,
    pub eval: Mor<K>,
    /// `coev: Y → [X, Y⊗X]` (left) or `Y → [X, X⊗Y]ʳ` (right).
    pub coeval: Mor<K>,
}

impl<K: Field> InternalHom<K> {
    /// Both triangle identities of the adjunction, and that `ev`/`coev` are
    /// morphisms of the backend.
    pub fn check(&self, b: &Backend<K>, field: &K) -> Result<CheckReport, MonadError> {
        let (x, y, side) = (&self.source, &self.target, self.side);
        let mut r = CheckReport::new();
        let ix = Mor::identity(x, field);
        let co = coeval(b, x, y, side, field)?;
        let wx = match side {
            Side::Left => b.tensor(y, x)?,
            Side::Right => b.tensor(x, y)?,
        };
        let ev_wide = eval(b, x, &wx, side, field)?;
        let lifted = match side {
            Side::Left => b.tensor_mor(&co, &ix)?,
            Side::Right => b.tensor_mor(&ix, &co)?,
        };
        r.record("triangle on Y⊗X", (&ev_wide.mat * &lifted.mat).is_identity(), None);
        let co_h = coeval(b, x, &self.hom, side, field)?;
        let push = hom_mor(b, &ix, &self.eval, side)?;
        r.record("triangle on [X,Y]", (&push.mat * &co_h.mat).is_identity(), None);
        r.record("ev is a morphism", b.morphism_violation(&self.eval).is_none(), b.morphism_violation(&self.eval));
        r.record("coev is a morphism", b.morphism_violation(&self.coeval).is_none(), b.morphism_violation(&self.coeval));
        Ok(r)
    }
}

/// Builds `[X,Y]` on the given side and verifies its triangle identities.
pub fn internal_hom<K: Field>(b: &Backend<K>, x: &Obj<K>, y: &Obj<K>, side: Side, field: &K) -> Result<InternalHom<K>, MonadError> {
    let ih = InternalHom {
        side,
        source: x.clone(),
        target: y.clone(),
        hom: hom_obj(b, x, y, side)?,
        eval: eval(b, x, y, side, field)?,
        coeval: coeval(b, x, y, side, field)?,
    };
    let r = ih.check(b, field)?;
    if let Some(f) = r.first_failure() {
        return Err(MonadError::Hopf(crate::hopfcore::HopfError::InternalInconsistency(format!(
            "internal hom [{}, {}]: {}",
            x.name, y.name, f.name
        ))));
    }
    Ok(ih)
}
