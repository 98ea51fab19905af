use std::sync::Arc;

use rand::Rng;

use crate::exactalg::random::random_invertible;
use crate::exactalg::{chain, flip, id, permute_factors, quotient_by_span_dim, Field, Matrix};
use crate::hopfcore::Obj;
use crate::monadrep::bimodule::{atom_object, join_map, split_map, Atom};
use crate::monadrep::{fusion_left, fusion_right, Backend, Bimonad, MonadError, Mor};
use crate::report::CheckReport;

use super::galois::{GaloisMap, GaloisMaps};
use super::structure::Bialgebroid;
use super::AlgebroidError;

/// `T_A(M) = A⊗_{R^e}M` on `R`-bimodules, with `μ` from the product of `A`,
/// `η` from its unit, `T₂` from `Δ` and `T₀` from `ε`.
pub struct BialgebroidBimonad<K: Field> {
    pub bialgebroid: Arc<Bialgebroid<K>>,
    backend: Backend<K>,
}

/// `T_A(X)` with its presentation as a quotient of `A⊗X`.
struct Applied<K: Field> {
    obj: Obj<K>,
    projection: Matrix<K>,
    section: Matrix<K>,
}

impl<K: Field> BialgebroidBimonad<K> {
    pub fn new(b: Arc<Bialgebroid<K>>) -> Self {
        let backend = Backend::Bimodules(b.base.clone());
        BialgebroidBimonad { bialgebroid: b, backend }
    }

    fn applied(&self, x: &Obj<K>) -> Result<Applied<K>, MonadError> {
        let b = &self.bialgebroid;
        let bx = x.bimodule().ok_or_else(|| MonadError::ContextMismatch(format!("{} is not a bimodule", x.name)))?;
        let f = b.field();
        let (d, n, xd) = (b.dim(), b.base_dim(), x.dim);
        let (ia, ix) = (id(f, d), id(f, xd));
        let mut relations = Matrix::zeros(f, d * xd, 0);
        for r in 0..n {
            let e = b.base.alg.basis(r);
            let left_r = &bx.left * &e.tensor(&ix);
            let right_r = &bx.right * &ix.tensor(&e);
            relations = relations
                .hstack(&(&b.alg.right_mult(&b.s_of(r)).tensor(&ix) - &ia.tensor(&left_r)))
                .hstack(&(&b.alg.right_mult(&b.t_of(r)).tensor(&ix) - &ia.tensor(&right_r)));
        }
        let q = quotient_by_span_dim(d * xd, &relations);
        let ir = id(f, n);
        let left = chain(&[&q.projection, &b.s_act().tensor(&ix), &ir.tensor(&q.section)]);
        let right = chain(&[
            &q.projection,
            &b.t_act().tensor(&ix),
            &permute_factors(f, &[d, xd, n], &[2, 0, 1]),
            &q.section.tensor(&ir),
        ]);
        let name = format!("T({})", x.name);
        let atom = Atom { name: name.clone(), dim: q.projection.rows(), left, right };
        let obj = atom_object(&b.base, atom).named(name);
        Ok(Applied { obj, projection: q.projection, section: q.section })
    }

    /// `R^e`, `R` and a random bimodule isomorphic to `R`, `R^e` or `A`.
    pub fn probes<R: Rng>(&self, rng: &mut R) -> Vec<Obj<K>> {
        let base = &self.bialgebroid.base;
        vec![
            atom_object(base, base.enveloping_atom()).named("R^e"),
            self.backend.unit(),
            random_bimodule(&self.bialgebroid, rng),
        ]
    }

    /// `A` as an `R`-bimodule via `r·a·r′ = s(r)t(r′)a`.
    pub fn regular_atom(&self) -> Atom<K> {
        regular_atom(&self.bialgebroid)
    }
}

fn regular_atom<K: Field>(b: &Bialgebroid<K>) -> Atom<K> {
    let right = &b.t_act() * &flip(b.field(), b.dim(), b.base_dim());
    Atom { name: "A".into(), dim: b.dim(), left: b.s_act(), right }
}

fn random_bimodule<K: Field, R: Rng>(b: &Bialgebroid<K>, rng: &mut R) -> Obj<K> {
    let base = &b.base;
    let atom = match rng.gen_range(0..3) {
        0 => base.regular_atom(),
        1 => base.enveloping_atom(),
        _ => regular_atom(b),
    };
    let f = base.field();
    let ir = id(f, base.dim());
    let (p, p_inv) = random_invertible(f, atom.dim, rng);
    let left = chain(&[&p, &atom.left, &ir.tensor(&p_inv)]);
    let right = chain(&[&p, &atom.right, &p_inv.tensor(&ir)]);
    let name = format!("{}′", atom.name);
    atom_object(base, Atom { name: name.clone(), dim: atom.dim, left, right }).named(name)
}

impl<K: Field> Bimonad<K> for BialgebroidBimonad<K> {
    fn name(&self) -> String {
        "T_A".into()
    }

    fn backend(&self) -> &Backend<K> {
        &self.backend
    }

    fn field(&self) -> &K {
        self.bialgebroid.field()
    }

    fn apply(&self, x: &Obj<K>) -> Result<Obj<K>, MonadError> {
        Ok(self.applied(x)?.obj)
    }

    fn apply_mor(&self, g: &Mor<K>) -> Result<Mor<K>, MonadError> {
        let (tx, ty) = (self.applied(&g.dom)?, self.applied(&g.cod)?);
        let ia = id(self.field(), self.bialgebroid.dim());
        let mat = chain(&[&ty.projection, &ia.tensor(&g.mat), &tx.section]);
        Mor::new(tx.obj, ty.obj, mat)
    }

    fn mu(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let b = &self.bialgebroid;
        let tx = self.applied(x)?;
        let ttx = self.applied(&tx.obj)?;
        let ia = id(self.field(), b.dim());
        let mat = chain(&[&tx.projection, &b.alg.m.tensor(&id(self.field(), x.dim)), &ia.tensor(&tx.section), &ttx.section]);
        Mor::new(ttx.obj, tx.obj, mat)
    }

    fn eta(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let tx = self.applied(x)?;
        let mat = &tx.projection * &self.bialgebroid.alg.u.tensor(&id(self.field(), x.dim));
        Mor::new(x.clone(), tx.obj, mat)
    }

    fn t2(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let b = &self.bialgebroid;
        let f = self.field();
        let d = b.dim();
        let xy = self.backend.tensor(x, y)?;
        let (txy, tx, ty) = (self.applied(&xy)?, self.applied(x)?, self.applied(y)?);
        let ia = id(f, d);
        let mat = chain(&[
            &join_map(&tx.obj, &ty.obj)?,
            &tx.projection.tensor(&ty.projection),
            &permute_factors(f, &[d, d, x.dim, y.dim], &[0, 2, 1, 3]),
            &b.delta.tensor(&id(f, x.dim * y.dim)),
            &ia.tensor(&split_map(x, y)?),
            &txy.section,
        ]);
        let cod = self.backend.tensor(&tx.obj, &ty.obj)?;
        Mor::new(txy.obj, cod, mat)
    }

    fn t0(&self) -> Result<Mor<K>, MonadError> {
        let b = &self.bialgebroid;
        let one = self.backend.unit();
        let t1 = self.applied(&one)?;
        let ia = id(self.field(), b.dim());
        let mat = chain(&[&b.eps, &b.alg.m, &ia.tensor(&b.source), &t1.section]);
        Mor::new(t1.obj, one, mat)
    }
}

/// `a ↦ [a⊗1_X] ∈ T(X)` for `X` the unit or `R^e`.
fn inject<K: Field>(t: &BialgebroidBimonad<K>, x: &Obj<K>) -> Result<Matrix<K>, MonadError> {
    let applied = t.applied(x)?;
    let ia = id(t.field(), t.bialgebroid.dim());
    Ok(&applied.projection * &ia.tensor(&unit_vector(t, x)))
}

fn unit_vector<K: Field>(t: &BialgebroidBimonad<K>, x: &Obj<K>) -> Matrix<K> {
    let u = &t.bialgebroid.base.alg.u;
    let bx = x.bimodule().expect("probe is a bimodule");
    if bx.atoms.is_empty() {
        u.clone()
    } else {
        &bx.projection * &u.tensor(u)
    }
}

fn compare<K: Field>(
    r: &mut CheckReport,
    name: String,
    fusion: &Mor<K>,
    into_source: Matrix<K>,
    into_target: Matrix<K>,
    g: &GaloisMap<K>,
) {
    if into_source.try_invert().inverse.is_none() || into_target.try_invert().inverse.is_none() {
        r.fail(name, Some("canonical identification is not invertible".into()));
        return;
    }
    let dom = fusion.dom.name.clone();
    r.equal(name, &(&fusion.mat * &into_source), &(&into_target * &g.matrix), |c| format!("basis vector {c} of {dom}"));
}

/// The fusion operators of `T_A` at `(R^e, R^e)`, `(R, R^e)` and `(R^e, R)`
/// agree with the Galois maps under `T(R^e) ≅ A` and `T(R) ≅ Ā`.
pub fn galois_fusion_check<K: Field>(t: &BialgebroidBimonad<K>, maps: &GaloisMaps<K>) -> Result<CheckReport, AlgebroidError> {
    let f = t.field().clone();
    let base = &t.bialgebroid.base;
    let ia = id(&f, t.bialgebroid.dim());
    let re = atom_object(base, base.enveloping_atom()).named("R^e");
    let one = t.backend.unit();
    let mut r = CheckReport::new();

    let target_map = |x: &Obj<K>, y: &Obj<K>, g: &GaloisMap<K>| -> Result<Matrix<K>, MonadError> {
        let (tx, ty) = (t.apply(x)?, t.apply(y)?);
        Ok(chain(&[&join_map(&tx, &ty)?, &inject(t, x)?.tensor(&inject(t, y)?), &g.target.section]))
    };

    for (x, y, g) in [(&re, &re, &maps.hl), (&one, &re, &maps.hl_pre)] {
        let h = fusion_left(t, x, y)?;
        let ty = t.apply(y)?;
        let inner = &join_map(x, &ty)? * &unit_vector(t, x).tensor(&inject(t, y)?);
        let xty = t.backend.tensor(x, &ty)?;
        let source = chain(&[&t.applied(&xty)?.projection, &ia.tensor(&inner), &g.source.section]);
        let target = target_map(x, y, g)?;
        compare(&mut r, format!("H^l_({}, {}) = {}", x.name, y.name, g.name), &h, source, target, g);
    }
    for (x, y, g) in [(&re, &re, &maps.hr), (&re, &one, &maps.hr_pre)] {
        let h = fusion_right(t, x, y)?;
        let tx = t.apply(x)?;
        let inner = &join_map(&tx, y)? * &inject(t, x)?.tensor(&unit_vector(t, y));
        let txy = t.backend.tensor(&tx, y)?;
        let source = chain(&[&t.applied(&txy)?.projection, &ia.tensor(&inner), &g.source.section]);
        let target = target_map(x, y, g)?;
        compare(&mut r, format!("H^r_({}, {}) = {}", x.name, y.name, g.name), &h, source, target, g);
    }
    Ok(r)
}
