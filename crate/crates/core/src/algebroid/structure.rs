use std::sync::Arc;

use crate::exactalg::{chain, flip, id, permute_factors, quotient_by_span, tensor_all, BasedSpace, Field, Matrix};
use crate::hopfcore::{AlgebraData, BraidedBialgebra, BraidingContext, HopfError};
use crate::monadrep::bimodule::BaseAlgebra;
use crate::report::{CheckItem, CheckReport};

use super::AlgebroidError;

/// A left bialgebroid `(A, s, t, Δ, ε)` over `R`. The coproduct is stored as
/// a lift `A → A⊗A`; only its class in `A⊗_R A` is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebroid<K: Field> {
    pub base: Arc<BaseAlgebra<K>>,
    pub alg: AlgebraData<K>,
    /// `s: R → A`.
    pub source: Matrix<K>,
    /// `t: R^op → A`.
    pub target: Matrix<K>,
    /// `A → A⊗A`.
    pub delta: Matrix<K>,
    /// `A → R`.
    pub eps: Matrix<K>,
}

impl<K: Field> Bialgebroid<K> {
    pub fn new(
        base: Arc<BaseAlgebra<K>>,
        alg: AlgebraData<K>,
        source: Matrix<K>,
        target: Matrix<K>,
        delta: Matrix<K>,
        eps: Matrix<K>,
    ) -> Result<Self, AlgebroidError> {
        let (d, n) = (alg.dim(), base.dim());
        for (name, m, shape) in [
            ("s", &source, (d, n)),
            ("t", &target, (d, n)),
            ("Δ", &delta, (d * d, d)),
            ("ε", &eps, (n, d)),
        ] {
            if m.shape() != shape {
                return Err(AlgebroidError::Shape(format!("{name} is {:?}, expected {:?}", m.shape(), shape)));
            }
        }
        Ok(Bialgebroid { base, alg, source, target, delta, eps })
    }

    /// An ordinary bialgebra as a bialgebroid over `R = k`.
    pub fn from_bialgebra(b: &BraidedBialgebra<K>) -> Result<Self, AlgebroidError> {
        if !matches!(b.ctx, BraidingContext::Trivial) {
            return Err(HopfError::InvalidContext("bialgebroids need an ordinary bialgebra".into()).into());
        }
        let f = b.field();
        let k = AlgebraData::new(BasedSpace::unit(), id(f, 1), id(f, 1))?;
        let base = Arc::new(BaseAlgebra::new(k)?);
        Self::new(base, b.alg.clone(), b.alg.u.clone(), b.alg.u.clone(), b.coalg.delta.clone(), b.coalg.eps.clone())
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn field(&self) -> &K {
        self.alg.field()
    }

    fn base_vector(&self, r: usize) -> Matrix<K> {
        self.base.alg.basis(r)
    }

    /// `s(r)` for the basis element `r` of the base, as a column.
    pub fn s_of(&self, r: usize) -> Matrix<K> {
        &self.source * &self.base_vector(r)
    }

    pub fn t_of(&self, r: usize) -> Matrix<K> {
        &self.target * &self.base_vector(r)
    }

    /// `R⊗A → A`, `r⊗a ↦ s(r)a`.
    pub(crate) fn s_act(&self) -> Matrix<K> {
        &self.alg.m * &self.source.tensor(&id(self.field(), self.dim()))
    }

    /// `R⊗A → A`, `r⊗a ↦ t(r)a`.
    pub(crate) fn t_act(&self) -> Matrix<K> {
        &self.alg.m * &self.target.tensor(&id(self.field(), self.dim()))
    }

    /// `a⊗b ↦ a₍₁₎⊗a₍₂₎b` on `A⊗A`.
    pub(crate) fn left_galois_lift(&self) -> Matrix<K> {
        let i = id(self.field(), self.dim());
        &i.tensor(&self.alg.m) * &self.delta.tensor(&i)
    }

    /// `a⊗b ↦ a₍₁₎b⊗a₍₂₎` on `A⊗A`.
    pub(crate) fn right_galois_lift(&self) -> Matrix<K> {
        let f = self.field();
        let d = self.dim();
        let i = id(f, d);
        chain(&[&self.alg.m.tensor(&i), &i.tensor(&flip(f, d, d)), &self.delta.tensor(&i)])
    }

    fn labels2(&self) -> BasedSpace {
        self.alg.space.tensor(&self.alg.space)
    }
}

/// Which balancing relations a quotient of `A⊗A` (or of `A`) imposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientKind {
    /// `A⊗_R A`: `t(r)a⊗b ~ a⊗s(r)b`.
    OverR,
    /// `A_t⊗_{R^op} {}_tA`: `a t(r)⊗b ~ a⊗t(r)b`.
    OverRop,
    /// `A_s⊗_R {}_sA`: `a s(r)⊗b ~ a⊗s(r)b`.
    OverRs,
    /// `A⊗_{R^e} A`: both `a s(r)⊗b ~ a⊗s(r)b` and `a t(r)⊗b ~ a⊗t(r)b`.
    OverRe,
    /// `Ā = A/{a s(r) = a t(r)}`.
    Bar,
    /// `Ā⊗_R A`.
    BarOverR,
    /// `A⊗_R Ā`.
    OverRBar,
}

impl QuotientKind {
    pub fn describe(self) -> &'static str {
        match self {
            QuotientKind::OverR => "A⊗_R A",
            QuotientKind::OverRop => "A⊗_{R^op} A",
            QuotientKind::OverRs => "A_s⊗_R A",
            QuotientKind::OverRe => "A⊗_{R^e} A",
            QuotientKind::Bar => "Ā",
            QuotientKind::BarOverR => "Ā⊗_R A",
            QuotientKind::OverRBar => "A⊗_R Ā",
        }
    }
}

/// A quotient of `A⊗A` (of `A` for [`QuotientKind::Bar`]) by the span of
/// balancing relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTensor<K: Field> {
    pub kind: QuotientKind,
    pub ambient: BasedSpace,
    /// Columns spanning the relations.
    pub relations: Matrix<K>,
    pub space: BasedSpace,
    pub projection: Matrix<K>,
    pub section: Matrix<K>,
}

impl<K: Field> QuotientTensor<K> {
    pub fn build(b: &Bialgebroid<K>, kind: QuotientKind) -> Self {
        let f = b.field();
        let (d, n) = (b.dim(), b.base_dim());
        let i = id(f, d);
        let mut blocks: Vec<Matrix<K>> = Vec::new();
        for r in 0..n {
            let (sr, tr) = (b.s_of(r), b.t_of(r));
            let (ls, lt) = (b.alg.left_mult(&sr), b.alg.left_mult(&tr));
            let (rs, rt) = (b.alg.right_mult(&sr), b.alg.right_mult(&tr));
            let over_r = &lt.tensor(&i) - &i.tensor(&ls);
            match kind {
                QuotientKind::OverR => blocks.push(over_r),
                QuotientKind::OverRop => blocks.push(&rt.tensor(&i) - &i.tensor(&lt)),
                QuotientKind::OverRs => blocks.push(&rs.tensor(&i) - &i.tensor(&ls)),
                QuotientKind::OverRe => {
                    blocks.push(&rs.tensor(&i) - &i.tensor(&ls));
                    blocks.push(&rt.tensor(&i) - &i.tensor(&lt));
                }
                QuotientKind::Bar => blocks.push(&rs - &rt),
                QuotientKind::BarOverR => {
                    blocks.push(over_r);
                    blocks.push((&rs - &rt).tensor(&i));
                }
                QuotientKind::OverRBar => {
                    blocks.push(over_r);
                    blocks.push(i.tensor(&(&rs - &rt)));
                }
            }
        }
        let ambient = if kind == QuotientKind::Bar { b.alg.space.clone() } else { b.labels2() };
        let mut relations = Matrix::zeros(f, ambient.dim(), 0);
        for blk in &blocks {
            relations = relations.hstack(blk);
        }
        let q = quotient_by_span(&ambient, &relations);
        QuotientTensor { kind, ambient, relations, space: q.space, projection: q.projection, section: q.section }
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

/// The balanced tensor products and quotients attached to a bialgebroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotients<K: Field> {
    pub a_tens_r_a: QuotientTensor<K>,
    pub a_tens_rop_a: QuotientTensor<K>,
    pub a_tens_rs_a: QuotientTensor<K>,
    pub a_tens_re_a: QuotientTensor<K>,
    pub abar: QuotientTensor<K>,
    pub abar_tens_r_a: QuotientTensor<K>,
    pub a_tens_r_abar: QuotientTensor<K>,
}

pub fn build_quotients<K: Field>(b: &Bialgebroid<K>) -> Quotients<K> {
    Quotients {
        a_tens_r_a: QuotientTensor::build(b, QuotientKind::OverR),
        a_tens_rop_a: QuotientTensor::build(b, QuotientKind::OverRop),
        a_tens_rs_a: QuotientTensor::build(b, QuotientKind::OverRs),
        a_tens_re_a: QuotientTensor::build(b, QuotientKind::OverRe),
        abar: QuotientTensor::build(b, QuotientKind::Bar),
        abar_tens_r_a: QuotientTensor::build(b, QuotientKind::BarOverR),
        a_tens_r_abar: QuotientTensor::build(b, QuotientKind::OverRBar),
    }
}

/// `A⊗_R A⊗_R A` as a quotient of `A⊗A⊗A`.
fn triple_quotient<K: Field>(b: &Bialgebroid<K>) -> Matrix<K> {
    let f = b.field();
    let i = id(f, b.dim());
    let mut relations = Matrix::zeros(f, b.dim().pow(3), 0);
    for r in 0..b.base_dim() {
        let step = &b.alg.left_mult(&b.t_of(r)).tensor(&i) - &i.tensor(&b.alg.left_mult(&b.s_of(r)));
        relations = relations.hstack(&step.tensor(&i)).hstack(&i.tensor(&step));
    }
    let space = b.alg.space.tensor_power(3);
    quotient_by_span(&space, &relations).projection
}

/// The linear conditions cutting out `A×_R A` inside `A⊗_R A`: stacked over
/// the basis of `R`, `[a t(r)⊗b] − [a⊗b s(r)]`.
fn takeuchi_conditions<K: Field>(b: &Bialgebroid<K>, q: &QuotientTensor<K>) -> Vec<Matrix<K>> {
    let i = id(b.field(), b.dim());
    (0..b.base_dim())
        .map(|r| {
            let rt = b.alg.right_mult(&b.t_of(r)).tensor(&i);
            let rs = i.tensor(&b.alg.right_mult(&b.s_of(r)));
            &q.projection * &(&(&rt - &rs) * &q.section)
        })
        .collect()
}

/// Whether the class `x ∈ A⊗_R A` lies in the Takeuchi product; the witness
/// names the first base element violating the condition.
pub fn takeuchi_membership<K: Field>(b: &Bialgebroid<K>, q: &QuotientTensor<K>, x: &Matrix<K>) -> CheckItem {
    let name = "Takeuchi membership".to_string();
    for (r, cond) in takeuchi_conditions(b, q).iter().enumerate() {
        if !(cond * x).is_zero() {
            return CheckItem {
                name,
                passed: false,
                witness: Some(format!("r = {}", b.base.alg.space.label(r))),
                detail: None,
            };
        }
    }
    CheckItem { name, passed: true, witness: None, detail: None }
}

/// A basis of `A×_R A ⊂ A⊗_R A`, as columns in the quotient coordinates.
pub fn takeuchi_subspace<K: Field>(b: &Bialgebroid<K>, q: &QuotientTensor<K>) -> Matrix<K> {
    let mut stacked = Matrix::zeros(b.field(), 0, q.dim());
    for c in takeuchi_conditions(b, q) {
        stacked = stacked.vstack(&c);
    }
    stacked.kernel()
}

/// Every bialgebroid axiom, evaluated exactly.
pub fn check_bialgebroid<K: Field>(b: &Bialgebroid<K>) -> CheckReport {
    let f = b.field();
    let (d, n) = (b.dim(), b.base_dim());
    let (ia, ir) = (id(f, d), id(f, n));
    let (m, u) = (&b.alg.m, &b.alg.u);
    let (mr, ur) = (&b.base.alg.m, &b.base.alg.u);
    let (s, t, eps, delta) = (&b.source, &b.target, &b.eps, &b.delta);
    let labels = b.labels2();
    let rlabels = b.base.alg.space.tensor(&b.base.alg.space);
    let at = |sp: &BasedSpace| {
        let sp = sp.clone();
        move |c: usize| sp.label(c).to_string()
    };
    let mut r = CheckReport::new();
    r.extend_prefixed("A", b.alg.check());

    r.equal("s multiplicative", &(s * mr), &(m * &s.tensor(s)), at(&rlabels));
    r.equal_indexed("s unital", &(s * ur), u);
    r.equal("t anti-multiplicative", &(t * mr), &(m * &(&t.tensor(t) * &flip(f, n, n))), at(&rlabels));
    r.equal_indexed("t unital", &(t * ur), u);
    r.equal("s(r)t(r′) = t(r′)s(r)", &(m * &s.tensor(t)), &(m * &(&t.tensor(s) * &flip(f, n, n))), at(&rlabels));

    let ra = b.base.alg.space.tensor(&b.alg.space);
    r.equal("ε(s(r)a) = rε(a)", &(eps * &b.s_act()), &(mr * &ir.tensor(eps)), at(&ra));
    r.equal("ε(t(r)a) = ε(a)r", &(eps * &b.t_act()), &(&(mr * &eps.tensor(&ir)) * &flip(f, n, d)), at(&ra));

    let q = QuotientTensor::build(b, QuotientKind::OverR);
    let p = &q.projection;
    r.equal("Δ(s(r)a) = s(r)a₍₁₎⊗a₍₂₎", &(p * &(delta * &b.s_act())), &(p * &(&b.s_act().tensor(&ia) * &ir.tensor(delta))), at(&ra));
    r.equal(
        "Δ(t(r)a) = a₍₁₎⊗t(r)a₍₂₎",
        &(p * &(delta * &b.t_act())),
        &chain(&[p, &ia.tensor(&b.t_act()), &permute_factors(f, &[n, d, d], &[1, 0, 2]), &ir.tensor(delta)]),
        at(&ra),
    );

    let p3 = triple_quotient(b);
    r.equal(
        "Δ coassociative in A⊗_R A⊗_R A",
        &(&p3 * &(&delta.tensor(&ia) * delta)),
        &(&p3 * &(&ia.tensor(delta) * delta)),
        at(&b.alg.space),
    );
    // R⊗_R A → A is r⊗b ↦ s(r)b, A⊗_R R → A is a⊗r ↦ t(r)a
    let left_counit = chain(&[&b.s_act(), &eps.tensor(&ia), delta]);
    let right_counit = chain(&[&b.t_act(), &flip(f, d, n), &ia.tensor(eps), delta]);
    r.equal("left counit", &left_counit, &ia, at(&b.alg.space));
    r.equal("right counit", &right_counit, &ia, at(&b.alg.space));

    let mut takeuchi = None;
    for a in 0..d {
        let x = p * &(delta * &b.alg.basis(a));
        let item = takeuchi_membership(b, &q, &x);
        if !item.passed {
            takeuchi = Some(format!("Δ({}) at {}", b.alg.space.label(a), item.witness.unwrap_or_default()));
            break;
        }
    }
    r.record("Δ(A) ⊂ A×_R A", takeuchi.is_none(), takeuchi);

    let mult2 = &m.tensor(m) * &permute_factors(f, &[d, d, d, d], &[0, 2, 1, 3]);
    r.equal("Δ multiplicative", &(p * &(delta * m)), &chain(&[p, &mult2, &delta.tensor(delta)]), at(&labels));
    r.equal_indexed("Δ unital", &(p * &(delta * u)), &(p * &u.tensor(u)));

    let eps_m = eps * m;
    r.equal("ε(a s(ε(a′))) = ε(aa′)", &chain(&[eps, m, &ia.tensor(&(s * eps))]), &eps_m, at(&labels));
    r.equal("ε(a t(ε(a′))) = ε(aa′)", &chain(&[eps, m, &ia.tensor(&(t * eps))]), &eps_m, at(&labels));
    r.equal_indexed("ε(1) = 1", &(eps * u), ur);
    r
}

/// `R⊗R^op` with `(a⊗b)(c⊗d) = ac⊗db`.
pub fn enveloping_algebra<K: Field>(base: &BaseAlgebra<K>) -> AlgebraData<K> {
    let f = base.field();
    let n = base.dim();
    let mr = &base.alg.m;
    let m = &mr.tensor(mr) * &permute_factors(f, &[n, n, n, n], &[0, 2, 3, 1]);
    let u = base.alg.u.tensor(&base.alg.u);
    let space = base.alg.space.tensor(&base.alg.space);
    AlgebraData { space, m, u }
}

/// `R^e` as a bialgebroid over `R`: `s(r) = r⊗1`, `t(r) = 1⊗r`,
/// `Δ(a⊗b) = (a⊗1)⊗(1⊗b)`, `ε(a⊗b) = ab`.
pub fn enveloping_bialgebroid<K: Field>(base: Arc<BaseAlgebra<K>>) -> Result<Bialgebroid<K>, AlgebroidError> {
    let f = base.field().clone();
    let ir = id(&f, base.dim());
    let u = &base.alg.u;
    let alg = enveloping_algebra(&base);
    let source = ir.tensor(u);
    let target = u.tensor(&ir);
    let delta = tensor_all(&[&ir, u, u, &ir]);
    let eps = base.alg.m.clone();
    Bialgebroid::new(base, alg, source, target, delta, eps)
}

/// `kⁿ` with orthogonal idempotents `δ₁, …, δₙ`.
pub fn diagonal_algebra<K: Field>(field: &K, n: usize) -> AlgebraData<K> {
    let one = field.one();
    let m = Matrix::from_triplets(field, n, n * n, (0..n).map(|i| (i, i * n + i, one.clone())));
    let u = Matrix::from_triplets(field, n, 1, (0..n).map(|i| (i, 0, one.clone())));
    let space = BasedSpace::new((1..=n).map(|i| format!("δ{i}"))).expect("distinct labels");
    AlgebraData { space, m, u }
}

/// The algebra of the pair groupoid on `n` objects, `Mₙ(k)` over `kⁿ`:
/// `s(δᵢ) = t(δᵢ) = eᵢᵢ`, `Δ(eᵢⱼ) = eᵢⱼ⊗eᵢⱼ`, `ε(eᵢⱼ) = δᵢ`.
pub fn pair_groupoid<K: Field>(field: &K, n: usize) -> Result<Bialgebroid<K>, AlgebroidError> {
    let one = field.one();
    let base = Arc::new(BaseAlgebra::new(diagonal_algebra(field, n))?);
    let d = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut mt = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mt.push((idx(i, k), idx(i, j) * d + idx(j, k), one.clone()));
            }
        }
    }
    let m = Matrix::from_triplets(field, d, d * d, mt);
    let u = Matrix::from_triplets(field, d, 1, (0..n).map(|i| (idx(i, i), 0, one.clone())));
    let space = BasedSpace::new((0..n).flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))).expect("distinct labels");
    let alg = AlgebraData::new(space, m, u)?;
    let diag = Matrix::from_triplets(field, d, n, (0..n).map(|i| (idx(i, i), i, one.clone())));
    let delta = Matrix::from_triplets(field, d * d, d, (0..d).map(|a| (a * d + a, a, one.clone())));
    let eps = Matrix::from_triplets(field, n, d, (0..d).map(|a| (a / n, a, one.clone())));
    Bialgebroid::new(base, alg, diag.clone(), diag, delta, eps)
}
