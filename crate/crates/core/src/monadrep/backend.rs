//! The finite monoidal categories on which bimonads are evaluated, and
//! morphisms carrying their source and target objects.

use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use super::bimodule::{self, BaseAlgebra};
use crate::exactalg::random::random_invertible;
use crate::exactalg::{id, Field, Matrix};
use crate::hopfcore::{Bicharacter, BraidingContext, HopfAlgebraData, HopfError, Obj, ObjData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonadError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{what} is not invertible at {probe}")]
    NotInvertible { what: String, probe: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
}

/// A monoidal category of finite-dimensional objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend<K: Field> {
    /// Vector spaces with the flip.
    VectK,
    /// Group-graded spaces; the bicharacter supplies the braiding.
    Graded(Bicharacter<K>),
    /// Left modules over a Hopf algebra, diagonal action on tensor products.
    ModH(Arc<HopfAlgebraData<K>>),
    /// Bimodules over a base algebra with `⊗_R`.
    Bimodules(Arc<BaseAlgebra<K>>),
}

impl<K: Field> Backend<K> {
    /// `ℤ`-graded spaces with trivial braiding signs.
    pub fn integer_graded(field: &K) -> Self {
        Backend::Graded(Bicharacter::trivial(field, vec![0]))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Backend::VectK => "vect",
            Backend::Graded(_) => "graded",
            Backend::ModH(_) => "mod-H",
            Backend::Bimodules(_) => "bimodules",
        }
    }

    /// The braiding context whose objects and tensor products this backend uses.
    pub fn context(&self) -> Option<BraidingContext<K>> {
        match self {
            Backend::VectK => Some(BraidingContext::Trivial),
            Backend::Graded(chi) => Some(BraidingContext::GradedBicharacter(chi.clone())),
            Backend::ModH(h) => Some(BraidingContext::YetterDrinfeld(h.clone())),
            Backend::Bimodules(_) => None,
        }
    }

    pub fn unit(&self) -> Obj<K> {
        match self {
            Backend::VectK => Obj::plain(1).named("1"),
            Backend::Graded(chi) => Obj::graded(vec![vec![0; chi.rank()]]).named("1"),
            Backend::ModH(h) => h.trivial_module().named("1"),
            Backend::Bimodules(base) => bimodule::word_object(base, Vec::new()),
        }
    }

    pub fn tensor(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Obj<K>, MonadError> {
        let out = match self {
            Backend::Bimodules(_) => bimodule::tensor_objects(x, y)?,
            _ => {
                let ctx = self.context().expect("non-bimodule backends have a context");
                let x = if matches!(self, Backend::ModH(_)) { x.forget_coaction() } else { x.clone() };
                let y = if matches!(self, Backend::ModH(_)) { y.forget_coaction() } else { y.clone() };
                ctx.tensor_objects(&x, &y)?
            }
        };
        Ok(out.named(tensor_name(x, y)))
    }

    /// `f⊗g` for morphisms of this category.
    pub fn tensor_mor(&self, f: &Mor<K>, g: &Mor<K>) -> Result<Mor<K>, MonadError> {
        let dom = self.tensor(&f.dom, &g.dom)?;
        let cod = self.tensor(&f.cod, &g.cod)?;
        let mat = match self {
            Backend::Bimodules(_) => bimodule::tensor_morphisms(&f.mat, &f.dom, &f.cod, &g.mat, &g.dom, &g.cod)?,
            _ => f.mat.tensor(&g.mat),
        };
        Mor::new(dom, cod, mat)
    }

    /// The symmetric or braided structure where one exists (not for modules
    /// over a general Hopf algebra, nor for bimodules).
    pub fn braiding(&self, x: &Obj<K>, y: &Obj<K>, field: &K) -> Option<Result<Matrix<K>, MonadError>> {
        match self {
            Backend::VectK | Backend::Graded(_) => {
                Some(self.context().expect("context").braiding(x, y, field).map_err(MonadError::from))
            }
            _ => None,
        }
    }

    /// `None` if `f: X → Y` is a morphism of the category.
    pub fn morphism_violation(&self, f: &Mor<K>) -> Option<String> {
        match self {
            Backend::Bimodules(_) => bimodule::morphism_violation(&f.mat, &f.dom, &f.cod),
            _ => {
                let (x, y) = (f.dom.forget_coaction(), f.cod.forget_coaction());
                self.context().expect("context").morphism_violation(&f.mat, &x, &y)
            }
        }
    }

    /// A basis of the morphisms `X → Y`.
    pub fn hom_basis(&self, x: &Obj<K>, y: &Obj<K>, field: &K) -> Vec<Matrix<K>> {
        match self {
            Backend::Bimodules(_) => bimodule::hom_basis(x, y, field),
            _ => {
                let (x, y) = (x.forget_coaction(), y.forget_coaction());
                self.context().expect("context").hom_basis(&x, &y, field)
            }
        }
    }

    /// A random object of dimension at most `max_dim`.
    pub fn random_object<R: Rng>(&self, field: &K, rng: &mut R, max_dim: usize) -> Obj<K> {
        let d = rng.gen_range(1..=max_dim.max(1));
        match self {
            Backend::VectK => Obj::plain(d),
            Backend::Graded(chi) => {
                let degrees = (0..d)
                    .map(|_| {
                        let raw: Vec<i64> = (0..chi.rank()).map(|_| rng.gen_range(-2..=2)).collect();
                        chi.reduce(&raw)
                    })
                    .collect();
                Obj::graded(degrees)
            }
            Backend::ModH(h) => random_module(h, field, rng, d),
            Backend::Bimodules(base) => {
                let atom = if rng.gen_bool(0.5) { base.regular_atom() } else { base.enveloping_atom() };
                bimodule::atom_object(base, atom)
            }
        }
    }
}

fn tensor_name<K: Field>(x: &Obj<K>, y: &Obj<K>) -> String {
    let wrap = |o: &Obj<K>| if o.name.contains('⊗') && o.name.starts_with('T') { format!("({})", o.name) } else { o.name.clone() };
    match (x.name.as_str(), y.name.as_str()) {
        ("1", _) => y.name.clone(),
        (_, "1") => x.name.clone(),
        _ => format!("{}⊗{}", wrap(x), wrap(y)),
    }
}

/// A module of dimension `d` built as a direct sum of trivial modules and,
/// when it fits, copies of the regular module, conjugated by a random
/// invertible matrix.
fn random_module<K: Field, R: Rng>(h: &HopfAlgebraData<K>, field: &K, rng: &mut R, d: usize) -> Obj<K> {
    let hd = h.dim();
    let regular_copies = if hd <= d { rng.gen_range(0..=d / hd) } else { 0 };
    let trivial_copies = d - regular_copies * hd;
    let mut blocks: Vec<Matrix<K>> = Vec::new();
    for _ in 0..regular_copies {
        blocks.push(h.bialg.alg.m.clone());
    }
    for _ in 0..trivial_copies {
        blocks.push(h.bialg.coalg.eps.clone());
    }
    // direct sum of actions H⊗(⊕Vᵢ) → ⊕Vᵢ
    let mut acc: Option<(Matrix<K>, usize)> = None;
    for b in blocks {
        let vd = b.rows();
        acc = Some(match acc {
            None => (b, vd),
            Some((a, ad)) => (direct_sum_action(field, hd, &a, ad, &b, vd), ad + vd),
        });
    }
    let (act, dim) = acc.unwrap_or_else(|| (Matrix::zeros(field, 0, 0), 0));
    let (p, pinv) = random_invertible(field, dim, rng);
    let conj = &p * &(&act * &id(field, hd).tensor(&pinv));
    Obj::module(conj).named(format!("M{dim}"))
}

/// The action of `H` on `V ⊕ W` from actions on `V` and `W`.
pub fn direct_sum_action<K: Field>(field: &K, hd: usize, a: &Matrix<K>, ad: usize, b: &Matrix<K>, bd: usize) -> Matrix<K> {
    let n = ad + bd;
    let mut trip = Vec::new();
    for h in 0..hd {
        for v in 0..ad {
            for (i, x) in a.column(h * ad + v).into_iter().enumerate() {
                if !field.is_zero(&x) {
                    trip.push((i, h * n + v, x));
                }
            }
        }
        for w in 0..bd {
            for (i, x) in b.column(h * bd + w).into_iter().enumerate() {
                if !field.is_zero(&x) {
                    trip.push((ad + i, h * n + ad + w, x));
                }
            }
        }
    }
    Matrix::from_triplets(field, n, hd * n, trip)
}

/// A morphism together with its source and target objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor<K: Field> {
    pub dom: Obj<K>,
    pub cod: Obj<K>,
    pub mat: Matrix<K>,
}

impl<K: Field> Mor<K> {
    pub fn new(dom: Obj<K>, cod: Obj<K>, mat: Matrix<K>) -> Result<Self, MonadError> {
        if mat.shape() != (cod.dim, dom.dim) {
            return Err(MonadError::Shape(format!(
                "matrix {}x{} for a map {} (dim {}) → {} (dim {})",
                mat.rows(),
                mat.cols(),
                dom.name,
                dom.dim,
                cod.name,
                cod.dim
            )));
        }
        Ok(Mor { dom, cod, mat })
    }

    pub fn identity(x: &Obj<K>, field: &K) -> Self {
        Mor { dom: x.clone(), cod: x.clone(), mat: id(field, x.dim) }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Mor<K>) -> Result<Mor<K>, MonadError> {
        if next.dom.dim != self.cod.dim {
            return Err(MonadError::Shape(format!(
                "cannot compose {} → {} with {} → {}",
                self.dom.name, self.cod.name, next.dom.name, next.cod.name
            )));
        }
        Ok(Mor { dom: self.dom.clone(), cod: next.cod.clone(), mat: &next.mat * &self.mat })
    }

    pub fn field(&self) -> &K {
        self.mat.field()
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }
}

/// Composite of a chain of morphisms applied left to right.
pub fn compose_all<K: Field>(maps: &[&Mor<K>]) -> Result<Mor<K>, MonadError> {
    let (first, rest) = maps.split_first().ok_or_else(|| MonadError::Shape("empty composite".into()))?;
    let mut acc = (*first).clone();
    for m in rest {
        acc = acc.then(m)?;
    }
    Ok(acc)
}

/// The default probe objects: the unit, `A`, `A⊗A` and one seeded random
/// object of dimension at most 3.
pub fn default_probes<K: Field>(backend: &Backend<K>, a: Option<&Obj<K>>, field: &K, seed: u64) -> Result<Vec<Obj<K>>, MonadError> {
    let mut probes = vec![backend.unit()];
    if let Some(a) = a {
        let a = a.renamed("A");
        probes.push(backend.tensor(&a, &backend.unit())?.renamed("A"));
        probes.push(backend.tensor(&a, &a)?.renamed("A⊗A"));
    }
    let mut rng = crate::exactalg::random::seeded(seed);
    let r = backend.random_object(field, &mut rng, 3);
    let name = format!("R{}", r.dim);
    probes.push(r.renamed(name));
    Ok(probes)
}

impl<K: Field> ObjData<K> {
    pub fn kind(&self) -> &'static str {
        match self {
            ObjData::Plain => "plain",
            ObjData::Graded(_) => "graded",
            ObjData::Module { .. } => "module",
            ObjData::YetterDrinfeld { .. } => "yetter-drinfeld",
            ObjData::Bimodule(_) => "bimodule",
        }
    }
}
