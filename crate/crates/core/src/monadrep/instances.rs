//! Concrete bimonads: the identity, the representable `A⊗−`, and the
//! truncation of `ℤ`-graded spaces to non-negative degrees.

use super::backend::{Backend, Mor, MonadError};
use super::bimonad::{fusion_left, fusion_right, invert, Bimonad};
use crate::exactalg::{id, Field, Matrix};
use crate::hopfcore::{BraidedBialgebra, BraidingContext, Obj};

/// The identity bimonad.
#[derive(Clone, Debug)]
pub struct IdentityBimonad<K: Field> {
    backend: Backend<K>,
    field: K,
}

impl<K: Field> IdentityBimonad<K> {
    pub fn new(backend: Backend<K>, field: K) -> Self {
        IdentityBimonad { backend, field }
    }
}

impl<K: Field> Bimonad<K> for IdentityBimonad<K> {
    fn name(&self) -> String {
        "identity".into()
    }
    fn backend(&self) -> &Backend<K> {
        &self.backend
    }
    fn field(&self) -> &K {
        &self.field
    }
    fn apply(&self, x: &Obj<K>) -> Result<Obj<K>, MonadError> {
        Ok(x.clone())
    }
    fn apply_mor(&self, f: &Mor<K>) -> Result<Mor<K>, MonadError> {
        Ok(f.clone())
    }
    fn mu(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        Ok(Mor::identity(x, &self.field))
    }
    fn eta(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        Ok(Mor::identity(x, &self.field))
    }
    fn t2(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
        Ok(Mor::identity(&self.backend.tensor(x, y)?, &self.field))
    }
    fn t0(&self) -> Result<Mor<K>, MonadError> {
        Ok(Mor::identity(&self.backend.unit(), &self.field))
    }
}

/// `T = A⊗−` for a bialgebra `A` in the backend category, with
/// `T₂(X,Y) = (A⊗σ_{A,X}⊗Y)(Δ⊗X⊗Y)` and `T₀ = ε`.
#[derive(Clone, Debug)]
pub struct RepresentableBimonad<K: Field> {
    backend: Backend<K>,
    bialg: BraidedBialgebra<K>,
    object: Obj<K>,
}

impl<K: Field> RepresentableBimonad<K> {
    /// Fails unless the bialgebra lives in the backend's braided context.
    pub fn new(backend: Backend<K>, bialg: BraidedBialgebra<K>) -> Result<Self, MonadError> {
        let matches = match (&backend, &bialg.ctx) {
            (Backend::VectK, BraidingContext::Trivial) => true,
            (Backend::Graded(a), BraidingContext::GradedBicharacter(b)) => a == b,
            (Backend::ModH(a), BraidingContext::YetterDrinfeld(b)) => a == b,
            _ => false,
        };
        if !matches {
            return Err(MonadError::ContextMismatch(format!(
                "a bialgebra in the {} context cannot act on the {} backend",
                bialg.ctx.kind_name(),
                backend.name()
            )));
        }
        let object = bialg.object();
        Ok(RepresentableBimonad { backend, bialg, object })
    }

    pub fn bialgebra(&self) -> &BraidedBialgebra<K> {
        &self.bialg
    }

    /// `A` as an object of the backend.
    pub fn object(&self) -> &Obj<K> {
        &self.object
    }

    fn t_name(x: &Obj<K>) -> String {
        format!("T({})", x.name)
    }

    /// Inverts a fusion operator of the shape `F ⊗ id_Y` through its small
    /// factor `F` after checking the factorization exactly.
    fn factored_inverse(&self, full: &Mor<K>, small: &Mor<K>, y: &Obj<K>) -> Result<(Option<Mor<K>>, usize), MonadError> {
        let f = self.field();
        let factor = small.mat.tensor(&id(f, y.dim));
        if factor != full.mat {
            return invert(full);
        }
        let (inv, rank) = invert(small)?;
        Ok(match inv {
            Some(i) => (Some(Mor::new(full.cod.clone(), full.dom.clone(), i.mat.tensor(&id(f, y.dim)))?), rank * y.dim),
            None => (None, rank * y.dim),
        })
    }
}

impl<K: Field> Bimonad<K> for RepresentableBimonad<K> {
    fn name(&self) -> String {
        "representable".into()
    }
    fn backend(&self) -> &Backend<K> {
        &self.backend
    }
    fn field(&self) -> &K {
        self.bialg.field()
    }
    fn apply(&self, x: &Obj<K>) -> Result<Obj<K>, MonadError> {
        Ok(self.backend.tensor(&self.object, x)?.named(Self::t_name(x)))
    }
    fn apply_mor(&self, f: &Mor<K>) -> Result<Mor<K>, MonadError> {
        let mat = id(self.field(), self.bialg.dim()).tensor(&f.mat);
        Mor::new(self.apply(&f.dom)?, self.apply(&f.cod)?, mat)
    }
    fn mu(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let tx = self.apply(x)?;
        let mat = self.bialg.alg.m.tensor(&id(self.field(), x.dim));
        Mor::new(self.apply(&tx)?, tx, mat)
    }
    fn eta(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let mat = self.bialg.alg.u.tensor(&id(self.field(), x.dim));
        Mor::new(x.clone(), self.apply(x)?, mat)
    }
    fn t2(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let f = self.field();
        let n = self.bialg.dim();
        let sigma = self.bialg.sigma(x)?;
        let split = self.bialg.coalg.delta.tensor(&id(f, x.dim * y.dim));
        let swap = id(f, n).tensor(&sigma).tensor(&id(f, y.dim));
        let dom = self.apply(&self.backend.tensor(x, y)?)?;
        let cod = self.backend.tensor(&self.apply(x)?, &self.apply(y)?)?;
        Mor::new(dom, cod, &swap * &split)
    }
    fn t0(&self) -> Result<Mor<K>, MonadError> {
        let one = self.backend.unit();
        Mor::new(self.apply(&one)?, one, self.bialg.coalg.eps.clone())
    }

    fn fusion_left_inverse(&self, x: &Obj<K>, y: &Obj<K>) -> Result<(Option<Mor<K>>, usize), MonadError> {
        let full = fusion_left(self, x, y)?;
        if y.dim <= 1 {
            return invert(&full);
        }
        let small = fusion_left(self, x, &self.backend.unit())?;
        self.factored_inverse(&full, &small, y)
    }

    fn fusion_right_inverse(&self, x: &Obj<K>, y: &Obj<K>) -> Result<(Option<Mor<K>>, usize), MonadError> {
        let full = fusion_right(self, x, y)?;
        if y.dim <= 1 {
            return invert(&full);
        }
        let small = fusion_right(self, x, &self.backend.unit())?;
        self.factored_inverse(&full, &small, y)
    }
}

/// Keeps the part of a `ℤ`-graded space in degrees `≥ 0`; `μ` is the
/// identity, `η` the projection and `T₂` kills pairs of mixed sign.
#[derive(Clone, Debug)]
pub struct TruncationBimonad<K: Field> {
    backend: Backend<K>,
    field: K,
}

impl<K: Field> TruncationBimonad<K> {
    pub fn new(field: K) -> Self {
        TruncationBimonad { backend: Backend::integer_graded(&field), field }
    }

    fn kept(x: &Obj<K>) -> Result<Vec<usize>, MonadError> {
        let degrees = x
            .degrees()
            .ok_or_else(|| MonadError::ContextMismatch(format!("{} is not graded", x.name)))?;
        Ok((0..x.dim).filter(|&i| degrees[i][0] >= 0).collect())
    }

    /// The projection `X → TX`.
    fn projection(&self, x: &Obj<K>) -> Result<Matrix<K>, MonadError> {
        let kept = Self::kept(x)?;
        Ok(Matrix::from_triplets(&self.field, kept.len(), x.dim, kept.iter().enumerate().map(|(r, &c)| (r, c, self.field.one()))))
    }
}

impl<K: Field> Bimonad<K> for TruncationBimonad<K> {
    fn name(&self) -> String {
        "truncation".into()
    }
    fn backend(&self) -> &Backend<K> {
        &self.backend
    }
    fn field(&self) -> &K {
        &self.field
    }
    fn apply(&self, x: &Obj<K>) -> Result<Obj<K>, MonadError> {
        let degrees = x.degrees().unwrap_or_default();
        let kept = Self::kept(x)?;
        let name = if kept.len() == x.dim { x.name.clone() } else { format!("T({})", x.name) };
        Ok(Obj::graded(kept.iter().map(|&i| degrees[i].clone()).collect()).named(name))
    }
    fn apply_mor(&self, f: &Mor<K>) -> Result<Mor<K>, MonadError> {
        let p = self.projection(&f.cod)?;
        let inc = self.projection(&f.dom)?.transpose();
        Mor::new(self.apply(&f.dom)?, self.apply(&f.cod)?, &p * &(&f.mat * &inc))
    }
    fn mu(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let tx = self.apply(x)?;
        Ok(Mor::identity(&tx, &self.field))
    }
    fn eta(&self, x: &Obj<K>) -> Result<Mor<K>, MonadError> {
        Mor::new(x.clone(), self.apply(x)?, self.projection(x)?)
    }
    fn t2(&self, x: &Obj<K>, y: &Obj<K>) -> Result<Mor<K>, MonadError> {
        let xy = self.backend.tensor(x, y)?;
        let (tx, ty) = (self.apply(x)?, self.apply(y)?);
        let (kx, ky) = (Self::kept(x)?, Self::kept(y)?);
        let kxy = Self::kept(&xy)?;
        let pos_x = |i: usize| kx.iter().position(|&k| k == i);
        let pos_y = |j: usize| ky.iter().position(|&k| k == j);
        let trip = kxy.iter().enumerate().filter_map(|(col, &flat)| {
            let (i, j) = (flat / y.dim, flat % y.dim);
            Some((pos_x(i)? * ty.dim + pos_y(j)?, col, self.field.one()))
        });
        let mat = Matrix::from_triplets(&self.field, tx.dim * ty.dim, kxy.len(), trip);
        Mor::new(self.apply(&xy)?, self.backend.tensor(&tx, &ty)?, mat)
    }
    fn t0(&self) -> Result<Mor<K>, MonadError> {
        let one = self.backend.unit();
        Ok(Mor::identity(&one, &self.field))
    }
}

/// The graded line `k(d)` in a single degree.
pub fn graded_line<K: Field>(d: i64) -> Obj<K> {
    Obj::graded(vec![vec![d]]).named(format!("k({d})"))
}
