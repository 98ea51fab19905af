//! Bimodules over a finite-dimensional base algebra `R` (equivalently left
//! `R^e`-modules), with `⊗_R` as a strictly associative monoidal product.
//!
//! An object is a word of atoms; its underlying space is the Kronecker
//! product of the atoms modulo the balancing relations `x·r ⊗ y = x ⊗ r·y`
//! between adjacent factors. The empty word is the unit `R`.

use std::sync::Arc;

use crate::exactalg::{homogeneous_solutions, id, quotient_by_span_dim, tensor_all, Field, Matrix};
use crate::hopfcore::{AlgebraData, HopfError, Obj, ObjData};

/// The base algebra `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseAlgebra<K: Field> {
    pub alg: AlgebraData<K>,
}

impl<K: Field> BaseAlgebra<K> {
    pub fn new(alg: AlgebraData<K>) -> Result<Self, HopfError> {
        let r = alg.check();
        if let Some(bad) = r.first_failure() {
            return Err(HopfError::InvalidContext(format!("base algebra fails {}", bad.name)));
        }
        Ok(BaseAlgebra { alg })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> &K {
        self.alg.field()
    }

    /// `R` with its regular bimodule structure, as an atom.
    pub fn regular_atom(&self) -> Atom<K> {
        Atom { name: "R".into(), dim: self.dim(), left: self.alg.m.clone(), right: self.alg.m.clone() }
    }

    /// `R^e = R⊗R` with `r·(a⊗b)·r′ = ra⊗br′`, the free module of rank one.
    pub fn enveloping_atom(&self) -> Atom<K> {
        let f = self.field();
        let n = self.dim();
        let i = id(f, n);
        let left = self.alg.m.tensor(&i);
        let right = i.tensor(&self.alg.m);
        Atom { name: "R^e".into(), dim: n * n, left, right }
    }
}

/// A bimodule that is not presented as a tensor product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom<K: Field> {
    pub name: String,
    pub dim: usize,
    /// `R⊗X → X`.
    pub left: Matrix<K>,
    /// `X⊗R → X`.
    pub right: Matrix<K>,
}

impl<K: Field> Atom<K> {
    /// Left multiplication by the basis element `r` of the base.
    pub fn left_by(&self, base_dim: usize, r: usize) -> Matrix<K> {
        let f = self.left.field();
        let e = Matrix::from_triplets(f, base_dim, 1, [(r, 0, f.one())]);
        &self.left * &e.tensor(&id(f, self.dim))
    }

    pub fn right_by(&self, base_dim: usize, r: usize) -> Matrix<K> {
        let f = self.left.field();
        let e = Matrix::from_triplets(f, base_dim, 1, [(r, 0, f.one())]);
        &self.right * &id(f, self.dim).tensor(&e)
    }

    /// Bimodule axioms: both actions associative and unital, and they commute.
    pub fn check(&self, base: &BaseAlgebra<K>) -> crate::report::CheckReport {
        let f = base.field();
        let n = base.dim();
        let ix = id(f, self.dim);
        let ir = id(f, n);
        let m = &base.alg.m;
        let mut r = crate::report::CheckReport::new();
        r.equal_indexed("left action associative", &(&self.left * &ir.tensor(&self.left)), &(&self.left * &m.tensor(&ix)));
        r.equal_indexed("left action unital", &(&self.left * &base.alg.u.tensor(&ix)), &ix);
        r.equal_indexed("right action associative", &(&self.right * &self.right.tensor(&ir)), &(&self.right * &ix.tensor(m)));
        r.equal_indexed("right action unital", &(&self.right * &ix.tensor(&base.alg.u)), &ix);
        r.equal_indexed(
            "actions commute",
            &(&self.right * &self.left.tensor(&ir)),
            &(&self.left * &ir.tensor(&self.right)),
        );
        r
    }
}

/// A tensor word of atoms with its balanced quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleObj<K: Field> {
    pub base: Arc<BaseAlgebra<K>>,
    pub atoms: Vec<Arc<Atom<K>>>,
    /// Dimension of the Kronecker product of the atoms (`dim R` for the empty word).
    pub kron_dim: usize,
    /// Kronecker product → balanced quotient.
    pub projection: Matrix<K>,
    /// A linear section of [`BimoduleObj::projection`].
    pub section: Matrix<K>,
    /// `R⊗X → X` on the quotient.
    pub left: Matrix<K>,
    /// `X⊗R → X` on the quotient.
    pub right: Matrix<K>,
}

impl<K: Field> BimoduleObj<K> {
    pub fn word(base: Arc<BaseAlgebra<K>>, atoms: Vec<Arc<Atom<K>>>) -> Self {
        let f = base.field().clone();
        let n = base.dim();
        if atoms.is_empty() {
            let m = base.alg.m.clone();
            return BimoduleObj {
                base,
                atoms,
                kron_dim: n,
                projection: id(&f, n),
                section: id(&f, n),
                left: m.clone(),
                right: m,
            };
        }
        let dims: Vec<usize> = atoms.iter().map(|a| a.dim).collect();
        let kron_dim: usize = dims.iter().product();
        let mut relations = Matrix::zeros(&f, kron_dim, 0);
        for i in 0..atoms.len().saturating_sub(1) {
            let before: usize = dims[..i].iter().product();
            let after: usize = dims[i + 2..].iter().product();
            for r in 0..n {
                let act_right = tensor_all(&[&id(&f, before), &atoms[i].right_by(n, r), &id(&f, dims[i + 1] * after)]);
                let act_left = tensor_all(&[&id(&f, before * dims[i]), &atoms[i + 1].left_by(n, r), &id(&f, after)]);
                relations = relations.hstack(&(&act_right - &act_left));
            }
        }
        let q = quotient_by_span_dim(kron_dim, &relations);
        let rest: usize = dims[1..].iter().product();
        let first: usize = dims[..dims.len() - 1].iter().product();
        let left = &q.projection * &(&atoms[0].left.tensor(&id(&f, rest)) * &id(&f, n).tensor(&q.section));
        let last = atoms.last().expect("nonempty");
        let right = &q.projection * &(&id(&f, first).tensor(&last.right) * &q.section.tensor(&id(&f, n)));
        BimoduleObj { base, atoms, kron_dim, projection: q.projection, section: q.section, left, right }
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// `R` acting on the first factor of the Kronecker product: `R⊗kron → kron`.
    fn kron_left(&self) -> Matrix<K> {
        let f = self.base.field();
        if self.atoms.is_empty() {
            return self.base.alg.m.clone();
        }
        let rest: usize = self.atoms[1..].iter().map(|a| a.dim).product();
        self.atoms[0].left.tensor(&id(f, rest))
    }

    /// `R` acting on the last factor: `kron⊗R → kron`.
    fn kron_right(&self) -> Matrix<K> {
        let f = self.base.field();
        if self.atoms.is_empty() {
            return self.base.alg.m.clone();
        }
        let k = self.atoms.len();
        let first: usize = self.atoms[..k - 1].iter().map(|a| a.dim).product();
        id(f, first).tensor(&self.atoms[k - 1].right)
    }
}

/// The object presented by a word of atoms.
pub fn word_object<K: Field>(base: &Arc<BaseAlgebra<K>>, atoms: Vec<Arc<Atom<K>>>) -> Obj<K> {
    let name = if atoms.is_empty() { "R".to_string() } else { atoms.iter().map(|a| a.name.as_str()).collect::<Vec<_>>().join("⊗") };
    let b = BimoduleObj::word(base.clone(), atoms);
    Obj { dim: b.dim(), data: ObjData::Bimodule(Arc::new(b)), name }
}

pub fn atom_object<K: Field>(base: &Arc<BaseAlgebra<K>>, atom: Atom<K>) -> Obj<K> {
    word_object(base, vec![Arc::new(atom)])
}

fn as_bimodule<K: Field>(x: &Obj<K>) -> Result<&Arc<BimoduleObj<K>>, HopfError> {
    x.bimodule().ok_or_else(|| HopfError::MissingObjectData(format!("{} is not a bimodule", x.name)))
}

pub fn tensor_objects<K: Field>(x: &Obj<K>, y: &Obj<K>) -> Result<Obj<K>, HopfError> {
    let (bx, by) = (as_bimodule(x)?, as_bimodule(y)?);
    if bx.base != by.base {
        return Err(HopfError::InvalidContext("bimodules over different base algebras".into()));
    }
    let atoms = bx.atoms.iter().chain(&by.atoms).cloned().collect();
    let mut out = word_object(&bx.base, atoms);
    out.name = match (bx.atoms.is_empty(), by.atoms.is_empty()) {
        (true, _) => y.name.clone(),
        (_, true) => x.name.clone(),
        _ => format!("{}⊗{}", x.name, y.name),
    };
    Ok(out)
}

/// `kron_X ⊗ kron_Y → X⊗_R Y`.
fn fold<K: Field>(bx: &BimoduleObj<K>, by: &BimoduleObj<K>, xy: &BimoduleObj<K>) -> Matrix<K> {
    match (bx.atoms.is_empty(), by.atoms.is_empty()) {
        (false, false) => xy.projection.clone(),
        (true, false) => &by.projection * &by.kron_left(),
        (false, true) => &bx.projection * &bx.kron_right(),
        (true, true) => bx.base.alg.m.clone(),
    }
}

/// `X⊗_R Y → kron_X ⊗ kron_Y`, a section of [`fold`].
fn unfold<K: Field>(bx: &BimoduleObj<K>, by: &BimoduleObj<K>, xy: &BimoduleObj<K>) -> Matrix<K> {
    let base = &bx.base;
    match (bx.atoms.is_empty(), by.atoms.is_empty()) {
        (false, false) => xy.section.clone(),
        (true, false) => base.alg.u.tensor(&by.section),
        (false, true) => bx.section.tensor(&base.alg.u),
        (true, true) => base.alg.u.tensor(&id(base.field(), base.dim())),
    }
}

/// `f⊗_R g: X⊗Y → X′⊗Y′` for bimodule maps `f: X → X′`, `g: Y → Y′`.
pub fn tensor_morphisms<K: Field>(
    f: &Matrix<K>,
    x: &Obj<K>,
    x2: &Obj<K>,
    g: &Matrix<K>,
    y: &Obj<K>,
    y2: &Obj<K>,
) -> Result<Matrix<K>, HopfError> {
    let (bx, bx2, by, by2) = (as_bimodule(x)?, as_bimodule(x2)?, as_bimodule(y)?, as_bimodule(y2)?);
    let xy = as_bimodule(&tensor_objects(x, y)?)?.clone();
    let xy2 = as_bimodule(&tensor_objects(x2, y2)?)?.clone();
    let lift_f = &bx2.section * &(f * &bx.projection);
    let lift_g = &by2.section * &(g * &by.projection);
    Ok(&fold(bx2, by2, &xy2) * &(&lift_f.tensor(&lift_g) * &unfold(bx, by, &xy)))
}

/// `None` if `f` commutes with both actions.
pub fn morphism_violation<K: Field>(f: &Matrix<K>, x: &Obj<K>, y: &Obj<K>) -> Option<String> {
    let (Ok(bx), Ok(by)) = (as_bimodule(x), as_bimodule(y)) else {
        return Some("objects are not bimodules".into());
    };
    let field = f.field();
    let n = bx.base.dim();
    let ir = id(field, n);
    if let Some((_, c)) = (f * &bx.left).first_difference(&(&by.left * &ir.tensor(f))) {
        return Some(format!("not left R-linear at basis index {c} of R⊗X"));
    }
    if let Some((_, c)) = (f * &bx.right).first_difference(&(&by.right * &f.tensor(&ir))) {
        return Some(format!("not right R-linear at basis index {c} of X⊗R"));
    }
    None
}

/// A basis of the bimodule maps `X → Y`.
pub fn hom_basis<K: Field>(x: &Obj<K>, y: &Obj<K>, field: &K) -> Vec<Matrix<K>> {
    let (Ok(bx), Ok(by)) = (as_bimodule(x), as_bimodule(y)) else {
        return Vec::new();
    };
    let ir = id(field, bx.base.dim());
    homogeneous_solutions(field, y.dim, x.dim, |f| {
        vec![&(f * &bx.left) - &(&by.left * &ir.tensor(f)), &(f * &bx.right) - &(&by.right * &f.tensor(&ir))]
    })
}

/// `X⊗Y → X⊗_R Y` on the underlying spaces.
pub fn join_map<K: Field>(x: &Obj<K>, y: &Obj<K>) -> Result<Matrix<K>, HopfError> {
    let (bx, by) = (as_bimodule(x)?, as_bimodule(y)?);
    let xy = as_bimodule(&tensor_objects(x, y)?)?.clone();
    Ok(&fold(bx, by, &xy) * &bx.section.tensor(&by.section))
}

/// A linear section `X⊗_R Y → X⊗Y` of [`join_map`].
pub fn split_map<K: Field>(x: &Obj<K>, y: &Obj<K>) -> Result<Matrix<K>, HopfError> {
    let (bx, by) = (as_bimodule(x)?, as_bimodule(y)?);
    let xy = as_bimodule(&tensor_objects(x, y)?)?.clone();
    Ok(&bx.projection.tensor(&by.projection) * &unfold(bx, by, &xy))
}
