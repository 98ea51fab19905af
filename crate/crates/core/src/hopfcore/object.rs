//! Objects of the finite backend categories: a dimension plus whatever extra
//! structure the ambient category needs (grading, module or Yetter–Drinfeld data).

use std::fmt;
use std::sync::Arc;

use crate::exactalg::{Field, Matrix};
use crate::monadrep::bimodule::BimoduleObj;

/// Degree in a finitely generated abelian group `ℤ^a × ℤ/n₁ × …`, one
/// component per cyclic generator.
pub type Degree = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjData<K: Field> {
    Plain,
    /// Degree of every basis vector.
    Graded(Vec<Degree>),
    /// Left module over the context Hopf algebra: `H⊗X → X`.
    Module { action: Arc<Matrix<K>> },
    /// Left–left Yetter–Drinfeld module: `H⊗X → X` and `X → H⊗X`.
    YetterDrinfeld { action: Arc<Matrix<K>>, coaction: Arc<Matrix<K>> },
    /// Bimodule over a base algebra, presented as a tensor word.
    Bimodule(Arc<BimoduleObj<K>>),
}

/// An object together with a display name used in reports.
#[derive(Clone, PartialEq, Eq)]
pub struct Obj<K: Field> {
    pub dim: usize,
    pub data: ObjData<K>,
    pub name: String,
}

impl<K: Field> fmt::Debug for Obj<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim)
    }
}

impl<K: Field> Obj<K> {
    pub fn plain(dim: usize) -> Self {
        Obj { dim, data: ObjData::Plain, name: plain_name(dim) }
    }

    pub fn graded(degrees: Vec<Degree>) -> Self {
        let name = format!(
            "k({})",
            degrees.iter().map(|d| d.iter().map(i64::to_string).collect::<Vec<_>>().join(",")).collect::<Vec<_>>().join(" ⊕ ")
        );
        Obj { dim: degrees.len(), data: ObjData::Graded(degrees), name }
    }

    pub fn module(action: Matrix<K>) -> Self {
        let dim = action.rows();
        Obj { dim, data: ObjData::Module { action: Arc::new(action) }, name: format!("module of dim {dim}") }
    }

    pub fn yetter_drinfeld(action: Matrix<K>, coaction: Matrix<K>) -> Self {
        let dim = action.rows();
        Obj {
            dim,
            data: ObjData::YetterDrinfeld { action: Arc::new(action), coaction: Arc::new(coaction) },
            name: format!("YD module of dim {dim}"),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn degrees(&self) -> Option<&[Degree]> {
        match &self.data {
            ObjData::Graded(d) => Some(d),
            _ => None,
        }
    }

    pub fn action(&self) -> Option<&Matrix<K>> {
        match &self.data {
            ObjData::Module { action } | ObjData::YetterDrinfeld { action, .. } => Some(action),
            _ => None,
        }
    }

    pub fn coaction(&self) -> Option<&Matrix<K>> {
        match &self.data {
            ObjData::YetterDrinfeld { coaction, .. } => Some(coaction),
            _ => None,
        }
    }

    /// Same object, same data, different display name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        Obj { dim: self.dim, data: self.data.clone(), name: name.into() }
    }

    /// Whether two objects are the same object of the category (names ignored).
    pub fn same_as(&self, other: &Obj<K>) -> bool {
        self.dim == other.dim && self.data == other.data
    }

    pub fn bimodule(&self) -> Option<&Arc<BimoduleObj<K>>> {
        match &self.data {
            ObjData::Bimodule(b) => Some(b),
            _ => None,
        }
    }

    /// The same object with any Yetter–Drinfeld coaction forgotten.
    pub fn forget_coaction(&self) -> Self {
        match &self.data {
            ObjData::YetterDrinfeld { action, .. } => {
                Obj { dim: self.dim, data: ObjData::Module { action: action.clone() }, name: self.name.clone() }
            }
            _ => self.clone(),
        }
    }
}

fn plain_name(dim: usize) -> String {
    match dim {
        1 => "k".into(),
        n => format!("k^{n}"),
    }
}
