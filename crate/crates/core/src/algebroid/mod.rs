//! Left bialgebroids over a finite-dimensional base algebra, their Takeuchi
//! products and Galois maps, and the bimonad `T_A = A⊗_{R^e}−` on
//! `R`-bimodules.

pub mod galois;
pub mod monad;
pub mod structure;

use thiserror::Error;

use crate::hopfcore::HopfError;
use crate::monadrep::MonadError;

pub use crate::monadrep::bimodule::BaseAlgebra;
pub use galois::{galois_maps, GaloisMap, GaloisMaps};
pub use monad::{galois_fusion_check, BialgebroidBimonad};
pub use structure::{
    build_quotients, check_bialgebroid, diagonal_algebra, enveloping_algebra, enveloping_bialgebroid, pair_groupoid, takeuchi_membership,
    takeuchi_subspace, Bialgebroid, QuotientKind, QuotientTensor, Quotients,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebroidError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{map} is not well defined on {source_space}: a relation is sent outside the target relations")]
    IllDefinedMap { map: String, source_space: String },
    #[error("not a bimodule object: {0}")]
    NotABimodule(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Monad(#[from] MonadError),
}
