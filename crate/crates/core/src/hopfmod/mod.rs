//! Hopf modules and their coinvariants, induced central coalgebras of Hopf
//! monads, comodules over central coalgebras and cotensor products.

pub mod central;
pub mod cotensor;
pub mod module;

use thiserror::Error;

use crate::hopfcore::structures::HopfError;
use crate::monadrep::MonadError;

pub use central::{comonad_morphism_check, equalizer_condition_check, induced_central_coalgebra, InducedCentralCoalgebra};
pub use cotensor::{comodule_check, cotensor, cotensor_fusion, CentralCoalgebra, Comodule, Cotensor, CotensorFusion};
pub use module::{
    check_hopf_module, check_hopf_module_parts, coinvariant_map, coinvariants, hopf_module_morphism_check, random_hopf_module,
    sweedler_decompose, Coinvariants, HopfModule, SweedlerDecomposition,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfModError {
    #[error("not a Hopf module: {0}")]
    InvalidHopfModule(String),
    #[error("coinvariants disagree: {0}")]
    IdempotentMismatch(String),
    #[error("not an isomorphism: {0}")]
    NotAnIso(String),
    #[error("not pre-Hopf: {0}")]
    PreHopfFails(String),
    #[error("not a comodule: {0}")]
    InvalidComodule(String),
    #[error("the central coalgebra is not cocommutative")]
    NotCocommutative,
    #[error("the induced coaction does not land in the cotensor product")]
    CoactionUndefined,
    #[error(transparent)]
    Monad(#[from] MonadError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}
