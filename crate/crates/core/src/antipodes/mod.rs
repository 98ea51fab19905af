//! Internal Homs, binary and unary antipodes of Hopf monads, and internal
//! Homs of modules over a Hopf monad.

pub mod binary;
pub mod inthom;
pub mod modhom;
pub mod unary;

pub use binary::{
    antipode_axiom_check, antipode_axiom_sides, antipode_property_suite, binary_antipode_from_fusion, currying_iso, fusion_inverse_from_antipode,
    BinaryAntipode,
};
pub use inthom::{internal_hom, left_dual, right_dual, InternalHom, Side};
pub use modhom::{module_hom_adjunction_check, module_internal_hom, t_linear_maps, tensor_modules};
pub use unary::{binary_from_unary, unary_antipode, unary_axiom_check, unary_from_binary, unary_relation_check, UnaryAntipode};
