//! Exact linear and tensor algebra over ℚ and 𝔽ₚ.

pub mod echelon;
pub mod equations;
pub mod field;
pub mod matrix;
pub mod random;
pub mod rational;
pub mod space;
pub mod tensor;

pub use equations::{affine_solutions, homogeneous_solutions};
pub use echelon::{quotient_by_span, quotient_by_span_dim, Inversion, KernelImage, Quotient, Splitting};
pub use field::{is_prime, Field, FieldError, FieldSpec, PrimeField, Rationals};
pub use rational::Rational;
pub use matrix::{chain, LinAlgError, Matrix};
pub use space::{BasedSpace, DuplicateLabel};
pub use tensor::{flat_index, flip, id, multi_index, permute_factors, tensor_all, tensor_then};
