//! Exact finite-dimensional computations with bialgebras, Hopf monads, Hopf
//! modules and bialgebroids.

pub mod algebroid;
pub mod antipodes;
pub mod crossprod;
pub mod exactalg;
pub mod hopfcore;
pub mod hopfmod;
pub mod monadrep;
pub mod report;

pub use exactalg::{Field, FieldSpec, Matrix, PrimeField, Rational, Rationals};

/// Matrices over ℚ.
pub type QMatrix = Matrix<Rationals>;
/// Matrices over a prime field.
pub type FpMatrix = Matrix<PrimeField>;
