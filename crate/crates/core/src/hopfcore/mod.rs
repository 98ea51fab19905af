//! Bialgebras and Hopf algebras in braided categories, their fusion
//! operators and antipodes.

pub mod builtins;
pub mod checks;
pub mod fusion;
pub mod object;
pub mod structures;

pub use builtins::{builtin, BUILTIN_NAMES};
pub use checks::{check_antipode_properties, check_bialgebra, check_lax_half_braiding, check_yetter_drinfeld_module};
pub use fusion::{
    extract_antipode, extract_opantipode, fusion_inverse_from_antipode, fusion_operator, opfusion_operator,
    AntipodeOutcome,
};
pub use object::{Degree, Obj, ObjData};
pub use structures::{
    AlgebraData, Bicharacter, BraidedBialgebra, BraidingContext, CoalgebraData, HopfAlgebraData, HopfError,
};
