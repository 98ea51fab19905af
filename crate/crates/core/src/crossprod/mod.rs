//! Smash products, bosonization, Radford's decomposition of Hopf algebras
//! with a projection, and induction of modules along Hopf algebra maps.

pub mod bosonize;
pub mod induce;
pub mod quasitriangular;
pub mod radford;
pub mod smash;

use thiserror::Error;

use crate::exactalg::{chain, Field, Matrix};
use crate::hopfcore::structures::{BraidedBialgebra, HopfError};
use crate::report::CheckReport;

pub use bosonize::{bosonization, composite_fusion_check, retract_check, retract_maps, Bosonization};
pub use induce::{cross_quotient_modules, InducedModule};
pub use quasitriangular::QuasitriangularHopf;
pub use radford::{coinvariant_projector, projection_check, radford_decompose, HopfProjection, RadfordDecomposition};
pub use smash::{module_algebra_check, smash_product, ModuleAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossError {
    #[error("module algebra axioms fail: {0}")]
    ModuleAlgebraAxioms(String),
    #[error("Yetter–Drinfeld axioms fail: {0}")]
    YetterDrinfeldAxioms(String),
    #[error("bialgebra check fails: {0}")]
    BialgebraCheck(String),
    #[error("projection invariants fail: {0}")]
    ProjectionInvariants(String),
    #[error("decomposition inconsistent: {0}")]
    DecompositionInconsistent(String),
    #[error("not a bialgebra morphism: {0}")]
    NotAMorphism(String),
    #[error("not a module: {0}")]
    InvalidModule(String),
    #[error("quasitriangular structure invalid: {0}")]
    Quasitriangular(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

pub(crate) fn describe_failure(r: &CheckReport) -> String {
    match r.first_failure() {
        Some(item) => match &item.witness {
            Some(w) => format!("{} at {w}", item.name),
            None => item.name.clone(),
        },
        None => "no failure".into(),
    }
}

/// Checks that `f: from → to` preserves multiplication, unit, coproduct
/// and counit.
pub fn bialgebra_morphism_check<K: Field>(f: &Matrix<K>, from: &BraidedBialgebra<K>, to: &BraidedBialgebra<K>) -> CheckReport {
    let mut r = CheckReport::new();
    if f.shape() != (to.dim(), from.dim()) {
        r.fail("shape", Some(format!("{}x{} for {} → {}", f.rows(), f.cols(), from.dim(), to.dim())));
        return r;
    }
    let lbl = |k: usize| move |j: usize| from.label(k, j);
    r.equal("preserves multiplication", &(f * &from.alg.m), &chain(&[&to.alg.m, &f.tensor(f)]), lbl(2));
    r.equal("preserves unit", &(f * &from.alg.u), &to.alg.u, |_| "1".into());
    r.equal("preserves coproduct", &(&to.coalg.delta * f), &(&f.tensor(f) * &from.coalg.delta), lbl(1));
    r.equal("preserves counit", &(&to.coalg.eps * f), &from.coalg.eps, lbl(1));
    r
}
