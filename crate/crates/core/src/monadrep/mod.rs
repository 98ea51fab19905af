//! Bimonads on finite monoidal categories, evaluated on probe objects.
//!
//! Natural transformations are compared on finite probe sets. For the
//! representable instances every structure map is a structure-constant
//! matrix tensored with identities, so agreement on the default probes
//! implies agreement on every object.

pub mod augment;
pub mod backend;
pub mod bimodule;
pub mod bimonad;
pub mod hopfop;
pub mod instances;
pub mod reconstruct;

pub use augment::{augmentation_to_central_bialgebra, braided_compatibility_check, Augmented, CentralBialgebra};
pub use backend::{compose_all, default_probes, direct_sum_action, Backend, MonadError, Mor};
pub use bimonad::{
    check_bimonad_axioms, fusion_identity_suite, fusion_left, fusion_right, hopf_check, invert, Bimonad, HopfVerdicts,
    SweepLimits,
};
pub use hopfop::{hopf_operator_left, hopf_operator_right, HopfOperator, TModule};
pub use instances::{graded_line, IdentityBimonad, RepresentableBimonad, TruncationBimonad};
pub use reconstruct::{reconstruct_from_fusion, FusionData, ReconstructedBimonad};
