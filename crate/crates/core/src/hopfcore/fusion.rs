//! Fusion and opfusion operators of a bialgebra and the antipodes they encode.

use super::structures::{BraidedBialgebra, HopfError};
use crate::exactalg::{id, Field, Matrix};

/// `a⊗b ↦ a₍₁₎⊗a₍₂₎b`, i.e. `(A⊗m)(Δ⊗A)`.
pub fn fusion_operator<K: Field>(b: &BraidedBialgebra<K>) -> Matrix<K> {
    let i = id(b.field(), b.dim());
    &i.tensor(&b.alg.m) * &b.coalg.delta.tensor(&i)
}

/// `(m⊗A)(A⊗τ_{A,A})(Δ⊗A)`.
pub fn opfusion_operator<K: Field>(b: &BraidedBialgebra<K>) -> Result<Matrix<K>, HopfError> {
    let i = id(b.field(), b.dim());
    let tau = b.tau()?;
    Ok(&b.alg.m.tensor(&i) * &(&i.tensor(&tau) * &b.coalg.delta.tensor(&i)))
}

/// Result of an antipode extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntipodeOutcome<K: Field> {
    Antipode(Matrix<K>),
    /// The operator was singular: no antipode exists.
    Singular { rank: usize, size: usize },
}

impl<K: Field> AntipodeOutcome<K> {
    pub fn antipode(&self) -> Option<&Matrix<K>> {
        match self {
            AntipodeOutcome::Antipode(s) => Some(s),
            AntipodeOutcome::Singular { .. } => None,
        }
    }

    pub fn into_antipode(self) -> Option<Matrix<K>> {
        match self {
            AntipodeOutcome::Antipode(s) => Some(s),
            AntipodeOutcome::Singular { .. } => None,
        }
    }
}

/// Inverts the fusion operator and reads off `S = (ε⊗A)𝕙⁻¹(A⊗u)`, then
/// verifies both antipode axioms.
pub fn extract_antipode<K: Field>(b: &BraidedBialgebra<K>) -> Result<AntipodeOutcome<K>, HopfError> {
    let f = b.field();
    let n = b.dim();
    let i = id(f, n);
    let fusion = fusion_operator(b);
    let inv = fusion.try_invert();
    let Some(hinv) = inv.inverse else {
        return Ok(AntipodeOutcome::Singular { rank: inv.rank, size: n * n });
    };
    let s = &b.coalg.eps.tensor(&i) * &(&hinv * &i.tensor(&b.alg.u));
    let ue = &b.alg.u * &b.coalg.eps;
    let left = &b.alg.m * &(&s.tensor(&i) * &b.coalg.delta);
    let right = &b.alg.m * &(&i.tensor(&s) * &b.coalg.delta);
    if left != ue || right != ue {
        return Err(HopfError::InternalInconsistency(
            "fusion operator is invertible but the extracted antipode fails its axioms".into(),
        ));
    }
    Ok(AntipodeOutcome::Antipode(s))
}

/// Inverts the opfusion operator and reads off `S′ = (ε⊗A)𝕙′⁻¹(u⊗A)`,
/// verified against `mτ⁻¹(S′⊗id)Δ = uε = mτ⁻¹(id⊗S′)Δ`.
pub fn extract_opantipode<K: Field>(b: &BraidedBialgebra<K>) -> Result<AntipodeOutcome<K>, HopfError> {
    let f = b.field();
    let n = b.dim();
    let i = id(f, n);
    let tau = b.tau()?;
    let tau_inv = tau.try_invert().inverse.ok_or(HopfError::BraidingNotInvertible)?;
    let opfusion = opfusion_operator(b)?;
    let inv = opfusion.try_invert();
    let Some(hinv) = inv.inverse else {
        return Ok(AntipodeOutcome::Singular { rank: inv.rank, size: n * n });
    };
    let s = &b.coalg.eps.tensor(&i) * &(&hinv * &b.alg.u.tensor(&i));
    let ue = &b.alg.u * &b.coalg.eps;
    let mop = &b.alg.m * &tau_inv;
    let left = &mop * &(&s.tensor(&i) * &b.coalg.delta);
    let right = &mop * &(&i.tensor(&s) * &b.coalg.delta);
    if left != ue || right != ue {
        return Err(HopfError::InternalInconsistency(
            "opfusion operator is invertible but the extracted opantipode fails its axioms".into(),
        ));
    }
    Ok(AntipodeOutcome::Antipode(s))
}

/// The closed-form inverse `(A⊗m)(A⊗S⊗A)(Δ⊗A)` of the fusion operator.
pub fn fusion_inverse_from_antipode<K: Field>(b: &BraidedBialgebra<K>, antipode: &Matrix<K>) -> Matrix<K> {
    let i = id(b.field(), b.dim());
    let middle = crate::exactalg::tensor_all(&[&i, antipode, &i]);
    &i.tensor(&b.alg.m) * &(&middle * &b.coalg.delta.tensor(&i))
}
