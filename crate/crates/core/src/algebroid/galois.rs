use crate::exactalg::{Field, Matrix};
use crate::report::CheckItem;

use super::structure::{build_quotients, Bialgebroid, QuotientTensor, Quotients};
use super::AlgebroidError;

/// A map between balanced quotients, induced from a map on `A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisMap<K: Field> {
    pub name: String,
    pub source: QuotientTensor<K>,
    pub target: QuotientTensor<K>,
    pub matrix: Matrix<K>,
    pub rank: usize,
    pub inverse: Option<Matrix<K>>,
}

impl<K: Field> GaloisMap<K> {
    fn induce(name: &str, lift: &Matrix<K>, source: &QuotientTensor<K>, target: &QuotientTensor<K>) -> Result<Self, AlgebroidError> {
        if !(&target.projection * &(lift * &source.relations)).is_zero() {
            return Err(AlgebroidError::IllDefinedMap { map: name.into(), source_space: source.kind.describe().into() });
        }
        let matrix = &target.projection * &(lift * &source.section);
        let inv = matrix.try_invert();
        Ok(GaloisMap {
            name: name.into(),
            source: source.clone(),
            target: target.clone(),
            matrix,
            rank: inv.rank,
            inverse: inv.inverse,
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn verdict(&self) -> CheckItem {
        let detail = format!(
            "{} (dim {}) → {} (dim {}), rank {}",
            self.source.kind.describe(),
            self.source.dim(),
            self.target.kind.describe(),
            self.target.dim(),
            self.rank
        );
        CheckItem {
            name: format!("{} bijective", self.name),
            passed: self.is_bijective(),
            witness: (!self.is_bijective()).then(|| format!("rank {} of {}", self.rank, self.source.dim())),
            detail: Some(detail),
        }
    }
}

/// The four maps whose bijectivity characterizes left/right (pre-)Hopf
/// algebroids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisMaps<K: Field> {
    /// `A⊗_{R^op}A → A⊗_R A`, `a⊗b ↦ a₍₁₎⊗a₍₂₎b`.
    pub hl: GaloisMap<K>,
    /// `A_s⊗_R A → A⊗_R A`, `a⊗b ↦ a₍₁₎b⊗a₍₂₎`.
    pub hr: GaloisMap<K>,
    /// `A⊗_{R^e}A → Ā⊗_R A`.
    pub hl_pre: GaloisMap<K>,
    /// `A⊗_{R^e}A → A⊗_R Ā`.
    pub hr_pre: GaloisMap<K>,
    pub quotients: Quotients<K>,
}

impl<K: Field> GaloisMaps<K> {
    pub fn all(&self) -> [&GaloisMap<K>; 4] {
        [&self.hl, &self.hr, &self.hl_pre, &self.hr_pre]
    }
}

pub fn galois_maps<K: Field>(b: &Bialgebroid<K>) -> Result<GaloisMaps<K>, AlgebroidError> {
    let q = build_quotients(b);
    let (left, right) = (b.left_galois_lift(), b.right_galois_lift());
    Ok(GaloisMaps {
        hl: GaloisMap::induce("Hl", &left, &q.a_tens_rop_a, &q.a_tens_r_a)?,
        hr: GaloisMap::induce("Hr", &right, &q.a_tens_rs_a, &q.a_tens_r_a)?,
        hl_pre: GaloisMap::induce("HlPre", &left, &q.a_tens_re_a, &q.abar_tens_r_a)?,
        hr_pre: GaloisMap::induce("HrPre", &right, &q.a_tens_re_a, &q.a_tens_r_abar)?,
        quotients: q,
    })
}
