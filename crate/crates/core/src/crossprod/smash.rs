//! Module algebras over a Hopf algebra and their smash products.

use super::{describe_failure, CrossError};
use crate::exactalg::{chain, id, permute_factors, tensor_all, BasedSpace, Field, Matrix};
use crate::hopfcore::structures::{AlgebraData, HopfAlgebraData};
use crate::report::CheckReport;

/// An algebra `A` with an `H`-action `H⊗A → A` making `m` and `u` `H`-linear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra<K: Field> {
    pub alg: AlgebraData<K>,
    pub action: Matrix<K>,
}

impl<K: Field> ModuleAlgebra<K> {
    pub fn new(h: &HopfAlgebraData<K>, alg: AlgebraData<K>, action: Matrix<K>) -> Result<Self, CrossError> {
        let r = module_algebra_check(h, &alg, &action);
        if !r.all_passed() {
            return Err(CrossError::ModuleAlgebraAxioms(describe_failure(&r)));
        }
        Ok(ModuleAlgebra { alg, action })
    }

    /// `h·a = ε(h)a`.
    pub fn trivial(h: &HopfAlgebraData<K>, alg: AlgebraData<K>) -> Self {
        let action = h.bialg.coalg.eps.tensor(&id(h.field(), alg.dim()));
        ModuleAlgebra { alg, action }
    }
}

pub fn module_algebra_check<K: Field>(h: &HopfAlgebraData<K>, alg: &AlgebraData<K>, action: &Matrix<K>) -> CheckReport {
    let f = h.field();
    let (hd, ad) = (h.dim(), alg.dim());
    let mut r = CheckReport::new();
    if action.shape() != (ad, hd * ad) {
        r.fail("action shape", Some(format!("{}x{}", action.rows(), action.cols())));
        return r;
    }
    let b = &h.bialg;
    let (ih, ia) = (id(f, hd), id(f, ad));
    r.extend_prefixed("algebra", alg.check());
    r.equal_indexed("action associative", &(action * &ih.tensor(action)), &(action * &b.alg.m.tensor(&ia)));
    r.equal_indexed("action unital", &(action * &b.alg.u.tensor(&ia)), &ia);
    let spread = chain(&[
        &action.tensor(action),
        &permute_factors(f, &[hd, hd, ad, ad], &[0, 2, 1, 3]),
        &b.coalg.delta.tensor(&ia.tensor(&ia)),
    ]);
    r.equal_indexed("multiplication is H-linear", &(action * &ih.tensor(&alg.m)), &(&alg.m * &spread));
    r.equal_indexed("unit is H-linear", &(action * &ih.tensor(&alg.u)), &(&alg.u * &b.coalg.eps));
    r
}

/// Product `(a⊗h)(a'⊗h') = a(h₍₁₎·a') ⊗ h₍₂₎h'` on `A⊗H`.
pub(crate) fn smash_multiplication<K: Field>(h: &HopfAlgebraData<K>, m_a: &Matrix<K>, action: &Matrix<K>) -> Matrix<K> {
    let f = h.field();
    let (hd, ad) = (h.dim(), m_a.rows());
    let (ih, ia) = (id(f, hd), id(f, ad));
    chain(&[
        &m_a.tensor(&h.bialg.alg.m),
        &tensor_all(&[&ia, action, &ih, &ih]),
        &permute_factors(f, &[ad, hd, hd, ad, hd], &[0, 1, 3, 2, 4]),
        &tensor_all(&[&ia, &h.bialg.coalg.delta, &ia, &ih]),
    ])
}

/// Labels `a#h` of the smash product basis.
pub(crate) fn smash_space(a: &BasedSpace, h: &BasedSpace) -> BasedSpace {
    let labels: Vec<String> = a.labels().iter().flat_map(|x| h.labels().iter().map(move |y| format!("{x}#{y}"))).collect();
    BasedSpace::new(labels).unwrap_or_else(|_| BasedSpace::indexed("s", a.dim() * h.dim()))
}

/// The smash product algebra `A⋊H` on `A⊗H` with unit `1⊗1`.
pub fn smash_product<K: Field>(h: &HopfAlgebraData<K>, a: &ModuleAlgebra<K>) -> Result<AlgebraData<K>, CrossError> {
    let r = module_algebra_check(h, &a.alg, &a.action);
    if !r.all_passed() {
        return Err(CrossError::ModuleAlgebraAxioms(describe_failure(&r)));
    }
    let m = smash_multiplication(h, &a.alg.m, &a.action);
    let u = a.alg.u.tensor(&h.bialg.alg.u);
    let out = AlgebraData::new(smash_space(&a.alg.space, h.space()), m, u)?;
    let check = out.check();
    if !check.all_passed() {
        return Err(CrossError::ModuleAlgebraAxioms(format!("smash product: {}", describe_failure(&check))));
    }
    Ok(out)
}
