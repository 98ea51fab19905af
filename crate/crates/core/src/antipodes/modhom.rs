//! Internal Homs of modules over a left Hopf monad.

use super::binary::BinaryAntipode;
use super::inthom::{curry, hom_mor, hom_obj, uncurry, Side};
use crate::exactalg::{Field, Matrix};
use crate::monadrep::{compose_all, Bimonad, MonadError, Mor, TModule};
use crate::report::CheckReport;

/// `[(M,r),(N,t)] = ([M,N], [M,t] s_{M,N} T[r,N])`; the module axioms are
/// verified.
pub fn module_internal_hom<K: Field, T: Bimonad<K> + ?Sized>(t: &T, m: &TModule<K>, n: &TModule<K>) -> Result<TModule<K>, MonadError> {
    let b = t.backend();
    let s = BinaryAntipode::from_fusion(t, Side::Left);
    let hom = hom_obj(b, &m.obj, &n.obj, Side::Left)?;
    let action = compose_all(&[
        &t.apply_mor(&hom_mor(b, &m.action, &Mor::identity(&n.obj, t.field()), Side::Left)?)?,
        &s.at(&m.obj, &n.obj)?,
        &hom_mor(b, &Mor::identity(&m.obj, t.field()), &n.action, Side::Left)?,
    ])?;
    let action = Mor { dom: t.apply(&hom)?, cod: hom.clone(), mat: action.mat };
    TModule::new(t, hom, action)
}

/// `(L,l)⊗(M,r) = (L⊗M, (l⊗r)T₂(L,M))`.
pub fn tensor_modules<K: Field, T: Bimonad<K> + ?Sized>(t: &T, l: &TModule<K>, m: &TModule<K>) -> Result<TModule<K>, MonadError> {
    let b = t.backend();
    let obj = b.tensor(&l.obj, &m.obj)?;
    let action = t.t2(&l.obj, &m.obj)?.then(&b.tensor_mor(&l.action, &m.action)?)?;
    Ok(TModule { obj, action })
}

/// A basis of the `T`-linear morphisms `A → B` in the backend category.
pub fn t_linear_maps<K: Field, T: Bimonad<K> + ?Sized>(t: &T, a: &TModule<K>, bm: &TModule<K>) -> Result<Vec<Matrix<K>>, MonadError> {
    let f = t.field();
    let basis = t.backend().hom_basis(&a.obj, &bm.obj, f);
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    // column k: entries of g_k r_A − r_B T(g_k)
    let rows = bm.obj.dim * t.apply(&a.obj)?.dim;
    let mut columns = Vec::with_capacity(basis.len());
    for g in &basis {
        let gm = Mor::new(a.obj.clone(), bm.obj.clone(), g.clone())?;
        let lhs = &gm.mat * &a.action.mat;
        let rhs = &bm.action.mat * &t.apply_mor(&gm)?.mat;
        let diff = &lhs - &rhs;
        let mut col = vec![f.zero(); rows];
        for (i, j, v) in diff.entries() {
            col[i * diff.cols() + j] = v.clone();
        }
        columns.push(col);
    }
    let system = Matrix::from_column_vectors(f, rows, &columns);
    let kernel = system.kernel();
    Ok((0..kernel.cols())
        .map(|c| {
            let coeffs = kernel.column(c);
            let mut acc = Matrix::zeros(f, bm.obj.dim, a.obj.dim);
            for (k, g) in basis.iter().enumerate() {
                if !f.is_zero(&coeffs[k]) {
                    acc = &acc + &g.scale(&coeffs[k]);
                }
            }
            acc
        })
        .collect())
}

/// The adjunction `Hom_T(L⊗M, N) ≅ Hom_T(L, [M,N])`: equal dimensions,
/// currying sends `T`-linear maps to `T`-linear maps, and uncurrying
/// undoes it.
pub fn module_hom_adjunction_check<K: Field, T: Bimonad<K> + ?Sized>(
    t: &T,
    l: &TModule<K>,
    m: &TModule<K>,
    n: &TModule<K>,
) -> Result<CheckReport, MonadError> {
    let b = t.backend();
    let mut r = CheckReport::new();
    let lm = tensor_modules(t, l, m)?;
    let hom = module_internal_hom(t, m, n)?;
    let left = t_linear_maps(t, &lm, n)?;
    let right = t_linear_maps(t, l, &hom)?;
    r.record(
        "dim Hom_T(L⊗M, N) = dim Hom_T(L, [M,N])",
        left.len() == right.len(),
        Some(format!("{} vs {}", left.len(), right.len())).filter(|_| left.len() != right.len()),
    );
    let mut not_linear = None;
    let mut not_inverse = None;
    for (k, g) in left.iter().enumerate() {
        let g = Mor::new(lm.obj.clone(), n.obj.clone(), g.clone())?;
        let c = curry(b, &l.obj, &m.obj, &g, Side::Left)?;
        let lhs = &c.mat * &l.action.mat;
        let rhs = &hom.action.mat * &t.apply_mor(&Mor { cod: hom.obj.clone(), ..c.clone() })?.mat;
        if lhs != rhs {
            not_linear.get_or_insert(k);
        }
        if uncurry(b, &m.obj, &n.obj, &c, Side::Left)?.mat != g.mat {
            not_inverse.get_or_insert(k);
        }
    }
    let w = |k: Option<usize>| k.map(|k| format!("T-linear map #{k}"));
    r.record("currying preserves T-linearity", not_linear.is_none(), w(not_linear));
    r.record("uncurry ∘ curry = id", not_inverse.is_none(), w(not_inverse));
    Ok(r)
}
