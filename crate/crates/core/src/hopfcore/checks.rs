//! Axiom checkers for braided bialgebras, half-braidings and antipodes.

use super::object::{Obj, ObjData};
use super::structures::{BraidedBialgebra, BraidingContext, HopfAlgebraData};
use crate::exactalg::{id, permute_factors, tensor_all, tensor_then, Field, Matrix};
use crate::report::CheckReport;

/// Both sides of the Yetter–Drinfeld compatibility
/// `δ(h·v) = h₍₁₎v₍₋₁₎S(h₍₃₎) ⊗ h₍₂₎·v₍₀₎` as maps `H⊗V → H⊗V`.
pub fn yetter_drinfeld_sides<K: Field>(
    h: &HopfAlgebraData<K>,
    action: &Matrix<K>,
    coaction: &Matrix<K>,
) -> (Matrix<K>, Matrix<K>) {
    let f = h.field();
    let hd = h.dim();
    let vd = action.rows();
    let b = &h.bialg;
    let ih = id(f, hd);
    let lhs = coaction * action;
    let delta3 = &b.coalg.delta.tensor(&ih) * &b.coalg.delta;
    let spread = delta3.tensor(&id(f, vd));
    let coact = tensor_all(&[&ih, &ih, &ih, coaction]);
    let arrange = permute_factors(f, &[hd, hd, hd, hd, vd], &[0, 3, 2, 1, 4]);
    let conj = &b.alg.m * &b.alg.m.tensor(&h.antipode);
    let finish = conj.tensor(action);
    let rhs = &finish * &(&arrange * &(&coact * &spread));
    (lhs, rhs)
}

/// Checks every bialgebra axiom with the braiding taken from the context,
/// plus the context-specific requirements on the structure maps.
pub fn check_bialgebra<K: Field>(b: &BraidedBialgebra<K>) -> CheckReport {
    let f = b.field();
    let n = b.dim();
    let i = id(f, n);
    let mut r = CheckReport::new();
    let lbl = |k: usize| move |j: usize| b.label(k, j);
    let (m, u, delta, eps) = (&b.alg.m, &b.alg.u, &b.coalg.delta, &b.coalg.eps);

    r.equal("associativity", &(m * &m.tensor(&i)), &(m * &i.tensor(m)), lbl(3));
    r.equal("left unit", &(m * &u.tensor(&i)), &i, lbl(1));
    r.equal("right unit", &(m * &i.tensor(u)), &i, lbl(1));
    r.equal("coassociativity", &(&delta.tensor(&i) * delta), &(&i.tensor(delta) * delta), lbl(1));
    r.equal("left counit", &(&eps.tensor(&i) * delta), &i, lbl(1));
    r.equal("right counit", &(&i.tensor(eps) * delta), &i, lbl(1));

    match b.tau() {
        Ok(tau) => {
            let middle = tensor_all(&[&i, &tau, &i]);
            let rhs = tensor_then(m, m, &(&middle * &delta.tensor(delta)));
            r.equal("comultiplicativity", &(delta * m), &rhs, lbl(2));
        }
        Err(e) => r.fail("comultiplicativity", Some(e.to_string())),
    }
    r.equal("coproduct of unit", &(delta * u), &u.tensor(u), |_| "1".into());
    r.equal("counit multiplicative", &(eps * m), &eps.tensor(eps), lbl(2));
    r.equal("counit of unit", &(eps * u), &Matrix::identity(f, 1), |_| "1".into());

    if b.ctx != BraidingContext::Trivial {
        check_structure_maps_are_morphisms(b, &mut r);
    }
    if let (BraidingContext::YetterDrinfeld(h), ObjData::YetterDrinfeld { action, coaction }) = (&b.ctx, &b.data) {
        r.extend_prefixed("object", check_yetter_drinfeld_module(h, action, coaction));
    }
    r
}

fn check_structure_maps_are_morphisms<K: Field>(b: &BraidedBialgebra<K>, r: &mut CheckReport) {
    let a = b.object();
    let one = b.ctx.unit_object();
    let aa = match b.ctx.tensor_objects(&a, &a) {
        Ok(o) => o,
        Err(e) => {
            r.fail("structure maps are morphisms", Some(e.to_string()));
            return;
        }
    };
    let maps: [(&str, &Matrix<K>, &Obj<K>, &Obj<K>); 4] = [
        ("multiplication is a morphism", &b.alg.m, &aa, &a),
        ("unit is a morphism", &b.alg.u, &one, &a),
        ("coproduct is a morphism", &b.coalg.delta, &a, &aa),
        ("counit is a morphism", &b.coalg.eps, &a, &one),
    ];
    for (name, map, dom, cod) in maps {
        let v = b.ctx.morphism_violation(map, dom, cod);
        r.record(name, v.is_none(), v);
    }
}

/// Module, comodule and Yetter–Drinfeld axioms of `(V, action, coaction)` over `H`.
pub fn check_yetter_drinfeld_module<K: Field>(
    h: &HopfAlgebraData<K>,
    action: &Matrix<K>,
    coaction: &Matrix<K>,
) -> CheckReport {
    let f = h.field();
    let hd = h.dim();
    let vd = action.rows();
    let b = &h.bialg;
    let iv = id(f, vd);
    let ih = id(f, hd);
    let mut r = CheckReport::new();
    r.equal_indexed("action associative", &(action * &ih.tensor(action)), &(action * &b.alg.m.tensor(&iv)));
    r.equal_indexed("action unital", &(action * &b.alg.u.tensor(&iv)), &iv);
    r.equal_indexed(
        "coaction coassociative",
        &(&ih.tensor(coaction) * coaction),
        &(&b.coalg.delta.tensor(&iv) * coaction),
    );
    r.equal_indexed("coaction counital", &(&b.coalg.eps.tensor(&iv) * coaction), &iv);
    let (lhs, rhs) = yetter_drinfeld_sides(h, action, coaction);
    r.equal_indexed("Yetter–Drinfeld compatibility", &lhs, &rhs);
    r
}

/// Multiplicativity, unit law and naturality of the half-braiding
/// `σ_X = τ_{A,X}` on all probe pairs. Naturality includes that every
/// component is a morphism of the ambient category.
pub fn check_lax_half_braiding<K: Field>(ctx: &BraidingContext<K>, a: &Obj<K>, probes: &[Obj<K>], field: &K) -> CheckReport {
    let mut r = CheckReport::new();
    let one = ctx.unit_object();
    match ctx.braiding(a, &one, field) {
        Ok(s) => {
            r.record("unit law σ_1 = id", s.is_identity(), (!s.is_identity()).then(|| "1".to_string()));
        }
        Err(e) => r.fail("unit law σ_1 = id", Some(e.to_string())),
    }
    let ia = id(field, a.dim);
    for y in probes {
        for z in probes {
            let name = format!("multiplicativity at ({}, {})", y.name, z.name);
            let result = (|| {
                let yz = ctx.tensor_objects(y, z)?;
                let lhs = ctx.braiding(a, &yz, field)?;
                let sy = ctx.braiding(a, y, field)?;
                let sz = ctx.braiding(a, z, field)?;
                let rhs = &id(field, y.dim).tensor(&sz) * &sy.tensor(&id(field, z.dim));
                Ok::<_, super::structures::HopfError>((lhs, rhs))
            })();
            match result {
                Ok((lhs, rhs)) => {
                    r.equal_indexed(name, &lhs, &rhs);
                }
                Err(e) => r.fail(name, Some(e.to_string())),
            }
        }
    }
    for y in probes {
        let name = format!("naturality: σ at {} is a morphism", y.name);
        match (ctx.braiding(a, y, field), ctx.tensor_objects(a, y), ctx.tensor_objects(y, a)) {
            (Ok(s), Ok(ay), Ok(ya)) => {
                let v = ctx.morphism_violation(&s, &ay, &ya);
                r.record(name, v.is_none(), v);
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => r.fail(name, Some(e.to_string())),
        }
    }
    for y in probes {
        for z in probes {
            let name = format!("naturality along morphisms {} → {}", y.name, z.name);
            let (sy, sz) = match (ctx.braiding(a, y, field), ctx.braiding(a, z, field)) {
                (Ok(sy), Ok(sz)) => (sy, sz),
                (Err(e), _) | (_, Err(e)) => {
                    r.fail(name, Some(e.to_string()));
                    continue;
                }
            };
            let bad = ctx
                .hom_basis(y, z, field)
                .iter()
                .position(|g| &g.tensor(&ia) * &sy != &sz * &ia.tensor(g));
            r.record(name, bad.is_none(), bad.map(|k| format!("generating morphism #{k}")));
        }
    }
    r
}

/// The five standard antipode identities, with the braiding of the context.
pub fn check_antipode_properties<K: Field>(h: &HopfAlgebraData<K>) -> CheckReport {
    let b = &h.bialg;
    let s = &h.antipode;
    let (m, u, delta, eps) = (&b.alg.m, &b.alg.u, &b.coalg.delta, &b.coalg.eps);
    let lbl = |k: usize| move |j: usize| b.label(k, j);
    let mut r = CheckReport::new();
    let tau = match b.tau() {
        Ok(t) => t,
        Err(e) => {
            r.fail("braiding available", Some(e.to_string()));
            return r;
        }
    };
    let ss = s.tensor(s);
    r.equal("antimultiplicative", &(s * m), &(m * &(&tau * &ss)), lbl(2));
    r.equal("unit preserved", &(s * u), u, |_| "1".into());
    r.equal("anticomultiplicative", &(delta * s), &(&ss * &(&tau * delta)), lbl(1));
    r.equal("counit preserved", &(eps * s), eps, lbl(1));
    let middle = tensor_all(&[s, &(delta * m), s]);
    let rebuilt = tensor_then(m, m, &(&middle * &delta.tensor(delta)));
    r.equal("braiding from antipode", &rebuilt, &tau, lbl(2));
    let sinv_ok = (s * &h.antipode_inv).is_identity() && (&h.antipode_inv * s).is_identity();
    r.record("antipode inverse", sinv_ok, (!sinv_ok).then(|| "stored inverse".to_string()));
    r
}
