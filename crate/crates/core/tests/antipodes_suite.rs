mod common;

use std::sync::Arc;

use common::solve_unique;
use hopfkit::antipodes::*;
use hopfkit::hopfcore::builtins::{builtin, kz2_hopf, sweedler};
use hopfkit::hopfcore::{extract_antipode, Obj};
use hopfkit::monadrep::*;
use hopfkit::{Field, Matrix, PrimeField, Rationals};

fn q() -> Rationals {
    Rationals
}

fn limits() -> SweepLimits {
    SweepLimits::default()
}

fn small_probes<K: Field>(b: &Backend<K>) -> Vec<Obj<K>> {
    vec![b.unit(), Obj::plain(1).named("k"), Obj::plain(2).named("k²")]
}

fn representable<K: Field>(field: &K, name: &str) -> RepresentableBimonad<K> {
    RepresentableBimonad::new(Backend::VectK, builtin(field, name).unwrap()).unwrap()
}

fn assert_passes(label: &str, r: &hopfkit::report::CheckReport) {
    assert!(!r.is_empty(), "{label}: empty report");
    if let Some(f) = r.first_failure() {
        panic!("{label}: {} failed ({:?}, {:?})", f.name, f.witness, f.detail);
    }
}

#[test]
fn internal_homs_satisfy_the_triangle_identities() {
    let b = Backend::VectK;
    for (x, y) in [(1, 3), (2, 2), (3, 1)] {
        for side in [Side::Left, Side::Right] {
            let ih = internal_hom(&b, &Obj::plain(x), &Obj::plain(y), side, &q()).unwrap();
            assert_eq!(ih.hom.dim, x * y);
        }
    }
    let ih = internal_hom(&b, &Obj::plain(2), &Obj::plain(2), Side::Left, &q()).unwrap();
    // ev(y_i ⊗ ξ^j ⊗ x_k) = δ_jk y_i
    assert_eq!(ih.eval.mat.get(1, (2 + 1) * 2 + 1), q().one());
    assert_eq!(ih.eval.mat.get(1, (2 + 1) * 2), q().zero());
}

#[test]
fn module_internal_hom_over_kz2_uses_the_twisted_action() {
    let h = Arc::new(kz2_hopf(&q()));
    let b = Backend::ModH(h.clone());
    let sign = Obj::module(Matrix::from_i64_rows(&q(), &[&[1, -1]])).named("sign");
    let regular = h.regular_module();
    for side in [Side::Left, Side::Right] {
        internal_hom(&b, &sign, &regular, side, &q()).unwrap();
        internal_hom(&b, &regular, &sign, side, &q()).unwrap();
    }
    let d = left_dual(&b, &sign).unwrap();
    assert_eq!(d.action().unwrap(), sign.action().unwrap());
}

#[test]
fn internal_homs_over_sweedler_modules_are_modules() {
    let h = Arc::new(hopfkit::hopfcore::HopfAlgebraData::from_bialgebra(sweedler(&q()).unwrap()).unwrap());
    let b = Backend::ModH(h.clone());
    let reg = h.regular_module().named("H");
    for side in [Side::Left, Side::Right] {
        let ih = internal_hom(&b, &reg, &reg, side, &q()).unwrap();
        assert!(ih.check(&b, &q()).unwrap().all_passed());
    }
}

#[test]
fn identity_bimonad_has_identity_antipodes() {
    let t = IdentityBimonad::new(Backend::VectK, q());
    let probes = small_probes(t.backend());
    for side in [Side::Left, Side::Right] {
        let s = BinaryAntipode::from_fusion(&t, side);
        for x in &probes {
            for y in &probes {
                assert!(s.at(x, y).unwrap().is_identity());
            }
        }
        assert_passes("identity axioms", &antipode_axiom_check(&s, &t, &probes, limits()).unwrap());
        assert_passes("identity properties", &antipode_property_suite(&s, &t, &probes, limits()).unwrap());
    }
    for x in &probes {
        assert!(unary_antipode(&t, x).unwrap().is_identity());
    }
}

#[test]
fn binary_antipodes_from_fusion_satisfy_the_axioms() {
    for name in ["kZ2", "sweedler"] {
        let t = representable(&q(), name);
        let probes = small_probes(t.backend());
        for side in [Side::Left, Side::Right] {
            let s = BinaryAntipode::from_fusion(&t, side);
            assert_passes(name, &antipode_axiom_check(&s, &t, &probes, limits()).unwrap());
        }
    }
}

#[test]
fn binary_antipode_over_nichols_line_in_mod_kz2() {
    let h = Arc::new(kz2_hopf(&q()));
    let backend = Backend::ModH(h.clone());
    let t = RepresentableBimonad::new(backend.clone(), hopfkit::hopfcore::builtins::nichols_line_over_kz2(&q()).unwrap()).unwrap();
    let sign = Obj::module(Matrix::from_i64_rows(&q(), &[&[1, -1]])).named("sign");
    let probes = vec![backend.unit(), sign];
    for side in [Side::Left, Side::Right] {
        let s = BinaryAntipode::from_fusion(&t, side);
        assert_passes("nichols", &antipode_axiom_check(&s, &t, &probes, limits()).unwrap());
        assert_passes("nichols", &antipode_property_suite(&s, &t, &probes, limits()).unwrap());
    }
}

#[test]
fn negating_a_component_breaks_the_first_axiom() {
    let t = representable(&q(), "kZ2");
    let probes = small_probes(t.backend());
    let honest = BinaryAntipode::from_fusion(&t, Side::Left);
    let minus = q().from_i64(-1);
    let broken = BinaryAntipode::new(Side::Left, |x: &Obj<Rationals>, y: &Obj<Rationals>| {
        let s = honest.at(x, y)?;
        Ok(Mor { mat: s.mat.scale(&minus), ..s })
    });
    let r = antipode_axiom_check(&broken, &t, &probes, limits()).unwrap();
    let first = r.first_failure().unwrap();
    assert!(first.name.starts_with("left antipode axiom 1"), "{}", first.name);
    assert!(first.witness.is_some());
}

#[test]
fn antipode_properties_hold_for_kz2_and_sweedler() {
    let f5 = PrimeField::new(5).unwrap();
    let t = representable(&q(), "kZ2");
    let probes = small_probes(t.backend());
    for side in [Side::Left, Side::Right] {
        let s = BinaryAntipode::from_fusion(&t, side);
        assert_passes("kZ2", &antipode_property_suite(&s, &t, &probes, limits()).unwrap());
    }
    let t = RepresentableBimonad::new(Backend::VectK, sweedler(&f5).unwrap()).unwrap();
    let probes = small_probes(t.backend());
    for side in [Side::Left, Side::Right] {
        let s = BinaryAntipode::from_fusion(&t, side);
        assert_passes("H4/F5", &antipode_property_suite(&s, &t, &probes, limits()).unwrap());
    }
}

#[test]
fn inverse_fusion_is_recovered_from_the_antipode() {
    for name in ["kZ2", "sweedler"] {
        let t = representable(&q(), name);
        let probes: Vec<_> = if name == "kZ2" { small_probes(t.backend()) } else { vec![t.backend().unit(), Obj::plain(1).named("k")] };
        for side in [Side::Left, Side::Right] {
            let s = BinaryAntipode::from_fusion(&t, side);
            for x in &probes {
                for y in &probes {
                    let rebuilt = fusion_inverse_from_antipode(&t, &s, x, y).unwrap();
                    let h = match side {
                        Side::Left => fusion_left(&t, x, y).unwrap(),
                        Side::Right => fusion_right(&t, x, y).unwrap(),
                    };
                    let direct = h.mat.try_invert().inverse.unwrap();
                    assert_eq!(rebuilt.mat, direct, "{name} {side:?} at ({}, {})", x.name, y.name);
                }
            }
        }
    }
}

#[test]
fn unary_antipode_of_kz2_on_k_is_the_antipode() {
    for name in ["kZ2", "sweedler"] {
        let b = builtin(&q(), name).unwrap();
        let s = extract_antipode(&b).unwrap().into_antipode().unwrap();
        let t = representable(&q(), name);
        let k = Obj::plain(1).named("k");
        let u = unary_antipode(&t, &k).unwrap();
        let n = b.dim();
        // T(ˇTk) = A⊗A*: a ⊗ ξ^c ↦ ξ^c(S a)
        for a in 0..n {
            for c in 0..n {
                assert_eq!(u.mat.get(0, a * n + c), s.get(c, a), "{name}");
            }
        }
    }
}

#[test]
fn unary_and_binary_antipodes_agree() {
    let t = representable(&q(), "kZ2");
    assert_passes("kZ2", &unary_relation_check(&t, &small_probes(t.backend()), limits()).unwrap());
    let t = representable(&q(), "sweedler");
    let probes = vec![t.backend().unit(), Obj::plain(2).named("k²")];
    assert_passes("H4", &unary_relation_check(&t, &probes, limits()).unwrap());
    let t = IdentityBimonad::new(Backend::VectK, q());
    assert_passes("identity", &unary_relation_check(&t, &small_probes(t.backend()), limits()).unwrap());
}

/// `𝔰^φ_X(a ⊗ (ξ ⊗ ζ)) = ξ(φ(a)) ζ` on `T(ˇTX) = A⊗(A⊗X)*`.
fn parametrized_unary<'a>(n: usize, phi: &'a Matrix<Rationals>, t: &'a RepresentableBimonad<Rationals>) -> UnaryAntipode<'a, Rationals> {
    UnaryAntipode::new(move |x: &Obj<Rationals>| {
        let b = t.backend();
        let xd = x.dim;
        let mut trip = Vec::new();
        for a in 0..n {
            for c in 0..n {
                let v = phi.get(c, a);
                for j in 0..xd {
                    trip.push((j, a * n * xd + c * xd + j, v.clone()));
                }
            }
        }
        let dtx = left_dual(b, &t.apply(x)?)?;
        Mor::new(t.apply(&dtx)?, left_dual(b, x)?, Matrix::from_triplets(&q(), xd, n * n * xd, trip))
    })
}

fn residual(t: &RepresentableBimonad<Rationals>, phi: &Matrix<Rationals>, probes: &[Obj<Rationals>]) -> Vec<hopfkit::Rational> {
    let n = t.bialgebra().dim();
    let u = parametrized_unary(n, phi, t);
    let s = BinaryAntipode::new(Side::Left, |x: &Obj<Rationals>, y: &Obj<Rationals>| binary_from_unary(t, &u, x, y));
    let mut out = Vec::new();
    for x in probes {
        for y in probes {
            for (l, r) in antipode_axiom_sides(&s, t, x, y).unwrap() {
                let d = &l.unwrap().mat - &r.unwrap().mat;
                for row in d.to_dense() {
                    out.extend(row);
                }
            }
        }
    }
    out
}

#[test]
fn the_antipode_axioms_have_a_unique_solution() {
    for name in ["kZ2", "sweedler"] {
        let t = representable(&q(), name);
        let n = t.bialgebra().dim();
        let probes = vec![t.backend().unit(), Obj::plain(1).named("k")];
        let zero = Matrix::zeros(&q(), n, n);
        let base = residual(&t, &zero, &probes);
        let mut columns = Vec::new();
        for k in 0..n * n {
            let e = Matrix::from_triplets(&q(), n, n, [(k / n, k % n, q().one())]);
            let r = residual(&t, &e, &probes);
            columns.push(r.iter().zip(&base).map(|(a, b)| q().sub(a, b)).collect::<Vec<_>>());
        }
        let rows: Vec<Vec<_>> = (0..base.len()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        let rhs: Vec<_> = base.iter().map(|v| q().neg(v)).collect();
        let phi = solve_unique(&q(), rows, rhs, n * n).expect("unique solution");
        let s = extract_antipode(&builtin(&q(), name).unwrap()).unwrap().into_antipode().unwrap();
        for k in 0..n * n {
            assert_eq!(phi[k], s.get(k / n, k % n), "{name}");
        }
        let solved = Matrix::from_dense(&q(), n, n, &phi);
        let u = parametrized_unary(n, &solved, &t);
        let s_bin = BinaryAntipode::from_fusion(&t, Side::Left);
        for x in &probes {
            for y in &probes {
                assert_eq!(binary_from_unary(&t, &u, x, y).unwrap().mat, s_bin.at(x, y).unwrap().mat);
            }
        }
    }
}

#[test]
fn module_internal_hom_of_regular_kz2_modules() {
    let b = builtin(&q(), "kZ2").unwrap();
    let t = representable(&q(), "kZ2");
    let reg_obj = Obj::plain(2).named("H");
    let reg = TModule::new(&t, reg_obj.clone(), Mor::new(t.apply(&reg_obj).unwrap(), reg_obj, b.alg.m.clone()).unwrap()).unwrap();
    let hom = module_internal_hom(&t, &reg, &reg).unwrap();
    assert_eq!(hom.obj.dim, 4);
    let triv_obj = t.backend().unit();
    let triv = TModule::new(&t, triv_obj.clone(), Mor::new(t.apply(&triv_obj).unwrap(), triv_obj, b.coalg.eps.clone()).unwrap()).unwrap();
    assert_passes("kZ2 adjunction", &module_hom_adjunction_check(&t, &reg, &reg, &triv).unwrap());
    assert_passes("kZ2 adjunction", &module_hom_adjunction_check(&t, &triv, &reg, &reg).unwrap());
}

#[test]
fn module_internal_hom_over_sweedler_matches_the_adjunction_count() {
    let b = sweedler(&q()).unwrap();
    let t = RepresentableBimonad::new(Backend::VectK, b.clone()).unwrap();
    let reg_obj = Obj::plain(4).named("H");
    let reg = TModule::new(&t, reg_obj.clone(), Mor::new(t.apply(&reg_obj).unwrap(), reg_obj, b.alg.m.clone()).unwrap()).unwrap();
    let one = t.backend().unit();
    let triv = TModule::new(&t, one.clone(), Mor::new(t.apply(&one).unwrap(), one, b.coalg.eps.clone()).unwrap()).unwrap();
    let r = module_hom_adjunction_check(&t, &triv, &reg, &triv).unwrap();
    assert_passes("H4 adjunction", &r);
    let lm = tensor_modules(&t, &triv, &reg).unwrap();
    assert_eq!(t_linear_maps(&t, &lm, &triv).unwrap().len(), 1);
}

#[test]
fn module_internal_hom_for_identity_is_the_plain_hom() {
    let t = IdentityBimonad::new(Backend::VectK, q());
    let m = Obj::plain(2).named("M");
    let n = Obj::plain(3).named("N");
    let mm = TModule::new(&t, m.clone(), Mor::identity(&m, &q())).unwrap();
    let nn = TModule::new(&t, n.clone(), Mor::identity(&n, &q())).unwrap();
    let hom = module_internal_hom(&t, &mm, &nn).unwrap();
    assert_eq!(hom.obj.dim, 6);
    assert!(hom.action.is_identity());
}
