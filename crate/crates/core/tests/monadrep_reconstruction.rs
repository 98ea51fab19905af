use std::sync::Arc;

use hopfkit::exactalg::{flip, id};
use hopfkit::hopfcore::builtins::{builtin, kz2_hopf, nichols_line_over_kz2, super_line};
use hopfkit::hopfcore::{extract_antipode, extract_opantipode, Bicharacter, BraidedBialgebra, Obj, BUILTIN_NAMES};
use hopfkit::monadrep::*;
use hopfkit::{Field, PrimeField, Rationals};

fn q() -> Rationals {
    Rationals
}

fn limits() -> SweepLimits {
    SweepLimits::default()
}

fn builtin_in_its_backend(name: &str) -> Option<(Backend<Rationals>, BraidedBialgebra<Rationals>)> {
    match name {
        "taft3" => None,
        "super-line" => Some((Backend::Graded(Bicharacter::super_sign(&q())), super_line(&q()).unwrap())),
        "nichols-line" => Some((Backend::ModH(Arc::new(kz2_hopf(&q()))), nichols_line_over_kz2(&q()).unwrap())),
        other => Some((Backend::VectK, builtin(&q(), other).unwrap())),
    }
}

fn probes_for<K: Field>(t: &RepresentableBimonad<K>) -> Vec<Obj<K>> {
    default_probes(t.backend(), Some(t.object()), t.field(), 11).unwrap()
}

#[test]
fn reconstruction_round_trips_kz2_and_sweedler() {
    for name in ["kZ2", "sweedler", "monoid"] {
        let t = RepresentableBimonad::new(Backend::VectK, builtin(&q(), name).unwrap()).unwrap();
        let probes = probes_for(&t);
        let rebuilt = reconstruct_from_fusion(FusionData::of(&t), &probes, limits()).unwrap();
        for x in &probes {
            assert_eq!(rebuilt.mu(x).unwrap().mat, t.mu(x).unwrap().mat, "{name} μ at {}", x.name);
            for y in &probes {
                assert_eq!(rebuilt.t2(x, y).unwrap().mat, t.t2(x, y).unwrap().mat, "{name} T₂");
                assert_eq!(fusion_left(&rebuilt, x, y).unwrap().mat, fusion_left(&t, x, y).unwrap().mat);
            }
        }
    }
}

#[test]
fn reconstruction_of_identity_data_is_the_identity() {
    let t = IdentityBimonad::new(Backend::VectK, q());
    let probes = default_probes(t.backend(), None, &q(), 2).unwrap();
    let rebuilt = reconstruct_from_fusion(FusionData::of(&t), &probes, limits()).unwrap();
    for x in &probes {
        assert!(rebuilt.mu(x).unwrap().is_identity());
        for y in &probes {
            assert!(rebuilt.t2(x, y).unwrap().is_identity());
        }
    }
}

#[test]
fn reconstruction_rejects_scaled_fusion_data() {
    let t = RepresentableBimonad::new(Backend::VectK, builtin(&q(), "kZ2").unwrap()).unwrap();
    let probes = probes_for(&t);
    let two = q().from_i64(2);
    let tr = &t;
    let data = FusionData::new(&t, move |x, y| {
        let h = fusion_left(tr, x, y)?;
        Ok(Mor { mat: h.mat.scale(&two), ..h })
    });
    let err = reconstruct_from_fusion(data, &probes, limits()).err().expect("must fail");
    match err {
        MonadError::PreconditionViolated(name) => assert!(name.starts_with("(TX⊗T₀)H_(X,1)"), "{name}"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn augmentation_round_trips_every_builtin() {
    for name in BUILTIN_NAMES {
        let Some((backend, b)) = builtin_in_its_backend(name) else { continue };
        let t = RepresentableBimonad::new(backend, b.clone()).unwrap();
        let probes = probes_for(&t);
        let aug = Augmented::counit(&t, &probes, limits()).unwrap();
        let c = augmentation_to_central_bialgebra(&aug, &probes).unwrap();
        assert!(c.report.all_passed(), "{name}: {:?}", c.report.first_failure());
        assert_eq!(c.bialg.alg.m, b.alg.m, "{name}");
        assert_eq!(c.bialg.alg.u, b.alg.u);
        assert_eq!(c.bialg.coalg.delta, b.coalg.delta);
        assert_eq!(c.bialg.coalg.eps, b.coalg.eps);
        assert_eq!(c.bialg.data, b.data, "{name}");
    }
    let f7 = PrimeField::new(7).unwrap();
    let b = builtin(&f7, "taft3").unwrap();
    let t = RepresentableBimonad::new(Backend::VectK, b.clone()).unwrap();
    let probes = probes_for(&t);
    let aug = Augmented::counit(&t, &probes, limits()).unwrap();
    let c = augmentation_to_central_bialgebra(&aug, &probes).unwrap();
    assert!(c.report.all_passed());
    assert_eq!(c.bialg.alg.m, b.alg.m);
}

#[test]
fn identity_bimonad_recovers_the_trivial_bialgebra() {
    let t = IdentityBimonad::new(Backend::VectK, q());
    let probes = default_probes(t.backend(), None, &q(), 2).unwrap();
    let aug = Augmented::trivial(&t, &probes, limits()).unwrap();
    let c = augmentation_to_central_bialgebra(&aug, &probes).unwrap();
    assert_eq!(c.bialg.dim(), 1);
    assert!(c.bialg.alg.m.is_identity() && c.bialg.coalg.delta.is_identity());
    assert!(c.report.all_passed());
}

#[test]
fn a_wrong_augmentation_is_rejected() {
    let t = RepresentableBimonad::new(Backend::VectK, builtin(&q(), "kZ2").unwrap()).unwrap();
    let probes = probes_for(&t);
    let res = Augmented::new(&t, |x: &Obj<Rationals>| Mor::new(t.apply(x)?, x.clone(), hopfkit::Matrix::from_i64_rows(&q(), &[&[1, 0]]).tensor(&id(&q(), x.dim))), &probes, limits());
    assert!(matches!(res, Err(MonadError::PreconditionViolated(_))));
}

#[test]
fn braided_compatibility_holds_for_symmetric_examples_only() {
    let t = RepresentableBimonad::new(Backend::VectK, builtin(&q(), "kZ2").unwrap()).unwrap();
    let probes = probes_for(&t);
    let aug = Augmented::counit(&t, &probes, limits()).unwrap();
    let r = braided_compatibility_check(&aug, &probes, &|x, y| Ok(flip(&q(), x.dim, y.dim))).unwrap();
    assert!(r.all_passed());

    let backend = Backend::Graded(Bicharacter::super_sign(&q()));
    let t = RepresentableBimonad::new(backend.clone(), super_line(&q()).unwrap()).unwrap();
    let probes = probes_for(&t);
    let aug = Augmented::counit(&t, &probes, limits()).unwrap();
    let r = braided_compatibility_check(&aug, &probes, &|x, y| backend.braiding(x, y, &q()).unwrap()).unwrap();
    assert!(r.all_passed());

    let t = RepresentableBimonad::new(Backend::ModH(Arc::new(kz2_hopf(&q()))), nichols_line_over_kz2(&q()).unwrap()).unwrap();
    let probes = probes_for(&t);
    let aug = Augmented::counit(&t, &probes, limits()).unwrap();
    let r = braided_compatibility_check(&aug, &probes, &|x, y| Ok(flip(&q(), x.dim, y.dim))).unwrap();
    let fail = r.first_failure().expect("the Yetter–Drinfeld braiding is not the flip");
    assert!(fail.witness.is_some());
}

#[test]
fn hopf_verdicts_match_antipode_existence() {
    for name in BUILTIN_NAMES {
        let Some((backend, b)) = builtin_in_its_backend(name) else { continue };
        let t = RepresentableBimonad::new(backend, b.clone()).unwrap();
        let probes = probes_for(&t);
        let v = hopf_check(&t, &probes).unwrap();
        let has_s = extract_antipode(&b).unwrap().antipode().is_some();
        assert_eq!(v.left_hopf.passed, has_s, "{name}");
        assert_eq!(v.left_pre_hopf.passed, has_s, "{name}");
        let has_op = extract_opantipode(&b).map(|o| o.antipode().is_some()).unwrap_or(false);
        assert_eq!(v.right_hopf.passed, has_op, "{name}");
    }
}

#[test]
fn hopf_operator_on_free_module_is_the_fusion_operator() {
    let t = RepresentableBimonad::new(Backend::VectK, builtin(&q(), "sweedler").unwrap()).unwrap();
    let probes = probes_for(&t);
    let one = t.backend().unit();
    let free = TModule::free(&t, &one).unwrap();
    for x in &probes {
        let op = hopf_operator_left(&t, x, &free).unwrap();
        assert_eq!(op.forward.mat, fusion_left(&t, x, &one).unwrap().mat);
        let op = hopf_operator_right(&t, &free, x).unwrap();
        assert_eq!(op.forward.mat, fusion_right(&t, &one, x).unwrap().mat);
    }
}

#[test]
fn hopf_operator_inverse_on_the_regular_module_over_sweedler() {
    let b = builtin(&q(), "sweedler").unwrap();
    let t = RepresentableBimonad::new(Backend::VectK, b.clone()).unwrap();
    let m_obj = Obj::plain(4).named("H");
    let action = Mor::new(t.apply(&m_obj).unwrap(), m_obj.clone(), b.alg.m.clone()).unwrap();
    let m = TModule::new(&t, m_obj, action).unwrap();
    let x = Obj::plain(2).named("k²");
    let op = hopf_operator_left(&t, &x, &m).unwrap();
    assert!(op.forward.then(&op.inverse).unwrap().is_identity());
    let op = hopf_operator_right(&t, &m, &x).unwrap();
    assert!(op.inverse.then(&op.forward).unwrap().is_identity());
}

#[test]
fn hopf_operator_of_identity_is_identity() {
    let t = IdentityBimonad::new(Backend::VectK, q());
    let m_obj = Obj::plain(3).named("M");
    let m = TModule::new(&t, m_obj.clone(), Mor::identity(&m_obj, &q())).unwrap();
    let op = hopf_operator_left(&t, &Obj::plain(2).named("X"), &m).unwrap();
    assert!(op.forward.is_identity() && op.inverse.is_identity());
}

#[test]
fn module_axioms_are_checked() {
    let b = builtin(&q(), "kZ2").unwrap();
    let t = RepresentableBimonad::new(Backend::VectK, b.clone()).unwrap();
    let m_obj = Obj::plain(2).named("M");
    let wrong = Mor::new(t.apply(&m_obj).unwrap(), m_obj.clone(), b.coalg.eps.tensor(&flip(&q(), 1, 2)).tensor(&id(&q(), 1))).unwrap();
    let err = TModule::new(&t, m_obj, Mor { mat: &wrong.mat + &wrong.mat, ..wrong }).unwrap_err();
    assert!(matches!(err, MonadError::InvalidModule(_)));
}

#[test]
fn hopf_operator_fails_without_an_antipode() {
    let t = RepresentableBimonad::new(Backend::VectK, builtin(&q(), "monoid").unwrap()).unwrap();
    let one = t.backend().unit();
    let free = TModule::free(&t, &one).unwrap();
    let err = hopf_operator_left(&t, &one, &free).unwrap_err();
    assert!(matches!(err, MonadError::NotInvertible { .. }));
}
