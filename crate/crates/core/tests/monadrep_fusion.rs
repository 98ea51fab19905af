use std::sync::Arc;
use std::time::Instant;

use hopfkit::hopfcore::builtins::{builtin, kz2_hopf, mutate_entry, nichols_line_over_kz2, super_line, sweedler};
use hopfkit::hopfcore::{fusion_operator, Bicharacter, BraidedBialgebra};
use hopfkit::monadrep::*;
use hopfkit::{Field, PrimeField, Rationals};
use proptest::prelude::*;

fn q() -> Rationals {
    Rationals
}

fn representable<K: Field>(backend: Backend<K>, b: BraidedBialgebra<K>) -> (RepresentableBimonad<K>, Vec<hopfkit::hopfcore::Obj<K>>) {
    let field = b.field().clone();
    let t = RepresentableBimonad::new(backend.clone(), b).unwrap();
    let probes = default_probes(&backend, Some(t.object()), &field, 7).unwrap();
    (t, probes)
}

fn assert_all_pass(label: &str, r: &hopfkit::report::CheckReport) {
    if let Some(f) = r.first_failure() {
        panic!("{label}: {} failed at {:?}", f.name, f.witness);
    }
    assert!(!r.is_empty());
}

fn sweep<K: Field>(label: &str, t: &impl Bimonad<K>, probes: &[hopfkit::hopfcore::Obj<K>]) {
    let start = Instant::now();
    let ax = check_bimonad_axioms(t, probes, SweepLimits::default()).unwrap();
    assert_all_pass(label, &ax);
    let fu = fusion_identity_suite(t, probes, SweepLimits::default()).unwrap();
    assert_all_pass(label, &fu);
    eprintln!("{label}: {} + {} checks in {:?}", ax.len(), fu.len(), start.elapsed());
}

#[test]
fn representable_fusion_over_the_unit_is_the_bialgebra_fusion_operator() {
    for name in ["kZ2", "sweedler", "monoid"] {
        let b = builtin(&q(), name).unwrap();
        let expected = fusion_operator(&b);
        let (t, _) = representable(Backend::VectK, b);
        let one = t.backend().unit();
        let h = fusion_left(&t, &one, &one).unwrap();
        assert_eq!(h.mat, expected, "{name}");
    }
}

#[test]
fn fusion_suite_passes_for_kz2_and_sweedler() {
    for name in ["kZ2", "sweedler"] {
        let (t, probes) = representable(Backend::VectK, builtin(&q(), name).unwrap());
        sweep(name, &t, &probes);
    }
}

#[test]
fn fusion_suite_passes_for_taft_over_f7() {
    let f7 = PrimeField::new(7).unwrap();
    let (t, probes) = representable(Backend::VectK, builtin(&f7, "taft3").unwrap());
    sweep("taft3", &t, &probes);
}

#[test]
fn fusion_suite_passes_for_the_super_line() {
    let backend = Backend::Graded(Bicharacter::super_sign(&q()));
    let (t, probes) = representable(backend, super_line(&q()).unwrap());
    sweep("super-line", &t, &probes);
}

#[test]
fn fusion_suite_passes_for_the_nichols_line_over_mod_kz2() {
    let backend = Backend::ModH(Arc::new(kz2_hopf(&q())));
    let (t, probes) = representable(backend, nichols_line_over_kz2(&q()).unwrap());
    sweep("nichols-line", &t, &probes);
    let v = hopf_check(&t, &probes).unwrap();
    assert!(v.to_report().all_passed(), "{v:?}");
}

#[test]
fn truncation_is_pre_hopf_but_not_hopf() {
    let t = TruncationBimonad::new(q());
    let probes: Vec<_> = [-1, 0, 1].into_iter().map(graded_line).collect();
    sweep("truncation", &t, &probes);
    let v = hopf_check(&t, &probes).unwrap();
    assert!(v.left_pre_hopf.passed && v.right_pre_hopf.passed);
    assert!(!v.left_hopf.passed);
    assert_eq!(v.left_hopf.witness.as_deref(), Some("(k(-1), k(1))"));
    let h = fusion_left(&t, &graded_line(-1), &graded_line(1)).unwrap();
    assert_eq!((h.dom.dim, h.cod.dim), (1, 0));
    assert_eq!(v.right_hopf.witness.as_deref(), Some("(k(1), k(-1))"));
}

#[test]
fn truncation_on_default_probes_passes_the_suite() {
    let t = TruncationBimonad::new(q());
    let probes = default_probes(t.backend(), None, &q(), 3).unwrap();
    sweep("truncation/default", &t, &probes);
}

#[test]
fn identity_bimonad_is_hopf() {
    let t = IdentityBimonad::new(Backend::VectK, q());
    let probes = default_probes(t.backend(), None, &q(), 1).unwrap();
    sweep("identity", &t, &probes);
    assert!(hopf_check(&t, &probes).unwrap().to_report().all_passed());
}

#[test]
fn monoid_bialgebra_is_not_even_pre_hopf() {
    let (t, probes) = representable(Backend::VectK, builtin(&q(), "monoid").unwrap());
    sweep("monoid", &t, &probes);
    let v = hopf_check(&t, &probes).unwrap();
    assert!(!v.left_pre_hopf.passed);
    assert_eq!(v.left_pre_hopf.witness.as_deref(), Some("(1, 1)"));
    assert_eq!(v.left_pre_hopf.detail.as_deref(), Some("rank 3, domain dim 4"));
    assert!(!v.left_hopf.passed);
}

#[test]
fn sweedler_representable_is_hopf() {
    let (t, probes) = representable(Backend::VectK, sweedler(&q()).unwrap());
    let v = hopf_check(&t, &probes).unwrap();
    assert!(v.to_report().all_passed(), "{v:?}");
}

#[test]
fn representable_fusion_factors_through_the_unit() {
    let (t, probes) = representable(Backend::VectK, sweedler(&q()).unwrap());
    let one = t.backend().unit();
    for x in &probes {
        for y in &probes {
            let full = fusion_left(&t, x, y).unwrap();
            let small = fusion_left(&t, x, &one).unwrap();
            assert_eq!(full.mat, small.mat.tensor(&hopfkit::exactalg::id(&q(), y.dim)));
            let full = fusion_right(&t, x, y).unwrap();
            let small = fusion_right(&t, x, &one).unwrap();
            assert_eq!(full.mat, small.mat.tensor(&hopfkit::exactalg::id(&q(), y.dim)));
        }
    }
}

#[test]
fn a_corrupted_multiplication_breaks_the_mu_identity() {
    let b = sweedler(&q()).unwrap();
    // g·g = 1 becomes g·g = 1 + x
    let bad = mutate_entry(&b, "m", 2, 1 + 4, q().one()).unwrap();
    let (t, probes) = representable(Backend::VectK, bad);
    let r = fusion_identity_suite(&t, &probes, SweepLimits::default()).unwrap();
    let broken = r
        .failures()
        .find(|i| i.name.starts_with("H^l T(X⊗μ_Y) = (TX⊗μ_Y) H^l_(X,TY)"))
        .expect("the μ identity must fail");
    assert!(broken.witness.is_some());
}

#[test]
fn representable_rejects_a_foreign_context() {
    let err = RepresentableBimonad::new(Backend::VectK, super_line(&q()).unwrap()).unwrap_err();
    assert!(matches!(err, MonadError::ContextMismatch(_)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn kz2_suite_holds_for_any_random_probe(seed in any::<u64>()) {
        let b = builtin(&q(), "kZ2").unwrap();
        let t = RepresentableBimonad::new(Backend::VectK, b).unwrap();
        let probes = default_probes(t.backend(), Some(t.object()), &q(), seed).unwrap();
        let r = fusion_identity_suite(&t, &probes, SweepLimits::default()).unwrap();
        prop_assert!(r.all_passed());
    }

    #[test]
    fn truncation_axioms_hold_on_random_graded_probes(seed in any::<u64>()) {
        let t = TruncationBimonad::new(q());
        let probes = default_probes(t.backend(), None, &q(), seed).unwrap();
        prop_assert!(check_bimonad_axioms(&t, &probes, SweepLimits::default()).unwrap().all_passed());
        prop_assert!(fusion_identity_suite(&t, &probes, SweepLimits::default()).unwrap().all_passed());
    }
}
