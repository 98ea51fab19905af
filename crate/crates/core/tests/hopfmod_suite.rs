mod common;

use std::sync::Arc;

use common::oracle_rank;
use hopfkit::exactalg::random::{random_matrix, seeded};
use hopfkit::exactalg::{chain, id, permute_factors, tensor_all};
use hopfkit::hopfcore::builtins::{cyclic_group_algebra, idempotent_monoid_bialgebra, kz2_hopf, sweedler};
use hopfkit::hopfcore::structures::HopfAlgebraData;
use hopfkit::hopfcore::Obj;
use hopfkit::hopfmod::*;
use hopfkit::monadrep::{Backend, Bimonad, IdentityBimonad, Mor, RepresentableBimonad, SweepLimits, TModule};
use hopfkit::{Matrix, Rationals};
use proptest::prelude::*;

fn q() -> Rationals {
    Rationals
}

fn kz2() -> Arc<HopfAlgebraData<Rationals>> {
    Arc::new(kz2_hopf(&q()))
}

fn h4() -> Arc<HopfAlgebraData<Rationals>> {
    Arc::new(HopfAlgebraData::from_bialgebra(sweedler(&q()).unwrap()).unwrap())
}

fn representable(h: &HopfAlgebraData<Rationals>) -> RepresentableBimonad<Rationals> {
    RepresentableBimonad::new(Backend::VectK, h.bialg.clone()).unwrap()
}

fn module(t: &RepresentableBimonad<Rationals>, name: &str, action: Matrix<Rationals>) -> TModule<Rationals> {
    let obj = Obj::plain(action.rows()).named(name);
    let tobj = t.apply(&obj).unwrap();
    TModule::new(t, obj.clone(), Mor::new(tobj, obj, action).unwrap()).unwrap()
}

fn probe_modules(t: &RepresentableBimonad<Rationals>) -> Vec<TModule<Rationals>> {
    let b = t.bialgebra();
    let n = b.dim();
    // one-dimensional module with g ↦ −1 (and x ↦ 0 for Sweedler)
    let mut sign = vec![0i64; n];
    sign[0] = 1;
    sign[1] = -1;
    vec![
        module(t, "A", b.alg.m.clone()),
        module(t, "k", b.coalg.eps.clone()),
        module(t, "sign", Matrix::from_i64_rows(&q(), &[&sign])),
        TModule::free(t, &Obj::plain(2).named("k²")).unwrap(),
    ]
}

#[test]
fn free_and_regular_hopf_modules_pass() {
    for h in [kz2(), h4()] {
        assert!(check_hopf_module(&HopfModule::regular(h.clone())).all_passed());
        let free = HopfModule::free(h.clone(), 2);
        assert!(check_hopf_module(&free).all_passed());
        // the free Hopf module is (TX, μ_X, T₂(1,X))
        let t = representable(&h);
        let x = Obj::plain(2);
        assert_eq!(free.action, t.mu(&x).unwrap().mat);
        assert_eq!(free.coaction, t.t2(&t.backend().unit(), &x).unwrap().mat);
    }
}

#[test]
fn twisting_the_coaction_by_the_antipode_breaks_compatibility() {
    let h = h4();
    let reg = HopfModule::regular(h.clone());
    let twisted = &h.antipode.tensor(&id(&q(), 4)) * &reg.coaction;
    let r = check_hopf_module_parts(&h, &reg.action, &twisted);
    let item = r.items.iter().find(|i| i.name.starts_with("Hopf module compatibility")).unwrap();
    assert!(!item.passed);
    assert!(item.witness.is_some());
    assert!(matches!(HopfModule::new(h.clone(), reg.space.clone(), reg.action.clone(), twisted), Err(HopfModError::InvalidHopfModule(_))));
}

#[test]
fn coinvariants_of_small_hopf_modules() {
    let h = kz2();
    let reg = coinvariants(&HopfModule::regular(h.clone())).unwrap();
    assert_eq!(reg.dim, 1);
    assert_eq!(reg.inclusion, Matrix::from_i64_rows(&q(), &[&[1], &[0]]));
    // oracle: dim ker(Δ − 1⊗id)
    let b = &h.bialg;
    let eq = &b.coalg.delta - &b.alg.u.tensor(&id(&q(), 2));
    assert_eq!(2 - oracle_rank(&eq), 1);

    let free = coinvariants(&HopfModule::free(h.clone(), 2)).unwrap();
    assert_eq!(free.dim, 2);
    let zero = coinvariants(&HopfModule::zero(h)).unwrap();
    assert_eq!(zero.dim, 0);
}

#[test]
fn sweedler_decompositions() {
    let reg = sweedler_decompose(&HopfModule::regular(h4())).unwrap();
    assert_eq!(reg.coinvariants.dim, 1);
    assert!(reg.iso.is_identity());

    let free = sweedler_decompose(&HopfModule::free(h4(), 3)).unwrap();
    assert_eq!(free.iso.rows(), 12);
    assert!(free.report.all_passed());

    let sum = HopfModule::free(h4(), 2).direct_sum(&HopfModule::regular(h4()));
    assert!(check_hopf_module(&sum).all_passed());
    let d = sweedler_decompose(&sum).unwrap();
    assert_eq!(d.coinvariants.dim, 3);
}

#[test]
fn decomposition_is_natural_in_hopf_module_maps() {
    let h = h4();
    let (x, y) = (HopfModule::free(h.clone(), 2), HopfModule::free(h.clone(), 3));
    let mut rng = seeded(5);
    let g = random_matrix(&q(), 3, 2, &mut rng);
    let f = id(&q(), 4).tensor(&g);
    assert!(hopf_module_morphism_check(&f, &x, &y).all_passed());
    let (dx, dy) = (sweedler_decompose(&x).unwrap(), sweedler_decompose(&y).unwrap());
    let fco = coinvariant_map(&f, &dx.coinvariants, &dy.coinvariants);
    assert_eq!(&f * &dx.iso, &dy.iso * &id(&q(), 4).tensor(&fco));
}

#[test]
fn twenty_seeded_hopf_modules_decompose() {
    let mut rng = seeded(2024);
    for k in 0..20 {
        let h = if k % 2 == 0 { kz2() } else { h4() };
        let m = random_hopf_module(h.clone(), &mut rng, 3);
        assert!(check_hopf_module(&m).all_passed(), "{}", m.name);
        let co = coinvariants(&m).unwrap();
        assert_eq!(&co.projector * &co.projector, co.projector);
        assert_eq!(co.dim * h.dim(), m.dim(), "{}", m.name);
        let d = sweedler_decompose(&m).unwrap();
        assert!((&d.iso * &d.inverse).is_identity() && (&d.inverse * &d.iso).is_identity());
    }
}

#[test]
fn induced_central_coalgebra_of_the_identity_is_trivial() {
    let t = IdentityBimonad::new(Backend::VectK, q());
    let c = induced_central_coalgebra(&t, &[Obj::plain(1), Obj::plain(2)], &[]).unwrap();
    assert_eq!(c.object.dim, 1);
    assert!(c.report.all_passed());
}

#[test]
fn induced_central_coalgebra_of_kz2_has_the_flip() {
    let h = kz2();
    let t = representable(&h);
    let modules = probe_modules(&t);
    let probes = [t.backend().unit(), Obj::plain(1).named("k"), Obj::plain(2).named("k²")];
    let c = induced_central_coalgebra(&t, &probes, &modules).unwrap();
    assert!(c.report.all_passed(), "{:?}", c.report.first_failure());
    assert_eq!(c.coalg.delta, h.bialg.coalg.delta);
    for m in &modules {
        assert_eq!(c.sigma(m).unwrap().mat, hopfkit::exactalg::flip(&q(), 2, m.obj.dim));
    }
}

/// `a⊗m ↦ a₍₁₎S(a₍₃₎)·m ⊗ a₍₂₎`.
fn sigma_oracle(h: &HopfAlgebraData<Rationals>, action: &Matrix<Rationals>) -> Matrix<Rationals> {
    let b = &h.bialg;
    let n = h.dim();
    let d = action.rows();
    let ia = id(&q(), n);
    let delta3 = &b.coalg.delta.tensor(&ia) * &b.coalg.delta;
    chain(&[
        &action.tensor(&ia),
        &b.alg.m.tensor(&id(&q(), d * n)),
        &tensor_all(&[&ia, &h.antipode, &id(&q(), d), &ia]),
        &permute_factors(&q(), &[n, n, n, d], &[0, 2, 3, 1]),
        &delta3.tensor(&id(&q(), d)),
    ])
}

#[test]
fn induced_central_coalgebra_of_sweedler_matches_the_formula() {
    let h = h4();
    let t = representable(&h);
    let modules = probe_modules(&t);
    let probes = [t.backend().unit(), Obj::plain(2).named("k²")];
    let c = induced_central_coalgebra(&t, &probes, &modules).unwrap();
    assert!(c.report.all_passed(), "{:?}", c.report.first_failure());
    for m in &modules {
        assert_eq!(c.sigma(m).unwrap().mat, sigma_oracle(&h, &m.action.mat), "{}", m.obj.name);
    }
    let regular = &modules[0];
    assert_ne!(c.sigma(regular).unwrap().mat, hopfkit::exactalg::flip(&q(), 4, 4));
}

#[test]
fn induced_central_coalgebra_needs_pre_hopf() {
    let t = RepresentableBimonad::new(Backend::VectK, idempotent_monoid_bialgebra(&q())).unwrap();
    let err = induced_central_coalgebra(&t, &[t.backend().unit()], &[]).unwrap_err();
    assert!(matches!(err, HopfModError::PreHopfFails(_)));
}

#[test]
fn hopf_operators_are_comonad_morphisms() {
    let id_t = IdentityBimonad::new(Backend::VectK, q());
    let m = Obj::plain(2);
    let triv = TModule::new(&id_t, m.clone(), Mor::identity(&m, &q())).unwrap();
    assert!(comonad_morphism_check(&id_t, &[triv]).unwrap().all_passed());
    for h in [kz2(), h4()] {
        let t = representable(&h);
        let r = comonad_morphism_check(&t, &probe_modules(&t)).unwrap();
        assert!(r.all_passed(), "{:?}", r.first_failure());
        assert_eq!(r.len(), 16);
    }
}

#[test]
fn structure_map_is_an_equalizer() {
    let limits = SweepLimits::default();
    let t = representable(&kz2());
    let r = equalizer_condition_check(&t, &[t.backend().unit(), Obj::plain(2).named("k²")], limits).unwrap();
    assert!(r.all_passed());
    let item = r.find("T₂ is the equalizer at (k², k²)").unwrap();
    assert_eq!(item.detail.as_deref(), Some("equalizer dim 8 in 16"));
    let t = representable(&h4());
    let r = equalizer_condition_check(&t, &[t.backend().unit(), Obj::plain(2).named("k²"), Obj::plain(1).named("k")], limits).unwrap();
    assert!(r.all_passed());
    assert!(r.find("T₂ is the equalizer at (k², k)").is_some());
}

fn kz2_central() -> CentralCoalgebra<Rationals> {
    CentralCoalgebra::with_flip(cyclic_group_algebra(&q(), 2).coalg)
}

#[test]
fn cotensor_with_the_coalgebra_is_the_comodule() {
    let c = kz2_central();
    let m = c.cofree(2);
    let fusion = cotensor_fusion(&m, 1, &c).unwrap();
    assert_eq!(fusion.cotensor.comodule.dim, m.dim);
    assert!(fusion.report.all_passed());
    let direct = cotensor(&m, &c.regular(), &c).unwrap();
    assert_eq!(direct.comodule.dim, 4);
    assert!(direct.report.all_passed());
}

#[test]
fn cotensor_fusion_dimensions() {
    let c = kz2_central();
    let both = cotensor(&c.cofree(3), &c.cofree(2), &c).unwrap();
    assert_eq!(both.comodule.dim, 12);
    let fusion = cotensor_fusion(&c.cofree(3), 2, &c).unwrap();
    assert_eq!(fusion.forward.rows(), 12);
    let small = cotensor_fusion(&c.regular(), 2, &c).unwrap();
    assert_eq!(small.cotensor.comodule.dim, 4);
    assert!((&small.forward * &small.inverse).is_identity());
}

#[test]
fn cotensor_needs_cocommutativity() {
    let c = CentralCoalgebra::with_flip(sweedler(&q()).unwrap().coalg);
    let err = cotensor(&c.regular(), &c.regular(), &c).unwrap_err();
    assert_eq!(err, HopfModError::NotCocommutative);
}

#[test]
fn comodules_are_validated() {
    let c = kz2_central();
    let bad = Matrix::from_i64_rows(&q(), &[&[1], &[1]]);
    assert!(matches!(Comodule::new(&c, "bad", bad), Err(HopfModError::InvalidComodule(_))));
    let ok = Matrix::from_i64_rows(&q(), &[&[0], &[1]]);
    assert_eq!(Comodule::new(&c, "k_g", ok).unwrap().dim, 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn seeded_hopf_modules_split(seed in any::<u64>(), over_h4 in any::<bool>()) {
        let h = if over_h4 { h4() } else { kz2() };
        let m = random_hopf_module(h.clone(), &mut seeded(seed), 2);
        let d = sweedler_decompose(&m).unwrap();
        prop_assert!(d.report.all_passed());
        prop_assert_eq!(d.coinvariants.dim * h.dim(), m.dim());
    }

    #[test]
    fn cotensor_fusion_is_invertible(x in 1usize..4, y in 1usize..3) {
        let c = kz2_central();
        let f = cotensor_fusion(&c.cofree(y), x, &c).unwrap();
        prop_assert_eq!(f.cotensor.comodule.dim, 2 * x * y);
        prop_assert!(f.report.all_passed());
    }
}
