use hopfkit::exactalg::random::{random_invertible, random_matrix, seeded};
use hopfkit::exactalg::{quotient_by_span, BasedSpace, Field, Matrix, PrimeField, Rationals};
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize, seed: u64) -> Matrix<Rationals> {
    random_matrix(&Rationals, rows, cols, &mut seeded(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in 1usize..5, b in 1usize..5, c in 1usize..5, d in 1usize..5, seed in any::<u64>()) {
        let f = small_matrix(a, b, seed);
        let g = small_matrix(b, c, seed.wrapping_add(1));
        let h = small_matrix(c, d, seed.wrapping_add(2));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn kron_is_functorial(n in 1usize..4, m in 1usize..4, k in 1usize..4, l in 1usize..4, seed in any::<u64>()) {
        let f = small_matrix(n, m, seed);
        let f2 = small_matrix(m, 2, seed ^ 1);
        let g = small_matrix(k, l, seed ^ 2);
        let g2 = small_matrix(l, 3, seed ^ 3);
        prop_assert_eq!(&f.tensor(&g) * &f2.tensor(&g2), (&f * &f2).tensor(&(&g * &g2)));
    }

    #[test]
    fn inverse_is_two_sided(n in 1usize..7, seed in any::<u64>()) {
        let m = small_matrix(n, n, seed);
        let inv = m.try_invert();
        match inv.inverse {
            Some(g) => {
                prop_assert!((&m * &g).is_identity());
                prop_assert!((&g * &m).is_identity());
                prop_assert_eq!(inv.rank, n);
            }
            None => prop_assert!(inv.rank < n),
        }
        prop_assert_eq!(inv.rank, m.rank());
    }

    #[test]
    fn rank_nullity(r in 1usize..6, c in 1usize..6, seed in any::<u64>()) {
        let m = small_matrix(r, c, seed);
        let ki = m.kernel_and_image();
        prop_assert_eq!(ki.kernel.cols() + ki.image.cols(), c);
        prop_assert!((&m * &ki.kernel).is_zero());
        prop_assert_eq!(ki.kernel.rank(), ki.kernel.cols());
        prop_assert_eq!(ki.image.rank(), m.rank());
    }

    #[test]
    fn quotient_projection_kills_relations(n in 1usize..7, k in 0usize..5, seed in any::<u64>()) {
        let rel = small_matrix(n, k, seed);
        let q = quotient_by_span(&BasedSpace::indexed("e", n), &rel);
        prop_assert!((&q.projection * &q.section).is_identity());
        prop_assert!((&q.projection * &rel).is_zero());
        prop_assert_eq!(q.space.dim(), n - rel.rank());
    }

    #[test]
    fn split_random_idempotent(n in 1usize..7, r in 0usize..7, seed in any::<u64>()) {
        let r = r.min(n);
        let field = PrimeField::new(101).unwrap();
        let mut rng = seeded(seed);
        let (p, pinv) = random_invertible(&field, n, &mut rng);
        let diag = Matrix::from_triplets(&field, n, n, (0..r).map(|i| (i, i, field.one())));
        let e = &(&p * &diag) * &pinv;
        let s = e.split_idempotent().unwrap();
        prop_assert!((&s.retraction * &s.section).is_identity());
        prop_assert_eq!(&s.section * &s.retraction, e);
        prop_assert_eq!(s.section.cols(), r);
    }
}
