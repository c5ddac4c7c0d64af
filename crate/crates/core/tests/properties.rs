use gl_duality::combinatorics::kostka;
use gl_duality::flags::{orbit_invariant, random_invertible, representative_pair, Flag, FlagType};
use gl_duality::linalg::{rat, Rational};
use gl_duality::rsk::{inverse_rsk_with_dims, rsk, CompositionMatrix};
use gl_duality::schur::{build_intertwiner_space, build_schur_algebra, compose_intertwiners};
use gl_duality::Budget;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(
    max_rows: usize,
    max_cols: usize,
    max_entry: usize,
) -> impl Strategy<Value = CompositionMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(0..=max_entry, c), r)
            .prop_map(|rows| CompositionMatrix::new(rows).unwrap())
    })
}

fn weak_composition(parts: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=max, parts)
        .prop_filter("non-empty total", |v| v.iter().sum::<usize>() > 0)
}

fn small_rationals(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-3i64..=3, len).prop_map(|v| v.into_iter().map(rat).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rsk_inverts(a in matrix(4, 4, 2)) {
        let (p, q) = rsk(&a);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(p.content(a.cols()), a.col_sums());
        prop_assert_eq!(q.content(a.rows()), a.row_sums());
        prop_assert_eq!(inverse_rsk_with_dims(&p, &q, a.rows(), a.cols()).unwrap(), a);
    }

    #[test]
    fn rsk_commutes_with_transpose(a in matrix(3, 3, 2)) {
        let (p, q) = rsk(&a);
        let (pt, qt) = rsk(&a.transpose());
        prop_assert_eq!((pt, qt), (q, p));
    }

    #[test]
    fn orbit_invariant_survives_the_group(a in matrix(3, 3, 1), seed in any::<u64>()) {
        prop_assume!(a.total() > 0);
        let (f, g) = representative_pair(&a);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_invertible(a.total(), &mut rng);
        prop_assert_eq!(orbit_invariant(&f.act(&h).unwrap(), &g.act(&h).unwrap()).unwrap(), a);
    }

    #[test]
    fn random_pairs_have_type_margins(t1 in weak_composition(3, 2), t2 in weak_composition(2, 3), seed in any::<u64>()) {
        prop_assume!(t1.iter().sum::<usize>() == t2.iter().sum::<usize>());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Flag::random(&FlagType::new(t1.clone()).unwrap(), &mut rng);
        let g = Flag::random(&FlagType::new(t2.clone()).unwrap(), &mut rng);
        let a = orbit_invariant(&f, &g).unwrap();
        prop_assert_eq!(a.row_sums(), t1);
        prop_assert_eq!(a.col_sums(), t2);
    }

    #[test]
    fn rsk_shape_has_positive_kostka_number(a in matrix(3, 3, 2)) {
        // P is semistandard with the column sums as content
        let (p, _) = rsk(&a);
        prop_assert!(kostka(&p.shape(), &a.col_sums()) > 0u32.into());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn schur_algebra_is_associative(x in small_rationals(20), y in small_rationals(20), z in small_rationals(20)) {
        let s = build_schur_algebra(2, 3, &Budget::default()).unwrap();
        let l = s.multiply(&s.multiply(&x, &y).unwrap(), &z).unwrap();
        let r = s.multiply(&x, &s.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn truncated_products_respect_the_min_rule(
        a in 1usize..=2, b in 1usize..=2, k in 1usize..=2,
        seed_x in small_rationals(6), seed_y in small_rationals(6),
    ) {
        let budget = Budget::default();
        let xs = build_intertwiner_space(2, k, 2, a, &budget).unwrap();
        let ys = build_intertwiner_space(k, 2, 2, b, &budget).unwrap();
        let comp = compose_intertwiners(&xs, &ys, &budget).unwrap();
        // random combinations of the basis products stay in the truncated space
        let mut z = vec![rat(0); comp.target.orbits().len()];
        for (t, (_, _, p)) in comp.products.iter().enumerate() {
            let c = &seed_x[t % 6] * &seed_y[(t / 6) % 6];
            for (zi, pi) in z.iter_mut().zip(p) {
                *zi += &c * pi;
            }
        }
        prop_assert!(comp.target.contains(&z));
        let bound = 2.min(a).min(k).min(b);
        prop_assert!(comp.target.support(&z).iter().all(|l| l.len() <= bound));
    }
}
