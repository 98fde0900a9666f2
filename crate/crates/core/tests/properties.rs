use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qblock::charring::{levi_typical_character, levi_typical_via_schur};
use qblock::linkage::{atypicality, linked_approx, same_central_char};
use qblock::oracle::{brute_atypicality, central_witness_search, schur_tableaux};
use qblock::reduce::{normalize_block, replay_moves};
use qblock::sample;
use qblock::schur::{schur_jt, PartitionIndex};
use qblock::weight::Root;
use qblock::{Rational, Scalar, Weight, ZigzagAlgebra, ZigzagElement};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-8i64..=8, 1i64..=4, -2i64..=2, -1i64..=1).prop_map(|(p, q, a, b)| {
        Scalar::frac(p, q)
            .plus_symbol("pi", Rational::from_integer(a))
            .plus_symbol("e", Rational::new(b, 2))
    })
}

/// Coordinates drawn from a small pool so that typical, atypical and
/// integrally related entries all occur often.
fn weight(max_n: usize) -> impl Strategy<Value = Weight> {
    let pool = prop_oneof![
        (-3i64..=3).prop_map(Scalar::int),
        (-3i64..=3).prop_map(|k| Scalar::frac(2 * k + 1, 2)),
        (-2i64..=2, prop::bool::ANY).prop_map(|(k, neg)| {
            let c = if neg { -1 } else { 1 };
            Scalar::int(k).plus_symbol("pi", Rational::from_integer(c))
        }),
    ];
    prop::collection::vec(pool, 1..=max_n).prop_map(|v| Weight::new(v).unwrap())
}

fn zz_element(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-3i64..=3).prop_map(Rational::from_integer), dim)
}

proptest! {
    #[test]
    fn scalar_text_round_trip(x in scalar()) {
        let back: Scalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn star_action_is_an_involution(l in weight(5), k in 0usize..4) {
        prop_assume!(k + 1 < l.n());
        let a = Root::simple(k);
        let (once, flag) = l.star_action(a).unwrap();
        let (twice, again) = once.star_action(a).unwrap();
        prop_assert_eq!(flag, again);
        prop_assert_eq!(twice, l);
    }

    #[test]
    fn atypicality_matches_brute_force(l in weight(6)) {
        prop_assert_eq!(atypicality(&l), brute_atypicality(&l));
    }

    #[test]
    fn central_character_matches_search(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l: Weight = sample::random_weight(&mut rng, n, true);
        let m = sample::partner(&mut rng, &l, seed % 2 == 0);
        prop_assert_eq!(same_central_char(&l, &m), central_witness_search(&l, &m).is_some());
    }

    #[test]
    fn approx_witness_replays(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l: Weight = sample::random_weight(&mut rng, n, true);
        let m = sample::linked_partner(&mut rng, &l, true);
        let wit = linked_approx(&l, &m).unwrap();
        prop_assert!(wit.is_some(), "{} and {} should be linked", l, m);
        prop_assert_eq!(wit.unwrap().replay(&l).unwrap(), m);
    }

    #[test]
    fn reduction_replays_and_is_stable(l in weight(6)) {
        let r = normalize_block(&l).unwrap();
        prop_assert_eq!(&replay_moves(&l, &r.moves).unwrap(), &r.reduced);
        prop_assert!(same_central_char(&l, &r.reduced));
        let again = normalize_block(&r.reduced).unwrap();
        prop_assert_eq!(&again.reduced, &r.reduced);
        prop_assert_eq!(again.shape(), r.shape());
    }

    #[test]
    fn levi_routes_agree(top in prop::collection::vec(-3i64..=3, 3), bottom in prop::collection::vec(-3i64..=3, 2)) {
        let s = Scalar::symbol("s");
        let mut a = top;
        a.sort_unstable_by(|x, y| y.cmp(x));
        a.dedup();
        let mut b = bottom;
        b.sort_unstable_by(|x, y| y.cmp(x));
        b.dedup();
        let coords = a.iter().map(|&x| s.add_int(x)).chain(b.iter().map(|&y| (-&s).add_int(y))).collect();
        let z = Weight::new(coords).unwrap();
        let direct = levi_typical_character(&z, a.len()).unwrap();
        let schur = levi_typical_via_schur(&z, a.len()).unwrap();
        prop_assert_eq!(direct, schur);
    }

    #[test]
    fn jacobi_trudi_matches_tableaux(seed in any::<u64>(), m in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let parts = sample::random_partition(&mut rng, 7, m);
        let mu = PartitionIndex::new(&parts, m).unwrap();
        prop_assert_eq!(schur_jt(&mu), schur_tableaux(&mu));
    }

    #[test]
    fn zigzag_is_associative(window in 1usize..=3, a in zz_element(26), b in zz_element(26), c in zz_element(26)) {
        let alg = ZigzagAlgebra::build(window).unwrap();
        let d = alg.dim();
        let (a, b, c) = (alg.element(&a[..d]), alg.element(&b[..d]), alg.element(&c[..d]));
        let left = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one: ZigzagElement = alg.unit();
        prop_assert_eq!(alg.multiply(&one, &a).unwrap(), a.clone());
        prop_assert_eq!(alg.multiply(&a, &one).unwrap(), a);
    }
}
