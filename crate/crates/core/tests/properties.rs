use frobcrit::charalg::{branch, freudenthal, weyl_dimension};
use frobcrit::criteria::{check_main, conjugated_borel_check, min_prime_for_surjectivity};
use frobcrit::embed::Provenance;
use frobcrit::registry::{
    example_sln_son, example_triple_diagonal, frobenius_twist, minimal_rank_suite,
};
use frobcrit::weyl::WeylElement;
use frobcrit::{Case, CriterionInput, Embedding, RootSystem, Scalar, Weight, Q};
use proptest::prelude::*;
use proptest::sample::select;

const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 101, 7919];

fn rs(s: &str) -> RootSystem {
    s.parse().unwrap()
}

fn registry() -> Vec<Case> {
    let mut cases = minimal_rank_suite(3).unwrap();
    for n in 3..=8 {
        cases.extend(example_sln_son(n, 3).unwrap());
    }
    for h in ["A1", "A2", "G2"] {
        cases.push(example_triple_diagonal(&rs(h), 3).unwrap());
    }
    cases.push(frobenius_twist(3).unwrap());
    cases
}

fn subset_of(mask: u32, rank: usize) -> Vec<usize> {
    (0..rank).filter(|i| mask >> i & 1 == 1).collect()
}

fn embedding_strategy() -> impl Strategy<Value = Embedding> {
    select((0..registry().len()).collect::<Vec<_>>())
        .prop_map(|i| registry().swap_remove(i).input.embedding)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regular_implies_dominant(emb in embedding_strategy(), mask in any::<u32>(), p in select(PRIMES.to_vec())) {
        let subset = subset_of(mask, emb.g().rank());
        let r = check_main(&CriterionInput::new(emb, subset, p)).unwrap();
        prop_assert!(!r.hypotheses.regular || r.hypotheses.dominance);
    }

    #[test]
    fn condition_one_does_not_depend_on_p(
        emb in embedding_strategy(),
        mask in any::<u32>(),
        p in select(PRIMES.to_vec()),
        q in select(PRIMES.to_vec()),
    ) {
        let subset = subset_of(mask, emb.g().rank());
        let a = check_main(&CriterionInput::new(emb.clone(), subset.clone(), p)).unwrap();
        let b = check_main(&CriterionInput::new(emb, subset, q)).unwrap();
        prop_assert_eq!(a.hypotheses.weight, b.hypotheses.weight);
        prop_assert_eq!(a.hypotheses.dominance, b.hypotheses.dominance);
        prop_assert_eq!(a.hypotheses.regular, b.hypotheses.regular);
    }

    #[test]
    fn dominance_is_closed_under_addition(
        a in prop::collection::vec((0i64..20, 1i64..6), 4),
        b in prop::collection::vec((0i64..20, 1i64..6), 4),
    ) {
        let w = |v: &[(i64, i64)]| Weight::new(v.iter().map(|&(n, d)| Q::from_ratio(n, d)).collect());
        let (x, y) = (w(&a), w(&b));
        prop_assert!(x.is_dominant() && y.is_dominant());
        prop_assert!((&x + &y).is_dominant());
    }

    #[test]
    fn diagonal_restriction_sums_the_blocks(
        spec in select(vec!["A1", "A2", "B2", "G2", "A3"]),
        k in 1usize..4,
        seed in prop::collection::vec(-5i64..6, 12),
    ) {
        let h = rs(spec);
        let n = h.rank();
        let emb = Embedding::diagonal(&h, k).unwrap();
        let coords: Vec<i64> = seed.iter().cycle().take(n * k).copied().collect();
        let image = emb.restrict(&Weight::from_ints(&coords)).unwrap();
        let expected: Vec<i64> = (0..n).map(|i| (0..k).map(|b| coords[b * n + i]).sum()).collect();
        prop_assert_eq!(image, Weight::from_ints(&expected));
    }

    #[test]
    fn weyl_length_is_subadditive(
        spec in select(vec!["B3", "C3", "A3", "G2", "F4"]),
        u in prop::collection::vec(0usize..4, 0..12),
        v in prop::collection::vec(0usize..4, 0..12),
    ) {
        let g = rs(spec);
        let clamp = |w: &[usize]| w.iter().map(|i| i % g.rank()).collect::<Vec<_>>();
        let (u, v) = (clamp(&u), clamp(&v));
        let x = WeylElement::from_word(&g, &u).unwrap();
        let y = WeylElement::from_word(&g, &v).unwrap();
        prop_assert!(x.length(&g) <= u.len());
        let xy = x.compose(&y).unwrap();
        prop_assert!(xy.length(&g) <= x.length(&g) + y.length(&g));
        let joined: Vec<usize> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(WeylElement::from_word(&g, &joined).unwrap(), xy);
    }

    #[test]
    fn freudenthal_matches_weyl_dimension(
        spec in select(vec!["A3", "B3", "C3", "G2", "D4", "A1,B2"]),
        raw in prop::collection::vec(0i64..3, 4),
    ) {
        let g = rs(spec);
        let lambda: Vec<i64> = raw.into_iter().take(g.rank()).collect();
        prop_assume!(weyl_dimension(&g, &lambda) <= 2000);
        let ch = freudenthal(&g, &Weight::from_ints(&lambda)).unwrap();
        prop_assert_eq!(ch.multiplicity(&lambda), 1);
        prop_assert_eq!(ch.dimension(&g), weyl_dimension(&g, &lambda));
    }

    #[test]
    fn branching_conserves_dimension_and_keeps_the_top(
        emb in embedding_strategy(),
        raw in prop::collection::vec(0i64..3, 9),
    ) {
        prop_assume!(!matches!(emb.provenance(), Provenance::FrobeniusTwistedDiagonal { .. }));
        let g = emb.g();
        let lambda: Vec<i64> = raw.into_iter().take(g.rank()).collect();
        let dim = weyl_dimension(g, &lambda);
        prop_assume!(dim <= 10_000);
        let b = branch(&emb, &Weight::from_ints(&lambda)).unwrap();
        let total: u128 = b.iter().map(|(nu, m)| *m as u128 * weyl_dimension(emb.h(), nu)).sum();
        prop_assert_eq!(total, dim);
        let top = emb.restrict(&Weight::from_ints(&lambda)).unwrap().to_ints().unwrap();
        prop_assert!(b.get(&top).copied().unwrap_or(0) >= 1);
        // no key lies strictly above the restricted highest weight
        let inv = emb.h().inverse_cartan();
        for nu in b.keys().filter(|nu| **nu != top) {
            let diff: Vec<i64> = nu.iter().zip(&top).map(|(a, b)| a - b).collect();
            let above = inv.iter().all(|row| row.iter().zip(&diff).map(|(q, &x)| *q * x).sum::<Q>() >= Q::from_int(0));
            prop_assert!(!above, "{:?} above {:?}", nu, top);
        }
    }

    #[test]
    fn branching_ignores_the_central_part(
        mask in 0u32..8,
        shift in prop::collection::vec(-4i64..5, 3),
        raw in prop::collection::vec(0i64..3, 3),
    ) {
        let g = rs("B3");
        let subset = subset_of(mask, 3);
        let levi = Embedding::levi(&g, &subset).unwrap();
        let center: Vec<Vec<Q>> = levi
            .center_matrix()
            .iter()
            .map(|row| row.iter().zip(&shift).map(|(c, &s)| *c + Q::from_int(s)).collect())
            .collect();
        let shifted = Embedding::from_parts(
            g.clone(),
            levi.h().clone(),
            levi.restriction_matrix().to_vec(),
            center,
            Provenance::Custom,
            None,
        );
        let lambda = Weight::from_ints(&raw);
        prop_assert_eq!(branch(&levi, &lambda).unwrap(), branch(&shifted, &lambda).unwrap());
    }
}

#[test]
fn identity_conjugator_reproduces_condition_one() {
    for case in registry() {
        let emb = &case.input.embedding;
        let g = emb.g();
        for mask in 0..1u32 << g.rank().min(6) {
            let subset = subset_of(mask, g.rank());
            let main = check_main(&CriterionInput::new(emb.clone(), subset.clone(), 3)).unwrap();
            let conj =
                conjugated_borel_check(emb, &WeylElement::identity(g.rank()), &subset).unwrap();
            assert_eq!(
                conj.dominant, main.hypotheses.dominance,
                "{} J={subset:?}",
                case.name
            );
            assert_eq!(
                conj.regular, main.hypotheses.regular,
                "{} J={subset:?}",
                case.name
            );
        }
    }
}

#[test]
fn enlarging_j_never_creates_dominance() {
    for case in registry() {
        let emb = &case.input.embedding;
        let n = emb.g().rank();
        if n > 4 {
            continue;
        }
        let dominant: Vec<bool> = (0..1u32 << n)
            .map(|mask| {
                let input = CriterionInput::new(emb.clone(), subset_of(mask, n), 3);
                check_main(&input).unwrap().hypotheses.dominance
            })
            .collect();
        for small in 0..1u32 << n {
            for large in 0..1u32 << n {
                if small & large == small && dominant[large as usize] {
                    assert!(
                        dominant[small as usize],
                        "{}: {small:b} below {large:b}",
                        case.name
                    );
                }
            }
        }
    }
}

#[test]
fn nontrivial_h_needs_at_least_two() {
    for case in registry() {
        let emb = &case.input.embedding;
        if emb.h().rank() > 0 {
            assert!(
                min_prime_for_surjectivity(emb).unwrap() >= 2,
                "{}",
                case.name
            );
        }
    }
}
