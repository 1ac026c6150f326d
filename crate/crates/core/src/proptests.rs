//! Randomised invariants over the public API.

use proptest::prelude::*;

use crate::crystal::{crystal_generate, flotw_set, uglov_set, CrystalSpec};
use crate::multicharge::{
    adapted_multicharge, alpha_bound_certified, fundamental_rep, in_p, offsets, perturb, Perturbation,
};
use crate::multipartition::enumerate_multipartitions;
use crate::symbol::{a_value, common_size, compare_llm, compare_llm_at};
use crate::{Dominance, Exec, Multicharge, Multipartition, Partition, Perm, Rational, WeightSequence};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..5, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn multipartition(l: usize) -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(partition(), l).prop_map(Multipartition::new)
}

fn weights(l: usize) -> impl Strategy<Value = WeightSequence> {
    prop::collection::vec((-12i64..12, 1i64..5), l)
        .prop_map(|v| WeightSequence::new(v.into_iter().map(|(p, q)| Rational::new(p, q)).collect()))
}

fn charge(l: usize) -> impl Strategy<Value = Multicharge> {
    prop::collection::vec(-6i64..6, l).prop_map(Multicharge::new)
}

fn perm(l: usize) -> impl Strategy<Value = Perm> {
    Just(Perm::all(l)).prop_shuffle().prop_map(|mut all| all.pop().unwrap())
}

/// Two multipartitions of one rank, plus a weight sequence.
fn same_rank_pair() -> impl Strategy<Value = (Multipartition, Multipartition, WeightSequence)> {
    (1usize..=3, 0usize..=4).prop_flat_map(|(l, n)| {
        let all = enumerate_multipartitions(l, n);
        let k = all.len();
        (0..k, 0..k, weights(l)).prop_map(move |(a, b, m)| (all[a].clone(), all[b].clone(), m))
    })
}

proptest! {
    #[test]
    fn text_round_trip(lam in (1usize..4).prop_flat_map(multipartition), m in weights(3)) {
        prop_assert_eq!(lam.to_string().parse::<Multipartition>().unwrap(), lam);
        prop_assert_eq!(m.to_string().parse::<WeightSequence>().unwrap(), m);
    }

    #[test]
    fn twist_is_a_right_action(
        (lam, s, sigma, tau) in (1usize..5).prop_flat_map(|l| (multipartition(l), charge(l), perm(l), perm(l)))
    ) {
        prop_assert_eq!(lam.twist(&tau).twist(&sigma), lam.twist(&tau.compose(&sigma)));
        prop_assert_eq!(s.twist(&tau).twist(&sigma), s.twist(&tau.compose(&sigma)));
        prop_assert_eq!(lam.twist(&sigma).twist(&sigma.inverse()), lam);
    }

    #[test]
    fn order_is_antisymmetric_and_size_free((lam, mu, m) in same_rank_pair(), extra in 1usize..4) {
        let v = compare_llm(&lam, &mu, &m).unwrap();
        prop_assert_eq!(compare_llm(&mu, &lam, &m).unwrap(), v.reverse());
        let size = common_size(&lam, &mu, &m) + extra;
        prop_assert_eq!(compare_llm_at(&lam, &mu, &m, size).unwrap(), v);
        if v == Dominance::Less {
            prop_assert!(a_value(&lam, &m).unwrap() < a_value(&mu, &m).unwrap());
        }
    }

    #[test]
    fn adapted_charge_is_canonical(
        (m, r, shift) in (1usize..4).prop_flat_map(|l| (weights(l), charge(l), prop::collection::vec(-3i64..3, l))),
        e in 2i64..6,
    ) {
        let s = adapted_multicharge(&m, &r, e).unwrap();
        let half = Rational::new(e, 2);
        for (x, (a, b)) in offsets(&m, &s).iter().zip(s.values().iter().zip(r.values())) {
            prop_assert!(-half < *x && *x <= half);
            prop_assert_eq!((a - b).rem_euclid(e), 0);
        }
        // any representative of the residue vector lands on the same charge
        let moved = Multicharge::new(r.values().iter().zip(&shift).map(|(x, k)| x + k * e).collect());
        prop_assert_eq!(adapted_multicharge(&m, &moved, e).unwrap(), s.clone());
        prop_assert_eq!(adapted_multicharge(&m, &s, e).unwrap(), s);
    }

    #[test]
    fn crystal_size_depends_on_residue_multiset(
        (r, sigma, shift) in (1usize..4).prop_flat_map(|l| (charge(l), perm(l), prop::collection::vec(-2i64..2, l))),
        e in 2i64..5,
        n in 0usize..4,
    ) {
        let moved = Multicharge::new(r.values().iter().zip(&shift).map(|(x, k)| x + k * e).collect()).twist(&sigma);
        prop_assert_eq!(uglov_set(&r, e, n).unwrap().len(), uglov_set(&moved, e, n).unwrap().len());
    }

    #[test]
    fn flotw_matches_uglov_on_fundamental_domain(r in (1usize..4).prop_flat_map(charge), e in 2i64..5, n in 0usize..4) {
        let r = fundamental_rep(&r, e).unwrap();
        prop_assert_eq!(flotw_set(&r, e, n).unwrap(), uglov_set(&r, e, n).unwrap());
    }

    #[test]
    fn sequential_and_parallel_agree(r in (1usize..4).prop_flat_map(charge), e in 2i64..5) {
        let spec = CrystalSpec::uglov(&r, e).unwrap();
        prop_assert_eq!(crystal_generate(&spec, 4, Exec::Sequential), crystal_generate(&spec, 4, Exec::default()));
    }

    #[test]
    fn certified_bound_preserves_the_order(
        (lam, mu, m) in same_rank_pair(),
        bits in 0u32..8,
        rho_pick in 0usize..6,
        t in 1i64..100,
    ) {
        let l = m.level();
        let v = compare_llm(&lam, &mu, &m).unwrap();
        // equal inputs and twin b-sequences have no bound
        let Ok(alpha) = alpha_bound_certified(&lam, &mu, &m) else { return Ok(()) };
        let rhos = Perm::all(l);
        let rho = rhos[rho_pick % rhos.len()].clone();
        let set: Vec<usize> = (1..=l).filter(|i| bits >> (i - 1) & 1 == 1).collect();
        let mp = perturb(&m, &Perturbation::new(alpha * Rational::new(t, 100), set, rho).unwrap());
        let w = compare_llm(&lam, &mu, &mp).unwrap();
        match v {
            Dominance::Less => prop_assert_ne!(w, Dominance::Greater),
            Dominance::Greater => prop_assert_ne!(w, Dominance::Less),
            _ => prop_assert_eq!(w, Dominance::Incomparable),
        }
    }

    #[test]
    fn hyperplanes_are_residue_invariant(
        (m, r, shift) in (2usize..4).prop_flat_map(|l| (weights(l), charge(l), prop::collection::vec(-3i64..3, l))),
        e in 2i64..5,
    ) {
        let moved = Multicharge::new(r.values().iter().zip(&shift).map(|(x, k)| x + k * e).collect());
        prop_assert_eq!(in_p(&m, &r, e).unwrap(), in_p(&m, &moved, e).unwrap());
    }
}
