mod common;

use std::collections::BTreeSet;

use common::*;
use hyperchrom::bounds::{
    check_le35, check_pro31, check_pro32, counting_lower_bound, difference_expansion, f_axw,
    f_eta, certify_cor31, certify_len0, pp15_lower_bound, FactorTable,
};
use hyperchrom::deltacycles::check_wanghyc;
use hyperchrom::listcolor::alpha_profile;
use hyperchrom::{
    chromatic_polynomial_ie, chromatic_polynomial_nbc, count_l_colorings, count_l_colorings_nbc,
    enumerate_delta_cycles, plmin_exact, Assignment, Budget, EdgeSet, Eta, Hypergraph, NbFamily,
    Rational, Subject,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn antichain(n: usize, raw: Vec<BTreeSet<usize>>) -> Hypergraph {
    let mut kept: Vec<BTreeSet<usize>> = Vec::new();
    for e in raw {
        if kept.iter().all(|f| !e.is_subset(f) && !f.is_subset(&e)) {
            kept.push(e);
        }
    }
    Hypergraph::new(n, kept.into_iter().map(|e| e.into_iter().collect()).collect()).unwrap()
}

/// Antichains on `3..=max_n` vertices with edge sizes in `sizes`.
fn hypergraphs(max_n: usize, max_m: usize, sizes: (usize, usize)) -> impl Strategy<Value = Hypergraph> {
    (sizes.1.max(3)..=max_n).prop_flat_map(move |n| {
        let edge = (sizes.0..=sizes.1.min(n))
            .prop_flat_map(move |size| prop::sample::subsequence((0..n).collect::<Vec<_>>(), size))
            .prop_map(|e| e.into_iter().collect::<BTreeSet<_>>());
        prop::collection::vec(edge, 1..=max_m).prop_map(move |raw| antichain(n, raw))
    })
}

fn uniform(r: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    hypergraphs(max_n, max_m, (r, r))
}

fn lists_for(n: usize, k: usize) -> impl Strategy<Value = Assignment> {
    let list = prop::sample::subsequence((1u32..=2 * k as u32).collect::<Vec<_>>(), k);
    prop::collection::vec(list, n).prop_map(move |ls| Assignment::new(k, ls).unwrap())
}

fn with_lists(
    hs: impl Strategy<Value = Hypergraph>,
    ks: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (Hypergraph, Assignment)> {
    (hs, ks).prop_flat_map(|(h, k)| {
        let n = h.n();
        (Just(h), lists_for(n, k))
    })
}

fn any_uniform(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    prop_oneof![
        uniform(2, max_n, max_m),
        uniform(3, max_n, max_m),
        uniform(4, max_n, max_m)
    ]
}

fn two_or_more(hs: impl Strategy<Value = Hypergraph>) -> impl Strategy<Value = Hypergraph> {
    hs.prop_filter("needs two edges", |h| h.m() >= 2)
}

fn eta_for(m: usize) -> impl Strategy<Value = Eta> {
    Just((0..m).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|r| Eta::from_ranks(r).unwrap())
}

fn with_eta(hs: impl Strategy<Value = Hypergraph>) -> impl Strategy<Value = (Hypergraph, Eta)> {
    hs.prop_flat_map(|h| {
        let m = h.m();
        (Just(h), eta_for(m))
    })
}

fn set(a: &[usize]) -> EdgeSet {
    EdgeSet::from_indices(a.iter().copied())
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn b() -> Budget {
    Budget::default()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 96,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn inclusion_exclusion_matches_enumeration(h in hypergraphs(7, 6, (2, 4))) {
        let ie = chromatic_polynomial_ie(&h, &b()).unwrap();
        for k in 0..=3u32 {
            prop_assert_eq!(ie.eval_at(k as u64), BigInt::from(naive_count(&h, k)));
        }
    }

    #[test]
    fn uniform_expansion_is_order_independent(h in any_uniform(7, 6)) {
        let ie = chromatic_polynomial_ie(&h, &b()).unwrap();
        for eta in Eta::all(h.m()) {
            prop_assert_eq!(&chromatic_polynomial_nbc(&h, &eta, &b()).unwrap(), &ie);
        }
    }

    #[test]
    fn family_matches_definition((h, eta) in with_eta(hypergraphs(7, 6, (2, 4)))) {
        let cycles: Vec<Vec<usize>> = enumerate_delta_cycles(&h, &b())
            .unwrap()
            .into_iter()
            .map(|c| c.0.to_vec())
            .collect();
        let mut expected = naive_delta_cycles(&h);
        expected.sort_by_key(|c| set(c).0);
        prop_assert_eq!(cycles, expected);
        let nb = NbFamily::compute(&h, &eta, &b()).unwrap();
        let mut expected: Vec<u64> = naive_nb(&h, &eta).iter().map(|a| set(a).0).collect();
        expected.sort_unstable();
        let got: Vec<u64> = nb.members().iter().map(|a| a.0).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn family_is_downward_closed_and_small((h, eta) in with_eta(hypergraphs(7, 6, (2, 4)))) {
        let nb = NbFamily::compute(&h, &eta, &b()).unwrap();
        prop_assert!(nb.is_downward_closed());
        prop_assert!(nb.short_broken_cycles().is_empty());
        let m = h.m() as u64;
        let binom = |a: u64, c: u64| (0..c).fold(1u64, |acc, j| acc * (a - j) / (j + 1));
        for e in 0..h.m() {
            for i in 1..=h.m() {
                let count = nb.containing_of_size(e, i).count() as u64;
                prop_assert!(count <= binom(m - 1, i as u64 - 1));
            }
        }
    }

    #[test]
    fn list_count_is_order_independent(
        ((h, l), eta1, eta2) in with_lists(any_uniform(6, 5), 1..=3)
            .prop_flat_map(|(h, l)| { let m = h.m(); (Just((h, l)), eta_for(m), eta_for(m)) })
    ) {
        let expected = naive_list_count(&h, l.lists());
        let a = count_l_colorings_nbc(&h, &l, &eta1, &b()).unwrap();
        let c = count_l_colorings_nbc(&h, &l, &eta2, &b()).unwrap();
        prop_assert_eq!(a.to_u64(), Some(expected));
        prop_assert_eq!(c.to_u64(), Some(expected));
        prop_assert_eq!(count_l_colorings(&h, &l, &b()).unwrap().to_u64(), Some(expected));
    }

    #[test]
    fn components_match_union_find(h in hypergraphs(8, 6, (2, 4))) {
        for a in subsets(h.m()) {
            let s = set(&a);
            prop_assert_eq!(h.component_count(s), naive_c(&h, &a));
            for e in 0..h.m() {
                prop_assert!(h.component_count(s.with(e)) <= h.component_count(s));
            }
        }
    }

    #[test]
    fn gamma_zero_iff_rho_at_least_two(h in two_or_more(prop_oneof![uniform(3, 7, 6), uniform(4, 7, 6)])) {
        let s = h.struct_stats();
        prop_assert_eq!(s.gamma.unwrap() == 0, s.rho.unwrap() >= 2);
        for e in 0..h.m() {
            prop_assert_eq!(s.ew(e).unwrap().len(), naive_ew(&h, e));
        }
    }

    #[test]
    fn recolouring_preserves_counts((h, l) in with_lists(hypergraphs(6, 5, (2, 4)), 1..=3), shift in 1u32..50) {
        let moved = l.recolored(|c| 100 - c + shift).unwrap();
        prop_assert_eq!(
            count_l_colorings(&h, &l, &b()).unwrap(),
            count_l_colorings(&h, &moved, &b()).unwrap()
        );
        prop_assert_eq!(
            alpha_profile(&h, &l).unwrap(),
            alpha_profile(&h, &moved).unwrap()
        );
    }

    #[test]
    fn difference_identity((h, l) in with_lists(any_uniform(6, 5), 1..=3), seed in 0usize..24) {
        let eta = Eta::all(h.m()).swap_remove(seed % (1..=h.m()).product::<usize>());
        let nb = NbFamily::compute(&h, &eta, &b()).unwrap();
        let lhs = difference_expansion(&h, &nb, &l).unwrap();
        let rhs = BigInt::from(naive_list_count(&h, l.lists())) - BigInt::from(naive_count(&h, l.k() as u32));
        prop_assert_eq!(lhs, rhs);
        let beta_sum = naive_nb(&h, &eta).iter().fold(BigInt::from(0), |acc, a| {
            let t = naive_beta(&h, l.lists(), a);
            if a.len() % 2 == 0 { acc + t } else { acc - t }
        });
        prop_assert_eq!(beta_sum, BigInt::from(naive_list_count(&h, l.lists())));
    }

    #[test]
    fn sandwich_bounds_hold((h, l) in with_lists(hypergraphs(7, 5, (2, 4)), 1..=3)) {
        for a in EdgeSet::all(h.m()) {
            prop_assert!(check_pro31(&h, &l, a).unwrap().passed);
            if !a.is_empty() {
                prop_assert!(check_pro32(&h, &l, a).unwrap().passed);
            }
        }
    }

    #[test]
    fn factor_matches_term_by_term_sum((h, eta) in with_eta(uniform(3, 7, 6)), k in 1u64..8) {
        let table = FactorTable::compute(&h, &eta, &b()).unwrap();
        for e in 0..h.m() {
            prop_assert_eq!(table.value(e, k), naive_factor(&h, &eta, e, k));
            let laurent = table.laurent(e);
            prop_assert!(laurent.max_exponent().unwrap_or(0) <= 0);
            prop_assert_eq!(laurent.coeff(0), q(1, 1));
        }
    }

    #[test]
    fn factor_above_counting_bound((h, eta) in with_eta(two_or_more(uniform(3, 7, 6))), k in 1u64..10) {
        let table = FactorTable::compute(&h, &eta, &b()).unwrap();
        for e in 0..h.m() {
            let a = BigRational::new(naive_ew(&h, e).into(), (h.m() - 1).into());
            let bound = counting_lower_bound(h.m(), &a, k).unwrap();
            prop_assert!(table.value(e, k) >= bound);
        }
    }

    #[test]
    fn factor_bound_is_below_difference((h, l) in with_lists(uniform(3, 6, 5), 1..=3)) {
        let eta = Eta::identity(h.m());
        let bound = pp15_lower_bound(&h, &eta, &l, &b()).unwrap();
        let diff = naive_list_count(&h, l.lists()) as i64 - naive_count(&h, l.k() as u32) as i64;
        prop_assert!(BigRational::from_integer(diff.into()) >= bound);
    }

    #[test]
    fn component_bound_on_family((h, eta) in with_eta(prop_oneof![uniform(3, 7, 6), uniform(2, 7, 6)])) {
        let rep = check_wanghyc(&h, &eta, &b()).unwrap();
        prop_assert!(rep.passed, "{:?}", rep.witness);
    }

    #[test]
    fn paired_tail_bound((h, eta) in with_eta(uniform(3, 7, 6)), k in 1u64..8) {
        for i in 2..=h.m() / 2 {
            for e in 0..h.m() {
                let rep = check_le35(&h, &eta, e, k, i, &b()).unwrap();
                prop_assert!(rep.passed, "e = {} i = {} {:?}", e, i, rep.witness);
            }
        }
    }

    #[test]
    fn small_size_lemma((h, eta) in with_eta(uniform(3, 6, 4)), k in 2u64..6) {
        let rep = certify_len0(&h, &eta, k, &b()).unwrap();
        prop_assert!(rep.passed, "{:?}", rep.witness);
    }

    #[test]
    fn failing_cor31_witness_rechecks((h, eta) in with_eta(uniform(3, 6, 6)), k in 1u64..4) {
        let rep = certify_cor31(&h, &eta, k, &b()).unwrap();
        if let Some(w) = rep.witness {
            let Subject::Edge { edge } = w.subject else { panic!("edge witness expected") };
            let f = f_eta(&h, &eta, edge, k, &b()).unwrap();
            prop_assert!(f.value < BigRational::from_integer(0.into()));
            prop_assert_eq!(w.value, Some(Rational::from(f.value)));
        }
    }

    #[test]
    fn list_minimum_below_chromatic((h, l) in with_lists(hypergraphs(5, 4, (2, 3)), 1..=3)) {
        let k = l.k();
        let min = plmin_exact(&h, k, &b()).unwrap();
        let pk = naive_count(&h, k as u32);
        let pl = naive_list_count(&h, l.lists());
        let v = min.value.to_u64().unwrap();
        prop_assert!(v <= pk && v <= pl);
        prop_assert_eq!(naive_list_count(&h, min.witness.lists()), v);
    }

    #[test]
    fn list_minimum_matches_canonical_search(
        (h, k) in prop_oneof![
            hypergraphs(4, 4, (2, 3)).prop_map(|h| (h, 1usize)),
            hypergraphs(4, 4, (2, 3)).prop_map(|h| (h, 2usize)),
            hypergraphs(3, 3, (2, 3)).prop_map(|h| (h, 3usize)),
        ]
    ) {
        let min = plmin_exact(&h, k, &b()).unwrap();
        prop_assert_eq!(min.value.to_u64().unwrap(), naive_plmin(&h, k));
    }

    #[test]
    fn envelope_decreasing_in_x(a in 0.0f64..=1.0, x in 0.0f64..3.0, dx in 1e-3f64..0.5) {
        for w in [0.0, 1.0 / 6.0, 0.25] {
            prop_assert!(f_axw(a, x + dx, w).unwrap() - f_axw(a, x, w).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn envelope_concave_in_w(a in 0.0f64..=1.0, x in 0.0f64..3.0, w in 0.01f64..0.24) {
        let h = 0.01;
        let second = f_axw(a, x, w + h).unwrap() - 2.0 * f_axw(a, x, w).unwrap() + f_axw(a, x, w - h).unwrap();
        prop_assert!(second <= 1e-12);
    }
}

#[test]
fn json_round_trips() {
    let h = Hypergraph::new(5, vec![vec![4, 0, 2], vec![1, 3, 2]]).unwrap();
    let text = serde_json::to_string(&h).unwrap();
    assert_eq!(text, r#"{"n":5,"edges":[[0,2,4],[1,2,3]]}"#);
    assert_eq!(serde_json::from_str::<Hypergraph>(&text).unwrap(), h);
    let l = Assignment::new(2, vec![vec![1, 2], vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
    let text = serde_json::to_string(&l).unwrap();
    assert_eq!(serde_json::from_str::<Assignment>(&text).unwrap(), l);
    let r = Rational::new(-3, 12);
    let text = serde_json::to_string(&r).unwrap();
    assert_eq!(text, r#"{"num":"-1","den":"4"}"#);
    assert_eq!(serde_json::from_str::<Rational>(&text).unwrap(), r);
    assert!(serde_json::from_str::<Hypergraph>(r#"{"n":3,"edges":[[0,1],[0,1,2]]}"#).is_err());
}

#[test]
fn canonical_oracle_on_the_worked_example() {
    let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
    assert_eq!(naive_plmin(&h, 2), 10);
    assert_eq!(naive_plmin(&h, 1), 0);
}
