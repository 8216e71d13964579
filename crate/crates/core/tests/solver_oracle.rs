mod common;

use common::connected_graph;
use pdthrottle::enumerate::connected_graphs_up_to;
use pdthrottle::reference;
use pdthrottle::solvers::{
    domination_number_with, power_domination_number, product_throttling_with, pt_pd_k,
    sum_throttling, KTime, PruneRule,
};
use pdthrottle::{
    domination_number, power_propagation_time, product_throttling, PropTime, SolveOptions,
};
use proptest::prelude::*;

#[test]
fn all_parameters_match_brute_force_up_to_six_vertices() {
    for g in connected_graphs_up_to(6).unwrap() {
        let thr = product_throttling(&g).unwrap();
        assert_eq!(thr.value, reference::product_throttling(&g), "{g:?}");
        assert_eq!(thr.gamma, reference::domination_number(&g));
        assert_eq!(
            sum_throttling(&g).unwrap().value,
            reference::sum_throttling(&g)
        );
        let (gp, w) = power_domination_number(&g).unwrap();
        let (rgp, rpt) = reference::power_domination(&g);
        assert_eq!(gp, rgp);
        assert!(power_propagation_time(&g, &w).unwrap().is_finite());
        let (t, _) = pt_pd_k(&g, gp).unwrap();
        assert_eq!(t, PropTime::Finite(rpt));
        for k in 1..=g.order() {
            let (t, w) = pt_pd_k(&g, k).unwrap();
            let expected =
                reference::min_time_k(&g, k).map_or(PropTime::Infinite, PropTime::Finite);
            assert_eq!(t, expected, "k={k} {g:?}");
            if let Some(w) = w {
                assert_eq!(w.len(), k);
                assert_eq!(power_propagation_time(&g, &w).unwrap(), t);
            }
        }
    }
}

#[test]
fn budget_exhaustion_is_an_error_not_a_wrong_answer() {
    let g = pdthrottle::generators::GridLayout::new(6, 8, false, false)
        .unwrap()
        .graph()
        .unwrap();
    let opts = SolveOptions {
        deadline: Some(std::time::Instant::now()),
        parallel: false,
    };
    match domination_number_with(&g, &opts) {
        Err(pdthrottle::Error::BudgetExceeded) => {}
        Ok((gamma, _)) => assert_eq!(gamma, domination_number(&g).unwrap().0),
        Err(e) => panic!("unexpected {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn throttling_matches_oracle(g in connected_graph(1, 12)) {
        let thr = product_throttling(&g).unwrap();
        prop_assert_eq!(thr.value, reference::product_throttling(&g));
        prop_assert_eq!(thr.witness_set.len() * thr.witness_time as usize, thr.value);
        prop_assert_eq!(
            power_propagation_time(&g, &thr.witness_set).unwrap(),
            PropTime::Finite(thr.witness_time)
        );
        let sum = sum_throttling(&g).unwrap();
        prop_assert_eq!(sum.value, reference::sum_throttling(&g));
        prop_assert_eq!(sum.witness_set.len() + sum.witness_time as usize, sum.value);
    }

    #[test]
    fn sandwich_and_degree_bound(g in connected_graph(1, 16)) {
        let thr = product_throttling(&g).unwrap();
        let (gp, _) = power_domination_number(&g).unwrap();
        let (gamma, dom) = domination_number(&g).unwrap();
        prop_assert!(gp <= thr.value && thr.value <= gamma);
        prop_assert_eq!(thr.gamma, gamma);
        prop_assert!(g.dominates(&dom) && dom.len() == gamma);
        prop_assert!(thr.value >= pdthrottle::delta_lower_bound(&g));
        let (t, _) = pt_pd_k(&g, gp).unwrap();
        prop_assert!(thr.value <= gp * t.finite().unwrap() as usize);
        // sizes above half the value would need time one
        if 2 * gp > thr.value {
            prop_assert_eq!(thr.value, gamma);
        }
    }

    #[test]
    fn serial_and_parallel_agree(g in connected_graph(2, 14)) {
        let a = product_throttling_with(&g, &SolveOptions::serial()).unwrap();
        let b = product_throttling_with(&g, &SolveOptions::default()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn per_k_log_is_consistent(g in connected_graph(2, 14)) {
        let thr = product_throttling(&g).unwrap();
        prop_assert!(thr.pruning_log.iter().any(|p| p.rule == PruneRule::DominationSeed));
        for e in &thr.per_k {
            match e.pt {
                KTime::Exact(t) => {
                    prop_assert_eq!(e.value, Some(e.k * t as usize));
                    prop_assert!(e.k * t as usize >= thr.value);
                    let oracle = reference::min_time_k(&g, e.k);
                    prop_assert_eq!(oracle, Some(t));
                }
                KTime::Above(t) => {
                    let oracle = reference::min_time_k(&g, e.k);
                    prop_assert!(oracle.is_none_or(|o| o > t));
                }
            }
        }
    }
}
