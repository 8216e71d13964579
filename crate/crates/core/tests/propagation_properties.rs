mod common;

use common::{graph_and_set, mask_set};
use pdthrottle::enumerate::all_graphs;
use pdthrottle::propagation::{is_power_dominating, time_within, Bounded};
use pdthrottle::reference;
use pdthrottle::{
    forcing_chains, power_propagation_time, propagate, zero_forcing_propagate, PropTime,
};
use proptest::prelude::*;

fn adjacency(g: &pdthrottle::Graph) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().collect())
        .collect()
}

#[test]
fn engine_matches_naive_rules_on_every_small_graph_and_set() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            let adj = adjacency(&g);
            for mask in 1u64..1 << n {
                let s = mask_set(n, mask);
                let expected =
                    reference::power_time(&adj, mask).map_or(PropTime::Infinite, PropTime::Finite);
                assert_eq!(
                    power_propagation_time(&g, &s).unwrap(),
                    expected,
                    "{g:?} {s}"
                );
            }
        }
    }
}

#[test]
fn whole_vertex_set_takes_one_round() {
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            let t = propagate(&g, &g.vertices()).unwrap();
            assert_eq!(t.time(), PropTime::Finite(1));
            assert!(t.round(1).is_empty());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn traces_validate((g, s) in graph_and_set(1, 24)) {
        let t = propagate(&g, &s).unwrap();
        prop_assert_eq!(t.validate(&g), Ok(()));
    }

    #[test]
    fn later_rounds_never_outgrow_round_one((g, s) in graph_and_set(2, 24)) {
        let t = propagate(&g, &s).unwrap();
        let width = t.round(1).len();
        for r in t.rounds.iter().skip(2) {
            prop_assert!(r.len() <= width);
        }
    }

    #[test]
    fn power_domination_is_zero_forcing_from_the_closed_neighborhood((g, s) in graph_and_set(1, 24)) {
        let pd = propagate(&g, &s).unwrap();
        let zf = zero_forcing_propagate(&g, &g.closed_neighborhood(&s)).unwrap();
        prop_assert_eq!(pd.is_total(), zf.is_total());
        prop_assert_eq!(pd.observed(), zf.observed());
        if pd.is_total() {
            prop_assert_eq!(pd.time(), zf.time().plus(1));
        }
    }

    #[test]
    fn domination_step_size_bound((g, s) in graph_and_set(1, 24)) {
        let bound: usize = s.iter().map(|v| g.degree(v) + 1).sum();
        prop_assert!(g.closed_neighborhood(&s).len() <= bound);
        prop_assert!(g.closed_neighborhood(&s).len() <= s.len() * (g.max_degree() + 1));
    }

    #[test]
    fn propagation_is_deterministic((g, s) in graph_and_set(1, 24)) {
        prop_assert_eq!(propagate(&g, &s).unwrap(), propagate(&g, &s).unwrap());
    }

    #[test]
    fn supersets_observe_no_later((g, s) in graph_and_set(2, 20), extra in 0usize..20) {
        let mut t = s;
        t.insert(extra % g.order());
        let a = propagate(&g, &s).unwrap();
        let b = propagate(&g, &t).unwrap();
        for k in 0..a.observed_prefix.len() {
            let bk = b.observed_prefix.get(k).or(b.observed_prefix.last()).unwrap();
            prop_assert!(a.observed_prefix[k].is_subset(bk));
        }
        prop_assert!(b.time() <= a.time());
    }

    #[test]
    fn bounded_time_agrees((g, s) in graph_and_set(1, 24), limit in 1u32..8) {
        let t = power_propagation_time(&g, &s).unwrap();
        let b = time_within(&g, &s, limit);
        match t {
            PropTime::Finite(x) if x <= limit => prop_assert_eq!(b, Bounded::Done(x)),
            PropTime::Finite(_) => prop_assert_eq!(b, Bounded::OverLimit),
            PropTime::Infinite => prop_assert!(matches!(b, Bounded::Stalled | Bounded::OverLimit)),
        }
        prop_assert_eq!(is_power_dominating(&g, &s), t.is_finite());
    }

    #[test]
    fn forcing_chains_partition_the_vertices((g, s) in graph_and_set(1, 20)) {
        let t = propagate(&g, &s).unwrap();
        if t.is_total() {
            let chains = forcing_chains(&t).unwrap();
            let mut seen = vec![0usize; g.order()];
            for c in &chains {
                prop_assert!(s.contains(c[0]));
                for w in c.windows(2) {
                    prop_assert!(g.has_edge(w[0], w[1]));
                }
                for &v in c {
                    seen[v] += 1;
                }
            }
            // a source vertex may start several chains in the domination step
            for (v, &count) in seen.iter().enumerate() {
                if !s.contains(v) {
                    prop_assert_eq!(count, 1);
                }
            }
        } else {
            prop_assert!(forcing_chains(&t).is_err());
        }
    }
}
