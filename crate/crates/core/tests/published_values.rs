use pdthrottle::generators::{
    cartesian_product, complete, corona, cycle, example_h, example_w, g_d_construction, path,
    spider, GridLayout,
};
use pdthrottle::propagation::{is_power_dominating, propagate_with, reassign_forces_grid};
use pdthrottle::solvers::sum_throttling;
use pdthrottle::{
    domination_number, power_domination_number, power_propagation_time, product_throttling,
    pt_pd_k, q_sets, reference, ForceRule, PropTime, VertexSet,
};

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

#[test]
fn long_legged_spider() {
    let g = spider(&[7, 2, 2, 2, 2, 2]).unwrap();
    let thr = product_throttling(&g).unwrap();
    assert_eq!((thr.value, thr.gamma), (4, 8));
    assert_eq!(thr.value, reference::product_throttling(&g));
    let (gp, _) = power_domination_number(&g).unwrap();
    assert_eq!(gp, 1);
    assert_eq!(pt_pd_k(&g, 1).unwrap().0, PropTime::Finite(7));
    assert_eq!(
        power_propagation_time(&g, &set(&[0, 15])).unwrap(),
        PropTime::Finite(2)
    );
}

#[test]
fn short_spider_with_a_long_leg() {
    let g = spider(&[4, 1, 1]).unwrap();
    let thr = product_throttling(&g).unwrap();
    assert_eq!((thr.value, thr.gamma), (2, 2));
    assert_eq!(
        power_propagation_time(&g, &set(&[0])).unwrap(),
        PropTime::Finite(4)
    );
}

#[test]
fn complete_graphs_and_c4() {
    for n in 1..=8 {
        let g = complete(n).unwrap();
        assert_eq!(product_throttling(&g).unwrap().value, 1);
        assert_eq!(sum_throttling(&g).unwrap().value, 2);
    }
    let thr = product_throttling(&cycle(4).unwrap()).unwrap();
    assert_eq!((thr.value, thr.gamma), (2, 2));
}

#[test]
fn paths_and_cycles_take_a_third() {
    for n in 1..=16 {
        assert_eq!(
            product_throttling(&path(n).unwrap()).unwrap().value,
            n.div_ceil(3),
            "P_{n}"
        );
    }
    for n in 3..=16 {
        assert_eq!(
            product_throttling(&cycle(n).unwrap()).unwrap().value,
            n.div_ceil(3),
            "C_{n}"
        );
    }
}

#[test]
fn coronas_double_the_domination_number() {
    for h in pdthrottle::enumerate::connected_graphs_up_to(5).unwrap() {
        if h.order() < 2 {
            continue;
        }
        let g = corona(&h).unwrap();
        assert_eq!(
            product_throttling(&g).unwrap().value,
            2 * reference::domination_number(&h)
        );
    }
}

#[test]
fn double_coronas_reach_half_the_order() {
    for h in pdthrottle::enumerate::connected_graphs_up_to(3).unwrap() {
        let g = corona(&corona(&h).unwrap()).unwrap();
        assert_eq!(2 * product_throttling(&g).unwrap().value, g.order());
    }
    let g = corona(&cycle(4).unwrap()).unwrap();
    assert_eq!(product_throttling(&g).unwrap().value, 4);
}

#[test]
fn g_d_throttles_at_d() {
    for d in 2..=5 {
        let thr = product_throttling(&g_d_construction(d).unwrap()).unwrap();
        assert_eq!((thr.value, thr.gamma), (d, d));
    }
}

#[test]
fn example_h_has_a_unique_minimum_dominating_set() {
    let h = example_h();
    let g = &h.graph;
    assert_eq!(domination_number(g).unwrap().0, 3);
    let xyz = set(&["x", "y", "z"].map(|l| h.index_of(l).unwrap()));
    let n = g.order();
    let minimum: Vec<u64> = (0u64..1 << n)
        .filter(|m| m.count_ones() == 3)
        .filter(|&m| g.dominates(&(0..n).filter(|&v| m >> v & 1 == 1).collect()))
        .collect();
    assert_eq!(minimum.len(), 1);
    assert_eq!(minimum[0], xyz.iter().map(|v| 1u64 << v).sum::<u64>());
}

#[test]
fn complete_grids() {
    for n in 2..=5 {
        for m in n..=5 {
            let g = cartesian_product(&complete(n).unwrap(), &complete(m).unwrap()).unwrap();
            assert_eq!(power_domination_number(&g).unwrap().0, n - 1);
            let thr = product_throttling(&g).unwrap();
            assert_eq!((thr.value, thr.gamma), (n, n));
        }
    }
}

#[test]
fn example_w_and_its_prism() {
    let w = example_w();
    let thr = product_throttling(&w.graph).unwrap();
    assert_eq!((thr.value, thr.gamma), (6, 8));
    assert_eq!(power_domination_number(&w.graph).unwrap().0, 3);
    let p = cartesian_product(&w.graph, &path(2).unwrap()).unwrap();
    let thr = product_throttling(&p).unwrap();
    assert_eq!((thr.value, thr.gamma), (10, 11));
    assert_eq!(pt_pd_k(&p, 3).unwrap().0, PropTime::Finite(7));
    assert_eq!(pt_pd_k(&p, 4).unwrap().0, PropTime::Finite(3));
    // (x, y) sits at 2x + y
    let at = |l: &str, y: usize| 2 * w.index_of(l).unwrap() + y;
    let cited = set(&[
        at("u1", 0),
        at("u5", 0),
        at("u1", 1),
        at("u3", 1),
        at("u7", 1),
    ]);
    assert_eq!(
        power_propagation_time(&p, &cited).unwrap(),
        PropTime::Finite(2)
    );
}

#[test]
fn grid_table_values() {
    for (r, c, wrap, th) in [
        (4, 5, false, 6),
        (4, 6, false, 7),
        (4, 5, true, 6),
        (6, 6, false, 10),
    ] {
        let g = GridLayout::new(r, c, false, wrap).unwrap().graph().unwrap();
        let thr = product_throttling(&g).unwrap();
        assert_eq!((thr.value, thr.gamma), (th, th), "{r}x{c} wrap={wrap}");
    }
}

#[test]
fn grid_power_domination_small_cases_against_brute_force() {
    for n in 1..=4 {
        for m in n..=4 {
            let g = GridLayout::new(n, m, false, false)
                .unwrap()
                .graph()
                .unwrap();
            let expected = if n % 8 == 4 {
                (n + 1).div_ceil(4)
            } else {
                n.div_ceil(4)
            };
            assert_eq!(reference::power_domination(&g).0, expected);
            assert_eq!(power_domination_number(&g).unwrap().0, expected);
        }
    }
}

#[test]
fn crowded_q_set_is_reassigned() {
    let l = GridLayout::new(5, 5, false, false).unwrap();
    let g = l.graph().unwrap();
    let x = l.index(2, 2);
    let s = set(&[
        x,
        l.index(1, 1),
        l.index(1, 3),
        l.index(3, 1),
        l.index(3, 3),
    ]);
    assert!(is_power_dominating(&g, &s));
    let t = propagate_with(&g, &s, &ForceRule::preferring(g.order(), &[x])).unwrap();
    assert_eq!(q_sets(&t).unwrap().max_size(), 4);
    let fixed = reassign_forces_grid(&g, &l, &t).unwrap();
    assert_eq!(fixed.rounds, t.rounds);
    assert!(fixed.validate(&g).is_ok());
    assert!(q_sets(&fixed).unwrap().max_size() <= 3);
}

#[test]
fn reassignment_on_many_grid_traces() {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for (r, c, wr, wc) in [
        (5, 5, false, false),
        (4, 6, false, true),
        (5, 6, true, true),
    ] {
        let l = GridLayout::new(r, c, wr, wc).unwrap();
        let g = l.graph().unwrap();
        let verts: Vec<usize> = (0..g.order()).collect();
        let mut done = 0;
        while done < 40 {
            let k = rng.gen_range(1..=6);
            let s: VertexSet = verts.choose_multiple(&mut rng, k).copied().collect();
            let t = propagate_with(&g, &s, &ForceRule::LowestIndex).unwrap();
            if !t.is_total() || t.time() < PropTime::Finite(2) {
                continue;
            }
            done += 1;
            let fixed = reassign_forces_grid(&g, &l, &t).unwrap();
            assert!(q_sets(&fixed).unwrap().max_size() <= 3, "{s}");
            assert_eq!(fixed.rounds, t.rounds);
        }
    }
}
