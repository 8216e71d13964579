use pdthrottle::generators::fig7_interval_graph;
use pdthrottle::interval::random_unit_representation;
use pdthrottle::{
    domination_number, product_throttling, propagate, reference, Rational, RationalIntervals,
    VertexSet,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn power_dominating_sets(g: &pdthrottle::Graph, max_size: usize) -> Vec<VertexSet> {
    let n = g.order();
    (1u64..1 << n)
        .filter(|m| m.count_ones() as usize <= max_size)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<VertexSet>())
        .filter(|s| {
            pdthrottle::power_propagation_time(g, s)
                .unwrap()
                .is_finite()
        })
        .collect()
}

#[test]
fn seeded_representations_satisfy_every_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..120 {
        let n = 2 + i % 11;
        let rep = random_unit_representation(n, &mut rng).unwrap();
        assert!(rep.is_unit());
        let g = rep.graph();
        assert!(g.is_connected());

        let greedy = rep.greedy_domination().unwrap();
        let (gamma, _) = domination_number(&g).unwrap();
        assert!(g.dominates(&greedy));
        assert_eq!(greedy.len(), gamma);
        assert_eq!(gamma, reference::domination_number(&g));
        assert_eq!(
            product_throttling(&g).unwrap().value,
            gamma,
            "{}",
            rep.to_text()
        );

        for s in power_dominating_sets(&g, 3) {
            let trace = propagate(&g, &s).unwrap();
            assert!(rep.check_lemma_roundwidth(&trace));
            assert!(rep.check_lemma_backadjacency(&g, &trace));
            assert!(rep.check_chain_monotone(&trace));
            assert!(
                rep.check_lemma_t_dominates(&trace),
                "{s} in\n{}",
                rep.to_text()
            );
            assert!(rep.t_of_s(&s).unwrap().len() <= 2 * s.len());
            let t = trace.time().finite().unwrap() as usize;
            if t >= 2 {
                let hat = rep.hat_s(&trace).unwrap();
                assert!(g.dominates(&hat));
                assert!(hat.len() <= s.len() * t);
            } else {
                assert!(rep.hat_s(&trace).is_err());
            }
        }
    }
}

#[test]
fn same_seed_same_representation() {
    let a = random_unit_representation(9, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
    let b = random_unit_representation(9, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn induced_order_sorts_left_endpoints() {
    let rep =
        RationalIntervals::from_unit_lefts(vec![r(5, 4), r(0, 1), r(1, 3), r(11, 5)]).unwrap();
    assert_eq!(rep.induced_order(), &[1, 2, 0, 3]);
    for (pos, &v) in rep.induced_order().iter().enumerate() {
        assert_eq!(rep.rank(v), pos);
    }
    let g = rep.graph();
    assert!(g.has_edge(1, 2) && g.has_edge(2, 0) && g.has_edge(0, 3));
    assert!(!g.has_edge(1, 0) && !g.has_edge(2, 3));
}

#[test]
fn text_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=10 {
        let rep = random_unit_representation(n, &mut rng).unwrap();
        assert_eq!(RationalIntervals::parse(&rep.to_text()).unwrap(), rep);
    }
    assert!(
        RationalIntervals::parse("0 1\n1 2\n").is_err(),
        "shared endpoint"
    );
    assert!(RationalIntervals::parse("2 1\n").is_err());
    assert!(RationalIntervals::parse("0 1 2\n").is_err());
    assert!(RationalIntervals::parse("0 x\n").is_err());
}

#[test]
fn unit_only_operations_reject_general_intervals() {
    let (f, rep) = fig7_interval_graph();
    assert!(rep.greedy_domination().is_err());
    assert!(rep.t_of_s(&VertexSet::from_iter([0])).is_err());
    assert_eq!(product_throttling(&f.graph).unwrap().value, 2);
    assert_eq!(reference::product_throttling(&f.graph), 2);
    assert_eq!(domination_number(&f.graph).unwrap().0, 3);
}

#[test]
fn small_integer_scalars_work_too() {
    let rep =
        pdthrottle::IntervalRepresentation::<i64>::new(vec![(0, 10), (5, 15), (12, 20)]).unwrap();
    let g = rep.graph();
    assert_eq!(g.size(), 2);
    assert!(!rep.is_unit());
}
