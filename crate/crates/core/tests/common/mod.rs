#![allow(dead_code)]

use pdthrottle::{Graph, VertexSet};
use proptest::prelude::*;

/// A connected graph on `lo..=hi` vertices: a random spanning tree plus extra edges.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            parents,
            proptest::collection::vec(any::<bool>(), pairs),
            0u8..4,
        )
            .prop_map(|(n, parents, extra, density)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p, i + 1))
                    .collect();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        // keep roughly density/8 of the optional edges
                        if extra[k] && (k as u8 % 8) < density {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
    })
}

/// A graph with a nonempty vertex subset.
pub fn graph_and_set(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    connected_graph(lo, hi).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(any::<bool>(), n)).prop_map(|(g, bits)| {
            let mut s: VertexSet = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect();
            if s.is_empty() {
                s.insert(0);
            }
            (g, s)
        })
    })
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

pub fn mask_set(n: usize, mask: u64) -> VertexSet {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}
