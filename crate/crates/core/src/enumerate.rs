//! Small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from graphs on `n - 1` vertices by adding
//! one vertex with every possible neighborhood, then deduplicated by a
//! canonical adjacency code. The code is the lexicographically largest
//! upper-triangle bit string over all vertex orders compatible with a stable
//! color refinement, so it is exact (not a hash) and cheap for `n <= 10`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order supported by [`canonical_code`] (the code must fit in 64 bits).
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Canonical form of a graph: equal codes (at equal order) iff isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_form(g).0
}

/// The canonical code and a vertex order realizing it (`perm[i]` is the
/// original vertex placed at position `i`).
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.order();
    assert!(
        n <= MAX_CANONICAL_ORDER,
        "canonical codes support at most {MAX_CANONICAL_ORDER} vertices"
    );
    let colors = refine_colors(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut best = (0u64, Vec::new());
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(g, &cells, 0, &mut perm, &mut used, &mut best);
    best
}

fn search(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut (u64, Vec<usize>),
) {
    let Some(members) = cells.get(cell) else {
        let code = encode(g, perm);
        if best.1.is_empty() || code > best.0 {
            *best = (code, perm.clone());
        }
        return;
    };
    let placed_in_cell = members.iter().filter(|&&v| used[v]).count();
    if placed_in_cell == members.len() {
        search(g, cells, cell + 1, perm, used, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        perm.push(v);
        search(g, cells, cell, perm, used, best);
        perm.pop();
        used[v] = false;
    }
}

fn encode(g: &Graph, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    code
}

/// Color refinement started from degrees. Colors are ranks of sorted
/// signatures, so they are invariant under isomorphism.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colors = next;
    }
}

/// Relabels `g` into its canonical vertex order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = canonical_form(g);
    let mut pos = vec![0; g.order()];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (pos[u], pos[v]))
        .collect();
    Graph::new(g.order(), &edges).expect("relabeling preserves validity")
}

/// All graphs of order `n` up to isomorphism, in canonical form, sorted by code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports n <= {MAX_CANONICAL_ORDER}"
        )));
    }
    let mut level = vec![Graph::empty(0)?];
    for order in 1..=n {
        let mut found: Vec<(u64, Graph)> = level
            .par_iter()
            .flat_map_iter(|h| extensions(h, order))
            .map(|g| {
                let c = canonical_graph(&g);
                (canonical_code(&c), c)
            })
            .collect();
        found.sort_by_key(|(code, _)| *code);
        found.dedup_by_key(|(code, _)| *code);
        level = found.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

fn extensions(h: &Graph, order: usize) -> impl Iterator<Item = Graph> + '_ {
    let new = order - 1;
    let base = h.edges();
    (0u64..1 << new).map(move |mask| {
        let mut edges = base.clone();
        edges.extend((0..new).filter(|&u| mask >> u & 1 == 1).map(|u| (u, new)));
        Graph::new(order, &edges).expect("extension stays simple")
    })
}

/// Connected graphs of order `n` up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Connected graphs of every order `1..=n_max`.
pub fn connected_graphs_up_to(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    #[test]
    fn known_counts() {
        // OEIS A000088 and A001349
        let all = [1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 2, 6, 21, 112, 853];
        for n in 1..=7 {
            let gs = all_graphs(n).unwrap();
            assert_eq!(gs.len(), all[n - 1], "all graphs on {n}");
            assert_eq!(
                gs.iter().filter(|g| g.is_connected()).count(),
                connected[n - 1]
            );
        }
    }

    #[test]
    fn isomorphic_graphs_share_codes() {
        let a = path(5).unwrap();
        let b = Graph::new(5, &[(3, 1), (1, 4), (4, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        let star = crate::generators::star(5).unwrap();
        assert_ne!(canonical_code(&a), canonical_code(&star));
        let c6 = cycle(6).unwrap();
        let two_triangles =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two_triangles));
    }

    #[test]
    fn canonical_graph_is_isomorphic() {
        let g = crate::generators::spider(&[2, 1, 1]).unwrap();
        let c = canonical_graph(&g);
        assert_eq!(c.degree_sequence(), g.degree_sequence());
        assert_eq!(canonical_code(&c), canonical_code(&g));
    }
}
