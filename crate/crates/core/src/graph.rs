//! Immutable simple undirected graphs over dense vertex indices.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the open neighborhood `N(v)`. Construction checks the edge list,
/// so every `Graph` is loop-free and symmetric. Connectivity is not required
/// here; solver entry points check it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, &[])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// `N[S] = S ∪ ⋃_{v∈S} N(v)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = *s;
        for v in s.iter() {
            out |= self.adj[v];
        }
        out
    }

    /// True when `N[S]` is all of `V(G)`.
    pub fn dominates(&self, s: &VertexSet) -> bool {
        self.closed_neighborhood(s).len() == self.n
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    /// Breadth-first closure from vertex 0. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for u in frontier.iter() {
                next |= self.adj[u];
            }
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Induced subgraph on `keep`, relabelled to `0..|keep|` in increasing order.
    /// Returns the subgraph and the map from new index to old index.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in old.iter().enumerate() {
            for u in (self.adj[v] & *keep).iter() {
                if new_of[u] > i {
                    edges.push((i, new_of[u]));
                }
            }
        }
        let g = Graph::new(old.len(), &edges).expect("induced subgraph of a valid graph");
        (g, old)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::BadVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n => Err(Error::BadVertex {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v` with 0-based endpoints. Blank lines and `#` comments are skipped.
    /// Duplicate edges are merged.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let nums = parse_pair(hline, header)?;
        let (n, m) = (nums.0, nums.1);
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }

        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let (u, v) = parse_pair(line, body)?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("endpoint out of range 0..{n}"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("self-loop on vertex {u}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {m} edges but {} were given", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    /// Writes the graph in the edge-list text format, edges sorted.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Sorted degree sequence (non-increasing).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// True if some 4-set induces `K_{1,3}`.
    pub fn has_induced_claw(&self) -> bool {
        self.find_induced_claw().is_some()
    }

    /// First induced claw `(center, [a, b, c])` in lexicographic order.
    pub fn find_induced_claw(&self) -> Option<(usize, [usize; 3])> {
        for c in 0..self.n {
            let nb = self.adj[c].to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[j + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return Some((c, [a, b, d]));
                        }
                    }
                }
            }
        }
        None
    }

    /// Edge set as an ordered set, handy for comparing graphs built by
    /// different routes.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().into_iter().collect()
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("expected two integers, missing {what}"),
        })?;
        tok.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = next("first")?;
    let b = next("second")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "trailing tokens after two integers".into(),
        });
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn builds_small_graphs() {
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.size(), 1);
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.size(), 4);
        assert_eq!(c4.max_degree(), 2);
        assert_eq!(c4.min_degree(), 2);
        let claw_tail = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        assert_eq!(claw_tail.degree(2), 3);
        assert!(claw_tail.is_connected());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1, 1)));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert_eq!(Graph::new(513, &[]), Err(Error::TooManyVertices(513)));
    }

    #[test]
    fn deduplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn closed_neighborhoods() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.closed_neighborhood(&set(&[1])), set(&[0, 1, 2]));
        let k5 = Graph::new(
            5,
            &(0..5)
                .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(k5.closed_neighborhood(&set(&[0])), VertexSet::full(5));
        let c6 = Graph::new(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>()).unwrap();
        assert_eq!(c6.closed_neighborhood(&set(&[0, 3])), VertexSet::full(6));
        assert!(c6.closed_neighborhood(&VertexSet::new()).is_empty());
    }

    #[test]
    fn connectivity() {
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.require_connected(), Err(Error::Disconnected));
        assert!(Graph::new(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = Graph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = Graph::parse_edge_list("3 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Graph::parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = Graph::parse_edge_list("3 1\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        // duplicates are merged, not rejected
        let g = Graph::parse_edge_list("3 3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, map) = p4.induced_subgraph(&set(&[1, 2, 3]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn claw_detection() {
        let claw_tail = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        assert_eq!(claw_tail.find_induced_claw(), Some((2, [1, 3, 5])));
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!p5.has_induced_claw());
    }
}
