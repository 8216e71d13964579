//! Named graph families and the fixed example graphs, each with a frozen
//! vertex numbering.
//!
//! Numbering conventions:
//! - `path`/`cycle`: along the walk `0, 1, ..., n-1`.
//! - `star`: center 0.
//! - `spider`: center 0; legs laid out shortest first (stable for equal
//!   lengths), each leg numbered outward from the center. For
//!   `S(7,2,2,2,2,2)` the five short legs are `1-2, 3-4, 5-6, 7-8, 9-10` and the long leg is `11..=17`.
//! - `corona(H)`: vertex `i` of `H` keeps index `i`, its leaf is `|V(H)| + i`.
//! - `cartesian_product(G, H)`: `(x, y) ↦ x·|V(H)| + y`.

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::IntervalRepresentation;

/// A graph together with human-readable vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// One member of the seven-graph family of minimum-degree-two exceptions,
/// with the vertex that alone power dominates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyAMember {
    pub graph: Graph,
    pub designated: usize,
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "complete graph needs n >= 1".into(),
        ));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges)
}

/// `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

/// The spider with one leg of `legs[i]` vertices per entry.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() {
        return Err(Error::InvalidParameter(
            "spider needs at least one leg".into(),
        ));
    }
    if legs.contains(&0) {
        return Err(Error::InvalidParameter(
            "spider legs must have length >= 1".into(),
        ));
    }
    let mut order: Vec<usize> = legs.to_vec();
    order.sort(); // stable on equal lengths; only lengths matter

    let n = 1 + order.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for len in order {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(n, &edges)
}

/// `H ∘ K_1`: one pendant leaf per vertex of `H`.
pub fn corona(h: &Graph) -> Result<Graph> {
    let k = h.order();
    if k == 0 {
        return Err(Error::InvalidParameter("corona of the empty graph".into()));
    }
    let mut edges = h.edges();
    edges.extend((0..k).map(|i| (i, k + i)));
    Graph::new(2 * k, &edges)
}

/// `G □ H` with `(x, y) ↦ x·|V(H)| + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    let order = n
        .checked_mul(m)
        .filter(|&o| o <= crate::MAX_VERTICES)
        .ok_or(Error::TooManyVertices(n.saturating_mul(m)))?;
    let idx = |x: usize, y: usize| x * m + y;
    let mut edges = Vec::new();
    for x in 0..n {
        for (y1, y2) in h.edges() {
            edges.push((idx(x, y1), idx(x, y2)));
        }
    }
    for (x1, x2) in g.edges() {
        for y in 0..m {
            edges.push((idx(x1, y), idx(x2, y)));
        }
    }
    Graph::new(order, &edges)
}

/// `d` disjoint copies of `K_{1,d}` plus edges joining leaf `j` of every copy
/// to leaf `j` of every other copy. Copy `i` has center `i(d+1)` and leaves
/// `i(d+1)+1 ..= i(d+1)+d`.
pub fn g_d_construction(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(Error::InvalidParameter("G_d needs d >= 2".into()));
    }
    let center = |i: usize| i * (d + 1);
    let leaf = |i: usize, j: usize| i * (d + 1) + 1 + j;
    let mut edges = Vec::new();
    for i in 0..d {
        for j in 0..d {
            edges.push((center(i), leaf(i, j)));
            for i2 in i + 1..d {
                edges.push((leaf(i, j), leaf(i2, j)));
            }
        }
    }
    Graph::new(d * (d + 1), &edges)
}

/// The seven exceptional graphs with minimum degree two and domination number
/// above `2n/5`, in the usual drawing order (row one left to right, then row two).
/// Index 4 is `C_4`; the rest have order 7.
pub fn family_a() -> Vec<FamilyAMember> {
    // vertices A..G = 0..6 as drawn
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    const F: usize = 5;
    const G: usize = 6;
    let heptagon = [(A, B), (B, C), (C, D), (D, E), (E, F), (F, G), (G, A)];
    let with = |extra: &[(usize, usize)]| {
        let mut e = heptagon.to_vec();
        e.extend_from_slice(extra);
        e
    };
    let bowtie = [
        (B, C),
        (B, G),
        (C, D),
        (D, G),
        (E, G),
        (F, E),
        (G, A),
        (F, A),
    ];
    let mut bowtie_ab = bowtie.to_vec();
    bowtie_ab.push((A, B));

    // (order, edges, designated vertex)
    type Member = (usize, Vec<(usize, usize)>, usize);
    let members: Vec<Member> = vec![
        (7, with(&[]), G),
        (7, with(&[(F, B)]), F),
        (7, with(&[(C, F), (B, E)]), F),
        (7, with(&[(B, F), (C, F), (B, E)]), F),
        (4, vec![(A, B), (B, C), (C, D), (D, A)], D),
        (7, bowtie.to_vec(), G),
        (7, bowtie_ab, G),
    ];
    members
        .into_iter()
        .map(|(n, edges, designated)| FamilyAMember {
            graph: Graph::new(n, &edges).expect("fixed family edges are valid"),
            designated,
        })
        .collect()
}

/// The twelve-vertex graph whose unique minimum dominating set is `{x, y, z}`
/// (indices 2, 3, 9). Vertex 0 is the degree-four hub.
pub fn example_h() -> LabeledGraph {
    let edges = [
        (0, 1),
        (1, 2),
        (0, 3),
        (3, 4),
        (2, 6),
        (2, 7),
        (0, 5),
        (5, 3),
        (0, 8),
        (8, 9),
        (9, 10),
        (9, 11),
    ];
    let graph = Graph::new(12, &edges).expect("fixed edges");
    let mut labels: Vec<String> = (0..12).map(|i| format!("h{i}")).collect();
    labels[2] = "x".into();
    labels[3] = "y".into();
    labels[9] = "z".into();
    LabeledGraph { graph, labels }
}

/// An 8-cycle `u_1..u_8` (indices 0..7) with a leaf `v_i` (index 7+i) on each
/// `u_i` and one more vertex `w` (index 16) hanging off `v_1`.
pub fn example_w() -> LabeledGraph {
    let mut edges = Vec::new();
    for i in 0..8 {
        edges.push((i, (i + 1) % 8));
        edges.push((i, 8 + i));
    }
    edges.push((8, 16));
    let graph = Graph::new(17, &edges).expect("fixed edges");
    let mut labels: Vec<String> = (1..=8).map(|i| format!("u{i}")).collect();
    labels.extend((1..=8).map(|i| format!("v{i}")));
    labels.push("w".into());
    LabeledGraph { graph, labels }
}

/// The six-vertex interval graph that is not a unit interval graph, with the
/// (non-unit) representation `[0,3] [2,5] [4,9] [8,11] [10,13] [6,7]`.
/// Label `k` is index `k-1`.
pub fn fig7_interval_graph() -> (LabeledGraph, IntervalRepresentation<Rational64>) {
    let bounds = [(0, 3), (2, 5), (4, 9), (8, 11), (10, 13), (6, 7)];
    let rep = IntervalRepresentation::new(
        bounds
            .iter()
            .map(|&(l, r)| (Rational64::from_integer(l), Rational64::from_integer(r)))
            .collect(),
    )
    .expect("fixed representation has distinct endpoints");
    let graph = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).expect("fixed edges");
    let labels = (1..=6).map(|i| i.to_string()).collect();
    (LabeledGraph { graph, labels }, rep)
}

/// `(H ∘ K_1) ∘ K_1` built directly: every `u` of `H` (index `u`) gets a path
/// `u - y_u - x_u` and a pendant `z_u`, with `y_u = k+u`, `z_u = 2k+u`,
/// `x_u = 3k+u` for `k = |V(H)|`. This equals `corona(corona(H))` exactly.
pub fn half_order_construction(h: &Graph) -> Result<Graph> {
    let k = h.order();
    if k == 0 {
        return Err(Error::InvalidParameter("H must be nonempty".into()));
    }
    h.require_connected()?;
    let mut edges = h.edges();
    for u in 0..k {
        let (y, z, x) = (k + u, 2 * k + u, 3 * k + u);
        edges.push((u, y));
        edges.push((y, x));
        edges.push((u, z));
    }
    Graph::new(4 * k, &edges)
}

/// Compass direction on a grid; north decreases the row index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    North,
    East,
    South,
    West,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::North,
        Direction::East,
        Direction::South,
        Direction::West,
    ];

    pub fn opposite(self) -> Self {
        match self {
            Direction::North => Direction::South,
            Direction::South => Direction::North,
            Direction::East => Direction::West,
            Direction::West => Direction::East,
        }
    }

    pub fn perpendicular(self) -> [Direction; 2] {
        match self {
            Direction::North | Direction::South => [Direction::West, Direction::East],
            Direction::East | Direction::West => [Direction::North, Direction::South],
        }
    }
}

/// Layout metadata for `J_rows □ J_cols` where each factor is a path or a
/// cycle. Vertex `(r, c)` has index `r·cols + c`, matching
/// [`cartesian_product`] of the two factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridLayout {
    pub rows: usize,
    pub cols: usize,
    /// Columns wrap north-south (the row factor is a cycle).
    pub wrap_rows: bool,
    /// Rows wrap east-west (the column factor is a cycle).
    pub wrap_cols: bool,
}

impl GridLayout {
    pub fn new(rows: usize, cols: usize, wrap_rows: bool, wrap_cols: bool) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(
                "grid dimensions must be positive".into(),
            ));
        }
        if (wrap_rows && rows < 3) || (wrap_cols && cols < 3) {
            return Err(Error::InvalidParameter(
                "a cycle factor needs at least 3 vertices".into(),
            ));
        }
        Ok(GridLayout {
            rows,
            cols,
            wrap_rows,
            wrap_cols,
        })
    }

    pub fn order(&self) -> usize {
        self.rows * self.cols
    }

    pub fn index(&self, r: usize, c: usize) -> usize {
        r * self.cols + c
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.cols, v % self.cols)
    }

    /// The neighbor of `v` in direction `dir`, if the grid has one.
    pub fn step(&self, v: usize, dir: Direction) -> Option<usize> {
        let (r, c) = self.coords(v);
        let (r, c) = match dir {
            Direction::North => (wrap_dec(r, self.rows, self.wrap_rows)?, c),
            Direction::South => (wrap_inc(r, self.rows, self.wrap_rows)?, c),
            Direction::West => (r, wrap_dec(c, self.cols, self.wrap_cols)?),
            Direction::East => (r, wrap_inc(c, self.cols, self.wrap_cols)?),
        };
        let w = self.index(r, c);
        (w != v).then_some(w)
    }

    fn factor(len: usize, wrap: bool) -> Result<Graph> {
        if wrap {
            cycle(len)
        } else {
            path(len)
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        cartesian_product(
            &Self::factor(self.rows, self.wrap_rows)?,
            &Self::factor(self.cols, self.wrap_cols)?,
        )
    }

    pub fn name(&self) -> String {
        let j = |w: bool| if w { "C" } else { "P" };
        format!(
            "{}{}x{}{}",
            j(self.wrap_rows),
            self.rows,
            j(self.wrap_cols),
            self.cols
        )
    }
}

fn wrap_dec(i: usize, len: usize, wrap: bool) -> Option<usize> {
    match (i, wrap) {
        (0, true) => Some(len - 1),
        (0, false) => None,
        _ => Some(i - 1),
    }
}

fn wrap_inc(i: usize, len: usize, wrap: bool) -> Option<usize> {
    if i + 1 < len {
        Some(i + 1)
    } else if wrap {
        Some(0)
    } else {
        None
    }
}
