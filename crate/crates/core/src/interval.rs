//! Interval representations, the induced vertex order, and the unit-interval
//! constructions: greedy domination, `T(S)`, `Ŝ`, and per-instance checkers
//! for the round-width, back-adjacency and chain-monotonicity lemmas.
//!
//! Endpoints are any exact ordered scalar (`Rational64` in practice, see
//! [`crate::RationalIntervals`]); floating point is deliberately not supported.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Num;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::propagation::{forcing_chains, PropagationTrace};
use crate::vertex_set::VertexSet;

/// Exact ordered scalar usable as an interval endpoint.
pub trait Scalar: Num + Ord + Clone + Debug + Display {}

impl<T: Num + Ord + Clone + Debug + Display> Scalar for T {}

/// Closed intervals `I(v) = [left, right]`, one per vertex, with all `2n`
/// endpoints pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRepresentation<T> {
    intervals: Vec<(T, T)>,
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl<T: Scalar> IntervalRepresentation<T> {
    pub fn new(intervals: Vec<(T, T)>) -> Result<Self> {
        if intervals.len() > crate::MAX_VERTICES {
            return Err(Error::TooManyVertices(intervals.len()));
        }
        for (i, (l, r)) in intervals.iter().enumerate() {
            if r <= l {
                return Err(Error::EmptyInterval(i));
            }
        }
        let mut endpoints: Vec<(&T, usize)> = intervals
            .iter()
            .enumerate()
            .flat_map(|(i, (l, r))| [(l, i), (r, i)])
            .collect();
        endpoints.sort();
        if let Some(w) = endpoints.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateEndpoint(w[0].1, w[1].1));
        }
        let mut order: Vec<usize> = (0..intervals.len()).collect();
        order.sort_by(|&a, &b| intervals[a].0.cmp(&intervals[b].0));
        let mut rank = vec![0; intervals.len()];
        for (pos, &v) in order.iter().enumerate() {
            rank[v] = pos;
        }
        Ok(IntervalRepresentation {
            intervals,
            order,
            rank,
        })
    }

    /// Unit intervals `[l, l+1]` from their left endpoints.
    pub fn from_unit_lefts(lefts: Vec<T>) -> Result<Self> {
        Self::new(
            lefts
                .into_iter()
                .map(|l| {
                    let r = l.clone() + T::one();
                    (l, r)
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn interval(&self, v: usize) -> &(T, T) {
        &self.intervals[v]
    }

    pub fn intervals(&self) -> &[(T, T)] {
        &self.intervals
    }

    /// True when every interval has length exactly one.
    pub fn is_unit(&self) -> bool {
        self.intervals
            .iter()
            .all(|(l, r)| r.clone() - l.clone() == T::one())
    }

    fn require_unit(&self) -> Result<()> {
        if self.is_unit() {
            Ok(())
        } else {
            Err(Error::NotUnit)
        }
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        let (a, b) = (&self.intervals[u], &self.intervals[v]);
        a.0 <= b.1 && b.0 <= a.1
    }

    /// Vertices sorted by left endpoint.
    pub fn induced_order(&self) -> &[usize] {
        &self.order
    }

    /// Position of `v` in the induced order.
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn graph(&self) -> Graph {
        let n = self.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.intersects(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("representation size is capped")
    }

    /// The intersection graph and its induced order.
    pub fn graph_from_intervals(&self) -> (Graph, Vec<usize>) {
        (self.graph(), self.order.clone())
    }

    /// Writes one `left right` line per vertex.
    pub fn to_text(&self) -> String {
        self.intervals
            .iter()
            .map(|(l, r)| format!("{l} {r}\n"))
            .collect()
    }

    /// Greedy dominating set: take the least undominated vertex `v` in the
    /// induced order, add the greatest vertex whose interval meets `I(v)`,
    /// discard everything that vertex dominates, repeat.
    pub fn greedy_domination(&self) -> Result<VertexSet> {
        self.require_unit()?;
        let g = self.graph();
        g.require_connected()?;
        let mut undominated = g.vertices();
        let mut out = VertexSet::new();
        while let Some(&v) = self.order.iter().find(|&&v| undominated.contains(v)) {
            let pick = g
                .closed_neighbors(v)
                .iter()
                .max_by_key(|&u| self.rank[u])
                .expect("closed neighborhoods are nonempty");
            out.insert(pick);
            undominated -= g.closed_neighbors(pick);
        }
        Ok(out)
    }

    /// `T(S)`: the least and greatest neighbor (in induced order) of each member of `S`.
    pub fn t_of_s(&self, s: &VertexSet) -> Result<VertexSet> {
        self.require_unit()?;
        let g = self.graph();
        g.check_set(s)?;
        let mut out = VertexSet::new();
        for x in s.iter() {
            let nb = g.neighbors(x);
            if let Some(u) = nb.iter().min_by_key(|&u| self.rank[u]) {
                out.insert(u);
            }
            if let Some(v) = nb.iter().max_by_key(|&v| self.rank[v]) {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// The dominating set built from a total trace with time `t >= 2`:
    /// `T(S) ∪ P^(3) ∪ P^(5) ∪ ... ∪ P^(t-1)` for even `t`,
    /// `S ∪ P^(2) ∪ P^(4) ∪ ... ∪ P^(t-1)` for odd `t`.
    pub fn hat_s(&self, trace: &PropagationTrace) -> Result<VertexSet> {
        self.require_unit()?;
        let t = trace.time().finite().ok_or(Error::Stalled)? as usize;
        if t < 2 {
            return Err(Error::TimeTooShort);
        }
        let out = if t.is_multiple_of(2) {
            let mut base = self.t_of_s(&trace.source)?;
            for k in (3..t).step_by(2) {
                base |= trace.round(k);
            }
            base
        } else {
            let mut base = trace.source;
            for k in (2..t).step_by(2) {
                base |= trace.round(k);
            }
            base
        };
        Ok(out)
    }

    /// Every round `k >= 2` has at most `2|S|` vertices.
    pub fn check_lemma_roundwidth(&self, trace: &PropagationTrace) -> bool {
        let cap = 2 * trace.source.len();
        trace.rounds.iter().skip(2).all(|r| r.len() <= cap)
    }

    /// `T(S)` dominates `S ∪ P^(1) ∪ P^(2)`. Needs a graph of order at least two.
    pub fn check_lemma_t_dominates(&self, trace: &PropagationTrace) -> bool {
        let Ok(t) = self.t_of_s(&trace.source) else {
            return false;
        };
        let need = trace.source | trace.round(1) | trace.round(2);
        need.is_subset(&self.graph().closed_neighborhood(&t))
    }

    /// Every vertex first observed in round `k >= 1` has a neighbor first
    /// observed in round `k - 1`.
    pub fn check_lemma_backadjacency(&self, g: &Graph, trace: &PropagationTrace) -> bool {
        (1..trace.rounds.len()).all(|k| {
            let prev = trace.rounds[k - 1];
            trace.rounds[k]
                .iter()
                .all(|v| !g.neighbors(v).is_disjoint(&prev))
        })
    }

    /// Every forcing chain `v_0 → v_1 → ... → v_i` is monotone in the induced
    /// order after its first force. On increasing chains, every `u` with
    /// `v_0 <= u < v_i` is observed before round `rd(v_i)` once `i >= 2`.
    /// Decreasing chains are checked for monotonicity only.
    pub fn check_chain_monotone(&self, trace: &PropagationTrace) -> bool {
        let Ok(chains) = forcing_chains(trace) else {
            return false;
        };
        let rd = |v: usize| trace.round_of[v].expect("total trace");
        for chain in chains {
            if chain.len() < 3 {
                continue;
            }
            let ranks: Vec<usize> = chain.iter().map(|&v| self.rank[v]).collect();
            let increasing = ranks[0] < ranks[1];
            let monotone = ranks[1..].windows(2).all(|w| (w[0] < w[1]) == increasing);
            if !monotone {
                return false;
            }
            if increasing {
                for i in 2..chain.len() {
                    let k = rd(chain[i]);
                    let window = &self.order[ranks[0]..ranks[i]];
                    if window.iter().any(|&u| rd(u) + 1 > k) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl<T: Scalar + FromStr> IntervalRepresentation<T> {
    /// Parses one `left right` pair per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut intervals = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(err(format!(
                    "expected two endpoints, found {}",
                    parts.len()
                )));
            }
            let l = parts[0]
                .parse::<T>()
                .map_err(|_| err(format!("bad endpoint `{}`", parts[0])))?;
            let r = parts[1]
                .parse::<T>()
                .map_err(|_| err(format!("bad endpoint `{}`", parts[1])))?;
            intervals.push((l, r));
        }
        Self::new(intervals)
    }
}

/// Random connected unit representation on `n` vertices: left endpoints are
/// distinct rationals with denominator `denom` drawn from `[0, n/2]`,
/// resampled until all endpoints are distinct and the graph is connected.
pub fn random_unit_representation<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<IntervalRepresentation<Rational64>> {
    const DENOM: i64 = 1000;
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one interval".into()));
    }
    let hi = (n as i64) * DENOM / 2;
    loop {
        let lefts: Vec<Rational64> = (0..n)
            .map(|_| Rational64::new(rng.gen_range(0..=hi), DENOM))
            .collect();
        match IntervalRepresentation::from_unit_lefts(lefts) {
            Ok(rep) if rep.graph().is_connected() => return Ok(rep),
            Ok(_) | Err(Error::DuplicateEndpoint(..)) => continue,
            Err(e) => return Err(e),
        }
    }
}
