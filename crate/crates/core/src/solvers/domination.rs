use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::{Budget, SolveOptions};

/// Exact `γ(G)` with a minimum dominating set.
pub fn domination_number(g: &Graph) -> Result<(usize, VertexSet)> {
    domination_number_with(g, &SolveOptions::default())
}

/// Branch and bound over undominated vertices. Each node branches on the
/// undominated vertex with the fewest remaining candidate dominators; a
/// candidate rejected in one branch is forbidden in its later siblings, so no
/// set is visited twice. Two lower bounds prune: a covering bound from the
/// largest remaining coverages, and a packing bound from undominated vertices
/// with pairwise disjoint candidate sets.
pub fn domination_number_with(g: &Graph, opts: &SolveOptions) -> Result<(usize, VertexSet)> {
    g.require_connected()?;
    let n = g.order();
    if n == 0 {
        return Ok((0, VertexSet::new()));
    }
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    let best = greedy(&closed, n);
    let mut bb = Bb {
        closed: &closed,
        n,
        best,
        budget: Budget::new(opts),
    };
    if bb.best.len() > super::delta_lower_bound(g) {
        bb.branch(VertexSet::new(), VertexSet::full(n), VertexSet::new())?;
    }
    Ok((bb.best.len(), bb.best))
}

fn greedy(closed: &[VertexSet], n: usize) -> VertexSet {
    let mut undominated = VertexSet::full(n);
    let mut out = VertexSet::new();
    while !undominated.is_empty() {
        let pick = (0..n)
            .max_by_key(|&u| {
                (
                    closed[u].intersection_len(&undominated),
                    std::cmp::Reverse(u),
                )
            })
            .expect("nonempty graph");
        out.insert(pick);
        undominated -= closed[pick];
    }
    out
}

struct Bb<'a> {
    closed: &'a [VertexSet],
    n: usize,
    best: VertexSet,
    budget: Budget,
}

impl Bb<'_> {
    fn branch(
        &mut self,
        chosen: VertexSet,
        undominated: VertexSet,
        forbidden: VertexSet,
    ) -> Result<()> {
        if self.budget.tick() {
            return Err(Error::BudgetExceeded);
        }
        if undominated.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return Ok(());
        }
        let room = self.best.len() - chosen.len();
        if room <= 1 {
            return Ok(());
        }
        let allowed = VertexSet::full(self.n) - forbidden - chosen;

        // covering bound
        let mut covers: Vec<usize> = allowed
            .iter()
            .map(|u| self.closed[u].intersection_len(&undominated))
            .filter(|&c| c > 0)
            .collect();
        covers.sort_unstable_by(|a, b| b.cmp(a));
        let need = undominated.len();
        let mut acc = 0;
        let mut cover_lb = None;
        for (i, c) in covers.iter().enumerate() {
            acc += c;
            if acc >= need {
                cover_lb = Some(i + 1);
                break;
            }
        }
        let Some(cover_lb) = cover_lb else {
            return Ok(());
        };
        if cover_lb >= room {
            return Ok(());
        }

        // packing bound, and the branching vertex
        let mut pick = None;
        let mut pick_size = usize::MAX;
        let mut used = VertexSet::new();
        let mut packing = 0;
        for v in undominated.iter() {
            let cands = self.closed[v] & allowed;
            let size = cands.len();
            if size == 0 {
                return Ok(());
            }
            if size < pick_size {
                pick_size = size;
                pick = Some(v);
            }
            if cands.is_disjoint(&used) {
                used |= cands;
                packing += 1;
            }
        }
        if packing >= room {
            return Ok(());
        }
        let v = pick.expect("undominated is nonempty");
        let mut cands: Vec<usize> = (self.closed[v] & allowed).iter().collect();
        cands.sort_by_key(|&u| {
            (
                std::cmp::Reverse(self.closed[u].intersection_len(&undominated)),
                u,
            )
        });
        let mut forbid = forbidden;
        for u in cands {
            let mut next = chosen;
            next.insert(u);
            self.branch(next, undominated - self.closed[u], forbid)?;
            forbid.insert(u);
        }
        Ok(())
    }
}
