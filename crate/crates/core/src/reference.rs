//! Deliberately naive reference implementations used to cross-check the
//! optimized engine and solvers. Everything here works on plain adjacency
//! lists and `Vec<bool>`, enumerates all subsets by bitmask, and applies the
//! rules one vertex at a time. Orders above [`MAX_ORACLE_ORDER`] are refused.

use crate::graph::Graph;

pub const MAX_ORACLE_ORDER: usize = 22;

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().collect())
        .collect()
}

/// Round count of power domination from the vertices in `mask`, or `None`
/// when the process stalls. Follows the textbook rules literally: round one
/// observes every neighbor of the initial set, then each later round lets
/// every observed vertex with exactly one unobserved neighbor observe it,
/// all decisions taken against the state at the start of the round.
pub fn power_time(adj: &[Vec<usize>], mask: u64) -> Option<u32> {
    let n = adj.len();
    let mut seen = vec![false; n];
    for v in 0..n {
        if mask >> v & 1 == 1 {
            seen[v] = true;
            for &u in &adj[v] {
                seen[u] = true;
            }
        }
    }
    let mut rounds = 1;
    loop {
        if seen.iter().all(|&b| b) {
            return Some(rounds);
        }
        let mut newly = Vec::new();
        for u in 0..n {
            if !seen[u] {
                continue;
            }
            let white: Vec<usize> = adj[u].iter().copied().filter(|&w| !seen[w]).collect();
            if white.len() == 1 {
                newly.push(white[0]);
            }
        }
        if newly.is_empty() {
            return None;
        }
        for w in newly {
            seen[w] = true;
        }
        rounds += 1;
    }
}

fn check(g: &Graph) {
    assert!(
        g.order() <= MAX_ORACLE_ORDER,
        "reference oracle limited to {MAX_ORACLE_ORDER} vertices"
    );
}

fn dominates(adj: &[Vec<usize>], mask: u64) -> bool {
    (0..adj.len()).all(|v| mask >> v & 1 == 1 || adj[v].iter().any(|&u| mask >> u & 1 == 1))
}

/// `γ(G)` by trying every subset.
pub fn domination_number(g: &Graph) -> usize {
    check(g);
    let adj = adjacency(g);
    let n = g.order();
    (0u64..1 << n)
        .filter(|&m| dominates(&adj, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// `γ_P(G)` and `pt_pd(G)` by trying every subset.
pub fn power_domination(g: &Graph) -> (usize, u32) {
    check(g);
    let adj = adjacency(g);
    let n = g.order();
    let mut best = (usize::MAX, u32::MAX);
    for m in 1u64..1 << n {
        if let Some(t) = power_time(&adj, m) {
            best = best.min((m.count_ones() as usize, t));
        }
    }
    best
}

/// `th×pd(G)` as the minimum of `|S| · pt(G; S)` over all nonempty `S`.
pub fn product_throttling(g: &Graph) -> usize {
    throttle(g, |k, t| k * t as usize)
}

/// `th_pd(G)` as the minimum of `|S| + pt(G; S)` over all nonempty `S`.
pub fn sum_throttling(g: &Graph) -> usize {
    throttle(g, |k, t| k + t as usize)
}

fn throttle(g: &Graph, combine: impl Fn(usize, u32) -> usize) -> usize {
    check(g);
    let adj = adjacency(g);
    let n = g.order();
    (1u64..1 << n)
        .filter_map(|m| power_time(&adj, m).map(|t| combine(m.count_ones() as usize, t)))
        .min()
        .unwrap_or(usize::MAX)
}

/// `pt_pd(G, k)` over all `k`-subsets; `None` when no `k`-set power dominates.
pub fn min_time_k(g: &Graph, k: usize) -> Option<u32> {
    check(g);
    let adj = adjacency(g);
    let n = g.order();
    (1u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .filter_map(|m| power_time(&adj, m))
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn hand_values() {
        assert_eq!(domination_number(&path(9).unwrap()), 3);
        assert_eq!(power_domination(&path(7).unwrap()), (1, 3));
        assert_eq!(product_throttling(&cycle(6).unwrap()), 2);
        assert_eq!(sum_throttling(&complete(4).unwrap()), 2);
        assert_eq!(min_time_k(&path(4).unwrap(), 1), Some(2));
    }

    #[test]
    fn whole_set_takes_one_round() {
        let adj = adjacency(&complete(3).unwrap());
        assert_eq!(power_time(&adj, 0b111), Some(1));
    }
}
