//! Exact solvers for `γ`, `γ_P`, `pt_pd(G, k)`, product and sum throttling,
//! plus the structural checks built on them.

mod conditions;
mod domination;
mod search;
mod throttling;

use std::time::{Duration, Instant};

pub use conditions::{
    characterize_low, classify_half_order, corona_base, equality_conditions, recognize_half_order,
    ConditionCheck, EqualityReport, HalfOrderClass, HalfOrderReport, LowReport,
};
pub use domination::{domination_number, domination_number_with};
pub use throttling::{
    power_domination_number, power_domination_number_with, power_propagation_time_of_graph,
    product_throttling, product_throttling_k, product_throttling_with, pt_pd_k, pt_pd_k_with,
    sum_throttling, sum_throttling_with, KTime, Mode, PerK, PruneRule, Pruning, ThrottlingResult,
};

use crate::graph::Graph;

/// Search controls shared by every solver.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Give up with [`crate::Error::BudgetExceeded`] after this instant.
    pub deadline: Option<Instant>,
    /// Evaluate subsets on the rayon pool. Results do not depend on this.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            deadline: None,
            parallel: true,
        }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: Duration) -> Self {
        SolveOptions {
            deadline: Some(Instant::now() + budget),
            ..Self::default()
        }
    }

    pub fn serial() -> Self {
        SolveOptions {
            parallel: false,
            ..Self::default()
        }
    }
}

/// Cheap periodic deadline check.
pub(crate) struct Budget {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Budget {
    pub(crate) fn new(opts: &SolveOptions) -> Self {
        Budget {
            deadline: opts.deadline,
            ticks: 0,
        }
    }

    /// True once the deadline has passed (checked every 1024 calls).
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.ticks = self.ticks.wrapping_add(1);
        match self.deadline {
            Some(d) if self.ticks.is_multiple_of(1024) => Instant::now() > d,
            _ => false,
        }
    }
}

/// `⌈n / (Δ + 1)⌉`, a lower bound on both `γ` and product throttling.
pub fn delta_lower_bound(g: &Graph) -> usize {
    let n = g.order();
    n.div_ceil(g.max_degree() + 1)
}

/// Smallest propagation time any `k`-set could have: `|S|(pt·Δ + 1) >= n`
/// forces `pt >= (n - k) / (kΔ)`, and every time is at least one.
pub fn min_time_for_size(g: &Graph, k: usize) -> u32 {
    let n = g.order();
    let d = g.max_degree();
    if k == 0 || d == 0 || k >= n {
        return 1;
    }
    ((n - k).div_ceil(k * d) as u32).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cartesian_product, complete, path};

    #[test]
    fn delta_bounds() {
        assert_eq!(delta_lower_bound(&path(9).unwrap()), 3);
        assert_eq!(delta_lower_bound(&complete(7).unwrap()), 1);
        let grid = cartesian_product(&path(4).unwrap(), &path(5).unwrap()).unwrap();
        assert_eq!(delta_lower_bound(&grid), 4);
    }

    #[test]
    fn size_time_bound() {
        // P_9 from one vertex needs at least 4 rounds: 9 <= 1·(2t + 1)
        assert_eq!(min_time_for_size(&path(9).unwrap(), 1), 4);
        assert_eq!(min_time_for_size(&complete(5).unwrap(), 1), 1);
    }
}
