//! Exhaustive search over `k`-subsets in lexicographic order, split into
//! contiguous rank ranges that run on the rayon pool.
//!
//! The shared incumbent is a packed `(time, rank)` key kept with `fetch_min`.
//! A set is always simulated with the incumbent's time as an inclusive limit,
//! so every set tying the optimum is evaluated to completion, and the final
//! key is the minimum `(time, rank)` regardless of scheduling. Parallel and
//! serial runs therefore return the same witness.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::propagation::{time_within, Bounded};
use crate::vertex_set::VertexSet;

use super::{Budget, SolveOptions};

const RANK_BITS: u32 = 40;
const RANK_MASK: u64 = (1 << RANK_BITS) - 1;
const CHUNK: u64 = 1 << 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Smallest propagation time, lex-first among ties.
    MinTime,
    /// Lex-first power dominating set, whatever its time.
    FirstFeasible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Found {
    pub time: u32,
    pub set: VertexSet,
}

/// `C(n, k)`, or `None` on overflow.
pub(crate) fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// The `rank`-th `k`-subset of `0..n` in lexicographic order.
pub(crate) fn unrank(mut rank: u64, n: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0;
    for i in 0..k {
        loop {
            let rest = binomial(n - x - 1, k - i - 1).unwrap_or(u64::MAX);
            if rank < rest {
                out.push(x);
                x += 1;
                break;
            }
            rank -= rest;
            x += 1;
        }
    }
    out
}

fn advance(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// Searches all `k`-subsets for power dominating sets with time `<= limit`.
pub(crate) fn search_k(
    g: &Graph,
    k: usize,
    limit: u32,
    goal: Goal,
    opts: &SolveOptions,
) -> Result<Option<Found>> {
    let n = g.order();
    if k == 0 || k > n || limit == 0 {
        return Ok(None);
    }
    let total = binomial(n, k).filter(|&t| t <= RANK_MASK).ok_or_else(|| {
        Error::InvalidParameter(format!("C({n}, {k}) subsets is too many to enumerate"))
    })?;
    let best = AtomicU64::new(u64::MAX);
    let aborted = AtomicBool::new(false);
    let chunks = total.div_ceil(CHUNK);

    let run = |chunk: u64| {
        if aborted.load(Ordering::Relaxed) {
            return;
        }
        let lo = chunk * CHUNK;
        let hi = (lo + CHUNK).min(total);
        let mut budget = Budget::new(opts);
        let mut comb = unrank(lo, n, k);
        for rank in lo..hi {
            if budget.tick() {
                aborted.store(true, Ordering::Relaxed);
                return;
            }
            let cur = best.load(Ordering::Relaxed);
            let cur_time = (cur >> RANK_BITS) as u32;
            if cur_time <= 1 && cur & RANK_MASK < rank {
                // nothing later in lex order can beat a time-one incumbent
                return;
            }
            let set: VertexSet = comb.iter().copied().collect();
            if let Bounded::Done(t) = time_within(g, &set, limit.min(cur_time)) {
                let t = if goal == Goal::FirstFeasible { 1 } else { t };
                best.fetch_min((t as u64) << RANK_BITS | rank, Ordering::Relaxed);
            }
            advance(&mut comb, n);
        }
    };
    if opts.parallel {
        (0..chunks).into_par_iter().for_each(run);
    } else {
        (0..chunks).for_each(run);
    }
    if aborted.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded);
    }
    let key = best.into_inner();
    if key == u64::MAX {
        return Ok(None);
    }
    let set: VertexSet = unrank(key & RANK_MASK, n, k).into_iter().collect();
    let time = match time_within(g, &set, u32::MAX) {
        Bounded::Done(t) => t,
        _ => unreachable!("recorded sets power dominate"),
    };
    Ok(Some(Found { time, set }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_round_trip() {
        let (n, k) = (7, 3);
        let mut c = unrank(0, n, k);
        assert_eq!(c, vec![0, 1, 2]);
        for r in 1..binomial(n, k).unwrap() {
            assert!(advance(&mut c, n));
            assert_eq!(unrank(r, n, k), c);
        }
        assert!(!advance(&mut c, n));
        assert_eq!(c, vec![4, 5, 6]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(40, 11), Some(2_311_801_440));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(512, 256), None);
    }
}
