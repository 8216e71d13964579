use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::propagation::PropTime;
use crate::vertex_set::VertexSet;

use super::domination::domination_number_with;
use super::search::{search_k, Goal};
use super::{delta_lower_bound, min_time_for_size, SolveOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Minimize `|S| · pt(G; S)`.
    Product,
    /// Minimize `|S| + pt(G; S)`.
    Sum,
}

impl Mode {
    fn combine(self, k: usize, t: u32) -> usize {
        match self {
            Mode::Product => k * t as usize,
            Mode::Sum => k + t as usize,
        }
    }
}

/// What the search established about `pt_pd(G, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "time", rename_all = "kebab-case")]
pub enum KTime {
    Exact(u32),
    /// Every `k`-set needs more than this many rounds (or never finishes).
    Above(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PerK {
    pub k: usize,
    pub pt: KTime,
    /// The combined objective at this cardinality, when exact.
    pub value: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PruneRule {
    /// The incumbent starts as a minimum dominating set.
    DominationSeed,
    /// The incumbent met `⌈n/(Δ+1)⌉`, so nothing can improve it.
    DeltaLowerBound,
    /// Sizes below `γ_P` cannot power dominate.
    BelowPowerDomination,
    /// Sizes above half the incumbent need time one, i.e. a dominating set.
    HalfBudget,
    /// `|S|(pt·Δ + 1) >= n` rules out every time that would improve the incumbent.
    SizeTimeBound,
    /// Sizes with `k + 1 >=` incumbent cannot improve a sum.
    SumBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pruning {
    pub rule: PruneRule,
    /// Inclusive range of cardinalities the rule removed, if any.
    pub ks: Option<(usize, usize)>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThrottlingResult {
    pub mode: Mode,
    pub value: usize,
    pub witness_set: VertexSet,
    pub witness_time: u32,
    pub gamma: usize,
    pub gamma_p: Option<usize>,
    /// Cardinalities explored, ascending.
    pub per_k: Vec<PerK>,
    pub pruning_log: Vec<Pruning>,
}

impl ThrottlingResult {
    fn seed(mode: Mode, gamma: usize, dom: VertexSet) -> Self {
        let value = mode.combine(gamma, 1);
        ThrottlingResult {
            mode,
            value,
            witness_set: dom,
            witness_time: 1,
            gamma,
            gamma_p: None,
            per_k: vec![PerK {
                k: gamma,
                pt: KTime::Exact(1),
                value: Some(value),
            }],
            pruning_log: vec![Pruning {
                rule: PruneRule::DominationSeed,
                ks: None,
                note: format!("incumbent {value} from a minimum dominating set of size {gamma}"),
            }],
        }
    }

    fn log(&mut self, rule: PruneRule, ks: Option<(usize, usize)>, note: String) {
        self.pruning_log.push(Pruning { rule, ks, note });
    }

    fn record(&mut self, k: usize, pt: KTime) {
        let value = match pt {
            KTime::Exact(t) => Some(self.mode.combine(k, t)),
            KTime::Above(_) => None,
        };
        self.per_k.push(PerK { k, pt, value });
        self.per_k.sort_by_key(|e| e.k);
    }
}

/// Exact `γ_P(G)` with the lex-first minimum power dominating set.
pub fn power_domination_number(g: &Graph) -> Result<(usize, VertexSet)> {
    power_domination_number_with(g, &SolveOptions::default())
}

pub fn power_domination_number_with(g: &Graph, opts: &SolveOptions) -> Result<(usize, VertexSet)> {
    g.require_connected()?;
    for k in 1..=g.order() {
        if let Some(found) = search_k(g, k, u32::MAX, Goal::FirstFeasible, opts)? {
            return Ok((k, found.set));
        }
    }
    Ok((0, VertexSet::new()))
}

/// `pt_pd(G, k)`: the least time over all `k`-sets, with the lex-first
/// witness; `Infinite` when no `k`-set power dominates.
pub fn pt_pd_k(g: &Graph, k: usize) -> Result<(PropTime, Option<VertexSet>)> {
    pt_pd_k_with(g, k, &SolveOptions::default())
}

pub fn pt_pd_k_with(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<(PropTime, Option<VertexSet>)> {
    Ok(match search_k(g, k, u32::MAX, Goal::MinTime, opts)? {
        Some(f) => (PropTime::Finite(f.time), Some(f.set)),
        None => (PropTime::Infinite, None),
    })
}

/// `(γ_P(G), pt_pd(G))`: the power domination number and the least time of a
/// minimum power dominating set.
pub fn power_propagation_time_of_graph(g: &Graph) -> Result<(usize, u32)> {
    let (gp, _) = power_domination_number(g)?;
    let (t, _) = pt_pd_k(g, gp)?;
    Ok((
        gp,
        t.finite().expect("a minimum power dominating set exists"),
    ))
}

/// `k · pt_pd(G, k)`, infinite below `γ_P`.
pub fn product_throttling_k(g: &Graph, k: usize) -> Result<PropTime> {
    Ok(pt_pd_k(g, k)?.0.times(k))
}

pub fn product_throttling(g: &Graph) -> Result<ThrottlingResult> {
    product_throttling_with(g, &SolveOptions::default())
}

/// Exact product throttling. The incumbent starts at `γ(G)`; only sizes
/// `γ_P <= k <= ⌊b/2⌋` can beat it, and each size is searched for sets with
/// `k · pt < b`, simulations stopping as soon as that is out of reach.
pub fn product_throttling_with(g: &Graph, opts: &SolveOptions) -> Result<ThrottlingResult> {
    g.require_connected()?;
    let (gamma, dom) = domination_number_with(g, opts)?;
    let mut res = ThrottlingResult::seed(Mode::Product, gamma, dom);
    let lb = delta_lower_bound(g);
    if res.value <= lb {
        res.log(
            PruneRule::DeltaLowerBound,
            None,
            format!("γ = ⌈n/(Δ+1)⌉ = {lb}"),
        );
        return Ok(res);
    }
    let (gp, _) = power_domination_number_with(g, opts)?;
    res.gamma_p = Some(gp);
    if gp > 1 {
        res.log(
            PruneRule::BelowPowerDomination,
            Some((1, gp - 1)),
            format!("no set smaller than γ_P = {gp} power dominates"),
        );
    }
    let mut k = gp;
    while k <= res.value / 2 {
        let limit = ((res.value - 1) / k) as u32;
        let floor = min_time_for_size(g, k);
        if floor > limit {
            res.log(
                PruneRule::SizeTimeBound,
                Some((k, k)),
                format!("k = {k} needs pt >= {floor}, improving needs pt <= {limit}"),
            );
            k += 1;
            continue;
        }
        match search_k(g, k, limit, Goal::MinTime, opts)? {
            Some(f) => {
                res.record(k, KTime::Exact(f.time));
                res.value = k * f.time as usize;
                res.witness_set = f.set;
                res.witness_time = f.time;
            }
            None => res.record(k, KTime::Above(limit)),
        }
        if res.value <= lb {
            res.log(
                PruneRule::DeltaLowerBound,
                None,
                format!("incumbent reached ⌈n/(Δ+1)⌉ = {lb}"),
            );
            return Ok(res);
        }
        k += 1;
    }
    let half = res.value / 2;
    if half + 1 < gamma {
        res.log(
            PruneRule::HalfBudget,
            Some((half.max(gp - 1) + 1, gamma - 1)),
            format!("sizes above ⌊{}/2⌋ would need a dominating set", res.value),
        );
    }
    Ok(res)
}

pub fn sum_throttling(g: &Graph) -> Result<ThrottlingResult> {
    sum_throttling_with(g, &SolveOptions::default())
}

/// Exact sum throttling `min |S| + pt(G; S)`, seeded with `γ(G) + 1`.
pub fn sum_throttling_with(g: &Graph, opts: &SolveOptions) -> Result<ThrottlingResult> {
    g.require_connected()?;
    let (gamma, dom) = domination_number_with(g, opts)?;
    let mut res = ThrottlingResult::seed(Mode::Sum, gamma, dom);
    let mut k = 1;
    while k + 1 < res.value {
        let limit = (res.value - 1 - k) as u32;
        let floor = min_time_for_size(g, k);
        if floor > limit {
            res.log(
                PruneRule::SizeTimeBound,
                Some((k, k)),
                format!("k = {k} needs pt >= {floor}, improving needs pt <= {limit}"),
            );
            k += 1;
            continue;
        }
        match search_k(g, k, limit, Goal::MinTime, opts)? {
            Some(f) => {
                res.record(k, KTime::Exact(f.time));
                res.value = k + f.time as usize;
                res.witness_set = f.set;
                res.witness_time = f.time;
            }
            None => res.record(k, KTime::Above(limit)),
        }
        k += 1;
    }
    if k < gamma {
        res.log(
            PruneRule::SumBudget,
            Some((k, gamma - 1)),
            format!("k + 1 >= {} for every remaining size", res.value),
        );
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, spider};
    use crate::reference;

    #[test]
    fn spider_example() {
        let g = spider(&[7, 2, 2, 2, 2, 2]).unwrap();
        let r = product_throttling(&g).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.witness_set.to_vec(), vec![0, 15]);
        assert_eq!(r.witness_time, 2);
        assert_eq!(r.gamma, 8);
        assert_eq!(r.gamma_p, Some(1));
        assert_eq!(pt_pd_k(&g, 1).unwrap().0, PropTime::Finite(7));
        assert_eq!(product_throttling_k(&g, 1).unwrap(), PropTime::Finite(7));
    }

    #[test]
    fn small_families_match_reference() {
        for n in 1..=9 {
            let p = path(n).unwrap();
            assert_eq!(
                product_throttling(&p).unwrap().value,
                reference::product_throttling(&p)
            );
            assert_eq!(
                sum_throttling(&p).unwrap().value,
                reference::sum_throttling(&p)
            );
        }
        for n in 3..=9 {
            let c = cycle(n).unwrap();
            assert_eq!(product_throttling(&c).unwrap().value, n.div_ceil(3));
        }
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=6 {
            let k = complete(n).unwrap();
            assert_eq!(product_throttling(&k).unwrap().value, 1);
            assert_eq!(sum_throttling(&k).unwrap().value, 2);
        }
    }

    #[test]
    fn value_matches_witness() {
        let g = spider(&[4, 1, 1]).unwrap();
        for r in [product_throttling(&g).unwrap(), sum_throttling(&g).unwrap()] {
            let t = crate::propagation::power_propagation_time(&g, &r.witness_set).unwrap();
            assert_eq!(t, PropTime::Finite(r.witness_time));
            assert_eq!(r.mode.combine(r.witness_set.len(), r.witness_time), r.value);
            for e in &r.per_k {
                if let Some(v) = e.value {
                    assert!(r.value <= v);
                }
            }
        }
    }

    #[test]
    fn serial_and_parallel_agree() {
        let g = spider(&[7, 2, 2, 2, 2, 2]).unwrap();
        let a = product_throttling_with(&g, &SolveOptions::serial()).unwrap();
        let b = product_throttling_with(&g, &SolveOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            product_throttling(&g).unwrap_err(),
            crate::Error::Disconnected
        );
        assert_eq!(
            power_domination_number(&g).unwrap_err(),
            crate::Error::Disconnected
        );
    }

    #[test]
    fn pt_below_gamma_p_is_infinite() {
        let g = crate::generators::corona(&cycle(4).unwrap()).unwrap();
        assert_eq!(pt_pd_k(&g, 1).unwrap(), (PropTime::Infinite, None));
        assert_eq!(product_throttling_k(&g, 1).unwrap(), PropTime::Infinite);
    }
}
