//! Structural checks: sufficient conditions for throttling to equal the
//! domination number, the throttling-one/two characterization, and
//! recognition of graphs whose throttling number is half their order.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::throttling::{power_propagation_time_of_graph, product_throttling_with};
use super::{delta_lower_bound, SolveOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub hypothesis: &'static str,
    pub fires: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub order: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub gamma: usize,
    pub gamma_p: usize,
    pub pt_pd: u32,
    pub thpdx: usize,
    pub conditions: Vec<ConditionCheck>,
    pub any_fires: bool,
    /// A firing condition was followed by `th×pd = γ` (vacuous when none fires).
    pub consistent: bool,
}

/// Evaluates each known sufficient condition for `th×pd(G) = γ(G)` and checks
/// the conclusion whenever one fires.
pub fn equality_conditions(g: &Graph) -> Result<EqualityReport> {
    let opts = SolveOptions::default();
    let thr = product_throttling_with(g, &opts)?;
    let (gp, pt) = power_propagation_time_of_graph(g)?;
    let n = g.order();
    let (gamma, dmax, dmin) = (thr.gamma, g.max_degree(), g.min_degree());
    let conditions = vec![
        ConditionCheck {
            name: "gamma-meets-degree-bound",
            hypothesis: "γ = ⌈n/(Δ+1)⌉",
            fires: gamma == delta_lower_bound(g),
        },
        ConditionCheck {
            name: "gammap-equals-gamma",
            hypothesis: "γ_P = γ (equivalently pt_pd = 1)",
            fires: gp == gamma,
        },
        ConditionCheck {
            name: "gammap-half-gamma",
            hypothesis: "γ_P ≥ γ/2",
            fires: 2 * gp >= gamma,
        },
        ConditionCheck {
            name: "gammap-quarter-order",
            hypothesis: "n ≥ 2 and γ_P ≥ n/4",
            fires: n >= 2 && 4 * gp >= n,
        },
        ConditionCheck {
            name: "mindeg2-gammap-fifth-order",
            hypothesis: "δ ≥ 2 and γ_P ≥ n/5",
            fires: dmin >= 2 && 5 * gp >= n,
        },
        ConditionCheck {
            name: "mindeg3-gammap-3n-16",
            hypothesis: "δ ≥ 3 and γ_P ≥ 3n/16",
            fires: dmin >= 3 && 16 * gp >= 3 * n,
        },
    ];
    let any_fires = conditions.iter().any(|c| c.fires);
    Ok(EqualityReport {
        order: n,
        max_degree: dmax,
        min_degree: dmin,
        gamma,
        gamma_p: gp,
        pt_pd: pt,
        thpdx: thr.value,
        consistent: !any_fires || thr.value == gamma,
        conditions,
        any_fires,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowReport {
    pub gamma: usize,
    pub gamma_p: usize,
    pub pt_pd: u32,
    pub thpdx: usize,
    /// `γ = 2`
    pub cond_a: bool,
    /// `γ_P = 1` and `pt_pd = 2`
    pub cond_b: bool,
    /// `th×pd = 1` iff `γ = 1`, and `th×pd = 2` iff (a) or (b).
    pub consistent: bool,
}

pub fn characterize_low(g: &Graph) -> Result<LowReport> {
    let thr = product_throttling_with(g, &SolveOptions::default())?;
    let (gp, pt) = power_propagation_time_of_graph(g)?;
    let cond_a = thr.gamma == 2;
    let cond_b = gp == 1 && pt == 2;
    let consistent = (thr.value == 1) == (thr.gamma == 1) && (thr.value == 2) == (cond_a || cond_b);
    Ok(LowReport {
        gamma: thr.gamma,
        gamma_p: gp,
        pt_pd: pt,
        thpdx: thr.value,
        cond_a,
        cond_b,
        consistent,
    })
}

/// If `g = H ∘ K_1`, returns `H` and, for each vertex of `H`, its index in `g`.
/// `K_2` is read as `K_1 ∘ K_1`.
pub fn corona_base(g: &Graph) -> Option<(Graph, Vec<usize>)> {
    let n = g.order();
    if n == 2 && g.size() == 1 {
        return Some((Graph::empty(1).expect("one vertex"), vec![0]));
    }
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let leaves = g.leaves();
    if leaves.len() != n / 2 {
        return None;
    }
    let inner = g.vertices() - leaves;
    for v in inner.iter() {
        if g.neighbors(v).intersection_len(&leaves) != 1 {
            return None;
        }
    }
    if leaves.iter().any(|l| !g.neighbors(l).is_subset(&inner)) {
        return None;
    }
    let (h, map) = g.induced_subgraph(&inner);
    h.is_connected().then_some((h, map))
}

fn is_c4(g: &Graph) -> bool {
    g.order() == 4 && g.is_connected() && (0..4).all(|v| g.degree(v) == 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum HalfOrderClass {
    /// `K_2 = K_1 ∘ K_1`
    SingleEdge,
    /// `(H ∘ K_1) ∘ K_1`; `base` lists the vertices of `H` in `g`.
    DoubleCorona {
        base: VertexSet,
    },
    CoronaOfC4,
    C4,
    NotRecognized,
}

impl HalfOrderClass {
    pub fn recognized(&self) -> bool {
        !matches!(self, HalfOrderClass::NotRecognized)
    }
}

/// Structural recognition of the graphs with `th×pd = n/2`.
pub fn classify_half_order(g: &Graph) -> HalfOrderClass {
    if !g.is_connected() || g.order() < 2 {
        return HalfOrderClass::NotRecognized;
    }
    if g.order() == 2 {
        return HalfOrderClass::SingleEdge;
    }
    if is_c4(g) {
        return HalfOrderClass::C4;
    }
    let Some((h1, map1)) = corona_base(g) else {
        return HalfOrderClass::NotRecognized;
    };
    if is_c4(&h1) {
        return HalfOrderClass::CoronaOfC4;
    }
    match corona_base(&h1) {
        Some((_, map2)) => HalfOrderClass::DoubleCorona {
            base: map2.into_iter().map(|i| map1[i]).collect(),
        },
        None => HalfOrderClass::NotRecognized,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfOrderReport {
    pub class: HalfOrderClass,
    pub order: usize,
    pub thpdx: usize,
    /// Recognition agrees with whether `2 · th×pd = n`.
    pub consistent: bool,
}

pub fn recognize_half_order(g: &Graph) -> Result<HalfOrderReport> {
    let class = classify_half_order(g);
    let thpdx = product_throttling_with(g, &SolveOptions::default())?.value;
    Ok(HalfOrderReport {
        consistent: class.recognized() == (2 * thpdx == g.order()),
        class,
        order: g.order(),
        thpdx,
    })
}
