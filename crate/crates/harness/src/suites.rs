//! The registered verification suites.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Duration;

use pdthrottle::enumerate::connected_graphs;
use pdthrottle::generators::{
    cartesian_product, complete, corona, cycle, example_h, example_w, family_a,
    fig7_interval_graph, g_d_construction, half_order_construction, path, spider, GridLayout,
};
use pdthrottle::interval::random_unit_representation;
use pdthrottle::propagation::{is_power_dominating, propagate_with, reassign_forces_grid};
use pdthrottle::solvers::{
    characterize_low, classify_half_order, domination_number_with, equality_conditions,
    power_domination_number_with, power_propagation_time_of_graph, product_throttling_with,
    pt_pd_k_with, recognize_half_order, sum_throttling_with, HalfOrderClass,
};
use pdthrottle::{
    power_propagation_time, propagate, q_sets, reference, ForceRule, Graph, PropTime, SolveOptions,
    VertexSet,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{CaseSpec, Check, VerificationReport};
use crate::HarnessError;

pub const SUITES: [&str; 12] = [
    "paths-cycles",
    "spiders",
    "coronas",
    "half-order",
    "low-thpdx",
    "unit-interval",
    "cartesian-bounds",
    "grids-table",
    "kn-km",
    "family-a",
    "g-d",
    "conditions",
];

/// Range and randomness knobs; `None` picks the suite default.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub max_n: Option<usize>,
    pub count: Option<usize>,
    pub seed: u64,
}

mod cite {
    pub const PATHS_CYCLES: &str = "th×pd(P_n) = th×pd(C_n) = ⌈n/3⌉";
    pub const SUM_PATHS: &str = "th_pd(P_n) = ⌈√(2n) − 1/2⌉";
    pub const SPIDER: &str =
        "S(7,2,2,2,2,2): th×pd = 4 via the set {0,15}, γ = 8, γ_P = 1, pt_pd = 7, th×pd(G,1) = 7";
    pub const SPIDER_411: &str =
        "th×pd(S(4,1,1)) = γ(S(4,1,1)) = 2 but the only high-degree vertex has propagation time 4";
    pub const CORONA: &str = "H connected of order at least two: th×pd(H∘K_1) = 2γ(H)";
    pub const CORONA_SUBSETS: &str =
        "any power dominating set of H∘K_1 that is a subset of V(H) dominates H";
    pub const HALF: &str = "th×pd((H∘K_1)∘K_1) = 2|V(H)| = n/2";
    pub const HALF_CHAR: &str = "th×pd(G) = n/2 iff G = (H∘K_1)∘K_1, G = C_4∘K_1 or G = C_4";
    pub const C4: &str = "th×pd(C_4) = 2 = γ(C_4)";
    pub const LOW: &str =
        "th×pd(G) = 1 iff γ(G) = 1; th×pd(G) = 2 iff γ(G) = 2, or γ_P(G) = 1 and pt_pd(G) = 2";
    pub const COMPLETE: &str = "th×pd(K_n) = 1 and th_pd(K_n) = 2";
    pub const UNIT: &str = "a connected unit interval graph has th×pd = γ";
    pub const UNIT_LEMMAS: &str = "for a power dominating set S of a unit interval graph: |P^(k)(S)| ≤ 2|S| for k ≥ 2, \
        round-k vertices have round-(k−1) neighbors, forcing chains are monotone, T(S) dominates S ∪ P^(1) ∪ P^(2), \
        and Ŝ dominates with |Ŝ| ≤ |S|·pt when pt ≥ 2";
    pub const INTERVAL_EXAMPLE: &str =
        "γ(G) = 3 and th×pd(G) = th×pd(G;{3}) = 2; G[{2,3,4,6}] is a K_{1,3}, so G is not unit interval";
    pub const CART_UPPER: &str = "th×pd(G□H) ≤ th×pd(G)|V(H)| and th×pd(G□H) ≤ th×pd(H)|V(G)|";
    pub const CART_LOWER: &str = "th×pd(G□H) ≥ th×pd(G) and th×pd(G□H) ≥ th×pd(H)";
    pub const CART_DEGREE: &str = "th×pd(G□H) ≥ ⌈|V(G)||V(H)| / (Δ(G) + Δ(H) + 1)⌉";
    pub const PROJECTION: &str =
        "S_G is a power dominating set of G and pt_pd(G;S_G) ≤ pt_pd(G□H;S)";
    pub const SPIDER_P2: &str =
        "S(7,2,2,2,2,2)□P_2: th×pd = 8, γ = 10, γ_P = 2, pt_pd(·,2) = 7, pt_pd(·,3) = 4";
    pub const W_P2: &str = "W□P_2: th×pd = 10, γ = 11, γ_P = 3, pt_pd(·,3) = 7, pt_pd(·,4) = 3";
    pub const W_P2_SET: &str = "pt_pd(W□P_2, {u_1,u_5,u'_1,u'_3,u'_7}) = 2";
    pub const W: &str = "W: γ_P = 3, pt_pd = 2, γ = 8, th×pd = 6";
    pub const TABLE: &str = "table of values: th×pd and γ of small grids and cylinders";
    pub const GRID_PD: &str =
        "γ_P(P_n□P_m) = ⌈n/4⌉ if n ≢ 4 mod 8, ⌈(n+1)/4⌉ if n ≡ 4 mod 8 (m ≥ n ≥ 1)";
    pub const GRID_EQ: &str = "th×pd(J_n□J_m) = γ(J_n□J_m) for J_k ∈ {P_k, C_k}";
    pub const QSETS: &str = "n, m ≥ 4: there is a set of forces with |Q_x| ≤ 3 for each x ∈ S";
    pub const KNKM_GP: &str = "γ_P(K_n□K_m) = n − 1 for 2 ≤ n ≤ m";
    pub const KNKM_TH: &str = "th×pd(K_n□K_m) = γ(K_n□K_m) = n for 1 ≤ n ≤ m";
    pub const H_KM: &str = "th×pd(H□K_m) = n for H = P_n or C_n and m ≥ 2n − 1";
    pub const FAMILY_A: &str =
        "each graph in the exceptional family has one vertex that is a minimum power dominating set; all but C_4 have order 7";
    pub const FAMILY_A_DOM: &str = "δ ≥ 2 and not in the exceptional family implies γ ≤ 2n/5";
    pub const GD: &str = "G_d is d-regular of order d(d+1) with γ = d, and th×pd = d = γ";
    pub const EXAMPLE_H: &str = "Δ(H) = 4 and {x,y,z} is the unique minimum dominating set";
    pub const PT_ONE: &str = "γ_P(G) = γ(G) iff pt_pd(G) = 1";
    pub const SUFFICIENT: &str = "γ = ⌈n/(Δ+1)⌉, γ_P ≥ γ/2, γ_P ≥ n/4, δ ≥ 2 with γ_P ≥ n/5, \
        and δ ≥ 3 with γ_P ≥ 3n/16 each imply th×pd = γ";
}

fn connected_cached(n: usize) -> pdthrottle::Result<Arc<Vec<Graph>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("poisoned").get(&n) {
        return Ok(v.clone());
    }
    let v = Arc::new(connected_graphs(n)?);
    cache.lock().expect("poisoned").insert(n, v.clone());
    Ok(v)
}

fn edges_label(g: &Graph) -> String {
    let e: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.order(), e.join(" "))
}

/// Runs `bad` over all connected graphs on `n` vertices and collects labels of counterexamples.
fn exhaustive(
    n: usize,
    bad: impl Fn(&Graph) -> pdthrottle::Result<bool> + Sync,
) -> pdthrottle::Result<Check> {
    let graphs = connected_cached(n)?;
    let flags: pdthrottle::Result<Vec<bool>> = graphs.par_iter().map(&bad).collect();
    let found: Vec<String> = graphs
        .iter()
        .zip(flags?)
        .filter(|(_, b)| *b)
        .map(|(g, _)| edges_label(g))
        .collect();
    Ok(Check::none_of(graphs.len(), &found))
}

/// Smallest `m` with `m >= √(2n) − 1/2`, in integers: `(2m + 1)² >= 8n`.
pub fn sum_path_formula(n: usize) -> usize {
    let mut m = 0;
    while (2 * m + 1) * (2 * m + 1) < 8 * n {
        m += 1;
    }
    m
}

/// `γ_P(P_n □ P_m)` for `1 <= n <= m` from the closed form.
pub fn grid_pd_formula(n: usize) -> usize {
    if n % 8 == 4 {
        (n + 1).div_ceil(4)
    } else {
        n.div_ceil(4)
    }
}

fn pt_pd(g: &Graph, opts: &SolveOptions) -> pdthrottle::Result<(usize, u32)> {
    let (gp, _) = power_domination_number_with(g, opts)?;
    let (t, _) = pt_pd_k_with(g, gp, opts)?;
    Ok((gp, t.finite().expect("γ_P-sets power dominate")))
}

fn time_str(t: PropTime) -> String {
    t.to_string()
}

/// Cases, reported parameters and notes for one suite.
pub type Built = (Vec<CaseSpec>, Vec<(String, String)>, Vec<String>);

pub fn build(suite: &str, p: &SuiteParams) -> Result<Built, HarnessError> {
    let mut params = Vec::new();
    let mut notes = Vec::new();
    let cases = match suite {
        "paths-cycles" => {
            let n_max = p.max_n.unwrap_or(20);
            params.push(("max_n".into(), n_max.to_string()));
            notes.push(
                "At n = 1 the closed form for th_pd(P_n) gives 1, while a single vertex needs one chosen vertex \
                 and one round, so th_pd(P_1) = th_pd(K_1) = 2; that row is reported as a mismatch."
                    .into(),
            );
            paths_cycles(n_max)?
        }
        "spiders" => spiders()?,
        "coronas" => {
            let n_max = p.max_n.unwrap_or(7);
            params.push(("max_base_order".into(), n_max.to_string()));
            coronas(n_max)?
        }
        "half-order" => {
            let n_max = p.max_n.unwrap_or(8);
            params.push(("max_n".into(), n_max.to_string()));
            notes.push(
                "K_2 = K_1∘K_1 also has th×pd = n/2 = 1; it is recognized as its own class.".into(),
            );
            half_order(n_max)?
        }
        "low-thpdx" => {
            let n_max = p.max_n.unwrap_or(8);
            params.push(("max_n".into(), n_max.to_string()));
            low_thpdx(n_max)?
        }
        "unit-interval" => {
            let count = p.count.unwrap_or(200);
            let n_max = p.max_n.unwrap_or(14);
            params.push(("count".into(), count.to_string()));
            params.push(("max_n".into(), n_max.to_string()));
            params.push(("seed".into(), p.seed.to_string()));
            unit_interval(count, n_max, p.seed)?
        }
        "cartesian-bounds" => {
            let count = p.count.unwrap_or(100);
            params.push(("projection_sets".into(), count.to_string()));
            params.push(("seed".into(), p.seed.to_string()));
            cartesian_bounds(count, p.seed)?
        }
        "grids-table" => {
            let n_max = p.max_n.unwrap_or(6);
            let count = p.count.unwrap_or(20);
            params.push(("max_side".into(), n_max.to_string()));
            params.push(("traces_per_grid".into(), count.to_string()));
            params.push(("seed".into(), p.seed.to_string()));
            grids_table(n_max, count, p.seed)?
        }
        "kn-km" => {
            let n_max = p.max_n.unwrap_or(5);
            params.push(("max_m".into(), n_max.to_string()));
            kn_km(n_max)?
        }
        "family-a" => family_a_suite()?,
        "g-d" => {
            let n_max = p.max_n.unwrap_or(6);
            params.push(("max_d".into(), n_max.to_string()));
            g_d(n_max)?
        }
        "conditions" => {
            let n_max = p.max_n.unwrap_or(8);
            params.push(("max_n".into(), n_max.to_string()));
            conditions(n_max)?
        }
        other => {
            return Err(HarnessError::Usage(format!(
                "unknown suite `{other}`; valid suites: {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok((cases, params, notes))
}

/// Builds and runs one suite on the current rayon pool.
pub fn verify(
    suite: &str,
    p: &SuiteParams,
    budget: Duration,
) -> Result<VerificationReport, HarnessError> {
    let (cases, params, notes) = build(suite, p)?;
    Ok(VerificationReport::run(suite, params, cases, notes, budget))
}

fn paths_cycles(n_max: usize) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let g = path(n)?;
        let h = g.clone();
        out.push(CaseSpec::published(
            format!("P_{n}"),
            "th×pd = ⌈n/3⌉",
            cite::PATHS_CYCLES,
            move |o| {
                Ok(Check::eq(
                    n.div_ceil(3),
                    product_throttling_with(&g, o)?.value,
                ))
            },
        ));
        out.push(CaseSpec::published(
            format!("P_{n}"),
            "th_pd = ⌈√(2n) − 1/2⌉",
            cite::SUM_PATHS,
            move |o| {
                Ok(Check::eq(
                    sum_path_formula(n),
                    sum_throttling_with(&h, o)?.value,
                ))
            },
        ));
        if n <= 14 {
            let g = path(n)?;
            out.push(CaseSpec::derived(
                format!("P_{n}"),
                "th_pd equals brute force",
                move |o| {
                    Ok(Check::eq(
                        reference::sum_throttling(&g),
                        sum_throttling_with(&g, o)?.value,
                    ))
                },
            ));
        }
    }
    for n in 3..=n_max.max(3) {
        let g = cycle(n)?;
        out.push(CaseSpec::published(
            format!("C_{n}"),
            "th×pd = ⌈n/3⌉",
            cite::PATHS_CYCLES,
            move |o| {
                Ok(Check::eq(
                    n.div_ceil(3),
                    product_throttling_with(&g, o)?.value,
                ))
            },
        ));
    }
    Ok(out)
}

/// Leg multisets (non-increasing) with at least three legs and total length at most `total`.
fn leg_partitions(total: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 3 {
            out.push(cur.clone());
        }
        for l in (1..=max.min(remaining)).rev() {
            cur.push(l);
            rec(remaining - l, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

fn spider_name(legs: &[usize]) -> String {
    let l: Vec<String> = legs.iter().map(usize::to_string).collect();
    format!("S({})", l.join(","))
}

fn spiders() -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    let g = spider(&[7, 2, 2, 2, 2, 2])?;
    let g2 = g.clone();
    out.push(CaseSpec::published(
        "S(7,2,2,2,2,2)",
        "th×pd, γ, γ_P, pt_pd and th×pd(G,1)",
        cite::SPIDER,
        move |o| {
            let thr = product_throttling_with(&g, o)?;
            let (gp, pt) = pt_pd(&g, o)?;
            let (t1, _) = pt_pd_k_with(&g, 1, o)?;
            Ok(Check::all(&[
                ("thpdx", "4".into(), thr.value.to_string()),
                ("gamma", "8".into(), thr.gamma.to_string()),
                ("gammap", "1".into(), gp.to_string()),
                ("pt_pd", "7".into(), pt.to_string()),
                ("thpdx_1", "7".into(), time_str(t1.times(1))),
            ]))
        },
    ));
    out.push(CaseSpec::published(
        "S(7,2,2,2,2,2)",
        "the set {0,15} has size 2 and propagation time 2",
        cite::SPIDER,
        move |_| {
            let s: VertexSet = [0, 15].into_iter().collect();
            Ok(Check::eq(
                "2".to_string(),
                time_str(power_propagation_time(&g2, &s)?),
            ))
        },
    ));
    let g = spider(&[4, 1, 1])?;
    out.push(CaseSpec::published(
        "S(4,1,1)",
        "th×pd = γ = 2, pt(center) = 4",
        cite::SPIDER_411,
        move |o| {
            let thr = product_throttling_with(&g, o)?;
            let pt = power_propagation_time(&g, &VertexSet::singleton(0))?;
            Ok(Check::all(&[
                ("thpdx", "2".into(), thr.value.to_string()),
                ("gamma", "2".into(), thr.gamma.to_string()),
                ("pt_center", "4".into(), time_str(pt)),
            ]))
        },
    ));
    for legs in leg_partitions(9) {
        let g = spider(&legs)?;
        out.push(CaseSpec::derived(
            spider_name(&legs),
            "th×pd equals brute force",
            move |o| {
                Ok(Check::eq(
                    reference::product_throttling(&g),
                    product_throttling_with(&g, o)?.value,
                ))
            },
        ));
    }
    Ok(out)
}

/// Named bases for corona checks beyond the exhaustive small orders.
fn corona_catalog(n_max: usize) -> pdthrottle::Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 2..=n_max.min(5) {
        for (i, h) in connected_cached(n)?.iter().enumerate() {
            out.push((format!("H{n}.{i}"), h.clone()));
        }
    }
    for n in 6..=n_max {
        out.push((format!("P_{n}"), path(n)?));
        out.push((format!("C_{n}"), cycle(n)?));
        out.push((format!("K_{n}"), complete(n)?));
        out.push((
            format!("K_1,{}", n - 1),
            pdthrottle::generators::star(n - 1)?,
        ));
    }
    if n_max >= 7 {
        for legs in [
            vec![2, 2, 2],
            vec![3, 2, 1],
            vec![2, 2, 1, 1],
            vec![1, 1, 1, 1, 1, 1],
        ] {
            out.push((spider_name(&legs), spider(&legs)?));
        }
        let c6 = cycle(6)?;
        let mut edges = c6.edges();
        edges.push((0, 6));
        edges.push((3, 6));
        out.push(("C_6+chord-vertex".into(), Graph::new(7, &edges)?));
    }
    Ok(out)
}

fn coronas(n_max: usize) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    for (name, h) in corona_catalog(n_max)? {
        let g = corona(&h)?;
        let base = h.clone();
        out.push(CaseSpec::published(
            format!("{name}∘K_1"),
            "th×pd = 2γ(H)",
            cite::CORONA,
            move |o| {
                let gamma_h = reference::domination_number(&base);
                Ok(Check::eq(
                    2 * gamma_h,
                    product_throttling_with(&g, o)?.value,
                ))
            },
        ));
        if h.order() <= 6 {
            let g = corona(&h)?;
            out.push(CaseSpec::published(
                format!("{name}∘K_1"),
                "power dominating subsets of V(H) dominate H",
                cite::CORONA_SUBSETS,
                move |_| {
                    let n = h.order();
                    let mut bad = Vec::new();
                    for mask in 1u64..(1 << n) {
                        let s: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                        if is_power_dominating(&g, &s) && !h.dominates(&s) {
                            bad.push(format!("{s}"));
                        }
                    }
                    Ok(Check::none_of((1usize << n) - 1, &bad))
                },
            ));
        }
    }
    Ok(out)
}

fn half_order(n_max: usize) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for (i, h) in connected_cached(n)?.iter().enumerate() {
            let g = half_order_construction(h)?;
            let order = g.order();
            out.push(CaseSpec::published(
                format!("(H{n}.{i}∘K_1)∘K_1"),
                "th×pd = 2|V(H)| = n/2",
                cite::HALF,
                move |o| Ok(Check::eq(order / 2, product_throttling_with(&g, o)?.value)),
            ));
            let g = half_order_construction(h)?;
            out.push(CaseSpec::derived(
                format!("(H{n}.{i}∘K_1)∘K_1"),
                "recognized as a double corona",
                move |_| {
                    let class = classify_half_order(&g);
                    let ok = matches!(class, HalfOrderClass::DoubleCorona { .. });
                    Ok(Check {
                        expected: "double-corona".into(),
                        computed: format!("{class:?}"),
                        ok,
                    })
                },
            ));
        }
    }
    let c4 = cycle(4)?;
    out.push(CaseSpec::published(
        "C_4",
        "th×pd = 2 = γ",
        cite::C4,
        move |o| {
            let thr = product_throttling_with(&c4, o)?;
            Ok(Check::all(&[
                ("thpdx", "2".into(), thr.value.to_string()),
                ("gamma", "2".into(), thr.gamma.to_string()),
            ]))
        },
    ));
    let c4k1 = corona(&cycle(4)?)?;
    out.push(CaseSpec::published(
        "C_4∘K_1",
        "th×pd = n/2 = 4",
        cite::HALF_CHAR,
        move |o| Ok(Check::eq(4, product_throttling_with(&c4k1, o)?.value)),
    ));
    for n in 2..=n_max {
        out.push(CaseSpec::published(
            format!("connected n={n}"),
            "th×pd = n/2 iff recognized structure",
            cite::HALF_CHAR,
            move |_| exhaustive(n, |g| Ok(!recognize_half_order(g)?.consistent)),
        ));
    }
    Ok(out)
}

fn low_thpdx(n_max: usize) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(CaseSpec::published(
            format!("connected n={n}"),
            "th×pd = 1 iff γ = 1; th×pd = 2 iff (a) or (b)",
            cite::LOW,
            move |_| exhaustive(n, |g| Ok(!characterize_low(g)?.consistent)),
        ));
    }
    for n in 1..=8 {
        let g = complete(n)?;
        out.push(CaseSpec::published(
            format!("K_{n}"),
            "th×pd = 1, th_pd = 2",
            cite::COMPLETE,
            move |o| {
                Ok(Check::all(&[
                    (
                        "thpdx",
                        "1".into(),
                        product_throttling_with(&g, o)?.value.to_string(),
                    ),
                    (
                        "thpd",
                        "2".into(),
                        sum_throttling_with(&g, o)?.value.to_string(),
                    ),
                ]))
            },
        ));
    }
    let g = path(5)?;
    out.push(CaseSpec::published(
        "P_5",
        "both (a) and (b) hold, th×pd = 2",
        cite::LOW,
        move |_| {
            let r = characterize_low(&g)?;
            Ok(Check::all(&[
                ("a", "true".into(), r.cond_a.to_string()),
                ("b", "true".into(), r.cond_b.to_string()),
                ("thpdx", "2".into(), r.thpdx.to_string()),
            ]))
        },
    ));
    Ok(out)
}

/// Every power dominating set of size at most `k_max`, plus the given extras.
fn small_pd_sets(g: &Graph, k_max: usize, extra: &[VertexSet]) -> Vec<VertexSet> {
    let n = g.order();
    let mut out: Vec<VertexSet> = extra.to_vec();
    let mut stack: Vec<(usize, VertexSet)> = vec![(0, VertexSet::new())];
    while let Some((next, s)) = stack.pop() {
        if !s.is_empty() && is_power_dominating(g, &s) {
            out.push(s);
        }
        if s.len() < k_max {
            for v in next..n {
                let mut t = s;
                t.insert(v);
                stack.push((v + 1, t));
            }
        }
    }
    out.sort_by_key(|s| s.to_vec());
    out.dedup();
    out
}

fn unit_interval(count: usize, n_max: usize, seed: u64) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let n = rng.gen_range(2..=n_max.max(2));
        let rep = random_unit_representation(n, &mut rng)?;
        let g = rep.graph();
        let g2 = g.clone();
        let rep2 = rep.clone();
        out.push(CaseSpec::published(
            format!("unit#{i} n={n}"),
            "th×pd = γ",
            cite::UNIT,
            move |o| {
                let thr = product_throttling_with(&g, o)?;
                Ok(Check::eq(thr.gamma, thr.value))
            },
        ));
        out.push(CaseSpec::derived(
            format!("unit#{i} n={n}"),
            "greedy size = γ = brute force",
            move |o| {
                let greedy = rep.greedy_domination()?;
                let (gamma, _) = domination_number_with(&g2, o)?;
                Ok(Check::all(&[
                    (
                        "greedy_dominates",
                        "true".into(),
                        g2.dominates(&greedy).to_string(),
                    ),
                    (
                        "greedy",
                        reference::domination_number(&g2).to_string(),
                        greedy.len().to_string(),
                    ),
                    (
                        "gamma",
                        reference::domination_number(&g2).to_string(),
                        gamma.to_string(),
                    ),
                ]))
            },
        ));
        out.push(CaseSpec::published(
            format!("unit#{i} n={n}"),
            "lemma checks on every power dominating set of size ≤ 3",
            cite::UNIT_LEMMAS,
            move |o| {
                let g = rep2.graph();
                let (_, gp_set) = power_domination_number_with(&g, o)?;
                let witness = product_throttling_with(&g, o)?.witness_set;
                let sets = small_pd_sets(&g, 3, &[gp_set, witness]);
                let mut bad = Vec::new();
                for s in &sets {
                    let trace = propagate(&g, s)?;
                    let mut failed = Vec::new();
                    if !rep2.check_lemma_roundwidth(&trace) {
                        failed.push("width");
                    }
                    if !rep2.check_lemma_backadjacency(&g, &trace) {
                        failed.push("back-adjacency");
                    }
                    if !rep2.check_chain_monotone(&trace) {
                        failed.push("chains");
                    }
                    if !rep2.check_lemma_t_dominates(&trace) {
                        failed.push("T(S)");
                    }
                    let t = trace.time().finite().expect("power dominating") as usize;
                    if t >= 2 {
                        let hat = rep2.hat_s(&trace)?;
                        if !g.dominates(&hat) || hat.len() > s.len() * t {
                            failed.push("hat-S");
                        }
                    }
                    if !failed.is_empty() {
                        bad.push(format!("{s}: {}", failed.join(",")));
                    }
                }
                Ok(Check::none_of(sets.len(), &bad))
            },
        ));
    }
    let (lg, rep) = fig7_interval_graph();
    let g = lg.graph.clone();
    let v3 = lg.index_of("3").expect("labeled");
    out.push(CaseSpec::published(
        "interval example",
        "γ = 3, th×pd = th×pd(G;{3}) = 2, not unit, induced claw",
        cite::INTERVAL_EXAMPLE,
        move |o| {
            let thr = product_throttling_with(&g, o)?;
            let pt3 = power_propagation_time(&g, &VertexSet::singleton(v3))?;
            Ok(Check::all(&[
                ("gamma", "3".into(), thr.gamma.to_string()),
                ("thpdx", "2".into(), thr.value.to_string()),
                ("thpdx_3", "2".into(), time_str(pt3)),
                ("unit", "false".into(), rep.is_unit().to_string()),
                ("claw", "true".into(), g.has_induced_claw().to_string()),
            ]))
        },
    ));
    Ok(out)
}

fn small_factors() -> pdthrottle::Result<Vec<(String, Graph)>> {
    Ok(vec![
        ("P_2".into(), path(2)?),
        ("P_3".into(), path(3)?),
        ("P_4".into(), path(4)?),
        ("C_3".into(), cycle(3)?),
        ("C_4".into(), cycle(4)?),
        ("K_2".into(), complete(2)?),
        ("K_3".into(), complete(3)?),
    ])
}

/// `count` random power dominating sets of `g`, drawn by size then members.
fn random_pd_sets(g: &Graph, count: usize, rng: &mut ChaCha8Rng) -> Vec<VertexSet> {
    let n = g.order();
    let verts: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(1..=n);
        let s: VertexSet = verts.choose_multiple(rng, k).copied().collect();
        if is_power_dominating(g, &s) {
            out.push(s);
        }
    }
    out
}

fn cartesian_bounds(count: usize, seed: u64) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    let factors = small_factors()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (i, (gn, g)) in factors.iter().enumerate() {
        for (hn, h) in factors.iter().skip(i) {
            let prod = cartesian_product(g, h)?;
            let name = format!("{gn}□{hn}");
            let (g1, h1, p1) = (g.clone(), h.clone(), prod.clone());
            out.push(CaseSpec::published(
                name.clone(),
                "product upper bounds",
                cite::CART_UPPER,
                move |o| {
                    let tp = product_throttling_with(&p1, o)?.value;
                    let tg = product_throttling_with(&g1, o)?.value;
                    let th = product_throttling_with(&h1, o)?.value;
                    let bound = (tg * h1.order()).min(th * g1.order());
                    Ok(Check {
                        expected: format!("≤ {bound}"),
                        computed: tp.to_string(),
                        ok: tp <= bound,
                    })
                },
            ));
            let (g1, h1, p1) = (g.clone(), h.clone(), prod.clone());
            out.push(CaseSpec::published(
                name.clone(),
                "product lower bounds",
                cite::CART_LOWER,
                move |o| {
                    let tp = product_throttling_with(&p1, o)?.value;
                    let tg = product_throttling_with(&g1, o)?.value;
                    let th = product_throttling_with(&h1, o)?.value;
                    let bound = tg.max(th);
                    Ok(Check {
                        expected: format!("≥ {bound}"),
                        computed: tp.to_string(),
                        ok: tp >= bound,
                    })
                },
            ));
            let (g1, h1, p1) = (g.clone(), h.clone(), prod.clone());
            out.push(CaseSpec::published(
                name.clone(),
                "degree lower bound",
                cite::CART_DEGREE,
                move |o| {
                    let tp = product_throttling_with(&p1, o)?.value;
                    let bound =
                        (g1.order() * h1.order()).div_ceil(g1.max_degree() + h1.max_degree() + 1);
                    Ok(Check {
                        expected: format!("≥ {bound}"),
                        computed: tp.to_string(),
                        ok: tp >= bound,
                    })
                },
            ));
            if prod.order() <= 16 {
                let p1 = prod.clone();
                out.push(CaseSpec::derived(
                    name.clone(),
                    "th×pd equals brute force",
                    move |o| {
                        Ok(Check::eq(
                            reference::product_throttling(&p1),
                            product_throttling_with(&p1, o)?.value,
                        ))
                    },
                ));
            }
            let sets = random_pd_sets(&prod, count, &mut rng);
            let (g1, h1, p1) = (g.clone(), h.clone(), prod);
            out.push(CaseSpec::published(
                name,
                format!("projection of {count} random power dominating sets"),
                cite::PROJECTION,
                move |_| {
                    let m = h1.order();
                    let mut bad = Vec::new();
                    for s in &sets {
                        let t = power_propagation_time(&p1, s)?;
                        let sg: VertexSet = s.iter().map(|v| v / m).collect();
                        let sh: VertexSet = s.iter().map(|v| v % m).collect();
                        let tg = power_propagation_time(&g1, &sg)?;
                        let th = power_propagation_time(&h1, &sh)?;
                        if !(tg.is_finite() && th.is_finite() && tg <= t && th <= t) {
                            bad.push(format!("{s}: pt {t}, G-side {tg}, H-side {th}"));
                        }
                    }
                    Ok(Check::none_of(sets.len(), &bad))
                },
            ));
        }
    }

    let g = cartesian_product(&spider(&[7, 2, 2, 2, 2, 2])?, &path(2)?)?;
    out.push(CaseSpec::published(
        "S(7,2,2,2,2,2)□P_2",
        "th×pd, γ, γ_P, pt_pd(·,2), pt_pd(·,3)",
        cite::SPIDER_P2,
        move |o| {
            let thr = product_throttling_with(&g, o)?;
            let (gp, _) = power_domination_number_with(&g, o)?;
            let (t2, _) = pt_pd_k_with(&g, 2, o)?;
            let (t3, _) = pt_pd_k_with(&g, 3, o)?;
            Ok(Check::all(&[
                ("thpdx", "8".into(), thr.value.to_string()),
                ("gamma", "10".into(), thr.gamma.to_string()),
                ("gammap", "2".into(), gp.to_string()),
                ("pt2", "7".into(), time_str(t2)),
                ("pt3", "4".into(), time_str(t3)),
            ]))
        },
    ));
    let w = example_w();
    let wp = cartesian_product(&w.graph, &path(2)?)?;
    let wg = w.graph.clone();
    let wp2 = wp.clone();
    out.push(CaseSpec::published(
        "W□P_2",
        "th×pd, γ, γ_P, pt_pd(·,3), pt_pd(·,4)",
        cite::W_P2,
        move |o| {
            let thr = product_throttling_with(&wp, o)?;
            let (gp, _) = power_domination_number_with(&wp, o)?;
            let (t3, _) = pt_pd_k_with(&wp, 3, o)?;
            let (t4, _) = pt_pd_k_with(&wp, 4, o)?;
            Ok(Check::all(&[
                ("thpdx", "10".into(), thr.value.to_string()),
                ("gamma", "11".into(), thr.gamma.to_string()),
                ("gammap", "3".into(), gp.to_string()),
                ("pt3", "7".into(), time_str(t3)),
                ("pt4", "3".into(), time_str(t4)),
            ]))
        },
    ));
    // (x, y) sits at 2x + y; u_i is vertex i - 1 of W
    let labels = ["u1", "u5"].map(|l| 2 * w.index_of(l).expect("labeled"));
    let primed = ["u1", "u3", "u7"].map(|l| 2 * w.index_of(l).expect("labeled") + 1);
    let cited: VertexSet = labels.into_iter().chain(primed).collect();
    out.push(CaseSpec::published(
        "W□P_2",
        "the cited five-set has time 2",
        cite::W_P2_SET,
        move |_| {
            Ok(Check::eq(
                "2".to_string(),
                time_str(power_propagation_time(&wp2, &cited)?),
            ))
        },
    ));
    out.push(CaseSpec::published(
        "W",
        "γ_P, pt_pd, γ, th×pd",
        cite::W,
        move |o| {
            let thr = product_throttling_with(&wg, o)?;
            let (gp, pt) = pt_pd(&wg, o)?;
            Ok(Check::all(&[
                ("gammap", "3".into(), gp.to_string()),
                ("pt_pd", "2".into(), pt.to_string()),
                ("gamma", "8".into(), thr.gamma.to_string()),
                ("thpdx", "6".into(), thr.value.to_string()),
            ]))
        },
    ));
    Ok(out)
}

fn layout_name(l: &GridLayout) -> String {
    let side = |n: usize, wrap: bool| format!("{}_{n}", if wrap { "C" } else { "P" });
    format!(
        "{}□{}",
        side(l.rows, l.wrap_rows),
        side(l.cols, l.wrap_cols)
    )
}

/// `S` on a grid whose domination step, under a rule preferring `x`, makes `|Q_x| = 4`:
/// `x` plus its four diagonal neighbors.
fn crowded_source(l: &GridLayout, r: usize, c: usize) -> (VertexSet, usize) {
    let x = l.index(r, c);
    let s: VertexSet = [
        x,
        l.index(r - 1, c - 1),
        l.index(r - 1, c + 1),
        l.index(r + 1, c - 1),
        l.index(r + 1, c + 1),
    ]
    .into_iter()
    .collect();
    (s, x)
}

fn grids_table(n_max: usize, traces: usize, seed: u64) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    let table: [(usize, usize, bool, usize, usize); 7] = [
        (4, 5, false, 6, 6),
        (4, 6, false, 7, 7),
        (4, 9, false, 10, 10),
        (4, 5, true, 6, 6),
        (4, 9, true, 10, 10),
        (5, 8, false, 11, 11),
        (6, 6, false, 10, 10),
    ];
    for (r, c, wrap, th, gamma) in table {
        let l = GridLayout::new(r, c, false, wrap)?;
        let g = l.graph()?;
        out.push(CaseSpec::published(
            layout_name(&l),
            "(th×pd, γ) from the table",
            cite::TABLE,
            move |o| {
                let thr = product_throttling_with(&g, o)?;
                Ok(Check::all(&[
                    ("thpdx", th.to_string(), thr.value.to_string()),
                    ("gamma", gamma.to_string(), thr.gamma.to_string()),
                ]))
            },
        ));
    }
    for n in 1..=n_max {
        for m in n..=n_max {
            let g = GridLayout::new(n, m, false, false)?.graph()?;
            out.push(CaseSpec::published(
                format!("P_{n}□P_{m}"),
                "γ_P closed form",
                cite::GRID_PD,
                move |o| {
                    Ok(Check::eq(
                        grid_pd_formula(n),
                        power_domination_number_with(&g, o)?.0,
                    ))
                },
            ));
        }
    }
    for n in 2..=n_max {
        for m in n..=n_max {
            for (wr, wc) in [(false, false), (false, true), (true, false), (true, true)] {
                if (wr && n < 3) || (wc && m < 3) || (n == m && wr && !wc) {
                    continue;
                }
                let l = GridLayout::new(n, m, wr, wc)?;
                let g = l.graph()?;
                out.push(CaseSpec::published(
                    layout_name(&l),
                    "th×pd = γ (finite range)",
                    cite::GRID_EQ,
                    move |o| {
                        let thr = product_throttling_with(&g, o)?;
                        Ok(Check::eq(thr.gamma, thr.value))
                    },
                ));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 4..=n_max.max(4) {
        for m in n..=n_max.max(4) {
            for (wr, wc) in [(false, false), (false, true), (true, true)] {
                let l = GridLayout::new(n, m, wr, wc)?;
                let g = l.graph()?;
                let mut inputs: Vec<(VertexSet, ForceRule)> =
                    random_pd_sets(&g, traces * 4, &mut rng)
                        .into_iter()
                        .map(|s| (s, ForceRule::LowestIndex))
                        .collect();
                if n >= 5 && m >= 5 {
                    let (s, x) = crowded_source(&l, 2, 2);
                    if is_power_dominating(&g, &s) {
                        inputs.push((s, ForceRule::preferring(g.order(), &[x])));
                    }
                }
                out.push(CaseSpec::published(
                    layout_name(&l),
                    "force reassignment reaches |Q_x| ≤ 3",
                    cite::QSETS,
                    move |_| {
                        let mut checked = 0;
                        let mut crowded = 0;
                        let mut bad = Vec::new();
                        for (s, rule) in &inputs {
                            let trace = propagate_with(&g, s, rule)?;
                            if trace.time() < PropTime::Finite(2) {
                                continue;
                            }
                            checked += 1;
                            if q_sets(&trace)?.max_size() >= 4 {
                                crowded += 1;
                            }
                            match reassign_forces_grid(&g, &l, &trace) {
                                Ok(fixed) => {
                                    let q = q_sets(&fixed)?;
                                    if q.max_size() > 3
                                        || fixed.rounds != trace.rounds
                                        || fixed.validate(&g).is_err()
                                    {
                                        bad.push(format!("{s}: max |Q_x| {}", q.max_size()));
                                    }
                                }
                                Err(e) => bad.push(format!("{s}: {e}")),
                            }
                        }
                        let mut c = Check::none_of(checked, &bad);
                        c.computed
                            .push_str(&format!(" ({crowded} started with some |Q_x| = 4)"));
                        c.expected.push_str(" (traces with pt ≥ 2)");
                        Ok(c)
                    },
                ));
            }
        }
    }
    Ok(out)
}

fn kn_km(m_max: usize) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=m_max {
        for m in n..=m_max {
            let g = cartesian_product(&complete(n)?, &complete(m)?)?;
            let name = format!("K_{n}□K_{m}");
            if n >= 2 {
                let g2 = g.clone();
                out.push(CaseSpec::published(
                    name.clone(),
                    "γ_P = n − 1",
                    cite::KNKM_GP,
                    move |o| Ok(Check::eq(n - 1, power_domination_number_with(&g2, o)?.0)),
                ));
            }
            out.push(CaseSpec::published(
                name,
                "th×pd = γ = n",
                cite::KNKM_TH,
                move |o| {
                    let thr = product_throttling_with(&g, o)?;
                    Ok(Check::all(&[
                        ("thpdx", n.to_string(), thr.value.to_string()),
                        ("gamma", n.to_string(), thr.gamma.to_string()),
                    ]))
                },
            ));
        }
    }
    for (name, h, m) in [
        ("P_2□K_3", path(2)?, 3),
        ("P_3□K_5", path(3)?, 5),
        ("C_3□K_5", cycle(3)?, 5),
        ("P_4□K_7", path(4)?, 7),
        ("C_4□K_7", cycle(4)?, 7),
    ] {
        let n = h.order();
        let g = cartesian_product(&h, &complete(m)?)?;
        out.push(CaseSpec::published(
            name,
            "th×pd = n",
            cite::H_KM,
            move |o| Ok(Check::eq(n, product_throttling_with(&g, o)?.value)),
        ));
    }
    Ok(out)
}

fn family_a_suite() -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    for (i, member) in family_a().into_iter().enumerate() {
        let g = member.graph;
        let d = member.designated;
        let is_c4 = g.order() == 4;
        let g2 = g.clone();
        out.push(CaseSpec::published(
            format!("family-a #{i}"),
            "γ_P = 1 via the designated vertex; order",
            cite::FAMILY_A,
            move |o| {
                let (gp, _) = power_domination_number_with(&g, o)?;
                Ok(Check::all(&[
                    (
                        "order",
                        if is_c4 { "4" } else { "7" }.into(),
                        g.order().to_string(),
                    ),
                    ("gammap", "1".into(), gp.to_string()),
                    (
                        "designated_pd",
                        "true".into(),
                        is_power_dominating(&g, &VertexSet::singleton(d)).to_string(),
                    ),
                ]))
            },
        ));
        out.push(CaseSpec::derived(
            format!("family-a #{i}"),
            "connected, δ ≥ 2 and γ > 2n/5 (the exceptions are needed)",
            move |o| {
                let (gamma, _) = domination_number_with(&g2, o)?;
                let n = g2.order();
                Ok(Check::all(&[
                    ("connected", "true".into(), g2.is_connected().to_string()),
                    (
                        "min_degree_ge_2",
                        "true".into(),
                        (g2.min_degree() >= 2).to_string(),
                    ),
                    (
                        "gamma_gt_2n/5",
                        "true".into(),
                        (5 * gamma > 2 * n).to_string(),
                    ),
                ]))
            },
        ));
    }
    for n in 3..=7 {
        out.push(CaseSpec::published(
            format!("connected n={n}"),
            "δ ≥ 2 outside the family implies γ ≤ 2n/5",
            cite::FAMILY_A_DOM,
            move |o| {
                let fam: Vec<u64> = family_a()
                    .iter()
                    .map(|m| pdthrottle::enumerate::canonical_code(&m.graph))
                    .collect();
                exhaustive(n, |g| {
                    if g.min_degree() < 2 || fam.contains(&pdthrottle::enumerate::canonical_code(g))
                    {
                        return Ok(false);
                    }
                    Ok(5 * domination_number_with(g, o)?.0 > 2 * g.order())
                })
            },
        ));
    }
    Ok(out)
}

fn g_d(d_max: usize) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    for d in 2..=d_max {
        let g = g_d_construction(d)?;
        let g2 = g.clone();
        out.push(CaseSpec::trivial(
            format!("G_{d}"),
            "d-regular of order d(d+1)",
            move |_| {
                Ok(Check::all(&[
                    ("order", (d * (d + 1)).to_string(), g2.order().to_string()),
                    ("min_degree", d.to_string(), g2.min_degree().to_string()),
                    ("max_degree", d.to_string(), g2.max_degree().to_string()),
                ]))
            },
        ));
        out.push(CaseSpec::published(
            format!("G_{d}"),
            "γ = d and th×pd = d",
            cite::GD,
            move |o| {
                let thr = product_throttling_with(&g, o)?;
                Ok(Check::all(&[
                    ("gamma", d.to_string(), thr.gamma.to_string()),
                    ("thpdx", d.to_string(), thr.value.to_string()),
                ]))
            },
        ));
    }
    let h = example_h();
    out.push(CaseSpec::published(
        "example H",
        "Δ = 4, unique minimum dominating set {x,y,z}",
        cite::EXAMPLE_H,
        move |o| {
            let g = &h.graph;
            let (gamma, _) = domination_number_with(g, o)?;
            let n = g.order();
            let mut minimum = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        let s: VertexSet = [a, b, c].into_iter().collect();
                        if g.dominates(&s) {
                            minimum.push(s);
                        }
                    }
                }
            }
            let xyz: VertexSet = ["x", "y", "z"]
                .iter()
                .map(|l| h.index_of(l).expect("labeled"))
                .collect();
            Ok(Check::all(&[
                ("max_degree", "4".into(), g.max_degree().to_string()),
                ("gamma", "3".into(), gamma.to_string()),
                ("minimum_sets", "1".into(), minimum.len().to_string()),
                (
                    "is_xyz",
                    "true".into(),
                    (minimum.first() == Some(&xyz)).to_string(),
                ),
            ]))
        },
    ));
    Ok(out)
}

fn conditions(n_max: usize) -> Result<Vec<CaseSpec>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(CaseSpec::published(
            format!("connected n={n}"),
            "γ_P = γ iff pt_pd = 1",
            cite::PT_ONE,
            move |o| {
                exhaustive(n, |g| {
                    let (gamma, _) = domination_number_with(g, o)?;
                    let (gp, pt) = power_propagation_time_of_graph(g)?;
                    Ok((gp == gamma) != (pt == 1))
                })
            },
        ));
        out.push(CaseSpec::published(
            format!("connected n={n}"),
            "each firing sufficient condition gives th×pd = γ",
            cite::SUFFICIENT,
            move |_| exhaustive(n, |g| Ok(!equality_conditions(g)?.consistent)),
        ));
        if n <= 7 {
            out.push(CaseSpec::derived(
                format!("connected n={n}"),
                "th×pd, γ, γ_P, pt_pd equal brute force",
                move |o| {
                    exhaustive(n, |g| {
                        let thr = product_throttling_with(g, o)?;
                        let (gp, pt) = power_propagation_time_of_graph(g)?;
                        Ok(thr.value != reference::product_throttling(g)
                            || thr.gamma != reference::domination_number(g)
                            || (gp, pt) != reference::power_domination(g))
                    })
                },
            ));
        }
    }
    for (name, g) in [
        ("G_3", g_d_construction(3)?),
        ("C_4", cycle(4)?),
        ("(P_3∘K_1)∘K_1", half_order_construction(&path(3)?)?),
        ("S(7,2,2,2,2,2)", spider(&[7, 2, 2, 2, 2, 2])?),
    ] {
        out.push(CaseSpec::derived(
            name,
            "firing conditions agree with th×pd = γ",
            move |_| {
                let r = equality_conditions(&g)?;
                let fired: Vec<&str> = r
                    .conditions
                    .iter()
                    .filter(|c| c.fires)
                    .map(|c| c.name)
                    .collect();
                Ok(Check {
                    expected: "consistent".into(),
                    computed: format!(
                        "{} (th×pd {}, γ {}, fired: {})",
                        if r.consistent {
                            "consistent"
                        } else {
                            "inconsistent"
                        },
                        r.thpdx,
                        r.gamma,
                        if fired.is_empty() {
                            "none".to_string()
                        } else {
                            fired.join(",")
                        }
                    ),
                    ok: r.consistent,
                })
            },
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_formula_values() {
        // ⌈√(2n) − 1/2⌉ evaluated with floats as an independent check
        for n in 1..=200usize {
            let f = ((2.0 * n as f64).sqrt() - 0.5).ceil() as usize;
            assert_eq!(sum_path_formula(n), f, "n={n}");
        }
    }

    #[test]
    fn grid_formula_values() {
        assert_eq!(grid_pd_formula(1), 1);
        assert_eq!(grid_pd_formula(4), 2);
        assert_eq!(grid_pd_formula(5), 2);
        assert_eq!(grid_pd_formula(12), 4);
        assert_eq!(grid_pd_formula(8), 2);
    }

    #[test]
    fn partitions() {
        let mut p = leg_partitions(4);
        p.sort();
        assert_eq!(p, vec![vec![1, 1, 1], vec![1, 1, 1, 1], vec![2, 1, 1]]);
        assert_eq!(
            leg_partitions(9).len(),
            leg_partitions(9)
                .iter()
                .collect::<std::collections::BTreeSet<_>>()
                .len()
        );
    }

    #[test]
    fn unknown_suite_lists_names() {
        let err = build("nope", &SuiteParams::default()).err().unwrap();
        let msg = err.to_string();
        assert!(msg.contains("paths-cycles") && msg.contains("conditions"));
    }

    #[test]
    fn crowded_source_has_four() {
        let l = GridLayout::new(5, 5, false, false).unwrap();
        let g = l.graph().unwrap();
        let (s, x) = crowded_source(&l, 2, 2);
        let t = propagate_with(&g, &s, &ForceRule::preferring(25, &[x])).unwrap();
        assert_eq!(q_sets(&t).unwrap().q[&x].len(), 4);
        let fixed = reassign_forces_grid(&g, &l, &t).unwrap();
        assert!(q_sets(&fixed).unwrap().max_size() <= 3);
    }
}
