//! Parameter tables over graph families.

use std::fmt::Write as _;
use std::time::Duration;

use pdthrottle::generators::{complete, cycle, family_a, g_d_construction, path, star, GridLayout};
use pdthrottle::solvers::{
    domination_number_with, power_domination_number_with, product_throttling_with, pt_pd_k_with,
    sum_throttling_with,
};
use pdthrottle::{Error, Graph, SolveOptions};
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::Cache;
use crate::expr::parse_graph;
use crate::report::csv_field;
use crate::HarnessError;

pub const FAMILIES: [&str; 11] = [
    "paths",
    "cycles",
    "complete",
    "stars",
    "family-a",
    "gd",
    "grids",
    "cylinders",
    "tori",
    "connected",
    "graph",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub graph: String,
    pub n: usize,
    pub gamma_p: Option<usize>,
    pub gamma: Option<usize>,
    pub pt_pd: Option<u32>,
    pub thpdx: Option<usize>,
    pub thpd: Option<usize>,
    pub witness: Option<Vec<usize>>,
    /// `ok`, or `skipped` when the budget ran out.
    pub status: String,
}

fn parse_range(spec: &str) -> Result<(usize, usize), HarnessError> {
    let bad = || {
        HarnessError::Usage(format!(
            "bad range `{spec}`; expected a..b or a single number"
        ))
    };
    let spec = spec.trim();
    match spec.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a, b))
        }
        None => {
            let v = spec.parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

/// Expands `family range` into named graphs in output order.
pub fn expand(family: &str, spec: Option<&str>) -> Result<Vec<(String, Graph)>, HarnessError> {
    let range = |default: (usize, usize)| spec.map(parse_range).unwrap_or(Ok(default));
    let mut out = Vec::new();
    match family {
        "paths" => {
            let (a, b) = range((1, 10))?;
            for n in a.max(1)..=b {
                out.push((format!("P_{n}"), path(n)?));
            }
        }
        "cycles" => {
            let (a, b) = range((3, 10))?;
            for n in a.max(3)..=b {
                out.push((format!("C_{n}"), cycle(n)?));
            }
        }
        "complete" => {
            let (a, b) = range((1, 8))?;
            for n in a.max(1)..=b {
                out.push((format!("K_{n}"), complete(n)?));
            }
        }
        "stars" => {
            let (a, b) = range((2, 9))?;
            for n in a.max(2)..=b {
                out.push((format!("K_1,{}", n - 1), star(n)?));
            }
        }
        "family-a" => {
            for (i, m) in family_a().into_iter().enumerate() {
                out.push((format!("family-a #{i}"), m.graph));
            }
        }
        "gd" => {
            let (a, b) = range((2, 5))?;
            for d in a.max(2)..=b {
                out.push((format!("G_{d}"), g_d_construction(d)?));
            }
        }
        "grids" | "cylinders" | "tori" => {
            let (a, b) = range((2, 5))?;
            let lo = if family == "grids" {
                a.max(1)
            } else {
                a.max(3)
            };
            for r in lo..=b {
                for c in r..=b {
                    let (wr, wc) = match family {
                        "grids" => (false, false),
                        "cylinders" => (false, true),
                        _ => (true, true),
                    };
                    let l = GridLayout::new(r, c, wr, wc)?;
                    out.push((l.name(), l.graph()?));
                }
            }
        }
        "connected" => {
            let (a, b) = range((1, 4))?;
            for n in a.max(1)..=b {
                for (i, g) in pdthrottle::enumerate::connected_graphs(n)?
                    .into_iter()
                    .enumerate()
                {
                    out.push((format!("H{n}.{i}"), g));
                }
            }
        }
        "graph" => {
            let src = spec
                .ok_or_else(|| HarnessError::Usage("`table graph` needs an expression".into()))?;
            out.push((src.to_string(), parse_graph(src)?));
        }
        other => {
            return Err(HarnessError::Usage(format!(
                "unknown table family `{other}`; valid families: {}",
                FAMILIES.join(", ")
            )))
        }
    }
    Ok(out)
}

fn compute_row(name: &str, g: &Graph, cache: &Cache, budget: Duration) -> Result<Row, Error> {
    let opts = SolveOptions::with_budget(budget);
    let gamma: usize = cache.get_or_compute(g, "gamma", || {
        Ok::<_, Error>(domination_number_with(g, &opts)?.0)
    })?;
    let (gamma_p, pt): (usize, u32) = cache.get_or_compute(g, "gammap-ptpd", || {
        let (gp, _) = power_domination_number_with(g, &opts)?;
        let (t, _) = pt_pd_k_with(g, gp, &opts)?;
        Ok::<_, Error>((
            gp,
            t.finite().expect("minimum power dominating sets finish"),
        ))
    })?;
    let (thpdx, witness): (usize, Vec<usize>) = cache.get_or_compute(g, "thpdx", || {
        let r = product_throttling_with(g, &opts)?;
        Ok::<_, Error>((r.value, r.witness_set.to_vec()))
    })?;
    let thpd: usize = cache.get_or_compute(g, "thpd", || {
        Ok::<_, Error>(sum_throttling_with(g, &opts)?.value)
    })?;
    Ok(Row {
        graph: name.to_string(),
        n: g.order(),
        gamma_p: Some(gamma_p),
        gamma: Some(gamma),
        pt_pd: Some(pt),
        thpdx: Some(thpdx),
        thpd: Some(thpd),
        witness: Some(witness),
        status: "ok".into(),
    })
}

/// Computes one row per graph, concurrently; budget exhaustion yields a skipped row.
pub fn table(
    graphs: &[(String, Graph)],
    cache: &Cache,
    budget: Duration,
) -> Result<Vec<Row>, HarnessError> {
    graphs
        .par_iter()
        .map(|(name, g)| match compute_row(name, g, cache, budget) {
            Ok(r) => Ok(r),
            Err(Error::BudgetExceeded) => Ok(Row {
                graph: name.clone(),
                n: g.order(),
                gamma_p: None,
                gamma: None,
                pt_pd: None,
                thpdx: None,
                thpd: None,
                witness: None,
                status: "skipped".into(),
            }),
            Err(e) => Err(HarnessError::Core(e)),
        })
        .collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

fn witness_str(w: &Option<Vec<usize>>) -> String {
    w.as_ref()
        .map(|w| w.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::from("graph,n,gamma_p,gamma,pt_pd,thpdx,thpd,witness,status\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            csv_field(&r.graph),
            r.n,
            opt(&r.gamma_p),
            opt(&r.gamma),
            opt(&r.pt_pd),
            opt(&r.thpdx),
            opt(&r.thpd),
            witness_str(&r.witness),
            r.status
        );
    }
    out
}

pub fn to_text(rows: &[Row]) -> String {
    let mut out = format!(
        "{:<24} {:>4} {:>6} {:>6} {:>6} {:>6} {:>6}  {}\n",
        "graph", "n", "γ_P", "γ", "pt_pd", "th×pd", "th_pd", "witness"
    );
    for r in rows {
        if r.status != "ok" {
            let _ = writeln!(out, "{:<24} {:>4}  skipped (budget exceeded)", r.graph, r.n);
            continue;
        }
        let _ = writeln!(
            out,
            "{:<24} {:>4} {:>6} {:>6} {:>6} {:>6} {:>6}  {{{}}}",
            r.graph,
            r.n,
            opt(&r.gamma_p),
            opt(&r.gamma),
            opt(&r.pt_pd),
            opt(&r.thpdx),
            opt(&r.thpd),
            witness_str(&r.witness).replace(' ', ",")
        );
    }
    out
}
