use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use pdthrottle::solvers::{
    domination_number_with, power_domination_number_with, product_throttling_with, pt_pd_k_with,
    sum_throttling_with, ThrottlingResult,
};
use pdthrottle::{
    power_propagation_time, propagate, Graph, PropTime, RationalIntervals, SolveOptions, VertexSet,
};
use pdthrottle_harness::cache::{Cache, CACHE_ENV};
use pdthrottle_harness::expr::{family_call, parse_graph};
use pdthrottle_harness::suites::{verify, SuiteParams, SUITES};
use pdthrottle_harness::table::{expand, table, to_csv, to_text};
use pdthrottle_harness::HarnessError;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pdthrottle",
    version,
    about = "Power domination, propagation time and power throttling"
)]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (tables and reports).
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Time budget per case or row, in seconds.
    #[arg(long, global = true, default_value_t = 600)]
    budget: u64,
    /// Results cache directory.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    Gamma,
    Gammap,
    Pt,
    Thpdx,
    Thpd,
    Trace,
    Greedy,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph as an edge list, e.g. `generate spider 7 2 2 2 2 2` or `generate "P4xC5"`.
    Generate { family: String, params: Vec<String> },
    /// Solve one parameter for a graph file (`-` for stdin) or an interval file.
    Solve {
        param: Param,
        graph: Option<PathBuf>,
        /// Fix the number of chosen vertices.
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated vertex set for `pt` and `trace`.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        /// Build the graph from an interval file instead.
        #[arg(long)]
        intervals: Option<PathBuf>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Largest order, side or degree the suite ranges over.
        #[arg(long)]
        max_n: Option<usize>,
        /// Sample count for randomized suites.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Tabulate parameters over a family, e.g. `table paths 1..12`.
    Table {
        family: String,
        range: Option<String>,
    },
    /// List suites and table families.
    List,
}

fn read_input(path: &PathBuf) -> Result<String, HarnessError> {
    let io = |source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn throttling_text(r: &ThrottlingResult) -> String {
    let mut out = format!(
        "value {}\nwitness {} (time {})\nγ {}\nγ_P {}\n",
        r.value,
        r.witness_set,
        r.witness_time,
        r.gamma,
        r.gamma_p
            .map_or("not computed".to_string(), |v| v.to_string())
    );
    for e in &r.per_k {
        out.push_str(&format!("  k={} pt={:?} value={:?}\n", e.k, e.pt, e.value));
    }
    for p in &r.pruning_log {
        out.push_str(&format!("  pruned {:?} {:?}: {}\n", p.rule, p.ks, p.note));
    }
    out
}

fn solve(
    cli: &Cli,
    param: Param,
    graph: Option<&PathBuf>,
    k: Option<usize>,
    set: Option<&Vec<usize>>,
    intervals: Option<&PathBuf>,
) -> Result<bool, HarnessError> {
    let rep = match intervals {
        Some(p) => Some(RationalIntervals::parse(&read_input(p)?)?),
        None => None,
    };
    let g: Graph = match (&rep, graph) {
        (Some(r), None) => r.graph(),
        (None, Some(p)) => Graph::parse_edge_list(&read_input(p)?)?,
        (Some(_), Some(_)) => {
            return Err(HarnessError::Usage(
                "give a graph file or --intervals, not both".into(),
            ))
        }
        (None, None) => {
            return Err(HarnessError::Usage(
                "missing graph file (or --intervals)".into(),
            ))
        }
    };
    let opts = SolveOptions::with_budget(Duration::from_secs(cli.budget));
    let s: Option<VertexSet> = set.map(|v| v.iter().copied().collect());
    if let Some(s) = &s {
        g.check_set(s)?;
    }
    let (value, text) = match (param, k, s) {
        (Param::Gamma, _, _) => {
            let (gamma, w) = domination_number_with(&g, &opts)?;
            (
                json!({"param": "gamma", "value": gamma, "witness": w}),
                format!("γ {gamma}\nwitness {w}\n"),
            )
        }
        (Param::Gammap, _, _) => {
            let (gp, w) = power_domination_number_with(&g, &opts)?;
            let (t, _) = pt_pd_k_with(&g, gp, &opts)?;
            (
                json!({"param": "gammap", "value": gp, "witness": w, "pt_pd": t}),
                format!("γ_P {gp}\nwitness {w}\npt_pd {t}\n"),
            )
        }
        (Param::Pt, _, Some(s)) => {
            let t = power_propagation_time(&g, &s)?;
            (
                json!({"param": "pt", "set": s, "value": t}),
                format!("pt_pd(G; {s}) = {t}\n"),
            )
        }
        (Param::Pt, Some(k), None) => {
            let (t, w) = pt_pd_k_with(&g, k, &opts)?;
            (
                json!({"param": "pt", "k": k, "value": t, "witness": w}),
                format!(
                    "pt_pd(G, {k}) = {t}\nwitness {}\n",
                    w.map_or("none".to_string(), |w| w.to_string())
                ),
            )
        }
        (Param::Pt, None, None) => {
            let (gp, _) = power_domination_number_with(&g, &opts)?;
            let (t, w) = pt_pd_k_with(&g, gp, &opts)?;
            (
                json!({"param": "pt", "gamma_p": gp, "value": t, "witness": w}),
                format!("pt_pd(G) = {t} (γ_P = {gp})\n"),
            )
        }
        (Param::Thpdx, Some(k), _) => {
            let (t, w) = pt_pd_k_with(&g, k, &opts)?;
            let v: PropTime = t.times(k);
            (
                json!({"param": "thpdx", "k": k, "value": v, "witness": w}),
                format!("th×pd(G, {k}) = {v}\n"),
            )
        }
        (Param::Thpdx, None, _) => {
            let r = product_throttling_with(&g, &opts)?;
            (
                serde_json::to_value(&r).expect("serializable"),
                throttling_text(&r),
            )
        }
        (Param::Thpd, _, _) => {
            let r = sum_throttling_with(&g, &opts)?;
            (
                serde_json::to_value(&r).expect("serializable"),
                throttling_text(&r),
            )
        }
        (Param::Trace, _, Some(s)) => {
            let t = propagate(&g, &s)?;
            let mut text = format!("time {}\n", t.time());
            for (i, r) in t.rounds.iter().enumerate() {
                text.push_str(&format!("round {i}: {r}\n"));
            }
            for f in &t.forces {
                text.push_str(&format!(
                    "  {} -> {} (round {}, {:?})\n",
                    f.forcer, f.forced, f.round, f.kind
                ));
            }
            (serde_json::to_value(&t).expect("serializable"), text)
        }
        (Param::Trace, _, None) => return Err(HarnessError::Usage("trace needs --set".into())),
        (Param::Greedy, _, _) => {
            let rep = rep.ok_or_else(|| HarnessError::Usage("greedy needs --intervals".into()))?;
            let s = rep.greedy_domination()?;
            (
                json!({"param": "greedy", "value": s.len(), "set": s}),
                format!("greedy dominating set {s} (size {})\n", s.len()),
            )
        }
    };
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        );
    } else {
        print!("{text}");
    }
    Ok(true)
}

fn run(cli: &Cli) -> Result<bool, HarnessError> {
    let budget = Duration::from_secs(cli.budget);
    match &cli.command {
        Command::Generate { family, params } => {
            let src = family_call(family, params);
            print!("{}", parse_graph(&src)?.to_edge_list());
            Ok(true)
        }
        Command::Solve {
            param,
            graph,
            k,
            set,
            intervals,
        } => solve(
            cli,
            *param,
            graph.as_ref(),
            *k,
            set.as_ref(),
            intervals.as_ref(),
        ),
        Command::Verify {
            suite,
            max_n,
            count,
        } => {
            let params = SuiteParams {
                max_n: *max_n,
                count: *count,
                seed: cli.seed,
            };
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut ok = true;
            let mut reports = Vec::new();
            for name in names {
                let r = verify(name, &params, budget)?;
                ok &= r.all_pass();
                if cli.json {
                    reports.push(r);
                } else if cli.csv {
                    print!("{}", r.to_csv());
                } else {
                    print!("{}", r.to_text());
                }
            }
            if cli.json {
                let out = if reports.len() == 1 {
                    reports[0].to_json()
                } else {
                    serde_json::to_string_pretty(&reports).expect("serializable")
                };
                println!("{out}");
            }
            Ok(ok)
        }
        Command::Table { family, range } => {
            let graphs = expand(family, range.as_deref())?;
            let cache = Cache::new(cli.cache.clone()).map_err(|source| HarnessError::Io {
                path: cli
                    .cache
                    .as_ref()
                    .map(|p| p.display().to_string())
                    .unwrap_or_default(),
                source,
            })?;
            let rows = table(&graphs, &cache, budget)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&rows).expect("serializable")
                );
            } else if cli.csv {
                print!("{}", to_csv(&rows));
            } else {
                print!("{}", to_text(&rows));
            }
            eprintln!(
                "solver calls: {}, cache hits: {}",
                cache.solver_calls(),
                cache.hits()
            );
            Ok(true)
        }
        Command::List => {
            println!("suites: {}", SUITES.join(", "));
            println!(
                "table families: {}",
                pdthrottle_harness::table::FAMILIES.join(", ")
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
