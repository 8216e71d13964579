//! Verification reports.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use pdthrottle::{Error, SolveOptions};
use rayon::prelude::*;
use serde::Serialize;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A value or statement quoted from the literature; carries a citation.
    Published,
    /// Computed independently here (oracle, brute force, invariant).
    Derived,
    /// Immediate from definitions.
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// A derived or trivial expectation failed.
    Fail,
    /// A published value disagrees with the computation.
    Mismatch,
    /// The case ran out of time budget.
    Skipped,
}

/// Outcome of one check: both sides rendered for the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

impl Check {
    pub fn eq<T: PartialEq + std::fmt::Display>(expected: T, computed: T) -> Self {
        Check {
            ok: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
        }
    }

    /// Several named values compared at once, rendered as `a=1 b=2`.
    pub fn all(pairs: &[(&str, String, String)]) -> Self {
        let join = |expected: bool| {
            pairs
                .iter()
                .map(|p| format!("{}={}", p.0, if expected { &p.1 } else { &p.2 }))
                .collect::<Vec<_>>()
                .join(" ")
        };
        Check {
            ok: pairs.iter().all(|(_, e, c)| e == c),
            expected: join(true),
            computed: join(false),
        }
    }

    /// A predicate over a population: expected zero counterexamples.
    pub fn none_of(total: usize, counterexamples: &[String]) -> Self {
        let computed = if counterexamples.is_empty() {
            format!("0 counterexamples in {total}")
        } else {
            let shown: Vec<&str> = counterexamples.iter().take(3).map(String::as_str).collect();
            format!(
                "{} counterexamples in {total}, e.g. {}",
                counterexamples.len(),
                shown.join("; ")
            )
        };
        Check {
            expected: format!("0 counterexamples in {total}"),
            ok: counterexamples.is_empty(),
            computed,
        }
    }
}

pub type CaseFn = Box<dyn Fn(&SolveOptions) -> pdthrottle::Result<Check> + Send + Sync>;

/// A case before it runs.
pub struct CaseSpec {
    pub instance: String,
    pub claim: String,
    pub source: Source,
    pub citation: Option<&'static str>,
    pub run: CaseFn,
}

impl CaseSpec {
    pub fn new(
        instance: impl Into<String>,
        claim: impl Into<String>,
        source: Source,
        citation: Option<&'static str>,
        run: impl Fn(&SolveOptions) -> pdthrottle::Result<Check> + Send + Sync + 'static,
    ) -> Self {
        CaseSpec {
            instance: instance.into(),
            claim: claim.into(),
            source,
            citation,
            run: Box::new(run),
        }
    }

    pub fn published(
        instance: impl Into<String>,
        claim: impl Into<String>,
        citation: &'static str,
        run: impl Fn(&SolveOptions) -> pdthrottle::Result<Check> + Send + Sync + 'static,
    ) -> Self {
        Self::new(instance, claim, Source::Published, Some(citation), run)
    }

    pub fn derived(
        instance: impl Into<String>,
        claim: impl Into<String>,
        run: impl Fn(&SolveOptions) -> pdthrottle::Result<Check> + Send + Sync + 'static,
    ) -> Self {
        Self::new(instance, claim, Source::Derived, None, run)
    }

    pub fn trivial(
        instance: impl Into<String>,
        claim: impl Into<String>,
        run: impl Fn(&SolveOptions) -> pdthrottle::Result<Check> + Send + Sync + 'static,
    ) -> Self {
        Self::new(instance, claim, Source::Trivial, None, run)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub instance: String,
    pub claim: String,
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub wall_ms: f64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub mismatch: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Vec<(String, String)>,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub notes: Vec<String>,
}

/// Printed with every report.
pub const SCOPE_NOTE: &str = "Statements quantified over all orders (for example product throttling equals \
the domination number for every grid, cylinder and torus) are checked here only on the finite ranges listed \
in the cases. Large-grid and asymptotic claims are outside desk-scale computation and are not established by this run.";

fn run_case(spec: &CaseSpec, budget: Duration) -> Case {
    let opts = SolveOptions::with_budget(budget);
    let start = Instant::now();
    let outcome = (spec.run)(&opts);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let (expected, computed, status) = match outcome {
        Ok(c) => {
            let status = match (c.ok, spec.source) {
                (true, _) => Status::Pass,
                (false, Source::Published) => Status::Mismatch,
                (false, _) => Status::Fail,
            };
            (c.expected, c.computed, status)
        }
        Err(Error::BudgetExceeded) => (String::new(), "budget exceeded".into(), Status::Skipped),
        Err(e) => (String::new(), format!("error: {e}"), Status::Fail),
    };
    Case {
        instance: spec.instance.clone(),
        claim: spec.claim.clone(),
        source: spec.source,
        citation: spec.citation.map(str::to_string),
        expected,
        computed,
        status,
        wall_ms,
    }
}

impl VerificationReport {
    /// Runs the cases on the current rayon pool and sorts them canonically.
    pub fn run(
        suite: &str,
        params: Vec<(String, String)>,
        specs: Vec<CaseSpec>,
        notes: Vec<String>,
        budget: Duration,
    ) -> Self {
        let mut cases: Vec<Case> = specs.par_iter().map(|s| run_case(s, budget)).collect();
        cases.sort_by(|a, b| {
            natural_key(&a.instance)
                .cmp(&natural_key(&b.instance))
                .then_with(|| a.claim.cmp(&b.claim))
        });
        let mut summary = Summary::default();
        for c in &cases {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Mismatch => summary.mismatch += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        let mut notes = notes;
        notes.push(SCOPE_NOTE.to_string());
        VerificationReport {
            suite: suite.to_string(),
            params,
            cases,
            summary,
            notes,
        }
    }

    /// True when nothing failed or mismatched; skipped cases do not count.
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.mismatch == 0
    }

    /// JSON with every `wall_ms` zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.cases {
            c.wall_ms = 0.0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("instance,claim,source,citation,expected,computed,status,wall_ms\n");
        for c in &self.cases {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{:.3}",
                csv_field(&c.instance),
                csv_field(&c.claim),
                source_name(c.source),
                csv_field(c.citation.as_deref().unwrap_or("")),
                csv_field(&c.expected),
                csv_field(&c.computed),
                status_name(c.status),
                c.wall_ms
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}", self.suite);
        for (k, v) in &self.params {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
        for c in &self.cases {
            let _ = writeln!(
                out,
                "  [{:<8}] {} :: {} ({}) expected {} computed {} [{:.1} ms]",
                status_name(c.status),
                c.instance,
                c.claim,
                source_name(c.source),
                if c.expected.is_empty() {
                    "-"
                } else {
                    &c.expected
                },
                c.computed,
                c.wall_ms
            );
            if let Some(cite) = &c.citation {
                if c.status == Status::Mismatch {
                    let _ = writeln!(out, "             cited: {cite}");
                }
            }
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} mismatch, {} skipped",
            s.pass, s.fail, s.mismatch, s.skipped
        );
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}

pub fn source_name(s: Source) -> &'static str {
    match s {
        Source::Published => "published",
        Source::Derived => "derived",
        Source::Trivial => "trivial",
    }
}

pub fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Mismatch => "mismatch",
        Status::Skipped => "skipped",
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Sort key that orders embedded numbers numerically, so `P_9` precedes `P_10`.
fn natural_key(s: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_ascii_digit() {
            let mut num = c.to_digit(10).unwrap() as u64;
            while let Some(d) = chars.peek().and_then(|d| d.to_digit(10)) {
                num = num.saturating_mul(10).saturating_add(d as u64);
                chars.next();
            }
            out.push((std::mem::take(&mut text), num));
        } else {
            text.push(c);
        }
    }
    out.push((text, 0));
    out
}
