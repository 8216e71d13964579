//! Power domination and zero forcing as synchronous round-based processes.
//!
//! The round partition is computed set-algebraically, one round at a time, so
//! it does not depend on which vertex is credited with each force. Force
//! records are layered on top according to a [`ForceRule`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generators::{Direction, GridLayout};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A propagation time: a positive round count, or infinite when the process stalls.
///
/// `Finite(_) < Infinite`; multiplication and addition by counts saturate at `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropTime {
    Finite(u32),
    Infinite,
}

impl PropTime {
    pub fn finite(self) -> Option<u32> {
        match self {
            PropTime::Finite(t) => Some(t),
            PropTime::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, PropTime::Finite(_))
    }

    /// `k · t`, saturating to `Infinite`.
    pub fn times(self, k: usize) -> PropTime {
        match self {
            PropTime::Finite(t) => u32::try_from(k)
                .ok()
                .and_then(|k| k.checked_mul(t))
                .map_or(PropTime::Infinite, PropTime::Finite),
            PropTime::Infinite => PropTime::Infinite,
        }
    }

    /// `k + t`, saturating to `Infinite`.
    pub fn plus(self, k: usize) -> PropTime {
        match self {
            PropTime::Finite(t) => u32::try_from(k)
                .ok()
                .and_then(|k| k.checked_add(t))
                .map_or(PropTime::Infinite, PropTime::Finite),
            PropTime::Infinite => PropTime::Infinite,
        }
    }
}

impl fmt::Display for PropTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropTime::Finite(t) => write!(f, "{t}"),
            PropTime::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for PropTime {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PropTime::Finite(t) => serializer.serialize_u32(*t),
            PropTime::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForceKind {
    DominationForce,
    ZeroForce,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ForceEvent {
    pub forcer: usize,
    pub forced: usize,
    pub round: u32,
    pub kind: ForceKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Terminal {
    Total,
    Stalled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Process {
    PowerDomination,
    ZeroForcing,
}

/// Which of several eligible vertices is credited with a force.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum ForceRule {
    /// Lowest-indexed eligible forcer (the canonical rule).
    #[default]
    LowestIndex,
    HighestIndex,
    /// Smallest rank wins; `ranks[v]` is the rank of vertex `v`.
    Ranked(Vec<usize>),
}

impl ForceRule {
    /// Rule that prefers the listed vertices in order, then falls back to index order.
    pub fn preferring(n: usize, preferred: &[usize]) -> Self {
        let mut ranks: Vec<usize> = (0..n).map(|v| n + v).collect();
        for (i, &v) in preferred.iter().enumerate() {
            if v < n {
                ranks[v] = ranks[v].min(i);
            }
        }
        ForceRule::Ranked(ranks)
    }

    fn choose(&self, candidates: &VertexSet) -> usize {
        match self {
            ForceRule::LowestIndex => candidates.first(),
            ForceRule::HighestIndex => candidates.last(),
            ForceRule::Ranked(r) => candidates.iter().min_by_key(|&v| (r.get(v).copied(), v)),
        }
        .expect("a forced vertex always has an eligible forcer")
    }
}

/// Full record of one propagation run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationTrace {
    pub process: Process,
    pub order: usize,
    pub source: VertexSet,
    /// `rounds[i]` is the set first observed in round `i`; `rounds[0]` is the source.
    pub rounds: Vec<VertexSet>,
    /// `observed_prefix[i]` is the union of `rounds[0..=i]`.
    pub observed_prefix: Vec<VertexSet>,
    pub round_of: Vec<Option<u32>>,
    pub forces: Vec<ForceEvent>,
    pub terminal: Terminal,
}

impl PropagationTrace {
    pub fn is_total(&self) -> bool {
        self.terminal == Terminal::Total
    }

    /// Number of rounds after the source; for power domination this is the
    /// power propagation time when the trace is total.
    pub fn time(&self) -> PropTime {
        match self.terminal {
            Terminal::Total => PropTime::Finite((self.rounds.len() - 1) as u32),
            Terminal::Stalled => PropTime::Infinite,
        }
    }

    pub fn observed(&self) -> VertexSet {
        *self
            .observed_prefix
            .last()
            .expect("traces have a source round")
    }

    /// `rounds[k]`, or the empty set past the end.
    pub fn round(&self, k: usize) -> VertexSet {
        self.rounds.get(k).copied().unwrap_or_default()
    }

    /// Who is credited with forcing each vertex.
    pub fn forcer_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.order];
        for f in &self.forces {
            out[f.forced] = Some(f.forcer);
        }
        out
    }

    /// Rewrites the forcer credited for `forced`. The new forcer must have
    /// been eligible in that round; the round partition is untouched.
    pub fn reassign_force(&mut self, g: &Graph, forced: usize, new_forcer: usize) -> Result<()> {
        let pos = self
            .forces
            .iter()
            .position(|f| f.forced == forced)
            .ok_or_else(|| Error::Reassignment(format!("vertex {forced} was never forced")))?;
        let ev = self.forces[pos];
        if !eligible_forcer(g, self, ev.round, ev.kind, new_forcer, forced) {
            return Err(Error::Reassignment(format!(
                "{new_forcer} cannot force {forced} in round {}",
                ev.round
            )));
        }
        self.forces[pos].forcer = new_forcer;
        Ok(())
    }

    /// Checks every structural invariant of the trace against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.order();
        if self.order != n {
            return Err("order mismatch".into());
        }
        if self.rounds.first() != Some(&self.source) {
            return Err("rounds[0] must be the source".into());
        }
        let mut acc = VertexSet::new();
        for (i, r) in self.rounds.iter().enumerate() {
            if !acc.is_disjoint(r) {
                return Err(format!("round {i} overlaps earlier rounds"));
            }
            acc |= *r;
            if self.observed_prefix[i] != acc {
                return Err(format!("observed prefix {i} is not the union of rounds"));
            }
            if i > 0 && r.is_empty() && !(i == 1 && acc.len() == n) {
                return Err(format!("empty intermediate round {i}"));
            }
        }
        if self.is_total() != (acc.len() == n) {
            return Err("terminal flag disagrees with final observed set".into());
        }
        for v in 0..n {
            let expected = self
                .rounds
                .iter()
                .position(|r| r.contains(v))
                .map(|i| i as u32);
            if self.round_of[v] != expected {
                return Err(format!("round_of[{v}] is wrong"));
            }
        }
        if self.process == Process::PowerDomination && self.rounds.len() > 2 {
            let width = self.rounds[1].len();
            if let Some(i) = (2..self.rounds.len()).find(|&i| self.rounds[i].len() > width) {
                return Err(format!("round {i} is wider than round 1"));
            }
        }
        // one force per observed non-source vertex
        let mut forced = VertexSet::new();
        let mut last_round = 0;
        for f in &self.forces {
            if !forced.insert(f.forced) {
                return Err(format!("vertex {} forced twice", f.forced));
            }
            if f.round < last_round {
                return Err("forces are not in round order".into());
            }
            last_round = f.round;
            if self.round_of[f.forced] != Some(f.round) {
                return Err(format!("force on {} recorded in the wrong round", f.forced));
            }
            match self.round_of[f.forcer] {
                Some(r) if r < f.round => {}
                _ => {
                    return Err(format!(
                        "forcer {} was not observed before round {}",
                        f.forcer, f.round
                    ))
                }
            }
            let dom = f.kind == ForceKind::DominationForce;
            let expect_dom = self.process == Process::PowerDomination && f.round == 1;
            if dom != expect_dom {
                return Err(format!("force kind mismatch on {}", f.forced));
            }
            if !eligible_forcer(g, self, f.round, f.kind, f.forcer, f.forced) {
                return Err(format!("{} -> {} is not a legal force", f.forcer, f.forced));
            }
        }
        if forced != acc - self.source {
            return Err("forced vertices differ from observed non-source vertices".into());
        }
        Ok(())
    }
}

fn eligible_forcer(
    g: &Graph,
    t: &PropagationTrace,
    round: u32,
    kind: ForceKind,
    forcer: usize,
    forced: usize,
) -> bool {
    if forcer >= g.order() || !g.has_edge(forcer, forced) {
        return false;
    }
    match kind {
        ForceKind::DominationForce => t.source.contains(forcer),
        ForceKind::ZeroForce => {
            let before = t.observed_prefix[round as usize - 1];
            before.contains(forcer) && (*g.neighbors(forcer) - before).sole_member() == Some(forced)
        }
    }
}

/// Power domination from `s` with the canonical force rule.
pub fn propagate(g: &Graph, s: &VertexSet) -> Result<PropagationTrace> {
    propagate_with(g, s, &ForceRule::LowestIndex)
}

pub fn propagate_with(g: &Graph, s: &VertexSet, rule: &ForceRule) -> Result<PropagationTrace> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_set(s)?;
    let n = g.order();
    let mut b = TraceBuilder::new(Process::PowerDomination, n, *s);

    // domination step
    let first = g.closed_neighborhood(s) - *s;
    let mut events = Vec::with_capacity(first.len());
    for w in first.iter() {
        let forcer = rule.choose(&(*g.neighbors(w) & *s));
        events.push(ForceEvent {
            forcer,
            forced: w,
            round: 1,
            kind: ForceKind::DominationForce,
        });
    }
    if first.is_empty() && b.observed.len() < n {
        return Ok(b.finish(Terminal::Stalled));
    }
    b.push_round(first, events);

    zero_force_rounds(g, &mut b, rule);
    let terminal = if b.observed.len() == n {
        Terminal::Total
    } else {
        Terminal::Stalled
    };
    Ok(b.finish(terminal))
}

/// Synchronous zero forcing from `blue`, with no domination step.
pub fn zero_forcing_propagate(g: &Graph, blue: &VertexSet) -> Result<PropagationTrace> {
    zero_forcing_propagate_with(g, blue, &ForceRule::LowestIndex)
}

pub fn zero_forcing_propagate_with(
    g: &Graph,
    blue: &VertexSet,
    rule: &ForceRule,
) -> Result<PropagationTrace> {
    g.check_set(blue)?;
    let mut b = TraceBuilder::new(Process::ZeroForcing, g.order(), *blue);
    zero_force_rounds(g, &mut b, rule);
    let terminal = if b.observed.len() == g.order() {
        Terminal::Total
    } else {
        Terminal::Stalled
    };
    Ok(b.finish(terminal))
}

fn zero_force_rounds(g: &Graph, b: &mut TraceBuilder, rule: &ForceRule) {
    let n = g.order();
    while b.observed.len() < n {
        let observed = b.observed;
        let mut next = VertexSet::new();
        let mut eligible: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for u in observed.iter() {
            if let Some(w) = (*g.neighbors(u) - observed).sole_member() {
                next.insert(w);
                eligible.entry(w).or_default().insert(u);
            }
        }
        if next.is_empty() {
            break;
        }
        let round = b.rounds.len() as u32;
        let events = eligible
            .into_iter()
            .map(|(w, cands)| ForceEvent {
                forcer: rule.choose(&cands),
                forced: w,
                round,
                kind: ForceKind::ZeroForce,
            })
            .collect();
        b.push_round(next, events);
    }
}

struct TraceBuilder {
    process: Process,
    order: usize,
    source: VertexSet,
    rounds: Vec<VertexSet>,
    prefix: Vec<VertexSet>,
    forces: Vec<ForceEvent>,
    observed: VertexSet,
}

impl TraceBuilder {
    fn new(process: Process, order: usize, source: VertexSet) -> Self {
        TraceBuilder {
            process,
            order,
            source,
            rounds: vec![source],
            prefix: vec![source],
            forces: Vec::new(),
            observed: source,
        }
    }

    fn push_round(&mut self, set: VertexSet, events: Vec<ForceEvent>) {
        self.observed |= set;
        self.rounds.push(set);
        self.prefix.push(self.observed);
        self.forces.extend(events);
    }

    fn finish(self, terminal: Terminal) -> PropagationTrace {
        let mut round_of = vec![None; self.order];
        for (i, r) in self.rounds.iter().enumerate() {
            for v in r.iter() {
                round_of[v] = Some(i as u32);
            }
        }
        PropagationTrace {
            process: self.process,
            order: self.order,
            source: self.source,
            rounds: self.rounds,
            observed_prefix: self.prefix,
            round_of,
            forces: self.forces,
            terminal,
        }
    }
}

/// Power propagation time of `s`; `Infinite` when `s` is not power dominating.
/// `pt(G; V(G)) = 1`: the domination step always counts as a round.
pub fn power_propagation_time(g: &Graph, s: &VertexSet) -> Result<PropTime> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_set(s)?;
    Ok(match time_within(g, s, u32::MAX) {
        Bounded::Done(t) => PropTime::Finite(t),
        _ => PropTime::Infinite,
    })
}

/// Outcome of a propagation run capped at a round limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bounded {
    /// Everything observed after this many rounds (within the limit).
    Done(u32),
    Stalled,
    /// Still running when the limit was reached.
    OverLimit,
}

/// Allocation-free power domination run that stops as soon as the propagation
/// time is known to exceed `limit`. `s` must be a nonempty subset of `V(G)`.
#[inline]
pub fn time_within(g: &Graph, s: &VertexSet, limit: u32) -> Bounded {
    let n = g.order();
    let mut observed = g.closed_neighborhood(s);
    if observed.len() == n {
        return Bounded::Done(1);
    }
    if observed == *s {
        return Bounded::Stalled;
    }
    let mut round = 1u32;
    // vertices that might still force
    let mut active = observed - *s;
    loop {
        if round >= limit {
            return Bounded::OverLimit;
        }
        let mut next = VertexSet::new();
        let mut still = VertexSet::new();
        for u in active.iter() {
            let open = *g.neighbors(u) - observed;
            if open.is_empty() {
                continue;
            }
            still.insert(u);
            if let Some(w) = open.sole_member() {
                next.insert(w);
            }
        }
        if next.is_empty() {
            return Bounded::Stalled;
        }
        round += 1;
        observed |= next;
        if observed.len() == n {
            return Bounded::Done(round);
        }
        active = still | next;
    }
}

/// True when `s` power dominates `g`.
pub fn is_power_dominating(g: &Graph, s: &VertexSet) -> bool {
    !s.is_empty() && matches!(time_within(g, s, u32::MAX), Bounded::Done(_))
}

/// Maximal forcing chains under the recorded forces. Each source vertex
/// starts one chain per vertex it forced (or a one-vertex chain if it forced
/// nothing); every other vertex lies on exactly one chain.
pub fn forcing_chains(trace: &PropagationTrace) -> Result<Vec<Vec<usize>>> {
    if !trace.is_total() {
        return Err(Error::Stalled);
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); trace.order];
    for f in &trace.forces {
        children[f.forcer].push(f.forced);
    }
    let mut chains = Vec::new();
    for root in trace.source.iter() {
        if children[root].is_empty() {
            chains.push(vec![root]);
            continue;
        }
        for &first in &children[root] {
            let mut chain = vec![root, first];
            let mut cur = first;
            while let Some(&next) = children[cur].first() {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }
    }
    Ok(chains)
}

/// The `f_0`, `f_1` maps on round-two vertices and the sets `Q_x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSets {
    /// `f_1(w)`: the round-one vertex that forced `w`.
    pub f1: BTreeMap<usize, usize>,
    /// `f_0(w)`: the source vertex that forced `f_1(w)`.
    pub f0: BTreeMap<usize, usize>,
    /// `Q_x` for every source vertex `x` (possibly empty).
    pub q: BTreeMap<usize, VertexSet>,
}

impl QSets {
    pub fn max_size(&self) -> usize {
        self.q.values().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn f1_is_injective(&self) -> bool {
        let images: VertexSet = self.f1.values().copied().collect();
        images.len() == self.f1.len()
    }
}

pub fn q_sets(trace: &PropagationTrace) -> Result<QSets> {
    if trace.process != Process::PowerDomination {
        return Err(Error::InvalidParameter(
            "Q sets are defined for power domination traces".into(),
        ));
    }
    if !trace.is_total() {
        return Err(Error::Stalled);
    }
    let forcer = trace.forcer_of();
    let mut out = QSets {
        f1: BTreeMap::new(),
        f0: BTreeMap::new(),
        q: trace.source.iter().map(|x| (x, VertexSet::new())).collect(),
    };
    for w in trace.round(2).iter() {
        let v1 = forcer[w].expect("round-two vertices are forced");
        let v0 = forcer[v1].expect("round-one vertices are forced");
        out.f1.insert(w, v1);
        out.f0.insert(w, v0);
        out.q
            .get_mut(&v0)
            .expect("f0 lands in the source")
            .insert(w);
    }
    Ok(out)
}

/// Reassigns domination forces on a grid trace until every `|Q_x| <= 3`.
///
/// While some `x` has `|Q_x| = 4`, pick a direction `d` with chain
/// `x → y → w` (`y` the `d`-neighbor of `x`) and credit `y` to another source
/// vertex `z` adjacent to `y` (on a grid that is a diagonal neighbor of `x`)
/// whose `Q_z` has room. The round partition never changes.
pub fn reassign_forces_grid(
    g: &Graph,
    layout: &GridLayout,
    trace: &PropagationTrace,
) -> Result<PropagationTrace> {
    if layout.graph()?.edge_set() != g.edge_set() || g.order() != layout.order() {
        return Err(Error::NotAGrid {
            rows: layout.rows,
            cols: layout.cols,
        });
    }
    let mut out = trace.clone();
    let mut q = q_sets(&out)?;
    // each successful step strictly lowers the number of size-4 sets
    while let Some((&x, _)) = q.q.iter().find(|(_, s)| s.len() >= 4) {
        let mut done = false;
        'dirs: for d in Direction::ALL {
            let Some(y) = layout.step(x, d) else { continue };
            if !q.f1.values().any(|&v1| v1 == y)
                || q.f0.iter().all(|(w, &v0)| v0 != x || q.f1[w] != y)
            {
                continue;
            }
            let mut alternatives: Vec<usize> = (*g.neighbors(y) & out.source)
                .iter()
                .filter(|&z| z != x)
                .collect();
            alternatives.sort_by(|a, b| q.q[a].len().cmp(&q.q[b].len()).then(a.cmp(b)));
            for z in alternatives {
                if q.q[&z].len() >= 3 {
                    continue;
                }
                out.reassign_force(g, y, z)?;
                q = q_sets(&out)?;
                done = true;
                break 'dirs;
            }
        }
        if !done {
            return Err(Error::Reassignment(format!(
                "no source neighbor can take over a chain from vertex {x}"
            )));
        }
    }
    Ok(out)
}

/// Orders traces by round count, used in tests.
pub fn compare_times(a: &PropagationTrace, b: &PropagationTrace) -> Ordering {
    a.time().cmp(&b.time())
}
