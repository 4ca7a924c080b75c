//! Exhaustive decision of `G → (F, H)`.
//!
//! Edges of the host are colored one at a time in a fixed order, red before
//! blue. After each assignment the search asks whether the newly colored edge
//! completed a red `F` or a blue `H`; if so the branch is cut. A complete
//! assignment that survives is an `(F, H)`-free coloring and is returned as a
//! counterexample after independent re-verification.
//!
//! Two symmetry reductions are available, both applied to the first edge only:
//! when `F = H` the first edge is fixed red (swapping colors maps free
//! colorings to free colorings), and for recognized hosts a blue first edge
//! forces its whole automorphism orbit blue (otherwise an automorphism would
//! move some red orbit edge onto the first edge, a case the red branch covers).
//! Both preserve the lexicographically least free coloring.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{Color, ColoringError, TwoColoring};
use crate::detect::{
    find_in, hint_in, occurs_through_edge, Pattern, PatternError, WitnessSubgraph,
};
use crate::graph::{bit, EdgeId, Graph};
use crate::orbits::HostForm;

pub const DEFAULT_EDGE_CAP: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrder {
    Lexicographic,
    /// Vertices ranked by host degree (descending, ties by label), edges
    /// ordered lexicographically by endpoint rank.
    DegreeDescending,
}

/// Optional accelerations. With everything off the search still cuts a
/// branch as soon as a prefix contains a pattern, but decides that with the
/// full detectors on every node and uses no symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pruning {
    pub color_swap: bool,
    pub orbit_breaking: bool,
    pub hints: bool,
    /// Decide new occurrences with edge-anchored detectors instead of the
    /// full detectors.
    pub anchored_checks: bool,
}

impl Pruning {
    pub fn all() -> Self {
        Pruning {
            color_swap: true,
            orbit_breaking: true,
            hints: true,
            anchored_checks: true,
        }
    }

    pub fn none() -> Self {
        Pruning {
            color_swap: false,
            orbit_breaking: false,
            hints: false,
            anchored_checks: false,
        }
    }
}

impl Default for Pruning {
    fn default() -> Self {
        Pruning::all()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; `1` runs the plain sequential search.
    pub threads: usize,
    pub timeout: Option<Duration>,
    /// Forces a single thread.
    pub deterministic: bool,
    pub edge_cap: usize,
    pub edge_order: EdgeOrder,
    pub pruning: Pruning,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: 1,
            timeout: None,
            deterministic: true,
            edge_cap: DEFAULT_EDGE_CAP,
            edge_order: EdgeOrder::Lexicographic,
            pruning: Pruning::all(),
        }
    }
}

impl SearchOptions {
    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }

    pub fn with_pruning(mut self, pruning: Pruning) -> Self {
        self.pruning = pruning;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self.deterministic = threads <= 1;
        self
    }

    pub fn with_edge_cap(mut self, cap: usize) -> Self {
        self.edge_cap = cap;
        self
    }

    fn workers(&self) -> usize {
        if self.deterministic {
            1
        } else {
            self.threads.max(1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Arrows,
    NotArrows,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Arrows => "Arrows",
            Verdict::NotArrows => "NotArrows",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowResult {
    pub verdict: Verdict,
    /// Present iff the verdict is `NotArrows`.
    pub witness: Option<TwoColoring>,
    pub stats: SearchStats,
    /// The witness is the lexicographically least free coloring in the
    /// search's edge order (always true for sequential runs).
    pub canonical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrowError {
    #[error("host has {edges} edges, above the cap of {cap}")]
    EdgeCap { edges: usize, cap: usize },
    #[error("indeterminate: search timed out after {elapsed:?} ({nodes} nodes)")]
    Timeout { elapsed: Duration, nodes: u64 },
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("engine produced a coloring that fails re-verification: {0}")]
    WitnessRejected(String),
}

/// Outcome of checking a coloring against `(F, H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeCheck {
    Free,
    Violated {
        color: Color,
        witness: WitnessSubgraph,
    },
}

impl FreeCheck {
    pub fn is_free(&self) -> bool {
        matches!(self, FreeCheck::Free)
    }
}

/// Re-runs the detectors on both color classes.
pub fn verify_free(c: &TwoColoring, f: Pattern, h: Pattern) -> Result<FreeCheck, ColoringError> {
    c.check()?;
    if let Some(w) = crate::detect::contains(c.red(), f) {
        return Ok(FreeCheck::Violated {
            color: Color::Red,
            witness: w,
        });
    }
    if let Some(w) = crate::detect::contains(c.blue(), h) {
        return Ok(FreeCheck::Violated {
            color: Color::Blue,
            witness: w,
        });
    }
    Ok(FreeCheck::Free)
}

/// Decides `host → (f, h)`.
pub fn arrows(
    host: &Graph,
    f: Pattern,
    h: Pattern,
    opts: &SearchOptions,
) -> Result<ArrowResult, ArrowError> {
    f.validate()?;
    h.validate()?;
    let edges = host.edge_count();
    if edges > opts.edge_cap {
        return Err(ArrowError::EdgeCap {
            edges,
            cap: opts.edge_cap,
        });
    }
    let start = Instant::now();
    let problem = Problem::new(host, f, h, opts, start);
    let (found, mut stats, canonical) = if opts.workers() == 1 {
        problem.run_sequential()?
    } else {
        problem.run_parallel(opts.workers())?
    };
    stats.elapsed = start.elapsed();
    match found {
        None => Ok(ArrowResult {
            verdict: Verdict::Arrows,
            witness: None,
            stats,
            canonical: true,
        }),
        Some(colors) => {
            let witness = problem.coloring(&colors);
            match verify_free(&witness, f, h) {
                Ok(FreeCheck::Free) => Ok(ArrowResult {
                    verdict: Verdict::NotArrows,
                    witness: Some(witness),
                    stats,
                    canonical,
                }),
                Ok(FreeCheck::Violated { color, witness: w }) => Err(ArrowError::WitnessRejected(
                    format!("{color} {} on {:?}", w.pattern, w.vertices),
                )),
                Err(e) => Err(ArrowError::WitnessRejected(e.to_string())),
            }
        }
    }
}

/// First free coloring found by the deterministic search, if any.
pub fn find_free_coloring(
    host: &Graph,
    f: Pattern,
    h: Pattern,
    opts: &SearchOptions,
) -> Result<Option<TwoColoring>, ArrowError> {
    Ok(arrows(host, f, h, opts)?.witness)
}

struct Problem {
    host: Graph,
    edges: Vec<EdgeId>,
    red: Pattern,
    blue: Pattern,
    pruning: Pruning,
    fix_first_red: bool,
    /// Positions (after 0) forced blue when edge 0 is blue.
    first_orbit: Vec<usize>,
    start: Instant,
    deadline: Option<Instant>,
}

type Colors = Vec<Color>;

enum Outcome {
    Found,
    Exhausted,
    Stopped,
}

impl Problem {
    fn new(
        host: &Graph,
        red: Pattern,
        blue: Pattern,
        opts: &SearchOptions,
        start: Instant,
    ) -> Self {
        let edges = order_edges(host, opts.edge_order);
        let pruning = opts.pruning;
        let fix_first_red = pruning.color_swap && red == blue;
        let mut first_orbit = Vec::new();
        if pruning.orbit_breaking && !fix_first_red && !edges.is_empty() {
            if let Some(form) = HostForm::recognize(host) {
                let orbit = form.edge_orbit(edges[0]);
                first_orbit = edges
                    .iter()
                    .enumerate()
                    .skip(1)
                    .filter(|(_, e)| orbit.binary_search(e).is_ok())
                    .map(|(i, _)| i)
                    .collect();
            }
        }
        Problem {
            host: host.clone(),
            edges,
            red,
            blue,
            pruning,
            fix_first_red,
            first_orbit,
            start,
            deadline: opts.timeout.map(|t| start + t),
        }
    }

    fn coloring(&self, colors: &[Color]) -> TwoColoring {
        let red = self
            .edges
            .iter()
            .zip(colors)
            .filter(|(_, c)| **c == Color::Red)
            .map(|(e, _)| (e.u, e.v));
        TwoColoring::from_red_edges(self.host.clone(), red).expect("search edges are host edges")
    }

    fn run_sequential(&self) -> Result<(Option<Colors>, SearchStats, bool), ArrowError> {
        let cancel = AtomicUsize::new(usize::MAX);
        let mut w = Worker::new(self, &cancel, 0);
        let outcome = w.dfs(0, None);
        let stats = w.stats();
        match outcome {
            Outcome::Found => Ok((Some(w.colors), stats, true)),
            Outcome::Exhausted => Ok((None, stats, true)),
            Outcome::Stopped => Err(self.timeout(stats)),
        }
    }

    /// Splits the tree at a fixed depth; subtrees run on a rayon pool.
    ///
    /// A task stops early only when a task earlier in search order has already
    /// found a witness, so the least surviving index yields the same witness
    /// as the sequential search.
    fn run_parallel(
        &self,
        threads: usize,
    ) -> Result<(Option<Colors>, SearchStats, bool), ArrowError> {
        let cancel = AtomicUsize::new(usize::MAX);
        let target = (threads * 16).next_power_of_two().trailing_zeros() as usize;
        let depth = target.min(self.edges.len());
        let mut frontier = Vec::new();
        let mut root = Worker::new(self, &cancel, 0);
        let outcome = root.dfs(0, Some((depth, &mut frontier)));
        let mut stats = root.stats();
        match outcome {
            Outcome::Stopped => return Err(self.timeout(stats)),
            Outcome::Found => return Ok((Some(root.colors), stats, true)),
            Outcome::Exhausted => {}
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| ArrowError::WitnessRejected(format!("thread pool: {e}")))?;
        let results: Vec<(Outcome, Colors, SearchStats)> = pool.install(|| {
            frontier
                .par_iter()
                .enumerate()
                .map(|(index, prefix)| {
                    let mut w = Worker::new(self, &cancel, index);
                    if cancel.load(Ordering::Relaxed) < index {
                        return (Outcome::Stopped, Vec::new(), w.stats());
                    }
                    w.replay(prefix);
                    let outcome = w.dfs(depth, None);
                    if let Outcome::Found = outcome {
                        cancel.fetch_min(index, Ordering::Relaxed);
                    }
                    let s = w.stats();
                    (outcome, w.colors, s)
                })
                .collect()
        });
        let mut timed_out = false;
        let mut found = None;
        for (index, (outcome, colors, s)) in results.into_iter().enumerate() {
            stats.nodes += s.nodes;
            stats.prunes += s.prunes;
            match outcome {
                Outcome::Found if found.is_none() => found = Some((index, colors)),
                Outcome::Stopped
                    if found.is_none()
                    // Cancelled tasks sit after the winner; anything else is a timeout.
                    && cancel.load(Ordering::Relaxed) > index =>
                {
                    timed_out = true;
                }
                _ => {}
            }
        }
        match found {
            Some((_, colors)) => Ok((Some(colors), stats, !timed_out)),
            None if timed_out => Err(self.timeout(stats)),
            None => Ok((None, stats, true)),
        }
    }

    fn timeout(&self, stats: SearchStats) -> ArrowError {
        ArrowError::Timeout {
            elapsed: self.start.elapsed(),
            nodes: stats.nodes,
        }
    }
}

struct Worker<'a> {
    p: &'a Problem,
    red: Vec<u64>,
    blue: Vec<u64>,
    colors: Colors,
    forced_blue: Vec<bool>,
    nodes: u64,
    prunes: u64,
    cancel: &'a AtomicUsize,
    index: usize,
}

impl<'a> Worker<'a> {
    fn new(p: &'a Problem, cancel: &'a AtomicUsize, index: usize) -> Self {
        let n = p.host.n();
        Worker {
            p,
            red: vec![0; n],
            blue: vec![0; n],
            colors: Vec::with_capacity(p.edges.len()),
            forced_blue: vec![false; p.edges.len()],
            nodes: 0,
            prunes: 0,
            cancel,
            index,
        }
    }

    fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes,
            prunes: self.prunes,
            elapsed: Duration::ZERO,
        }
    }

    fn toggle(&mut self, e: EdgeId, c: Color) {
        let adj = match c {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        };
        adj[e.u] ^= bit(e.v);
        adj[e.v] ^= bit(e.u);
    }

    fn set_orbit(&mut self, forced: bool) {
        for &i in &self.p.first_orbit {
            self.forced_blue[i] = forced;
        }
    }

    fn replay(&mut self, prefix: &[Color]) {
        for (i, &c) in prefix.iter().enumerate() {
            self.toggle(self.p.edges[i], c);
            if i == 0 && c == Color::Blue {
                self.set_orbit(true);
            }
            self.colors.push(c);
        }
    }

    fn creates_pattern(&self, e: EdgeId, c: Color) -> bool {
        let (adj, pat) = match c {
            Color::Red => (&self.red, self.p.red),
            Color::Blue => (&self.blue, self.p.blue),
        };
        let pr = self.p.pruning;
        (pr.hints && hint_in(adj, pat, e))
            || if pr.anchored_checks {
                occurs_through_edge(adj, pat, e)
            } else {
                find_in(adj, pat).is_some()
            }
    }

    fn should_stop(&self) -> bool {
        if self.nodes & 0x3ff == 1 {
            if let Some(d) = self.p.deadline {
                if Instant::now() >= d {
                    return true;
                }
            }
        }
        self.cancel.load(Ordering::Relaxed) < self.index
    }

    /// Depth-first search from `depth`. With `frontier`, nodes at the split
    /// depth are recorded instead of expanded.
    fn dfs(&mut self, depth: usize, mut frontier: Option<(usize, &mut Vec<Colors>)>) -> Outcome {
        if depth == self.p.edges.len() {
            return Outcome::Found;
        }
        if let Some((limit, out)) = frontier.as_mut() {
            if depth == *limit {
                out.push(self.colors.clone());
                return Outcome::Exhausted;
            }
        }
        self.nodes += 1;
        if self.should_stop() {
            return Outcome::Stopped;
        }
        let e = self.p.edges[depth];
        let choices: &[Color] = if depth == 0 && self.p.fix_first_red {
            &[Color::Red]
        } else if self.forced_blue[depth] {
            &[Color::Blue]
        } else {
            &[Color::Red, Color::Blue]
        };
        for &c in choices {
            self.toggle(e, c);
            if self.creates_pattern(e, c) {
                self.prunes += 1;
                self.toggle(e, c);
                continue;
            }
            let orbit_forced = depth == 0 && c == Color::Blue && !self.p.first_orbit.is_empty();
            if orbit_forced {
                self.set_orbit(true);
            }
            self.colors.push(c);
            match self.dfs(depth + 1, frontier.as_mut().map(|(l, o)| (*l, &mut **o))) {
                Outcome::Exhausted => {}
                other => return other,
            }
            self.colors.pop();
            if orbit_forced {
                self.set_orbit(false);
            }
            self.toggle(e, c);
        }
        Outcome::Exhausted
    }
}

fn order_edges(host: &Graph, order: EdgeOrder) -> Vec<EdgeId> {
    match order {
        EdgeOrder::Lexicographic => host.edges().collect(),
        EdgeOrder::DegreeDescending => {
            let mut by_degree: Vec<usize> = (0..host.n()).collect();
            by_degree.sort_by_key(|&v| (std::cmp::Reverse(host.degree(v)), v));
            let mut rank = vec![0; host.n()];
            for (i, &v) in by_degree.iter().enumerate() {
                rank[v] = i;
            }
            let mut edges: Vec<EdgeId> = host.edges().collect();
            edges.sort_by_key(|e| {
                let (a, b) = (rank[e.u], rank[e.v]);
                (a.min(b), a.max(b))
            });
            edges
        }
    }
}
