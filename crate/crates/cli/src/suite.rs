//! The acceptance table run by `verify-paper`.
//!
//! Each row recomputes its numbers with the engine and compares them with the
//! published values. Rows are split into a fast tier and extra instances that
//! only run in the full tier.

use std::fmt::Display;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rcx_core::arrow::{verify_free, EdgeOrder, Pruning};
use rcx_core::cert::{write_certificate, Certificate, Claim};
use rcx_core::constructions::{
    thm2_even_coloring, thm2_extension_coloring, thm3_odd_coloring, thm6_join_coloring,
};
use rcx_core::critical::{Calculator, Failure};
use rcx_core::detect::{contains, max_matching, verify_witness};
use rcx_core::params::{is_good, lemma4_bound};
use rcx_core::{
    arrows, ArrowError, DeletionClass, Graph, Pattern, SearchOptions, TwoColoring, Verdict,
};
use rcx_oracle::Shape;

use Pattern::{Clique, Cycle, Matching, Path, Star, UnionCliques};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Tier {
    Fast,
    Full,
}

impl Tier {
    /// Time limit for a single arrowing call.
    pub fn call_timeout(self) -> Duration {
        match self {
            Tier::Fast => Duration::from_secs(10),
            Tier::Full => Duration::from_secs(15 * 60),
        }
    }
}

/// Deliberate breakage used to test the harness itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Row 1 searches for a star one leaf too small.
    Detector,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub tier: Tier,
    pub search: SearchOptions,
    pub emit_certs: Option<PathBuf>,
    pub fault: Option<Fault>,
}

impl SuiteConfig {
    pub fn new(tier: Tier) -> Self {
        SuiteConfig {
            tier,
            search: SearchOptions::default().with_timeout(tier.call_timeout()),
            emit_certs: None,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Fail,
    /// A search hit its time limit; nothing was decided.
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct RowReport {
    pub id: u8,
    pub title: &'static str,
    pub status: RowStatus,
    pub checks: Vec<Check>,
    /// Set when the row stopped on an error.
    pub error: Option<String>,
    pub elapsed: Duration,
}

impl RowReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.ok)
    }

    /// One-line verdict used by the CLI and the acceptance test.
    pub fn summary(&self) -> String {
        let status = match self.status {
            RowStatus::Pass => "PASS",
            RowStatus::Fail => "FAIL",
            RowStatus::Indeterminate => "INDETERMINATE",
        };
        let detail = if let Some(e) = &self.error {
            e.clone()
        } else if let Some(c) = self.first_failure() {
            format!(
                "{}: expected {} computed {}",
                c.label, c.expected, c.computed
            )
        } else {
            format!("{} checks matched", self.checks.len())
        };
        format!(
            "criterion {:>2} {status:<13} {} ({detail}, {:.2}s)",
            self.id,
            self.title,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const ROWS: [(u8, &str); 13] = [
    (1, "star-star Ramsey numbers"),
    (2, "matching-matching Ramsey numbers"),
    (3, "K5 minus M2 arrows (M2, M2)"),
    (4, "star-critical numbers of star pairs"),
    (5, "matching-critical numbers of star pairs"),
    (6, "matching-critical numbers of matching pairs"),
    (7, "complete-critical numbers of star pairs"),
    (8, "complete-critical numbers of matching pairs"),
    (9, "star-critical identity spot checks"),
    (10, "Ramsey-full pairs"),
    (11, "explicit constructions"),
    (12, "star-critical upper bound for good pairs"),
    (13, "property suites"),
];

type RowResult = Result<(), String>;

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    id: u8,
    checks: Vec<Check>,
    timed_out: bool,
}

impl Ctx<'_> {
    fn full(&self) -> bool {
        self.cfg.tier == Tier::Full
    }

    fn calc(&self) -> Calculator {
        Calculator::new(self.cfg.search.clone()).with_max_r(9)
    }

    fn check(&mut self, label: impl Into<String>, expected: impl Display, computed: impl Display) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let ok = expected == computed;
        self.checks.push(Check {
            label: label.into(),
            expected,
            computed,
            ok,
        });
    }

    fn check_that(
        &mut self,
        label: impl Into<String>,
        expected: impl Display,
        computed: impl Display,
        ok: bool,
    ) {
        self.checks.push(Check {
            label: label.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            ok,
        });
    }

    /// Converts engine errors, remembering timeouts.
    fn engine<T, E: Into<EngineError>>(&mut self, r: Result<T, E>) -> Result<T, String> {
        r.map_err(|e| {
            let e = e.into();
            if e.timeout {
                self.timed_out = true;
            }
            e.message
        })
    }

    fn emit(&mut self, name: &str, coloring: &TwoColoring, claim: Claim, note: &str) -> RowResult {
        let Some(dir) = &self.cfg.emit_certs else {
            return Ok(());
        };
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        let file: String = name
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '-' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        let path = dir.join(format!("criterion{:02}-{file}.cert", self.id));
        write_certificate(coloring, claim, note, &path).map_err(|e| e.to_string())?;
        Ok(())
    }

    fn critical(
        &mut self,
        calc: &Calculator,
        class: DeletionClass,
        f: Pattern,
        h: Pattern,
        want: usize,
    ) -> RowResult {
        let res = calc.critical_number(class, f, h);
        let res = self.engine(res)?;
        self.check(format!("R_{}({f},{h})", class.letter()), want, res.value);
        if let Failure::Witness { index, coloring } = &res.failure {
            let note = format!(
                "K{} minus {}{index} has this ({f},{h})-free coloring",
                res.r,
                class.letter()
            );
            self.emit(
                &format!("{}-{f}-{h}", class.name()),
                coloring,
                Claim::Free { f, h },
                &note,
            )?;
        }
        Ok(())
    }
}

struct EngineError {
    message: String,
    timeout: bool,
}

impl From<ArrowError> for EngineError {
    fn from(e: ArrowError) -> Self {
        EngineError {
            timeout: matches!(e, ArrowError::Timeout { .. }),
            message: e.to_string(),
        }
    }
}

impl From<rcx_core::critical::CriticalError> for EngineError {
    fn from(e: rcx_core::critical::CriticalError) -> Self {
        use rcx_core::critical::CriticalError;
        EngineError {
            timeout: matches!(e, CriticalError::Arrow(ArrowError::Timeout { .. })),
            message: e.to_string(),
        }
    }
}

macro_rules! plain_error {
    ($($t:ty),*) => {$(
        impl From<$t> for EngineError {
            fn from(e: $t) -> Self {
                EngineError { message: e.to_string(), timeout: false }
            }
        }
    )*};
}

plain_error!(
    rcx_core::GraphError,
    rcx_core::coloring::ColoringError,
    rcx_core::params::ParamsError,
    rcx_core::constructions::ConstructionError,
    rcx_core::cert::CertError
);

/// `(m, n, full_only)` grid shared by the star-pair rows.
const STAR_GRID: [(usize, usize, bool); 9] = [
    (2, 2, false),
    (2, 4, false),
    (4, 2, false),
    (4, 4, true),
    (1, 2, false),
    (2, 3, false),
    (1, 4, false),
    (3, 3, false),
    (3, 4, true),
];

const MATCHING_GRID: [(usize, usize, bool); 5] = [
    (1, 2, false),
    (2, 2, false),
    (1, 3, false),
    (2, 3, false),
    (3, 3, true),
];

fn both_even(m: usize, n: usize) -> bool {
    m.is_multiple_of(2) && n.is_multiple_of(2)
}

fn row1(ctx: &mut Ctx) -> RowResult {
    let calc = ctx.calc();
    for m in 1..=4 {
        for n in 1..=4 {
            let want = if both_even(m, n) { m + n - 1 } else { m + n };
            let red = match ctx.cfg.fault {
                Some(Fault::Detector) => Star((m - 1).max(1)),
                None => Star(m),
            };
            let r = calc.ramsey_number(red, Star(n));
            let r = ctx.engine(r)?;
            ctx.check(format!("R(S{m},S{n})"), want, r);
        }
    }
    Ok(())
}

fn row2(ctx: &mut Ctx) -> RowResult {
    let calc = ctx.calc();
    for n in 1..=8 {
        for m in 1..=n {
            let want = 2 * n + m - 1;
            if want > 8 || (want == 8 && !ctx.full()) {
                continue;
            }
            let r = calc.ramsey_number(Matching(m), Matching(n));
            let r = ctx.engine(r)?;
            ctx.check(format!("R(M{m},M{n})"), want, r);
        }
    }
    Ok(())
}

fn row3(ctx: &mut Ctx) -> RowResult {
    let host = ctx.engine(
        Graph::complete(5).and_then(|k| k.delete_class_member(DeletionClass::Matching, 2)),
    )?;
    let res = arrows(&host, Matching(2), Matching(2), &ctx.cfg.search);
    let res = ctx.engine(res)?;
    ctx.check("K5-M2 -> (M2,M2)", Verdict::Arrows, res.verdict);
    Ok(())
}

fn star_rows(
    ctx: &mut Ctx,
    class: DeletionClass,
    formula: fn(usize, usize) -> usize,
    all_fast: bool,
) -> RowResult {
    let calc = ctx.calc();
    for (m, n, full_only) in STAR_GRID {
        if full_only && !all_fast && !ctx.full() {
            continue;
        }
        let want = if both_even(m, n) { 0 } else { formula(m, n) };
        ctx.critical(&calc, class, Star(m), Star(n), want)?;
    }
    Ok(())
}

fn row4(ctx: &mut Ctx) -> RowResult {
    star_rows(ctx, DeletionClass::Star, |m, n| m + n - 2, false)
}

fn row5(ctx: &mut Ctx) -> RowResult {
    star_rows(ctx, DeletionClass::Matching, |m, n| (m + n - 1) / 2, false)
}

fn row6(ctx: &mut Ctx) -> RowResult {
    let calc = ctx.calc();
    for (m, n, full_only) in MATCHING_GRID {
        if full_only && !ctx.full() {
            continue;
        }
        ctx.critical(
            &calc,
            DeletionClass::Matching,
            Matching(m),
            Matching(n),
            (2 * n + m - 1) / 2,
        )?;
    }
    Ok(())
}

fn row7(ctx: &mut Ctx) -> RowResult {
    star_rows(ctx, DeletionClass::Complete, |m, n| m + n - 1, true)?;
    let calc = ctx.calc();
    ctx.critical(&calc, DeletionClass::Complete, Star(1), Star(1), 0)
}

fn row8(ctx: &mut Ctx) -> RowResult {
    let calc = ctx.calc();
    for (m, n, full_only) in MATCHING_GRID {
        if full_only {
            continue;
        }
        ctx.critical(&calc, DeletionClass::Complete, Matching(m), Matching(n), n)?;
    }
    Ok(())
}

fn row9(ctx: &mut Ctx) -> RowResult {
    let calc = ctx.calc();
    // (F, H, R, r_*, closed form for r_*)
    let cases = [
        (Matching(2), Matching(2), 5, 2, 2),
        (Path(4), Clique(3), 7, 4, 4),
        (Path(5), Cycle(4), 6, 3, 3),
        (Path(4), Path(4), 5, 2, 4usize.div_ceil(2)),
    ];
    for (f, h, r, r_star, table) in cases {
        let id = calc.star_identity(f, h);
        let id = ctx.engine(id)?;
        ctx.check(format!("R({f},{h})"), r, id.r);
        ctx.check(format!("r_*({f},{h})"), r_star, id.r_star);
        ctx.check(format!("r_*({f},{h}) table value"), table, id.r_star);
        ctx.check(
            format!("R_S({f},{h}) = R - 1 - r_*"),
            id.r - 1 - id.r_star,
            id.star_critical,
        );
        if id.r_star > 0 {
            let host = ctx.engine(Graph::book_join(id.r - 1, id.r_star - 1))?;
            let w = rcx_core::find_free_coloring(&host, f, h, &ctx.cfg.search);
            if let Some(c) = ctx.engine(w)? {
                let note = format!(
                    "K{} plus a vertex of degree {} is not enough",
                    id.r - 1,
                    id.r_star - 1
                );
                ctx.emit(&format!("book-{f}-{h}"), &c, Claim::Free { f, h }, &note)?;
            }
        }
    }
    Ok(())
}

fn row10(ctx: &mut Ctx) -> RowResult {
    let calc = ctx.calc();
    let mut pairs = vec![(Clique(3), Clique(3), 6), (Clique(3), Matching(2), 5)];
    if ctx.full() {
        pairs.push((UnionCliques(2, 3), Clique(3), 8));
    }
    for (f, h, r) in pairs {
        let got = calc.ramsey_number(f, h);
        let got = ctx.engine(got)?;
        ctx.check(format!("R({f},{h})"), r, got);
        for class in DeletionClass::ALL {
            ctx.critical(&calc, class, f, h, 0)?;
        }
    }
    Ok(())
}

fn canonical_host(
    r: usize,
    class: DeletionClass,
    index: usize,
) -> Result<Graph, rcx_core::GraphError> {
    Graph::complete(r)?.delete_class_member(class, index)
}

fn row11(ctx: &mut Ctx) -> RowResult {
    let cross_opts = ctx.cfg.search.clone().with_edge_cap(45);
    let cross =
        |ctx: &mut Ctx, label: &str, c: &TwoColoring, f: Pattern, h: Pattern| -> RowResult {
            let free = ctx.engine(verify_free(c, f, h))?;
            ctx.check(format!("{label} free"), true, free.is_free());
            let res = arrows(c.host(), f, h, &cross_opts);
            let res = ctx.engine(res)?;
            ctx.check(format!("{label} search"), Verdict::NotArrows, res.verdict);
            if let Some(w) = &res.witness {
                let again = ctx.engine(verify_free(w, f, h))?;
                ctx.check(
                    format!("{label} search witness free"),
                    true,
                    again.is_free(),
                );
            }
            ctx.emit(label, c, Claim::Free { f, h }, label)
        };

    for m in (2..=8).step_by(2) {
        for n in (2..=8).step_by(2) {
            if m + n > 10 {
                continue;
            }
            let (f, h) = (Star(m), Star(n));
            let c = ctx.engine(thm2_even_coloring(m, n))?;
            let prof = c.degree_profile();
            let low = prof.iter().filter(|&&p| p == (m - 2, n - 1)).count();
            let high = prof.iter().filter(|&&p| p == (m - 1, n - 2)).count();
            ctx.check(
                format!("star-even({m},{n}) profile"),
                format!("{} + {n}", m - 2),
                format!("{low} + {high}"),
            );
            cross(ctx, &format!("star-even-{m}-{n}"), &c, f, h)?;

            let c = ctx.engine(thm2_extension_coloring(m, n))?;
            let host = ctx.engine(canonical_host(m + n - 1, DeletionClass::Star, 1))?;
            ctx.check(
                format!("star-extension({m},{n}) host"),
                true,
                c.host() == &host,
            );
            cross(ctx, &format!("star-extension-{m}-{n}"), &c, f, h)?;
        }
    }
    for m in (1..=9).step_by(2) {
        for n in (1..=9).step_by(2) {
            if m + n > 10 || m + n < 4 {
                continue;
            }
            let c = ctx.engine(thm3_odd_coloring(m, n))?;
            let host = ctx.engine(canonical_host(m + n, DeletionClass::Matching, (m + n) / 2))?;
            ctx.check(format!("star-odd({m},{n}) host"), true, c.host() == &host);
            let degrees = |g: &Graph| format!("{}..{}", g.min_degree(), g.max_degree());
            ctx.check(
                format!("star-odd({m},{n}) red and blue degrees"),
                format!("{0}..{0} {1}..{1}", m - 1, n - 1),
                format!("{} {}", degrees(c.red()), degrees(c.blue())),
            );
            cross(ctx, &format!("star-odd-{m}-{n}"), &c, Star(m), Star(n))?;
        }
    }
    for n in 2..=5 {
        for m in 1..=n {
            if 2 * n + m - 1 > 9 {
                continue;
            }
            let c = ctx.engine(thm6_join_coloring(m, n))?;
            let host = ctx.engine(canonical_host(
                2 * n + m - 1,
                DeletionClass::Complete,
                n + 1,
            ))?;
            ctx.check(
                format!("matching-join({m},{n}) host"),
                true,
                c.host() == &host,
            );
            ctx.check_that(
                format!("matching-join({m},{n}) matching numbers"),
                format!("<= {} <= {}", m - 1, n - 1),
                format!("{} {}", max_matching(c.red()), max_matching(c.blue())),
                max_matching(c.red()) < m && max_matching(c.blue()) < n,
            );
            cross(
                ctx,
                &format!("matching-join-{m}-{n}"),
                &c,
                Matching(m),
                Matching(n),
            )?;
        }
    }
    Ok(())
}

fn row12(ctx: &mut Ctx) -> RowResult {
    let calc = Calculator::new(ctx.cfg.search.clone().with_edge_cap(36)).with_max_r(9);
    let candidates = [
        (Clique(3), Path(4)),
        (Path(4), Clique(3)),
        (Cycle(4), Path(5)),
        (Path(5), Cycle(4)),
        (Path(4), Path(4)),
        (Clique(3), Path(5)),
        (Matching(2), Matching(2)),
    ];
    let mut good = 0;
    for (f, h) in candidates {
        let (fg, hg) = (ctx.engine(f.graph())?, ctx.engine(h.graph())?);
        if !hg.is_connected() {
            continue;
        }
        let r = calc.ramsey_number(f, h);
        let r = ctx.engine(r)?;
        if !ctx.engine(is_good(&fg, &hg, r))? {
            continue;
        }
        good += 1;
        let bound = ctx.engine(lemma4_bound(&fg, &hg))?;
        let rs = calc.critical_number(DeletionClass::Star, f, h);
        let rs = ctx.engine(rs)?.value;
        ctx.check_that(
            format!("R_S({f},{h})"),
            format!("<= {bound}"),
            rs,
            rs as i64 <= bound,
        );
    }
    ctx.check_that("good pairs examined", ">= 1", good, good >= 1);
    Ok(())
}

fn shape(p: Pattern) -> Shape {
    match p {
        Star(m) => Shape::star(m),
        Matching(m) => Shape::matching(m),
        Clique(m) => Shape::clique(m),
        Path(m) => Shape::path(m),
        Cycle(m) => Shape::cycle(m),
        UnionCliques(t, s) => Shape::cliques(t, s),
    }
}

fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().map(|e| (e.u, e.v)).collect()
}

/// Detectors against exhaustive embedding on seeded random graphs.
fn detector_suite(ctx: &mut Ctx) -> RowResult {
    let patterns = [
        Star(1),
        Star(2),
        Star(3),
        Star(4),
        Matching(2),
        Matching(3),
        Clique(3),
        Clique(4),
        Path(3),
        Path(4),
        Path(5),
        Path(6),
        Cycle(3),
        Cycle(4),
        Cycle(5),
        Cycle(6),
        UnionCliques(2, 3),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let (mut agree, mut total) = (0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let density: f64 = rng.gen_range(0.15..0.85);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        let g = ctx.engine(Graph::from_edges(n, edges.iter().copied()))?;
        for p in patterns {
            total += 1;
            let found = contains(&g, p);
            let sound = found.as_ref().is_none_or(|w| verify_witness(&g, w));
            if sound && found.is_some() == rcx_oracle::contains(n, &edges, &shape(p)) {
                agree += 1;
            }
        }
    }
    ctx.check("detector agreement on 1000 random graphs", total, agree);
    Ok(())
}

/// Isomorphism classes of graphs on 6 vertices with at most 6 edges.
fn micro_hosts() -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .collect();
    let perms = permutations(6);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if mask.count_ones() > 6 {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let key = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap_or_default();
        if seen.insert(key) {
            out.push(edges);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

/// Arrowing against the `2^e` enumerator on every small host.
fn micro_oracle_suite(ctx: &mut Ctx) -> RowResult {
    let patterns = [
        Star(1),
        Star(2),
        Matching(1),
        Matching(2),
        Clique(2),
        Path(2),
    ];
    let configs = [
        ctx.cfg.search.clone(),
        ctx.cfg.search.clone().with_pruning(Pruning::none()),
        ctx.cfg.search.clone().with_threads(2),
        SearchOptions {
            edge_order: EdgeOrder::DegreeDescending,
            ..ctx.cfg.search.clone()
        },
    ];
    let hosts = micro_hosts();
    let (mut agree, mut total) = (0, 0);
    for edges in &hosts {
        let g = ctx.engine(Graph::from_edges(6, edges.iter().copied()))?;
        for f in patterns {
            for h in patterns {
                let truth = rcx_oracle::arrows(6, edges, &shape(f), &shape(h));
                for opts in &configs {
                    total += 1;
                    let res = arrows(&g, f, h, opts);
                    let res = ctx.engine(res)?;
                    let witness_ok = res.witness.as_ref().is_none_or(|w| {
                        !rcx_oracle::contains(6, &edge_list(w.red()), &shape(f))
                            && !rcx_oracle::contains(6, &edge_list(w.blue()), &shape(h))
                    });
                    if (res.verdict == Verdict::Arrows) == truth && witness_ok {
                        agree += 1;
                    }
                }
            }
        }
    }
    ctx.check(
        format!("micro-oracle agreement ({} hosts)", hosts.len()),
        total,
        agree,
    );
    Ok(())
}

/// Rows 1 to 10 recomputed without any pruning must give the same values.
fn pruning_suite(ctx: &mut Ctx) -> RowResult {
    for id in 1..=10 {
        let on = run_row_with(ctx.cfg, id, &ctx.cfg.search);
        let off = run_row_with(
            ctx.cfg,
            id,
            &ctx.cfg.search.clone().with_pruning(Pruning::none()),
        );
        if on.status == RowStatus::Indeterminate || off.status == RowStatus::Indeterminate {
            ctx.timed_out = true;
        }
        let values = |r: &RowReport| {
            r.checks
                .iter()
                .map(|c| c.computed.clone())
                .collect::<Vec<_>>()
        };
        ctx.check(
            format!("pruning on/off agreement, criterion {id}"),
            values(&on).join(" "),
            values(&off).join(" "),
        );
    }
    Ok(())
}

fn certificate_suite(ctx: &mut Ctx) -> RowResult {
    let mut samples = Vec::new();
    for (m, n) in [(2, 2), (2, 4), (4, 4)] {
        samples.push((ctx.engine(thm2_even_coloring(m, n))?, Star(m), Star(n)));
        samples.push((ctx.engine(thm2_extension_coloring(m, n))?, Star(m), Star(n)));
    }
    for (m, n) in [(1, 3), (3, 3), (3, 5)] {
        samples.push((ctx.engine(thm3_odd_coloring(m, n))?, Star(m), Star(n)));
    }
    for (m, n) in [(1, 2), (2, 2), (2, 3)] {
        samples.push((
            ctx.engine(thm6_join_coloring(m, n))?,
            Matching(m),
            Matching(n),
        ));
    }
    let mut identical = 0;
    for (c, f, h) in &samples {
        let cert = ctx.engine(Certificate::new(
            c.clone(),
            Claim::Free { f: *f, h: *h },
            "round trip",
        ))?;
        let text = cert.to_text();
        let back = ctx.engine(Certificate::parse(&text))?;
        if back == cert && back.to_text() == text && back.check().is_ok() {
            identical += 1;
        }
    }
    ctx.check("certificate round trips", samples.len(), identical);
    Ok(())
}

fn determinism_suite(ctx: &mut Ctx) -> RowResult {
    let cases = [
        (
            "K5-K3",
            canonical_host(5, DeletionClass::Complete, 3),
            Matching(2),
            Matching(2),
        ),
        (
            "K6-S1",
            canonical_host(6, DeletionClass::Star, 1),
            Clique(3),
            Clique(3),
        ),
        ("K6", Graph::complete(6), Star(4), Star(3)),
        ("K7", Graph::complete(7), Matching(3), Matching(3)),
    ];
    for (name, host, f, h) in cases {
        let host = ctx.engine(host)?;
        let seq = ctx.cfg.search.clone().with_threads(1);
        let a = arrows(&host, f, h, &seq);
        let a = ctx.engine(a)?;
        let b = arrows(&host, f, h, &seq);
        let b = ctx.engine(b)?;
        ctx.check(
            format!("{name} ({f},{h}) repeat"),
            true,
            a.witness == b.witness && a.witness.is_some(),
        );
        let par = arrows(&host, f, h, &ctx.cfg.search.clone().with_threads(4));
        let par = ctx.engine(par)?;
        ctx.check(
            format!("{name} ({f},{h}) parallel"),
            true,
            par.witness == a.witness,
        );
    }
    Ok(())
}

fn row13(ctx: &mut Ctx) -> RowResult {
    detector_suite(ctx)?;
    micro_oracle_suite(ctx)?;
    pruning_suite(ctx)?;
    certificate_suite(ctx)?;
    determinism_suite(ctx)
}

fn row_fn(id: u8) -> fn(&mut Ctx) -> RowResult {
    match id {
        1 => row1,
        2 => row2,
        3 => row3,
        4 => row4,
        5 => row5,
        6 => row6,
        7 => row7,
        8 => row8,
        9 => row9,
        10 => row10,
        11 => row11,
        12 => row12,
        13 => row13,
        _ => panic!("no criterion {id}"),
    }
}

fn run_row_with(cfg: &SuiteConfig, id: u8, search: &SearchOptions) -> RowReport {
    let cfg = SuiteConfig {
        search: search.clone(),
        ..cfg.clone()
    };
    let start = Instant::now();
    let mut ctx = Ctx {
        cfg: &cfg,
        id,
        checks: Vec::new(),
        timed_out: false,
    };
    let outcome = row_fn(id)(&mut ctx);
    let status = if ctx.timed_out {
        RowStatus::Indeterminate
    } else if outcome.is_err() || ctx.checks.iter().any(|c| !c.ok) {
        RowStatus::Fail
    } else {
        RowStatus::Pass
    };
    RowReport {
        id,
        title: ROWS[id as usize - 1].1,
        status,
        checks: ctx.checks,
        error: outcome.err(),
        elapsed: start.elapsed(),
    }
}

/// Runs one criterion (1 to 13).
pub fn run_row(cfg: &SuiteConfig, id: u8) -> RowReport {
    run_row_with(cfg, id, &cfg.search)
}

pub fn run_suite(cfg: &SuiteConfig) -> Vec<RowReport> {
    ROWS.iter().map(|&(id, _)| run_row(cfg, id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn micro_host_classes() {
        // Graphs with at most 6 edges on 6 vertices, up to isomorphism.
        let hosts = micro_hosts();
        assert_eq!(hosts.iter().filter(|e| e.len() == 1).count(), 1);
        assert_eq!(hosts.iter().filter(|e| e.len() == 2).count(), 2);
        assert_eq!(hosts.iter().filter(|e| e.len() == 3).count(), 5);
    }

    #[test]
    fn claim_one_row_passes() {
        let report = run_row(&SuiteConfig::new(Tier::Fast), 3);
        assert_eq!(report.status, RowStatus::Pass, "{}", report.summary());
    }

    #[test]
    fn injected_fault_fails_row_one() {
        let mut cfg = SuiteConfig::new(Tier::Fast);
        cfg.fault = Some(Fault::Detector);
        let report = run_row(&cfg, 1);
        assert_eq!(report.status, RowStatus::Fail);
        assert!(report.summary().contains("criterion  1 FAIL"));
    }
}
