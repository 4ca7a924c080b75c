//! `rcx`: command-line access to the arrowing engine.
//!
//! Exit statuses: 0 computed (whatever the verdict), 1 a check or claim
//! failed, 2 usage, parse or size-limit error, 3 a search timed out.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rcx_core::arrow::{ArrowError, Pruning};
use rcx_core::cert::{check_certificate, write_certificate, CertError, Claim};
use rcx_core::constructions::ConstructionKind;
use rcx_core::critical::{
    closed_form, critical_closed_form, star_critical_closed_form, Calculator, CriticalError,
    Failure,
};
use rcx_core::params::{graph_params, ParamsError, TAU_INTERPRETATION};
use rcx_core::{
    arrows, find_free_coloring, DeletionClass, Graph, Pattern, SearchOptions, TwoColoring,
};

pub mod spec;
pub mod suite;

use spec::GraphSpec;
use suite::{Fault, RowStatus, SuiteConfig, Tier};

#[derive(Debug, Parser)]
#[command(
    name = "rcx",
    version,
    about = "Exact Ramsey arrowing and critical Ramsey numbers for small graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Worker threads for the search.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Limit per arrowing call, in seconds (default: the tier's limit).
    #[arg(long, global = true, value_name = "SECS")]
    pub timeout: Option<f64>,
    /// Single-threaded search with reproducible witnesses.
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Print plain `key: value` lines.
    #[arg(long, global = true)]
    pub porcelain: bool,
    /// fast: 10 s per arrowing call; full: 15 min and the slow acceptance rows.
    #[arg(long, global = true, value_enum, default_value_t = Tier::Fast)]
    pub tier: Tier,
    /// Pruning techniques to switch off.
    #[arg(long, global = true, value_enum, value_delimiter = ',')]
    pub disable: Vec<PruneToggle>,
    /// Largest host edge count the search accepts.
    #[arg(long, global = true, default_value_t = rcx_core::arrow::DEFAULT_EDGE_CAP)]
    pub edge_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PruneToggle {
    ColorSwap,
    Orbits,
    Hints,
    Anchored,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether HOST -> (RED, BLUE).
    Arrows {
        #[arg(long)]
        host: GraphSpec,
        #[arg(long)]
        red: Pattern,
        #[arg(long)]
        blue: Pattern,
        /// Write a certificate for the free coloring if one exists.
        #[arg(long, value_name = "PATH")]
        witness: Option<PathBuf>,
    },
    /// Ramsey number R(RED, BLUE).
    Ramsey {
        #[arg(long)]
        red: Pattern,
        #[arg(long)]
        blue: Pattern,
        #[arg(long, default_value_t = 10)]
        max_r: usize,
        #[arg(long, value_name = "DIR")]
        emit_certs: Option<PathBuf>,
    },
    /// Critical Ramsey number for a deletion class.
    Critical {
        #[arg(long)]
        class: DeletionClass,
        #[arg(long)]
        red: Pattern,
        #[arg(long)]
        blue: Pattern,
        #[arg(long, default_value_t = 10)]
        max_r: usize,
        #[arg(long, value_name = "DIR")]
        emit_certs: Option<PathBuf>,
    },
    /// Star-critical number r_*(RED, BLUE).
    StarCritical {
        #[arg(long)]
        red: Pattern,
        #[arg(long)]
        blue: Pattern,
        #[arg(long, default_value_t = 10)]
        max_r: usize,
        #[arg(long, value_name = "DIR")]
        emit_certs: Option<PathBuf>,
    },
    /// Graph parameters used by the goodness bounds.
    Params {
        #[arg(long)]
        graph: GraphSpec,
    },
    /// Build an explicit extremal coloring.
    Construct {
        #[arg(value_parser = clap::value_parser!(ConstructionKind))]
        kind: ConstructionKind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Certificate output path.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file.
    CheckCert { path: PathBuf },
    /// Run the acceptance table.
    VerifyPaper {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[arg(long, value_name = "DIR")]
        emit_certs: Option<PathBuf>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

/// A failed command and the exit status it maps to.
#[derive(Debug)]
pub struct Failed {
    pub code: i32,
    pub message: String,
}

impl Failed {
    fn usage(message: impl ToString) -> Self {
        Failed {
            code: 2,
            message: message.to_string(),
        }
    }

    fn mismatch(message: impl ToString) -> Self {
        Failed {
            code: 1,
            message: message.to_string(),
        }
    }
}

impl From<ArrowError> for Failed {
    fn from(e: ArrowError) -> Self {
        let code = match e {
            ArrowError::Timeout { .. } => 3,
            ArrowError::WitnessRejected(_) => 1,
            ArrowError::EdgeCap { .. } | ArrowError::Pattern(_) => 2,
        };
        Failed {
            code,
            message: e.to_string(),
        }
    }
}

impl From<CriticalError> for Failed {
    fn from(e: CriticalError) -> Self {
        match e {
            CriticalError::Arrow(a) => a.into(),
            other => Failed::usage(other),
        }
    }
}

impl From<CertError> for Failed {
    fn from(e: CertError) -> Self {
        match e {
            CertError::ClaimViolated { .. } | CertError::ClaimUnmet { .. } => Failed::mismatch(e),
            _ => Failed::usage(e),
        }
    }
}

impl From<ParamsError> for Failed {
    fn from(e: ParamsError) -> Self {
        Failed::usage(e)
    }
}

impl From<spec::SpecError> for Failed {
    fn from(e: spec::SpecError) -> Self {
        Failed::usage(e)
    }
}

impl From<rcx_core::GraphError> for Failed {
    fn from(e: rcx_core::GraphError) -> Self {
        Failed::usage(e)
    }
}

impl From<rcx_core::constructions::ConstructionError> for Failed {
    fn from(e: rcx_core::constructions::ConstructionError) -> Self {
        use rcx_core::constructions::ConstructionError;
        match e {
            ConstructionError::NotFree { .. } => Failed::mismatch(e),
            _ => Failed::usage(e),
        }
    }
}

/// Report lines, printed as `key: value`.
pub struct Report<'a> {
    out: &'a mut dyn Write,
    porcelain: bool,
}

impl Report<'_> {
    fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = if self.porcelain {
            writeln!(self.out, "{key}: {value}")
        } else {
            writeln!(self.out, "{:<14} {value}", format!("{key}:"))
        };
    }
}

impl GlobalArgs {
    pub fn search_options(&self) -> Result<SearchOptions, Failed> {
        let timeout = match self.timeout {
            Some(s) if !(s.is_finite() && s >= 0.0) => {
                return Err(Failed::usage(format!("invalid --timeout {s}")))
            }
            Some(s) => Duration::from_secs_f64(s),
            None => self.tier.call_timeout(),
        };
        let mut pruning = Pruning::all();
        for t in &self.disable {
            match t {
                PruneToggle::ColorSwap => pruning.color_swap = false,
                PruneToggle::Orbits => pruning.orbit_breaking = false,
                PruneToggle::Hints => pruning.hints = false,
                PruneToggle::Anchored => pruning.anchored_checks = false,
                PruneToggle::All => pruning = Pruning::none(),
            }
        }
        let mut opts = SearchOptions::default()
            .with_threads(self.threads)
            .with_timeout(timeout)
            .with_pruning(pruning)
            .with_edge_cap(self.edge_cap);
        if self.deterministic {
            opts.deterministic = true;
        }
        Ok(opts)
    }
}

fn emit(
    dir: &Option<PathBuf>,
    name: &str,
    c: &TwoColoring,
    claim: Claim,
    note: &str,
    report: &mut Report,
) -> Result<(), Failed> {
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failed::usage(format!("{}: {e}", dir.display())))?;
        let path = dir.join(name);
        write_certificate(c, claim, note, &path)?;
        report.line("certificate", path.display());
    }
    Ok(())
}

fn write_witness(
    path: &Path,
    c: &TwoColoring,
    f: Pattern,
    h: Pattern,
    note: &str,
) -> Result<(), Failed> {
    write_certificate(c, Claim::Free { f, h }, note, path)?;
    Ok(())
}

/// Runs a parsed command, writing its report to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failed> {
    let opts = cli.global.search_options()?;
    let mut report = Report {
        out,
        porcelain: cli.global.porcelain,
    };
    let r = &mut report;
    match &cli.command {
        Command::Arrows {
            host,
            red,
            blue,
            witness,
        } => {
            let g = host.build()?;
            let res = arrows(&g, *red, *blue, &opts)?;
            r.line("verdict", res.verdict);
            r.line(
                "host",
                format!("{host} ({} vertices, {} edges)", g.n(), g.edge_count()),
            );
            r.line("pair", format!("{red} {blue}"));
            r.line("nodes", res.stats.nodes);
            r.line("prunes", res.stats.prunes);
            r.line("elapsed_ms", res.stats.elapsed.as_millis());
            if let Some(c) = &res.witness {
                r.line("canonical", res.canonical);
                if let Some(path) = witness {
                    write_witness(path, c, *red, *blue, &format!("free coloring of {host}"))?;
                    r.line("witness", path.display());
                }
            } else if witness.is_some() {
                r.line("witness", "none, the host arrows");
            }
        }
        Command::Ramsey {
            red,
            blue,
            max_r,
            emit_certs,
        } => {
            let calc = Calculator::new(opts.clone()).with_max_r(*max_r);
            let n = calc.ramsey_number(*red, *blue)?;
            r.line("ramsey", n);
            if n >= 2 {
                let below = Graph::complete(n - 1)?;
                if let Some(c) = find_free_coloring(&below, *red, *blue, &opts)? {
                    let note = format!("K{} has a ({red},{blue})-free coloring", n - 1);
                    emit(
                        emit_certs,
                        &format!("ramsey-{red}-{blue}-K{}.cert", n - 1),
                        &c,
                        Claim::Free { f: *red, h: *blue },
                        &note,
                        r,
                    )?;
                }
            }
            if let Some(want) = closed_form(*red, *blue) {
                r.line("closed_form", want);
                if want != n {
                    return Err(Failed::mismatch(format!(
                        "search gives {n}, closed form {want}"
                    )));
                }
            }
        }
        Command::Critical {
            class,
            red,
            blue,
            max_r,
            emit_certs,
        } => {
            let calc = Calculator::new(opts).with_max_r(*max_r);
            let res = calc.critical_number(*class, *red, *blue)?;
            r.line("class", class);
            r.line("ramsey", res.r);
            r.line("value", res.value);
            if let Some(a) = &res.arrowing {
                r.line(
                    "arrows_at",
                    format!("K{} minus {}{}", res.r, class.letter(), a.index),
                );
            }
            match &res.failure {
                Failure::Witness { index, coloring } => {
                    r.line(
                        "fails_at",
                        format!("K{} minus {}{index}", res.r, class.letter()),
                    );
                    let note = format!(
                        "K{} minus {}{index} has a ({red},{blue})-free coloring",
                        res.r,
                        class.letter()
                    );
                    emit(
                        emit_certs,
                        &format!("critical-{}-{red}-{blue}-{index}.cert", class.name()),
                        coloring,
                        Claim::Free { f: *red, h: *blue },
                        &note,
                        r,
                    )?;
                }
                Failure::ClassExhausted { index } => {
                    r.line(
                        "fails_at",
                        format!("{}{index} does not fit in K{}", class.letter(), res.r),
                    );
                }
            }
            if let Some(want) = critical_closed_form(*class, *red, *blue) {
                r.line("closed_form", want);
                if want != res.value {
                    return Err(Failed::mismatch(format!(
                        "search gives {}, closed form {want}",
                        res.value
                    )));
                }
            }
        }
        Command::StarCritical {
            red,
            blue,
            max_r,
            emit_certs,
        } => {
            let calc = Calculator::new(opts.clone()).with_max_r(*max_r);
            let id = calc.star_identity(*red, *blue)?;
            r.line("ramsey", id.r);
            r.line("r_star", id.r_star);
            r.line("star_critical", id.star_critical);
            r.line("identity", if id.holds() { "holds" } else { "fails" });
            if id.r_star > 0 {
                let host = Graph::book_join(id.r - 1, id.r_star - 1)?;
                if let Some(c) = find_free_coloring(&host, *red, *blue, &opts)? {
                    let note = format!(
                        "K{}+S{} has a ({red},{blue})-free coloring",
                        id.r - 1,
                        id.r_star - 1
                    );
                    emit(
                        emit_certs,
                        &format!("star-critical-{red}-{blue}.cert"),
                        &c,
                        Claim::Free { f: *red, h: *blue },
                        &note,
                        r,
                    )?;
                }
            }
            if let Some(want) = star_critical_closed_form(*red, *blue) {
                r.line("closed_form", want);
                if want != id.r_star {
                    return Err(Failed::mismatch(format!(
                        "search gives {}, closed form {want}",
                        id.r_star
                    )));
                }
            }
            if !id.holds() {
                return Err(Failed::mismatch("R_S = R - 1 - r_* does not hold"));
            }
        }
        Command::Params { graph } => {
            let g = graph.build()?;
            let p = graph_params(&g)?;
            r.line("v", p.order);
            r.line("e", p.size);
            r.line("delta", p.min_degree);
            r.line("nu", p.matching_number);
            r.line("omega", p.clique_number);
            r.line("chi", p.chromatic_number);
            r.line("s", p.chromatic_surplus);
            r.line(
                "tau",
                p.tau
                    .map_or_else(|| "undefined".to_string(), |t| t.to_string()),
            );
            r.line("tau_rule", TAU_INTERPRETATION);
        }
        Command::Construct { kind, m, n, out } => {
            let c = kind.build(*m, *n)?;
            r.line("construction", kind);
            r.line(
                "host",
                format!(
                    "{} vertices, {} edges",
                    c.coloring.host().n(),
                    c.coloring.host().edge_count()
                ),
            );
            r.line("pair", format!("{} {}", c.f, c.h));
            r.line("verified", format!("free of ({}, {})", c.f, c.h));
            r.line("note", &c.note);
            if let Some(path) = out {
                write_witness(path, &c.coloring, c.f, c.h, &c.note)?;
                r.line("certificate", path.display());
            }
        }
        Command::CheckCert { path } => {
            let (cert, verified) = check_certificate(path)?;
            r.line("claim", cert.claim);
            r.line("verdict", format!("re-proved, {verified}"));
        }
        Command::VerifyPaper {
            only,
            emit_certs,
            inject_fault,
        } => {
            let cfg = SuiteConfig {
                tier: cli.global.tier,
                search: opts,
                emit_certs: emit_certs.clone(),
                fault: *inject_fault,
            };
            let ids: Vec<u8> = if only.is_empty() {
                suite::ROWS.iter().map(|&(id, _)| id).collect()
            } else {
                only.clone()
            };
            if let Some(bad) = ids.iter().find(|&&id| !(1..=13).contains(&id)) {
                return Err(Failed::usage(format!("no criterion {bad}")));
            }
            let mut failed = Vec::new();
            let mut undecided = Vec::new();
            for id in ids {
                let row = suite::run_row(&cfg, id);
                if r.porcelain {
                    let status = match row.status {
                        RowStatus::Pass => "pass",
                        RowStatus::Fail => "fail",
                        RowStatus::Indeterminate => "indeterminate",
                    };
                    r.line(
                        &format!("criterion_{id}"),
                        format!("{status}; {}", row.summary()),
                    );
                } else {
                    let _ = writeln!(r.out, "{}", row.summary());
                }
                match row.status {
                    RowStatus::Pass => {}
                    RowStatus::Fail => failed.push(id),
                    RowStatus::Indeterminate => undecided.push(id),
                }
            }
            if !failed.is_empty() {
                let ids: Vec<String> = failed.iter().map(|i| i.to_string()).collect();
                return Err(Failed::mismatch(format!(
                    "failed criteria: {}",
                    ids.join(", ")
                )));
            }
            if !undecided.is_empty() {
                let ids: Vec<String> = undecided.iter().map(|i| i.to_string()).collect();
                return Err(Failed {
                    code: 3,
                    message: format!("timed out in criteria: {}", ids.join(", ")),
                });
            }
        }
    }
    Ok(())
}

/// Parses arguments, runs, prints errors and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(()) => 0,
        Err(f) => {
            let _ = lock.flush();
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
