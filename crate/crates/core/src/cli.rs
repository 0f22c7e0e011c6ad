//! Command-line front end.
//!
//! ```text
//! cesaro verify --theorem T3.1 --alpha 0.25,0.5 [--tol 1e-2] [--format json|csv] [--output PATH]
//! cesaro table --alpha-grid 0.1:0.5:0.1 [--format json|csv] [--output PATH]
//! cesaro empirical --source korenblum --target korenblum --alpha 0.25 --samples 200 --seed 7
//! cesaro dump-integrand --theorem T5.1 --alpha 0.5 --radii 0,0.9 --t-points 101 [--output PATH]
//! ```
//!
//! Exit status is 0 when every verdict passes, 1 when one fails and 2 on a
//! usage error. `--no-timestamp` drops `wall_time` so reports are
//! byte-reproducible. `CESARO_THREADS` caps the worker pool.
//!
//! CSV columns:
//!
//! * `verify`: `theorem_id,alpha,theoretical,computed,tolerance,passed,notes`
//! * `table`: `alpha,t31_exact,t41_sup,t41_lower_bound,t51_sup,t51_inverse_alpha,t62_upper,t63_lower,t71_bounds`
//! * `empirical`: one row with the fields of [`EmpiricalSummary`]
//! * `dump-integrand`: `r,t,integrand`, plus `log_ratio` for T4.1 and T5.1

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::empirical::{operator_norm_lower_bound, theoretical_upper, SampleConfig};
use crate::error::Error;
use crate::spaces::SpaceSpec;
use crate::theorems::{
    bloch_lower_bound, bloch_upper_bound, check_theorem_alpha, hardy_to_bloch_bounds,
    integrand_f, korenblum_norm_exact, log_ratio, log_to_log_norm, log_to_plain_lower_bound,
    log_to_plain_norm, verify_theorem, HardyBlochBound, TheoremId, TheoremVerdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
/// Slack allowed between an empirical bound and the theoretical value.
pub const SOUNDNESS_SLACK: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(name = "cesaro", version, about = "Norms of the Cesàro operator on weighted spaces of analytic functions")]
pub struct Cli {
    /// Omit wall_time from the report.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one theorem at a list of parameters.
    Verify {
        #[arg(long)]
        theorem: String,
        /// Comma-separated alpha values.
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<f64>,
        /// Defaults to the theorem's own tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate every norm value and bound over an alpha grid.
    Table {
        /// start:stop:step, both ends inclusive.
        #[arg(long)]
        alpha_grid: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Monte-Carlo lower bound for the norm between two spaces.
    Empirical {
        /// hardy, korenblum, korenblum-log or bloch.
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        degree: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write integrand slices `(r, t, value)` as CSV.
    DumpIntegrand {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        radii: Vec<f64>,
        #[arg(long, default_value_t = 101)]
        t_points: usize,
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub alpha: f64,
    pub t31_exact: Option<f64>,
    pub t41_sup: Option<f64>,
    pub t41_lower_bound: Option<f64>,
    pub t51_sup: Option<f64>,
    pub t51_inverse_alpha: Option<f64>,
    pub t62_upper: Option<f64>,
    pub t63_lower: Option<f64>,
    pub t71_bounds: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalSummary {
    pub source: String,
    pub target: String,
    pub alpha: f64,
    pub samples: usize,
    pub seed: u64,
    pub lower_bound: f64,
    pub divergent: bool,
    pub divergence_radius: Option<f64>,
    pub theoretical_upper: Option<f64>,
    pub extremal_ratio: f64,
    pub best_index: usize,
    pub argmax_radius: f64,
    pub argmax_angle: f64,
    /// True when the lower bound exceeds the theoretical value.
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub verdicts: Vec<TheoremVerdict>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub artifacts: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub empirical: Option<EmpiricalSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl RunReport {
    fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            parameters: BTreeMap::new(),
            verdicts: Vec::new(),
            artifacts: Vec::new(),
            table: None,
            empirical: None,
            wall_time: None,
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.into(), value.to_string());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed) && !self.empirical.as_ref().is_some_and(|e| e.violation)
    }
}

/// A failed run: either bad input (exit 2) or a numerical failure (exit 1).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Precondition(_) => Self::Usage(e.to_string()),
            Error::Convergence(_) => Self::Runtime(e.to_string()),
        }
    }
}

fn io_err(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

/// Output of one command.
pub struct Outcome {
    pub report: RunReport,
    /// CSV document, when that format was requested; otherwise the JSON
    /// report is the document.
    pub csv: Option<String>,
    /// Where the document goes; `None` means stdout.
    pub output: Option<PathBuf>,
}

impl Outcome {
    pub fn document(&self) -> Result<String, CliError> {
        match &self.csv {
            Some(c) => Ok(c.clone()),
            None => json_string(&self.report),
        }
    }
}

/// Parses `start:stop:step` into `start, start+step, …` up to `stop`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || CliError::Usage(format!("alpha grid '{spec}' is not start:stop:step"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums: Vec<f64> = parts.iter().map(|p| p.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || start > stop {
        return Err(CliError::Usage(format!("alpha grid '{spec}' is empty")));
    }
    let mut out = Vec::new();
    let end = stop + 0.5 * step;
    let mut k = 0u32;
    loop {
        let x = start + f64::from(k) * step;
        if x >= end {
            break;
        }
        out.push((x * 1e12).round() / 1e12);
        k += 1;
    }
    Ok(out)
}

fn parse_theorem(s: &str) -> Result<TheoremId, CliError> {
    s.parse::<TheoremId>().map_err(|e| CliError::Usage(e.to_string()))
}

fn csv_string<S: Serialize>(rows: &[S]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(io_err)?;
    }
    String::from_utf8(w.into_inner().map_err(io_err)?).map_err(io_err)
}

fn json_string<S: Serialize>(value: &S) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(io_err)
}

#[derive(Serialize)]
struct VerdictRow<'a> {
    theorem_id: TheoremId,
    alpha: f64,
    theoretical: String,
    computed: f64,
    tolerance: f64,
    passed: bool,
    notes: &'a str,
}

pub fn cmd_verify(theorem: &str, alphas: &[f64], tol: Option<f64>, format: Format) -> Result<(RunReport, Option<String>), CliError> {
    let id = parse_theorem(theorem)?;
    if alphas.is_empty() {
        return Err(CliError::Usage("no alpha values given".into()));
    }
    for &a in alphas {
        check_theorem_alpha(id, a)?;
    }
    let tol = tol.unwrap_or_else(|| id.default_tolerance());
    if !(tol > 0.0) {
        return Err(CliError::Usage(format!("tolerance must be positive, got {tol}")));
    }
    let verdicts = alphas
        .par_iter()
        .map(|&a| verify_theorem(id, a, tol))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = RunReport::new("verify");
    report.param("theorem", id);
    report.param("alpha", alphas.iter().map(f64::to_string).collect::<Vec<_>>().join(","));
    report.param("tol", tol);
    report.param("format", format!("{format:?}").to_lowercase());
    report.verdicts = verdicts;
    let document = match format {
        Format::Json => None,
        Format::Csv => Some(csv_string(
            &report
                .verdicts
                .iter()
                .map(|v| VerdictRow {
                    theorem_id: v.theorem_id,
                    alpha: v.alpha,
                    theoretical: v.theoretical.to_string(),
                    computed: v.computed,
                    tolerance: v.tolerance,
                    passed: v.passed,
                    notes: &v.notes,
                })
                .collect::<Vec<_>>(),
        )?),
    };
    Ok((report, document))
}

/// One row of the norm table.
pub fn table_row(alpha: f64) -> Result<TableRow, CliError> {
    let sup_tol = 1e-9;
    let unit = alpha > 0.0 && alpha < 1.0;
    let t41 = if unit { Some(log_to_plain_norm(alpha, sup_tol)?.supremum()) } else { None };
    let t51 = if unit { Some(log_to_log_norm(alpha, sup_tol)?.supremum()) } else { None };
    let t62 = if alpha > 1.0 { Some(bloch_upper_bound(alpha)?) } else { None };
    let t71_bounds = match hardy_to_bloch_bounds(alpha)? {
        HardyBlochBound::Interval { lower, upper } => format!("[{lower}, {upper}]"),
        HardyBlochBound::Divergent => "unbounded".into(),
    };
    Ok(TableRow {
        alpha,
        t31_exact: korenblum_norm_exact(alpha).ok(),
        t41_sup: t41,
        t41_lower_bound: if unit { Some(log_to_plain_lower_bound(alpha)?) } else { None },
        t51_sup: t51,
        t51_inverse_alpha: unit.then(|| 1.0 / alpha),
        t62_upper: t62,
        t63_lower: (alpha > 1.0).then(bloch_lower_bound),
        t71_bounds,
    })
}

pub fn cmd_table(grid: &str, format: Format) -> Result<(RunReport, Option<String>), CliError> {
    let alphas = parse_grid(grid)?;
    if let Some(&a) = alphas.iter().find(|a| !(**a > 0.0)) {
        return Err(CliError::Usage(format!("alpha must be positive, got {a}")));
    }
    let rows = alphas.par_iter().map(|&a| table_row(a)).collect::<Result<Vec<_>, _>>()?;
    let mut report = RunReport::new("table");
    report.param("alpha_grid", grid);
    report.param("format", format!("{format:?}").to_lowercase());
    let document = match format {
        Format::Json => None,
        Format::Csv => Some(csv_string(&rows)?),
    };
    report.table = Some(rows);
    Ok((report, document))
}

pub fn cmd_empirical(
    source: &str,
    target: &str,
    alpha: f64,
    cfg: &SampleConfig,
    format: Format,
) -> Result<(RunReport, Option<String>), CliError> {
    let src = SpaceSpec::from_name(source, alpha)?;
    let tgt = SpaceSpec::from_name(target, alpha)?;
    if cfg.count == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let upper = theoretical_upper(&src, &tgt)?;
    let est = operator_norm_lower_bound(&src, &tgt, cfg)?;
    let lower_bound = est.value();
    let summary = EmpiricalSummary {
        source: source.into(),
        target: target.into(),
        alpha,
        samples: cfg.count,
        seed: cfg.seed,
        lower_bound,
        divergent: est.is_divergent(),
        divergence_radius: est.best.divergence.as_ref().map(|d| d.radius),
        theoretical_upper: upper,
        extremal_ratio: est.extremal_ratio(),
        best_index: est.best_index,
        argmax_radius: est.best.argmax_radius,
        argmax_angle: est.best.argmax_angle,
        violation: upper.is_some_and(|u| lower_bound > u + SOUNDNESS_SLACK),
    };
    let mut report = RunReport::new("empirical");
    report.param("source", source);
    report.param("target", target);
    report.param("alpha", alpha);
    report.param("samples", cfg.count);
    report.param("seed", cfg.seed);
    report.param("degree", cfg.max_degree);
    let document = match format {
        Format::Json => None,
        Format::Csv => Some(csv_string(std::slice::from_ref(&summary))?),
    };
    report.empirical = Some(summary);
    Ok((report, document))
}

#[derive(Serialize)]
struct IntegrandRow {
    r: f64,
    t: f64,
    integrand: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    log_ratio: Option<f64>,
}

pub fn cmd_dump_integrand(
    theorem: &str,
    alpha: f64,
    radii: &[f64],
    t_points: usize,
    t_max: f64,
) -> Result<(RunReport, Option<String>), CliError> {
    let id = parse_theorem(theorem)?;
    if !matches!(id, TheoremId::T3_1 | TheoremId::T4_1 | TheoremId::T5_1) {
        return Err(CliError::Usage(format!("{id} has no integrand to dump")));
    }
    if t_points < 2 || !(t_max > 0.0) {
        return Err(CliError::Usage("need --t-points >= 2 and --t-max > 0".into()));
    }
    let mut rows = Vec::with_capacity(radii.len() * t_points);
    for &r in radii {
        for k in 0..t_points {
            let t = t_max * k as f64 / (t_points - 1) as f64;
            let f = integrand_f(r, t, alpha)?;
            let row = match id {
                TheoremId::T3_1 => IntegrandRow { r, t, integrand: f, log_ratio: None },
                TheoremId::T4_1 => {
                    let q = log_ratio(r, t, alpha)?;
                    let outer = 1.0 / alpha + std::f64::consts::LN_2 - ((1.0 - r) * (1.0 + r)).ln();
                    IntegrandRow { r, t, integrand: f * q / outer, log_ratio: Some(q) }
                }
                _ => {
                    let q = log_ratio(r, t, alpha)?;
                    IntegrandRow { r, t, integrand: f * q, log_ratio: Some(q) }
                }
            };
            rows.push(row);
        }
    }
    let mut report = RunReport::new("dump-integrand");
    report.param("theorem", id);
    report.param("alpha", alpha);
    report.param("radii", radii.iter().map(f64::to_string).collect::<Vec<_>>().join(","));
    report.param("t_points", t_points);
    report.param("t_max", t_max);
    Ok((report, Some(csv_string(&rows)?)))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (mut report, document, output) = match &cli.command {
        Command::Verify { theorem, alpha, tol, format, output } => {
            let (r, d) = cmd_verify(theorem, alpha, *tol, *format)?;
            (r, d, output.clone())
        }
        Command::Table { alpha_grid, format, output } => {
            let (r, d) = cmd_table(alpha_grid, *format)?;
            (r, d, output.clone())
        }
        Command::Empirical { source, target, alpha, samples, seed, degree, format, output } => {
            let cfg = SampleConfig::new(*seed, *samples).with_degree(*degree);
            let (r, d) = cmd_empirical(source, target, *alpha, &cfg, *format)?;
            (r, d, output.clone())
        }
        Command::DumpIntegrand { theorem, alpha, radii, t_points, t_max, output } => {
            let (r, d) = cmd_dump_integrand(theorem, *alpha, radii, *t_points, *t_max)?;
            (r, d, output.clone())
        }
    };
    if let Some(path) = &output {
        report.artifacts.push(path.display().to_string());
    }
    if !cli.no_timestamp {
        report.wall_time = Some(start.elapsed().as_secs_f64());
    }
    Ok(Outcome { report, csv: document, output })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("CESARO_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("CESARO_THREADS must be a positive integer, got '{v}'")))?;
    // a pool already built by an earlier call in the same process is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Entry point of the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = configure_threads().and_then(|_| run(&cli)).and_then(|out| {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        let document = out.document()?;
        match &out.output {
            Some(path) => {
                write_file(path, &document)?;
                lock.write_all(json_string(&out.report)?.as_bytes()).map_err(io_err)?;
            }
            None => lock.write_all(document.as_bytes()).map_err(io_err)?,
        }
        Ok(out.report.passed())
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILED
        }
    }
}
