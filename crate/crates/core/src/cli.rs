//! Command-line surface: argument definitions and command execution.
//!
//! Commands render their output into a [`Outcome`] instead of printing, so
//! the binary stays a thin shell and tests can drive commands directly.
//!
//! Exit codes: 0 all good, 1 a verification check failed, 2 bad usage.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bijections::{cf_decompose_forward, cf_decompose_inverse, complement, reverse_complement};
use crate::enumerate::{count_table, StatKind};
use crate::path::Path;
use crate::series::{self, TruncSeries};
use crate::verify::{run_suites, Suite};

pub const THREADS_ENV: &str = "DYCKFLAW_THREADS";

#[derive(Debug, Parser)]
#[command(name = "dyckflaw", version, about = "Dyck paths with flaws: tables, bijections and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count paths by flaws and a joint-node statistic.
    Table(TableArgs),
    /// Apply one of the path bijections to a word.
    Biject(BijectArgs),
    /// Run verification suites against the enumeration oracle.
    Verify(VerifyArgs),
    /// Dump the coefficients of a generating function.
    Series(SeriesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatArg {
    #[value(name = "peak")]
    Peak,
    #[value(name = "valley")]
    Valley,
    #[value(name = "double_ascent")]
    DoubleAscent,
    #[value(name = "double_descent")]
    DoubleDescent,
}

impl From<StatArg> for StatKind {
    fn from(s: StatArg) -> StatKind {
        match s {
            StatArg::Peak => StatKind::Peak,
            StatArg::Valley => StatKind::Valley,
            StatArg::DoubleAscent => StatKind::DoubleAscent,
            StatArg::DoubleDescent => StatKind::DoubleDescent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Semilength.
    #[arg(long)]
    pub n: usize,
    /// Restrict to one flaw count.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value = "peak")]
    pub stat: StatArg,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: TableFormat,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    Phi,
    Psi,
    Cf,
    #[value(name = "cf_inv")]
    CfInv,
}

#[derive(Debug, Args)]
pub struct BijectArgs {
    #[arg(long, value_enum)]
    pub map: MapArg,
    /// Path word over U/D (case-insensitive).
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Print the S|R|U|Q|D|T pieces (cf and cf_inv only).
    #[arg(long)]
    pub show_decomposition: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Oracle,
    Formulas,
    Bijections,
    Series,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    /// Largest semilength for the exhaustive suites.
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    /// Truncation order of the series suite.
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    P0,
    V0,
    A0,
    P,
    A,
    Alpha,
    R,
    F,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub name: SeriesName,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args, Default)]
pub struct CommonArgs {
    /// Also write the report to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include elapsed time in JSON reports (breaks byte-for-byte reproducibility).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] crate::Error),
    #[error("writing {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    Ok,
    Pass,
    Fail,
}

/// Machine-readable result of one command. Fields serialize in
/// alphabetical order.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub parameters: BTreeMap<String, Value>,
    pub payload: Value,
    pub status: RunStatus,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn finish(
    report: RunReport,
    common: &CommonArgs,
    started: Instant,
    text: Option<String>,
) -> Result<Outcome, CliError> {
    let exit_code = if report.status == RunStatus::Fail { 1 } else { 0 };
    let mut report = report;
    if common.timing {
        report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    }
    let mut stdout = text.unwrap_or_else(|| report.to_json());
    if !stdout.ends_with('\n') {
        stdout.push('\n');
    }
    if let Some(path) = &common.out {
        std::fs::write(path, &stdout).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(Outcome { stdout, exit_code })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Biject(a) => cmd_biject(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Series(a) => cmd_series(a),
    }
}

pub fn cmd_table(args: &TableArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    if let Some(m) = args.m {
        if m > args.n {
            return Err(CliError::Usage(format!("--m {m} exceeds --n {}", args.n)));
        }
    }
    let stat: StatKind = args.stat.into();
    let full = count_table(args.n, stat);
    let table = match args.m {
        Some(m) => full.restrict(m),
        None => full,
    };
    let text = match args.format {
        TableFormat::Pretty => {
            let rows: Vec<usize> = match args.m {
                Some(m) => vec![m],
                None => (0..=args.n).collect(),
            };
            let lines: Vec<String> = rows
                .into_iter()
                .map(|m| table.polynomial(m).map(|p| p.to_string()))
                .collect::<Result<_, _>>()?;
            Some(lines.join("\n"))
        }
        TableFormat::Csv => Some(table.to_csv()),
        TableFormat::Json => None,
    };
    let report = RunReport {
        command: "table".into(),
        elapsed_ms: None,
        parameters: params(&[
            ("m", json!(args.m)),
            ("n", json!(args.n)),
            ("stat", json!(stat.name())),
        ]),
        payload: table.to_json(),
        status: RunStatus::Ok,
    };
    finish(report, &args.common, started, text)
}

pub fn cmd_biject(args: &BijectArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let word = Path::parse(&args.word).map_err(|e| CliError::Usage(format!("--word {:?}: {e}", args.word)))?;
    let (image, decomposition) = match args.map {
        MapArg::Phi => (complement(&word), None),
        MapArg::Psi => (reverse_complement(&word), None),
        MapArg::Cf => {
            let d = cf_decompose_forward(&word)?;
            (d.image(), Some(d))
        }
        MapArg::CfInv => {
            let d = cf_decompose_inverse(&word)?;
            (d.source(), Some(d))
        }
    };
    let before = word.stats();
    let after = image.stats();
    let pieces = decomposition.filter(|_| args.show_decomposition).map(|d| d.to_string());
    let map_name = args.map.to_possible_value().expect("not skipped").get_name().to_string();
    let text = match args.format {
        TextFormat::Json => None,
        TextFormat::Text => {
            let mut lines = vec![image.to_string(), format!("before: {before}"), format!("after:  {after}")];
            if let Some(p) = &pieces {
                lines.push(format!("decomposition: {p}"));
            }
            Some(lines.join("\n"))
        }
    };
    let report = RunReport {
        command: "biject".into(),
        elapsed_ms: None,
        parameters: params(&[("map", json!(map_name)), ("word", json!(word.to_string()))]),
        payload: json!({
            "after": after,
            "before": before,
            "decomposition": pieces,
            "image": image.to_string(),
        }),
        status: RunStatus::Ok,
    };
    finish(report, &args.common, started, text)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    if args.n_max < 1 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::Oracle => vec![Suite::Oracle],
        SuiteArg::Formulas => vec![Suite::Formulas],
        SuiteArg::Bijections => vec![Suite::Bijections],
        SuiteArg::Series => vec![Suite::Series],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let reports = run_suites(&suites, args.n_max, args.order);
    for r in &reports {
        for c in &r.checks {
            eprintln!("[{}] {}/{} ({} cases)", c.status, r.suite, c.check, c.cases);
            if let Some(f) = &c.first_failure {
                eprintln!("    first failure: {f}");
            }
        }
    }
    let ok = reports.iter().all(|r| r.passed());
    let suite_name = args.suite.to_possible_value().expect("not skipped").get_name().to_string();
    let report = RunReport {
        command: "verify".into(),
        elapsed_ms: None,
        parameters: params(&[
            ("n_max", json!(args.n_max)),
            ("order", json!(args.order)),
            ("suite", json!(suite_name)),
        ]),
        payload: json!({ "suites": reports }),
        status: if ok { RunStatus::Pass } else { RunStatus::Fail },
    };
    finish(report, &args.common, started, None)
}

pub fn named_series(name: SeriesName, order: usize) -> TruncSeries {
    match name {
        SeriesName::P0 => series::solve_p0(order),
        SeriesName::V0 => series::solve_v0(order),
        SeriesName::A0 => series::solve_a0(order),
        SeriesName::P => series::build_p(order),
        SeriesName::A => series::build_a(order),
        SeriesName::Alpha => series::alpha(order),
        SeriesName::R => series::r_series(order),
        SeriesName::F => series::radicand(order),
    }
}

pub fn cmd_series(args: &SeriesArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let s = named_series(args.name, args.order);
    let name = args.name.to_possible_value().expect("not skipped").get_name().to_string();
    let coeffs: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let terms: Vec<Value> = c
                .terms()
                .map(|(x, y, v)| json!({ "coeff": v.to_string(), "xexp": x, "yexp": y }))
                .collect();
            json!({ "n": n, "terms": terms })
        })
        .collect();
    let text = match args.format {
        TextFormat::Text => Some(s.to_string()),
        TextFormat::Json => None,
    };
    let report = RunReport {
        command: "series".into(),
        elapsed_ms: None,
        parameters: params(&[("name", json!(name)), ("order", json!(args.order))]),
        payload: json!({ "coeffs": coeffs }),
        status: RunStatus::Ok,
    };
    finish(report, &args.common, started, text)
}
