//! Command-line front end: argument parsing, validation, dispatch and
//! rendering to JSON, CSV or plain text.
//!
//! Exit codes: 0 on success, 1 when a computation or a verification check
//! fails, 2 when the arguments are rejected.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use thiserror::Error;

use crate::bounds::{dq_bounds_summary, homma_nondegenerate_coefficient, Direction};
use crate::gf::{prime_powers_up_to, PrimePower, MAX_FIELD_SIZE};
use crate::gs_tower::{count_split_chains, gs_genus, n1_lower_bound};
use crate::homma_family::{count_total, homma_degree};
use crate::semigroup::{
    check_generator_bounds, conductor_cm_checked, weierstrass_semigroup, MAX_CONDUCTOR,
};
use crate::verify::{self, Scope};

/// Environment variable that lowers the field-size cap.
pub const MAX_FIELD_ENV: &str = "RPL_MAX_FIELD";

/// Generator lists longer than this are summarized by their count only.
const GENERATOR_LIST_LIMIT: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "rpl",
    version,
    about = "Exact point counts, tower semigroups and D(q) bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Point count, degree and ratio for the curve X_l over F_q.
    PointsHomma {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: usize,
    },
    /// Genus, split places and semigroup data for tower level m over F_{q^2}.
    Gs {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
    },
    /// The Weierstrass semigroup at the ramified place of tower level m.
    Semigroup {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
    },
    /// Upper and lower bounds on D(q).
    Bounds(BoundsArgs),
    /// Run the named verification checks.
    Verify {
        #[arg(value_enum, default_value_t = VerifyScope::All)]
        scope: VerifyScope,
    },
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["q", "table"])))]
pub struct BoundsArgs {
    /// Records for a single prime power.
    #[arg(long)]
    pub q: Option<u64>,
    /// One row per prime power up to this value.
    #[arg(long, value_name = "QMAX")]
    pub table: Option<u64>,
    /// Also report the nondegenerate coefficient at this dimension (with --q).
    #[arg(long, requires = "q")]
    pub n_max: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyScope {
    All,
    Gf,
    Homma,
    Gs,
    Semigroup,
    Bounds,
}

impl From<VerifyScope> for Scope {
    fn from(s: VerifyScope) -> Self {
        match s {
            VerifyScope::All => Scope::All,
            VerifyScope::Gf => Scope::Gf,
            VerifyScope::Homma => Scope::Homma,
            VerifyScope::Gs => Scope::Gs,
            VerifyScope::Semigroup => Scope::Semigroup,
            VerifyScope::Bounds => Scope::Bounds,
        }
    }
}

/// A parsed, validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub field_cap: u64,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Validation(String),
    #[error("computation failed: {0}")]
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Computation(_) => 1,
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn failed(e: impl fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}

// ---------------------------------------------------------------------------
// Output model

/// One cell of output.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(BigInt),
    Ratio(BigRational),
    Text(String),
    Bool(bool),
    List(Vec<u64>),
    Null,
}

impl From<BigUint> for Value {
    fn from(v: BigUint) -> Self {
        Value::Int(v.into())
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v.into())
    }
}

impl From<BigRational> for Value {
    fn from(v: BigRational) -> Self {
        Value::Ratio(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

impl Value {
    /// Flat string form used by CSV and text output. Rationals are `a/b`,
    /// or just `a` when the denominator is 1.
    fn flat(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Ratio(r) => r.to_string(),
            Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::List(xs) => xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
            Value::Null => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        use serde_json::Value as J;
        match self {
            Value::Int(v) => J::Number(v.to_string().parse().expect("integer literal")),
            Value::Ratio(r) => J::String(r.to_string()),
            Value::Text(s) => J::String(s.clone()),
            Value::Bool(b) => J::Bool(*b),
            Value::List(xs) => J::Array(xs.iter().map(|&x| J::from(x)).collect()),
            Value::Null => J::Null,
        }
    }
}

type Row = Vec<(&'static str, Value)>;

/// Command output: a single record, or a table of rows that share one
/// column list.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Record(Row),
    Table {
        columns: Vec<&'static str>,
        rows: Vec<Vec<Value>>,
    },
    Checks(Vec<verify::CheckResult>),
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Text => self.to_text(),
        }
    }

    fn to_json(&self) -> String {
        let mut obj = serde_json::Map::new();
        obj.insert("schema".into(), 1.into());
        match self {
            Report::Record(row) => {
                for (k, v) in row {
                    obj.insert((*k).into(), v.json());
                }
            }
            Report::Table { columns, rows } => {
                let rows = rows
                    .iter()
                    .map(|r| {
                        let m = columns
                            .iter()
                            .zip(r)
                            .map(|(k, v)| ((*k).to_string(), v.json()));
                        serde_json::Value::Object(m.collect())
                    })
                    .collect();
                obj.insert("rows".into(), serde_json::Value::Array(rows));
            }
            Report::Checks(checks) => {
                let passed = checks.iter().filter(|c| c.passed).count();
                let list = checks
                    .iter()
                    .map(|c| {
                        serde_json::json!({"name": c.name, "passed": c.passed, "detail": c.detail})
                    })
                    .collect();
                obj.insert("checks".into(), serde_json::Value::Array(list));
                obj.insert("passed".into(), passed.into());
                obj.insert("failed".into(), (checks.len() - passed).into());
            }
        }
        let mut s = serde_json::to_string_pretty(&serde_json::Value::Object(obj))
            .expect("json serialization");
        s.push('\n');
        s
    }

    fn header_and_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        match self {
            Report::Record(row) => (
                row.iter().map(|(k, _)| *k).collect(),
                vec![row.iter().map(|(_, v)| v.flat()).collect()],
            ),
            Report::Table { columns, rows } => (
                columns.clone(),
                rows.iter()
                    .map(|r| r.iter().map(Value::flat).collect())
                    .collect(),
            ),
            Report::Checks(checks) => (
                vec!["name", "passed", "detail"],
                checks
                    .iter()
                    .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()])
                    .collect(),
            ),
        }
    }

    fn to_csv(&self) -> String {
        let (header, rows) = self.header_and_rows();
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&header).expect("in-memory csv");
        for r in &rows {
            w.write_record(r).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Record(row) => {
                let width = row.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in row {
                    s.push_str(&format!("{k:<width$}  {}\n", v.flat()));
                }
            }
            Report::Table { .. } => {
                let (header, rows) = self.header_and_rows();
                let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
                for r in &rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.len());
                    }
                }
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    format!("{}\n", padded.join("  ").trim_end())
                };
                s.push_str(&line(header.clone()));
                for r in &rows {
                    s.push_str(&line(r.iter().map(String::as_str).collect()));
                }
            }
            Report::Checks(checks) => {
                for c in checks {
                    s.push_str(&format!("{c}\n"));
                }
                let passed = checks.iter().filter(|c| c.passed).count();
                s.push_str(&format!(
                    "{} checks, {} passed, {} failed\n",
                    checks.len(),
                    passed,
                    checks.len() - passed
                ));
            }
        }
        s
    }
}

// ---------------------------------------------------------------------------
// Validation

/// The field-size cap after applying `RPL_MAX_FIELD`, which may only lower it.
pub fn field_cap_from_env(raw: Option<&str>) -> Result<u64, CliError> {
    match raw {
        None => Ok(MAX_FIELD_SIZE),
        Some(s) => {
            let v: u64 = s
                .trim()
                .parse()
                .map_err(|_| invalid(format!("{MAX_FIELD_ENV}={s:?} is not a positive integer")))?;
            if v == 0 {
                return Err(invalid(format!("{MAX_FIELD_ENV} must be positive")));
            }
            Ok(v.min(MAX_FIELD_SIZE))
        }
    }
}

fn prime_power(q: u64) -> Result<PrimePower, CliError> {
    PrimePower::from_q(q).map_err(|e| invalid(format!("q={q}: {e}")))
}

fn field_within_cap(size: u64, cap: u64, what: &str) -> Result<(), CliError> {
    if size > cap {
        return Err(invalid(format!(
            "{what} has {size} elements, above the field cap {cap}"
        )));
    }
    Ok(())
}

fn conductor_within_cap(q: u64, m: u32) -> Result<u64, CliError> {
    match conductor_cm_checked(q, m) {
        Some(c) if c <= MAX_CONDUCTOR as u128 => Ok(c as u64),
        _ => Err(invalid(format!(
            "conductor c_m for q={q}, m={m} exceeds the bitmap cap {MAX_CONDUCTOR}"
        ))),
    }
}

/// Checks every command precondition before any computation runs.
pub fn validate(config: &RunConfig) -> Result<(), CliError> {
    let cap = config.field_cap;
    match &config.command {
        Command::PointsHomma { q, ell } => {
            let pp = prime_power(*q)?;
            if pp.q() <= 2 {
                return Err(invalid("the curve family X_l requires q > 2"));
            }
            if *ell < 2 {
                return Err(invalid(format!("ell must be at least 2 (got {ell})")));
            }
            field_within_cap(pp.q(), cap, "F_q")
        }
        Command::Gs { q, m } | Command::Semigroup { q, m } => {
            prime_power(*q)?;
            if *m < 1 {
                return Err(invalid("m must be at least 1"));
            }
            if matches!(config.command, Command::Gs { .. }) {
                let q2 = q.checked_mul(*q).ok_or_else(|| invalid("q^2 overflows"))?;
                field_within_cap(q2, cap, "F_{q^2}")?;
            }
            conductor_within_cap(*q, *m).map(|_| ())
        }
        Command::Bounds(args) => {
            if let Some(q) = args.q {
                prime_power(q)?;
                if let Some(n) = args.n_max {
                    if n < 2 {
                        return Err(invalid(format!("n-max must be at least 2 (got {n})")));
                    }
                }
            }
            if let Some(t) = args.table {
                if t < 2 {
                    return Err(invalid(format!("table bound must be at least 2 (got {t})")));
                }
                if t > cap {
                    return Err(invalid(format!(
                        "table bound {t} above the field cap {cap}"
                    )));
                }
            }
            Ok(())
        }
        Command::Verify { .. } => Ok(()),
    }
}

// ---------------------------------------------------------------------------
// Commands

pub fn cmd_points_homma(q: u64, ell: usize) -> Result<Report, CliError> {
    let pp = prime_power(q)?;
    let count = count_total(pp, ell).map_err(failed)?;
    let degree = homma_degree(pp, ell).map_err(failed)?;
    let ratio = BigRational::new(count.total().clone().into(), degree.clone().into());
    Ok(Report::Record(vec![
        ("q", q.into()),
        ("ell", (ell as u64).into()),
        ("affine", count.affine().clone().into()),
        ("infinity", count.infinity().clone().into()),
        ("total", count.total().clone().into()),
        ("degree", degree.into()),
        ("ratio", ratio.into()),
    ]))
}

pub fn cmd_gs(q: u64, m: u32) -> Result<Report, CliError> {
    let split = count_split_chains(q, m).map_err(failed)?;
    let c = conductor_within_cap(q, m)?;
    let s = weierstrass_semigroup(q, m).map_err(failed)?;
    let report = if m >= 2 {
        Some(check_generator_bounds(q, m).map_err(failed)?)
    } else {
        None
    };
    let n1 = n1_lower_bound(q, m);
    let ratio = (m >= 2).then(|| {
        let denom = BigUint::from(c) + BigUint::from(q).pow(m - 1) - 1u32;
        BigRational::new(n1.clone().into(), denom.into())
    });
    Ok(Report::Record(vec![
        ("q", q.into()),
        ("m", u64::from(m).into()),
        ("genus", gs_genus(q, m).into()),
        ("split", split.into()),
        ("n1_lower_bound", n1.into()),
        ("c_m", c.into()),
        ("gamma_1", report.as_ref().map(|r| r.gamma_first).into()),
        ("gamma_ell", report.as_ref().map(|r| r.gamma_last).into()),
        (
            "gamma_ell_bound",
            report.as_ref().map(|r| r.gamma_last_bound).into(),
        ),
        ("gap_count", s.gap_count().into()),
        (
            "gamma_1_ok",
            report.as_ref().map(|r| r.gamma_first_ok).into(),
        ),
        (
            "gamma_ell_ok",
            report.as_ref().map(|r| r.gamma_last_ok).into(),
        ),
        ("ratio", ratio.into()),
    ]))
}

pub fn cmd_semigroup(q: u64, m: u32) -> Result<Report, CliError> {
    conductor_within_cap(q, m)?;
    let s = weierstrass_semigroup(q, m).map_err(failed)?;
    let gens = s.minimal_generators();
    let listed =
        (gens.len() <= GENERATOR_LIST_LIMIT).then(|| Value::List(gens.as_slice().to_vec()));
    Ok(Report::Record(vec![
        ("q", q.into()),
        ("m", u64::from(m).into()),
        ("conductor", s.conductor().into()),
        ("gap_count", s.gap_count().into()),
        ("genus", gs_genus(q, m).into()),
        ("multiplicity", s.multiplicity().into()),
        ("generator_count", (gens.len() as u64).into()),
        ("gamma_1", gens.first().into()),
        ("gamma_ell", gens.last().into()),
        ("generators", listed.unwrap_or(Value::Null)),
    ]))
}

pub fn cmd_bounds_q(q: u64, n_max: Option<u32>) -> Result<Report, CliError> {
    let summary = dq_bounds_summary(q).map_err(failed)?;
    let mut rows: Vec<Vec<Value>> = summary
        .records
        .iter()
        .map(|r| {
            vec![
                r.name.into(),
                r.q.into(),
                r.direction.to_string().into(),
                r.value.clone().into(),
                r.source.clone().into(),
            ]
        })
        .collect();
    if let Some(n) = n_max {
        let v = homma_nondegenerate_coefficient(q, n).map_err(failed)?;
        rows.push(vec![
            "nondegenerate_coefficient".into(),
            q.into(),
            Direction::Upper.to_string().into(),
            v.into(),
            format!("nondegenerate curves in P^{n}").into(),
        ]);
    }
    Ok(Report::Table {
        columns: vec!["name", "q", "direction", "value", "source"],
        rows,
    })
}

pub fn cmd_bounds_table(qmax: u64) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    for pp in prime_powers_up_to(qmax) {
        let s = dq_bounds_summary(pp.q()).map_err(failed)?;
        let best = s.best_lower();
        rows.push(vec![
            pp.q().into(),
            s.upper().value.clone().into(),
            best.map(|b| b.value.clone()).into(),
            best.map(|b| b.name).into(),
        ]);
    }
    Ok(Report::Table {
        columns: vec!["q", "upper", "best_lower", "best_lower_name"],
        rows,
    })
}

pub fn cmd_verify(scope: VerifyScope) -> Report {
    Report::Checks(verify::run(scope.into()))
}

/// Validates and executes one invocation, returning the rendered output and
/// whether every verification check passed.
pub fn execute(config: &RunConfig) -> Result<(String, bool), CliError> {
    validate(config)?;
    let report = match &config.command {
        Command::PointsHomma { q, ell } => cmd_points_homma(*q, *ell)?,
        Command::Gs { q, m } => cmd_gs(*q, *m)?,
        Command::Semigroup { q, m } => cmd_semigroup(*q, *m)?,
        Command::Bounds(args) => match (args.q, args.table) {
            (Some(q), _) => cmd_bounds_q(q, args.n_max)?,
            (None, Some(t)) => cmd_bounds_table(t)?,
            (None, None) => return Err(invalid("bounds needs --q or --table")),
        },
        Command::Verify { scope } => cmd_verify(*scope),
    };
    let ok = match &report {
        Report::Checks(c) => c.iter().all(|c| c.passed),
        _ => true,
    };
    Ok((report.render(config.format), ok))
}

/// Full entry point: parses `args` (including the program name), reads the
/// environment cap, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let env = std::env::var(MAX_FIELD_ENV).ok();
    let result = field_cap_from_env(env.as_deref()).and_then(|field_cap| {
        let config = RunConfig {
            command: cli.command,
            format: cli.format,
            out: cli.out,
            field_cap,
        };
        let (text, ok) = execute(&config)?;
        emit(&text, config.out.as_ref())?;
        Ok(ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("rpl: {e}");
            e.exit_code()
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| failed(format!("writing {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(failed)
        }
    }
}
