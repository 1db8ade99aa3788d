//! The `qtcomb` command line: `compute` one object, `check` a suite of
//! identities, or print a `table` over a parameter grid.
//!
//! Exit codes: 0 success, 1 a falsified identity, 2 misuse, 3 degree guard.

mod objects;
mod params;
mod report;
mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::tpoly::{set_degree_guard, DEFAULT_DEGREE_GUARD};

pub use objects::Object;
pub use params::{expand_grid, Params};
pub use report::{digest, CaseReport, CheckReport, Status};
pub use suites::{run as run_suite, Case, Outcome, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib(e) => lib_exit_code(e),
            CliError::Io(_) => EXIT_MATH,
        }
    }
}

fn lib_exit_code(e: &Error) -> i32 {
    match e {
        Error::DegreeGuard { .. } => EXIT_GUARD,
        Error::Invalid(_) | Error::OutOfRange(_) | Error::NotPrime(_) | Error::ModulusMismatch(..) => EXIT_USAGE,
        _ => EXIT_MATH,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "qtcomb",
    version,
    about = "Exact (q,t)-analogues and the identities between them"
)]
pub struct Cli {
    /// Value of q (at least 2; prime for subspace and Dickson computations). Repeatable.
    #[arg(long = "q", global = true, value_parser = clap::value_parser!(u64).range(2..))]
    pub qs: Vec<u64>,
    /// Output format (default: json for compute and check, csv for table).
    #[arg(long, global = true, value_enum)]
    pub out: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest exponent any intermediate polynomial may carry.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_GUARD)]
    pub degree_guard: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one polynomial, e.g. `compute binomial n=4 k=2 --q 3`.
    Compute {
        #[arg(value_enum)]
        object: Object,
        /// Parameters as key=value.
        params: Vec<String>,
    },
    /// Run a suite of identities, e.g. `check pascal n=6 --q 2 --q 3`.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        /// Bounds as key=value, overriding the suite's defaults.
        params: Vec<String>,
    },
    /// One row per grid point, e.g. `table binomial n=0..4 k=0..n --eval-t1`.
    Table {
        #[arg(value_enum)]
        object: Object,
        /// Grid as key=value, where a value may be a range `a..b` bounded by
        /// integers or by earlier keys.
        params: Vec<String>,
        /// Print the value at t = 1 instead of the polynomial.
        #[arg(long)]
        eval_t1: bool,
    },
}

/// Entry point for the binary.
pub fn main() {
    let code = run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}

/// Parses `args`, runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    set_degree_guard(cli.degree_guard);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let result = pool.install(|| match &cli.command {
        Command::Compute { object, params } => compute(cli, *object, params, &mut stdout),
        Command::Check { suite, params } => check(cli, *suite, params, &mut stdout, &mut stderr),
        Command::Table {
            object,
            params,
            eval_t1,
        } => table(cli, *object, params, *eval_t1, &mut stdout),
    });
    out.write_all(&stdout)?;
    err.write_all(&stderr)?;
    result
}

fn compute(cli: &Cli, object: Object, args: &[String], out: &mut Vec<u8>) -> Result<i32, CliError> {
    let q = match cli.qs.as_slice() {
        [] => 2,
        [q] => *q,
        _ => return Err(CliError::Usage("compute takes a single --q".into())),
    };
    let params = Params::parse(args)?;
    let poly = object.compute(&params, q)?;
    match cli.out.unwrap_or(Format::Json) {
        Format::Json => writeln!(out, "{}", poly.to_json())?,
        Format::Csv => write!(out, "{}", poly.to_csv())?,
    }
    Ok(EXIT_OK)
}

fn check(cli: &Cli, suite: Suite, args: &[String], out: &mut Vec<u8>, err: &mut Vec<u8>) -> Result<i32, CliError> {
    let qs = if cli.qs.is_empty() { vec![2, 3] } else { cli.qs.clone() };
    let params = Params::parse(args)?;
    let cases = suite.cases(&params, &qs)?;
    let (report, errors) = run_suite(suite, cases);
    match cli.out.unwrap_or(Format::Json) {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Csv => write!(out, "{}", report.to_csv())?,
    }
    for f in report.failures() {
        writeln!(err, "FAIL [{}] {}", f.parameters, f.identity)?;
        if let Some(detail) = &f.error {
            writeln!(err, "{detail}")?;
        }
    }
    // the most specific error class wins: guard, then misuse, then mathematics
    let worst = errors.iter().map(lib_exit_code).max_by_key(|c| match *c {
        EXIT_GUARD => 3,
        EXIT_USAGE => 2,
        _ => 1,
    });
    Ok(match worst {
        Some(code) => code,
        None if report.passed => EXIT_OK,
        None => EXIT_MATH,
    })
}

fn table(cli: &Cli, object: Object, args: &[String], eval_t1: bool, out: &mut Vec<u8>) -> Result<i32, CliError> {
    let qs = if cli.qs.is_empty() { vec![2] } else { cli.qs.clone() };
    let grid = Params::parse(args)?;
    let mut points = Vec::new();
    for p in expand_grid(&grid)? {
        points.extend(object.expand_point(p)?);
    }
    let mut header: Vec<String> = grid.pairs().iter().map(|(k, _)| k.clone()).collect();
    if let Some(first) = points.first() {
        for (k, _) in first.pairs() {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }

    let mut rows = Vec::new();
    for p in &points {
        for &q in &qs {
            let poly = object.compute(p, q)?;
            rows.push((p, q, poly));
        }
    }

    match cli.out.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut cols = header.clone();
            cols.extend(["q".to_string(), "value".to_string()]);
            writeln!(out, "{}", cols.join(","))?;
            for (p, q, poly) in &rows {
                let mut cells: Vec<String> = header
                    .iter()
                    .map(|k| report::csv_field(p.get(k).unwrap_or("")))
                    .collect();
                cells.push(q.to_string());
                let value = if eval_t1 {
                    poly.eval_one().to_string()
                } else {
                    poly.to_string()
                };
                cells.push(report::csv_field(&value));
                writeln!(out, "{}", cells.join(","))?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(p, q, poly)| {
                    let params: serde_json::Map<String, Value> = p
                        .pairs()
                        .iter()
                        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                        .collect();
                    let value = if eval_t1 {
                        Value::String(poly.eval_one().to_string())
                    } else {
                        serde_json::to_value(poly.to_records()).expect("serializable")
                    };
                    json!({ "params": params, "q": q, "value": value })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&rows).expect("serializable"))?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::TPoly;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("qtcomb").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_examples() {
        let (code, out, _) = run_cli(&["compute", "binomial", "n=2", "k=1", "--q", "2"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim(),
            r#"{"terms":[{"exp":"0","coeff":"1"},{"exp":"1","coeff":"1"},{"exp":"2","coeff":"1"}]}"#
        );
        let (_, out, _) = run_cli(&["compute", "binomial", "n=3", "k=0"]);
        assert_eq!(out.trim(), r#"{"terms":[{"exp":"0","coeff":"1"}]}"#);
        let (code, out, _) = run_cli(&["compute", "schur", "shape=2,2/1,0", "vars=2", "--q", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains(r#""exp":"5/2""#));
        let back = TPoly::from_json(out.trim()).unwrap();
        assert_eq!(back.to_json(), out.trim());
        let (_, out, _) = run_cli(&["compute", "factorial", "n=1", "--out", "csv"]);
        assert_eq!(out, "exp,coeff\n0,1\n1,-1\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_cli(&["compute", "binomial", "n=2"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["compute", "binomial", "n=2", "k=1", "z=3"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["compute", "nonsense"]).0, EXIT_USAGE);
        assert_eq!(
            run_cli(&["compute", "binomial", "n=2", "k=1", "--q", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_cli(&["compute", "binomial", "n=2", "k=1", "--q", "2", "--q", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_cli(&["compute", "subspace-sum", "n=2", "k=1", "--q", "4"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_cli(&["compute", "schur", "shape=1/2", "k=1"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn tables() {
        let (code, out, _) = run_cli(&["table", "binomial", "n=0..4", "k=0..n", "--q", "2", "--eval-t1"]);
        assert_eq!(code, 0);
        let values: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
        assert_eq!(
            values,
            ["1", "1", "1", "1", "3", "1", "1", "7", "7", "1", "1", "15", "35", "15", "1"]
        );
        assert_eq!(out.lines().next(), Some("n,k,q,value"));

        let (_, out, _) = run_cli(&["table", "ribbon", "n=3", "--q", "2"]);
        assert_eq!(out.lines().count(), 5);
        assert_eq!(out.lines().next(), Some("n,alpha,q,value"));

        let (code, out, _) = run_cli(&["table", "binomial", "n=3..2", "k=0"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,k,q,value\n");

        let (_, out, _) = run_cli(&["table", "factorial", "n=0..1", "--out", "json", "--eval-t1"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
    }

    #[test]
    fn checks_report_and_exit() {
        let (code, out, _) = run_cli(&["check", "pascal", "n=3", "m=2", "--q", "2", "--jobs", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["suite"], "pascal");
        assert_eq!(v["passed"], true);
        assert_eq!(v["cases"][0]["lhs_digest"].as_str().unwrap().len(), 64);
        let (code, _, _) = run_cli(&["check", "subspace", "n=1", "--q", "4"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, out, _) = run_cli(&["check", "dickson", "n=2", "--q", "2", "--out", "csv"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("parameters,identity,status"));
    }

    #[test]
    fn compute_is_deterministic() {
        let args = ["compute", "ribbon", "alpha=1,2,1", "--q", "3"];
        assert_eq!(run_cli(&args).1, run_cli(&args).1);
    }
}
