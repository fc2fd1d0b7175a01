//! Command-line front end: point evaluation, grid tabulation, accuracy maps
//! against the quadrature oracle, and route timing.

pub mod complex;
pub mod funcs;
pub mod grid;
pub mod output;

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use specfun_core::{rel_diff, MethodPolicy, SumTruncation, TruncationOrders};

use crate::complex::parse_complex;
use crate::funcs::{evaluate, oracle, Function, MethodArg, PointError, Regime, Settings};
use crate::grid::{Axis, GridSpec};
use crate::output::{write_records, Format, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "SPECFUN_THREADS";

#[derive(Debug, Parser)]
#[command(name = "specfun", version, about = "Dawson's integral, Faddeeva, plasma dispersion, Fresnel and Gordeyev functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval {
        #[arg(value_enum)]
        function: Function,
        /// Argument as a single token such as 1.5-0.25i (omega for gordeyev).
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        /// Add the quadrature oracle and the relative difference.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate over a grid, one record per point, first axis fastest.
    Tabulate {
        #[arg(value_enum)]
        function: Function,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compare a method with the quadrature oracle over a grid.
    AccuracyMap {
        #[arg(value_enum)]
        function: Function,
        #[command(flatten)]
        grid: GridArgs,
        /// Write a JSON summary with the largest relative difference.
        #[arg(long)]
        summary: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Time each evaluation route over a grid.
    Bench {
        #[arg(value_enum)]
        function: Function,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// First axis MIN:MAX:N (real part, or modulus with --polar).
    #[arg(long, value_parser = Axis::parse, allow_hyphen_values = true)]
    pub re: Axis,
    /// Second axis MIN:MAX:N (imaginary part, or argument with --polar).
    #[arg(long, value_parser = Axis::parse, allow_hyphen_values = true, default_value = "0:0:1")]
    pub im: Axis,
    #[arg(long)]
    pub polar: bool,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Relative tolerance for series, quadrature and the Gordeyev sum.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Asymptotic truncation orders R,S.
    #[arg(long, value_parser = parse_orders)]
    pub orders: Option<TruncationOrders>,
    /// Series/asymptotic switch on |z|^2.
    #[arg(long)]
    pub crossover: Option<f64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Gordeyev lambda.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: Option<Complex64>,
    /// Gordeyev nu.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub nu: Option<Complex64>,
    /// Gordeyev expansion used by the asymptotic methods.
    #[arg(long, value_enum, default_value_t = Regime::Omega)]
    pub regime: Regime,
}

fn parse_orders(s: &str) -> Result<TruncationOrders, String> {
    let (r, t) = s.split_once(',').ok_or_else(|| format!("expected R,S (got '{s}')"))?;
    let r: usize = r.parse().map_err(|_| format!("bad R in '{s}'"))?;
    let t: usize = t.parse().map_err(|_| format!("bad S in '{s}'"))?;
    TruncationOrders::new(r, t).map_err(|e| e.to_string())
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(String),
    Io(io::Error),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric(_) => EXIT_NUMERIC,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
            CliError::Io(e) => write!(f, "output error: {e}"),
        }
    }
}

impl From<PointError> for CliError {
    fn from(e: PointError) -> Self {
        match e {
            PointError::Usage(m) => CliError::Usage(m),
            PointError::Numeric(e) => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn settings(c: &Common) -> Result<Settings, CliError> {
    let mut policy = MethodPolicy::default();
    let mut truncation = SumTruncation::default();
    if let Some(t) = c.tol {
        policy.series.rel_tol = t;
        policy.quadrature.rel_tol = t;
        policy.quadrature.abs_tol = t;
        truncation.tail_tol = t;
    }
    if let Some(o) = c.orders {
        policy.orders = o;
    }
    if let Some(x) = c.crossover {
        policy.crossover_abs2 = x;
    }
    policy.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    truncation.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Settings {
        policy,
        truncation,
        lambda: c.lambda,
        nu: c.nu,
        regime: c.regime,
    })
}

fn grid(g: &GridArgs) -> Result<GridSpec, CliError> {
    GridSpec::new(g.re, g.im, g.polar).map_err(CliError::Usage)
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer (got '{v}')")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Usage(e.to_string()))
}

/// Evaluates `f` on every point in parallel, keeping the input order.
fn par_map<T: Send, F: Fn(Complex64) -> T + Sync>(points: &[Complex64], f: F) -> Result<Vec<T>, CliError> {
    let pool = thread_pool()?;
    Ok(pool.install(|| points.par_iter().map(|&z| f(z)).collect()))
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn record(z: Complex64, f: Function, s: &Settings, method: MethodArg, with_oracle: bool) -> Result<OutputRecord, PointError> {
    let e = evaluate(f, z, s, method)?;
    let v = e.result.value;
    let (oracle_re, oracle_im, rd) = if with_oracle {
        let o = oracle(f, z, s)?;
        (Some(o.re), Some(o.im), Some(rel_diff(v, o, f64::MIN_POSITIVE)))
    } else {
        (None, None, None)
    };
    Ok(OutputRecord {
        z_re: z.re,
        z_im: z.im,
        value_re: v.re,
        value_im: v.im,
        method: e.tag.to_string(),
        est_error: e.result.est_error,
        oracle_re,
        oracle_im,
        rel_diff: rd,
    })
}

fn error_record(z: Complex64) -> OutputRecord {
    OutputRecord {
        z_re: z.re,
        z_im: z.im,
        value_re: f64::NAN,
        value_im: f64::NAN,
        method: "error".into(),
        est_error: f64::NAN,
        oracle_re: Some(f64::NAN),
        oracle_im: Some(f64::NAN),
        rel_diff: Some(f64::NAN),
    }
}

#[derive(Debug, Serialize)]
struct MapSummary {
    function: String,
    method: String,
    points: usize,
    errors: usize,
    max_rel_diff: f64,
    max_at_re: f64,
    max_at_im: f64,
}

fn function_name(f: Function) -> String {
    f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn accuracy_map(
    f: Function,
    g: &GridSpec,
    s: &Settings,
    c: &Common,
    summary: &Option<PathBuf>,
) -> Result<(), CliError> {
    let points = g.points();
    let rows = par_map(&points, |z| record(z, f, s, c.method, true))?;
    let mut records = Vec::with_capacity(rows.len());
    let mut errors = 0;
    let mut worst = (f64::NEG_INFINITY, Complex64::new(f64::NAN, f64::NAN));
    for (z, row) in points.iter().zip(rows) {
        match row {
            Ok(r) => {
                let d = r.rel_diff.unwrap_or(f64::NAN);
                if !(d <= worst.0) {
                    worst = (d, *z);
                }
                records.push(r);
            }
            Err(PointError::Usage(m)) => return Err(CliError::Usage(m)),
            Err(PointError::Numeric(_)) => {
                errors += 1;
                records.push(error_record(*z));
            }
        }
    }
    let mut out = sink(&c.out)?;
    write_records(&mut out, &records, c.format, true)?;
    if let Some(path) = summary {
        let sm = MapSummary {
            function: function_name(f),
            method: c.method.name().to_string(),
            points: points.len(),
            errors,
            max_rel_diff: worst.0,
            max_at_re: worst.1.re,
            max_at_im: worst.1.im,
        };
        let mut w = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut w, &sm).map_err(io::Error::from)?;
        writeln!(w)?;
        w.flush()?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct BenchRow {
    function: String,
    route: String,
    points: usize,
    failures: usize,
    ns_per_point: f64,
    mean_terms: f64,
    max_terms: usize,
}

fn bench(f: Function, g: &GridSpec, s: &Settings, c: &Common) -> Result<(), CliError> {
    let points = g.points();
    let routes = if c.method == MethodArg::Auto {
        vec![MethodArg::Series, MethodArg::Asymptotic, MethodArg::Auto]
    } else {
        vec![c.method]
    };
    let mut rows = Vec::new();
    for m in routes {
        let start = Instant::now();
        let mut failures = 0;
        let mut terms = Vec::with_capacity(points.len());
        for &z in &points {
            match evaluate(f, z, s, m) {
                Ok(e) => terms.push(e.result.terms_used),
                Err(PointError::Usage(msg)) => return Err(CliError::Usage(msg)),
                Err(PointError::Numeric(_)) => failures += 1,
            }
        }
        let elapsed = start.elapsed().as_nanos() as f64;
        let mean_terms = if terms.is_empty() {
            f64::NAN
        } else {
            terms.iter().sum::<usize>() as f64 / terms.len() as f64
        };
        rows.push(BenchRow {
            function: function_name(f),
            route: m.name().to_string(),
            points: points.len(),
            failures,
            ns_per_point: elapsed / points.len() as f64,
            mean_terms,
            max_terms: terms.iter().copied().max().unwrap_or(0),
        });
    }
    let mut out = sink(&c.out)?;
    match c.format {
        Format::Csv => {
            writeln!(out, "function,route,points,failures,ns_per_point,mean_terms,max_terms")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{:?},{:?},{}",
                    r.function, r.route, r.points, r.failures, r.ns_per_point, r.mean_terms, r.max_terms
                )?;
            }
        }
        Format::Json => {
            for r in &rows {
                serde_json::to_writer(&mut out, r).map_err(io::Error::from)?;
                writeln!(out)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn tabulate_points(
    f: Function,
    points: &[Complex64],
    s: &Settings,
    c: &Common,
    with_oracle: bool,
) -> Result<(), CliError> {
    let rows = par_map(points, |z| record(z, f, s, c.method, with_oracle))?;
    let records = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut out = sink(&c.out)?;
    write_records(&mut out, &records, c.format, with_oracle)?;
    Ok(())
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval {
            function,
            z,
            oracle,
            common,
        } => {
            let s = settings(&common)?;
            tabulate_points(function, &[z], &s, &common, oracle)
        }
        Command::Tabulate {
            function,
            grid: g,
            oracle,
            common,
        } => {
            let s = settings(&common)?;
            tabulate_points(function, &grid(&g)?.points(), &s, &common, oracle)
        }
        Command::AccuracyMap {
            function,
            grid: g,
            summary,
            common,
        } => {
            let s = settings(&common)?;
            accuracy_map(function, &grid(&g)?, &s, &common, &summary)
        }
        Command::Bench {
            function,
            grid: g,
            common,
        } => {
            let s = settings(&common)?;
            bench(function, &grid(&g)?, &s, &common)
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
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
    match execute(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("specfun: {e}");
            e.code()
        }
    }
}
