//! Command-line front end for `tabalg`.
//!
//! [`Cli`] is the clap definition, [`RunConfig`] the validated configuration
//! and [`run`] the pipeline. `run` never prints; it returns the serialized
//! output, the structured error records and the exit code.

pub mod report;
mod solve;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use report::{CharsReport, ErrorRecord, KreinReport, NgonReport, Parity, Report, SpectrumReport};
use std::path::PathBuf;
use tabalg::{
    krein_tensor, multiplicities, ngon_even, ngon_odd, oracle_spectrum, CharacterTable, Error,
    Spectrum, TableAlgebraParams, DEFAULT_GRID_DENSITY, DEFAULT_TOL,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ROOT_COUNT: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// Smallest accepted `--grid-density`.
pub const MIN_GRID_DENSITY: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "tabalg",
    version,
    about = "Characters, spectra and Krein parameters of homogeneous P-polynomial table algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, angles and the full character table.
    Chars(AlgebraArgs),
    /// Eigenvalues and angles only.
    Spectrum(AlgebraArgs),
    /// Multiplicities and the Krein tensor q[i][j][w].
    Krein(AlgebraArgs),
    /// The valency-2 polygon schemes.
    Ngon(NgonArgs),
    /// Cross-check closed form, recursions and oracle; exit 4 on failure.
    Verify(AlgebraArgs),
}

#[derive(Debug, Clone, Args)]
pub struct DimensionArgs {
    /// Dimension d (number of non-identity basis elements).
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
    pub d: Option<usize>,
    /// Inclusive range `dmin..dmax`, evaluated in parallel and reported in order of d.
    #[arg(long, value_parser = parse_sweep)]
    pub sweep: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub dims: DimensionArgs,
    /// Valency k >= 2.
    #[arg(long)]
    pub k: f64,
    /// Override alpha. Defaults to (3k-6)/4, the only admissible value for d >= 5.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct NgonArgs {
    #[command(flatten)]
    pub dims: DimensionArgs,
    #[arg(long, value_enum, default_value_t = Parity::Odd)]
    pub parity: Parity,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Bisection tolerance.
    #[arg(long, env = "TABALG_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Scan nodes per unit of (d+2) in the root search.
    #[arg(long, default_value_t = DEFAULT_GRID_DENSITY)]
    pub grid_density: usize,
    /// Write the report to this file instead of stdout.
    #[arg(long = "output")]
    pub output_path: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Chars,
    Spectrum,
    Krein,
    Ngon,
    Verify,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub d_min: usize,
    pub d_max: usize,
    pub sweep: bool,
    pub k: f64,
    pub alpha: Option<f64>,
    pub parity: Parity,
    pub format: Format,
    pub tol: f64,
    pub grid_density: usize,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn single(command: CommandKind, d: usize, k: f64) -> Self {
        Self {
            command,
            d_min: d,
            d_max: d,
            sweep: false,
            k,
            alpha: None,
            parity: Parity::Odd,
            format: Format::Json,
            tol: DEFAULT_TOL,
            grid_density: DEFAULT_GRID_DENSITY,
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "tol = {} must be > 0",
                self.tol
            )));
        }
        if self.grid_density < MIN_GRID_DENSITY {
            return Err(Error::InvalidParams(format!(
                "grid density {} must be >= {MIN_GRID_DENSITY}",
                self.grid_density
            )));
        }
        if self.d_min > self.d_max {
            return Err(Error::InvalidParams(format!(
                "empty sweep {}..{}",
                self.d_min, self.d_max
            )));
        }
        Ok(())
    }
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let (command, dims, k, alpha, parity, out) = match cli.command {
            Command::Chars(a) => (
                CommandKind::Chars,
                a.dims,
                a.k,
                a.alpha,
                Parity::Odd,
                a.output,
            ),
            Command::Spectrum(a) => (
                CommandKind::Spectrum,
                a.dims,
                a.k,
                a.alpha,
                Parity::Odd,
                a.output,
            ),
            Command::Krein(a) => (
                CommandKind::Krein,
                a.dims,
                a.k,
                a.alpha,
                Parity::Odd,
                a.output,
            ),
            Command::Verify(a) => (
                CommandKind::Verify,
                a.dims,
                a.k,
                a.alpha,
                Parity::Odd,
                a.output,
            ),
            Command::Ngon(a) => (CommandKind::Ngon, a.dims, 2.0, None, a.parity, a.output),
        };
        let (d_min, d_max, sweep) = match (dims.d, dims.sweep) {
            (_, Some((lo, hi))) => (lo, hi, true),
            (Some(d), None) => (d, d, false),
            (None, None) => unreachable!("clap requires --d or --sweep"),
        };
        Self {
            command,
            d_min,
            d_max,
            sweep,
            k,
            alpha,
            parity,
            format: out.format,
            tol: out.tol,
            grid_density: out.grid_density,
            output_path: out.output_path,
        }
    }
}

fn parse_sweep(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected dmin..dmax, got {s:?}"))?;
    let lo = lo.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let hi = hi.trim().parse::<usize>().map_err(|e| e.to_string())?;
    Ok((lo, hi))
}

/// Everything `run` produced. The caller decides where to write it.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub exit_code: i32,
    /// Serialized report; empty when nothing could be computed.
    pub output: String,
    pub errors: Vec<ErrorRecord>,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::RootCountMismatch { .. } => EXIT_ROOT_COUNT,
        Error::InvalidParams(_)
        | Error::ToleranceNotMet { .. }
        | Error::NonPositiveB(_)
        | Error::BandLength { .. }
        | Error::NonSimilarizable { .. } => EXIT_INVALID,
        Error::NotARoot { .. } | Error::DegenerateColumn { .. } | Error::SpectrumLength { .. } => {
            EXIT_VERIFY
        }
    }
}

pub fn error_record(e: &Error, d: Option<usize>, k: Option<f64>) -> ErrorRecord {
    ErrorRecord {
        error: e.kind().to_string(),
        message: e.to_string(),
        exit_code: exit_code_for(e),
        d,
        k,
    }
}

/// Result of one parameter point.
struct Point {
    report: Option<Report>,
    errors: Vec<ErrorRecord>,
    exit_code: i32,
}

impl Point {
    fn ok(report: Report) -> Self {
        Self {
            report: Some(report),
            errors: Vec::new(),
            exit_code: EXIT_OK,
        }
    }

    fn failed(e: &Error, d: usize, k: f64) -> Self {
        Self {
            report: None,
            errors: vec![error_record(e, Some(d), Some(k))],
            exit_code: exit_code_for(e),
        }
    }
}

pub fn run(config: &RunConfig) -> RunOutcome {
    if let Err(e) = config.validate() {
        return RunOutcome {
            exit_code: exit_code_for(&e),
            output: String::new(),
            errors: vec![error_record(&e, None, Some(config.k))],
        };
    }
    let points: Vec<Point> = (config.d_min..=config.d_max)
        .into_par_iter()
        .map(|d| run_point(config, d))
        .collect();

    let mut reports = Vec::new();
    let mut errors = Vec::new();
    let mut exit_code = EXIT_OK;
    for p in points {
        reports.extend(p.report);
        errors.extend(p.errors);
        exit_code = exit_code.max(p.exit_code);
    }
    let output = if reports.is_empty() {
        String::new()
    } else {
        match config.format {
            Format::Json => report::to_json(&reports, config.sweep),
            Format::Csv => report::to_csv(&reports, config.sweep),
        }
    };
    RunOutcome {
        exit_code,
        output,
        errors,
    }
}

fn run_point(config: &RunConfig, d: usize) -> Point {
    let k = config.k;
    if config.command == CommandKind::Ngon {
        return match ngon_report(config.parity, d) {
            Ok(r) => Point::ok(Report::Ngon(r)),
            Err(e) => Point::failed(&e, d, k),
        };
    }
    let params = match config.alpha {
        Some(a) => TableAlgebraParams::with_alpha(d, k, a),
        None => TableAlgebraParams::homogeneous(d, k),
    };
    let params = match params {
        Ok(p) => p,
        Err(e) => return Point::failed(&e, d, k),
    };
    let solved = match solve::solve(&params, config.grid_density, config.tol) {
        Ok(s) => s,
        Err(e) => return Point::failed(&e, d, k),
    };
    let report = match algebra_report(config.command, &params, &solved, config.tol) {
        Ok(r) => r,
        Err(e) => return Point::failed(&e, d, k),
    };
    let mut point = Point::ok(report);
    if let Some(e) = &solved.fallback {
        point.errors.push(error_record(e, Some(d), Some(k)));
        point.exit_code = EXIT_ROOT_COUNT;
    } else if let Some(Report::Verify(v)) = &point.report {
        if !v.passed {
            let failed: Vec<&str> = v
                .checks
                .iter()
                .filter(|c| c.gating && !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            point.errors.push(ErrorRecord {
                error: "VerificationFailed".to_string(),
                message: format!("failed checks: {}", failed.join(", ")),
                exit_code: EXIT_VERIFY,
                d: Some(d),
                k: Some(k),
            });
            point.exit_code = EXIT_VERIFY;
        }
    }
    point
}

fn algebra_report(
    command: CommandKind,
    p: &TableAlgebraParams,
    solved: &solve::Solved,
    tol: f64,
) -> tabalg::Result<Report> {
    let (d, k, alpha) = (p.d(), p.k(), p.alpha());
    let spectrum_method = solved.method;
    let lambdas = solved.spectrum.lambdas().to_vec();
    let thetas = solved.spectrum.thetas().map(<[f64]>::to_vec);
    Ok(match command {
        CommandKind::Spectrum => Report::Spectrum(SpectrumReport {
            d,
            k,
            alpha,
            spectrum_method,
            lambdas,
            thetas,
        }),
        CommandKind::Chars => Report::Chars(CharsReport {
            d,
            k,
            alpha,
            spectrum_method,
            lambdas,
            thetas,
            p: solved.table.rows().to_vec(),
            valencies: solved.table.valencies().to_vec(),
            order_n: solved.table.order_n(),
        }),
        CommandKind::Krein => {
            let m = multiplicities(&solved.table)?;
            let q = krein_tensor(&solved.table, &m)?;
            Report::Krein(KreinReport {
                d,
                k,
                alpha,
                spectrum_method,
                order_n: solved.table.order_n(),
                multiplicities: m,
                krein: q.nested(),
            })
        }
        CommandKind::Verify => {
            let oracle = oracle_spectrum(p, tol)?;
            Report::Verify(verify::verify(p, solved, oracle.lambdas())?)
        }
        CommandKind::Ngon => unreachable!("handled before parameter validation"),
    })
}

fn ngon_report(parity: Parity, d: usize) -> tabalg::Result<NgonReport> {
    let (alpha, spectrum, table): (Option<f64>, Spectrum, CharacterTable) = match parity {
        Parity::Odd => {
            let g = ngon_odd(d)?;
            (Some(g.params.alpha()), g.spectrum, g.table)
        }
        Parity::Even => {
            let g = ngon_even(d)?;
            (None, g.spectrum, g.table)
        }
    };
    let m = multiplicities(&table)?;
    let q = krein_tensor(&table, &m)?;
    Ok(NgonReport {
        parity,
        d,
        k: 2.0,
        alpha,
        lambdas: spectrum.lambdas().to_vec(),
        thetas: spectrum.thetas().map(<[f64]>::to_vec),
        p: table.rows().to_vec(),
        valencies: table.valencies().to_vec(),
        order_n: table.order_n(),
        multiplicities: m,
        krein: q.nested(),
    })
}
