//! The `hermitrig` command line front end.
//!
//! Exit codes: 0 on success, 1 when verification or a numerical solve
//! fails, 2 for unreadable or inconsistent input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::functions::BuiltinFunction;
use crate::grid::make_grid;
use crate::hermite::{build_hermite_with_diagnostics, BuildMode, HermiteTrigPoly};
use crate::io::{fmt_real, parse_poly_file, parse_sample_file, write_poly_file, FileError};
use crate::oracle::collocation_solve;
use crate::spectral::HermiteSamples;

/// Residual above which `verify` reports failure.
pub const VERIFY_TOLERANCE: f64 = 1e-7;

/// Number of points of the uniform grid used to measure approximation error.
pub const FINE_GRID_POINTS: usize = 2048;

#[derive(Debug, Parser)]
#[command(
    name = "hermitrig",
    version,
    about = "Hermite trigonometric interpolation on uniform grids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Paper,
}

impl From<ModeArg> for BuildMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => BuildMode::StrictCentered,
            ModeArg::Paper => BuildMode::PaperHTerms,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a coefficient file from a sample file.
    Build {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Overrides the mode given in the sample file (default: paper).
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Print the condition estimate of every harmonic system to stderr.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Evaluate a coefficient file; writes CSV `t,value`.
    Eval {
        #[arg(short, long)]
        coeffs: PathBuf,
        /// `start:stop:count` (endpoints inclusive) or a comma-separated list.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long, default_value_t = 0)]
        order: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the fast construction with dense collocation.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Error study for a built-in function over a list of grid sizes.
    Convergence {
        #[arg(long)]
        function: String,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        grid: i64,
        /// Comma-separated list of half-widths n.
        #[arg(long, default_value = "")]
        n: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SingularSystem { .. }
            | Error::IllConditioned { .. }
            | Error::InaccurateSolve { .. }
            | Error::SingularCollocation(_) => CliError::Failure(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))
}

fn file_error(path: &Path, e: FileError) -> CliError {
    match e {
        FileError::Invalid(inner) => CliError::from(inner),
        other => CliError::Input(format!("{}: {other}", path.display())),
    }
}

fn load_samples(
    path: &Path,
    mode: Option<ModeArg>,
) -> Result<(HermiteSamples<f64>, BuildMode), CliError> {
    let file = parse_sample_file(&read(path)?).map_err(|e| file_error(path, e))?;
    let mode = mode
        .map(BuildMode::from)
        .or(file.mode)
        .unwrap_or(BuildMode::PaperHTerms);
    Ok((file.samples, mode))
}

pub fn cmd_build(
    input: &Path,
    output: &Path,
    mode: Option<ModeArg>,
    diagnostics: Option<&mut dyn Write>,
) -> Result<HermiteTrigPoly<f64>, CliError> {
    let (samples, mode) = load_samples(input, mode)?;
    let (poly, diags) = build_hermite_with_diagnostics(&samples, mode)?;
    if let Some(sink) = diagnostics {
        for d in &diags {
            let _ = writeln!(
                sink,
                "k = {:>3} {:<6} condition {:.3e}",
                d.k, d.family, d.condition
            );
        }
    }
    write_file(output, &write_poly_file(&poly))?;
    Ok(poly)
}

fn parse_number(token: &str) -> Result<f64, CliError> {
    let token = token.trim();
    let bad = || CliError::Input(format!("malformed number '{token}'"));
    if let Some(prefix) = token.strip_suffix("pi") {
        let factor = match prefix.trim() {
            "" => 1.0,
            "-" => -1.0,
            p => p.trim_end_matches('*').parse::<f64>().map_err(|_| bad())?,
        };
        return Ok(factor * std::f64::consts::PI);
    }
    token.parse::<f64>().map_err(|_| bad())
}

/// Parses `start:stop:count` (inclusive endpoints), a comma-separated list,
/// or an empty string.
pub fn parse_points(spec: &str) -> Result<Vec<f64>, CliError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::Input(format!(
                "malformed range '{spec}' (expected start:stop:count)"
            )));
        }
        let start = parse_number(parts[0])?;
        let stop = parse_number(parts[1])?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("malformed point count '{}'", parts[2])))?;
        return Ok(match count {
            0 => Vec::new(),
            1 => vec![start],
            _ => (0..count)
                .map(|i| {
                    if i == count - 1 {
                        stop
                    } else {
                        start + (stop - start) * i as f64 / (count - 1) as f64
                    }
                })
                .collect(),
        });
    }
    spec.split(',').map(parse_number).collect()
}

pub fn cmd_eval(
    coeffs: &Path,
    points: &str,
    order: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let poly = parse_poly_file(&read(coeffs)?).map_err(|e| file_error(coeffs, e))?;
    let ts = parse_points(points)?;
    let io_err = |e: std::io::Error| CliError::Failure(e.to_string());
    writeln!(out, "t,value").map_err(io_err)?;
    for (t, v) in ts.iter().zip(poly.evaluate_many(&ts, order)) {
        writeln!(out, "{},{}", fmt_real(*t), fmt_real(v)).map_err(io_err)?;
    }
    Ok(())
}

/// Fast-versus-dense comparison for one sample set.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub mode: BuildMode,
    /// Scale used to normalise residuals: the largest sample magnitude (or 1).
    pub scale: f64,
    pub fast_residuals: Vec<f64>,
    pub oracle_residuals: Vec<f64>,
    pub coefficient_gap: f64,
}

impl VerifyReport {
    pub fn worst(&self) -> f64 {
        self.fast_residuals
            .iter()
            .chain(&self.oracle_residuals)
            .fold(self.coefficient_gap, |m, &v| m.max(v))
    }

    pub fn passed(&self) -> bool {
        self.worst() <= VERIFY_TOLERANCE
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "mode,{}", self.mode);
        let _ = writeln!(s, "order,fast_residual,oracle_residual");
        for (m, (a, b)) in self
            .fast_residuals
            .iter()
            .zip(&self.oracle_residuals)
            .enumerate()
        {
            let _ = writeln!(s, "{m},{a:.3e},{b:.3e}");
        }
        let _ = writeln!(s, "coefficient_gap,{:.3e}", self.coefficient_gap);
        let _ = writeln!(s, "status,{}", if self.passed() { "ok" } else { "FAIL" });
        s
    }
}

fn sample_scale(samples: &HermiteSamples<f64>) -> f64 {
    let m = samples
        .rows()
        .iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    if m > 0.0 {
        m
    } else {
        1.0
    }
}

pub fn verify_samples(
    samples: &HermiteSamples<f64>,
    mode: BuildMode,
) -> Result<VerifyReport, CliError> {
    let (fast, _) = build_hermite_with_diagnostics(samples, mode)?;
    let dense = collocation_solve(samples, mode)?;
    let scale = sample_scale(samples);
    let normalise = |r: Vec<f64>| r.into_iter().map(|v| v / scale).collect();
    Ok(VerifyReport {
        mode,
        scale,
        fast_residuals: normalise(fast.node_residuals(samples)),
        oracle_residuals: normalise(dense.node_residuals(samples)),
        coefficient_gap: fast.max_coeff_diff(&dense),
    })
}

pub fn cmd_verify(input: &Path, mode: Option<ModeArg>) -> Result<VerifyReport, CliError> {
    let (samples, mode) = load_samples(input, mode)?;
    verify_samples(&samples, mode)
}

/// One line of a convergence study.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub function: BuiltinFunction,
    pub p: usize,
    pub family: u8,
    pub n: usize,
    /// Normalised node residual per derivative order.
    pub node_residuals: Vec<f64>,
    /// Largest order-0 error on the fine grid against the exact function.
    pub fine_error: f64,
    pub wall_seconds: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub p: usize,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("function,p,I,n,N");
        for m in 0..=self.p {
            let _ = write!(s, ",residual_{m}");
        }
        s.push_str(",fine_error,wall_seconds\n");
        for r in &self.rows {
            let _ = write!(
                s,
                "{},{},{},{},{}",
                r.function,
                r.p,
                r.family,
                r.n,
                2 * r.n + 1
            );
            for v in &r.node_residuals {
                let _ = write!(s, ",{v:.6e}");
            }
            let _ = writeln!(s, ",{:.6e},{:.6}", r.fine_error, r.wall_seconds);
        }
        s
    }
}

/// Samples `function` analytically, builds in paper mode and measures the
/// error for every `n`. Rows are sorted by `n`.
pub fn convergence_study(
    function: BuiltinFunction,
    p: usize,
    family: i64,
    ns: &[usize],
) -> Result<ConvergenceReport, CliError> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let fine: Vec<f64> = (0..FINE_GRID_POINTS)
        .map(|i| 2.0 * std::f64::consts::PI * i as f64 / FINE_GRID_POINTS as f64)
        .collect();
    let truth: Vec<f64> = fine.iter().map(|&t| function.value(t)).collect();
    let mut rows = Vec::with_capacity(ns.len());
    for n in ns {
        let grid = make_grid(family, n as i64)?;
        let started = Instant::now();
        let nodes = grid.nodes::<f64>();
        let columns: Vec<Vec<f64>> = nodes.iter().map(|&t| function.derivatives(t, p)).collect();
        let sample_rows = (0..=p)
            .map(|m| columns.iter().map(|c| c[m]).collect())
            .collect();
        let samples = HermiteSamples::new(grid, p, sample_rows)?;
        let (poly, _) = build_hermite_with_diagnostics(&samples, BuildMode::PaperHTerms)?;
        let scale = sample_scale(&samples);
        let node_residuals = poly
            .node_residuals(&samples)
            .into_iter()
            .map(|r| r / scale)
            .collect();
        let fine_error = poly
            .evaluate_many(&fine, 0)
            .iter()
            .zip(&truth)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        rows.push(ConvergenceRow {
            function,
            p,
            family: grid.family().index(),
            n,
            node_residuals,
            fine_error,
            wall_seconds: started.elapsed().as_secs_f64(),
        });
    }
    Ok(ConvergenceReport { p, rows })
}

pub fn parse_n_list(spec: &str) -> Result<Vec<usize>, CliError> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| CliError::Input(format!("malformed n value '{s}'")))
        })
        .collect()
}

fn emit(output: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => write_file(path, text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Failure(e.to_string())),
    }
}

/// Runs one parsed command, writing reports to `stdout` and diagnostics
/// to `stderr`.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Build {
            input,
            output,
            mode,
            verbose,
        } => {
            cmd_build(&input, &output, mode, verbose.then_some(stderr))?;
        }
        Command::Eval {
            coeffs,
            points,
            order,
            output,
        } => {
            let mut buf = Vec::new();
            cmd_eval(&coeffs, &points, order, &mut buf)?;
            emit(output.as_deref(), &String::from_utf8_lossy(&buf), stdout)?;
        }
        Command::Verify { input, mode } => {
            let report = cmd_verify(&input, mode)?;
            emit(None, &report.render(), stdout)?;
            if !report.passed() {
                return Err(CliError::Failure(format!(
                    "verification failed: worst residual {:.3e} exceeds {VERIFY_TOLERANCE:e}",
                    report.worst()
                )));
            }
        }
        Command::Convergence {
            function,
            p,
            grid,
            n,
            output,
        } => {
            let function: BuiltinFunction = function.parse().map_err(CliError::Input)?;
            if p > crate::hermite::MAX_ORDER {
                return Err(Error::OrderTooHigh(p).into());
            }
            let report = convergence_study(function, p, grid, &parse_n_list(&n)?)?;
            emit(output.as_deref(), &report.to_csv(), stdout)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_specs() {
        assert_eq!(parse_points("").unwrap(), Vec::<f64>::new());
        assert_eq!(parse_points("0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(
            parse_points("0:2pi:5").unwrap()[4],
            2.0 * std::f64::consts::PI
        );
        assert_eq!(parse_points("1.5, -2").unwrap(), vec![1.5, -2.0]);
        assert_eq!(parse_points("3:4:1").unwrap(), vec![3.0]);
        assert!(parse_points("0:1").is_err());
        assert!(parse_points("0:x:3").is_err());
        assert!(parse_points("0:1:-2").is_err());
    }

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("2,4, 8").unwrap(), vec![2, 4, 8]);
        assert!(parse_n_list("").unwrap().is_empty());
        assert!(parse_n_list("2,a").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(Error::EvenNodeCount(4)).exit_code(), 2);
        let singular = Error::SingularSystem {
            k: 1,
            family: crate::hermite::CoefficientFamily::Sine,
        };
        assert_eq!(CliError::from(singular).exit_code(), 1);
    }

    #[test]
    fn exact_reproduction_in_study() {
        let report = convergence_study(BuiltinFunction::Cos3PlusSin, 1, 0, &[5, 3, 4]).unwrap();
        assert_eq!(
            report.rows.iter().map(|r| r.n).collect::<Vec<_>>(),
            vec![3, 4, 5]
        );
        for row in &report.rows {
            assert!(row.fine_error <= 1e-10, "n = {}: {}", row.n, row.fine_error);
        }
    }

    #[test]
    fn empty_study_has_header_only() {
        let report = convergence_study(BuiltinFunction::ExpSin, 2, 1, &[]).unwrap();
        assert_eq!(
            report.to_csv(),
            "function,p,I,n,N,residual_0,residual_1,residual_2,fine_error,wall_seconds\n"
        );
    }
}
