//! Command-line front end for `fermiso-core`.
//!
//! Every subcommand reads potentials from JSON files and writes one JSON
//! document with sorted keys to standard output. Exit codes: 0 equal/pass,
//! 1 unequal/fail, 2 parse error, 3 contract violation, 4 numeric failure.

pub mod files;
pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use fermiso_core::branches::{extract_series, lemma31_solve, min_radius, RoucheOptions};
use fermiso_core::irreducibility::{reducibility_test, scan_lambda, CRITERION};
use fermiso_core::isospectral::{fermi_isospectral, floquet_isospectral, isospectral_k0, verify_rigidity};
use fermiso_core::oracle::cofactor_charpoly;
use fermiso_core::{compute_charpoly, ErrorClass, Scalar};
use num_complex::Complex64;
use serde_json::{json, Value};

use files::{parse_potential, poly_to_json, PotentialInput};
use report::{complex, number, reducibility_json, rigidity_json, verdict_json};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error(transparent)]
    Core(#[from] fermiso_core::Error),
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Numeric(_) => 4,
            CliError::Core(e) => match e.class() {
                ErrorClass::Parse => 2,
                ErrorClass::Contract => 3,
                ErrorClass::Numeric => 4,
            },
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "fermiso", version, about = "Floquet and Fermi isospectrality of discrete periodic operators")]
pub struct Cli {
    /// Tolerance for floating-point comparisons and branch residuals.
    #[arg(long, global = true, default_value_t = 1e-8)]
    float_tol: f64,
    /// Cross-check characteristic polynomials against cofactor expansion.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// Sampling radius (default 10 (1 + max |V|)).
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long, default_value_t = 8)]
    terms: usize,
    #[arg(long, default_value_t = 4096)]
    samples: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial det(D_V(z) - λ I), optionally at λ = λ0.
    Charpoly {
        file: PathBuf,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Fermi isospectrality at λ0.
    FermiEq {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, alias = "lambda")]
        lambda0: String,
    },
    /// Floquet isospectrality.
    FloquetEq { left: PathBuf, right: PathBuf },
    /// Laurent coefficients of every eigenvalue branch of a 1-D potential.
    Branches {
        file: PathBuf,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Point where two branches differ by η = eps/2.
    Lemma31 {
        left: PathBuf,
        right: PathBuf,
        #[arg(long = "l", default_value_t = 0)]
        label: usize,
        #[arg(long, default_value_t = 2e-3)]
        eps: f64,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Reducibility of the Fermi curve of a 2-D potential.
    Irreducible {
        file: PathBuf,
        #[arg(long, conflicts_with = "scan")]
        lambda: Option<String>,
        /// Comma-separated energies; [V] is always added.
        #[arg(long)]
        scan: Option<String>,
    },
    /// Component rigidity of Fermi-isospectral separable potentials.
    VerifyRigidity {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, alias = "lambda")]
        lambda0: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read(path: &Path) -> Result<PotentialInput, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_potential(&text).map_err(|e| match e {
        CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn scalar_arg(flag: &str, text: &str) -> Result<Scalar, CliError> {
    text.trim()
        .parse()
        .map_err(|e| CliError::Parse(format!("--{flag}: {e}")))
}

fn exact_arg(flag: &str, text: &str) -> Result<Scalar, CliError> {
    let s = scalar_arg(flag, text)?;
    if !s.is_exact() {
        return Err(CliError::Parse(format!("--{flag}: expected an exact rational, got `{text}`")));
    }
    Ok(s)
}

fn check_oracle(oracle: bool, input: &PotentialInput, poly: &fermiso_core::LaurentPoly) -> Result<(), CliError> {
    if oracle && cofactor_charpoly(input.potential())? != *poly {
        return Err(CliError::Numeric("cofactor oracle disagrees with interpolation".into()));
    }
    Ok(())
}

fn run_command(cli: &Cli) -> Result<(Value, i32), CliError> {
    match &cli.command {
        Command::Charpoly { file, lambda } => {
            let input = read(file)?;
            let p = compute_charpoly(input.potential())?;
            check_oracle(cli.oracle, &input, p.poly())?;
            let out = match lambda {
                Some(l) => poly_to_json(&p.specialize(&exact_arg("lambda", l)?.to_exact()?)),
                None => poly_to_json(p.poly()),
            };
            Ok((out, 0))
        }
        Command::FermiEq { left, right, lambda0 } => {
            let (x, y) = (read(left)?, read(right)?);
            let lam = exact_arg("lambda0", lambda0)?;
            if cli.oracle {
                for input in [&x, &y] {
                    check_oracle(true, input, compute_charpoly(input.potential())?.poly())?;
                }
            }
            let v = fermi_isospectral(x.potential(), y.potential(), &lam)?;
            Ok((verdict_json(&v, x.potential().dim()), if v.equal { 0 } else { 1 }))
        }
        Command::FloquetEq { left, right } => {
            let (x, y) = (read(left)?, read(right)?);
            let (x, y) = (x.potential(), y.potential());
            let v = if x.is_exact() && y.is_exact() {
                floquet_isospectral(x, y)?
            } else {
                isospectral_k0(x, y, cli.float_tol)?
            };
            Ok((verdict_json(&v, x.dim()), if v.equal { 0 } else { 1 }))
        }
        Command::Branches { file, series } => {
            let input = read(file)?;
            let v = input.potential();
            let radius = series.radius.unwrap_or_else(|| min_radius(v));
            let branches = (0..v.cell_size())
                .map(|l| extract_series(v, l, radius, series.terms, series.samples))
                .collect::<Result<Vec<_>, _>>()?;
            let out = json!({
                "period": v.cell_size(),
                "average": complex(v.average().to_complex()),
                "radius": number(radius),
                "samples": series.samples,
                "terms": series.terms,
                "branches": branches.iter().map(|b| json!({
                    "label": b.label,
                    "linear": complex(b.linear),
                    "constant": complex(b.constant),
                    "coefficients": b.coefficients.iter().map(|c| complex(*c)).collect::<Vec<_>>(),
                    "aliasing_estimate": number(b.aliasing_estimate),
                })).collect::<Vec<_>>(),
            });
            Ok((out, 0))
        }
        Command::Lemma31 {
            left,
            right,
            label,
            eps,
            series,
        } => {
            let (x, y) = (read(left)?, read(right)?);
            let opts = RoucheOptions {
                eta: Complex64::new(eps / 2.0, 0.0),
                eps: *eps,
                terms: series.terms,
                samples: series.samples,
                radius: series.radius,
                tol: cli.float_tol,
                ..RoucheOptions::default()
            };
            let r = lemma31_solve(x.potential(), y.potential(), *label, &opts)?;
            let out = json!({
                "label": r.label,
                "eta": complex(r.eta),
                "eps": number(*eps),
                "radius": number(r.radius),
                "k0": r.k0,
                "leading_difference": complex(r.leading_difference),
                "truncated_root": complex(r.truncated_root),
                "root": complex(r.root),
                "root_abs": number(r.root.norm()),
                "residual": number(r.residual),
            });
            Ok((out, 0))
        }
        Command::Irreducible { file, lambda, scan } => {
            let input = read(file)?;
            let v = input.potential();
            let verdicts = match (lambda, scan) {
                (Some(l), _) => vec![reducibility_test(v, &exact_arg("lambda", l)?)?],
                (None, Some(grid)) => {
                    let grid = grid
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(|s| exact_arg("scan", s))
                        .collect::<Result<Vec<_>, _>>()?;
                    scan_lambda(v, &grid)?
                }
                (None, None) => scan_lambda(v, &[])?,
            };
            let out = json!({
                "criterion": CRITERION,
                "average": v.exact_average()?.to_string(),
                "verdicts": verdicts.iter().map(reducibility_json).collect::<Vec<_>>(),
            });
            Ok((out, 0))
        }
        Command::VerifyRigidity { left, right, lambda0 } => {
            let (x, y) = (read(left)?.separable()?, read(right)?.separable()?);
            let r = verify_rigidity(&x, &y, &exact_arg("lambda0", lambda0)?)?;
            Ok((rigidity_json(&r), if r.passed() { 0 } else { 1 }))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match run_command(&cli) {
        Ok((value, code)) => Outcome {
            code,
            stdout: report::render(&value),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
