//! `finsler4` — JSON-in/JSON-out front end for the 4-spinor geometry crate.
//!
//! Subcommands: `length`, `transform`, `reduce`, `gtensor`, `check`.
//! Inputs come from `--in`/`--matrix` (a file path, or inline JSON when the
//! value starts with `[` or `{`) or from stdin when absent. Every command
//! prints a single JSON document on stdout, so commands pipe into each
//! other; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 property failure (a failed `check` run or a
//! `--require-sl4` rejection), 2 input error (malformed JSON, wrong arity,
//! unreadable file).

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use finsler4_core::herm::{finsler_length, quartic_det, GTensor, GTensorEntry, Vec16};
use finsler4_core::isometry::{induced_transform, l_matrix};
use finsler4_core::reduction::{quartic_reduced, split};
use finsler4_core::spinor::is_sl4;
use finsler4_core::{Mat4C, RunConfig};

#[derive(Parser)]
#[command(
    name = "finsler4",
    version,
    about = "Finslerian 4-spinor geometry: quartic lengths, isometries, dimensional reduction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quartic length of a 16-vector (JSON array of 16 reals)
    Length {
        /// Input vector: path or inline JSON; stdin when absent
        #[arg(long = "in", value_name = "PATH|JSON")]
        input: Option<String>,
        /// Write the result here instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Transform a 16-vector by a 4×4 complex matrix (X ↦ DXD⁺)
    Transform {
        /// The matrix D: path or inline JSON (4×4 nested arrays of [re, im])
        #[arg(long, value_name = "PATH|JSON")]
        matrix: String,
        /// Input vector: path or inline JSON; stdin when absent
        #[arg(long = "in", value_name = "PATH|JSON")]
        input: Option<String>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Fail (exit 1) unless det D = 1 within --tol
        #[arg(long)]
        require_sl4: bool,
        /// Print the 16×16 matrix of the induced action instead of
        /// transforming a vector (no vector input is read)
        #[arg(long = "emit-L")]
        emit_l: bool,
        /// Tolerance for --require-sl4
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Split a 16-vector into vector/spinor/scalar parts and evaluate the
    /// quartic along both routes
    Reduce {
        #[arg(long = "in", value_name = "PATH|JSON")]
        input: Option<String>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Export the exact integer coefficient table of the quartic form
    Gtensor {
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run the full property-check harness and report per-property results
    Check {
        /// Master seed; the same seed reproduces a byte-identical report
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trial count for the sampled property suites
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Override the threshold of every approximate property
        #[arg(long)]
        tol: Option<f64>,
        /// Negative control: corrupt the basis table fed to the
        /// trace-duality suite (the run must then fail)
        #[arg(long, hide = true)]
        corrupt_tau: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

enum CliError {
    /// Malformed or unreadable input; exit 2.
    Input(String),
    /// A required mathematical property failed; exit 1.
    Property(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Property(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Property(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Length { input, out } => {
            let x = parse_vec16(&read_source(&input)?)?;
            emit(&out, &LengthOutput::from(&x))
        }
        Command::Transform {
            matrix,
            input,
            out,
            require_sl4,
            emit_l,
            tol,
        } => {
            if tol.is_nan() || tol < 0.0 {
                return Err(CliError::Input("--tol must be non-negative".into()));
            }
            let d = parse_mat4(&read_source(&Some(matrix))?)?;
            if require_sl4 && !is_sl4(&d, tol) {
                let det = d.det();
                return Err(CliError::Property(format!(
                    "matrix is not in SL(4,C): det D = {}{:+}i (tolerance {tol:e})",
                    det.re, det.im
                )));
            }
            if emit_l {
                let l = l_matrix(&d)
                    .map_err(|e| CliError::Input(format!("cannot form L(D): {e}")))?;
                emit(&out, &l)
            } else {
                let x = parse_vec16(&read_source(&input)?)?;
                emit(&out, &induced_transform(&d, &x))
            }
        }
        Command::Reduce { input, out } => {
            let x = parse_vec16(&read_source(&input)?)?;
            let reduced = split(&x);
            let det_route = quartic_det(&x);
            let reduced_route = quartic_reduced(&reduced);
            emit(
                &out,
                &ReduceOutput {
                    reduced,
                    quartic_det: det_route,
                    quartic_reduced: reduced_route,
                    abs_diff: (det_route - reduced_route).abs(),
                },
            )
        }
        Command::Gtensor { out } => {
            let g = GTensor::get();
            emit(
                &out,
                &GTensorFile {
                    convention: CONVENTION,
                    entries: g.entries().collect(),
                },
            )
        }
        Command::Check {
            seed,
            samples,
            tol,
            corrupt_tau,
            out,
        } => {
            if samples == 0 {
                return Err(CliError::Input("--samples must be at least 1".into()));
            }
            if let Some(t) = tol {
                if t.is_nan() || t <= 0.0 {
                    return Err(CliError::Input("--tol must be positive".into()));
                }
            }
            let report = finsler4_core::check::run_checks(&RunConfig {
                seed,
                samples,
                tol_override: tol,
                corrupt_tau,
            });
            for p in &report.properties {
                eprintln!(
                    "{} {:<42} samples {:>6}  max_error {:.3e}  threshold {:.3e}",
                    if p.pass { "PASS" } else { "FAIL" },
                    p.name,
                    p.samples,
                    p.max_error,
                    p.threshold
                );
            }
            eprintln!(
                "overall: {} ({} properties, seed {})",
                if report.pass { "PASS" } else { "FAIL" },
                report.properties.len(),
                report.seed
            );
            emit(&out, &report)?;
            if report.pass {
                Ok(())
            } else {
                Err(CliError::Property(format!(
                    "property check failed (reproduce with --seed {seed})"
                )))
            }
        }
    }
}

const CONVENTION: &str = "one entry per sorted index multiset {A<=B<=C<=D}; the quartic equals \
     sum(coefficient * X^A X^B X^C X^D) with each monomial counted once; \
     divide by the multiset's permutation count for the fully symmetric \
     tensor component";

#[derive(Serialize)]
struct GTensorFile {
    convention: &'static str,
    entries: Vec<GTensorEntry>,
}

#[derive(Serialize)]
struct LengthOutput {
    quartic: f64,
    length: LengthValue,
}

#[derive(Serialize)]
#[serde(untagged)]
enum LengthValue {
    Defined(f64),
    Undefined(&'static str),
}

impl From<&Vec16> for LengthOutput {
    fn from(x: &Vec16) -> Self {
        LengthOutput {
            quartic: quartic_det(x),
            length: match finsler_length(x) {
                Some(l) => LengthValue::Defined(l),
                None => LengthValue::Undefined("undefined"),
            },
        }
    }
}

#[derive(Serialize)]
struct ReduceOutput {
    reduced: finsler4_core::ReducedX,
    quartic_det: f64,
    quartic_reduced: f64,
    abs_diff: f64,
}

/// Reads `--in`-style arguments: inline JSON when the value starts with a
/// JSON bracket, otherwise a file path; stdin when absent.
fn read_source(arg: &Option<String>) -> Result<String, CliError> {
    match arg {
        Some(v) if v.trim_start().starts_with(['[', '{']) => Ok(v.clone()),
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {path}: {e}"))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_vec16(text: &str) -> Result<Vec16, CliError> {
    serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("expected a JSON array of 16 finite reals: {e}")))
}

fn parse_mat4(text: &str) -> Result<Mat4C, CliError> {
    serde_json::from_str(text).map_err(|e| {
        CliError::Input(format!(
            "expected a 4x4 JSON matrix of [re, im] pairs: {e}"
        ))
    })
}

fn emit<T: Serialize>(out: &Option<PathBuf>, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
