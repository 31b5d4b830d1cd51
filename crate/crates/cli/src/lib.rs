//! Command-line front end for the `skein-core` verifiers.
//!
//! [`run`] takes the argument list and returns what should be written to
//! stdout and stderr together with the exit code, so tests can drive the CLI
//! without spawning a process.

mod checks;
mod expand;
mod output;

use std::ffi::OsString;
use std::fmt;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skein_core::{AlgebraKind, VerificationReport};

pub use checks::{ad_pairs, confluence_words, homomorphism_pairs, jacobi_triples};
pub use expand::{expand, Expansion, Term};
pub use output::{render_json, render_text, ReportJson};

/// Environment variable overriding [`DEFAULT_DEGREE_CEILING`].
pub const CEILING_ENV: &str = "SKEIN_MAX_DEGREE_CEILING";
pub const DEFAULT_DEGREE_CEILING: u32 = 16;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

const EXPR_HELP: &str = "\
Expression grammar:
  sum     := product (('+' | '-') product)*
  product := unary (('*' | '/') unary)*
  unary   := '-' unary | '+' unary | power
  power   := atom ('^' integer)?
  atom    := integer | s | q | P[i,j] | X[i,j] | Q[i,j] | Qinv[i,j] | '(' sum ')'

s is the square root of q. P[i,j] is a torus skein generator, X[i,j] a quantum
torus generator (P[i,j] is read as its image X[i,j] in the quantum torus),
Q[i,j] the dilogarithm along (i,j) and Qinv[i,j] its inverse. Everything is
truncated at --max-degree. Negative powers are allowed for series with
constant term 1.";

#[derive(Debug, Parser)]
#[command(name = "skein", version, about = "Exact verifiers for torus skein and quantum torus identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Q_x Q_y = Q_y Q_{x+y} Q_x, bidegree by bidegree
    Pentagon(CommonArgs),
    /// Φ(V)Φ(U) = Φ(U)Φ(X[1,1])Φ(V) in the quantum torus
    PhiPentagon(CommonArgs),
    /// [P'_{2x}, P'_{2y}] = [P'_x, P'_{x+2y}] - 2 P'_{2x+2y}
    #[command(name = "identity-2-2")]
    Identity22(CommonArgs),
    /// Ad_{Q_x} P_y = P_y + P_{x+y} on sampled pairs with det(x,y) = ±1
    AdCheck(CommonArgs),
    /// Jacobi identity of the bracket on random lattice triples
    Jacobi(CommonArgs),
    /// project(f g) = project(f) project(g) on random skein elements
    Homomorphism(CommonArgs),
    /// project(Q_l) = Φ(X_l) for l in (1,0), (0,1), (1,1)
    DilogImage(CommonArgs),
    /// Evaluate an expression and print its canonical form
    #[command(after_help = EXPR_HELP)]
    Expand(ExpandArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Algebra to compute in (default: torus-skein, or quantum-torus for phi-pentagon)
    #[arg(long, value_enum)]
    pub algebra: Option<AlgebraArg>,
    /// Truncation degree δ = i + j
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
    /// Number of random samples (default depends on the command)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: Option<u64>,
    /// Seed for randomized checks
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Report elapsed_ms as 0 so that repeated runs are byte-identical
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ExpandArgs {
    /// Expression to evaluate
    #[arg(long)]
    pub expr: String,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    TorusSkein,
    QuantumTorus,
}

impl From<AlgebraArg> for AlgebraKind {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::TorusSkein => AlgebraKind::TorusSkein,
            AlgebraArg::QuantumTorus => AlgebraKind::QuantumTorus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg),
        }
    }
}

/// The degree ceiling in force: [`CEILING_ENV`] if set and valid, else the default.
pub fn degree_ceiling() -> Result<u32, String> {
    match std::env::var(CEILING_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{} must be a nonnegative integer, got {:?}", CEILING_ENV, v)),
        Err(_) => Ok(DEFAULT_DEGREE_CEILING),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_PASS,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    run_command(&cli.command)
}

pub fn run_command(command: &Command) -> Outcome {
    let common = match command {
        Command::Expand(a) => &a.common,
        Command::Pentagon(c)
        | Command::PhiPentagon(c)
        | Command::Identity22(c)
        | Command::AdCheck(c)
        | Command::Jacobi(c)
        | Command::Homomorphism(c)
        | Command::DilogImage(c) => c,
    };
    let ceiling = match degree_ceiling() {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    if common.max_degree > ceiling {
        return Outcome::usage(format!(
            "--max-degree {} exceeds the ceiling {} (set {} to raise it)",
            common.max_degree, ceiling, CEILING_ENV
        ));
    }
    if let Command::Expand(a) = command {
        let algebra = common.algebra.unwrap_or(AlgebraArg::TorusSkein);
        return match expand(&a.expr, algebra.into(), common.max_degree) {
            Ok(e) => {
                let stdout = match common.format {
                    Format::Text => format!("{}\n", e.text),
                    Format::Json => output::expand_json(algebra.into(), common.max_degree, &e),
                };
                Outcome {
                    code: EXIT_PASS,
                    stdout,
                    stderr: String::new(),
                }
            }
            Err(e) => Outcome::usage(e),
        };
    }
    let start = Instant::now();
    let report = match checks::dispatch(command, common) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let elapsed = if common.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    emit(VerificationReport {
        elapsed_ms: elapsed,
        ..report
    }, common.format)
}

fn emit(report: VerificationReport, format: Format) -> Outcome {
    let stdout = match format {
        Format::Text => render_text(&report),
        Format::Json => render_json(&report),
    };
    Outcome {
        code: if report.passed() { EXIT_PASS } else { EXIT_FAIL },
        stdout,
        stderr: String::new(),
    }
}
