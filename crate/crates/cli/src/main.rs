//! `g2k3` — elliptic K3 surfaces from genus-2 curve data.
//!
//! Four subcommands: `invariants` (Igusa–Clebsch invariants of a curve),
//! `construct` (build a fibration and classify its singular fibers),
//! `certify` (prove ρ(J(C)) = 1 by point counting), and `reproduce`
//! (re-run a bundled reference pipeline, checking every expectation).
//!
//! Exit codes: 0 success; 1 mathematical failure, including an
//! inconclusive certificate where a conclusive one was required; 2 usage
//! or parse errors. Reports are deterministic: identical inputs give
//! byte-identical `--json` documents and stdout text (timing information
//! goes to stderr only).

mod commands;
mod report;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use g2k3::error::Result;
use g2k3::CoreError;

#[derive(Parser)]
#[command(name = "g2k3", version, about = "elliptic K3 surfaces from genus-2 curve data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Igusa–Clebsch invariants [I2, I4, I6, I10] of a genus-2 curve.
    Invariants {
        /// Curve file: {"genus2": [c0..c6]} or {"hparams": {a, b, c}}.
        #[arg(long)]
        curve: PathBuf,
        /// Also write the report as canonical JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Construct an elliptic fibration and classify its singular fibers.
    Construct {
        /// Which fibration to build.
        kind: Kind,
        /// Curve file (for g, eq1, fib13; also accepted for h if it holds
        /// an "hparams" record).
        #[arg(long)]
        curve: Option<PathBuf>,
        /// Parameters (a, b, c) of y² = x(x−1)(x−a)(x−b)(x−c), for h.
        #[arg(long, num_args = 3, allow_hyphen_values = true, value_names = ["A", "B", "C"], conflicts_with = "curve")]
        abc: Option<Vec<String>>,
        /// Base-change exponent (g: 1..4, h: 1..3).
        #[arg(long)]
        n: Option<u32>,
        /// Picard number of the Jacobian, if known; adds a rank claim.
        #[arg(long)]
        rho: Option<u32>,
        /// Also write the report as canonical JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Certify ρ(J(C)) = 1 by point counts over 𝔽_p and 𝔽_{p²}.
    Certify {
        /// Curve file: {"genus2": [c0..c6]} or {"hparams": {a, b, c}}.
        #[arg(long)]
        curve: PathBuf,
        /// Odd primes to count at; at least two of good reduction needed.
        #[arg(long, num_args = 1..)]
        primes: Vec<u64>,
        /// Also write the report as canonical JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Re-run a bundled reference pipeline, checking every expectation.
    Reproduce {
        /// Which bundled example to reproduce.
        example: Example,
        /// Also write the report as canonical JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Fibration kinds accepted by `construct`.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// G^(n): degree-n base change of the Shioda–Inose fibration.
    G,
    /// H^(n): degree-n base change of the two-IV* fibration.
    H,
    /// The Shioda–Inose surface itself (II* + III* + 5 I1).
    Eq1,
    /// The Kummer-surface fibration isomorphic to G^(2).
    Fib13,
}

/// Bundled reference pipelines.
#[derive(Clone, Copy, ValueEnum)]
pub enum Example {
    /// Curve with quaternionic multiplication; G^(4) has rank 15.
    Qm,
    /// Curve with (3,3)-split Jacobian; G^(4) has rank 15.
    Split,
    /// Curve y² = x(x−1)(x+1)(x−1/7)(x+6/7); H^(3) has rank 15.
    Example43,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli, started) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CoreError::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli, started: Instant) -> Result<ExitCode> {
    match cli.command {
        Command::Invariants { curve, json } => {
            let (human, doc) = commands::invariants(&curve)?;
            report::emit(&human, &doc, json.as_deref(), started)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { kind, curve, abc, n, rho, json } => {
            let (human, doc) = commands::construct(kind, curve.as_deref(), abc.as_deref(), n, rho)?;
            report::emit(&human, &doc, json.as_deref(), started)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { curve, primes, json } => {
            let (human, doc, certified) = commands::certify(&curve, &primes)?;
            report::emit(&human, &doc, json.as_deref(), started)?;
            Ok(if certified { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Reproduce { example, json } => {
            let (human, doc, all_pass) = reproduce::run(example)?;
            report::emit(&human, &doc, json.as_deref(), started)?;
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
