mod commands;
mod grid;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orbline_core::{GaussRat, StabilityParam, WeightSpec};

/// Exact computations on orbifold projective lines.
#[derive(Parser, Debug)]
#[command(name = "orbline", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct SpecArg {
    /// Weights, e.g. `2,3,7`.
    #[arg(long = "A", value_name = "WEIGHTS", value_parser = parse_spec)]
    pub spec: WeightSpec,
}

#[derive(clap::Args, Debug, Clone)]
pub struct TauArg {
    /// Point of the upper half plane as `re,im`; entries may be `p/q`.
    #[arg(long, value_name = "RE,IM", value_parser = parse_tau, allow_hyphen_values = true, default_value = "0,1")]
    pub tau: StabilityParam,
}

#[derive(clap::Args, Debug, Clone)]
pub struct WindowArg {
    /// Largest |l| of catalogued line bundles.
    #[arg(long = "L", default_value_t = 2)]
    pub l: u32,
    /// Longest catalogued torsion sheaf; defaults to twice the largest weight.
    #[arg(long = "N")]
    pub n: Option<u32>,
}

impl WindowArg {
    pub fn resolve(&self, spec: &WeightSpec) -> (u32, u32) {
        (self.l, self.n.unwrap_or(2 * spec.max_weight()))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Euler characteristic and weight type.
    Classify {
        #[command(flatten)]
        spec: SpecArg,
    },
    /// Normal form and degree of a lattice element, e.g. `3*x1-c`.
    NormalForm {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Class in the Grothendieck group, rank and degree of an object.
    K0Class {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, allow_hyphen_values = true)]
        obj: String,
    },
    /// Central charge and phase of an object under slope stability.
    Charge {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        tau: TauArg,
        #[arg(long, allow_hyphen_values = true)]
        obj: String,
    },
    /// dim Hom(E, F), or dim Ext¹(E, F) with `--ext`.
    Homdim {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        ext: bool,
    },
    /// Largest phase gap over the semistable catalogue.
    Gldim {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        tau: TauArg,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long)]
        json: bool,
    },
    /// Largest phase gap at every point of a grid, as CSV.
    Scan {
        #[command(flatten)]
        spec: SpecArg,
        /// A file with one `re,im` per line, an inline list `re,im;re,im`,
        /// or `rect:RE0,RE1,NRE;IM0,IM1,NIM`.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// Output file; stdout when absent or `-`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long, env = "ORBLINE_THREADS")]
        threads: Option<usize>,
    },
    /// Check the stability and global-dimension statements for one weight type.
    VerifyTheorems {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        tau: TauArg,
        #[command(flatten)]
        window: WindowArg,
    },
    /// Decide whether a charge table is a slope central charge.
    CheckThm1 {
        #[command(flatten)]
        spec: SpecArg,
        /// JSON map from `O`, `S`, `S[i,j]` to `["re", "im"]`.
        #[arg(long)]
        charges: PathBuf,
    },
}

fn parse_spec(s: &str) -> Result<WeightSpec, String> {
    WeightSpec::parse(s).map_err(|e| e.to_string())
}

fn parse_tau(s: &str) -> Result<StabilityParam, String> {
    GaussRat::parse_pair(s)
        .and_then(StabilityParam::new)
        .map_err(|e| e.to_string())
}

/// Failure classes and their exit codes.
#[derive(Debug)]
pub enum Failure {
    /// A verification ran and did not pass; the report is already printed.
    Verification,
    Usage(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match commands::run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Internal(msg) => eprintln!("internal error: {msg}"),
                Failure::Verification => {}
            }
            ExitCode::from(failure.code())
        }
    }
}
