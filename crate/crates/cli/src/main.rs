mod commands;
mod figures;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use entsym::Error;

#[derive(Parser, Debug)]
#[command(name = "entsym", version, about = "Related operators and symmetry-based entanglement measures")]
struct Cli {
    /// Worker threads for Monte Carlo sampling and restarts (0 = all cores). Results do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Schmidt coefficients at or below this fraction of the largest do not count toward the rank.
    #[arg(long, global = true, default_value_t = entsym::state::DEFAULT_RANK_TOL)]
    rank_tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct PartitionArg {
    /// Subsystems forming side A, comma separated (default: subsystem 0).
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub partition: Vec<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeasureKind {
    M,
    Es,
    Entropy,
    Negativity,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schmidt coefficients, rank and entanglement flags of a pure state.
    Schmidt {
        state: PathBuf,
        #[command(flatten)]
        partition: PartitionArg,
    },
    /// Operator on side B equivalent to an operator on side A.
    Related {
        state: PathBuf,
        operator: PathBuf,
        #[command(flatten)]
        partition: PartitionArg,
        /// Print the residual of the relation.
        #[arg(long)]
        verify: bool,
        /// Write the related operator here (JSON) instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Related quantum operation and its CP/TP/unital flags.
    Channel {
        state: PathBuf,
        kraus: PathBuf,
        #[command(flatten)]
        partition: PartitionArg,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Entanglement measures of a pure or mixed state.
    Measure {
        state: PathBuf,
        #[command(flatten)]
        partition: PartitionArg,
        #[arg(long, value_enum, default_value = "all")]
        measure: MeasureKind,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Optimizer restarts for the minimum fidelity of mixed states.
        #[arg(long, default_value_t = 16)]
        restarts: usize,
    },
    /// Normalized measures along the four-level family of the first figure.
    Fig1 {
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, default_value_t = 20_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "fig1.csv")]
        out: PathBuf,
    },
    /// Normalized symmetry of entanglement for two-term states in several dimensions.
    Fig2 {
        #[arg(long, value_delimiter = ',', default_value = "2,4,8")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 21)]
        points: usize,
        #[arg(long, default_value_t = 20_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "fig2.csv")]
        out: PathBuf,
    },
    /// Compare sampled Haar matrix elements with their analytic distribution.
    Haarcheck {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Process exit status for each error class.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::ZeroVector | Error::DimensionMismatch { .. } | Error::NotNormalized { .. } => 2,
        Error::InvalidDensityMatrix(_) | Error::NotPositive { .. } | Error::NonSquare { .. } => 2,
        Error::InvalidBipartition(_) | Error::InvalidSubsystem(_) => 3,
        Error::NotFullyEntangled { .. } => 4,
        Error::WrongOrientation { .. } => 5,
        Error::Io(_) => 6,
        _ => 1,
    }
}

fn run(cli: Cli) -> entsym::Result<()> {
    let tol = cli.rank_tol;
    if !(0.0..1.0).contains(&tol) {
        return Err(Error::DomainError(format!("--rank-tol must lie in [0, 1), got {tol}")));
    }
    match cli.command {
        Command::Schmidt { state, partition } => commands::schmidt(&state, &partition.partition, tol),
        Command::Related { state, operator, partition, verify, out } => {
            commands::related(&state, &operator, &partition.partition, verify, out.as_deref(), tol)
        }
        Command::Channel { state, kraus, partition, json } => {
            commands::channel(&state, &kraus, &partition.partition, json, tol)
        }
        Command::Measure { state, partition, measure, samples, seed, restarts } => {
            commands::measure(&state, &partition.partition, measure, samples, seed, restarts, tol)
        }
        Command::Fig1 { points, samples, seed, out } => figures::fig1(points, samples, seed, &out, tol),
        Command::Fig2 { dims, points, samples, seed, out } => figures::fig2(&dims, points, samples, seed, &out, tol),
        Command::Haarcheck { d, samples, seed } => commands::haarcheck(d, samples, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
