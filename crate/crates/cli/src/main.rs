//! `perfalign` — batch alignment experiments over performance recordings.
//!
//! Subcommands cover the pipeline stages: feature extraction and caching,
//! a single alignment, the full evaluation grid, annotation transfer,
//! annotator-precision statistics, and synthetic fixture generation.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod config;
mod experiment;
mod grid;
mod report;

use config::ExperimentConfig;

/// Top-level error taxonomy, mapped straight to exit codes: configuration
/// problems exit 1, I/O and data problems exit 2, a grid run where no cell
/// succeeded exits 3.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Io(String),
    AllCellsFailed,
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn io(msg: impl Into<String>) -> Self {
        CliError::Io(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Io(_) => 2,
            CliError::AllCellsFailed => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::AllCellsFailed => write!(f, "every grid cell failed; see failed.csv"),
        }
    }
}

impl std::error::Error for CliError {}

/// Command-line overrides applied on top of the config file.
#[derive(Debug, Default)]
pub struct Overrides {
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
    pub seed: Option<u64>,
    pub radius: Option<usize>,
    pub exact: bool,
}

#[derive(Parser)]
#[command(name = "perfalign", version, about = "Alignment experiments over performance recordings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Experiment configuration (TOML).
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Output directory; overrides `output_dir` from the config.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Worker threads for parallel sections (default: one per CPU).
    #[arg(long, value_name = "N")]
    workers: Option<usize>,
    /// Random seed; overrides `seed` from the config.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Window radius for the multiscale aligner; overrides `dtw.radius`.
    #[arg(long, value_name = "N")]
    radius: Option<usize>,
    /// Use the exact aligner regardless of the configured mode.
    #[arg(long)]
    exact: bool,
}

impl CommonArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            out: self.out.clone(),
            workers: self.workers,
            seed: self.seed,
            radius: self.radius,
            exact: self.exact,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Extract and cache every feature configuration in the grid.
    Features(CommonArgs),
    /// Align the first configured pair with the first grid cell.
    Align(CommonArgs),
    /// Run the full grid and write the evaluation reports.
    Grid(CommonArgs),
    /// Transfer annotations from a reference recording to a target.
    Transfer(CommonArgs),
    /// Annotator-precision statistics from multi-annotator recordings.
    Annstats(CommonArgs),
    /// Generate synthetic fixtures (markers, annotators, optional audio).
    Simulate(CommonArgs),
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    let args = match &cli.command {
        Command::Features(a)
        | Command::Align(a)
        | Command::Grid(a)
        | Command::Transfer(a)
        | Command::Annstats(a)
        | Command::Simulate(a) => a,
    };
    let cfg = ExperimentConfig::load(&args.config)?;
    let ov = args.overrides();
    match &cli.command {
        Command::Features(_) => experiment::run_features(&cfg, &ov),
        Command::Align(_) => experiment::run_align(&cfg, &ov),
        Command::Grid(_) => experiment::run_grid(&cfg, &ov),
        Command::Transfer(_) => experiment::run_transfer(&cfg, &ov),
        Command::Annstats(_) => experiment::run_annstats(&cfg, &ov),
        Command::Simulate(_) => experiment::run_simulate(&cfg, &ov),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
