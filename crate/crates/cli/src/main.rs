//! `vqls`: decomposition dumps, cost-circuit depth reports and seeded
//! VQLS runs for the tridiagonal test matrices.
//!
//! Exit codes: 0 success, 1 optimizer abort, 2 usage or configuration
//! error, 3 I/O error.

mod artifacts;
mod commands;
mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::ExperimentConfig;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Abort(String),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Abort(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "vqls", version, about = "Variational linear solver experiments for tridiagonal matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the unitary decomposition of the matrix.
    Decomp(ConfigArgs),
    /// Report lowered depth of the cost circuits for both schemes.
    Depth(ConfigArgs),
    /// Optimize once and write trace.csv, summary.json and config.txt.
    Run(ConfigArgs),
    /// Run consecutive seeds and write aggregate.csv.
    Sweep(SweepArgs),
}

/// Every flag mirrors the config-file key of the same name (dashes become
/// underscores). Flags override the file.
#[derive(Debug, Args)]
struct ConfigArgs {
    /// key=value file; `#` starts a comment
    #[arg(long)]
    config: Option<PathBuf>,
    /// Number of qubits; the matrix is 2^n × 2^n
    #[arg(long)]
    n: Option<String>,
    /// Diagonal entry
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<String>,
    /// Off-diagonal entry
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<String>,
    /// pauli | multiqubit
    #[arg(long)]
    scheme: Option<String>,
    /// normalized | nonnormalized
    #[arg(long)]
    cost: Option<String>,
    /// exact | shots
    #[arg(long)]
    mode: Option<String>,
    /// Measurements per Hadamard test in shots mode
    #[arg(long)]
    shots: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// product_ry | layered_ry_cx
    #[arg(long)]
    ansatz: Option<String>,
    #[arg(long)]
    layers: Option<String>,
    /// Simplex cost-spread stopping tolerance
    #[arg(long)]
    tol: Option<String>,
    #[arg(long)]
    max_evals: Option<String>,
    /// collapsed | double_sum
    #[arg(long)]
    overlap: Option<String>,
    /// Output directory; defaults to $VQLS_OUT, then ./vqls-out
    #[arg(long)]
    out: Option<String>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Number of consecutive seeds starting at --seed
    #[arg(long, default_value_t = 5)]
    seeds: usize,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<ExperimentConfig, CliError> {
        let mut cfg = ExperimentConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        let flags = [
            ("n", &self.n),
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("scheme", &self.scheme),
            ("cost", &self.cost),
            ("mode", &self.mode),
            ("shots", &self.shots),
            ("seed", &self.seed),
            ("ansatz", &self.ansatz),
            ("layers", &self.layers),
            ("tol", &self.tol),
            ("max_evals", &self.max_evals),
            ("overlap", &self.overlap),
            ("out", &self.out),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                cfg.set(key, v)?;
            }
        }
        Ok(cfg)
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Decomp(a) => commands::decomp(&a.resolve()?),
        Command::Depth(a) => commands::depth(&a.resolve()?),
        Command::Run(a) => commands::run(&a.resolve()?),
        Command::Sweep(a) => commands::sweep(&a.config.resolve()?, a.seeds),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
