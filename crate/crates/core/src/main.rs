use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wsl::bench::{
    emit_csv, prepare, run_experiment, sweep_epsilon, sweep_qubits, write_csv, ExperimentRecord,
    FunctionSpec,
};
use wsl::{Result, WslError, WslMode};

mod args;

/// Walsh Series Loader experiments.
#[derive(Debug, Parser)]
#[command(name = "wsl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Infidelity against register size at a fixed eps.
    SweepQubits {
        #[command(flatten)]
        common: SweepArgs,
        /// eps0 = eps1 (decimal or 2^-k).
        #[arg(long, default_value = "0.0078125")]
        eps: String,
        /// Register sizes: `7..13` (inclusive) or a comma list.
        #[arg(long, default_value = "7..13")]
        n: String,
    },
    /// Infidelity against eps = eps0 = eps1 at a fixed register size.
    SweepEps {
        #[command(flatten)]
        common: SweepArgs,
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// `2^-3..2^-10`, or a comma list of decimals / `2^-k` values.
        #[arg(long, default_value = "2^-3..2^-10")]
        eps_grid: String,
    },
    /// Runs one experiment and prints its CSV record.
    Run {
        #[command(flatten)]
        point: PointArgs,
    },
    /// Prints the loader circuit in the text gate format.
    DumpCircuit {
        #[command(flatten)]
        point: PointArgs,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// `all` or a comma list of function ids.
    #[arg(long, default_value = "all")]
    functions: String,
    /// Comma list of `correct`, `incomplete`.
    #[arg(long, default_value = "correct,incomplete")]
    modes: String,
    #[arg(long)]
    out: PathBuf,
    /// Write 0 in the wall_time_ms column so output is byte-reproducible.
    #[arg(long)]
    zero_timing: bool,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[arg(long)]
    function: String,
    #[arg(long)]
    n: usize,
    /// Sets both eps0 and eps1.
    #[arg(long, default_value = "0.0078125")]
    eps: String,
    /// Overrides eps0.
    #[arg(long)]
    eps0: Option<String>,
    /// Overrides eps1.
    #[arg(long)]
    eps1: Option<String>,
    #[arg(long, default_value = "correct")]
    mode: String,
    /// Function parameter override, `name=value`; repeatable.
    #[arg(long = "param")]
    params: Vec<String>,
}

impl PointArgs {
    fn resolve(&self) -> Result<(FunctionSpec, f64, f64, WslMode)> {
        let mut spec = FunctionSpec::from_id(&self.function)?;
        for p in &self.params {
            let (name, value) = args::parse_param(p)?;
            spec = spec.with_param(name, value)?;
        }
        let eps = args::parse_eps(&self.eps)?;
        let eps0 = self
            .eps0
            .as_deref()
            .map(args::parse_eps)
            .transpose()?
            .unwrap_or(eps);
        let eps1 = self
            .eps1
            .as_deref()
            .map(args::parse_eps)
            .transpose()?
            .unwrap_or(eps);
        Ok((spec, eps0, eps1, self.mode.parse()?))
    }
}

fn finish_sweep(mut records: Vec<ExperimentRecord>, common: &SweepArgs) -> Result<()> {
    if common.zero_timing {
        for r in &mut records {
            r.wall_time_ms = 0.0;
        }
    }
    emit_csv(&records, &common.out)?;
    eprintln!(
        "wrote {} records to {}",
        records.len(),
        common.out.display()
    );
    Ok(())
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::SweepQubits { common, eps, n } => {
            let specs = args::parse_functions(&common.functions)?;
            let modes = args::parse_modes(&common.modes)?;
            let qubits = args::parse_qubits(&n)?;
            let records = sweep_qubits(&specs, &qubits, args::parse_eps(&eps)?, &modes)?;
            finish_sweep(records, &common)
        }
        Command::SweepEps {
            common,
            n,
            eps_grid,
        } => {
            let specs = args::parse_functions(&common.functions)?;
            let modes = args::parse_modes(&common.modes)?;
            let grid = args::parse_eps_grid(&eps_grid)?;
            let records = sweep_epsilon(&specs, n, &grid, &modes)?;
            finish_sweep(records, &common)
        }
        Command::Run { point } => {
            let (spec, eps0, eps1, mode) = point.resolve()?;
            let record = run_experiment(&spec, point.n, eps0, eps1, mode)?;
            write_csv(&[record], std::io::stdout().lock()).map_err(|source| WslError::Csv {
                path: "<stdout>".into(),
                source,
            })
        }
        Command::DumpCircuit { point, out } => {
            let (spec, eps0, eps1, mode) = point.resolve()?;
            let text = prepare(&spec, point.n, eps0, eps1, mode)?.circuit.to_text();
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| WslError::Io { path, source })
                }
                None => std::io::stdout()
                    .lock()
                    .write_all(text.as_bytes())
                    .map_err(|source| WslError::Io {
                        path: "<stdout>".into(),
                        source,
                    }),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("wsl: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
