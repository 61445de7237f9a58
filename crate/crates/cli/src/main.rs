use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qwalk_cli::experiment::{experiment_qasm, write_outputs};
use qwalk_cli::{compare, emit_cost_table, run_experiment, ExperimentConfig, Result};

/// Build, simulate and cost discrete-time quantum walk circuits.
#[derive(Parser)]
#[command(name = "qwalk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment and print its report as JSON.
    Run {
        config: PathBuf,
        /// Directory for the outputs requested in the config.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Print the experiment circuit as OpenQASM 2.0.
    Qasm { config: PathBuf },
    /// Print the cost table as CSV.
    Costs {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Check independent constructions of the experiment's unitary against each other.
    Compare { config: PathBuf },
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Run { config, out_dir } => {
            let config = ExperimentConfig::load(&config)?;
            let report = run_experiment(&config)?;
            write_outputs(&config, &report, &out_dir)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        }
        Command::Qasm { config } => print!("{}", experiment_qasm(&ExperimentConfig::load(&config)?)?),
        Command::Costs { n_min, n_max } => print!("{}", emit_cost_table(n_min, n_max)?),
        Command::Compare { config } => {
            let comparison = compare(&ExperimentConfig::load(&config)?)?;
            for (name, d) in &comparison.deviations {
                println!("{name}: {d:e}");
            }
            println!("max deviation: {:e}", comparison.max_deviation());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qwalk: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

