//! Experiment configs, reports and text/CSV output for the `qwalk` binary.

pub mod config;
pub mod experiment;
pub mod output;

pub use config::{ConvolutionSpec, ExperimentConfig, KernelSpec, OutputKind, Problem};
pub use experiment::{compare, run_experiment, ExperimentReport};
pub use output::{emit_cost_table, emit_histogram};

use qwalk::QwalkError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Core(#[from] QwalkError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
