use std::collections::BTreeSet;
use std::path::Path;

use num_complex::Complex64;
use qwalk::circulant::{kernel_from_spectrum, spectrum_of_circulant, CirculantKernel, PhaseSpectrum};
use qwalk::simulator::Statevector;
use qwalk::walk_builder::WalkSpec;
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

pub const CONFIG_VERSION: u32 = 1;

/// Largest register `run` will simulate.
pub const MAX_SIMULATED_QUBITS: usize = 20;

const DEFAULT_SHOTS: u64 = 1024;

fn default_shots() -> u64 {
    DEFAULT_SHOTS
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKind {
    DistributionCsv,
    CountsCsv,
    Qasm,
    CostTable,
    HistogramText,
}

impl OutputKind {
    pub fn file_name(self) -> &'static str {
        match self {
            OutputKind::DistributionCsv => "distribution.csv",
            OutputKind::CountsCsv => "counts.csv",
            OutputKind::Qasm => "circuit.qasm",
            OutputKind::CostTable => "costs.csv",
            OutputKind::HistogramText => "histogram.txt",
        }
    }
}

/// A circulant kernel given either by its first row (`[re, im]` pairs) or by
/// its eigenphases in DFT order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "values", rename_all = "snake_case")]
pub enum KernelSpec {
    FirstRow(Vec<[f64; 2]>),
    Phases(Vec<f64>),
}

impl KernelSpec {
    pub fn to_kernel(&self) -> Result<CirculantKernel> {
        let kernel = match self {
            KernelSpec::FirstRow(row) => CirculantKernel::new(row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())?,
            KernelSpec::Phases(thetas) => kernel_from_spectrum(&PhaseSpectrum::new(thetas.clone())?),
        };
        spectrum_of_circulant(&kernel)?;
        Ok(kernel)
    }
}

/// A walk whose propagation is `block-diag(C, C')` for arbitrary unitary
/// circulants: `C` moves the `|0⟩` velocity component, `C'` the `|1⟩` one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvolutionSpec {
    pub n: usize,
    pub steps: usize,
    pub alpha: f64,
    pub theta: f64,
    pub initial: String,
    #[serde(rename = "kernelC")]
    pub kernel_c: KernelSpec,
    #[serde(rename = "kernelC2")]
    pub kernel_c2: KernelSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walk: Option<WalkSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convolution: Option<ConvolutionSpec>,
    #[serde(default = "default_shots")]
    pub shots: u64,
    pub seed: u64,
    #[serde(default)]
    pub outputs: BTreeSet<OutputKind>,
}

/// The validated circuit family of a config.
#[derive(Clone, Debug)]
pub enum Problem<'a> {
    Walk(&'a WalkSpec),
    Convolution { spec: &'a ConvolutionSpec, kernel_c: CirculantKernel, kernel_c2: CirculantKernel },
}

impl<'a> Problem<'a> {
    pub fn n(&self) -> usize {
        match self {
            Problem::Walk(w) => w.n,
            Problem::Convolution { spec, .. } => spec.n,
        }
    }

    pub fn initial(&self) -> &str {
        match self {
            Problem::Walk(w) => &w.initial,
            Problem::Convolution { spec, .. } => &spec.initial,
        }
    }
}

fn config_err(e: impl std::fmt::Display) -> CliError {
    CliError::Config(e.to_string())
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: ExperimentConfig = serde_json::from_str(text).map_err(config_err)?;
        config.problem()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Validates the config and resolves its kernels.
    pub fn problem(&self) -> Result<Problem<'_>> {
        if self.version != CONFIG_VERSION {
            return Err(CliError::Config(format!("unsupported config version {}", self.version)));
        }
        if self.shots == 0 {
            return Err(CliError::Config("shots must be at least 1".into()));
        }
        let problem = match (&self.walk, &self.convolution) {
            (Some(walk), None) => {
                walk.validate().map_err(config_err)?;
                Problem::Walk(walk)
            }
            (None, Some(spec)) => {
                if spec.n == 0 {
                    return Err(CliError::Config("convolution needs at least one position qubit".into()));
                }
                let kernel_c = spec.kernel_c.to_kernel().map_err(|e| CliError::Config(format!("kernelC: {e}")))?;
                let kernel_c2 = spec.kernel_c2.to_kernel().map_err(|e| CliError::Config(format!("kernelC2: {e}")))?;
                for (name, k) in [("kernelC", &kernel_c), ("kernelC2", &kernel_c2)] {
                    if k.len() != 1 << spec.n {
                        return Err(CliError::Config(format!("{name} has {} entries, expected {}", k.len(), 1usize << spec.n)));
                    }
                }
                Problem::Convolution { spec, kernel_c, kernel_c2 }
            }
            _ => return Err(CliError::Config("exactly one of `walk` and `convolution` must be given".into())),
        };
        if problem.n() + 1 > MAX_SIMULATED_QUBITS {
            return Err(CliError::Config(format!("{} qubits exceeds the simulator limit of {MAX_SIMULATED_QUBITS}", problem.n() + 1)));
        }
        Statevector::basis_state(problem.n() + 1, problem.initial()).map_err(config_err)?;
        Ok(problem)
    }
}
