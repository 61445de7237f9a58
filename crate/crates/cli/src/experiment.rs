use std::path::Path;

use qwalk::circulant::circulant_sigma;
use qwalk::gate_ir::{to_qasm, Circuit};
use qwalk::matrix::DenseMatrix;
use qwalk::oracle::{self, l1_distance, max_deviation};
use qwalk::simulator::{circuit_unitary, distribution, run, sample, Counts, Distribution, Statevector, MAX_UNITARY_QUBITS};
use qwalk::walk_builder::{scattering_circuit, walk_circuit, ShiftImpl, WalkSpec};
use serde::Serialize;

use crate::config::{ExperimentConfig, OutputKind, Problem};
use crate::output::{emit_cost_table, emit_histogram};
use crate::{CliError, Result};

/// Largest deviation `compare` accepts between equivalent constructions.
pub const COMPARE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub shots: u64,
    pub seed: u64,
    pub ideal_distribution: Distribution,
    pub sampled_counts: Counts,
    pub circuit_size: usize,
    pub circuit_depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_size_formula: Option<usize>,
    pub l1_sampled_vs_ideal: f64,
}

/// The circuit a config describes.
pub fn build_circuit(problem: &Problem<'_>) -> Result<Circuit> {
    match problem {
        Problem::Walk(spec) => Ok(walk_circuit(spec)?),
        Problem::Convolution { spec, kernel_c, kernel_c2 } => {
            let step = scattering_circuit(spec.n, spec.alpha, spec.theta)?.compose(&circulant_sigma(kernel_c, kernel_c2)?)?;
            Ok(step.repeated(spec.steps))
        }
    }
}

/// Closed-form circuit size, where one exists: `n² + 4n + 1` per step with
/// the QFT shift, `2n + 1 + n(2n² − 6n + 7)/3` per step with the cascade.
pub fn paper_size_formula(problem: &Problem<'_>) -> Option<usize> {
    let Problem::Walk(spec) = problem else { return None };
    let n = spec.n;
    let per_step = match spec.shift {
        ShiftImpl::Qft => n * n + 4 * n + 1,
        ShiftImpl::Mcx if n >= 3 => 2 * n + 1 + n * (2 * n * n - 6 * n + 7) / 3,
        ShiftImpl::Mcx => return None,
    };
    Some(per_step * spec.steps)
}

/// Builds, simulates and samples the experiment. Deterministic in `config`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let problem = config.problem()?;
    let circuit = build_circuit(&problem)?;
    let paper_size_formula = paper_size_formula(&problem);
    if let Some(expected) = paper_size_formula {
        if expected != circuit.size() {
            return Err(CliError::Verification(format!("circuit size {} differs from closed form {expected}", circuit.size())));
        }
    }
    let initial = Statevector::basis_state(circuit.num_qubits(), problem.initial())?;
    let ideal = distribution(&run(&circuit, &initial)?)?;
    let counts = sample(&ideal, config.shots, config.seed)?;
    let l1 = l1_distance(&counts.to_distribution(), &ideal)?;
    Ok(ExperimentReport {
        shots: config.shots,
        seed: config.seed,
        ideal_distribution: ideal,
        sampled_counts: counts,
        circuit_size: circuit.size(),
        circuit_depth: circuit.depth(),
        paper_size_formula,
        l1_sampled_vs_ideal: l1,
    })
}

/// QASM for the config's circuit.
pub fn experiment_qasm(config: &ExperimentConfig) -> Result<String> {
    Ok(to_qasm(&build_circuit(&config.problem()?)?)?)
}

/// Writes every requested output of `config` into `dir`; returns the paths.
pub fn write_outputs(config: &ExperimentConfig, report: &ExperimentReport, dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let n = config.problem()?.n();
    let mut written = Vec::new();
    for &kind in &config.outputs {
        let text = match kind {
            OutputKind::DistributionCsv => report.ideal_distribution.to_csv()?,
            OutputKind::CountsCsv => report.sampled_counts.to_csv()?,
            OutputKind::Qasm => experiment_qasm(config)?,
            OutputKind::CostTable => emit_cost_table(n, n)?,
            OutputKind::HistogramText => emit_histogram(&report.ideal_distribution),
        };
        let path = dir.join(kind.file_name());
        std::fs::write(&path, text)?;
        written.push(path);
    }
    Ok(written)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    /// Pairs of construction names and their largest entrywise deviation,
    /// global phase aligned.
    pub deviations: Vec<(String, f64)>,
}

impl Comparison {
    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().map(|(_, d)| *d).fold(0.0, f64::max)
    }
}

fn unitary(c: &Circuit) -> Result<DenseMatrix> {
    circuit_unitary(c).map_err(|e| CliError::Config(format!("cannot form the unitary: {e}")))
}

/// Checks that independent constructions of the config's evolution agree:
/// both shift implementations and the dense oracle for walks, the circuit and
/// the dense oracle for convolutions.
pub fn compare(config: &ExperimentConfig) -> Result<Comparison> {
    let problem = config.problem()?;
    if problem.n() + 1 > MAX_UNITARY_QUBITS {
        return Err(CliError::Config(format!("compare supports at most {} position qubits", MAX_UNITARY_QUBITS - 1)));
    }
    let size = 1usize << problem.n();
    let mut deviations = Vec::new();
    match &problem {
        Problem::Walk(spec) => {
            let qft = unitary(&walk_circuit(&WalkSpec { shift: ShiftImpl::Qft, ..(*spec).clone() })?)?;
            let mcx = unitary(&walk_circuit(&WalkSpec { shift: ShiftImpl::Mcx, ..(*spec).clone() })?)?;
            let reference = oracle::step_matrix(size, spec.alpha, spec.theta)?.pow(spec.steps);
            deviations.push(("qft vs mcx".to_string(), max_deviation(&qft, &mcx, true)?));
            deviations.push(("qft vs oracle".to_string(), max_deviation(&qft, &reference, true)?));
        }
        Problem::Convolution { spec, kernel_c, kernel_c2 } => {
            let circuit = unitary(&build_circuit(&problem)?)?;
            let propagation = DenseMatrix::block_diag(&oracle::circulant_matrix(kernel_c.first_row()), &oracle::circulant_matrix(kernel_c2.first_row()));
            let scatter = oracle::scattering_matrix(spec.alpha, spec.theta).kron(&DenseMatrix::identity(size));
            let reference = (&propagation * &scatter).pow(spec.steps);
            deviations.push(("circuit vs oracle".to_string(), max_deviation(&circuit, &reference, true)?));
        }
    }
    let comparison = Comparison { deviations };
    if comparison.max_deviation() > COMPARE_TOLERANCE {
        return Err(CliError::Verification(format!("max deviation {:e} exceeds {COMPARE_TOLERANCE:e}", comparison.max_deviation())));
    }
    Ok(comparison)
}
