use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use num_complex::Complex64;
use qwalk::oracle::{l1_distance, step_matrix};
use qwalk::simulator::{distribution, Distribution, Statevector};
use qwalk::walk_builder::{shift_qft, walk_circuit, ShiftImpl, WalkSpec, HADAMARD_LIKE_ALPHA, HADAMARD_LIKE_THETA};
use qwalk_cli::{compare, emit_cost_table, run_experiment, CliError, ExperimentConfig};

fn config_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn load(name: &str) -> ExperimentConfig {
    ExperimentConfig::load(&config_path(name)).unwrap()
}

fn qwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwalk")).args(args).output().unwrap()
}

fn oracle_distribution(spec: &WalkSpec) -> Distribution {
    let t = step_matrix(1 << spec.n, spec.alpha, spec.theta).unwrap().pow(spec.steps);
    let psi = Statevector::basis_state(spec.n + 1, &spec.initial).unwrap();
    let out: Vec<Complex64> = t.apply(psi.amplitudes());
    distribution(&Statevector::from_amplitudes(out).unwrap()).unwrap()
}

fn assert_ideal(d: &Distribution, expected: &[(&str, f64)]) {
    let want = Distribution::from_bitstrings(d.num_qubits(), expected.iter().copied()).unwrap();
    for i in 0..1usize << d.num_qubits() {
        assert!((d.get(i) - want.get(i)).abs() <= 1e-9, "outcome {i}: {} vs {}", d.get(i), want.get(i));
    }
}

#[test]
fn four_sites_one_step() {
    let report = run_experiment(&load("walk_4_sites_1_step.json")).unwrap();
    assert_ideal(&report.ideal_distribution, &[("011", 0.5), ("101", 0.5)]);
    assert_eq!(report.circuit_size, 13);
    assert_eq!(report.paper_size_formula, Some(13));
    assert_eq!(report.sampled_counts.shots(), 1024);
}

#[test]
fn four_sites_two_steps() {
    let report = run_experiment(&load("walk_4_sites_2_steps.json")).unwrap();
    assert_ideal(&report.ideal_distribution, &[("000", 0.25), ("010", 0.25), ("100", 0.25), ("110", 0.25)]);
    assert_eq!(report.circuit_size, 26);
}

#[test]
fn eight_sites_one_step() {
    let config = load("walk_8_sites_1_step.json");
    // one step from x = 2, v = 0 lands on x = 3 moving right and x = 1 moving left
    let oracle = oracle_distribution(config.walk.as_ref().unwrap());
    let labels: Vec<String> = oracle.iter_bitstrings().map(|(b, _)| b).collect();
    assert_eq!(labels, ["0011", "1001"]);
    let report = run_experiment(&config).unwrap();
    assert_ideal(&report.ideal_distribution, &[("0011", 0.5), ("1001", 0.5)]);
    assert_eq!(report.circuit_size, 22);
}

#[test]
fn every_walk_config_matches_the_oracle() {
    for name in ["walk_4_sites_1_step.json", "walk_4_sites_2_steps.json", "walk_8_sites_1_step.json", "walk_8_sites_mcx.json"] {
        let config = load(name);
        let report = run_experiment(&config).unwrap();
        let l1 = l1_distance(&report.ideal_distribution, &oracle_distribution(config.walk.as_ref().unwrap())).unwrap();
        assert!(l1 <= 1e-9, "{name}: {l1:e}");
        assert_eq!(report.paper_size_formula, Some(report.circuit_size), "{name}");
    }
}

#[test]
fn mcx_walk_size_matches_closed_form() {
    for n in 3..=6 {
        let spec = WalkSpec { n, steps: 2, alpha: 0.3, theta: 0.9, shift: ShiftImpl::Mcx, initial: "0".repeat(n + 1) };
        let json = serde_json::json!({"version": 1, "seed": 0, "shots": 16, "walk": spec}).to_string();
        let report = run_experiment(&ExperimentConfig::from_json(&json).unwrap()).unwrap();
        assert_eq!(Some(report.circuit_size), report.paper_size_formula, "n = {n}");
    }
}

#[test]
fn report_l1_is_counts_against_ideal() {
    let report = run_experiment(&load("walk_4_sites_2_steps.json")).unwrap();
    let l1 = l1_distance(&report.sampled_counts.to_distribution(), &report.ideal_distribution).unwrap();
    assert_eq!(report.l1_sampled_vs_ideal, l1);
    assert!(l1 < 0.1);
}

#[test]
fn convolution_config_runs_and_compares() {
    let config = load("convolution_4_sites.json");
    let report = run_experiment(&config).unwrap();
    assert!((report.ideal_distribution.total() - 1.0).abs() < 1e-9);
    assert_eq!(report.paper_size_formula, None);
    assert!(compare(&config).unwrap().max_deviation() <= 1e-9);
}

#[test]
fn compare_on_eight_sites() {
    let c = compare(&load("walk_8_sites_1_step.json")).unwrap();
    assert!(c.max_deviation() <= 1e-9);
    let out = qwalk(&["compare", config_path("walk_8_sites_mcx.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    let value: f64 = last.strip_prefix("max deviation: ").unwrap().parse().unwrap();
    assert!(value <= 1e-9);
}

#[test]
fn costs_subcommand_prints_seven_rows() {
    let out = qwalk(&["costs", "--n-min", "2", "--n-max", "8"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 8);
    assert!(rows[0].starts_with("n,"));
    assert!(rows[1].starts_with("2,13,"));
}

#[test]
fn cost_table_agrees_with_constructed_circuits() {
    let table = emit_cost_table(2, 8).unwrap();
    for (row, n) in table.lines().skip(1).zip(2usize..) {
        let cells: Vec<usize> = row.split(',').take(5).map(|c| c.parse().unwrap()).collect();
        let spec = WalkSpec { n, steps: 1, alpha: HADAMARD_LIKE_ALPHA, theta: HADAMARD_LIKE_THETA, shift: ShiftImpl::Qft, initial: "0".repeat(n + 1) };
        let walk = walk_circuit(&spec).unwrap();
        let shift = shift_qft(n).unwrap();
        assert_eq!(cells, [n, walk.size(), walk.depth(), shift.size(), shift.depth()]);
        assert_eq!(cells[1], n * n + 4 * n + 1);
        assert_eq!(cells[3], n * n + 2 * n);
    }
    let n10 = emit_cost_table(10, 10).unwrap();
    assert_eq!(n10.lines().nth(1).unwrap().split(',').nth(7), Some("567"));
}

#[test]
fn repeated_runs_write_identical_files() {
    let config = config_path("walk_4_sites_1_step.json");
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let mut stdouts = Vec::new();
    for dir in &dirs {
        let out = qwalk(&["run", config.to_str().unwrap(), "--out-dir", dir.path().to_str().unwrap()]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        stdouts.push(out.stdout);
    }
    assert_eq!(stdouts[0], stdouts[1]);
    for file in ["distribution.csv", "counts.csv", "histogram.txt", "circuit.qasm"] {
        let a = std::fs::read(dirs[0].path().join(file)).unwrap();
        let b = std::fs::read(dirs[1].path().join(file)).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, b, "{file}");
    }
    let csv = std::fs::read_to_string(dirs[0].path().join("distribution.csv")).unwrap();
    assert_eq!(csv.lines().next(), Some("bitstring,probability"));
    let counts = std::fs::read_to_string(dirs[0].path().join("counts.csv")).unwrap();
    assert_eq!(counts.lines().next(), Some("bitstring,count"));
}

#[test]
fn qasm_subcommand_emits_openqasm() {
    let out = qwalk(&["qasm", config_path("walk_4_sites_1_step.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("OPENQASM 2.0;"));
    assert!(text.contains("qreg q[3];"));
}

#[test]
fn config_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"version": 1, "seed": 1, "walk": {"n": 2, "steps": 1, "alpha": 0, "theta": 0, "shift": "qft", "initial": "010", "extra": 1}}"#).unwrap();
    for args in [vec!["run", bad.to_str().unwrap()], vec!["run", "/nonexistent/config.json"], vec!["costs", "--n-min", "5", "--n-max", "3"]] {
        let out = qwalk(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn non_unitary_kernel_is_a_config_error() {
    let json = r#"{"version": 1, "seed": 1, "convolution": {"n": 1, "steps": 1, "alpha": 0, "theta": 0, "initial": "00",
        "kernelC": {"kind": "first_row", "values": [[0.7, 0], [0.7, 0]]}, "kernelC2": {"kind": "phases", "values": [0, 0]}}}"#;
    let err = ExperimentConfig::from_json(json).unwrap_err();
    assert!(matches!(err, CliError::Config(_)));
    assert_eq!(err.exit_code(), 2);
    assert_eq!(CliError::Verification(String::new()).exit_code(), 3);
}
