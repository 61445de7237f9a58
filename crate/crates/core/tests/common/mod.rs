#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use qwalk::gate_ir::{Circuit, Gate, McxMethod, PhaseAngle, Polarity};
use qwalk::matrix::DenseMatrix;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A uniformly random gate from the full vocabulary on `num_qubits ≥ 2` qubits.
pub fn random_gate<R: Rng>(rng: &mut R, num_qubits: usize) -> Gate {
    let mut qubits: Vec<usize> = (0..num_qubits).collect();
    qubits.shuffle(rng);
    let (a, b) = (qubits[0], qubits[1]);
    let angle = rng.gen_range(-PI..PI);
    let polarity = if rng.gen_bool(0.5) { Polarity::OnOne } else { Polarity::OnZero };
    match rng.gen_range(0..10) {
        0 => Gate::h(a),
        1 => Gate::x(a),
        2 => Gate::phase_k(rng.gen_range(1..6), if rng.gen_bool(0.5) { 1 } else { -1 }, a),
        3 => Gate::Phase { angle: PhaseAngle::radians(angle), target: a },
        4 => Gate::Rotation { theta: angle, target: a },
        5 => Gate::ScatterS { alpha: angle, theta: rng.gen_range(-PI..PI), target: a },
        6 => Gate::ControlledPhase { angle: PhaseAngle::radians(angle), control: a, target: b },
        7 => Gate::cx(a, b),
        8 => Gate::ControlledRotation { theta: angle, control: a, target: b, polarity },
        _ => {
            let width = rng.gen_range(1..num_qubits);
            let mut controls = qubits[1..=width].to_vec();
            controls.sort();
            Gate::mcx(controls, qubits[0], if num_qubits >= 4 && rng.gen_bool(0.5) { McxMethod::Ancilla } else { McxMethod::NoAncilla })
        }
    }
}

pub fn random_circuit<R: Rng>(rng: &mut R, num_qubits: usize, len: usize) -> Circuit {
    let mut circuit = Circuit::new(num_qubits).unwrap();
    for _ in 0..len {
        circuit.push(random_gate(rng, num_qubits)).unwrap();
    }
    circuit
}

pub fn random_state<R: Rng>(rng: &mut R, num_qubits: usize) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..1usize << num_qubits).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= norm);
    v
}

/// First row of a random unitary circulant, built from random eigenphases by
/// a direct inverse DFT `c_m = N^{-1} Σ_k e^{iθ_k} e^{2πimk/N}`.
pub fn random_unitary_circulant_row<R: Rng>(rng: &mut R, len: usize) -> Vec<Complex64> {
    let phases: Vec<f64> = (0..len).map(|_| rng.gen_range(-PI..PI)).collect();
    (0..len)
        .map(|m| {
            phases
                .iter()
                .enumerate()
                .map(|(k, &t)| Complex64::from_polar(1.0 / len as f64, t + 2.0 * PI * (m * k) as f64 / len as f64))
                .sum()
        })
        .collect()
}

/// `|0⟩⟨0| ⊗ a + |1⟩⟨1| ⊗ b` in the `N·v + x` ordering.
pub fn velocity_switch(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    DenseMatrix::block_diag(a, b)
}

pub fn pauli_x_on_velocity(dim_position: usize) -> DenseMatrix {
    qwalk::oracle::pauli_x().kron(&DenseMatrix::identity(dim_position))
}
