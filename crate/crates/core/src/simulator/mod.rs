//! Dense statevector simulation.
//!
//! Basis index `b = Σ bit_i · 2^i`. Bitstrings are rendered most significant
//! qubit first, so for a walk register the leftmost character is the velocity.

mod distribution;

pub use distribution::{sample, Counts, Distribution};

use num_complex::Complex64;

use crate::error::{QwalkError, Result};
use crate::gate_ir::{Circuit, Gate};
use crate::matrix::DenseMatrix;

/// Widest register [`circuit_unitary`] will expand.
pub const MAX_UNITARY_QUBITS: usize = 12;

const NORM_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    /// Computational basis state named by `bitstring` (leftmost character is
    /// the highest qubit index).
    pub fn basis_state(num_qubits: usize, bitstring: &str) -> Result<Self> {
        let index = parse_bitstring(num_qubits, bitstring)?;
        Ok(Self::basis_index(num_qubits, index))
    }

    pub fn basis_index(num_qubits: usize, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self { num_qubits, amplitudes }
    }

    /// Wraps raw amplitudes without normalizing them.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(QwalkError::NotPowerOfTwo(len));
        }
        Ok(Self { num_qubits: len.trailing_zeros() as usize, amplitudes })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        let amps = &mut self.amplitudes;
        match gate {
            Gate::ControlledPhase { angle, control, target } => {
                let phase = angle.phasor();
                let mask = (1 << control) | (1 << target);
                for (i, a) in amps.iter_mut().enumerate() {
                    if i & mask == mask {
                        *a *= phase;
                    }
                }
            }
            Gate::Cnot { control, target } => {
                let m = x_matrix();
                apply_controlled(amps, &[(*control, 1)], *target, &m);
            }
            Gate::ControlledRotation { theta, control, target, polarity } => {
                let m = crate::gate_ir::rz_matrix(*theta);
                apply_controlled(amps, &[(*control, polarity.active_bit())], *target, &m);
            }
            Gate::MultiControlledX { controls, target, .. } => {
                let conds: Vec<(usize, usize)> = controls.iter().map(|&c| (c, 1)).collect();
                apply_controlled(amps, &conds, *target, &x_matrix());
            }
            single => {
                let m = single.single_qubit_matrix().expect("remaining gates act on one qubit");
                let target = single.qubits()[0];
                apply_controlled(amps, &[], target, &m);
            }
        }
        Ok(())
    }

    /// Value form of [`Statevector::apply_gate`].
    pub fn applied(mut self, gate: &Gate) -> Result<Self> {
        self.apply_gate(gate)?;
        Ok(self)
    }
}

fn x_matrix() -> [[Complex64; 2]; 2] {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    [[zero, one], [one, zero]]
}

/// Applies `m` to `target` on every amplitude pair whose control bits match.
fn apply_controlled(amps: &mut [Complex64], conditions: &[(usize, usize)], target: usize, m: &[[Complex64; 2]; 2]) {
    let stride = 1usize << target;
    for i in 0..amps.len() {
        if i & stride != 0 {
            continue;
        }
        if !conditions.iter().all(|&(q, bit)| (i >> q) & 1 == bit) {
            continue;
        }
        let j = i | stride;
        let (a, b) = (amps[i], amps[j]);
        amps[i] = m[0][0] * a + m[0][1] * b;
        amps[j] = m[1][0] * a + m[1][1] * b;
    }
}

pub(crate) fn parse_bitstring(num_qubits: usize, bitstring: &str) -> Result<usize> {
    let invalid = || QwalkError::InvalidBitstring { bitstring: bitstring.to_string(), num_qubits };
    if bitstring.len() != num_qubits || num_qubits == 0 {
        return Err(invalid());
    }
    bitstring.chars().try_fold(0usize, |acc, ch| match ch {
        '0' => Ok(acc << 1),
        '1' => Ok((acc << 1) | 1),
        _ => Err(invalid()),
    })
}

pub fn format_bitstring(index: usize, num_qubits: usize) -> String {
    format!("{index:0num_qubits$b}")
}

/// Runs `circuit` on `initial`, gate by gate.
pub fn run(circuit: &Circuit, initial: &Statevector) -> Result<Statevector> {
    if circuit.num_qubits() != initial.num_qubits() {
        return Err(QwalkError::WidthMismatch { left: circuit.num_qubits(), right: initial.num_qubits() });
    }
    let mut state = initial.clone();
    for gate in circuit.gates() {
        state.apply_gate(gate)?;
    }
    Ok(state)
}

/// Exact outcome probabilities; entries below `1e-12` are dropped.
pub fn distribution(state: &Statevector) -> Result<Distribution> {
    let norm = state.norm_sqr();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(QwalkError::NotNormalized(norm));
    }
    let probs = state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, a)| (i, a.norm_sqr()))
        .filter(|&(_, p)| p >= 1e-12);
    Ok(Distribution::from_pairs_unchecked(state.num_qubits(), probs))
}

/// Full unitary of `circuit`; column `b` is the circuit applied to basis state `b`.
pub fn circuit_unitary(circuit: &Circuit) -> Result<DenseMatrix> {
    let q = circuit.num_qubits();
    if q > MAX_UNITARY_QUBITS {
        return Err(QwalkError::RegisterTooWide(q));
    }
    let dim = 1usize << q;
    let mut u = DenseMatrix::zeros(dim, dim);
    for b in 0..dim {
        let out = run(circuit, &Statevector::basis_index(q, b))?;
        for (i, a) in out.amplitudes().iter().enumerate() {
            u[(i, b)] = *a;
        }
    }
    Ok(u)
}
