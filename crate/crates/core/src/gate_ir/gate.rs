use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::cost::{mcx_cost, McxMethod};
use crate::error::{QwalkError, Result};

/// Angle of a `diag(1, e^{iλ})` phase gate.
///
/// Dyadic angles `sign · 2π / 2^k` are the QFT and shift phases and are kept
/// exact; everything else is plain radians.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum PhaseAngle {
    Dyadic { k: u32, sign: i8 },
    Radians { value: f64 },
}

impl PhaseAngle {
    /// `R_k` with the given sign; `R_k = diag(1, e^{sign·2πi/2^k})`.
    pub fn dyadic(k: u32, sign: i8) -> Self {
        debug_assert!(k >= 1 && (sign == 1 || sign == -1));
        PhaseAngle::Dyadic { k, sign }
    }

    pub fn radians(value: f64) -> Self {
        PhaseAngle::Radians { value }
    }

    pub fn value(&self) -> f64 {
        match *self {
            PhaseAngle::Dyadic { k, sign } => f64::from(sign) * 2.0 * PI / 2f64.powi(k as i32),
            PhaseAngle::Radians { value } => value,
        }
    }

    pub fn negated(&self) -> Self {
        match *self {
            PhaseAngle::Dyadic { k, sign } => PhaseAngle::Dyadic { k, sign: -sign },
            PhaseAngle::Radians { value } => PhaseAngle::Radians { value: -value },
        }
    }

    pub fn phasor(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.value())
    }
}

/// Which control value activates a controlled gate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    OnOne,
    OnZero,
}

impl Polarity {
    pub fn active_bit(self) -> usize {
        match self {
            Polarity::OnOne => 1,
            Polarity::OnZero => 0,
        }
    }
}

/// A single circuit operation. Qubit `j < n` of a walk register holds bit
/// `2^j` of the position; the velocity qubit is index `n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Gate {
    Hadamard { target: usize },
    PauliX { target: usize },
    Phase { angle: PhaseAngle, target: usize },
    /// `R_θ = e^{-iθZ/2} = diag(e^{-iθ/2}, e^{iθ/2})`.
    Rotation { theta: f64, target: usize },
    /// Walk scattering: diagonal `i e^{iα} sin θ`, off-diagonal `e^{iα} cos θ`.
    ScatterS { alpha: f64, theta: f64, target: usize },
    ControlledPhase { angle: PhaseAngle, control: usize, target: usize },
    Cnot { control: usize, target: usize },
    ControlledRotation { theta: f64, control: usize, target: usize, polarity: Polarity },
    /// Opaque multi-controlled X, costed by [`mcx_cost`] rather than decomposed.
    MultiControlledX { controls: Vec<usize>, target: usize, method: McxMethod },
}

impl Gate {
    pub fn h(target: usize) -> Self {
        Gate::Hadamard { target }
    }

    pub fn x(target: usize) -> Self {
        Gate::PauliX { target }
    }

    pub fn cx(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn phase_k(k: u32, sign: i8, target: usize) -> Self {
        Gate::Phase { angle: PhaseAngle::dyadic(k, sign), target }
    }

    pub fn cphase_k(k: u32, sign: i8, control: usize, target: usize) -> Self {
        Gate::ControlledPhase { angle: PhaseAngle::dyadic(k, sign), control, target }
    }

    pub fn mcx(controls: Vec<usize>, target: usize, method: McxMethod) -> Self {
        Gate::MultiControlledX { controls, target, method }
    }

    /// All qubits the gate touches, controls first.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::Hadamard { target }
            | Gate::PauliX { target }
            | Gate::Phase { target, .. }
            | Gate::Rotation { target, .. }
            | Gate::ScatterS { target, .. } => vec![*target],
            Gate::ControlledPhase { control, target, .. }
            | Gate::Cnot { control, target }
            | Gate::ControlledRotation { control, target, .. } => vec![*control, *target],
            Gate::MultiControlledX { controls, target, .. } => {
                let mut qs = controls.clone();
                qs.push(*target);
                qs
            }
        }
    }

    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            if q >= num_qubits {
                return Err(QwalkError::QubitOutOfRange { qubit: q, num_qubits });
            }
            if qubits[..i].contains(&q) {
                return Err(QwalkError::DuplicateQubit(q));
            }
        }
        Ok(())
    }

    pub fn adjoint(&self) -> Gate {
        match self {
            Gate::Hadamard { .. } | Gate::PauliX { .. } | Gate::Cnot { .. } | Gate::MultiControlledX { .. } => {
                self.clone()
            }
            Gate::Phase { angle, target } => Gate::Phase { angle: angle.negated(), target: *target },
            Gate::Rotation { theta, target } => Gate::Rotation { theta: -theta, target: *target },
            // S(α, θ)† = S(−α, −θ)
            Gate::ScatterS { alpha, theta, target } => Gate::ScatterS { alpha: -alpha, theta: -theta, target: *target },
            Gate::ControlledPhase { angle, control, target } => {
                Gate::ControlledPhase { angle: angle.negated(), control: *control, target: *target }
            }
            Gate::ControlledRotation { theta, control, target, polarity } => Gate::ControlledRotation {
                theta: -theta,
                control: *control,
                target: *target,
                polarity: *polarity,
            },
        }
    }

    /// Contribution to circuit size: 1 for every 1- and 2-qubit gate, the
    /// cost model for wider multi-controlled X blocks.
    pub fn size_cost(&self) -> usize {
        match self {
            Gate::MultiControlledX { controls, method, .. } => block_cost(controls.len() + 1, *method).0,
            _ => 1,
        }
    }

    /// Number of layers the gate occupies on all of its qubits.
    pub fn depth_cost(&self) -> usize {
        match self {
            Gate::MultiControlledX { controls, method, .. } => block_cost(controls.len() + 1, *method).1,
            _ => 1,
        }
    }

    /// The 2×2 matrix of a single-qubit gate, row-major.
    pub fn single_qubit_matrix(&self) -> Option<[[Complex64; 2]; 2]> {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        match *self {
            Gate::Hadamard { .. } => {
                let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                Some([[s, s], [s, -s]])
            }
            Gate::PauliX { .. } => Some([[zero, one], [one, zero]]),
            Gate::Phase { angle, .. } => Some([[one, zero], [zero, angle.phasor()]]),
            Gate::Rotation { theta, .. } => Some(rz_matrix(theta)),
            Gate::ScatterS { alpha, theta, .. } => Some(scatter_matrix(alpha, theta)),
            _ => None,
        }
    }
}

/// `(size, depth)` of a multi-controlled X over `width` qubits (controls plus target).
fn block_cost(width: usize, method: McxMethod) -> (usize, usize) {
    if width <= 2 {
        return (1, 1);
    }
    // the ancilla construction starts at four qubits; a Toffoli is costed directly
    let method = if width == 3 { McxMethod::NoAncilla } else { method };
    let cost = mcx_cost(width, method).expect("width within cost-model domain");
    (cost.size, cost.depth)
}

pub fn rz_matrix(theta: f64) -> [[Complex64; 2]; 2] {
    let zero = Complex64::new(0.0, 0.0);
    [[Complex64::from_polar(1.0, -theta / 2.0), zero], [zero, Complex64::from_polar(1.0, theta / 2.0)]]
}

pub fn scatter_matrix(alpha: f64, theta: f64) -> [[Complex64; 2]; 2] {
    let g = Complex64::from_polar(1.0, alpha);
    let d = g * Complex64::new(0.0, theta.sin());
    let o = g * theta.cos();
    [[d, o], [o, d]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_rejects_duplicates_and_out_of_range() {
        assert!(matches!(Gate::cx(0, 0).validate(2), Err(QwalkError::DuplicateQubit(0))));
        assert!(matches!(Gate::h(3).validate(3), Err(QwalkError::QubitOutOfRange { qubit: 3, .. })));
        assert!(Gate::mcx(vec![0, 1], 2, McxMethod::NoAncilla).validate(3).is_ok());
        assert!(Gate::mcx(vec![0, 2], 2, McxMethod::NoAncilla).validate(3).is_err());
    }

    #[test]
    fn dyadic_phase_matches_rk() {
        // R_1 = diag(1, -1), R_2 = diag(1, i)
        assert!((PhaseAngle::dyadic(1, 1).phasor() - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((PhaseAngle::dyadic(2, 1).phasor() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((PhaseAngle::dyadic(2, -1).phasor() - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn scatter_adjoint_is_inverse() {
        let (a, t) = (0.37, -1.1);
        let s = scatter_matrix(a, t);
        let sd = scatter_matrix(-a, -t);
        for i in 0..2 {
            for j in 0..2 {
                let p: Complex64 = (0..2).map(|k| sd[i][k] * s[k][j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((p - Complex64::new(want, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn hadamard_like_preset_matches_symmetric_coin() {
        let s = scatter_matrix(PI / 2.0, -PI / 4.0);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s[0][0] - Complex64::new(r, 0.0)).norm() < 1e-15);
        assert!((s[0][1] - Complex64::new(0.0, r)).norm() < 1e-15);
        assert!((s[1][0] - Complex64::new(0.0, r)).norm() < 1e-15);
        assert!((s[1][1] - Complex64::new(r, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn small_mcx_blocks_count_as_one() {
        assert_eq!(Gate::mcx(vec![0], 1, McxMethod::NoAncilla).size_cost(), 1);
        assert_eq!(Gate::mcx(vec![], 1, McxMethod::Ancilla).depth_cost(), 1);
        assert_eq!(Gate::mcx(vec![0, 1], 2, McxMethod::Ancilla).size_cost(), 5);
    }

    #[test]
    fn gate_json_is_tagged() {
        let g = Gate::cphase_k(3, -1, 0, 2);
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.contains("\"kind\":\"controlled_phase\""), "{s}");
        let back: Gate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
