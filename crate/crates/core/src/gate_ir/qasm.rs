//! OpenQASM 2.0 emission.
//!
//! Gates map onto the `qelib1.inc` vocabulary. Single-qubit rotations and the
//! scattering gate are emitted up to a global phase; controlled rotations are
//! emitted exactly, since their phase is relative to the control.

use std::fmt::Write as _;

use super::circuit::Circuit;
use super::gate::{Gate, PhaseAngle, Polarity};
use crate::error::{QwalkError, Result};

pub fn to_qasm(circuit: &Circuit) -> Result<String> {
    let n = circuit.num_qubits();
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{n}];");
    let _ = writeln!(out, "creg c[{n}];");
    for gate in circuit.gates() {
        emit_gate(&mut out, gate)?;
    }
    for i in 0..n {
        let _ = writeln!(out, "measure q[{i}] -> c[{i}];");
    }
    Ok(out)
}

fn emit_gate(out: &mut String, gate: &Gate) -> Result<()> {
    match gate {
        Gate::Hadamard { target } => {
            let _ = writeln!(out, "h q[{target}];");
        }
        Gate::PauliX { target } => {
            let _ = writeln!(out, "x q[{target}];");
        }
        Gate::Phase { angle, target } => {
            let _ = writeln!(out, "u1({}) q[{target}];", format_phase(angle));
        }
        Gate::Rotation { theta, target } => {
            let _ = writeln!(out, "u1({}) q[{target}];", format_radians(*theta));
        }
        Gate::ScatterS { theta, target, .. } => {
            // S(α, θ) = e^{i(α + π/2)} Rx(π − 2θ), and Rx(φ) = u3(φ, −π/2, π/2)
            let phi = std::f64::consts::PI - 2.0 * theta;
            let _ = writeln!(out, "u3({},-pi/2,pi/2) q[{target}];", format_radians(phi));
        }
        Gate::ControlledPhase { angle, control, target } => {
            let _ = writeln!(out, "cu1({}) q[{control}],q[{target}];", format_phase(angle));
        }
        Gate::Cnot { control, target } => {
            let _ = writeln!(out, "cx q[{control}],q[{target}];");
        }
        Gate::ControlledRotation { theta, control, target, polarity } => {
            // C(R_θ) = (u1(−θ/2) on the control) · cu1(θ)
            if *polarity == Polarity::OnZero {
                let _ = writeln!(out, "x q[{control}];");
            }
            let _ = writeln!(out, "cu1({}) q[{control}],q[{target}];", format_radians(*theta));
            let _ = writeln!(out, "u1({}) q[{control}];", format_radians(-theta / 2.0));
            if *polarity == Polarity::OnZero {
                let _ = writeln!(out, "x q[{control}];");
            }
        }
        Gate::MultiControlledX { controls, target, .. } => match controls.as_slice() {
            [] => {
                let _ = writeln!(out, "x q[{target}];");
            }
            [c] => {
                let _ = writeln!(out, "cx q[{c}],q[{target}];");
            }
            [a, b] => {
                let _ = writeln!(out, "ccx q[{a}],q[{b}],q[{target}];");
            }
            more => {
                return Err(QwalkError::UnsupportedQasm(format!(
                    "a {}-control generalized CNOT; only blocks with at most two controls (ccx) can be emitted",
                    more.len()
                )))
            }
        },
    }
    Ok(())
}

fn format_phase(angle: &PhaseAngle) -> String {
    match *angle {
        // sign · 2π / 2^k = sign · π / 2^(k−1)
        PhaseAngle::Dyadic { k, sign } => {
            let sign = if sign < 0 { "-" } else { "" };
            if k == 1 {
                format!("{sign}pi")
            } else {
                format!("{sign}pi/{}", 1u64 << (k - 1))
            }
        }
        PhaseAngle::Radians { value } => format_radians(value),
    }
}

fn format_radians(value: f64) -> String {
    // shortest representation that round-trips exactly
    format!("{value:?}")
}
