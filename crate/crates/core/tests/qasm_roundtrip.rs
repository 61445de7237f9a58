//! Emitted OpenQASM is re-executed by a small reference interpreter that
//! knows only the `qelib1` definitions of the gates it meets.

mod common;

use std::f64::consts::PI;

use common::random_gate;
use num_complex::Complex64;
use qwalk::gate_ir::{to_qasm, Circuit, Gate};
use qwalk::simulator::{distribution, run, Statevector};
use qwalk::walk_builder::{walk_circuit, ShiftImpl, WalkSpec, HADAMARD_LIKE_ALPHA, HADAMARD_LIKE_THETA};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type M2 = [[Complex64; 2]; 2];

fn parse_angle(expr: &str) -> f64 {
    let (sign, body) = match expr.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, expr),
    };
    let value = if let Some(rest) = body.strip_prefix("pi") {
        match rest.strip_prefix('/') {
            Some(den) => PI / den.parse::<f64>().unwrap(),
            None => PI,
        }
    } else {
        body.parse::<f64>().unwrap()
    };
    sign * value
}

fn qubit(arg: &str) -> usize {
    arg.trim().trim_start_matches("q[").trim_end_matches(']').parse().unwrap()
}

fn u3(theta: f64, phi: f64, lambda: f64) -> M2 {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    [
        [Complex64::new(c, 0.0), -Complex64::from_polar(s, lambda)],
        [Complex64::from_polar(s, phi), Complex64::from_polar(c, phi + lambda)],
    ]
}

fn apply(state: &mut [Complex64], controls: &[usize], target: usize, m: &M2) {
    let bit = 1 << target;
    for i in 0..state.len() {
        if i & bit != 0 || !controls.iter().all(|&c| i >> c & 1 == 1) {
            continue;
        }
        let (a, b) = (state[i], state[i | bit]);
        state[i] = m[0][0] * a + m[0][1] * b;
        state[i | bit] = m[1][0] * a + m[1][1] * b;
    }
}

/// Runs the program on `|index⟩` and returns outcome probabilities.
fn interpret(program: &str, index: usize) -> Vec<f64> {
    let mut state: Vec<Complex64> = Vec::new();
    let x = u3(PI, 0.0, PI);
    let h = u3(PI / 2.0, 0.0, PI);
    for line in program.lines() {
        let line = line.trim().trim_end_matches(';');
        if line.is_empty() || line.starts_with("OPENQASM") || line.starts_with("include") || line.starts_with("creg") || line.starts_with("measure") {
            continue;
        }
        if let Some(rest) = line.strip_prefix("qreg ") {
            let n = qubit(rest);
            state = vec![Complex64::default(); 1 << n];
            state[index] = Complex64::new(1.0, 0.0);
            continue;
        }
        let (head, args) = line.split_once(' ').unwrap();
        let qs: Vec<usize> = args.split(',').map(qubit).collect();
        let (name, params): (&str, Vec<f64>) = match head.split_once('(') {
            Some((name, p)) => (name, p.trim_end_matches(')').split(',').map(parse_angle).collect()),
            None => (head, vec![]),
        };
        match name {
            "h" => apply(&mut state, &[], qs[0], &h),
            "x" => apply(&mut state, &[], qs[0], &x),
            "u1" => apply(&mut state, &[], qs[0], &u3(0.0, 0.0, params[0])),
            "u3" => apply(&mut state, &[], qs[0], &u3(params[0], params[1], params[2])),
            "cx" => apply(&mut state, &qs[..1], qs[1], &x),
            "cu1" => apply(&mut state, &qs[..1], qs[1], &u3(0.0, 0.0, params[0])),
            "ccx" => apply(&mut state, &qs[..2], qs[2], &x),
            other => panic!("unknown gate {other}"),
        }
    }
    state.iter().map(|a| a.norm_sqr()).collect()
}

fn assert_same_distribution(circuit: &Circuit, index: usize) {
    let program = to_qasm(circuit).unwrap();
    let reference = interpret(&program, index);
    let ours = distribution(&run(circuit, &Statevector::basis_index(circuit.num_qubits(), index)).unwrap()).unwrap();
    for (i, &p) in reference.iter().enumerate() {
        assert!((p - ours.get(i)).abs() <= 1e-9, "outcome {i}: {p} vs {}", ours.get(i));
    }
}

fn emittable(gate: &Gate) -> bool {
    !matches!(gate, Gate::MultiControlledX { controls, .. } if controls.len() > 2)
}

#[test]
fn random_circuits_agree_with_reference_interpreter() {
    let mut rng = ChaCha8Rng::seed_from_u64(314);
    for _ in 0..60 {
        let q = rng.gen_range(2..=5);
        let mut c = Circuit::new(q).unwrap();
        while c.len() < 25 {
            let g = random_gate(&mut rng, q);
            if emittable(&g) {
                c.push(g).unwrap();
            }
        }
        // basis-state inputs hide relative phases, so prepare superpositions first
        let mut prepared = Circuit::new(q).unwrap();
        prepared.extend((0..q).map(Gate::h)).unwrap();
        let c = prepared.compose(&c).unwrap();
        for index in [0, (1 << q) - 1, rng.gen_range(0..1 << q)] {
            assert_same_distribution(&c, index);
        }
    }
}

#[test]
fn walk_circuits_agree_with_reference_interpreter() {
    for (n, steps) in [(2, 1), (2, 2), (3, 1), (3, 3)] {
        for shift in [ShiftImpl::Qft, ShiftImpl::Mcx] {
            if shift == ShiftImpl::Mcx && n > 3 {
                continue;
            }
            let spec = WalkSpec {
                n,
                steps,
                alpha: HADAMARD_LIKE_ALPHA,
                theta: HADAMARD_LIKE_THETA,
                shift,
                initial: "0".repeat(n + 1),
            };
            let c = walk_circuit(&spec).unwrap();
            for index in 0..1 << (n + 1) {
                assert_same_distribution(&c, index);
            }
        }
    }
}

#[test]
fn controlled_rotation_interference_is_preserved() {
    // H · CRz · H on the control exposes the phase the control picks up
    for polarity in [qwalk::gate_ir::Polarity::OnOne, qwalk::gate_ir::Polarity::OnZero] {
        let c = Circuit::new(2)
            .unwrap()
            .append(Gate::h(0))
            .unwrap()
            .append(Gate::h(1))
            .unwrap()
            .append(Gate::ControlledRotation { theta: 1.3, control: 1, target: 0, polarity })
            .unwrap()
            .append(Gate::h(1))
            .unwrap()
            .append(Gate::h(0))
            .unwrap();
        for index in 0..4 {
            assert_same_distribution(&c, index);
        }
    }
}
