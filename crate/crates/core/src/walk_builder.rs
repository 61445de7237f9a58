//! Quantum-walk circuits on an `n + 1` qubit register.
//!
//! Position qubit `j < n` holds bit `2^j` of the lattice site and the velocity
//! qubit is index `n` (`|0⟩` moves right, `|1⟩` moves left). Propagation uses a
//! single increment conjugated by velocity-controlled bit flips, so any shift
//! circuit can be dropped in.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{QwalkError, Result};
use crate::gate_ir::{Circuit, Gate, McxMethod};
use crate::simulator::parse_bitstring;

pub use crate::gate_ir::{mcx_cost, McxCost};

/// Scattering parameters giving `S = (1/√2)[[1, i], [i, 1]]`.
pub const HADAMARD_LIKE_ALPHA: f64 = PI / 2.0;
pub const HADAMARD_LIKE_THETA: f64 = -PI / 4.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftImpl {
    Qft,
    Mcx,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WalkSpec {
    pub n: usize,
    pub steps: usize,
    pub alpha: f64,
    pub theta: f64,
    pub shift: ShiftImpl,
    pub initial: String,
}

impl WalkSpec {
    pub fn validate(&self) -> Result<()> {
        check_n(self.n)?;
        parse_bitstring(self.n + 1, &self.initial)?;
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.n + 1
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(QwalkError::BelowMinimum { what: "position qubits", min: 1, got: n });
    }
    Ok(())
}

/// `Ŝ = S ⊗ I`: one scattering gate on the velocity qubit.
pub fn scattering_circuit(n: usize, alpha: f64, theta: f64) -> Result<Circuit> {
    Circuit::new(n + 1)?.append(Gate::ScatterS { alpha, theta, target: n })
}

/// `C^v(J)`: velocity-controlled X on every position qubit, ascending target.
pub fn cvj_circuit(n: usize) -> Result<Circuit> {
    check_n(n)?;
    let mut c = Circuit::new(n + 1)?;
    c.extend((0..n).map(|j| Gate::cx(n, j)))?;
    Ok(c)
}

/// QFT on `n` qubits: the H / controlled-`R_k` ladder, optionally followed by
/// the `⌊n/2⌋` output-reversing swaps (three CNOTs each). With swaps the
/// unitary is `F|x⟩ = N^{-1/2} Σ_k e^{2πixk/N}|k⟩`.
pub fn qft_circuit(n: usize, include_swaps: bool) -> Result<Circuit> {
    check_n(n)?;
    let mut c = Circuit::new(n)?;
    for t in (0..n).rev() {
        c.push(Gate::h(t))?;
        for ctl in (0..t).rev() {
            c.push(Gate::cphase_k((t - ctl + 1) as u32, 1, ctl, t))?;
        }
    }
    if include_swaps {
        for i in 0..n / 2 {
            let j = n - 1 - i;
            c.extend([Gate::cx(i, j), Gate::cx(j, i), Gate::cx(i, j)])?;
        }
    }
    Ok(c)
}

/// `Ω = diag(ω^k)` as one phase per qubit: qubit `j` gets `R_{n−j}`, or
/// `R_{j+1}` when the QFT swaps are absorbed. `conjugate` gives `Ω̄`.
pub fn omega_circuit(n: usize, conjugate: bool, swap_absorbed: bool) -> Result<Circuit> {
    check_n(n)?;
    let sign = if conjugate { -1 } else { 1 };
    let mut c = Circuit::new(n)?;
    for j in 0..n {
        c.push(Gate::phase_k(omega_level(n, j, swap_absorbed), sign, j))?;
    }
    Ok(c)
}

/// `k` of the `R_k` phase that `Ω` places on qubit `j`.
pub(crate) fn omega_level(n: usize, j: usize, swap_absorbed: bool) -> u32 {
    if swap_absorbed {
        (j + 1) as u32
    } else {
        (n - j) as u32
    }
}

/// Increment `|x⟩ → |x + 1 mod 2^n⟩` as `F⁻¹ Ω F`, swaps absorbed into `Ω`.
pub fn shift_qft(n: usize) -> Result<Circuit> {
    let qft = qft_circuit(n, false)?;
    qft.compose(&omega_circuit(n, false, true)?)?.compose(&qft.inverse())
}

/// Increment as a descending cascade of generalized CNOTs, no ancillas.
pub fn shift_mcx(n: usize) -> Result<Circuit> {
    shift_mcx_with(n, McxMethod::NoAncilla)
}

/// Increment as a descending cascade: bit `t` flips when all lower bits are
/// set, from the top bit down to a final X on bit 0.
pub fn shift_mcx_with(n: usize, method: McxMethod) -> Result<Circuit> {
    check_n(n)?;
    let mut c = Circuit::new(n)?;
    for t in (1..n).rev() {
        if t == 1 {
            c.push(Gate::cx(0, 1))?;
        } else {
            c.push(Gate::mcx((0..t).collect(), t, method))?;
        }
    }
    c.push(Gate::x(0))?;
    Ok(c)
}

pub fn shift_circuit(n: usize, shift: ShiftImpl) -> Result<Circuit> {
    match shift {
        ShiftImpl::Qft => shift_qft(n),
        ShiftImpl::Mcx => shift_mcx(n),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeDepth {
    pub size: usize,
    pub depth: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftCostSummary {
    pub n: usize,
    pub qft: SizeDepth,
    pub mcx_no_ancilla: SizeDepth,
    /// Absent below four qubits, where the ancilla construction is undefined.
    pub mcx_ancilla: Option<McxCost>,
}

/// Closed-form costs of the three increment implementations at `n` qubits.
pub fn shift_cost_summary(n: usize) -> Result<ShiftCostSummary> {
    if n < 3 {
        return Err(QwalkError::BelowMinimum { what: "shift cost summary width", min: 3, got: n });
    }
    let qft = SizeDepth { size: n * n + 2 * n, depth: shift_qft(n)?.depth() };
    let m = n as i64;
    let mcx_no_ancilla = SizeDepth {
        size: as_count(m * (2 * m * m - 6 * m + 7) / 3),
        depth: as_count(2 * (2 * m * m - 8 * m + 9)),
    };
    let mcx_ancilla = (n >= 4).then(|| McxCost {
        size: as_count(10 * m * m - 50 * m + 67),
        depth: as_count(2 * (4 * m * m - 20 * m + 27)),
        ancillas: n - 3,
    });
    Ok(ShiftCostSummary { n, qft, mcx_no_ancilla, mcx_ancilla })
}

fn as_count(v: i64) -> usize {
    usize::try_from(v).expect("cost formulas are positive on their domain")
}

/// `σ = C^v(J) (I ⊗ X) C^v(J)`.
pub fn propagation_sigma(n: usize, shift: ShiftImpl) -> Result<Circuit> {
    let cvj = cvj_circuit(n)?;
    let shift = shift_circuit(n, shift)?.widened(n + 1)?;
    cvj.compose(&shift)?.compose(&cvj)
}

/// `steps` repetitions of `T = σ Ŝ`.
pub fn walk_circuit(spec: &WalkSpec) -> Result<Circuit> {
    spec.validate()?;
    let step = scattering_circuit(spec.n, spec.alpha, spec.theta)?.compose(&propagation_sigma(spec.n, spec.shift)?)?;
    Ok(step.repeated(spec.steps))
}
