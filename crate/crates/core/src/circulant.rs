//! Propagation by unitary circulant matrices.
//!
//! A circulant `C` is diagonalized by the Fourier transform, `C = F† Λ F`, so
//! a velocity-switched pair `block-diag(C, C')` becomes a QFT, a
//! velocity-controlled pair of diagonal unitaries, and an inverse QFT. The
//! diagonals are synthesized exactly from the Walsh–Hadamard transform of
//! their phases as a CNOT parity network with one Z rotation per term.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{QwalkError, Result};
use crate::gate_ir::{Circuit, Gate, PhaseAngle, Polarity};
use crate::walk_builder::{omega_level, qft_circuit, scattering_circuit};

/// Kernel unitarity tolerance on eigenvalue moduli.
pub const KERNEL_UNITARITY_TOL: f64 = 1e-8;

/// Walsh terms smaller than this are treated as zero.
const ZERO_ANGLE: f64 = 1e-14;

/// First row `c_0 … c_{N−1}` of a circulant `C_{i,j} = c_{(j − i) mod N}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CirculantKernel {
    first_row: Vec<Complex64>,
}

impl CirculantKernel {
    pub fn new(first_row: Vec<Complex64>) -> Result<Self> {
        check_len(first_row.len())?;
        Ok(Self { first_row })
    }

    pub fn identity(len: usize) -> Result<Self> {
        Self::unit_at(len, 0)
    }

    /// The increment `X`.
    pub fn shift(len: usize) -> Result<Self> {
        Self::unit_at(len, len.saturating_sub(1))
    }

    /// The decrement `Xᵀ`.
    pub fn shift_transpose(len: usize) -> Result<Self> {
        Self::unit_at(len, 1 % len.max(1))
    }

    fn unit_at(len: usize, at: usize) -> Result<Self> {
        check_len(len)?;
        let mut row = vec![Complex64::default(); len];
        row[at] = Complex64::new(1.0, 0.0);
        Ok(Self { first_row: row })
    }

    pub fn first_row(&self) -> &[Complex64] {
        &self.first_row
    }

    pub fn len(&self) -> usize {
        self.first_row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first_row.is_empty()
    }

    pub fn num_qubits(&self) -> usize {
        self.len().trailing_zeros() as usize
    }
}

/// Eigenphases `θ_0 … θ_{N−1}` of `Λ = diag(e^{iθ_k})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseSpectrum {
    thetas: Vec<f64>,
}

impl PhaseSpectrum {
    pub fn new(thetas: Vec<f64>) -> Result<Self> {
        check_len(thetas.len())?;
        Ok(Self { thetas })
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![0.0; len])
    }

    /// Spectrum of `Ω`, `θ_k = 2πk/N`.
    pub fn omega(len: usize) -> Result<Self> {
        Self::new((0..len).map(|k| 2.0 * PI * k as f64 / len as f64).collect())
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    pub fn num_qubits(&self) -> usize {
        self.len().trailing_zeros() as usize
    }

    /// `e^{iθ_k}` for every `k`.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.thetas.iter().map(|&t| Complex64::from_polar(1.0, t)).collect()
    }

    /// Spectrum with entries reindexed by bit reversal, the ordering produced
    /// by a QFT without its terminal swaps.
    pub fn bit_reversed(&self) -> PhaseSpectrum {
        let n = self.num_qubits();
        let thetas = (0..self.len()).map(|y| self.thetas[reverse_bits(y, n)]).collect();
        PhaseSpectrum { thetas }
    }
}

fn check_len(len: usize) -> Result<()> {
    if len < 2 || !len.is_power_of_two() {
        return Err(QwalkError::NotPowerOfTwo(len));
    }
    Ok(())
}

fn reverse_bits(x: usize, width: usize) -> usize {
    (0..width).fold(0, |acc, b| acc | (((x >> b) & 1) << (width - 1 - b)))
}

/// Eigenphases of the circulant built from `kernel`, ordered so that
/// `C = F† diag(e^{iθ_k}) F` with `F|x⟩ = N^{-1/2} Σ_k e^{2πixk/N}|k⟩`.
///
/// With that convention `λ_k = Σ_m c_m e^{−2πimk/N}`, a forward DFT of the row.
pub fn spectrum_of_circulant(kernel: &CirculantKernel) -> Result<PhaseSpectrum> {
    let mut buf = kernel.first_row.clone();
    FftPlanner::new().plan_fft_forward(buf.len()).process(&mut buf);
    for (index, lambda) in buf.iter().enumerate() {
        let modulus = lambda.norm();
        if (modulus - 1.0).abs() > KERNEL_UNITARITY_TOL {
            return Err(QwalkError::NonUnitaryKernel { index, modulus });
        }
    }
    Ok(PhaseSpectrum { thetas: buf.iter().map(|l| l.arg()).collect() })
}

/// Inverse of [`spectrum_of_circulant`]: `c_m = N^{-1} Σ_k λ_k e^{2πimk/N}`.
pub fn kernel_from_spectrum(spectrum: &PhaseSpectrum) -> CirculantKernel {
    let mut buf = spectrum.eigenvalues();
    let n = buf.len();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    CirculantKernel { first_row: buf.into_iter().map(|z| z * scale).collect() }
}

/// Walsh coefficients `w_s = N^{-1} Σ_x θ_x (−1)^{|s ∧ x|}`, so that
/// `θ_x = Σ_s w_s (−1)^{|s ∧ x|}`.
pub fn walsh_coefficients(thetas: &[f64]) -> Vec<f64> {
    let mut w = thetas.to_vec();
    let n = w.len();
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let (a, b) = (w[i], w[i + h]);
                w[i] = a + b;
                w[i + h] = a - b;
            }
        }
        h *= 2;
    }
    let scale = 1.0 / n as f64;
    w.iter_mut().for_each(|v| *v *= scale);
    w
}

/// Parity network realizing `Π_{s≠0} e^{i w_s (−1)^{|s ∧ x|}}`.
///
/// Masks are grouped by their highest set bit `t`, which serves as the
/// parity target; lower bits are visited in Gray-code order so that
/// consecutive terms differ by one CNOT. CNOTs are emitted lazily, so runs of
/// zero terms cost nothing and a phase that is linear in the bits needs no
/// CNOTs at all. `rotation(φ, t)` supplies the gate for `R_φ` on qubit `t`.
fn parity_network(num_qubits: usize, coeffs: &[f64], mut rotation: impl FnMut(f64, usize) -> Gate) -> Vec<Gate> {
    let mut gates = Vec::new();
    for t in 0..num_qubits {
        let mut current = 0usize;
        for i in 0..(1usize << t) {
            let gray = i ^ (i >> 1);
            let w = coeffs[(1 << t) | gray];
            if w.abs() < ZERO_ANGLE {
                continue;
            }
            push_parity_moves(&mut gates, current ^ gray, t);
            current = gray;
            // R_φ = e^{−iφZ/2} on the parity qubit gives e^{−iφ/2·(−1)^p}
            gates.push(rotation(-2.0 * w, t));
        }
        push_parity_moves(&mut gates, current, t);
    }
    gates
}

fn push_parity_moves(gates: &mut Vec<Gate>, bits: usize, target: usize) {
    let mut rest = bits;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        gates.push(Gate::cx(b, target));
        rest &= rest - 1;
    }
}

/// `diag(e^{iθ_x})` on `n` qubits, exact up to the global phase `e^{i w_0}`.
pub fn diagonal_circuit(spectrum: &PhaseSpectrum) -> Result<Circuit> {
    let n = spectrum.num_qubits();
    let coeffs = walsh_coefficients(spectrum.thetas());
    let mut c = Circuit::new(n)?;
    c.extend(parity_network(n, &coeffs, |theta, target| Gate::Rotation { theta, target }))?;
    Ok(c)
}

/// A diagonal circuit keeping only the `keep` largest Walsh terms, with the
/// exact operator-norm distance `max_x |e^{iθ_x} − e^{iθ'_x}|` between the
/// requested and the realized diagonal (both taken with the same global phase).
#[derive(Clone, Debug)]
pub struct TruncatedDiagonal {
    pub circuit: Circuit,
    pub error_bound: f64,
    pub kept_terms: usize,
}

pub fn diagonal_circuit_truncated(spectrum: &PhaseSpectrum, keep: usize) -> Result<TruncatedDiagonal> {
    let n = spectrum.num_qubits();
    let coeffs = walsh_coefficients(spectrum.thetas());
    let mut order: Vec<usize> = (1..coeffs.len()).filter(|&s| coeffs[s].abs() >= ZERO_ANGLE).collect();
    order.sort_by(|&a, &b| coeffs[b].abs().total_cmp(&coeffs[a].abs()).then(a.cmp(&b)));
    let mut kept = vec![0.0; coeffs.len()];
    kept[0] = coeffs[0];
    for &s in order.iter().take(keep) {
        kept[s] = coeffs[s];
    }
    let realized = inverse_walsh(&kept);
    let error_bound = spectrum
        .thetas()
        .iter()
        .zip(&realized)
        .map(|(&a, &b)| (Complex64::from_polar(1.0, a) - Complex64::from_polar(1.0, b)).norm())
        .fold(0.0, f64::max);
    let mut circuit = Circuit::new(n)?;
    circuit.extend(parity_network(n, &kept, |theta, target| Gate::Rotation { theta, target }))?;
    Ok(TruncatedDiagonal { circuit, error_bound, kept_terms: order.len().min(keep) })
}

fn inverse_walsh(coeffs: &[f64]) -> Vec<f64> {
    // the transform is its own inverse up to the 1/N factor
    let n = coeffs.len() as f64;
    walsh_coefficients(coeffs).into_iter().map(|v| v * n).collect()
}

/// `C^v(Λ) = block-diag(I, Λ)` (on-|1⟩) or `C^{v̄}(Λ) = block-diag(Λ, I)`
/// (on-|0⟩) over `n` target qubits and a control at index `n`.
///
/// Every rotation of the diagonal's parity network becomes a controlled
/// rotation; the network's global term becomes a phase on the control so the
/// two blocks keep their relative phase.
pub fn controlled_diagonal(spectrum: &PhaseSpectrum, polarity: Polarity) -> Result<Circuit> {
    let n = spectrum.num_qubits();
    let coeffs = walsh_coefficients(spectrum.thetas());
    let mut c = Circuit::new(n + 1)?;
    c.extend(parity_network(n, &coeffs, |theta, target| Gate::ControlledRotation {
        theta,
        control: n,
        target,
        polarity,
    }))?;
    let global = coeffs[0];
    if global.abs() >= ZERO_ANGLE {
        let phase = Gate::Phase { angle: PhaseAngle::radians(global), target: n };
        match polarity {
            Polarity::OnOne => c.push(phase)?,
            Polarity::OnZero => c.extend([Gate::x(n), phase, Gate::x(n)])?,
        }
    }
    Ok(c)
}

/// `block-diag(C, C')` = `(I ⊗ F†) C^v(Λ, Λ') (I ⊗ F)` on `n` position qubits
/// and a switch qubit at index `n`: `C` acts when it is `|0⟩`, `C'` when `|1⟩`.
pub fn circulant_sigma(kernel_c: &CirculantKernel, kernel_c2: &CirculantKernel) -> Result<Circuit> {
    if kernel_c.len() != kernel_c2.len() {
        return Err(QwalkError::KernelSizeMismatch(kernel_c.len(), kernel_c2.len()));
    }
    let n = kernel_c.num_qubits();
    // the swap-free QFT leaves its output bit-reversed; reorder Λ to match
    let lambda = spectrum_of_circulant(kernel_c)?.bit_reversed();
    let lambda2 = spectrum_of_circulant(kernel_c2)?.bit_reversed();
    let qft = qft_circuit(n, false)?.widened(n + 1)?;
    qft.compose(&controlled_diagonal(&lambda2, Polarity::OnOne)?)?
        .compose(&controlled_diagonal(&lambda, Polarity::OnZero)?)?
        .compose(&qft.inverse())
}

/// `C^v(Ω)` / `C^{v̄}(Ω)` (or `Ω̄` when `conjugate`) as `n` controlled `R_j`
/// phases from the velocity qubit `n`; on-|0⟩ is the on-|1⟩ ladder
/// conjugated by X on the control.
pub fn controlled_omega_ladder(n: usize, conjugate: bool, polarity: Polarity, swap_absorbed: bool) -> Result<Circuit> {
    let sign = if conjugate { -1 } else { 1 };
    let mut c = Circuit::new(n + 1)?;
    if polarity == Polarity::OnZero {
        c.push(Gate::x(n))?;
    }
    for j in 0..n {
        c.push(Gate::cphase_k(omega_level(n, j, swap_absorbed), sign, n, j))?;
    }
    if polarity == Polarity::OnZero {
        c.push(Gate::x(n))?;
    }
    Ok(c)
}

/// The basic walk with propagation `(I ⊗ F†) C^v(Ω, Ω̄) (I ⊗ F)`, the
/// controlled diagonals built from closed-form `R_j` ladders.
pub fn basic_walk_via_circulant(n: usize, alpha: f64, theta: f64, steps: usize) -> Result<Circuit> {
    let qft = qft_circuit(n, false)?.widened(n + 1)?;
    let step = scattering_circuit(n, alpha, theta)?
        .compose(&qft)?
        .compose(&controlled_omega_ladder(n, false, Polarity::OnZero, true)?)?
        .compose(&controlled_omega_ladder(n, true, Polarity::OnOne, true)?)?
        .compose(&qft.inverse())?;
    Ok(step.repeated(steps))
}
