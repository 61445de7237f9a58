//! Dense ground truth built straight from the matrix definitions.
//!
//! Nothing here goes through gates or the simulator, so comparing a circuit's
//! unitary against these matrices is an independent check. Joint
//! velocity-position index is `N·v + x`.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{QwalkError, Result};
use crate::matrix::DenseMatrix;
use crate::simulator::Distribution;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn require(n: usize, min: usize, what: &'static str) -> Result<()> {
    if n < min {
        return Err(QwalkError::BelowMinimum { what, min, got: n });
    }
    Ok(())
}

/// Cyclic right shift: `X_{i,j} = 1` iff `i = (j + 1) mod N`.
pub fn shift_matrix(n: usize) -> Result<DenseMatrix> {
    require(n, 2, "lattice size")?;
    Ok(DenseMatrix::from_fn(n, n, |i, j| if i == (j + 1) % n { one() } else { Complex64::default() }))
}

/// Anti-diagonal exchange matrix.
pub fn exchange_matrix(n: usize) -> Result<DenseMatrix> {
    require(n, 1, "exchange matrix size")?;
    Ok(DenseMatrix::from_fn(n, n, |i, j| if i + j == n - 1 { one() } else { Complex64::default() }))
}

pub fn pauli_x() -> DenseMatrix {
    DenseMatrix::from_rows(2, 2, vec![Complex64::default(), one(), one(), Complex64::default()])
}

/// `A` is Toeplitz when every descending diagonal is constant.
pub fn is_toeplitz(a: &DenseMatrix, tol: f64) -> bool {
    a.is_square()
        && (1..a.rows()).all(|i| (1..a.cols()).all(|j| (a[(i, j)] - a[(i - 1, j - 1)]).norm() <= tol))
}

/// Checks `Aᵀ = J A J` to `1e-12`.
pub fn toeplitz_transpose_check(a: &DenseMatrix) -> Result<bool> {
    if !a.is_square() {
        return Err(QwalkError::ShapeMismatch { left: (a.rows(), a.cols()), right: (a.cols(), a.rows()) });
    }
    let j = exchange_matrix(a.rows())?;
    let jaj = &(&j * a) * &j;
    Ok(a.transpose().max_abs_diff(&jaj)? <= 1e-12)
}

/// Propagation `block-diag(X, Xᵀ)` of dimension `2N`.
pub fn sigma_matrix(n: usize) -> Result<DenseMatrix> {
    let x = shift_matrix(n)?;
    Ok(DenseMatrix::block_diag(&x, &x.transpose()))
}

/// `C^v(J) · (I ⊗ X) · C^v(J)`, the single-shift factorization of the propagation.
pub fn sigma_via_exchange(n: usize) -> Result<DenseMatrix> {
    let x = shift_matrix(n)?;
    let cvj = DenseMatrix::block_diag(&DenseMatrix::identity(n), &exchange_matrix(n)?);
    let shifts = DenseMatrix::block_diag(&x, &x);
    Ok(&(&cvj * &shifts) * &cvj)
}

/// Circulant matrix with `C_{i,j} = c_{(j − i) mod N}`.
pub fn circulant_matrix(first_row: &[Complex64]) -> DenseMatrix {
    let n = first_row.len();
    DenseMatrix::from_fn(n, n, |i, j| first_row[(j + n - i) % n])
}

/// `F|x⟩ = N^{-1/2} Σ_k e^{2πixk/N} |k⟩`.
pub fn dft_matrix(n: usize) -> DenseMatrix {
    let scale = 1.0 / (n as f64).sqrt();
    DenseMatrix::from_fn(n, n, |k, x| Complex64::from_polar(scale, 2.0 * PI * (x * k % n) as f64 / n as f64))
}

/// `Ω = diag(1, ω, …, ω^{N−1})`, `ω = e^{2πi/N}`.
pub fn omega_matrix(n: usize) -> DenseMatrix {
    let entries: Vec<Complex64> = (0..n).map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)).collect();
    DenseMatrix::diagonal(&entries)
}

/// The 2×2 scattering matrix.
pub fn scattering_matrix(alpha: f64, theta: f64) -> DenseMatrix {
    let e = Complex64::from_polar(1.0, alpha);
    let i = Complex64::new(0.0, 1.0);
    DenseMatrix::from_rows(
        2,
        2,
        vec![i * e * theta.sin(), e * theta.cos(), e * theta.cos(), i * e * theta.sin()],
    )
}

/// One walk step `T = σ (S ⊗ I_N)`.
pub fn step_matrix(n: usize, alpha: f64, theta: f64) -> Result<DenseMatrix> {
    let s_hat = scattering_matrix(alpha, theta).kron(&DenseMatrix::identity(n));
    Ok(&sigma_matrix(n)? * &s_hat)
}

/// Half the absolute difference summed over the union of supports.
pub fn l1_distance(p: &Distribution, q: &Distribution) -> Result<f64> {
    for d in [p, q] {
        let total = d.total();
        if (total - 1.0).abs() > 1e-8 {
            return Err(QwalkError::NotNormalized(total));
        }
    }
    let support: BTreeSet<usize> = p.probs().keys().chain(q.probs().keys()).copied().collect();
    Ok(0.5 * support.into_iter().map(|i| (p.get(i) - q.get(i)).abs()).sum::<f64>())
}

/// Entrywise comparison, optionally after removing a global phase aligned on
/// the largest-modulus entry of `a`.
pub fn matrices_close(a: &DenseMatrix, b: &DenseMatrix, tol: f64, up_to_global_phase: bool) -> Result<bool> {
    Ok(max_deviation(a, b, up_to_global_phase)? <= tol)
}

/// The quantity [`matrices_close`] compares against its tolerance.
pub fn max_deviation(a: &DenseMatrix, b: &DenseMatrix, up_to_global_phase: bool) -> Result<f64> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(QwalkError::ShapeMismatch { left: (a.rows(), a.cols()), right: (b.rows(), b.cols()) });
    }
    if !up_to_global_phase {
        return a.max_abs_diff(b);
    }
    let (idx, _) = a
        .entries()
        .iter()
        .enumerate()
        .fold((0, -1.0), |best, (i, z)| if z.norm() > best.1 { (i, z.norm()) } else { best });
    let (za, zb) = (a.entries()[idx], b.entries()[idx]);
    let phase = if za.norm() == 0.0 || zb.norm() == 0.0 {
        one()
    } else {
        let r = za / zb;
        r / r.norm()
    };
    a.max_abs_diff(&b.scale(phase))
}
