//! Spectral calculus on Hermitian matrices: `f(A) = V f(Λ) V*`.

use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;

/// Largest argument accepted by [`matrix_exp`]; `e^700` is about `1e304`.
pub const EXP_OVERFLOW_THRESHOLD: f64 = 700.0;

/// Default relative slack for [`psd_order_holds`].
pub const DEFAULT_PSD_TOL: f64 = 1e-10;

pub fn spectral_apply(a: &HermitianMatrix, f: impl FnMut(f64) -> f64) -> Result<HermitianMatrix> {
    Ok(eigh(a)?.map(f))
}

/// `e^A` through the eigendecomposition. Positive definite by construction.
pub fn matrix_exp(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    let es = eigh(a)?;
    check_exp_argument(es.max())?;
    Ok(es.map(libm::exp))
}

pub(crate) fn check_exp_argument(x: f64) -> Result<()> {
    if x > EXP_OVERFLOW_THRESHOLD {
        return Err(Error::Overflow {
            argument: x,
            threshold: EXP_OVERFLOW_THRESHOLD,
        });
    }
    Ok(())
}

/// `‖A‖ = max(λ_max(A), λ_max(-A))`.
pub fn operator_norm(a: &HermitianMatrix) -> Result<f64> {
    Ok(eigh(a)?.spectral_radius())
}

pub fn lambda_max(a: &HermitianMatrix) -> Result<f64> {
    Ok(eigh(a)?.max())
}

pub fn lambda_min(a: &HermitianMatrix) -> Result<f64> {
    Ok(eigh(a)?.min())
}

/// Tests `A ⪯ B`: `λ_min(B - A) >= -tol * (1 + ‖B - A‖)`.
pub fn psd_order_holds(a: &HermitianMatrix, b: &HermitianMatrix, tol: f64) -> Result<bool> {
    let diff = b.sub(a)?;
    let es = eigh(&diff)?;
    Ok(es.min() >= -tol * (1.0 + es.spectral_radius()))
}

pub fn is_psd(a: &HermitianMatrix, tol: f64) -> Result<bool> {
    psd_order_holds(&HermitianMatrix::zeros(a.dim()), a, tol)
}

/// Schatten p-norm `(Σ |λ_k|^p)^{1/p}`, evaluated relative to the largest
/// `|λ_k|` so large `p` does not overflow.
pub fn schatten_norm(a: &HermitianMatrix, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::BadExponent(p));
    }
    let es = eigh(a)?;
    let top = es.spectral_radius();
    if top == 0.0 {
        return Ok(0.0);
    }
    let sum: f64 = es.values().iter().map(|l| libm::pow(l.abs() / top, p)).sum();
    Ok(top * libm::pow(sum, 1.0 / p))
}
