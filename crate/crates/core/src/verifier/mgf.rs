//! Matrix moment-generating-function checks for a single summand.

use crate::eigen::eigh;
use crate::error::Result;
use crate::matrix::HermitianMatrix;
use crate::special::gauss_hermite;
use crate::spectral::{check_exp_argument, matrix_exp, operator_norm};

pub const DEFAULT_HERMITE_NODES: usize = 64;

/// `cosh(x) e^{-x²/2}` written without intermediate overflow.
pub fn damped_cosh(x: f64) -> f64 {
    let base = -0.5 * x * x;
    0.5 * (libm::exp(base + x) + libm::exp(base - x))
}

/// `λ_max(E[e^{sεA}] e^{-s²A²/2}) = λ_max(cosh(sA) e^{-s²A²/2})` for a
/// Rademacher `ε`. Never exceeds one since `cosh x <= e^{x²/2}`.
pub fn mgf_dominance_check(a: &HermitianMatrix, s: f64) -> Result<f64> {
    let es = eigh(a)?;
    let mapped = es.map(|l| damped_cosh(s * l));
    Ok(eigh(&mapped)?.max())
}

/// `‖GH_n[E e^{sgA}] - e^{s²A²/2}‖` with `g` standard Gaussian.
///
/// The left side applies the `nodes`-point Gauss–Hermite rule to the scalar
/// map `λ ↦ E e^{sgλ} = π^{-1/2} Σ w_i e^{√2 s λ x_i}` on the spectrum of
/// `A`; the right side exponentiates `(s²/2) A²` through its own
/// eigendecomposition.
pub fn gaussian_mgf_residual(a: &HermitianMatrix, s: f64, nodes: usize) -> Result<f64> {
    let es = eigh(a)?;
    let (x, w) = gauss_hermite(nodes);
    let top = x.first().copied().unwrap_or(0.0);
    let reach = core::f64::consts::SQRT_2 * (s * es.min()).abs().max((s * es.max()).abs()) * top;
    check_exp_argument(reach)?;
    let norm = 1.0 / libm::sqrt(core::f64::consts::PI);
    let quadrature = es.map(|l| {
        let k = core::f64::consts::SQRT_2 * s * l;
        norm * x
            .iter()
            .zip(&w)
            .map(|(&xi, &wi)| wi * libm::exp(k * xi))
            .sum::<f64>()
    });
    let target = matrix_exp(&a.square().scaled(0.5 * s * s))?;
    operator_norm(&quadrature.sub(&target)?)
}
