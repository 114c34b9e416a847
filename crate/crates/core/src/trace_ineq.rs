//! Golden–Thompson, the Trotter–Lie product and the trace-power inequality
//! `Tr((XY)^{2^{k+1}}) <= Tr((X²Y²)^{2^k})` for PSD `X`, `Y`.

use crate::error::{Error, Result};
use crate::matrix::{product_trace, HermitianMatrix, SquareMatrix};
use crate::spectral::{lambda_min, matrix_exp, DEFAULT_PSD_TOL};

/// Two sides of a trace inequality `lower <= upper`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceGap {
    pub lower: f64,
    pub upper: f64,
}

impl TraceGap {
    pub fn gap(&self) -> f64 {
        self.upper - self.lower
    }

    /// `gap >= -rel_tol * (1 + |upper|)`.
    pub fn holds(&self, rel_tol: f64) -> bool {
        self.gap() >= -rel_tol * (1.0 + self.upper.abs())
    }
}

/// `Tr(e^A e^B) - Tr(e^{A+B})`, as a [`TraceGap`] with `upper = Tr(e^A e^B)`.
pub fn golden_thompson_gap(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<TraceGap> {
    let sum = a.add(b)?;
    let upper = product_trace(&matrix_exp(a)?, &matrix_exp(b)?)?;
    let lower = matrix_exp(&sum)?.trace();
    Ok(TraceGap { lower, upper })
}

/// `(e^{A/k} e^{B/k})^k`. Powers of two use repeated squaring, other `k`
/// sequential multiplication.
pub fn trotter_product(a: &HermitianMatrix, b: &HermitianMatrix, k: u64) -> Result<SquareMatrix> {
    if k == 0 {
        return Err(Error::BadCount(0));
    }
    let inv = 1.0 / k as f64;
    let ea = matrix_exp(&a.scaled(inv))?;
    let eb = matrix_exp(&b.scaled(inv))?;
    let step = ea.matmul(&eb)?;
    Ok(if k.is_power_of_two() {
        step.square_times(k.trailing_zeros())
    } else {
        step.power_sequential(k)
    })
}

/// `‖trotter_product(A, B, k) - e^{A+B}‖` in operator norm.
pub fn trotter_error(a: &HermitianMatrix, b: &HermitianMatrix, k: u64) -> Result<f64> {
    let exact = matrix_exp(&a.add(b)?)?;
    let approx = trotter_product(a, b, k)?;
    spectral_norm(&approx.sub(exact.as_square())?)
}

/// Largest singular value of a general square matrix, `sqrt(λ_max(M* M))`.
pub fn spectral_norm(m: &SquareMatrix) -> Result<f64> {
    let gram = HermitianMatrix::symmetrize(&m.adjoint().matmul_unchecked(m));
    Ok(libm::sqrt(crate::spectral::lambda_max(&gram)?.max(0.0)))
}

fn require_psd(x: &HermitianMatrix) -> Result<()> {
    let min = lambda_min(x)?;
    let scale = crate::spectral::operator_norm(x)?;
    if min < -DEFAULT_PSD_TOL * (1.0 + scale) {
        return Err(Error::NotPsd { min_eigenvalue: min });
    }
    Ok(())
}

/// `Tr((X²Y²)^{2^k}) - Tr((XY)^{2^{k+1}})` for PSD `X`, `Y`.
pub fn trace_power_gap(x: &HermitianMatrix, y: &HermitianMatrix, k: u32) -> Result<TraceGap> {
    if x.dim() != y.dim() {
        return Err(Error::DimMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    require_psd(x)?;
    require_psd(y)?;
    let xy = x.matmul(y)?;
    let x2y2 = x.square().matmul(&y.square())?;
    Ok(TraceGap {
        lower: xy.square_times(k + 1).trace().re,
        upper: x2y2.square_times(k).trace().re,
    })
}

/// The iterated form `Tr((XY)^{2^k}) <= Tr(X^{2^k} Y^{2^k})`.
pub fn iterated_trace_power_gap(x: &HermitianMatrix, y: &HermitianMatrix, k: u32) -> Result<TraceGap> {
    if x.dim() != y.dim() {
        return Err(Error::DimMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    require_psd(x)?;
    require_psd(y)?;
    let xk = x.as_square().square_times(k);
    let yk = y.as_square().square_times(k);
    Ok(TraceGap {
        lower: x.matmul(y)?.square_times(k).trace().re,
        upper: xk.matmul(&yk)?.trace().re,
    })
}
