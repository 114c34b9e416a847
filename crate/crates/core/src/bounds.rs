//! Closed-form evaluation of the concentration bounds.

use alloc::vec::Vec;

use crate::ensembles::MatrixFamily;
use crate::error::{Error, Result};
use crate::special::{adaptive_simpson, ln_gamma};
use crate::spectral::{lambda_max, operator_norm};

/// Relative agreement required between the two `C_p` routes.
pub const CP_CROSS_CHECK_TOL: f64 = 1e-10;
/// Upper end of the quadrature range in the original variable `t`.
pub const CP_QUADRATURE_UPPER: f64 = 40.0;
const CP_QUADRATURE_PANELS: usize = 64;
const CP_QUADRATURE_TOL: f64 = 1e-13;

/// A bound value together with its inputs; probability-valued bounds also
/// carry `min(1, value)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub name: &'static str,
    pub inputs: Vec<(&'static str, f64)>,
    pub value: f64,
    pub clamped: Option<f64>,
    /// Set when an input makes the bound trivially zero (e.g. `ln d = 0`).
    pub degenerate: bool,
}

impl BoundReport {
    fn probability(name: &'static str, inputs: Vec<(&'static str, f64)>, value: f64) -> Self {
        Self {
            name,
            inputs,
            value,
            clamped: Some(value.min(1.0)),
            degenerate: false,
        }
    }

    /// The clamped value if present, otherwise the raw value.
    pub fn effective(&self) -> f64 {
        self.clamped.unwrap_or(self.value)
    }
}

fn check_exponent(p: f64) -> Result<()> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::BadExponent(p));
    }
    Ok(())
}

/// `(p 2^{p/2-1} Γ(p/2))^{1/p}`.
pub fn c_p_closed_form(p: f64) -> Result<f64> {
    check_exponent(p)?;
    let ln = libm::log(p) + (0.5 * p - 1.0) * core::f64::consts::LN_2 + ln_gamma(0.5 * p);
    Ok(libm::exp(ln / p))
}

/// `(p ∫_0^∞ t^{p-1} e^{-t²/2} dt)^{1/p}` by adaptive Simpson.
///
/// The integral is taken in `u = √t`, where the integrand becomes
/// `2p u^{2p-1} e^{-u⁴/2}` and stays smooth at the origin for every `p >= 1`.
/// It is divided by its peak value before integrating so the absolute
/// tolerance acts as a relative one.
pub fn c_p_quadrature(p: f64) -> Result<f64> {
    check_exponent(p)?;
    let power = 2.0 * p - 1.0;
    let log_integrand = |u: f64| libm::log(2.0 * p) + power * libm::log(u) - 0.5 * u * u * u * u;
    let peak_at = libm::pow(0.5 * power, 0.25);
    let log_peak = log_integrand(peak_at);
    let normalized = |u: f64| {
        if u <= 0.0 {
            0.0
        } else {
            libm::exp(log_integrand(u) - log_peak)
        }
    };
    let upper = libm::sqrt(CP_QUADRATURE_UPPER);
    let width = upper / CP_QUADRATURE_PANELS as f64;
    let panel_tol = CP_QUADRATURE_TOL / CP_QUADRATURE_PANELS as f64;
    let mut total = 0.0;
    for k in 0..CP_QUADRATURE_PANELS {
        let a = k as f64 * width;
        total += adaptive_simpson(&normalized, a, a + width, panel_tol)?;
    }
    Ok(libm::exp((log_peak + libm::log(total)) / p))
}

/// `C_p`, computed by the closed form and cross-checked against quadrature.
pub fn c_p(p: f64) -> Result<f64> {
    let closed = c_p_closed_form(p)?;
    let quadrature = c_p_quadrature(p)?;
    if (closed - quadrature).abs() > CP_CROSS_CHECK_TOL * closed {
        return Err(Error::QuadratureMismatch { closed, quadrature });
    }
    Ok(closed)
}

/// `σ = ‖Σ A_i²‖^{1/2}`.
pub fn sigma(family: &MatrixFamily) -> Result<f64> {
    Ok(libm::sqrt(lambda_max(&family.sum_of_squares())?.max(0.0)))
}

/// `(√(2 ln 2d) + C_p) σ`.
pub fn khintchine_moment_bound(family: &MatrixFamily, p: f64) -> Result<f64> {
    let cp = c_p(p)?;
    Ok((dimension_term(family.dim()) + cp) * sigma(family)?)
}

/// `√(2 ln 2d)`.
pub fn dimension_term(d: usize) -> f64 {
    libm::sqrt(2.0 * libm::log(2.0 * d as f64))
}

/// `P(‖Z‖ >= t) <= 2d e^{-t²/(2σ²)}`.
pub fn tail_bound(t: f64, sigma: f64, d: usize) -> Result<BoundReport> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::BadThreshold(t));
    }
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::BadSigma(sigma));
    }
    if d == 0 {
        return Err(Error::BadDimension(0));
    }
    let value = 2.0 * d as f64 * libm::exp(-t * t / (2.0 * sigma * sigma));
    Ok(BoundReport::probability(
        "tail",
        alloc::vec![("t", t), ("sigma", sigma), ("d", d as f64)],
        value,
    ))
}

/// `(2n)² e^{-n t² / (16M² + 8M² t)}`.
pub fn rank_one_tail_bound(t: f64, n: u64, m: f64) -> Result<BoundReport> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::BadThreshold(t));
    }
    if !(m > 0.0) || !m.is_finite() {
        return Err(Error::BadBound(m));
    }
    if n == 0 {
        return Err(Error::BadCount(0));
    }
    let nf = n as f64;
    let m2 = m * m;
    let value = 4.0 * nf * nf * libm::exp(-nf * t * t / (16.0 * m2 + 8.0 * m2 * t));
    Ok(BoundReport::probability(
        "rank_one_tail",
        alloc::vec![("t", t), ("n", nf), ("M", m)],
        value,
    ))
}

/// `ε(n, M) = M √((72 ln n + 48 ln 2)/n)`; only meaningful while `ε <= 1`.
pub fn epsilon_threshold(n: u64, m: f64) -> f64 {
    debug_assert!(n >= 1 && m > 0.0);
    let nf = n as f64;
    m * libm::sqrt((72.0 * libm::log(nf) + 48.0 * core::f64::consts::LN_2) / nf)
}

/// `Σ ‖A_i‖²`.
pub fn naive_aw_sum(family: &MatrixFamily) -> Result<f64> {
    family
        .members()
        .iter()
        .map(|a| operator_norm(a).map(|x| x * x))
        .sum()
}

/// `C · moment · √(ln d / n)` with natural logarithms. `d = 1` yields zero
/// and is flagged as degenerate.
pub fn rudelson_rhs(moment: f64, n: u64, d: usize, c: f64) -> Result<BoundReport> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::BadConstant(c));
    }
    if n < 2 {
        return Err(Error::BadCount(n));
    }
    if d == 0 {
        return Err(Error::BadDimension(0));
    }
    if !(moment >= 0.0) {
        return Err(Error::BadThreshold(moment));
    }
    let value = c * moment * libm::sqrt(libm::log(d as f64) / n as f64);
    Ok(BoundReport {
        name: "rudelson_rhs",
        inputs: alloc::vec![("moment", moment), ("n", n as f64), ("d", d as f64), ("C", c)],
        value,
        clamped: None,
        degenerate: d == 1,
    })
}
