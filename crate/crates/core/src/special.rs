//! Scalar numerics: log-gamma, adaptive Simpson quadrature and the
//! Gauss–Hermite rule.

use alloc::vec::Vec;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x >= 0.5` by the Lanczos approximation (g = 7, 9 terms).
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x >= 0.5);
    let z = x - 1.0;
    let mut series = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * libm::log(2.0 * core::f64::consts::PI) + (z + 0.5) * libm::log(t) - t + libm::log(series)
}

const SIMPSON_MAX_DEPTH: u32 = 60;

/// Adaptive Simpson with Richardson correction; `abs_tol` is the target for
/// the whole interval.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, SIMPSON_MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 || !delta.is_finite() {
        return Err(Error::QuadratureDiverged);
    }
    Ok(simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
}

/// Nodes and weights of the `n`-point Gauss–Hermite rule for the weight
/// `e^{-x²}` on the real line, computed by Newton iteration on the
/// orthonormal Hermite recurrence. Nodes are returned in descending order.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    const PIM4: f64 = 0.751_125_544_464_942_5; // π^{-1/4}
    let mut x = alloc::vec![0.0; n];
    let mut w = alloc::vec![0.0; n];
    let m = n.div_ceil(2);
    let nf = n as f64;
    let mut z = 0.0;
    for i in 0..m {
        z = match i {
            0 => libm::sqrt(2.0 * nf + 1.0) - 1.855_75 * libm::pow(2.0 * nf + 1.0, -0.166_67),
            1 => z - 1.14 * libm::pow(nf, 0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        for _ in 0..100 {
            let (p, p_prev) = hermite_orthonormal(n, z, PIM4);
            let z1 = z;
            z = z1 - p / (libm::sqrt(2.0 * nf) * p_prev);
            if (z - z1).abs() <= 1e-15 * (1.0 + z.abs()) {
                break;
            }
        }
        let pp = libm::sqrt(2.0 * nf) * hermite_orthonormal(n, z, PIM4).1;
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Returns `(h_n(z), h_{n-1}(z))` for orthonormal Hermite functions.
fn hermite_orthonormal(n: usize, z: f64, pim4: f64) -> (f64, f64) {
    let mut p1 = pim4;
    let mut p2 = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * libm::sqrt(2.0 / (jf + 1.0)) * p2 - libm::sqrt(jf / (jf + 1.0)) * p3;
    }
    (p1, p2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_known_values() {
        let sqrt_pi = libm::sqrt(core::f64::consts::PI);
        assert!((libm::exp(ln_gamma(0.5)) - sqrt_pi).abs() < 1e-14);
        assert!(ln_gamma(1.0).abs() < 1e-15);
        assert!(ln_gamma(2.0).abs() < 1e-15);
        // Γ(11) = 10!
        assert!((ln_gamma(11.0) - libm::log(3_628_800.0)).abs() < 1e-13);
        // Γ(32) = 31!
        let fact31: f64 = (1..=31).map(|k| k as f64).product();
        assert!((ln_gamma(32.0) - libm::log(fact31)).abs() < 1e-12);
    }

    #[test]
    fn simpson_polynomial_and_gaussian() {
        let cubic = adaptive_simpson(&|x: f64| x * x * x - x, 0.0, 2.0, 1e-13).unwrap();
        assert!((cubic - 2.0).abs() < 1e-13);
        let half = adaptive_simpson(&|x: f64| libm::exp(-0.5 * x * x), 0.0, 40.0, 1e-13).unwrap();
        assert!((half - libm::sqrt(core::f64::consts::FRAC_PI_2)).abs() < 1e-12);
    }

    #[test]
    fn simpson_reports_divergence() {
        assert_eq!(
            adaptive_simpson(&|x: f64| 1.0 / x, 0.0, 1.0, 1e-13),
            Err(Error::QuadratureDiverged)
        );
    }

    #[test]
    fn hermite_rule_moments() {
        for n in [8usize, 20, 64, 128] {
            let (x, w) = gauss_hermite(n);
            let sqrt_pi = libm::sqrt(core::f64::consts::PI);
            let m0: f64 = w.iter().sum();
            let m2: f64 = x.iter().zip(&w).map(|(x, w)| w * x * x).sum();
            let m4: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(4)).sum();
            assert!((m0 - sqrt_pi).abs() < 1e-13, "n={n} m0={m0}");
            assert!((m2 - sqrt_pi / 2.0).abs() < 1e-13, "n={n}");
            assert!((m4 - 0.75 * sqrt_pi).abs() < 1e-12, "n={n}");
            assert!(x.windows(2).all(|p| p[0] > p[1]));
        }
    }
}
