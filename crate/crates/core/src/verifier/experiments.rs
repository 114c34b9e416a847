//! Rank-one covariance and Wigner experiments.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::bounds::{dimension_term, epsilon_threshold};
use crate::ensembles::{empirical_covariance, gaussian_coeffs, sample_isotropic_bounded, VectorEnsemble};
use crate::error::{Error, Result};
use crate::matrix::{HermitianMatrix, SquareMatrix};
use crate::rng::RngStream;
use crate::spectral::{lambda_max, operator_norm};
use crate::verifier::monte_carlo::McEstimate;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CovarianceTrial {
    pub trial: u64,
    /// `‖(1/n) Σ Y_i Y_i* - I‖`.
    pub deviation: f64,
    pub epsilon: f64,
    pub below_epsilon: bool,
}

/// `‖(1/n) Σ Y_i Y_i* - I‖`.
pub fn covariance_deviation<V: AsRef<[Complex64]>>(samples: &[V]) -> Result<f64> {
    let cov = empirical_covariance(samples)?;
    operator_norm(&cov.sub(&HermitianMatrix::identity(cov.dim()))?)
}

pub fn covariance_trial(ensemble: &VectorEnsemble, n: usize, seed: u64, trial: u64) -> Result<CovarianceTrial> {
    if n == 0 {
        return Err(Error::BadCount(0));
    }
    let mut stream = RngStream::new(seed, trial);
    let samples = (0..n)
        .map(|_| sample_isotropic_bounded(ensemble, &mut stream))
        .collect::<Result<Vec<_>>>()?;
    let deviation = covariance_deviation(&samples)?;
    let epsilon = epsilon_threshold(n as u64, ensemble.bound());
    Ok(CovarianceTrial {
        trial,
        deviation,
        epsilon,
        below_epsilon: deviation < epsilon,
    })
}

pub fn covariance_experiment(
    ensemble: &VectorEnsemble,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<CovarianceTrial>> {
    (0..trials as u64)
        .map(|t| covariance_trial(ensemble, n, seed, t))
        .collect()
}

/// `Σ_{i<j} g_ij A_ij` assembled entrywise. Draws the same coefficients in
/// the same order as `sample_zn(&wigner_family(m)?, Gaussian, stream)` and
/// yields the same matrix without materializing the family.
pub fn wigner_sample(m: usize, stream: &mut RngStream) -> Result<HermitianMatrix> {
    if m < 2 {
        return Err(Error::BadDimension(m));
    }
    let coeffs = gaussian_coeffs(stream, m * (m - 1) / 2);
    let mut grid = SquareMatrix::zeros(m);
    let mut k = 0;
    for i in 0..m {
        for j in i + 1..m {
            let g = Complex64::new(coeffs[k], 0.0);
            grid.set(i, j, g);
            grid.set(j, i, g);
            k += 1;
        }
    }
    Ok(HermitianMatrix::symmetrize(&grid))
}

pub fn wigner_norm_trial(m: usize, seed: u64, trial: u64) -> Result<f64> {
    operator_norm(&wigner_sample(m, &mut RngStream::new(seed, trial))?)
}

/// `A_ij` for one pair, built on demand.
fn wigner_member(m: usize, i: usize, j: usize) -> HermitianMatrix {
    let grid = SquareMatrix::from_fn(m, |r, c| {
        if (r, c) == (i, j) || (r, c) == (j, i) {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    HermitianMatrix::symmetrize(&grid)
}

/// `(‖Σ A_ij²‖, Σ ‖A_ij‖²)` for the Wigner family, streamed one member at a
/// time.
pub fn wigner_scales(m: usize) -> Result<(f64, f64)> {
    if m < 2 {
        return Err(Error::BadDimension(m));
    }
    let mut sum_sq = HermitianMatrix::zeros(m);
    let mut naive = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            let a = wigner_member(m, i, j);
            sum_sq.add_scaled_unchecked(1.0, &a.square());
            let norm = operator_norm(&a)?;
            naive += norm * norm;
        }
    }
    Ok((lambda_max(&sum_sq)?, naive))
}

#[derive(Clone, Debug, PartialEq)]
pub struct WignerSummary {
    pub m: usize,
    pub norm: McEstimate,
    /// `mean ‖Z‖ / (2√m)`.
    pub ratio: f64,
    pub sigma_sq: f64,
    pub naive_sum: f64,
    /// `√(2 ln 2m) σ`: where the sharp tail bound reaches one.
    pub sigma_scale: f64,
    /// `√(2 ln 2m) (Σ ‖A_ij‖²)^{1/2}`: the same point for the naive bound.
    pub naive_scale: f64,
}

pub fn wigner_summary(m: usize, norms: &[f64]) -> Result<WignerSummary> {
    let norm = McEstimate::from_samples(norms)?;
    let (sigma_sq, naive_sum) = wigner_scales(m)?;
    let dim_term = dimension_term(m);
    Ok(WignerSummary {
        m,
        norm,
        ratio: norm.mean / (2.0 * libm::sqrt(m as f64)),
        sigma_sq,
        naive_sum,
        sigma_scale: dim_term * libm::sqrt(sigma_sq),
        naive_scale: dim_term * libm::sqrt(naive_sum),
    })
}

pub fn wigner_experiment(m: usize, trials: usize, seed: u64) -> Result<WignerSummary> {
    if trials < 2 {
        return Err(Error::TooFewTrials(trials));
    }
    let norms = (0..trials as u64)
        .map(|t| wigner_norm_trial(m, seed, t))
        .collect::<Result<Vec<_>>>()?;
    wigner_summary(m, &norms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{naive_aw_sum, sigma};
    use crate::ensembles::{sample_zn, wigner_family, CoefficientKind, EnsembleKind};
    use alloc::vec;

    fn basis(d: usize, j: usize) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); d];
        v[j] = Complex64::new(libm::sqrt(d as f64), 0.0);
        v
    }

    #[test]
    fn one_dimensional_basis_has_zero_deviation() {
        let ens = VectorEnsemble::new(EnsembleKind::ScaledBasis, 1).unwrap();
        let row = covariance_trial(&ens, 1, 0, 0).unwrap();
        assert_eq!(row.deviation, 0.0);
    }

    #[test]
    fn two_by_two_basis_enumeration() {
        // Four equally likely ordered draws; repeated basis vectors give
        // deviation 1, mixed pairs 0, so the mean deviation is 1/2.
        let mut total = 0.0;
        for a in 0..2 {
            for b in 0..2 {
                let dev = covariance_deviation(&[basis(2, a), basis(2, b)]).unwrap();
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((dev - expected).abs() < 1e-15);
                total += dev;
            }
        }
        assert!((total / 4.0 - 0.5).abs() < 1e-15);

        let ens = VectorEnsemble::new(EnsembleKind::ScaledBasis, 2).unwrap();
        let rows = covariance_experiment(&ens, 2, 4000, 3).unwrap();
        let devs: Vec<f64> = rows.iter().map(|r| r.deviation).collect();
        let est = McEstimate::from_samples(&devs).unwrap();
        assert!((est.mean - 0.5).abs() <= 4.0 * est.stderr, "{est:?}");
    }

    #[test]
    fn wigner_direct_matches_family_sum() {
        let fam = wigner_family(5).unwrap();
        for t in 0..5 {
            let direct = wigner_sample(5, &mut RngStream::new(7, t)).unwrap();
            let generic = sample_zn(&fam, CoefficientKind::Gaussian, &mut RngStream::new(7, t));
            assert_eq!(direct, generic);
        }
    }

    #[test]
    fn wigner_scales_match_family() {
        let fam = wigner_family(5).unwrap();
        let (sig2, naive) = wigner_scales(5).unwrap();
        assert_eq!(sig2, 4.0);
        assert_eq!(naive, 10.0);
        assert_eq!(sigma(&fam).unwrap().powi(2), sig2);
        assert_eq!(naive_aw_sum(&fam).unwrap(), naive);
    }

    #[test]
    fn wigner_m2_is_half_normal() {
        let s = wigner_experiment(2, 20_000, 11).unwrap();
        let truth = libm::sqrt(2.0 / core::f64::consts::PI);
        assert!((s.norm.mean - truth).abs() <= 3.0 * s.norm.stderr, "{:?}", s.norm);
        assert_eq!(s.sigma_sq, 1.0);
        assert_eq!(s.naive_sum, 1.0);
    }
}
