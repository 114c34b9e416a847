//! Monte Carlo estimates over seeded trials. Trial `t` of an experiment with
//! seed `seed` always draws from `RngStream::new(seed, t)`.

use alloc::vec::Vec;

use crate::ensembles::{sample_zn, CoefficientKind, MatrixFamily};
use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::spectral::operator_norm;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub trials: usize,
}

impl McEstimate {
    /// Sample mean and `s / √N` (unbiased sample deviation).
    pub fn from_samples(samples: &[f64]) -> Result<Self> {
        let n = samples.len();
        if n < 2 {
            return Err(Error::TooFewTrials(n));
        }
        let nf = n as f64;
        let mean = samples.iter().sum::<f64>() / nf;
        let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (nf - 1.0);
        Ok(Self {
            mean,
            stderr: libm::sqrt(var / nf),
            trials: n,
        })
    }

    /// `mean <= bound + margin * stderr`.
    pub fn within(&self, bound: f64, margin: f64) -> bool {
        self.mean <= bound + margin * self.stderr
    }
}

/// `‖Z‖` for trial `trial`.
pub fn zn_norm_trial(family: &MatrixFamily, kind: CoefficientKind, seed: u64, trial: u64) -> Result<f64> {
    let mut stream = RngStream::new(seed, trial);
    operator_norm(&sample_zn(family, kind, &mut stream))
}

pub fn sample_norms(family: &MatrixFamily, kind: CoefficientKind, trials: usize, seed: u64) -> Result<Vec<f64>> {
    (0..trials as u64)
        .map(|t| zn_norm_trial(family, kind, seed, t))
        .collect()
}

/// `(mean ‖Z‖^p)^{1/p}` with the delta-method standard error.
pub fn moment_from_norms(norms: &[f64], p: f64) -> Result<McEstimate> {
    if !(p >= 1.0) {
        return Err(Error::BadExponent(p));
    }
    let powered: Vec<f64> = norms.iter().map(|&x| libm::pow(x, p)).collect();
    let raw = McEstimate::from_samples(&powered)?;
    let mean = libm::pow(raw.mean, 1.0 / p);
    let stderr = if mean > 0.0 {
        raw.stderr / (p * libm::pow(mean, p - 1.0))
    } else {
        0.0
    };
    Ok(McEstimate {
        mean,
        stderr,
        trials: raw.trials,
    })
}

/// Fraction of `norms` at or above `t` with binomial standard error.
pub fn tail_from_norms(norms: &[f64], t: f64) -> Result<McEstimate> {
    let n = norms.len();
    if n < 2 {
        return Err(Error::TooFewTrials(n));
    }
    let hits = norms.iter().filter(|&&x| x >= t).count();
    let freq = hits as f64 / n as f64;
    Ok(McEstimate {
        mean: freq,
        stderr: libm::sqrt(freq * (1.0 - freq) / n as f64),
        trials: n,
    })
}

pub fn mc_norm_moment(
    family: &MatrixFamily,
    kind: CoefficientKind,
    p: f64,
    trials: usize,
    seed: u64,
) -> Result<McEstimate> {
    if trials < 2 {
        return Err(Error::TooFewTrials(trials));
    }
    moment_from_norms(&sample_norms(family, kind, trials, seed)?, p)
}

pub fn mc_tail_frequency(
    family: &MatrixFamily,
    kind: CoefficientKind,
    t: f64,
    trials: usize,
    seed: u64,
) -> Result<McEstimate> {
    if trials < 2 {
        return Err(Error::TooFewTrials(trials));
    }
    tail_from_norms(&sample_norms(family, kind, trials, seed)?, t)
}
