//! Exact Rademacher expectations by enumerating all `2^n` sign patterns.

use alloc::vec::Vec;

use crate::ensembles::MatrixFamily;
use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;
use crate::spectral::{matrix_exp, operator_norm};
use crate::trace_ineq::TraceGap;

/// Largest family size accepted by [`exact_rademacher_expectation`].
pub const ENUMERATION_CAP: usize = 20;
/// Largest family size accepted by [`interpolation_chain_check`].
pub const CHAIN_CAP: usize = 16;

/// Statistic of `Z = Σ ε_i A_i` whose expectation is enumerated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Statistic {
    /// `Tr e^{sZ}`.
    TraceExp { s: f64 },
    /// `‖Z‖^p`.
    NormPower { p: f64 },
    /// `1{‖Z‖ >= t}`.
    TailIndicator { t: f64 },
}

impl Statistic {
    fn eval(&self, z: &HermitianMatrix) -> Result<f64> {
        Ok(match *self {
            Statistic::TraceExp { s } => matrix_exp(&z.scaled(s))?.trace(),
            Statistic::NormPower { p } => libm::pow(operator_norm(z)?, p),
            Statistic::TailIndicator { t } => {
                if operator_norm(z)? >= t {
                    1.0
                } else {
                    0.0
                }
            }
        })
    }
}

/// Calls `f` with every sign vector in `{-1, +1}^n`, pattern `k` having
/// `ε_i = -1` exactly when bit `i` of `k` is set.
pub fn for_each_sign_pattern(n: usize, mut f: impl FnMut(&[f64]) -> Result<()>) -> Result<()> {
    let mut signs = alloc::vec![1.0; n];
    for pattern in 0u64..(1u64 << n) {
        for (i, s) in signs.iter_mut().enumerate() {
            *s = if pattern >> i & 1 == 1 { -1.0 } else { 1.0 };
        }
        f(&signs)?;
    }
    Ok(())
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::TooManyTerms { n, cap });
    }
    Ok(())
}

/// `2^{-n} Σ_ε statistic(Σ ε_i A_i)`.
pub fn exact_rademacher_expectation(family: &MatrixFamily, statistic: Statistic) -> Result<f64> {
    check_cap(family.len(), ENUMERATION_CAP)?;
    if let Statistic::NormPower { p } = statistic {
        if !(p >= 1.0) {
            return Err(Error::BadExponent(p));
        }
    }
    let mut total = 0.0;
    for_each_sign_pattern(family.len(), |signs| {
        total += statistic.eval(&family.combine(signs)?)?;
        Ok(())
    })?;
    Ok(total / (1u64 << family.len()) as f64)
}

/// `(E‖Z‖^p)^{1/p}` under Rademacher signs.
pub fn exact_norm_moment(family: &MatrixFamily, p: f64) -> Result<f64> {
    Ok(libm::pow(
        exact_rademacher_expectation(family, Statistic::NormPower { p })?,
        1.0 / p,
    ))
}

/// Both sides of `E Tr e^{sZ} <= Tr e^{(s²/2) Σ A_i²}`.
pub fn lemma2_gap_exact(family: &MatrixFamily, s: f64) -> Result<TraceGap> {
    let upper = matrix_exp(&family.sum_of_squares().scaled(0.5 * s * s))?.trace();
    let lower = exact_rademacher_expectation(family, Statistic::TraceExp { s })?;
    Ok(TraceGap { lower, upper })
}

/// `D_j = (s²/2) Σ_i A_i² + Σ_{i<=j} (s ε_i A_i - s² A_i²/2)` for a fixed
/// sign prefix `ε_1..ε_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationState {
    pub j: usize,
    pub matrix: HermitianMatrix,
}

impl InterpolationState {
    pub fn new(family: &MatrixFamily, s: f64, signs: &[f64]) -> Result<Self> {
        if signs.len() > family.len() {
            return Err(Error::LengthMismatch {
                expected: family.len(),
                found: signs.len(),
            });
        }
        let half_s2 = 0.5 * s * s;
        let mut d = family.sum_of_squares().scaled(half_s2);
        for (a, &eps) in family.members().iter().zip(signs) {
            d.add_scaled_unchecked(s * eps, a);
            d.add_scaled_unchecked(-half_s2, &a.square());
        }
        Ok(Self {
            j: signs.len(),
            matrix: d,
        })
    }
}

/// `E Tr e^{D_j}` for `j = 0..=n` and the successive drops between them.
#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationChain {
    pub expectations: Vec<f64>,
    /// `gaps[j-1] = E Tr e^{D_{j-1}} - E Tr e^{D_j}`.
    pub gaps: Vec<f64>,
}

impl InterpolationChain {
    /// Index and value of a gap below `-rel_tol * (1 + E Tr e^{D_{j-1}})`.
    pub fn first_violation(&self, rel_tol: f64) -> Option<(usize, f64)> {
        self.gaps
            .iter()
            .enumerate()
            .find(|(j, &g)| g < -rel_tol * (1.0 + self.expectations[*j].abs()))
            .map(|(j, &g)| (j + 1, g))
    }

    pub fn min_gap(&self) -> f64 {
        self.gaps.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `|Σ gaps - (Tr e^{D_0} - final_expectation)|`, where
    /// `final_expectation` is an independent value of `E Tr e^{sZ}`.
    pub fn telescoping_residual(&self, final_expectation: f64) -> f64 {
        let sum: f64 = self.gaps.iter().sum();
        (sum - (self.expectations[0] - final_expectation)).abs()
    }
}

pub fn interpolation_chain_check(family: &MatrixFamily, s: f64) -> Result<InterpolationChain> {
    let n = family.len();
    check_cap(n, CHAIN_CAP)?;
    let mut expectations = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut total = 0.0;
        for_each_sign_pattern(j, |signs| {
            let state = InterpolationState::new(family, s, signs)?;
            total += matrix_exp(&state.matrix)?.trace();
            Ok(())
        })?;
        expectations.push(total / (1u64 << j) as f64);
    }
    let gaps = expectations.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(InterpolationChain { expectations, gaps })
}
