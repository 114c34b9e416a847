//! Exact, deterministic and Monte Carlo checks of the trace and tail
//! inequalities.

pub mod exact;
pub mod experiments;
pub mod mgf;
pub mod monte_carlo;

pub use exact::{
    exact_norm_moment, exact_rademacher_expectation, interpolation_chain_check, lemma2_gap_exact,
    InterpolationChain, InterpolationState, Statistic, CHAIN_CAP, ENUMERATION_CAP,
};
pub use experiments::{
    covariance_deviation, covariance_experiment, covariance_trial, wigner_experiment, wigner_norm_trial,
    wigner_sample, wigner_scales, wigner_summary, CovarianceTrial, WignerSummary,
};
pub use mgf::{damped_cosh, gaussian_mgf_residual, mgf_dominance_check, DEFAULT_HERMITE_NODES};
pub use monte_carlo::{
    mc_norm_moment, mc_tail_frequency, moment_from_norms, sample_norms, tail_from_norms, zn_norm_trial,
    McEstimate,
};

/// Margin, in standard errors, for every statistical comparison.
pub const STAT_MARGIN: f64 = 4.0;
