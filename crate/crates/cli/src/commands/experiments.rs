//! Sampling experiments: `covariance` and `wigner`.

use matconc_core::bounds::{dimension_term, rank_one_tail_bound};
use matconc_core::verifier::{
    covariance_trial, tail_from_norms, wigner_norm_trial, wigner_scales, wigner_summary, STAT_MARGIN,
};
use matconc_core::{EnsembleKind, VectorEnsemble};

use super::{count_failures, require_trials, Outcome};
use crate::args::{CovarianceArgs, EnsembleArg, WignerArgs};
use crate::error::{CliError, CliResult};
use crate::runner::run_trials;
use crate::table::TrialRow;

/// Thresholds `t_k = 2kε/points`, `k = 1..=points`.
pub fn covariance_grid(epsilon: f64, points: usize) -> Vec<f64> {
    (1..=points).map(|k| 2.0 * epsilon * k as f64 / points as f64).collect()
}

/// Largest number of trials with deviation `>= ε` compatible with a per-trial
/// failure probability of at most `1/n`, at [`STAT_MARGIN`] binomial
/// standard errors.
pub fn allowed_failures(n: usize, trials: u64) -> f64 {
    let p = 1.0 / n as f64;
    let t = trials as f64;
    t * p + STAT_MARGIN * (t * p * (1.0 - p)).sqrt()
}

pub fn covariance(args: &CovarianceArgs) -> CliResult<Outcome> {
    let c = &args.common;
    let trials = require_trials(c.trials, if args.grid { 2 } else { 1 })?;
    if args.n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    if args.grid && args.points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    let kind = match args.ensemble {
        EnsembleArg::Basis => EnsembleKind::ScaledBasis,
        EnsembleArg::Sphere => EnsembleKind::Sphere,
    };
    let ensemble = VectorEnsemble::new(kind, args.dim)?;
    let results = run_trials(trials, |t| -> CliResult<_> { Ok(covariance_trial(&ensemble, args.n, c.seed, t)?) })?;
    let epsilon = results[0].epsilon;
    let failures = results.iter().filter(|r| !r.below_epsilon).count();
    // The per-trial guarantee only speaks when ε <= 1.
    let applies = epsilon <= 1.0;
    let mean_dev = results.iter().map(|r| r.deviation).sum::<f64>() / results.len() as f64;

    let (rows, violations) = if args.grid {
        let deviations: Vec<f64> = results.iter().map(|r| r.deviation).collect();
        let mut rows = Vec::with_capacity(args.points);
        for (i, t) in covariance_grid(epsilon, args.points).into_iter().enumerate() {
            let bound = rank_one_tail_bound(t, args.n as u64, ensemble.bound())?;
            let clamped = bound.effective();
            let est = tail_from_norms(&deviations, t)?;
            let ok = clamped >= 1.0 || est.within(clamped, STAT_MARGIN);
            rows.push(
                TrialRow::new("covariance", i as u64)
                    .with("t", t)
                    .with("bound", bound.value)
                    .with("clamped", clamped)
                    .with("frequency", est.mean)
                    .with("stderr", est.stderr)
                    .with("ok", ok),
            );
        }
        let violations = count_failures(&rows);
        (rows, violations)
    } else {
        let rows = results
            .iter()
            .map(|r| {
                TrialRow::new("covariance", r.trial)
                    .with("trial", r.trial)
                    .with("deviation", r.deviation)
                    .with("epsilon", r.epsilon)
                    .with("below_epsilon", r.below_epsilon)
            })
            .collect();
        let violations = usize::from(applies && failures as f64 > allowed_failures(args.n, trials));
        (rows, violations)
    };
    Ok(Outcome {
        summary: format!(
            "covariance: d={} n={} M={} epsilon={epsilon} trials={trials} below_epsilon={} mean_deviation={mean_dev} violations={violations}",
            args.dim,
            args.n,
            ensemble.bound(),
            trials as usize - failures
        ),
        rows,
        violations,
    })
}

pub fn wigner(args: &WignerArgs) -> CliResult<Outcome> {
    let c = &args.common;
    let trials = require_trials(c.trials, 1)?;
    if args.m < 2 {
        return Err(CliError::Usage("--m must be at least 2".into()));
    }
    let m = args.m;
    let edge = 2.0 * (m as f64).sqrt();
    let norms = run_trials(trials, |t| -> CliResult<f64> { Ok(wigner_norm_trial(m, c.seed, t)?) })?;
    let rows = norms
        .iter()
        .enumerate()
        .map(|(t, &norm)| {
            TrialRow::new("wigner", t as u64)
                .with("trial", t as u64)
                .with("norm", norm)
                .with("ratio", norm / edge)
        })
        .collect();

    let summary = if norms.len() >= 2 {
        let s = wigner_summary(m, &norms)?;
        format!(
            "wigner: m={m} trials={trials} mean_norm={} stderr={} ratio={} sigma_sq={} naive_sum={} sigma_scale={} naive_scale={}",
            s.norm.mean, s.norm.stderr, s.ratio, s.sigma_sq, s.naive_sum, s.sigma_scale, s.naive_scale
        )
    } else {
        // A single trial has no standard error.
        let (sigma_sq, naive_sum) = wigner_scales(m)?;
        let dim_term = dimension_term(m);
        format!(
            "wigner: m={m} trials={trials} mean_norm={} ratio={} sigma_sq={sigma_sq} naive_sum={naive_sum} sigma_scale={} naive_scale={}",
            norms[0],
            norms[0] / edge,
            dim_term * sigma_sq.sqrt(),
            dim_term * naive_sum.sqrt()
        )
    };
    Ok(Outcome {
        summary,
        rows,
        violations: 0,
    })
}
