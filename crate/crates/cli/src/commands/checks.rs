//! Deterministic trace-inequality checks: `gt-check`, `mgf-check`, `lemma2`.

use matconc_core::ensembles::random_hermitian;
use matconc_core::trace_ineq::trotter_error;
use matconc_core::verifier::{gaussian_mgf_residual, interpolation_chain_check, lemma2_gap_exact, mgf_dominance_check};
use matconc_core::{golden_thompson_gap, matrix_exp, trace_power_gap, HermitianMatrix, RngStream};

use super::{count_failures, require_tol, require_trials, Outcome};
use crate::args::{GtCheckArgs, Lemma2Args, MgfCheckArgs};
use crate::error::{CliError, CliResult};
use crate::runner::run_trials;
use crate::table::TrialRow;

/// Trotter step counts; each is compared with its double.
pub const TROTTER_STEPS: [u64; 5] = [8, 16, 32, 64, 128];
/// Required contraction `err(2k) / err(k)` while `err(k)` lies in
/// [`TROTTER_WINDOW`].
pub const TROTTER_RATIO: f64 = 0.75;
pub const TROTTER_WINDOW: (f64, f64) = (1e-8, 0.1);
/// Exponents `k` of the trace-power inequality.
pub const TRACE_POWER_KS: [u32; 4] = [0, 1, 2, 3];

fn require_dim(dim: usize) -> CliResult<()> {
    if dim == 0 {
        return Err(CliError::Usage("--dim must be positive".into()));
    }
    Ok(())
}

/// Random pair for trial `t`: independent unit-norm draws each scaled by a
/// uniform factor in `[0, scale)`.
pub fn random_pair(seed: u64, trial: u64, dim: usize, scale: f64) -> matconc_core::Result<(HermitianMatrix, HermitianMatrix)> {
    let mut stream = RngStream::new(seed, trial);
    let a = random_hermitian(&mut stream, dim)?;
    let b = random_hermitian(&mut stream, dim)?;
    let (ua, ub) = (stream.next_f64(), stream.next_f64());
    Ok((a.scaled(scale * ua), b.scaled(scale * ub)))
}

/// Whether successive Trotter errors contract by [`TROTTER_RATIO`] inside
/// the window.
pub fn trotter_halving_holds(errors: &[f64]) -> bool {
    errors.windows(2).all(|w| {
        let (lo, hi) = TROTTER_WINDOW;
        !(lo..=hi).contains(&w[0]) || w[1] <= TROTTER_RATIO * w[0]
    })
}

pub fn gt_check(args: &GtCheckArgs) -> CliResult<Outcome> {
    let c = &args.common;
    let trials = require_trials(c.trials, 1)?;
    require_dim(args.dim)?;
    require_tol("tol", c.tol)?;
    if !(args.scale >= 0.0) || !args.scale.is_finite() {
        return Err(CliError::Usage("--scale must be a finite non-negative number".into()));
    }
    let rows = run_trials(trials, |t| -> CliResult<TrialRow> {
        let (a, b) = random_pair(c.seed, t, args.dim, args.scale)?;
        let gt = golden_thompson_gap(&a, &b)?;
        let mut row = TrialRow::new("gt-check", t)
            .with("trial", t)
            .with("gt_lower", gt.lower)
            .with("gt_upper", gt.upper)
            .with("gt_gap", gt.gap());
        let mut ok = gt.holds(c.tol);

        let errors = TROTTER_STEPS
            .iter()
            .map(|&k| trotter_error(&a, &b, k))
            .collect::<Result<Vec<_>, _>>()?;
        for (k, e) in TROTTER_STEPS.iter().zip(&errors) {
            row.push(&format!("trotter_err_{k}"), *e);
        }
        ok &= trotter_halving_holds(&errors);

        // PSD pair for the trace-power inequality.
        let x = matrix_exp(&a.scaled(0.5))?;
        let y = matrix_exp(&b.scaled(0.5))?;
        for k in TRACE_POWER_KS {
            let gap = trace_power_gap(&x, &y, k)?;
            row.push(&format!("tp_gap_{k}"), gap.gap());
            ok &= gap.holds(c.tol);
        }
        Ok(row.with("ok", ok))
    })?;
    let violations = count_failures(&rows);
    let min_gt = rows
        .iter()
        .filter_map(|r| r.get("gt_gap").and_then(|v| v.as_f64()))
        .fold(f64::INFINITY, f64::min);
    Ok(Outcome {
        summary: format!("gt-check: trials={trials} violations={violations} min_gt_gap={min_gt}"),
        rows,
        violations,
    })
}

pub fn mgf_check(args: &MgfCheckArgs) -> CliResult<Outcome> {
    let c = &args.common;
    let trials = require_trials(c.trials, 1)?;
    require_dim(args.dim)?;
    require_tol("tol", c.tol)?;
    require_tol("residual-tol", args.residual_tol)?;
    if args.nodes == 0 {
        return Err(CliError::Usage("--nodes must be positive".into()));
    }
    let per_trial = run_trials(trials, |t| -> CliResult<Vec<TrialRow>> {
        let a = random_hermitian(&mut RngStream::new(c.seed, t), args.dim)?.scaled(args.scale);
        args.s
            .iter()
            .map(|&s| {
                let dominance = mgf_dominance_check(&a, s)?;
                let residual = gaussian_mgf_residual(&a, s, args.nodes)?;
                let ok = dominance <= 1.0 + c.tol && residual <= args.residual_tol;
                Ok(TrialRow::new("mgf-check", t)
                    .with("trial", t)
                    .with("s", s)
                    .with("dominance", dominance)
                    .with("gaussian_residual", residual)
                    .with("ok", ok))
            })
            .collect()
    })?;
    let rows: Vec<TrialRow> = per_trial.into_iter().flatten().collect();
    let violations = count_failures(&rows);
    let column_max = |name: &str| {
        rows.iter()
            .filter_map(|r| r.get(name).and_then(|v| v.as_f64()))
            .fold(f64::NEG_INFINITY, f64::max)
    };
    Ok(Outcome {
        summary: format!(
            "mgf-check: trials={trials} violations={violations} max_dominance={} max_residual={}",
            column_max("dominance"),
            column_max("gaussian_residual")
        ),
        rows,
        violations,
    })
}

pub fn lemma2(args: &Lemma2Args) -> CliResult<Outcome> {
    let c = &args.common;
    require_trials(c.trials, 1)?;
    require_tol("tol", c.tol)?;
    require_tol("telescoping-tol", args.telescoping_tol)?;
    // A Wigner family is fixed, so only one is evaluated.
    let families = if args.family.is_random() { c.trials as u64 } else { 1 };
    let per_family = run_trials(families, |t| -> CliResult<Vec<TrialRow>> {
        let family = args.family.build(c.seed, t)?;
        args.s
            .iter()
            .map(|&s| {
                let gap = lemma2_gap_exact(&family, s)?;
                let chain = interpolation_chain_check(&family, s)?;
                let telescoping = chain.telescoping_residual(gap.lower);
                let ok = gap.holds(c.tol)
                    && chain.first_violation(c.tol).is_none()
                    && telescoping <= args.telescoping_tol * (1.0 + chain.expectations[0].abs());
                Ok(TrialRow::new("lemma2", t)
                    .with("trial", t)
                    .with("s", s)
                    .with("n", family.len())
                    .with("lhs", gap.lower)
                    .with("rhs", gap.upper)
                    .with("gap", gap.gap())
                    .with("chain_min_gap", chain.min_gap())
                    .with("telescoping_residual", telescoping)
                    .with("ok", ok))
            })
            .collect()
    })?;
    let rows: Vec<TrialRow> = per_family.into_iter().flatten().collect();
    let violations = count_failures(&rows);
    Ok(Outcome {
        summary: format!(
            "lemma2: family={} families={families} rows={} violations={violations}",
            args.family,
            rows.len()
        ),
        rows,
        violations,
    })
}
