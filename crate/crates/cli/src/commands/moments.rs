//! Bound tables and moment/tail comparisons: `bounds-table`, `khintchine`,
//! `tail`.

use matconc_core::bounds::{c_p, dimension_term, khintchine_moment_bound, sigma, tail_bound};
use matconc_core::verifier::{moment_from_norms, tail_from_norms, zn_norm_trial, ENUMERATION_CAP, STAT_MARGIN};
use matconc_core::{operator_norm, CoefficientKind, MatrixFamily};

use super::{count_failures, require_tol, require_trials, Outcome};
use crate::args::{BoundsTableArgs, KhintchineArgs, KindArg, TailArgs};
use crate::error::{CliError, CliResult};
use crate::runner::run_trials;
use crate::table::TrialRow;

/// `‖Z‖` for every sign pattern, pattern `k` having `ε_i = -1` exactly when
/// bit `i` of `k` is set. `None` above the enumeration cap.
pub fn exact_norms(family: &MatrixFamily) -> CliResult<Option<Vec<f64>>> {
    let n = family.len();
    if n > ENUMERATION_CAP {
        return Ok(None);
    }
    let norms = run_trials(1u64 << n, |k| -> CliResult<f64> {
        let signs: Vec<f64> = (0..n).map(|i| if k >> i & 1 == 1 { -1.0 } else { 1.0 }).collect();
        Ok(operator_norm(&family.combine(&signs)?)?)
    })?;
    Ok(Some(norms))
}

/// Monte Carlo norms for the requested coefficient kinds.
fn mc_norms(family: &MatrixFamily, kind: KindArg, trials: u64, seed: u64) -> CliResult<Vec<(CoefficientKind, Vec<f64>)>> {
    let mut out = Vec::new();
    for (wanted, k) in [
        (kind.rademacher(), CoefficientKind::Rademacher),
        (kind.gaussian(), CoefficientKind::Gaussian),
    ] {
        if wanted {
            let norms = run_trials(trials, |t| -> CliResult<f64> { Ok(zn_norm_trial(family, k, seed, t)?) })?;
            out.push((k, norms));
        }
    }
    Ok(out)
}

fn check_p(p: &[f64]) -> CliResult<()> {
    if p.iter().any(|&x| !(x >= 1.0) || !x.is_finite()) {
        return Err(CliError::Usage("--p values must be finite and at least 1".into()));
    }
    Ok(())
}

pub fn bounds_table(args: &BoundsTableArgs) -> CliResult<Outcome> {
    check_p(&args.p)?;
    let family = args.family.map(|f| f.build(args.common.seed, 0)).transpose()?;
    let mut rows = Vec::with_capacity(args.p.len());
    for (i, &p) in args.p.iter().enumerate() {
        let mut row = TrialRow::new("bounds-table", i as u64).with("p", p).with("c_p", c_p(p)?);
        if let Some(fam) = &family {
            row.push("sigma", sigma(fam)?);
            row.push("dimension_term", dimension_term(fam.dim()));
            row.push("moment_bound", khintchine_moment_bound(fam, p)?);
        }
        rows.push(row);
    }
    Ok(Outcome {
        summary: format!("bounds-table: rows={}", rows.len()),
        rows,
        violations: 0,
    })
}

pub fn khintchine(args: &KhintchineArgs) -> CliResult<Outcome> {
    let c = &args.common;
    let trials = require_trials(c.trials, 2)?;
    require_tol("tol", c.tol)?;
    check_p(&args.p)?;
    let family = args.family.build(c.seed, 0)?;
    let sig = sigma(&family)?;
    let exact = if args.kind.rademacher() { exact_norms(&family)? } else { None };
    let mc = mc_norms(&family, args.kind, trials, c.seed)?;

    let mut rows = Vec::with_capacity(args.p.len());
    for (i, &p) in args.p.iter().enumerate() {
        let bound = khintchine_moment_bound(&family, p)?;
        let mut row = TrialRow::new("khintchine", i as u64)
            .with("p", p)
            .with("c_p", c_p(p)?)
            .with("sigma", sig)
            .with("bound", bound);
        let mut ok = true;
        if let Some(norms) = &exact {
            let powered: f64 = norms.iter().map(|x| x.powf(p)).sum::<f64>() / norms.len() as f64;
            let moment = powered.powf(1.0 / p);
            row.push("exact_rademacher", moment);
            ok &= moment <= bound + c.tol * (1.0 + bound);
        }
        for (kind, norms) in &mc {
            let est = moment_from_norms(norms, p)?;
            row.push(&format!("mc_{}", kind.name()), est.mean);
            row.push(&format!("mc_{}_stderr", kind.name()), est.stderr);
            ok &= est.within(bound, STAT_MARGIN);
        }
        rows.push(row.with("ok", ok));
    }
    let violations = count_failures(&rows);
    Ok(Outcome {
        summary: format!(
            "khintchine: family={} d={} n={} sigma={sig} trials={trials} exact={} violations={violations}",
            args.family,
            family.dim(),
            family.len(),
            exact.is_some()
        ),
        rows,
        violations,
    })
}

/// `points` evenly spaced thresholds on `[0, span·σ]`.
pub fn tail_grid(sigma: f64, span: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..points)
            .map(|k| span * sigma * k as f64 / (points - 1) as f64)
            .collect(),
    }
}

pub fn tail(args: &TailArgs) -> CliResult<Outcome> {
    let c = &args.common;
    let trials = require_trials(c.trials, 2)?;
    require_tol("tol", c.tol)?;
    if args.points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    if !(args.span >= 0.0) || !args.span.is_finite() {
        return Err(CliError::Usage("--span must be a finite non-negative number".into()));
    }
    let family = args.family.build(c.seed, 0)?;
    let sig = sigma(&family)?;
    let exact = if args.kind.rademacher() { exact_norms(&family)? } else { None };
    let mc = mc_norms(&family, args.kind, trials, c.seed)?;

    let grid = tail_grid(sig, args.span, args.points);
    let mut rows = Vec::with_capacity(grid.len());
    for (i, &t) in grid.iter().enumerate() {
        let bound = tail_bound(t, sig, family.dim())?;
        let clamped = bound.effective();
        let mut row = TrialRow::new("tail", i as u64)
            .with("t", t)
            .with("bound", bound.value)
            .with("clamped", clamped);
        let mut ok = true;
        if let Some(norms) = &exact {
            let freq = norms.iter().filter(|&&x| x >= t).count() as f64 / norms.len() as f64;
            row.push("exact_rademacher", freq);
            ok &= freq <= clamped + c.tol;
        }
        for (kind, norms) in &mc {
            let est = tail_from_norms(norms, t)?;
            row.push(&format!("mc_{}", kind.name()), est.mean);
            row.push(&format!("mc_{}_stderr", kind.name()), est.stderr);
            ok &= est.within(clamped, STAT_MARGIN);
        }
        rows.push(row.with("ok", ok));
    }
    let violations = count_failures(&rows);
    Ok(Outcome {
        summary: format!(
            "tail: family={} d={} n={} sigma={sig} trials={trials} exact={} violations={violations}",
            args.family,
            family.dim(),
            family.len(),
            exact.is_some()
        ),
        rows,
        violations,
    })
}
