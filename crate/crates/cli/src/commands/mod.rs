//! One function per subcommand, each returning the CSV rows and a summary.

mod checks;
mod experiments;
mod moments;

use crate::args::Command;
use crate::error::{CliError, CliResult};
use crate::table::TrialRow;

pub use checks::{gt_check, lemma2, mgf_check, random_pair, trotter_halving_holds, TROTTER_STEPS};
pub use experiments::{allowed_failures, covariance, covariance_grid, wigner};
pub use moments::{bounds_table, exact_norms, khintchine, tail, tail_grid};

/// Result of one subcommand run.
#[derive(Debug)]
pub struct Outcome {
    pub rows: Vec<TrialRow>,
    /// Second standard-error line, without the trailing newline.
    pub summary: String,
    /// Number of rows whose inequality check failed.
    pub violations: usize,
}

impl Outcome {
    pub fn columns(&self) -> Vec<String> {
        self.rows.first().map(TrialRow::columns).unwrap_or_default()
    }
}

pub fn execute(command: &Command) -> CliResult<Outcome> {
    match command {
        Command::BoundsTable(a) => bounds_table(a),
        Command::GtCheck(a) => gt_check(a),
        Command::MgfCheck(a) => mgf_check(a),
        Command::Lemma2(a) => lemma2(a),
        Command::Khintchine(a) => khintchine(a),
        Command::Tail(a) => tail(a),
        Command::Covariance(a) => covariance(a),
        Command::Wigner(a) => wigner(a),
    }
}

pub(crate) fn require_trials(trials: u32, min: u32) -> CliResult<u64> {
    if trials < min {
        return Err(CliError::Usage(format!("--trials must be at least {min}")));
    }
    Ok(trials as u64)
}

pub(crate) fn require_tol(name: &str, tol: f64) -> CliResult<()> {
    if !(tol >= 0.0) || !tol.is_finite() {
        return Err(CliError::Usage(format!("--{name} must be a finite non-negative number")));
    }
    Ok(())
}

pub(crate) fn count_failures(rows: &[TrialRow]) -> usize {
    rows.iter()
        .filter(|r| matches!(r.get("ok"), Some(crate::table::Value::Flag(false))))
        .count()
}
