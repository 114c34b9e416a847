//! Parallel trial execution with results in trial order.

use rayon::prelude::*;

/// Runs `f(0), ..., f(trials - 1)` on the rayon pool and returns the results
/// by trial index. On failure the error of the lowest failing trial is
/// returned, so the outcome does not depend on scheduling.
pub fn run_trials<T, E, F>(trials: u64, f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(u64) -> Result<T, E> + Sync,
{
    let results: Vec<Result<T, E>> = (0..trials).into_par_iter().map(&f).collect();
    results.into_iter().collect()
}
