//! Engine comparison: run every requested measure through both engines
//! over the sweep grid and gate the maximum deviation at the configured
//! tolerance.
//!
//! tangle3 is reported but never gated: the closed side evaluates the
//! published formula, which is uncertified against the oracle residual
//! (see the tangle validation report), so a mismatch there is expected.

use serde::Serialize;

use crate::config::{Engine, Measure, ResolvedInput, RunConfig};
use crate::sweep::{evaluate, expand_targets, EvalContext};
use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct MeasureComparison {
    pub measure: Measure,
    pub max_abs_diff: f64,
    pub worst_target: String,
    pub worst_t: f64,
    /// Whether this measure counts toward pass/fail.
    pub gated: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub tolerance: f64,
    pub pass: bool,
    pub measures: Vec<MeasureComparison>,
}

/// Aggregate paired (measure, target, t, closed, oracle) samples into the
/// per-measure comparison report.
pub fn summarize_comparison(
    samples: &[(Measure, String, f64, f64, f64)],
    tolerance: f64,
) -> ComparisonReport {
    let mut measures: Vec<MeasureComparison> = Vec::new();
    for &(measure, ref target, t, closed, oracle) in samples {
        let diff = (closed - oracle).abs();
        let entry = match measures.iter_mut().find(|m| m.measure == measure) {
            Some(e) => e,
            None => {
                measures.push(MeasureComparison {
                    measure,
                    max_abs_diff: -1.0,
                    worst_target: String::new(),
                    worst_t: 0.0,
                    gated: measure != Measure::Tangle3,
                    pass: true,
                });
                measures.last_mut().unwrap()
            }
        };
        if diff > entry.max_abs_diff {
            entry.max_abs_diff = diff;
            entry.worst_target = target.clone();
            entry.worst_t = t;
        }
    }
    for entry in &mut measures {
        entry.max_abs_diff = entry.max_abs_diff.max(0.0);
        entry.pass = !entry.gated || entry.max_abs_diff < tolerance;
    }
    let pass = measures.iter().all(|m| m.pass);
    ComparisonReport {
        tolerance,
        pass,
        measures,
    }
}

/// Evaluate every (t, measure, target) under both engines and summarize.
pub fn compare_engines(
    input: &ResolvedInput,
    run: &RunConfig,
) -> Result<ComparisonReport, CliError> {
    if input.n > qgem_core::oracle::DEFAULT_QUBIT_CAP {
        return Err(CliError::Validation(format!(
            "oracle comparison capped at N = {}, got N = {}",
            qgem_core::oracle::DEFAULT_QUBIT_CAP,
            input.n
        )));
    }
    let measures: Vec<Measure> = Measure::CANONICAL
        .into_iter()
        .filter(|m| run.measures.contains(m))
        .collect();
    let mut samples = Vec::new();
    for &t in &run.time_grid() {
        let mut ctx = EvalContext::new(input, t, true)?;
        for &measure in &measures {
            for target in expand_targets(measure, input, run)? {
                let closed = evaluate(input, run, &mut ctx, measure, &target, Engine::Closed)?;
                let oracle = evaluate(input, run, &mut ctx, measure, &target, Engine::Oracle)?;
                samples.push((measure, target.label(), t, closed, oracle));
            }
        }
    }
    Ok(summarize_comparison(&samples, run.compare_tolerance))
}
