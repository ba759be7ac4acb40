//! The JSON analysis report: graph predicates, GHZ/separability findings,
//! tangle validation, sweep delta summary, and engine comparison.
//!
//! Mass labels are 1-based everywhere in the report.

use serde::Serialize;

use qgem_core::closedform::{self, TangleValidationReport};
use qgem_core::geometry::SetupReport;
use qgem_core::graphanalysis::{
    self, GhzPrediction, SeparabilityTimes, Sustainability,
};

use crate::compare::ComparisonReport;
use crate::config::{Measure, Mode, ResolvedInput, RunConfig};
use crate::sweep::DeltaSummary;
use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct EdgeReport {
    pub p: usize,
    pub q: usize,
    pub phi_rad_per_s: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub epsilon_edge: f64,
    pub edges: Vec<EdgeReport>,
    pub connected: bool,
    pub connectivity: usize,
    pub genuine_entanglement: bool,
    /// Bipartition with identically-zero I-concurrence, when one exists.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub out: Option<String>,
    /// Present when both engines ran.
    pub max_abs_delta: Option<Vec<DeltaSummary>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub mode: Mode,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub setup: Option<SetupReport>,
    pub graph: GraphReport,
    /// Rational-phases mode only: the GHZ condition outcome.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ghz: Option<GhzPrediction>,
    /// Rational-phases mode only: the full-separability recurrence.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separability: Option<SeparabilityTimes>,
    pub sustainability: Sustainability,
    /// Included when tangle3 is among the measures (N = 3).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangle_validation: Option<TangleValidationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonReport>,
}

/// Assemble the analysis report for a resolved input.
pub fn build_report(
    input: &ResolvedInput,
    run: &RunConfig,
    sweep: Option<SweepSummary>,
    comparison: Option<ComparisonReport>,
) -> Result<AnalysisReport, CliError> {
    let g = graphanalysis::build_graph(&input.phases, run.epsilon_edge);
    let verdict = graphanalysis::predicts_genuine_entanglement(&g)
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let graph = GraphReport {
        epsilon_edge: g.epsilon_edge(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeReport {
                p: e.p + 1,
                q: e.q + 1,
                phi_rad_per_s: e.phi,
            })
            .collect(),
        connected: graphanalysis::is_connected(&g),
        connectivity: graphanalysis::connectivity(&g),
        genuine_entanglement: verdict.is_genuine(),
        witness: verdict.witness().map(|w| w.label()),
    };

    let ghz = input
        .rational
        .as_ref()
        .and_then(|r| graphanalysis::ghz_condition(r, false));
    let separability = input
        .rational
        .as_ref()
        .and_then(|r| graphanalysis::separability_times(r).ok());
    let sustainability =
        graphanalysis::sustainability_verdict(input.rational.as_ref(), input.incommensurate);

    let tangle_validation = if run.measures.contains(&Measure::Tangle3) && input.n == 3 {
        // sample a handful of grid times as validation draws
        let grid = run.time_grid();
        let picks: Vec<usize> = if grid.len() <= 5 {
            (0..grid.len()).collect()
        } else {
            (0..5).map(|i| i * (grid.len() - 1) / 4).collect()
        };
        let draws: Vec<(String, qgem_core::PhaseMatrix, f64)> = picks
            .iter()
            .map(|&i| {
                (
                    format!("config t = {:.6}", grid[i]),
                    input.phases.clone(),
                    grid[i],
                )
            })
            .collect();
        Some(
            closedform::tangle_validation_report(&draws)
                .map_err(|e| CliError::Compute(e.to_string()))?,
        )
    } else {
        None
    };

    Ok(AnalysisReport {
        n: input.n,
        mode: input.mode,
        seed: run.seed,
        setup: input.setup_report.clone(),
        graph,
        ghz,
        separability,
        sustainability,
        tangle_validation,
        sweep,
        comparison,
    })
}
