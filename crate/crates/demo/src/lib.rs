//! wasm-bindgen surface for the browser demo. Three operations, all JSON
//! in / JSON out so the page's plain JS owns the DOM and canvas work:
//!
//! - [`entanglement_sweep`]: closed-form curves over a time grid
//! - [`graph_report`]: connectivity / genuine-entanglement analysis
//! - [`rational_report`]: GHZ and separability predictions on exact ratios
//!
//! Build with `wasm-pack build --target web crates/demo`; the static page
//! in `www/` imports the generated module.

use num_rational::Ratio;
use serde::Serialize;
use std::str::FromStr;
use wasm_bindgen::prelude::*;

use qgem_core::closedform::{self, Bipartition};
use qgem_core::geometry::PhaseMatrix;
use qgem_core::graphanalysis::{self, RationalPhases};

fn parse_phases(phases_json: &str) -> Result<PhaseMatrix, String> {
    let rows: Vec<Vec<f64>> =
        serde_json::from_str(phases_json).map_err(|e| format!("phase matrix: {e}"))?;
    PhaseMatrix::from_rows(&rows).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Curve {
    target: String,
    values: Vec<f64>,
}

#[derive(Serialize)]
struct SweepResponse {
    n: usize,
    t: Vec<f64>,
    curves: Vec<Curve>,
}

/// Closed-form curves over `steps` points on [0, t_end]. `selector` picks
/// the targets: "all" or "one-vs-rest" bipartitions, or "qk" for the
/// Meyer-Wallach family.
#[wasm_bindgen]
pub fn entanglement_sweep(
    phases_json: &str,
    t_end: f64,
    steps: usize,
    selector: &str,
) -> Result<String, String> {
    let phases = parse_phases(phases_json)?;
    let n = phases.n();
    if !(t_end > 0.0) || !t_end.is_finite() {
        return Err("t_end must be positive".to_string());
    }
    let steps = steps.clamp(2, 20_000);
    let t: Vec<f64> = (0..steps)
        .map(|i| t_end * i as f64 / (steps - 1) as f64)
        .collect();

    let mut curves = Vec::new();
    match selector {
        "qk" => {
            for k in 1..=n / 2 {
                let values = t
                    .iter()
                    .map(|&ti| closedform::meyer_wallach_qk(&phases, k, ti))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                curves.push(Curve {
                    target: format!("Q_{k}"),
                    values,
                });
            }
        }
        "all" | "one-vs-rest" => {
            let bips = if selector == "all" {
                Bipartition::all(n)
            } else {
                (0..n)
                    .map(|p| Bipartition::one_vs_rest(n, p))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?
            };
            if bips.len() > 64 {
                return Err(format!(
                    "{} bipartitions is too many to plot; use one-vs-rest",
                    bips.len()
                ));
            }
            for bip in bips {
                let values = t
                    .iter()
                    .map(|&ti| closedform::iconcurrence(&phases, &bip, ti))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                curves.push(Curve {
                    target: bip.label(),
                    values,
                });
            }
        }
        other => return Err(format!("unknown selector {other:?} (all|one-vs-rest|qk)")),
    }
    serde_json::to_string(&SweepResponse { n, t, curves }).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct EdgeOut {
    p: usize,
    q: usize,
    phi: f64,
}

#[derive(Serialize)]
struct GraphResponse {
    n: usize,
    edges: Vec<EdgeOut>,
    connected: bool,
    connectivity: usize,
    genuine_entanglement: bool,
    witness: Option<String>,
}

/// Entanglement-graph analysis of a phase matrix; mass labels in the
/// response are 1-based.
#[wasm_bindgen]
pub fn graph_report(phases_json: &str, epsilon_edge: f64) -> Result<String, String> {
    let phases = parse_phases(phases_json)?;
    let g = graphanalysis::build_graph(&phases, epsilon_edge.max(0.0));
    let verdict =
        graphanalysis::predicts_genuine_entanglement(&g).map_err(|e| e.to_string())?;
    let response = GraphResponse {
        n: phases.n(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeOut {
                p: e.p + 1,
                q: e.q + 1,
                phi: e.phi,
            })
            .collect(),
        connected: graphanalysis::is_connected(&g),
        connectivity: graphanalysis::connectivity(&g),
        genuine_entanglement: verdict.is_genuine(),
        witness: verdict.witness().map(|w| w.label()),
    };
    serde_json::to_string(&response).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct RationalResponse {
    n: usize,
    phase_matrix: Vec<Vec<f64>>,
    ghz: Option<graphanalysis::GhzPrediction>,
    separability: Option<graphanalysis::SeparabilityTimes>,
}

/// GHZ and full-separability predictions for exact rational multipliers
/// of a base rate. `multipliers_json` is a row-major matrix of "n/d"
/// strings (plain integers allowed).
#[wasm_bindgen]
pub fn rational_report(
    base_rad_per_s: f64,
    multipliers_json: &str,
    require_all_pairs: bool,
) -> Result<String, String> {
    let rows: Vec<Vec<String>> =
        serde_json::from_str(multipliers_json).map_err(|e| format!("multipliers: {e}"))?;
    let ratios: Vec<Vec<Ratio<i64>>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| Ratio::<i64>::from_str(s.trim()).map_err(|e| format!("{s:?}: {e}")))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let phases = RationalPhases::new(base_rad_per_s, &ratios).map_err(|e| e.to_string())?;
    let response = RationalResponse {
        n: phases.n(),
        phase_matrix: phases.to_phase_matrix().rows(),
        ghz: graphanalysis::ghz_condition(&phases, require_all_pairs),
        separability: graphanalysis::separability_times(&phases).ok(),
    };
    serde_json::to_string(&response).map_err(|e| e.to_string())
}
