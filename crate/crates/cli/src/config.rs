//! JSON config schema and loading.
//!
//! ```json
//! {
//!   "mode": "geometry" | "phases" | "rational-phases",
//!   "constants": { "G": 6.674e-11, "hbar": 1.054571817e-34 },
//!   "masses": [ { "mass_kg": 1e-14, "loc0": [0,0,0], "loc1": [1e-4,0,0] } ],
//!   "phase_matrix_rad_per_s": [[0.0, 1.0], [1.0, 0.0]],
//!   "pair_phase_table": { "n": 2, "entries": [ { "p": 1, "q": 2, "rates": [r00,r01,r10,r11] } ] },
//!   "rational": { "base_rad_per_s": 1.0, "multipliers": [["0","3"],["3","0"]] },
//!   "min_distance_m": 1e-4,
//!   "incommensurate": false,
//!   "run": {
//!     "engine": "closed" | "oracle" | "both",
//!     "measures": ["iconcurrence", "q_k", "tangle3", "pairwise", "two_body"],
//!     "bipartitions": "all" | "one-vs-rest" | ["125|346"],
//!     "t_start": 0.0, "t_end": 10.0, "steps": 101,
//!     "out": "sweep.csv", "seed": 0,
//!     "compare_tolerance": 1e-9,
//!     "epsilon_edge": 1e-12,
//!     "tangle3_interpretation": "unordered-3-terms" | "ordered-6-terms"
//!   }
//! }
//! ```
//!
//! The geometry/phases/rational sections are mutually exclusive; whichever
//! matches `mode` defines N. Mass labels in bipartition strings and report
//! output are 1-based.

use num_rational::Ratio;
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use qgem_core::closedform::{Bipartition, TangleInterpretation};
use qgem_core::geometry::{
    self, entangling_phases, validate_setup, MassSpec, PairPhaseTable, PhaseMatrix,
    PhysicalConstants, SetupReport, SystemSetup,
};
use qgem_core::graphanalysis::RationalPhases;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Geometry,
    Phases,
    RationalPhases,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    Closed,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineChoice {
    Closed,
    Oracle,
    Both,
}

impl EngineChoice {
    pub fn engines(self) -> Vec<Engine> {
        match self {
            EngineChoice::Closed => vec![Engine::Closed],
            EngineChoice::Oracle => vec![Engine::Oracle],
            EngineChoice::Both => vec![Engine::Closed, Engine::Oracle],
        }
    }
}

impl FromStr for EngineChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed" => Ok(EngineChoice::Closed),
            "oracle" => Ok(EngineChoice::Oracle),
            "both" => Ok(EngineChoice::Both),
            other => Err(format!("unknown engine {other:?} (closed|oracle|both)")),
        }
    }
}

/// Measures, in canonical CSV emission order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize, serde::Serialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    TwoBody,
    Iconcurrence,
    QK,
    Pairwise,
    Tangle3,
}

impl Measure {
    pub const CANONICAL: [Measure; 5] = [
        Measure::TwoBody,
        Measure::Iconcurrence,
        Measure::QK,
        Measure::Pairwise,
        Measure::Tangle3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::TwoBody => "two_body",
            Measure::Iconcurrence => "iconcurrence",
            Measure::QK => "q_k",
            Measure::Pairwise => "pairwise",
            Measure::Tangle3 => "tangle3",
        }
    }
}

impl FromStr for Measure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "two_body" => Ok(Measure::TwoBody),
            "iconcurrence" => Ok(Measure::Iconcurrence),
            "q_k" => Ok(Measure::QK),
            "pairwise" => Ok(Measure::Pairwise),
            "tangle3" => Ok(Measure::Tangle3),
            other => Err(format!(
                "unknown measure {other:?} (two_body|iconcurrence|q_k|pairwise|tangle3)"
            )),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum BipartitionSelector {
    Named(String),
    Explicit(Vec<String>),
}

impl Default for BipartitionSelector {
    fn default() -> Self {
        BipartitionSelector::Named("all".to_string())
    }
}

impl BipartitionSelector {
    pub fn parse_cli(s: &str) -> Self {
        match s {
            "all" | "one-vs-rest" => BipartitionSelector::Named(s.to_string()),
            // explicit partitions on the command line are ';'-separated,
            // since partition labels may themselves contain commas
            list => BipartitionSelector::Explicit(
                list.split(';').map(|p| p.trim().to_string()).collect(),
            ),
        }
    }

    pub fn resolve(&self, n: usize) -> Result<Vec<Bipartition>, CliError> {
        match self {
            BipartitionSelector::Named(name) => match name.as_str() {
                "all" => Ok(Bipartition::all(n)),
                "one-vs-rest" => (0..n)
                    .map(|p| {
                        Bipartition::one_vs_rest(n, p)
                            .map_err(|e| CliError::Validation(e.to_string()))
                    })
                    .collect(),
                other => Err(CliError::Validation(format!(
                    "unknown bipartition selector {other:?} (all|one-vs-rest|explicit list)"
                ))),
            },
            BipartitionSelector::Explicit(labels) => {
                let mut bips = Vec::new();
                for label in labels {
                    bips.push(
                        Bipartition::parse(label, n)
                            .map_err(|e| CliError::Validation(e.to_string()))?,
                    );
                }
                Ok(bips)
            }
        }
    }
}

fn default_t_end() -> f64 {
    10.0
}
fn default_steps() -> usize {
    101
}
fn default_measures() -> Vec<Measure> {
    vec![Measure::Iconcurrence]
}
fn default_engine() -> EngineChoice {
    EngineChoice::Closed
}
fn default_compare_tolerance() -> f64 {
    1e-9
}
fn default_epsilon_edge() -> f64 {
    qgem_core::graphanalysis::DEFAULT_EPSILON_EDGE
}
fn default_tangle3_interpretation() -> TangleInterpretation {
    TangleInterpretation::Unordered3
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_engine")]
    pub engine: EngineChoice,
    #[serde(default = "default_measures")]
    pub measures: Vec<Measure>,
    #[serde(default)]
    pub bipartitions: BipartitionSelector,
    #[serde(default)]
    pub t_start: f64,
    #[serde(default = "default_t_end")]
    pub t_end: f64,
    #[serde(default = "default_steps")]
    pub steps: usize,
    #[serde(default)]
    pub out: Option<PathBuf>,
    /// Reproducibility seed recorded in the report; sweeps themselves are
    /// deterministic and never consult the clock.
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_compare_tolerance")]
    pub compare_tolerance: f64,
    #[serde(default = "default_epsilon_edge")]
    pub epsilon_edge: f64,
    #[serde(default = "default_tangle3_interpretation")]
    pub tangle3_interpretation: TangleInterpretation,
}

impl Default for RunConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

impl RunConfig {
    /// The sweep time grid: `steps` points from t_start to t_end
    /// inclusive (a single step collapses to t_start).
    pub fn time_grid(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.t_start];
        }
        let span = self.t_end - self.t_start;
        (0..self.steps)
            .map(|i| self.t_start + span * i as f64 / (self.steps - 1) as f64)
            .collect()
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.t_start >= 0.0) {
            return Err(CliError::Validation(format!(
                "t_start must be >= 0, got {}",
                self.t_start
            )));
        }
        if self.steps == 0 {
            return Err(CliError::Validation("steps must be >= 1".to_string()));
        }
        if self.steps > 1 && !(self.t_end > self.t_start) {
            return Err(CliError::Validation(format!(
                "t_end ({}) must exceed t_start ({})",
                self.t_end, self.t_start
            )));
        }
        if self.measures.is_empty() {
            return Err(CliError::Validation("measures must be nonempty".to_string()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Deserialize)]
struct ConstantsEntry {
    #[serde(rename = "G")]
    g: f64,
    hbar: f64,
}

#[derive(Debug, Clone, Deserialize)]
struct MassEntry {
    mass_kg: f64,
    loc0: [f64; 3],
    loc1: [f64; 3],
}

#[derive(Debug, Clone, Deserialize)]
struct PairRatesEntry {
    /// 1-based mass labels.
    p: usize,
    q: usize,
    /// [phi_00, phi_01, phi_10, phi_11] in rad/s.
    rates: [f64; 4],
}

#[derive(Debug, Clone, Deserialize)]
struct PairPhaseTableEntry {
    n: usize,
    entries: Vec<PairRatesEntry>,
}

#[derive(Debug, Clone, Deserialize)]
struct RationalEntry {
    base_rad_per_s: f64,
    /// Row-major matrix of "n/d" strings (plain integers allowed).
    multipliers: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    mode: Mode,
    constants: Option<ConstantsEntry>,
    masses: Option<Vec<MassEntry>>,
    phase_matrix_rad_per_s: Option<Vec<Vec<f64>>>,
    pair_phase_table: Option<PairPhaseTableEntry>,
    rational: Option<RationalEntry>,
    min_distance_m: Option<f64>,
    /// User assertion that the phase ratios are pairwise incommensurate;
    /// only consulted for the sustainability verdict on float inputs.
    #[serde(default)]
    incommensurate: bool,
    #[serde(default)]
    run: Option<RunConfig>,
}

/// Everything a run needs, resolved from one config file.
#[derive(Debug, Clone)]
pub struct ResolvedInput {
    pub mode: Mode,
    pub n: usize,
    pub phases: PhaseMatrix,
    pub table: PairPhaseTable,
    pub rational: Option<RationalPhases>,
    pub setup_report: Option<SetupReport>,
    pub incommensurate: bool,
}

fn validation(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

/// Load and validate a config file into run settings plus resolved domain
/// objects. Geometry mode runs the setup diagnostics and aborts on hard
/// violations.
pub fn load_config(path: &Path) -> Result<(RunConfig, ResolvedInput), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let file: ConfigFile = serde_json::from_str(&text).map_err(|e| {
        CliError::Validation(format!(
            "parse error in {} at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;

    let run = file.run.clone().unwrap_or_default();
    let input = resolve_input(&file)?;
    validate_run(&run, &input)?;
    Ok((run, input))
}

/// Check run settings against the resolved input; also used after CLI
/// flag overrides.
pub fn validate_run(run: &RunConfig, input: &ResolvedInput) -> Result<(), CliError> {
    run.validate()?;
    // arity constraints the measures impose on N
    for &measure in &run.measures {
        match measure {
            Measure::TwoBody if input.n != 2 => {
                return Err(CliError::Validation(format!(
                    "measure two_body requires N = 2, got N = {}",
                    input.n
                )));
            }
            Measure::Pairwise | Measure::Tangle3 if input.n != 3 => {
                return Err(CliError::Validation(format!(
                    "measure {} requires N = 3, got N = {}",
                    measure.name(),
                    input.n
                )));
            }
            _ => {}
        }
    }
    if run.engine.engines().contains(&Engine::Oracle)
        && input.n > qgem_core::oracle::DEFAULT_QUBIT_CAP
    {
        return Err(CliError::Validation(format!(
            "oracle engine capped at N = {}, got N = {}",
            qgem_core::oracle::DEFAULT_QUBIT_CAP,
            input.n
        )));
    }
    // explicit bipartitions must parse against this N
    run.bipartitions.resolve(input.n)?;
    Ok(())
}

fn resolve_input(file: &ConfigFile) -> Result<ResolvedInput, CliError> {
    match file.mode {
        Mode::Geometry => {
            let masses = file
                .masses
                .as_ref()
                .ok_or_else(|| CliError::Validation("geometry mode needs \"masses\"".into()))?;
            let specs: Vec<MassSpec> = masses
                .iter()
                .map(|m| MassSpec::new(m.mass_kg, m.loc0, m.loc1))
                .collect();
            let setup = match file.min_distance_m {
                Some(d) => SystemSetup::with_min_distance(specs, d),
                None => SystemSetup::new(specs),
            };
            let report = validate_setup(&setup);
            if !report.is_ok() {
                let summary = report
                    .violations
                    .iter()
                    .map(|v| format!("{v:?}"))
                    .collect::<Vec<_>>()
                    .join("; ");
                return Err(CliError::Validation(format!(
                    "setup validation failed: {summary}"
                )));
            }
            let constants = file
                .constants
                .as_ref()
                .map(|c| PhysicalConstants { g: c.g, hbar: c.hbar })
                .unwrap_or_default();
            let table = geometry::phase_table(&setup, &constants).map_err(validation)?;
            let phases = entangling_phases(&table);
            Ok(ResolvedInput {
                mode: file.mode,
                n: setup.n(),
                phases,
                table,
                rational: None,
                setup_report: Some(report),
                incommensurate: file.incommensurate,
            })
        }
        Mode::Phases => {
            if let Some(rows) = &file.phase_matrix_rad_per_s {
                let phases = PhaseMatrix::from_rows(rows).map_err(validation)?;
                let table = PairPhaseTable::from_phase_matrix(&phases);
                Ok(ResolvedInput {
                    mode: file.mode,
                    n: phases.n(),
                    phases,
                    table,
                    rational: None,
                    setup_report: None,
                    incommensurate: file.incommensurate,
                })
            } else if let Some(spec) = &file.pair_phase_table {
                let pair_count = spec.n * (spec.n - 1) / 2;
                if spec.entries.len() != pair_count {
                    return Err(CliError::Validation(format!(
                        "pair_phase_table needs {pair_count} entries for n = {}, got {}",
                        spec.n,
                        spec.entries.len()
                    )));
                }
                let mut table = PairPhaseTable::zeros(spec.n);
                let mut seen = vec![false; pair_count];
                for e in &spec.entries {
                    if e.p < 1 || e.q < 1 || e.p > spec.n || e.q > spec.n || e.p == e.q {
                        return Err(CliError::Validation(format!(
                            "bad pair ({}, {}) for n = {}",
                            e.p, e.q, spec.n
                        )));
                    }
                    let (p, q) = (e.p.min(e.q) - 1, e.p.max(e.q) - 1);
                    let idx = p * spec.n - p * (p + 1) / 2 + (q - p - 1);
                    if seen[idx] {
                        return Err(CliError::Validation(format!(
                            "pair ({}, {}) listed twice",
                            e.p, e.q
                        )));
                    }
                    seen[idx] = true;
                    if e.p < e.q {
                        table.set(p, q, e.rates);
                    } else {
                        let [r00, r01, r10, r11] = e.rates;
                        table.set(p, q, [r00, r10, r01, r11]);
                    }
                }
                let phases = entangling_phases(&table);
                Ok(ResolvedInput {
                    mode: file.mode,
                    n: spec.n,
                    phases,
                    table,
                    rational: None,
                    setup_report: None,
                    incommensurate: file.incommensurate,
                })
            } else {
                Err(CliError::Validation(
                    "phases mode needs \"phase_matrix_rad_per_s\" or \"pair_phase_table\"".into(),
                ))
            }
        }
        Mode::RationalPhases => {
            let spec = file.rational.as_ref().ok_or_else(|| {
                CliError::Validation("rational-phases mode needs \"rational\"".into())
            })?;
            let rows: Vec<Vec<Ratio<i64>>> = spec
                .multipliers
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .map(|s| {
                            Ratio::<i64>::from_str(s.trim()).map_err(|e| {
                                CliError::Validation(format!(
                                    "row {}: bad rational {s:?}: {e}",
                                    i + 1
                                ))
                            })
                        })
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            let rational =
                RationalPhases::new(spec.base_rad_per_s, &rows).map_err(validation)?;
            let phases = rational.to_phase_matrix();
            let table = PairPhaseTable::from_phase_matrix(&phases);
            Ok(ResolvedInput {
                mode: file.mode,
                n: rational.n(),
                phases,
                table,
                rational: Some(rational),
                setup_report: None,
                incommensurate: file.incommensurate,
            })
        }
    }
}
