//! Sweep execution: expand (t, measure, target, engine) in deterministic
//! order, evaluate both engines, and emit CSV.
//!
//! Row order is t-major, then measures in canonical order, then targets
//! lexicographically, then closed before oracle. Floats are printed with
//! 17 significant digits so reruns are byte-identical.

use std::fmt::Write as _;

use qgem_core::closedform::{self, Bipartition};
use qgem_core::oracle::{self, StateVector};

use crate::config::{Engine, Measure, ResolvedInput, RunConfig};
use crate::CliError;

pub const CSV_HEADER: &str = "t_seconds,measure,target,engine,value";

/// One evaluation target; its label is the CSV `target` column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Pair(usize, usize),
    Bip(Bipartition),
    K(usize),
    AllThree,
}

impl Target {
    pub fn label(&self) -> String {
        match self {
            Target::Pair(p, q) => format!("{}-{}", p + 1, q + 1),
            Target::Bip(b) => b.label(),
            Target::K(k) => format!("k={k}"),
            Target::AllThree => "123".to_string(),
        }
    }
}

/// The targets a measure expands to, sorted by label.
pub fn expand_targets(
    measure: Measure,
    input: &ResolvedInput,
    run: &RunConfig,
) -> Result<Vec<Target>, CliError> {
    let n = input.n;
    let mut targets = match measure {
        Measure::TwoBody => vec![Target::Pair(0, 1)],
        Measure::Iconcurrence => run
            .bipartitions
            .resolve(n)?
            .into_iter()
            .map(Target::Bip)
            .collect(),
        Measure::QK => (1..=n / 2).map(Target::K).collect(),
        Measure::Pairwise => vec![Target::Pair(0, 1), Target::Pair(0, 2), Target::Pair(1, 2)],
        Measure::Tangle3 => vec![Target::AllThree],
    };
    targets.sort_by_key(|t| t.label());
    Ok(targets)
}

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

/// Per-time-point evaluation context; the oracle state and the residual
/// 3-tangle are shared across measures and targets.
pub struct EvalContext {
    t: f64,
    state: Option<StateVector>,
    tau123: Option<f64>,
}

impl EvalContext {
    pub fn new(input: &ResolvedInput, t: f64, needs_oracle: bool) -> Result<Self, CliError> {
        let state = if needs_oracle {
            Some(oracle::evolve(&input.table, t).map_err(compute)?)
        } else {
            None
        };
        Ok(Self {
            t,
            state,
            tau123: None,
        })
    }

    fn state(&self) -> &StateVector {
        self.state.as_ref().expect("oracle state prepared upfront")
    }

    /// The authoritative 3-tangle at this time, computed once.
    fn tau123(&mut self, input: &ResolvedInput) -> Result<f64, CliError> {
        if let Some(v) = self.tau123 {
            return Ok(v);
        }
        let v = closedform::oracle_residual_for(&input.phases, self.t).map_err(compute)?;
        self.tau123 = Some(v);
        Ok(v)
    }
}

/// Evaluate one (measure, target, engine) cell.
pub fn evaluate(
    input: &ResolvedInput,
    run: &RunConfig,
    ctx: &mut EvalContext,
    measure: Measure,
    target: &Target,
    engine: Engine,
) -> Result<f64, CliError> {
    let phases = &input.phases;
    let t = ctx.t;
    match (measure, engine) {
        (Measure::TwoBody, Engine::Closed) => {
            Ok(closedform::concurrence_two_body(phases.get(0, 1), t))
        }
        (Measure::TwoBody, Engine::Oracle) => {
            let bip = Bipartition::one_vs_rest(2, 0).map_err(compute)?;
            oracle::iconcurrence_oracle(ctx.state(), &bip).map_err(compute)
        }
        (Measure::Iconcurrence, Engine::Closed) => {
            let Target::Bip(bip) = target else { unreachable!() };
            closedform::iconcurrence(phases, bip, t).map_err(compute)
        }
        (Measure::Iconcurrence, Engine::Oracle) => {
            let Target::Bip(bip) = target else { unreachable!() };
            oracle::iconcurrence_oracle(ctx.state(), bip).map_err(compute)
        }
        (Measure::QK, Engine::Closed) => {
            let Target::K(k) = target else { unreachable!() };
            closedform::meyer_wallach_qk(phases, *k, t).map_err(compute)
        }
        (Measure::QK, Engine::Oracle) => {
            let Target::K(k) = target else { unreachable!() };
            oracle::meyer_wallach_qk_oracle(ctx.state(), *k).map_err(compute)
        }
        (Measure::Pairwise, Engine::Closed) => {
            let Target::Pair(p, q) = target else { unreachable!() };
            let tau123 = ctx.tau123(input)?;
            closedform::pairwise_concurrence(phases, *p, *q, t, tau123).map_err(compute)
        }
        (Measure::Pairwise, Engine::Oracle) => {
            let Target::Pair(p, q) = target else { unreachable!() };
            let rho = oracle::reduced_density(ctx.state(), (1u64 << p) | (1u64 << q))
                .map_err(compute)?;
            oracle::wootters_concurrence(&rho).map_err(compute)
        }
        // closed tangle3 is the (uncertified) published formula under the
        // configured interpretation; the oracle residual is authoritative
        (Measure::Tangle3, Engine::Closed) => {
            closedform::three_tangle_published(phases, t, run.tangle3_interpretation)
                .map_err(compute)
        }
        (Measure::Tangle3, Engine::Oracle) => {
            oracle::three_tangle_residual(ctx.state(), 0).map_err(compute)
        }
    }
}

/// Largest |closed - oracle| per measure in a both-engines sweep.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DeltaSummary {
    pub measure: Measure,
    pub max_abs_delta: f64,
    pub worst_target: String,
    pub worst_t: f64,
}

#[derive(Debug)]
pub struct SweepOutput {
    pub csv: String,
    pub rows: usize,
    /// Present when both engines ran.
    pub delta_summary: Option<Vec<DeltaSummary>>,
}

/// 17-significant-digit float formatting used for every CSV float.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Run the sweep and render CSV. The row count is
/// steps x |expanded measures| x |targets| x |engines|.
pub fn run_sweep(input: &ResolvedInput, run: &RunConfig) -> Result<SweepOutput, CliError> {
    let engines = run.engine.engines();
    let needs_oracle = engines.contains(&Engine::Oracle);
    let measures: Vec<Measure> = Measure::CANONICAL
        .into_iter()
        .filter(|m| run.measures.contains(m))
        .collect();
    let expanded: Vec<(Measure, Vec<Target>)> = measures
        .iter()
        .map(|&m| Ok((m, expand_targets(m, input, run)?)))
        .collect::<Result<_, CliError>>()?;

    let mut csv = String::new();
    csv.push_str(CSV_HEADER);
    csv.push('\n');
    let mut rows = 0usize;
    let mut deltas: Vec<DeltaSummary> = measures
        .iter()
        .map(|&m| DeltaSummary {
            measure: m,
            max_abs_delta: 0.0,
            worst_target: String::new(),
            worst_t: 0.0,
        })
        .collect();

    for &t in &run.time_grid() {
        let mut ctx = EvalContext::new(input, t, needs_oracle)?;
        for (mi, (measure, targets)) in expanded.iter().enumerate() {
            for target in targets {
                let mut pair: Vec<f64> = Vec::with_capacity(2);
                for &engine in &engines {
                    let value = evaluate(input, run, &mut ctx, *measure, target, engine)?;
                    pair.push(value);
                    let engine_name = match engine {
                        Engine::Closed => "closed",
                        Engine::Oracle => "oracle",
                    };
                    writeln!(
                        csv,
                        "{},{},{},{engine_name},{}",
                        fmt_float(t),
                        measure.name(),
                        target.label(),
                        fmt_float(value)
                    )
                    .expect("string write");
                    rows += 1;
                }
                if pair.len() == 2 {
                    let d = (pair[0] - pair[1]).abs();
                    if d > deltas[mi].max_abs_delta {
                        deltas[mi].max_abs_delta = d;
                        deltas[mi].worst_target = target.label();
                        deltas[mi].worst_t = t;
                    }
                }
            }
        }
    }

    Ok(SweepOutput {
        csv,
        rows,
        delta_summary: (engines.len() == 2).then_some(deltas),
    })
}
