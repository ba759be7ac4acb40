//! `qgem`: sweep gravity-induced entanglement measures over time, emit
//! CSV and a JSON analysis report, or cross-check the two engines.
//!
//! Exit codes: 0 success, 1 validation error, 2 compute error,
//! 3 engine-comparison failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::Parser;

use qgem_cli::compare::compare_engines;
use qgem_cli::config::{
    load_config, validate_run, BipartitionSelector, EngineChoice, Measure,
};
use qgem_cli::report::{build_report, SweepSummary};
use qgem_cli::sweep::run_sweep;
use qgem_cli::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "qgem",
    version,
    about = "Gravity-induced many-body entanglement: time sweeps, graph analysis, engine comparison"
)]
struct Cli {
    /// JSON config file (see the README for the schema)
    #[arg(long)]
    config: PathBuf,
    /// Override the engine: closed | oracle | both
    #[arg(long)]
    engine: Option<String>,
    /// Override the measures, comma-separated:
    /// two_body,iconcurrence,q_k,pairwise,tangle3
    #[arg(long)]
    measures: Option<String>,
    /// Override the bipartition selector: all | one-vs-rest |
    /// explicit ';'-separated list like "1|234;12|34"
    #[arg(long)]
    bipartitions: Option<String>,
    /// Override the sweep start time (seconds)
    #[arg(long)]
    t_start: Option<f64>,
    /// Override the sweep end time (seconds)
    #[arg(long)]
    t_end: Option<f64>,
    /// Override the number of grid points
    #[arg(long)]
    steps: Option<usize>,
    /// CSV destination; defaults to the config's run.out, else stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON report destination; defaults to stdout unless the CSV is
    /// already streaming there
    #[arg(long)]
    report: Option<PathBuf>,
    /// Compare the closed-form engine against the oracle instead of
    /// sweeping; exits 3 when any gated measure exceeds tolerance
    #[arg(long)]
    compare: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (mut run_cfg, input) = load_config(&cli.config)?;

    if let Some(engine) = &cli.engine {
        run_cfg.engine = EngineChoice::from_str(engine).map_err(CliError::Validation)?;
    }
    if let Some(measures) = &cli.measures {
        run_cfg.measures = measures
            .split(',')
            .map(|m| Measure::from_str(m.trim()).map_err(CliError::Validation))
            .collect::<Result<_, _>>()?;
    }
    if let Some(bips) = &cli.bipartitions {
        run_cfg.bipartitions = BipartitionSelector::parse_cli(bips);
    }
    if let Some(t) = cli.t_start {
        run_cfg.t_start = t;
    }
    if let Some(t) = cli.t_end {
        run_cfg.t_end = t;
    }
    if let Some(s) = cli.steps {
        run_cfg.steps = s;
    }
    if cli.out.is_some() {
        run_cfg.out = cli.out.clone();
    }
    validate_run(&run_cfg, &input)?;

    if cli.compare {
        let comparison = compare_engines(&input, &run_cfg)?;
        let pass = comparison.pass;
        let worst = comparison
            .measures
            .iter()
            .filter(|m| m.gated)
            .max_by(|a, b| a.max_abs_diff.total_cmp(&b.max_abs_diff))
            .map(|m| {
                format!(
                    "{} diff {:.3e} at target {} (t = {})",
                    m.measure.name(),
                    m.max_abs_diff,
                    m.worst_target,
                    m.worst_t
                )
            })
            .unwrap_or_else(|| "no gated measures".to_string());
        let report = build_report(&input, &run_cfg, None, Some(comparison))?;
        emit_report(&report, cli.report.as_deref(), true)?;
        if !pass {
            return Err(CliError::ComparisonFailed(worst));
        }
        return Ok(());
    }

    let sweep = run_sweep(&input, &run_cfg)?;
    let csv_to_stdout = run_cfg.out.is_none();
    match &run_cfg.out {
        Some(path) => std::fs::write(path, &sweep.csv)
            .map_err(|e| CliError::Compute(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{}", sweep.csv),
    }
    let summary = SweepSummary {
        rows: sweep.rows,
        out: run_cfg.out.as_ref().map(|p| p.display().to_string()),
        max_abs_delta: sweep.delta_summary,
    };
    let report = build_report(&input, &run_cfg, Some(summary), None)?;
    emit_report(&report, cli.report.as_deref(), !csv_to_stdout)?;
    Ok(())
}

fn emit_report(
    report: &qgem_cli::report::AnalysisReport,
    path: Option<&std::path::Path>,
    stdout_ok: bool,
) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(report)
        .map_err(|e| CliError::Compute(format!("report serialization: {e}")))?;
    match path {
        Some(p) => std::fs::write(p, json)
            .map_err(|e| CliError::Compute(format!("cannot write {}: {e}", p.display()))),
        None if stdout_ok => {
            println!("{json}");
            Ok(())
        }
        // CSV owns stdout; the report is available via --report
        None => Ok(()),
    }
}
