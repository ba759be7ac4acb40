//! End-to-end tests: config loading, the binary's CSV/report output,
//! determinism, and exit codes.

use std::path::Path;
use std::process::Command;

use qgem_cli::config::load_config;

fn write_config(dir: &Path, name: &str, json: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

fn qgem() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qgem"))
}

#[test]
fn minimal_phases_config_loads() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(
        dir.path(),
        "min.json",
        r#"{ "mode": "phases",
             "phase_matrix_rad_per_s": [[0.0, 1.0, 0.5],
                                        [1.0, 0.0, 0.0],
                                        [0.5, 0.0, 0.0]] }"#,
    );
    let (run, input) = load_config(&path).unwrap();
    assert_eq!(input.n, 3);
    assert_eq!(run.steps, 101);
    assert_eq!(input.phases.get(0, 1), 1.0);
}

#[test]
fn geometry_mode_rejects_coincident_points() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(
        dir.path(),
        "bad.json",
        r#"{ "mode": "geometry",
             "masses": [
               { "mass_kg": 1e-14, "loc0": [0,0,0], "loc1": [1e-4,0,0] },
               { "mass_kg": 1e-14, "loc0": [0,0,0], "loc1": [1e-4,0,0] }
             ] }"#,
    );
    let err = load_config(&path).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("CoincidentCrossPair"), "message: {msg}");
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn unassigned_mass_in_bipartition_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let matrix7: Vec<Vec<f64>> = (0..7)
        .map(|p| (0..7).map(|q| if p == q { 0.0 } else { 1.0 }).collect())
        .collect();
    let json = format!(
        r#"{{ "mode": "phases",
             "phase_matrix_rad_per_s": {},
             "run": {{ "bipartitions": ["17|2345"] }} }}"#,
        serde_json::to_string(&matrix7).unwrap()
    );
    let path = write_config(dir.path(), "bip.json", &json);
    let err = load_config(&path).unwrap_err();
    assert!(err.to_string().contains("mass 6 unassigned"), "{err}");
}

#[test]
fn parse_error_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(dir.path(), "syntax.json", "{ \"mode\": \n oops }");
    let err = load_config(&path).unwrap_err();
    assert!(err.to_string().contains("line 2"), "{err}");
}

#[test]
fn sweep_binary_writes_deterministic_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let config = write_config(
        dir.path(),
        "cfg.json",
        &format!(
            r#"{{ "mode": "phases",
                 "phase_matrix_rad_per_s": [[0.0, 3.141592653589793],
                                            [3.141592653589793, 0.0]],
                 "run": {{ "engine": "both",
                           "measures": ["two_body", "iconcurrence"],
                           "t_start": 0.0, "t_end": 2.0, "steps": 5,
                           "out": {:?} }} }}"#,
            out.display().to_string()
        ),
    );
    let report_path = dir.path().join("report.json");
    let run = |report: &Path| {
        let status = qgem()
            .arg("--config")
            .arg(&config)
            .arg("--report")
            .arg(report)
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read_to_string(&out).unwrap()
    };
    let first = run(&report_path);
    let second = run(&report_path);
    assert_eq!(first, second, "reruns must be byte-identical");

    // header + 5 steps x 2 measures x 1 target x 2 engines
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines[0], "t_seconds,measure,target,engine,value");
    assert_eq!(lines.len(), 1 + 5 * 2 * 2);
    // Phi = pi: the concurrence peaks at exactly 1 at t = 1
    let peak = lines
        .iter()
        .find(|l| l.starts_with("1.0000000000000000e0,two_body") && l.contains(",closed,"))
        .unwrap();
    assert!(peak.ends_with(",1.0000000000000000e0"), "row: {peak}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["n"], 2);
    assert_eq!(report["graph"]["genuine_entanglement"], true);
    assert_eq!(report["sweep"]["rows"], 20);
    let delta = report["sweep"]["max_abs_delta"][0]["max_abs_delta"]
        .as_f64()
        .unwrap();
    assert!(delta < 1e-12);
}

#[test]
fn compare_mode_passes_and_fails_by_tolerance() {
    let dir = tempfile::tempdir().unwrap();
    let body = |tol: f64| {
        format!(
            r#"{{ "mode": "phases",
                 "phase_matrix_rad_per_s": [[0.0, 1.3, 0.4],
                                            [1.3, 0.0, 2.2],
                                            [0.4, 2.2, 0.0]],
                 "run": {{ "measures": ["iconcurrence", "pairwise"],
                           "steps": 9, "compare_tolerance": {tol} }} }}"#
        )
    };
    let pass_cfg = write_config(dir.path(), "pass.json", &body(1e-9));
    let output = qgem()
        .arg("--config")
        .arg(&pass_cfg)
        .arg("--compare")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "stderr: {}",
        String::from_utf8_lossy(&output.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8(output.stdout).unwrap()).unwrap();
    assert_eq!(report["comparison"]["pass"], true);

    // an absurd tolerance turns rounding noise into a failure: exit 3
    let fail_cfg = write_config(dir.path(), "fail.json", &body(1e-30));
    let output = qgem()
        .arg("--config")
        .arg(&fail_cfg)
        .arg("--compare")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8(output.stdout).unwrap()).unwrap();
    assert_eq!(report["comparison"]["pass"], false);
}

#[test]
fn rational_mode_reports_ghz_and_separability() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "rational.json",
        r#"{ "mode": "rational-phases",
             "rational": { "base_rad_per_s": 1.0,
                           "multipliers": [["0", "3", "1"],
                                           ["3", "0", "0"],
                                           ["1", "0", "0"]] },
             "run": { "measures": ["iconcurrence"], "steps": 3, "t_end": 1.0 } }"#,
    );
    let output = qgem()
        .arg("--config")
        .arg(&config)
        .arg("--out")
        .arg(dir.path().join("r.csv"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8(output.stdout).unwrap()).unwrap();
    let ghz = &report["ghz"];
    assert!((ghz["phi"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((ghz["first_time"].as_f64().unwrap() - std::f64::consts::PI).abs() < 1e-12);
    let sep = &report["separability"];
    assert!((sep["first_time"].as_f64().unwrap() - std::f64::consts::TAU).abs() < 1e-12);
    assert_eq!(report["sustainability"]["verdict"], "periodically_separable");
}

#[test]
fn tangle3_sweep_embeds_validation_report() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "t3.json",
        r#"{ "mode": "phases",
             "phase_matrix_rad_per_s": [[0.0, 1.0, 1.0],
                                        [1.0, 0.0, 1.0],
                                        [1.0, 1.0, 0.0]],
             "run": { "engine": "both", "measures": ["tangle3"],
                      "t_start": 0.0, "t_end": 6.283185307179586, "steps": 5 } }"#,
    );
    let output = qgem()
        .arg("--config")
        .arg(&config)
        .arg("--out")
        .arg(dir.path().join("t3.csv"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "stderr: {}",
        String::from_utf8_lossy(&output.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8(output.stdout).unwrap()).unwrap();
    let validation = &report["tangle_validation"];
    assert_eq!(validation["anchors_pass"], true);
    assert_eq!(
        validation["certified_interpretations"].as_array().unwrap().len(),
        0,
        "the published formula is not certified"
    );
}

#[test]
fn flag_overrides_beat_config() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "o.json",
        r#"{ "mode": "phases",
             "phase_matrix_rad_per_s": [[0.0, 1.0], [1.0, 0.0]],
             "run": { "measures": ["iconcurrence"], "steps": 50 } }"#,
    );
    let out = dir.path().join("o.csv");
    let status = qgem()
        .arg("--config")
        .arg(&config)
        .args(["--steps", "3", "--engine", "closed", "--measures", "two_body"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let csv = std::fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 1 + 3);
    assert!(csv.lines().nth(1).unwrap().contains(",two_body,"));
}

#[test]
fn pair_phase_table_input_mode() {
    let dir = tempfile::tempdir().unwrap();
    // phi_01 = phi_10 = 2, phi_00 = phi_11 = 0.5 -> Phi = 2|2 - 0.5| = 3
    let path = write_config(
        dir.path(),
        "table.json",
        r#"{ "mode": "phases",
             "pair_phase_table": {
               "n": 2,
               "entries": [ { "p": 1, "q": 2, "rates": [0.5, 2.0, 2.0, 0.5] } ]
             } }"#,
    );
    let (_, input) = load_config(&path).unwrap();
    assert!((input.phases.get(0, 1) - 3.0).abs() < 1e-15);
    assert_eq!(input.table.rate(0, 1, 0, 1), 2.0);

    let dup = write_config(
        dir.path(),
        "dup.json",
        r#"{ "mode": "phases",
             "pair_phase_table": {
               "n": 2,
               "entries": [ { "p": 2, "q": 1, "rates": [0, 0, 0, 0] } ]
             },
             "run": { "measures": ["two_body"] } }"#,
    );
    // reversed pair labels are accepted and transposed
    let (_, input) = load_config(&dup).unwrap();
    assert_eq!(input.n, 2);
}

#[test]
fn example_configs_load() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    for entry in std::fs::read_dir(root).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            load_config(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        }
    }
}
