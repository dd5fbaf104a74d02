use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn subbounds() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_subbounds"));
    cmd.env_remove("SUBBOUNDS_CONFIG");
    cmd
}

fn run(args: &[&str]) -> Output {
    subbounds().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stderr.clone()).unwrap();
    serde_json::from_str(text.trim()).expect("stderr is one JSON line")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dkn_plain_output() {
    let out = run(&["coeff", "dkn", "--k", "1", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "16");
    let out = run(&["coeff", "dkn", "--k", "3", "--n", "6"]);
    assert_eq!(stdout(&out).trim(), "184");
}

#[test]
fn equiangular_bound_with_baseline() {
    let v = json(&run(&["bound", "equiangular", "--k", "2", "--n", "3", "--baseline"]));
    assert_eq!(v["value"], 15);
    assert_eq!(v["baseline"], 21);
    assert_eq!(v["improvement"], 6);
    assert!(v["manifest"]["tolerances"].is_object());
    assert!(v["manifest"]["tool_version"].is_string());
}

#[test]
fn icosahedron_fixture_meets_bound() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ico.json");
    let out = run(&["fixture", "icosahedron", "--n", "3", "-o", path(&file)]);
    assert!(out.status.success());
    let v = json(&run(&["verify", path(&file), "--metric", "fs", "--check", "rank"]));
    assert_eq!(v["s"], 1);
    assert_eq!(v["rank"], 6);
    assert_eq!(v["bound"], 6);
    assert_eq!(v["satisfied"], true);
}

#[test]
fn spectrum_and_matrix_checks() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("simplex.json");
    assert!(run(&["fixture", "simplex", "--n", "4", "-o", path(&file)]).status.success());
    let v = json(&run(&["--no-manifest", "verify", path(&file), "--metric", "angle:1", "--check", "spectrum"]));
    assert_eq!(v["spectrum"]["s"], 1);
    assert_eq!(v["spectrum"]["multiplicities"][0], 10);
    let v = json(&run(&["--no-manifest", "verify", path(&file), "--metric", "chordal", "--check", "matrix"]));
    assert!(v.is_object());
}

#[test]
fn usage_error_exits_2() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["bound", "fs"]).status.code(), Some(2));
}

#[test]
fn domain_error_is_json_on_stderr() {
    let out = run(&["bound", "fs", "--k", "9", "--n", "3"]);
    let e = error_json(&out);
    assert_eq!(e["error"]["kind"], "domain");
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_frame_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(&file, "{not json").unwrap();
    let e = error_json(&run(&["verify", path(&file)]));
    assert_eq!(e["error"]["kind"], "invalid_input");

    std::fs::write(&file, r#"{"n": 3, "k": 1, "frames": [[1.0, 1.0, 0.0]]}"#).unwrap();
    error_json(&run(&["verify", path(&file)]));
}

#[test]
fn table_is_independent_of_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let grid = ["table", "fs", "--k", "1..3", "--n", "2..7", "--s", "1,2"];
    for (file, workers) in [(&a, "1"), (&b, "4")] {
        let mut args = grid.to_vec();
        args.extend(["-o", path(file), "--workers", workers]);
        assert!(run(&args).status.success());
    }
    let ta = std::fs::read_to_string(&a).unwrap();
    assert_eq!(ta, std::fs::read_to_string(&b).unwrap());
    assert!(ta.starts_with("k,n,s,value,kind,baseline,improvement\n"));
    let sidecar = dir.path().join("a.csv.manifest.json");
    let m: Value = serde_json::from_str(&std::fs::read_to_string(sidecar).unwrap()).unwrap();
    assert_eq!(m["manifest"]["workers"], 1);
    // k = 3, n = 2 is outside the domain for both s
    assert_eq!((m["rows"].as_u64(), m["skipped_cells"].as_u64()), (Some(34), Some(2)));
}

#[test]
fn config_file_and_env_are_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.toml");
    std::fs::write(&cfg, "seed = 5\n[tolerances]\ntol_cluster = 1e-7\n").unwrap();
    let args = ["hilbert", "projection-rank", "--k", "1", "--n", "3", "--degree", "1"];

    let out = subbounds().env("SUBBOUNDS_CONFIG", &cfg).args(args).output().unwrap();
    let v = json(&out);
    assert_eq!(v["seed"], 5);
    assert_eq!(v["rank"], 6);
    assert_eq!(v["manifest"]["tolerances"]["tol_cluster"], 1e-7);

    let mut explicit = vec!["--config", path(&cfg), "--tol-cluster", "1e-6"];
    explicit.extend(args);
    let v = json(&run(&explicit));
    assert_eq!(v["manifest"]["tolerances"]["tol_cluster"], 1e-6);

    std::fs::write(&cfg, "bogus = 1\n").unwrap();
    error_json(&run(&["--config", path(&cfg), "coeff", "dkn", "--k", "1", "--n", "3"]));
    error_json(&run(&["--tol-diag=-1", "coeff", "dkn", "--k", "1", "--n", "3"]));
}

#[test]
fn repeated_runs_are_identical_without_manifest() {
    let args = ["--no-manifest", "lemma51", "--n", "3", "--d", "3", "--k", "2", "--membership-samples", "5", "--seed", "3"];
    let first = stdout(&run(&args));
    assert_eq!(first, stdout(&run(&args)));
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["rank"], v["p_d"]);
    assert_eq!(v["membership_failures"], 0);
    assert!(v.get("manifest").is_none());
}

#[test]
fn jack_expansion_for_three_variables() {
    let v = json(&run(&["--no-manifest", "jack", "expand", "--k", "3"]));
    assert_eq!(v["coefficients"]["(2,1)"], "1");
    assert_eq!(v["coefficients"]["(1,1,1)"], "1/2");
}
