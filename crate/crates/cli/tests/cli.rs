use std::process::{Command, Output};

use serde_json::Value;

fn pz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pz")).args(args).env_remove("PZ_LOG").output().expect("run pz")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = pz(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

const REFERENCE: [&str; 10] = ["-a", "1", "-b", "1", "-c", "3", "-m", "1", "-k", "1"];

#[test]
fn classify_example_family() {
    let v = json(&["classify", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2"]);
    assert_eq!(v["tag"], "F2");
    assert_eq!(v["p"], 0);
    assert_eq!(v["r"], 2);
    let v = json(&["classify", "-a", "-1", "-b", "-1", "-c", "-2", "-m", "1", "-k", "0"]);
    assert_eq!(v["tag"], "F1");
    assert_eq!(v["params"]["c"], "-2");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(pz(&["classify"]).status.code(), Some(2));
    assert_eq!(pz(&["classify", "-a", "x", "-b", "1", "-c", "1", "-m", "1", "-k", "1"]).status.code(), Some(2));
    assert_eq!(pz(&["classify", "-a", "1/0", "-b", "1", "-c", "1", "-m", "1", "-k", "1"]).status.code(), Some(2));
    assert_eq!(pz(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pz(&["--help"]).status.code(), Some(0));
}

#[test]
fn validation_errors_exit_2() {
    // a = 0 leaves the Riccati substitution undefined
    let o = pz(&["transform", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("riccati_to_linear"));
    // m - k - 1 = -1: not a polynomial system
    let o = pz(&["critical", "-a", "1", "-b", "1", "-c", "-3", "-m", "1", "-k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pz(&["portrait", "-a", "1", "-b", "1", "-c", "-3", "-m", "1", "-k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let mut args = vec!["verify"];
    args.extend(REFERENCE);
    args.extend(["--tol", "0"]);
    assert_eq!(pz(&args).status.code(), Some(2));
    assert_eq!(pz(&["portrait", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2", "--window", "1,0,0,1"]).status.code(), Some(2));
}

#[test]
fn transform_lists_every_stage() {
    let mut args = vec!["transform"];
    args.extend(REFERENCE);
    let v = json(&args);
    let stages: Vec<&str> = v["stages"].as_array().unwrap().iter().map(|s| s["stage"].as_str().unwrap()).collect();
    assert!(stages.len() >= 6, "{stages:?}");
    assert_eq!(stages[0], "lienard");
}

#[test]
fn verify_reference_passes_and_tight_tolerance_fails() {
    let mut args = vec!["verify"];
    args.extend(REFERENCE);
    args.extend(["--tol", "1e-7"]);
    let o = pz(&args);
    assert_eq!(o.status.code(), Some(0));
    let table = stdout(&o);
    assert_eq!(table.lines().count(), 7);
    assert!(table.lines().skip(1).all(|l| l.ends_with("ok")), "{table}");
    let mut args = vec!["verify"];
    args.extend(REFERENCE);
    args.extend(["--tol", "1e-30"]);
    let o = pz(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn critical_with_infinity() {
    let v = json(&["critical", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2", "--infinity"]);
    let kinds: Vec<&str> = v["points"].as_array().unwrap().iter().map(|p| p["classification"]["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["HyperbolicSaddle", "HyperbolicUnstableNode"]);
    assert_eq!(v["points"][0]["point"]["x"], "-3/2");
    let inf = v["infinity"]["points"].as_array().unwrap();
    assert!(inf.iter().any(|p| p["chart"] == "U2" && p["classification"]["kind"] == "UnstableNode"));
    assert!(v.get("infinity").is_some());
    let v = json(&["critical", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2"]);
    assert!(v.get("infinity").is_none());
}

#[test]
fn json_round_trips_byte_for_byte() {
    let mut transform = vec!["transform"];
    transform.extend(REFERENCE);
    let runs: [&[&str]; 4] = [
        &["classify", "-a", "1", "-b", "2", "-c", "-5", "-m", "2", "-k", "1"],
        &transform,
        &["critical", "-a", "1", "-b", "1", "-c", "-5", "-m", "2", "-k", "1", "--infinity"],
        &["example-pz", "-b", "1", "-c", "-1/2"],
    ];
    for args in runs {
        let text = stdout(&pz(args));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text, "{args:?}");
        assert_eq!(text, stdout(&pz(args)), "{args:?} is not deterministic");
    }
}

#[test]
fn example_pz_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("example.svg");
    let v = json(&["example-pz", "-b", "-1", "-c", "2", "--portrait", svg.to_str().unwrap(), "--seeds", "16"]);
    assert_eq!(v["family"]["tag"], "F2");
    assert_eq!(v["charts"].as_array().unwrap().len(), 2);
    assert_eq!(v["quadrature"]["check"]["matching_sign"], 1);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains("critical-point"));
    // c < 0 puts the quadrature interval across a zero of 3t^2 + 2c
    let v = json(&["example-pz", "-b", "1", "-c", "-1"]);
    assert!(v["quadrature"]["skipped"].is_string());
}

#[test]
fn portrait_formats() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("p.csv");
    let args = ["portrait", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2", "--seeds", "9", "--format", "csv", "-o"];
    let mut with_path: Vec<&str> = args.to_vec();
    with_path.push(csv.to_str().unwrap());
    assert_eq!(pz(&with_path).status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("trajectory_id,t,x,y\n"));
    assert!(!text.contains('\r'));
    let o = pz(&["portrait", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2", "--seeds", "9", "--window", "-2,2,-1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("<svg"));
    assert_eq!(pz(&["portrait", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2", "--format", "pdf"]).status.code(), Some(2));
}

#[test]
fn logging_goes_to_stderr_only() {
    let args = ["classify", "-a", "0", "-b", "1", "-c", "1", "-m", "3/2", "-k", "1/2"];
    let quiet = pz(&args);
    let loud = Command::new(env!("CARGO_BIN_EXE_pz")).args(args).env("PZ_LOG", "debug").output().unwrap();
    assert_eq!(quiet.stdout, loud.stdout);
    assert!(quiet.stderr.is_empty());
    assert!(String::from_utf8_lossy(&loud.stderr).contains("family F2"));
}
