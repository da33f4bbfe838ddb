use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxeter-davis"))
        .args(args)
        .env_remove("COXETER_DAVIS_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn affine_roots_by_depth() {
    let d = data("affine_a1.json");
    let one = json(&run(&["roots", "--datum", &d, "--depth", "1"]));
    assert_eq!(one["count"], 4);
    let two = json(&run(&["roots", "--datum", &d, "--depth", "2"]));
    assert_eq!(two["count"], 6);
    let coords: Vec<Vec<f64>> = two["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| serde_json::from_value(r["coords"].clone()).unwrap())
        .collect();
    assert!(coords.contains(&vec![2.0, 3.0]));
    assert!(coords.contains(&vec![3.0, 2.0]));
}

#[test]
fn csv_output_has_a_header() {
    let out = run(&[
        "roots",
        "--datum",
        &data("affine_a1.json"),
        "--depth",
        "1",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "depth,s,t");
    assert_eq!(lines.len(), 5);
}

#[test]
fn input_errors_exit_two() {
    let missing = run(&["roots", "--datum", "/nonexistent/datum.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"generators":["s","t"],"bonds":[["s","t",1]]}"#).unwrap();
    let invalid = run(&["roots", "--datum", bad.to_str().unwrap()]);
    assert_eq!(invalid.status.code(), Some(2));

    let tol = run(&["roots", "--datum", &data("a2.json"), "--tol", "0.5"]);
    assert_eq!(tol.status.code(), Some(2));

    let outside = run(&[
        "cone-samples",
        "--datum",
        &data("universal3.json"),
        "--basepoint",
        "2,1,1",
    ]);
    assert_eq!(outside.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&outside.stderr).contains("interior"));
}

#[test]
fn check_on_finite_group_passes_with_inapplicable_rows() {
    let out = run(&["check", "--datum", &data("a2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("N/A"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn check_on_universal_group_passes() {
    let out = run(&[
        "check",
        "--datum",
        &data("universal3.json"),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let results: Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = results.as_array().unwrap();
    assert!(rows.iter().all(|r| r["status"] != "fail"));
    assert!(rows.iter().any(|r| r["status"] == "pass"));
}

#[test]
fn embedding_verifies() {
    let v = json(&run(&[
        "embed",
        "--datum",
        &data("universal3.json"),
        "--radius",
        "2",
    ]));
    assert_eq!(v["verification"]["passed"], true);
    assert_eq!(v["vt_mode"], "linear");
    assert_eq!(v["chambers"], 10);
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_coxeter-davis"))
        .args(["parabolics", "--datum", &data("universal3.json")])
        .env("COXETER_DAVIS_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("parabolics.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["subsets"].as_array().unwrap().len(), 7);
}

#[test]
fn explicit_out_wins() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested/roots.csv");
    let out = run(&[
        "roots",
        "--datum",
        &data("a2.json"),
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(path).unwrap().starts_with("depth,"));
}

#[test]
fn seeded_samples_are_reproducible() {
    let args = [
        "cone-samples",
        "--datum",
        &data("triangle_334.json"),
        "--seed",
        "17",
        "--radius",
        "4",
    ];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = run(&[
        "cone-samples",
        "--datum",
        &data("triangle_334.json"),
        "--seed",
        "18",
        "--radius",
        "4",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn davis_ball_for_finite_group_closes() {
    let v = json(&run(&[
        "davis",
        "--datum",
        &data("a2.json"),
        "--radius",
        "3",
    ]));
    assert_eq!(v["chambers"].as_array().unwrap().len(), 6);
    assert!(v["frontier"].as_array().unwrap().is_empty());
}
