use coxeter_davis_wasm::{davis_view, orbit_view, project, roots_view};
use serde_json::Value;

const UNIVERSAL: &str =
    r#"{"generators":["s","t","u"],"bonds":[["s","t","inf"],["s","u","inf"],["t","u","inf"]]}"#;
const AFFINE: &str = r#"{"generators":["s","t"],"bonds":[["s","t","inf"]]}"#;
const A2: &str = r#"{"generators":["s","t"],"bonds":[["s","t",3]]}"#;

fn value(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

fn xy(v: &Value) -> [f64; 2] {
    [v[0].as_f64().unwrap(), v[1].as_f64().unwrap()]
}

#[test]
fn triangle_projection_of_the_corners() {
    assert_eq!(project(&[1.0, 0.0, 0.0]), [0.0, 0.0]);
    assert_eq!(project(&[0.0, 1.0, 0.0]), [1.0, 0.0]);
    let top = project(&[0.0, 0.0, 1.0]);
    assert!((top[0] - 0.5).abs() < 1e-15 && (top[1] - 0.75f64.sqrt()).abs() < 1e-15);
}

#[test]
fn affine_roots_approach_the_midpoint() {
    let v = value(roots_view(AFFINE, 6));
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 14);
    // Level k of the affine system normalizes to (k, k+1) / (2k+1).
    let deepest = points
        .iter()
        .filter(|p| p["depth"] == 6)
        .map(|p| (xy(&p["xy"])[0] - 0.5).abs())
        .fold(f64::INFINITY, f64::min);
    assert!((deepest - 0.5 / 13.0).abs() < 1e-12);
}

#[test]
fn embedded_chambers_of_the_universal_group() {
    let v = value(davis_view(UNIVERSAL, 2, "linear"));
    assert_eq!(v["passed"], true);
    let chambers = v["chambers"].as_array().unwrap();
    assert_eq!(chambers.len(), 10);
    // K is a tripod: three edges from the barycenter vertex.
    let first = &chambers[0];
    assert_eq!(first["word"].as_array().unwrap().len(), 0);
    let simplices = first["simplices"].as_array().unwrap();
    assert_eq!(simplices.len(), 3);
    let centre = xy(&simplices[0][0]);
    let base = xy(&v["basepoint"]);
    assert!((centre[0] - base[0]).abs() < 1e-12 && (centre[1] - base[1]).abs() < 1e-12);
}

#[test]
fn dot_mode_is_available() {
    let v = value(davis_view(UNIVERSAL, 1, "dot"));
    assert_eq!(v["chambers"].as_array().unwrap().len(), 4);
    assert!(davis_view(UNIVERSAL, 1, "cubic").is_err());
}

#[test]
fn orbit_of_the_barycenter() {
    let v = value(orbit_view(UNIVERSAL, "1,1,1", 1));
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 4);
    assert!(points.iter().all(|p| p["isotropy"].as_f64().unwrap() < 0.0));
}

#[test]
fn finite_groups_have_no_davis_drawing() {
    assert!(davis_view(A2, 2, "linear").is_err());
    assert!(roots_view(A2, 3).is_ok());
}

#[test]
fn bad_inputs_are_reported() {
    assert!(roots_view("{", 2).is_err());
    assert!(orbit_view(UNIVERSAL, "1,2", 1).is_err());
    assert!(orbit_view(UNIVERSAL, "1,x,2", 1).is_err());
    let rank4 = r#"{"generators":["a","b","c","d"],"bonds":[]}"#;
    assert!(roots_view(rank4, 1).unwrap_err().contains("rank"));
}
