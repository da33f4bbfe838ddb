//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes a datum as JSON text and returns JSON text. Points of
//! the normalized hyperplane are also given in plane coordinates: rank 3
//! uses the equilateral triangle spanned by the simple roots, rank 2 the
//! unit segment.

use coxeter_davis::cone::find_interior_basepoint;
use coxeter_davis::davis::build_davis_ball;
use coxeter_davis::embedding::{verify_embedding, VertexImageTable, VtMode};
use coxeter_davis::normalize::{dot_act, normalize, normalized_roots, NormalizedPoint};
use coxeter_davis::parabolic::enumerate_spherical_poset;
use coxeter_davis::reflection::enumerate_ball;
use coxeter_davis::{CoxeterDatum, Vector};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Rank limit of the drawings.
const MAX_DRAW_RANK: usize = 3;
/// Keeps the page responsive.
const MAX_DEPTH: usize = 14;
const MAX_RADIUS: usize = 8;

#[derive(Serialize)]
struct Frame {
    labels: Vec<String>,
    gram: Vec<Vec<f64>>,
}

#[derive(Serialize)]
struct RootPoint {
    depth: usize,
    xy: [f64; 2],
    coords: Vec<f64>,
    isotropy: f64,
}

#[derive(Serialize)]
struct RootsView {
    frame: Frame,
    points: Vec<RootPoint>,
}

#[derive(Serialize)]
struct ChamberView {
    word: Vec<String>,
    /// Maximal simplices of `wK`, each as its projected vertices.
    simplices: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct DavisView {
    frame: Frame,
    basepoint: [f64; 2],
    chambers: Vec<ChamberView>,
    passed: bool,
    min_separation: Option<f64>,
}

#[derive(Serialize)]
struct OrbitPoint {
    word: Vec<String>,
    xy: [f64; 2],
    isotropy: f64,
}

#[derive(Serialize)]
struct OrbitView {
    frame: Frame,
    points: Vec<OrbitPoint>,
}

fn parse(datum_json: &str) -> Result<CoxeterDatum, String> {
    let datum = CoxeterDatum::parse(datum_json).map_err(|e| e.to_string())?;
    if !(2..=MAX_DRAW_RANK).contains(&datum.rank()) {
        return Err(format!(
            "the demo draws rank 2 and 3 only, got rank {}",
            datum.rank()
        ));
    }
    Ok(datum)
}

fn frame(datum: &CoxeterDatum) -> Frame {
    let b = datum.gram();
    Frame {
        labels: datum.labels().to_vec(),
        gram: (0..b.nrows())
            .map(|i| b.row(i).iter().copied().collect())
            .collect(),
    }
}

/// Plane coordinates of a point with coordinate sum 1.
pub fn project(x: &[f64]) -> [f64; 2] {
    match x {
        [_, b] => [*b, 0.0],
        [_, b, c] => [b + 0.5 * c, c * 3f64.sqrt() / 2.0],
        _ => [f64::NAN, f64::NAN],
    }
}

fn project_point(x: &NormalizedPoint) -> [f64; 2] {
    project(x.as_slice())
}

fn mode(name: &str) -> Result<VtMode, String> {
    match name {
        "linear" => Ok(VtMode::Linear),
        "dot" => Ok(VtMode::Dot),
        other => Err(format!("unknown vertex image mode {other:?}")),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn roots_view(datum_json: &str, depth: usize) -> Result<String, String> {
    let datum = parse(datum_json)?;
    let roots = normalized_roots(&datum, depth.min(MAX_DEPTH)).map_err(|e| e.to_string())?;
    let points = roots
        .iter()
        .map(|r| RootPoint {
            depth: r.depth,
            xy: project_point(&r.point),
            coords: r.point.as_slice().to_vec(),
            isotropy: r.isotropy,
        })
        .collect();
    json(&RootsView {
        frame: frame(&datum),
        points,
    })
}

pub fn davis_view(datum_json: &str, radius: usize, vt_mode: &str) -> Result<String, String> {
    let datum = parse(datum_json)?;
    let radius = radius.min(MAX_RADIUS);
    let err = |e: coxeter_davis::Error| e.to_string();
    let poset = enumerate_spherical_poset(&datum).map_err(err)?;
    let v0 = find_interior_basepoint(&datum).map_err(err)?;
    let basepoint = project_point(&normalize(&v0.coords).map_err(err)?);
    let table = VertexImageTable::new(&datum, &poset, v0, mode(vt_mode)?).map_err(err)?;
    let ball = build_davis_ball(&datum, &poset, radius).map_err(err)?;
    let maximal = table.chamber.maximal_simplices();
    let mut chambers = Vec::with_capacity(ball.chambers().len());
    for w in ball.chambers() {
        let mut simplices = Vec::with_capacity(maximal.len());
        for &m in &maximal {
            let corners = table.chamber.simplices[m]
                .iter()
                .map(|&v| dot_act(w, &table.images[v]).map(|p| project_point(&p)))
                .collect::<coxeter_davis::Result<Vec<_>>>()
                .map_err(err)?;
            simplices.push(corners);
        }
        chambers.push(ChamberView {
            word: w.labels(&datum),
            simplices,
        });
    }
    let report = verify_embedding(&datum, radius.min(3), &table).map_err(err)?;
    json(&DavisView {
        frame: frame(&datum),
        basepoint,
        chambers,
        passed: report.passed,
        min_separation: report.injectivity_min_separation,
    })
}

pub fn orbit_view(datum_json: &str, point: &str, radius: usize) -> Result<String, String> {
    let datum = parse(datum_json)?;
    let coords = point
        .split(',')
        .map(|c| c.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("invalid point: {e}"))?;
    if coords.len() != datum.rank() {
        return Err(format!(
            "point has {} coordinates, rank is {}",
            coords.len(),
            datum.rank()
        ));
    }
    let err = |e: coxeter_davis::Error| e.to_string();
    let x = normalize(&Vector::from_vec(coords)).map_err(err)?;
    let ball = enumerate_ball(&datum, radius.min(MAX_RADIUS)).map_err(err)?;
    let mut points = Vec::with_capacity(ball.len());
    for w in ball.elements() {
        // Points leaving the region where the coordinate sum is nonzero
        // have no image; they are dropped from the drawing.
        if let Ok(y) = dot_act(w, &x) {
            points.push(OrbitPoint {
                word: w.labels(&datum),
                xy: project_point(&y),
                isotropy: datum.form(y.coords(), y.coords()),
            });
        }
    }
    json(&OrbitView {
        frame: frame(&datum),
        points,
    })
}

#[wasm_bindgen]
pub fn normalized_roots_json(datum_json: &str, depth: usize) -> Result<String, JsValue> {
    roots_view(datum_json, depth).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn davis_json(datum_json: &str, radius: usize, vt_mode: &str) -> Result<String, JsValue> {
    davis_view(datum_json, radius, vt_mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn orbit_json(datum_json: &str, point: &str, radius: usize) -> Result<String, JsValue> {
    orbit_view(datum_json, point, radius).map_err(|e| JsValue::from_str(&e))
}
