//! Serializable records for the JSON and CSV exports.

use serde::Serialize;

use crate::cone::ConeSample;
use crate::datum::{CoxeterDatum, DatumDocument, Vector};
use crate::davis::DavisBall;
use crate::embedding::{EmbeddedPoint, EmbeddingReport, VertexImageTable, VtMode};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::normalize::{LimitRootEstimate, NormalizedRoot};
use crate::parabolic::{classify_parabolic, ParabolicKind, SphericalPoset};
use crate::reflection::{RootRecord, Sign};

fn vec(v: &Vector) -> Vec<f64> {
    v.iter().copied().collect()
}

fn labels(datum: &CoxeterDatum, t: GenSet) -> Vec<String> {
    t.iter().map(|s| datum.label(s).to_string()).collect()
}

fn word(datum: &CoxeterDatum, w: &[usize]) -> Vec<String> {
    w.iter().map(|&s| datum.label(s).to_string()).collect()
}

#[derive(Serialize)]
pub struct RootRow {
    pub depth: usize,
    pub sign: Sign,
    pub coords: Vec<f64>,
}

#[derive(Serialize)]
pub struct RootsExport {
    pub datum: DatumDocument,
    pub depth: usize,
    pub count: usize,
    pub roots: Vec<RootRow>,
}

impl RootsExport {
    pub fn new(datum: &CoxeterDatum, depth: usize, roots: &[RootRecord]) -> Self {
        Self {
            datum: datum.to_document(),
            depth,
            count: roots.len(),
            roots: roots
                .iter()
                .map(|r| RootRow {
                    depth: r.depth,
                    sign: r.sign,
                    coords: vec(&r.coords),
                })
                .collect(),
        }
    }

    pub fn to_csv(&self, datum: &CoxeterDatum) -> Result<String> {
        let mut header = vec!["depth".to_string()];
        header.extend(datum.labels().iter().cloned());
        let rows = self.roots.iter().map(|r| {
            let mut row = vec![r.depth.to_string()];
            row.extend(r.coords.iter().map(f64::to_string));
            row
        });
        write_csv(header, rows)
    }
}

#[derive(Serialize)]
pub struct PointRow {
    pub depth: usize,
    pub point: Vec<f64>,
    pub isotropy: f64,
}

#[derive(Serialize)]
pub struct PointsExport {
    pub datum: DatumDocument,
    pub depth: usize,
    pub count: usize,
    pub points: Vec<PointRow>,
}

impl PointsExport {
    pub fn from_normalized(datum: &CoxeterDatum, depth: usize, roots: &[NormalizedRoot]) -> Self {
        let points: Vec<PointRow> = roots
            .iter()
            .map(|r| PointRow {
                depth: r.depth,
                point: r.point.as_slice().to_vec(),
                isotropy: r.isotropy,
            })
            .collect();
        Self {
            datum: datum.to_document(),
            depth,
            count: points.len(),
            points,
        }
    }

    pub fn from_limits(datum: &CoxeterDatum, depth: usize, est: &[LimitRootEstimate]) -> Self {
        let points: Vec<PointRow> = est
            .iter()
            .map(|e| PointRow {
                depth: e.source_depth,
                point: e.point.as_slice().to_vec(),
                isotropy: e.isotropy,
            })
            .collect();
        Self {
            datum: datum.to_document(),
            depth,
            count: points.len(),
            points,
        }
    }

    pub fn to_csv(&self, datum: &CoxeterDatum) -> Result<String> {
        let mut header = vec!["depth".to_string()];
        header.extend(datum.labels().iter().map(|l| format!("x_{l}")));
        header.push("isotropy".into());
        let rows = self.points.iter().map(|p| {
            let mut row = vec![p.depth.to_string()];
            row.extend(p.point.iter().map(f64::to_string));
            row.push(p.isotropy.to_string());
            row
        });
        write_csv(header, rows)
    }
}

#[derive(Serialize)]
pub struct ParabolicRow {
    pub subset: Vec<String>,
    pub kind: ParabolicKind,
    pub radical: Option<Vec<f64>>,
}

#[derive(Serialize)]
pub struct PosetExport {
    pub elements: Vec<Vec<String>>,
    pub covers: Vec<(usize, usize)>,
    pub maximal: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct ParabolicsExport {
    pub datum: DatumDocument,
    pub subsets: Vec<ParabolicRow>,
    pub spherical_poset: PosetExport,
}

impl ParabolicsExport {
    pub fn new(datum: &CoxeterDatum, poset: &SphericalPoset) -> Self {
        let subsets = datum
            .all()
            .subsets()
            .skip(1)
            .map(|t| {
                let class = classify_parabolic(datum, t);
                ParabolicRow {
                    subset: labels(datum, t),
                    kind: class.kind,
                    radical: class.radical.as_ref().map(vec),
                }
            })
            .collect();
        Self {
            datum: datum.to_document(),
            subsets,
            spherical_poset: PosetExport {
                elements: poset.elements.iter().map(|&t| labels(datum, t)).collect(),
                covers: poset.covers.clone(),
                maximal: poset
                    .maximal()
                    .into_iter()
                    .map(|t| labels(datum, t))
                    .collect(),
            },
        }
    }

    pub fn to_csv(&self, datum: &CoxeterDatum) -> Result<String> {
        let mut header = vec!["subset".to_string(), "kind".to_string()];
        header.extend(datum.labels().iter().map(|l| format!("radical_{l}")));
        let rows = self.subsets.iter().map(|r| {
            let kind = serde_json::to_value(r.kind)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default();
            let mut row = vec![r.subset.join(" "), kind];
            match &r.radical {
                Some(x) => row.extend(x.iter().map(f64::to_string)),
                None => row.extend(std::iter::repeat_n(String::new(), datum.rank())),
            }
            row
        });
        write_csv(header, rows)
    }
}

#[derive(Serialize)]
pub struct SampleRow {
    pub word: Vec<String>,
    pub base: Vec<f64>,
    pub image: Vec<f64>,
    pub normalized: Vec<f64>,
    pub isotropy: f64,
}

#[derive(Serialize)]
pub struct SamplesExport {
    pub datum: DatumDocument,
    pub radius: usize,
    pub seed: u64,
    pub samples: Vec<SampleRow>,
}

impl SamplesExport {
    pub fn new(datum: &CoxeterDatum, radius: usize, seed: u64, samples: &[ConeSample]) -> Self {
        Self {
            datum: datum.to_document(),
            radius,
            seed,
            samples: samples
                .iter()
                .map(|s| {
                    let x = s.normalized_image.coords();
                    SampleRow {
                        word: s.element.labels(datum),
                        base: vec(&s.base),
                        image: vec(&s.image),
                        normalized: vec(x),
                        isotropy: datum.form(x, x),
                    }
                })
                .collect(),
        }
    }

    pub fn to_csv(&self, datum: &CoxeterDatum) -> Result<String> {
        let mut header = vec!["word".to_string()];
        header.extend(datum.labels().iter().map(|l| format!("x_{l}")));
        header.push("isotropy".into());
        let rows = self.samples.iter().map(|s| {
            let mut row = vec![s.word.join(" ")];
            row.extend(s.normalized.iter().map(f64::to_string));
            row.push(s.isotropy.to_string());
            row
        });
        write_csv(header, rows)
    }
}

#[derive(Serialize)]
pub struct AdjacencyRow {
    pub from: usize,
    pub to: usize,
    pub generator: String,
}

#[derive(Serialize)]
pub struct FrontierRow {
    pub chamber: usize,
    pub generator: String,
}

#[derive(Serialize)]
pub struct DavisExport {
    pub datum: DatumDocument,
    pub radius: usize,
    pub vertices: Vec<Vec<String>>,
    pub simplices: Vec<Vec<Vec<String>>>,
    pub chambers: Vec<Vec<String>>,
    pub adjacency: Vec<AdjacencyRow>,
    pub frontier: Vec<FrontierRow>,
    pub cell_classes: usize,
}

impl DavisExport {
    pub fn new(datum: &CoxeterDatum, radius: usize, ball: &DavisBall) -> Self {
        let ch = &ball.chamber;
        Self {
            datum: datum.to_document(),
            radius,
            vertices: ch.vertices.iter().map(|&t| labels(datum, t)).collect(),
            simplices: (0..ch.simplices.len())
                .map(|i| ch.chain(i).into_iter().map(|t| labels(datum, t)).collect())
                .collect(),
            chambers: ball.chambers().iter().map(|w| w.labels(datum)).collect(),
            adjacency: ball
                .adjacency
                .iter()
                .map(|&(from, to, s)| AdjacencyRow {
                    from,
                    to,
                    generator: datum.label(s).to_string(),
                })
                .collect(),
            frontier: ball
                .frontier
                .iter()
                .map(|&(chamber, s)| FrontierRow {
                    chamber,
                    generator: datum.label(s).to_string(),
                })
                .collect(),
            cell_classes: ball.cells(datum).len(),
        }
    }

    /// One row per adjacency, then one per frontier mirror (with an empty
    /// target).
    pub fn to_csv(&self) -> Result<String> {
        let header = ["from", "to", "generator", "from_word", "to_word"]
            .map(String::from)
            .to_vec();
        let rows = self
            .adjacency
            .iter()
            .map(|a| {
                vec![
                    a.from.to_string(),
                    a.to.to_string(),
                    a.generator.clone(),
                    self.chambers[a.from].join(" "),
                    self.chambers[a.to].join(" "),
                ]
            })
            .chain(self.frontier.iter().map(|f| {
                vec![
                    f.chamber.to_string(),
                    String::new(),
                    f.generator.clone(),
                    self.chambers[f.chamber].join(" "),
                    String::new(),
                ]
            }));
        write_csv(header, rows)
    }
}

#[derive(Serialize)]
pub struct VertexImageRow {
    pub subset: Vec<String>,
    pub image: Vec<f64>,
}

#[derive(Serialize)]
pub struct CellRow {
    pub word: Vec<String>,
    pub carrier: Vec<Vec<String>>,
    pub barycentric: Vec<f64>,
    pub image: Vec<f64>,
    pub isotropy: f64,
}

#[derive(Serialize)]
pub struct EmbeddingExport {
    pub datum: DatumDocument,
    pub radius: usize,
    pub vt_mode: VtMode,
    pub basepoint: Vec<f64>,
    pub vertex_images: Vec<VertexImageRow>,
    pub chambers: usize,
    pub cells: Vec<CellRow>,
    pub verification: EmbeddingReport,
}

impl EmbeddingExport {
    pub fn new(
        datum: &CoxeterDatum,
        table: &VertexImageTable,
        chambers: usize,
        points: &[EmbeddedPoint],
        report: EmbeddingReport,
    ) -> Self {
        Self {
            datum: datum.to_document(),
            radius: report.radius,
            vt_mode: table.mode,
            basepoint: vec(&table.basepoint.coords),
            vertex_images: table
                .chamber
                .vertices
                .iter()
                .zip(&table.images)
                .map(|(&t, x)| VertexImageRow {
                    subset: labels(datum, t),
                    image: x.as_slice().to_vec(),
                })
                .collect(),
            chambers,
            cells: points
                .iter()
                .map(|p| CellRow {
                    word: word(datum, p.source.element.word()),
                    carrier: p
                        .source
                        .point
                        .carrier
                        .iter()
                        .map(|&t| labels(datum, t))
                        .collect(),
                    barycentric: p.source.point.barycentric.clone(),
                    image: p.image.as_slice().to_vec(),
                    isotropy: p.isotropy,
                })
                .collect(),
            verification: report,
        }
    }

    pub fn to_csv(&self, datum: &CoxeterDatum) -> Result<String> {
        let mut header = vec!["word".to_string(), "carrier".to_string()];
        header.extend(datum.labels().iter().map(|l| format!("x_{l}")));
        header.push("isotropy".into());
        let rows = self.cells.iter().map(|c| {
            let carrier: Vec<String> = c
                .carrier
                .iter()
                .map(|t| format!("{{{}}}", t.join(" ")))
                .collect();
            let mut row = vec![c.word.join(" "), carrier.join("<")];
            row.extend(c.image.iter().map(f64::to_string));
            row.push(c.isotropy.to_string());
            row
        });
        write_csv(header, rows)
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| Error::InvalidDocument(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn write_csv(header: Vec<String>, rows: impl Iterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidDocument(e.to_string());
    w.write_record(&header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidDocument(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
