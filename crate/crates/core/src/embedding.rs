//! The equivariant map `F` from the Davis complex into the normalized
//! imaginary cone: vertex images `v_T`, affine extension over simplices of
//! `K`, and `F(w, k) = w . F(k)` on translates.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::cone::{
    average_over_parabolic, in_fundamental_chamber, stabilizer_generators, ConePoint,
};
use crate::datum::{CoxeterDatum, Vector};
use crate::davis::{
    build_davis_ball, build_fundamental_chamber, canonicalize_cell, point_stabilizer, ChamberPoint,
    DavisBall, DavisCell, FundamentalChamber,
};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::normalize::{dot_act, normalize, NormalizedPoint};
use crate::parabolic::{
    enumerate_finite_parabolic_elements, enumerate_spherical_poset, SphericalPoset,
};

/// Agreement tolerance for images, wall pairings and fixed points.
pub const EMBED_TOL: f64 = 1e-8;
/// Smallest allowed singular value of a chain's difference matrix.
pub const CHAIN_TOL: f64 = 1e-8;
/// Required separation of images of inequivalent sample cells.
pub const SEPARATION_TOL: f64 = 1e-7;
/// Upper bound on `(x, x)` for embedded points.
pub const ISOTROPY_TOL: f64 = 1e-9;

/// How `v_T` averages the basepoint over `W_T`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VtMode {
    /// Normalize the mean of the linear images `w v0`.
    #[default]
    Linear,
    /// Mean of the normalized images `w . v0`.
    Dot,
}

/// `v_T` for a spherical `T` and an interior basepoint.
pub fn vertex_image(
    datum: &CoxeterDatum,
    t: GenSet,
    v0: &ConePoint,
    mode: VtMode,
) -> Result<NormalizedPoint> {
    if !in_fundamental_chamber(datum, &v0.coords).interior {
        return Err(Error::NotInterior);
    }
    match mode {
        VtMode::Linear => normalize(&average_over_parabolic(datum, t, &v0.coords)?),
        VtMode::Dot => {
            let base = normalize(&v0.coords)?;
            let elements = enumerate_finite_parabolic_elements(datum, t)?;
            let mut sum = Vector::zeros(datum.rank());
            for w in &elements {
                sum += dot_act(w, &base)?.coords();
            }
            normalize(&(sum / elements.len() as f64))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChainCheck {
    /// Smallest singular value of the differences `p_i - p_0`; infinite for
    /// a single point.
    pub smallest_singular_value: f64,
    pub passed: bool,
}

/// Whether the points are affinely independent.
pub fn chain_simplex_check(images: &[NormalizedPoint]) -> ChainCheck {
    let k = images.len();
    if k <= 1 {
        return ChainCheck {
            smallest_singular_value: f64::INFINITY,
            passed: true,
        };
    }
    let n = images[0].coords().len();
    let smallest = if k - 1 > n {
        0.0
    } else {
        let p0 = images[0].coords();
        let diffs = DMatrix::from_fn(n, k - 1, |r, c| images[c + 1].coords()[r] - p0[r]);
        diffs.singular_values().min()
    };
    ChainCheck {
        smallest_singular_value: smallest,
        passed: smallest > CHAIN_TOL,
    }
}

/// The vertex images `v_T` for every spherical `T`, with the chain check of
/// every simplex of `K` precomputed.
#[derive(Clone, Debug)]
pub struct VertexImageTable {
    pub mode: VtMode,
    pub basepoint: ConePoint,
    pub chamber: FundamentalChamber,
    /// Aligned with `chamber.vertices`.
    pub images: Vec<NormalizedPoint>,
    /// Aligned with `chamber.simplices`.
    pub chain_checks: Vec<ChainCheck>,
}

impl VertexImageTable {
    pub fn new(
        datum: &CoxeterDatum,
        poset: &SphericalPoset,
        basepoint: ConePoint,
        mode: VtMode,
    ) -> Result<Self> {
        let chamber = build_fundamental_chamber(poset);
        let images = chamber
            .vertices
            .iter()
            .map(|&t| vertex_image(datum, t, &basepoint, mode))
            .collect::<Result<Vec<_>>>()?;
        let chain_checks = chamber
            .simplices
            .iter()
            .map(|chain| {
                let pts: Vec<NormalizedPoint> = chain.iter().map(|&i| images[i].clone()).collect();
                chain_simplex_check(&pts)
            })
            .collect();
        Ok(Self {
            mode,
            basepoint,
            chamber,
            images,
            chain_checks,
        })
    }

    pub fn image(&self, t: GenSet) -> Option<&NormalizedPoint> {
        self.chamber.vertex_index(t).map(|i| &self.images[i])
    }

    /// Chain checks of the maximal simplices of `K`.
    pub fn maximal_chain_checks(&self) -> Vec<(Vec<GenSet>, ChainCheck)> {
        self.chamber
            .maximal_simplices()
            .into_iter()
            .map(|i| (self.chamber.chain(i), self.chain_checks[i]))
            .collect()
    }
}

/// `F(k)`: the affine combination of the carrier's vertex images.
pub fn embed_chamber_point(k: &ChamberPoint, table: &VertexImageTable) -> Result<NormalizedPoint> {
    let simplex = table.chamber.simplex_of(&k.carrier).ok_or_else(|| {
        Error::PreconditionViolated("carrier is not a chain of spherical subsets".into())
    })?;
    let check = table.chain_checks[simplex];
    if !check.passed {
        return Err(Error::DegenerateSimplex {
            smallest: check.smallest_singular_value,
        });
    }
    let mut x = Vector::zeros(table.basepoint.coords.len());
    for (&i, &w) in table.chamber.simplices[simplex].iter().zip(&k.barycentric) {
        x += table.images[i].coords() * w;
    }
    normalize(&x)
}

#[derive(Clone, Debug)]
pub struct EmbeddedPoint {
    pub source: DavisCell,
    pub image: NormalizedPoint,
    pub isotropy: f64,
}

/// `F((w, k)) = w . F(k)`.
pub fn embed_cell(
    datum: &CoxeterDatum,
    cell: &DavisCell,
    table: &VertexImageTable,
) -> Result<EmbeddedPoint> {
    let image = dot_act(&cell.element, &embed_chamber_point(&cell.point, table)?)?;
    let isotropy = datum.form(image.coords(), image.coords());
    Ok(EmbeddedPoint {
        source: cell.clone(),
        image,
        isotropy,
    })
}

/// Images of every sampled cell of the ball, in the order of
/// [`DavisBall::cells`].
pub fn embed_ball(
    datum: &CoxeterDatum,
    ball: &DavisBall,
    table: &VertexImageTable,
) -> Result<Vec<EmbeddedPoint>> {
    ball.cells(datum)
        .iter()
        .map(|(_, cell)| embed_cell(datum, cell, table))
        .collect()
}

/// Checks on the vertex table itself.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexTableReport {
    /// `max |(v_T, a_t)|` over `t` in `T`.
    pub wall_max: f64,
    /// `max (v_T, a_s)` over `s` outside `T`; must be negative.
    pub outside_max: f64,
    /// Pairs `(T, s)` where `s . v_T = v_T` disagrees with `s in T`.
    pub fixed_point_mismatches: usize,
    /// Vertex images outside the chamber.
    pub membership_failures: usize,
    /// Nonempty `T` whose image misses every wall.
    pub off_frontier: usize,
    pub passed: bool,
}

pub fn check_vertex_table(
    datum: &CoxeterDatum,
    table: &VertexImageTable,
) -> Result<VertexTableReport> {
    let mut wall_max = 0.0f64;
    let mut outside_max = f64::NEG_INFINITY;
    let mut fixed_point_mismatches = 0;
    let mut membership_failures = 0;
    let mut off_frontier = 0;
    for (&t, image) in table.chamber.vertices.iter().zip(&table.images) {
        let x = image.coords();
        let walls = datum.walls(x);
        for s in 0..datum.rank() {
            if t.contains(s) {
                wall_max = wall_max.max(walls[s].abs());
            } else {
                outside_max = outside_max.max(walls[s]);
            }
            let r = crate::reflection::GroupElement::generator(datum, s);
            let fixed = dot_act(&r, image)?.distance(image) <= EMBED_TOL;
            if fixed != t.contains(s) {
                fixed_point_mismatches += 1;
            }
        }
        if !in_fundamental_chamber(datum, x).member {
            membership_failures += 1;
        }
        if !t.is_empty() && walls.iter().all(|p| p.abs() > EMBED_TOL) {
            off_frontier += 1;
        }
    }
    let passed = wall_max <= EMBED_TOL
        && outside_max < 0.0
        && fixed_point_mismatches == 0
        && membership_failures == 0
        && off_frontier == 0;
    Ok(VertexTableReport {
        wall_max,
        outside_max,
        fixed_point_mismatches,
        membership_failures,
        off_frontier,
        passed,
    })
}

/// Largest max-norm distance between the linear and dot-mode `v_T`.
pub fn vt_mode_discrepancy(
    datum: &CoxeterDatum,
    poset: &SphericalPoset,
    basepoint: &ConePoint,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for &t in &poset.elements {
        let a = vertex_image(datum, t, basepoint, VtMode::Linear)?;
        let b = vertex_image(datum, t, basepoint, VtMode::Dot)?;
        worst = worst.max(a.distance(&b));
    }
    Ok(worst)
}

/// Result of checking `F` over a ball. Violations are magnitudes; the
/// booleans compare them with the module tolerances.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddingReport {
    pub radius: usize,
    pub chambers: usize,
    pub cells: usize,
    /// `max |F(w . c) - w . F(c)|` over ball elements `w` and sample cells `c`.
    pub equivariance_max: f64,
    /// Largest disagreement between representatives of one cell.
    pub well_defined_max: f64,
    pub equivariance_ok: bool,
    /// Smallest distance between images of inequivalent sample cells.
    pub injectivity_min_separation: Option<f64>,
    pub injectivity_ok: bool,
    /// `max |(F(k), a_s)|` over sample points on the mirror `K_s`.
    pub mirror_on_max: f64,
    /// `min |(F(k), a_s)|` over sample points off the mirror `K_s`.
    pub mirror_off_min: Option<f64>,
    pub mirror_ok: bool,
    pub isotropy_max: f64,
    pub isotropy_ok: bool,
    /// Sample points where the wall stabilizer of `F(k)` differs from `W_k`.
    pub stabilizer_mismatches: usize,
    /// Pairs `(w, k)` with `w . F(k)` in the chamber but `w` outside `W_k`.
    pub stab_implication_violations: usize,
    pub chain_min_singular_value: f64,
    pub chain_ok: bool,
    pub passed: bool,
}

fn closest_pair(points: &[&NormalizedPoint]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].as_slice()[0].total_cmp(&points[b].as_slice()[0]));
    let mut best = f64::INFINITY;
    for (i, &a) in order.iter().enumerate() {
        let xa = points[a].as_slice()[0];
        for &b in &order[i + 1..] {
            if points[b].as_slice()[0] - xa >= best {
                break;
            }
            best = best.min(points[a].distance(points[b]));
        }
    }
    Some(best)
}

pub fn verify_embedding(
    datum: &CoxeterDatum,
    radius: usize,
    table: &VertexImageTable,
) -> Result<EmbeddingReport> {
    let poset = enumerate_spherical_poset(datum)?;
    let ball = build_davis_ball(datum, &poset, radius)?;
    let samples = table.chamber.sample_points();
    let base_images = samples
        .iter()
        .map(|k| embed_chamber_point(k, table))
        .collect::<Result<Vec<_>>>()?;

    let cells = ball.cells(datum);
    let embedded = cells
        .iter()
        .map(|(_, c)| embed_cell(datum, c, table))
        .collect::<Result<Vec<_>>>()?;

    let mut well_defined_max = 0.0f64;
    let mut stab_implication_violations = 0;
    for w in ball.chambers() {
        for (k, fk) in samples.iter().zip(&base_images) {
            let direct = dot_act(w, fk)?;
            let canonical = canonicalize_cell(
                datum,
                &DavisCell {
                    element: w.clone(),
                    point: k.clone(),
                },
            );
            let via_class = dot_act(&canonical.element, fk)?;
            well_defined_max = well_defined_max.max(direct.distance(&via_class));
            if in_fundamental_chamber(datum, direct.coords()).member
                && !w.in_parabolic(point_stabilizer(k))
            {
                stab_implication_violations += 1;
            }
        }
    }

    let mut equivariance_max = 0.0f64;
    for w in ball.chambers() {
        for ((simplex, cell), e) in cells.iter().zip(&embedded) {
            let moved = w
                .compose(datum, &cell.element)
                .min_coset_rep(datum, point_stabilizer(&cell.point));
            let lhs = dot_act(&moved, &base_images[*simplex])?;
            let rhs = dot_act(w, &e.image)?;
            equivariance_max = equivariance_max.max(lhs.distance(&rhs));
        }
    }

    let images: Vec<&NormalizedPoint> = embedded.iter().map(|e| &e.image).collect();
    let injectivity_min_separation = closest_pair(&images);

    let mut mirror_on_max = 0.0f64;
    let mut mirror_off_min: Option<f64> = None;
    let mut stabilizer_mismatches = 0;
    for (k, fk) in samples.iter().zip(&base_images) {
        let walls = datum.walls(fk.coords());
        for s in 0..datum.rank() {
            let p = walls[s].abs();
            if k.in_mirror(s) {
                mirror_on_max = mirror_on_max.max(p);
            } else {
                mirror_off_min = Some(mirror_off_min.map_or(p, |m| m.min(p)));
            }
        }
        if stabilizer_generators(datum, fk.coords())? != point_stabilizer(k) {
            stabilizer_mismatches += 1;
        }
    }

    let isotropy_max = embedded
        .iter()
        .map(|e| e.isotropy)
        .fold(f64::NEG_INFINITY, f64::max);
    let chain_min_singular_value = table
        .chain_checks
        .iter()
        .map(|c| c.smallest_singular_value)
        .fold(f64::INFINITY, f64::min);

    let equivariance_ok = equivariance_max < EMBED_TOL && well_defined_max < EMBED_TOL;
    let injectivity_ok = injectivity_min_separation.is_none_or(|d| d > SEPARATION_TOL);
    let mirror_ok = mirror_on_max < EMBED_TOL && mirror_off_min.is_none_or(|d| d >= EMBED_TOL);
    let isotropy_ok = isotropy_max <= ISOTROPY_TOL;
    let chain_ok = chain_min_singular_value > CHAIN_TOL;
    let passed = equivariance_ok
        && injectivity_ok
        && mirror_ok
        && isotropy_ok
        && chain_ok
        && stabilizer_mismatches == 0
        && stab_implication_violations == 0;
    Ok(EmbeddingReport {
        radius,
        chambers: ball.chambers().len(),
        cells: cells.len(),
        equivariance_max,
        well_defined_max,
        equivariance_ok,
        injectivity_min_separation,
        injectivity_ok,
        mirror_on_max,
        mirror_off_min,
        mirror_ok,
        isotropy_max,
        isotropy_ok,
        stabilizer_mismatches,
        stab_implication_violations,
        chain_min_singular_value,
        chain_ok,
        passed,
    })
}
