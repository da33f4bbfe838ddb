//! Invariant suites run against a single datum. Each suite reports the
//! largest violation it saw; suites whose hypotheses fail for the datum are
//! reported as not applicable rather than passed.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cone::{
    self, average_over_parabolic, check_average, find_interior_basepoint, hyperplane_meets_chamber,
    hyperplane_meets_chamber_lp, in_fundamental_chamber, isotropic_boundary_structure,
    stabilizer_report, ConePoint,
};
use crate::datum::{CoxeterDatum, Vector, EPS};
use crate::davis::{build_davis_ball, canonicalize_cell, DavisCell};
use crate::embedding::{
    check_vertex_table, verify_embedding, vt_mode_discrepancy, VertexImageTable, VtMode,
};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::normalize::normalized_roots;
use crate::parabolic::{
    classify_parabolic, enumerate_spherical_poset, root_closure_terminates, ParabolicKind,
};
use crate::reflection::{self, apply_simple, dihedral_orbit_closed_form, enumerate_ball, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    /// A measurement with no pass/fail threshold.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    /// The invariant being checked, in words.
    pub invariant: &'static str,
    pub status: Status,
    pub max_violation: f64,
    pub detail: String,
}

impl SuiteResult {
    fn judged(
        name: &'static str,
        invariant: &'static str,
        ok: bool,
        max_violation: f64,
        detail: String,
    ) -> Self {
        Self {
            name,
            invariant,
            status: if ok { Status::Pass } else { Status::Fail },
            max_violation,
            detail,
        }
    }

    fn not_applicable(name: &'static str, invariant: &'static str, reason: String) -> Self {
        Self {
            name,
            invariant,
            status: Status::NotApplicable,
            max_violation: 0.0,
            detail: reason,
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckConfig {
    /// Root BFS depth for the sign and limit suites.
    pub depth: usize,
    /// Ball radius for the Davis and embedding suites.
    pub radius: usize,
    /// Ball radius for the displacement suite.
    pub displacement_radius: usize,
    /// Ball radius for the stabilizer suite.
    pub stabilizer_radius: usize,
    /// Random vectors per datum in the displacement suite.
    pub samples: usize,
    pub seed: u64,
    /// Coordinate tolerance for the sign and displacement suites.
    pub tol: f64,
    pub vt_mode: VtMode,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            depth: 10,
            radius: 4,
            displacement_radius: 6,
            stabilizer_radius: 5,
            samples: 200,
            seed: 0,
            tol: EPS,
            vt_mode: VtMode::Linear,
        }
    }
}

/// Runs every suite; errors are only returned for budget failures.
pub fn run_all(datum: &CoxeterDatum, config: &CheckConfig) -> Result<Vec<SuiteResult>> {
    let basepoint = find_interior_basepoint(datum);
    let basepoint = basepoint.as_ref();
    Ok(vec![
        form_invariance(datum, config.radius)?,
        dihedral_closed_forms(datum, 20)?,
        sign_dichotomy(datum, config.depth, config.tol)?,
        finiteness_classification(datum)?,
        displacement(datum, config)?,
        averaging(datum, basepoint)?,
        intersection_criterion(datum)?,
        stabilizers(datum, basepoint, config.stabilizer_radius)?,
        isotropic_boundary(datum)?,
        davis(datum, config.radius)?,
        chain_nondegeneracy(datum, basepoint, config.vt_mode)?,
        embedding(datum, basepoint, config.radius, config.vt_mode)?,
        vt_modes(datum, basepoint)?,
        limit_roots(datum, config.depth)?,
    ])
}

/// `w^T B w = B` for every ball element.
pub fn form_invariance(datum: &CoxeterDatum, radius: usize) -> Result<SuiteResult> {
    let ball = enumerate_ball(datum, radius)?;
    let b = datum.gram();
    let mut worst = 0.0f64;
    for w in ball.elements() {
        let m = w.matrix();
        let scale = m.amax().powi(2).max(1.0);
        worst = worst.max((m.transpose() * b * m - b).amax() / scale);
    }
    Ok(SuiteResult::judged(
        "form-invariance",
        "the form is W-invariant",
        worst <= 1e-9,
        worst,
        format!("{} elements, relative deviation", ball.len()),
    ))
}

/// Coefficients of `(r_s r_t)^i a_s` against the dihedral closed forms, for
/// every pair of generators.
pub fn dihedral_closed_forms(datum: &CoxeterDatum, max_i: i64) -> Result<SuiteResult> {
    let n = datum.rank();
    let mut worst = 0.0f64;
    let mut pairs = 0;
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            pairs += 1;
            let bond = datum.bond(s, t);
            let c = datum.matrix().form_entry(s, t);
            let mut v = datum.simple_root(s);
            for i in 0..=max_i {
                let (cs, ct) = dihedral_orbit_closed_form(bond, c, i)?;
                let scale = cs.abs().max(ct.abs()).max(1.0);
                let err = (v[s] - cs).abs().max((v[t] - ct).abs()) / scale;
                worst = worst.max(err);
                apply_simple(datum, t, &mut v);
                apply_simple(datum, s, &mut v);
            }
        }
    }
    Ok(SuiteResult::judged(
        "dihedral-closed-form",
        "rank-2 orbits match the dihedral closed forms",
        worst <= 1e-7,
        worst,
        format!("{pairs} ordered pairs, i <= {max_i}, relative error"),
    ))
}

/// Every root is positive or negative.
pub fn sign_dichotomy(datum: &CoxeterDatum, depth: usize, tol: f64) -> Result<SuiteResult> {
    let roots = reflection::root_orbit(datum, depth, reflection::ROOT_CAP)?;
    let mut worst = 0.0f64;
    let mut mixed = 0;
    for r in &roots {
        let sign = reflection::sign_of(&r.coords, tol);
        if matches!(sign, Sign::Mixed | Sign::Zero) {
            mixed += 1;
        }
        // Size of the minority sign: zero for a sign-coherent vector.
        let pos = r
            .coords
            .iter()
            .filter(|&&x| x > 0.0)
            .fold(0.0f64, |a, &x| a.max(x));
        let neg = r
            .coords
            .iter()
            .filter(|&&x| x < 0.0)
            .fold(0.0f64, |a, &x| a.max(-x));
        worst = worst.max(pos.min(neg));
    }
    Ok(SuiteResult::judged(
        "sign-dichotomy",
        "every root is positive or negative",
        mixed == 0,
        worst,
        format!("{} roots to depth {depth}, {mixed} mixed", roots.len()),
    ))
}

/// Positive definiteness of the restricted form against termination of the
/// root BFS, on every nonempty subset.
pub fn finiteness_classification(datum: &CoxeterDatum) -> Result<SuiteResult> {
    let mut disagreements = Vec::new();
    let mut count = 0;
    for t in datum.all().subsets().skip(1) {
        count += 1;
        let finite = classify_parabolic(datum, t).kind.is_finite();
        if finite != root_closure_terminates(datum, t, 64, 20_000) {
            disagreements.push(datum.format_subset(t));
        }
    }
    Ok(SuiteResult::judged(
        "finiteness-classification",
        "positive definite restricted form iff finite root subsystem",
        disagreements.is_empty(),
        disagreements.len() as f64,
        if disagreements.is_empty() {
            format!("{count} subsets")
        } else {
            format!("disagreement on {}", disagreements.join(", "))
        },
    ))
}

/// A random `v` with `(v, a_s) <= 0` for every `s`.
pub fn sample_antidominant(datum: &CoxeterDatum, rng: &mut impl Rng) -> Vector {
    let n = datum.rank();
    let b = datum.gram();
    let y = Vector::from_fn(n, |_, _| -(1.0 - rng.random::<f64>()).ln());
    if let Some(inv) = b.clone().try_inverse() {
        if (b * &inv - DMatrix::identity(n, n)).amax() < 1e-9 {
            return -(inv * y);
        }
    }
    // Singular form: every kernel vector pairs to zero with each root.
    let svd = b.clone().svd(true, true);
    let v_t = svd.v_t.expect("requested V^T");
    let mut v = Vector::zeros(n);
    for (i, sv) in svd.singular_values.iter().enumerate() {
        if *sv < 1e-9 {
            let scale = 2.0 * rng.random::<f64>() - 1.0;
            v += v_t.row(i).transpose() * scale;
        }
    }
    v
}

/// `w v - v` lies in `PLC(Pi) + {0}` for seeded random `v` with all
/// `(v, a_s) <= 0` and every `w` in the displacement ball.
pub fn displacement(datum: &CoxeterDatum, config: &CheckConfig) -> Result<SuiteResult> {
    let ball = enumerate_ball(datum, config.displacement_radius)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut worst = 0.0f64;
    let mut violations = 0;
    for _ in 0..config.samples {
        let v = sample_antidominant(datum, &mut rng);
        let scale = v.amax().max(1.0);
        let min = cone::displacement_min_coordinate(datum, &v, ball.elements())? / scale;
        if min < -config.tol {
            violations += 1;
        }
        worst = worst.max(-min);
    }
    Ok(SuiteResult::judged(
        "displacement",
        "w v - v is a nonnegative combination of simple roots when (v, a_s) <= 0",
        violations == 0,
        worst.max(0.0),
        format!(
            "{} vectors x {} elements, {violations} violations",
            config.samples,
            ball.len()
        ),
    ))
}

fn no_basepoint(name: &'static str, invariant: &'static str, e: &Error) -> SuiteResult {
    SuiteResult::not_applicable(name, invariant, format!("no interior basepoint: {e}"))
}

/// The average of the basepoint over each spherical `W_T` lies on the walls
/// of `T`, strictly inside the other walls, and in the chamber.
pub fn averaging(
    datum: &CoxeterDatum,
    basepoint: std::result::Result<&ConePoint, &Error>,
) -> Result<SuiteResult> {
    const NAME: &str = "averaging";
    const INV: &str = "spherical averages lie on exactly their own walls of the chamber";
    let v0 = match basepoint {
        Ok(p) => p,
        Err(e) => return Ok(no_basepoint(NAME, INV, e)),
    };
    let poset = enumerate_spherical_poset(datum)?;
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for &t in &poset.elements {
        let c = average_over_parabolic(datum, t, &v0.coords)?;
        let check = check_average(datum, t, &c);
        worst = worst.max(check.inside_max_abs);
        if !check.passes(1e-8) {
            failures.push(datum.format_subset(t));
        }
    }
    Ok(SuiteResult::judged(
        NAME,
        INV,
        failures.is_empty(),
        worst,
        if failures.is_empty() {
            format!("{} spherical subsets", poset.len())
        } else {
            format!("failed on {}", failures.join(", "))
        },
    ))
}

/// The walls of `T` meet the normalized chamber exactly when every
/// component of `T` is finite or affine; witnesses are checked and the
/// answer is compared with a linear program.
pub fn intersection_criterion(datum: &CoxeterDatum) -> Result<SuiteResult> {
    const NAME: &str = "intersection-criterion";
    const INV: &str = "walls of T meet the chamber iff T is finite or affine";
    if classify_parabolic(datum, datum.all()).kind.is_finite() {
        return Ok(SuiteResult::not_applicable(
            NAME,
            INV,
            "finite group: the imaginary cone is empty".into(),
        ));
    }
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    let mut count = 0;
    for t in datum.all().subsets().skip(1) {
        count += 1;
        let expected = datum
            .components(t)
            .iter()
            .all(|&c| classify_parabolic(datum, c).kind != ParabolicKind::OtherInfinite);
        let witness = hyperplane_meets_chamber(datum, t)?;
        let lp = hyperplane_meets_chamber_lp(datum, t);
        let mut ok = witness.is_some() == expected && lp == expected;
        if let Some(w) = &witness {
            let x = w.coords();
            let off = t
                .iter()
                .map(|s| datum.pair_with_simple(x, s).abs())
                .fold(0.0, f64::max);
            worst = worst.max(off);
            ok &= off <= 1e-8 && in_fundamental_chamber(datum, x).member;
        }
        if !ok {
            failures.push(datum.format_subset(t));
        }
    }
    Ok(SuiteResult::judged(
        NAME,
        INV,
        failures.is_empty(),
        worst,
        if failures.is_empty() {
            format!("{count} subsets, witnesses and linear program agree")
        } else {
            format!("failed on {}", failures.join(", "))
        },
    ))
}

/// Test points for the stabilizer suite: the basepoint, an average on one
/// wall, and the radical of an affine subset, whichever exist.
pub fn stabilizer_points(
    datum: &CoxeterDatum,
    basepoint: std::result::Result<&ConePoint, &Error>,
) -> Result<Vec<(&'static str, Vector)>> {
    let mut points = Vec::new();
    if let Ok(v0) = basepoint {
        points.push(("interior", v0.coords.clone()));
        if let Some(s) = (0..datum.rank()).next() {
            let c = average_over_parabolic(datum, GenSet::singleton(s), &v0.coords)?;
            points.push(("one-wall", c));
        }
    }
    if let Some(r) = datum
        .all()
        .subsets()
        .skip(1)
        .find_map(|t| classify_parabolic(datum, t).radical)
    {
        points.push(("radical", r));
    }
    Ok(points)
}

/// On the ball, the elements fixing `v` are those of the parabolic
/// generated by the walls through `v`.
pub fn stabilizers(
    datum: &CoxeterDatum,
    basepoint: std::result::Result<&ConePoint, &Error>,
    radius: usize,
) -> Result<SuiteResult> {
    const NAME: &str = "stabilizer";
    const INV: &str = "the stabilizer of v is generated by the simple reflections fixing v";
    let points = stabilizer_points(datum, basepoint)?;
    if points.is_empty() {
        return Ok(SuiteResult::not_applicable(
            NAME,
            INV,
            "no interior, wall or radical point".into(),
        ));
    }
    let mut failures = Vec::new();
    let mut names = Vec::new();
    for (name, v) in &points {
        names.push(*name);
        let report = stabilizer_report(datum, v, radius)?;
        if !report.agrees() {
            failures.push(format!(
                "{name}: {} fixers vs {} parabolic elements",
                report.fixers.len(),
                report.parabolic.len()
            ));
        }
    }
    Ok(SuiteResult::judged(
        NAME,
        INV,
        failures.is_empty(),
        failures.len() as f64,
        if failures.is_empty() {
            format!("{} points, radius {radius}", names.join(", "))
        } else {
            failures.join("; ")
        },
    ))
}

/// Isotropic points of the chamber are supported on the roots orthogonal to
/// them; checked on the radical of every affine subset.
pub fn isotropic_boundary(datum: &CoxeterDatum) -> Result<SuiteResult> {
    const NAME: &str = "isotropic-boundary";
    const INV: &str = "an isotropic chamber point is supported on its orthogonal simple roots";
    let mut count = 0;
    let mut failures = Vec::new();
    for t in datum.all().subsets().skip(1) {
        let Some(r) = classify_parabolic(datum, t).radical else {
            continue;
        };
        if !in_fundamental_chamber(datum, &r).member {
            // The radical of T pairs positively with some root outside T.
            continue;
        }
        count += 1;
        match isotropic_boundary_structure(datum, &r) {
            Ok(m) if t.is_subset(m) => {}
            Ok(m) => failures.push(format!(
                "{}: orthogonal set {}",
                datum.format_subset(t),
                datum.format_subset(m)
            )),
            Err(e) => failures.push(format!("{}: {e}", datum.format_subset(t))),
        }
    }
    if count == 0 {
        return Ok(SuiteResult::not_applicable(
            NAME,
            INV,
            "no affine subset with a radical in the chamber".into(),
        ));
    }
    Ok(SuiteResult::judged(
        NAME,
        INV,
        failures.is_empty(),
        failures.len() as f64,
        if failures.is_empty() {
            format!("{count} radicals")
        } else {
            failures.join("; ")
        },
    ))
}

/// Chamber counts, adjacency degrees, idempotent canonicalization and, for
/// finite groups, closure of the whole complex.
pub fn davis(datum: &CoxeterDatum, radius: usize) -> Result<SuiteResult> {
    let poset = enumerate_spherical_poset(datum)?;
    let ball = build_davis_ball(datum, &poset, radius)?;
    let mut problems = Vec::new();
    let plain = enumerate_ball(datum, radius)?;
    if ball.chambers().len() != plain.len() {
        problems.push("chamber count differs from ball size".to_string());
    }
    let mut degree = vec![0usize; ball.chambers().len()];
    for &(i, j, _) in &ball.adjacency {
        degree[i] += 1;
        degree[j] += 1;
    }
    for &(i, _) in &ball.frontier {
        degree[i] += 1;
    }
    if degree.iter().any(|&d| d != datum.rank()) {
        problems.push("a chamber does not have one neighbour or frontier per generator".into());
    }
    for w in ball.chambers() {
        for k in ball.chamber.sample_points() {
            let cell = DavisCell {
                element: w.clone(),
                point: k,
            };
            let once = canonicalize_cell(datum, &cell);
            if canonicalize_cell(datum, &once) != once {
                problems.push(format!("canonicalization not idempotent at {:?}", w.word()));
            }
        }
    }
    let mut detail = format!(
        "{} chambers, {} frontier mirrors",
        ball.chambers().len(),
        ball.frontier.len()
    );
    if classify_parabolic(datum, datum.all()).kind.is_finite() {
        let positive = reflection::generate_roots(datum, 64)?.len();
        let full = build_davis_ball(datum, &poset, positive)?;
        if !full.is_closed() {
            problems.push("finite group complex has a frontier".into());
        }
        detail.push_str(&format!(
            "; whole group: {} chambers, closed",
            full.chambers().len()
        ));
    }
    Ok(SuiteResult::judged(
        "davis",
        "chambers glue along mirrors into a complex without spurious boundary",
        problems.is_empty(),
        problems.len() as f64,
        if problems.is_empty() {
            detail
        } else {
            problems.join("; ")
        },
    ))
}

fn vertex_table(
    datum: &CoxeterDatum,
    basepoint: &ConePoint,
    mode: VtMode,
) -> Result<VertexImageTable> {
    let poset = enumerate_spherical_poset(datum)?;
    VertexImageTable::new(datum, &poset, basepoint.clone(), mode)
}

/// Every maximal chain of spherical subsets has affinely independent images.
pub fn chain_nondegeneracy(
    datum: &CoxeterDatum,
    basepoint: std::result::Result<&ConePoint, &Error>,
    mode: VtMode,
) -> Result<SuiteResult> {
    const NAME: &str = "chain-nondegeneracy";
    const INV: &str = "images of a chain of spherical subsets span a simplex";
    let v0 = match basepoint {
        Ok(p) => p,
        Err(e) => return Ok(no_basepoint(NAME, INV, e)),
    };
    let table = vertex_table(datum, v0, mode)?;
    let checks = table.maximal_chain_checks();
    let smallest = checks
        .iter()
        .map(|(_, c)| c.smallest_singular_value)
        .fold(f64::INFINITY, f64::min);
    let bad: Vec<String> = checks
        .iter()
        .filter(|(_, c)| !c.passed)
        .map(|(chain, _)| {
            chain
                .iter()
                .map(|&t| datum.format_subset(t))
                .collect::<Vec<_>>()
                .join(" < ")
        })
        .collect();
    Ok(SuiteResult::judged(
        NAME,
        INV,
        bad.is_empty(),
        smallest,
        if bad.is_empty() {
            format!(
                "{} maximal chains, smallest singular value {smallest:.3e}",
                checks.len()
            )
        } else {
            format!("degenerate: {}", bad.join("; "))
        },
    ))
}

/// The vertex table and the full embedding report over the ball.
pub fn embedding(
    datum: &CoxeterDatum,
    basepoint: std::result::Result<&ConePoint, &Error>,
    radius: usize,
    mode: VtMode,
) -> Result<SuiteResult> {
    const NAME: &str = "embedding";
    const INV: &str = "F is equivariant, injective and aligns mirrors with walls";
    let v0 = match basepoint {
        Ok(p) => p,
        Err(e) => return Ok(no_basepoint(NAME, INV, e)),
    };
    let table = vertex_table(datum, v0, mode)?;
    let vt = check_vertex_table(datum, &table)?;
    let report = match verify_embedding(datum, radius, &table) {
        Ok(r) => r,
        Err(Error::DegenerateSimplex { smallest }) => {
            return Ok(SuiteResult::judged(
                NAME,
                INV,
                false,
                smallest,
                format!("degenerate simplex in K, smallest singular value {smallest:e}"),
            ))
        }
        Err(e) => return Err(e),
    };
    let mut failed = Vec::new();
    if !vt.passed {
        failed.push("vertex images");
    }
    if !report.equivariance_ok {
        failed.push("equivariance");
    }
    if !report.injectivity_ok {
        failed.push("injectivity");
    }
    if !report.mirror_ok {
        failed.push("mirror alignment");
    }
    if !report.isotropy_ok {
        failed.push("isotropy");
    }
    if report.stabilizer_mismatches > 0 {
        failed.push("stabilizer match");
    }
    if report.stab_implication_violations > 0 {
        failed.push("chamber return implies stabilizer");
    }
    let worst = report
        .equivariance_max
        .max(report.well_defined_max)
        .max(report.mirror_on_max)
        .max(vt.wall_max);
    let detail = format!(
        "{} chambers, {} cells, separation {}, isotropy max {:.3e}",
        report.chambers,
        report.cells,
        report
            .injectivity_min_separation
            .map_or("n/a".to_string(), |d| format!("{d:.3e}")),
        report.isotropy_max
    );
    Ok(SuiteResult::judged(
        NAME,
        INV,
        failed.is_empty() && report.passed,
        worst,
        if failed.is_empty() {
            detail
        } else {
            format!("{} violated; {detail}", failed.join(", "))
        },
    ))
}

/// Distance between the linear and dot-action vertex images.
pub fn vt_modes(
    datum: &CoxeterDatum,
    basepoint: std::result::Result<&ConePoint, &Error>,
) -> Result<SuiteResult> {
    const NAME: &str = "vt-mode-discrepancy";
    const INV: &str = "linear and dot-action averages of the basepoint";
    let v0 = match basepoint {
        Ok(p) => p,
        Err(e) => return Ok(no_basepoint(NAME, INV, e)),
    };
    let poset = enumerate_spherical_poset(datum)?;
    let gap = vt_mode_discrepancy(datum, &poset, v0)?;
    Ok(SuiteResult {
        name: NAME,
        invariant: INV,
        status: Status::Info,
        max_violation: gap,
        detail: format!("max distance {gap:.3e} over {} vertex images", poset.len()),
    })
}

/// Normalized roots approach the isotropic cone: the deepest level gets
/// closer to it than the first.
pub fn limit_roots(datum: &CoxeterDatum, depth: usize) -> Result<SuiteResult> {
    const NAME: &str = "limit-roots";
    const INV: &str = "normalized roots accumulate on the isotropic cone";
    if classify_parabolic(datum, datum.all()).kind.is_finite() {
        return Ok(SuiteResult::not_applicable(
            NAME,
            INV,
            "finite group".into(),
        ));
    }
    if depth < 2 {
        return Ok(SuiteResult::not_applicable(
            NAME,
            INV,
            "depth below 2".into(),
        ));
    }
    let roots = normalized_roots(datum, depth)?;
    let closest = |level: usize| {
        roots
            .iter()
            .filter(|r| r.depth == level)
            .map(|r| r.isotropy.abs())
            .fold(f64::INFINITY, f64::min)
    };
    let first = closest(1);
    let deepest = closest(depth);
    Ok(SuiteResult::judged(
        NAME,
        INV,
        deepest < first,
        deepest,
        format!("closest |(x, x)|: level 1 {first:.3e}, level {depth} {deepest:.3e}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn quick() -> CheckConfig {
        CheckConfig {
            depth: 6,
            radius: 2,
            displacement_radius: 3,
            stabilizer_radius: 3,
            samples: 10,
            ..CheckConfig::default()
        }
    }

    #[test]
    fn suites_pass_on_the_fixtures() {
        for (name, d) in fixtures::suite() {
            for r in run_all(&d, &quick()).unwrap() {
                assert!(!r.failed(), "{name}: {r:?}");
            }
        }
    }

    #[test]
    fn finite_group_skips_cone_suites() {
        let results = run_all(&fixtures::a2(), &quick()).unwrap();
        let skipped: Vec<&str> = results
            .iter()
            .filter(|r| r.status == Status::NotApplicable)
            .map(|r| r.name)
            .collect();
        assert!(skipped.contains(&"averaging"));
        assert!(skipped.contains(&"embedding"));
        assert!(skipped.contains(&"limit-roots"));
        let davis = results.iter().find(|r| r.name == "davis").unwrap();
        assert_eq!(davis.status, Status::Pass);
        assert!(davis.detail.contains("6 chambers, closed"));
    }

    #[test]
    fn dot_mode_fails_the_embedding_suite() {
        let d = fixtures::universal3();
        let v0 = find_interior_basepoint(&d).unwrap();
        let r = embedding(&d, Ok(&v0), 1, VtMode::Dot).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.detail.contains("vertex images"));
    }

    #[test]
    fn antidominant_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (_, d) in fixtures::suite() {
            for _ in 0..20 {
                let v = sample_antidominant(&d, &mut rng);
                assert!(d.walls(&v).iter().all(|&p| p <= 1e-9));
            }
        }
    }
}
