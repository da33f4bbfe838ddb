//! The fundamental chamber `K = { v in PLC(Pi) : (v, a) <= 0 for all a }` of
//! the imaginary cone, its `W`-translates, and the structural facts about
//! stabilizers, walls and positive independence used by the embedding.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::datum::{CoxeterDatum, Vector, EPS};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::lp::{self, Outcome};
use crate::normalize::{normalize, NormalizedPoint};
use crate::parabolic::{
    classify_parabolic, enumerate_finite_parabolic_elements, enumerate_spherical_poset,
    ParabolicKind,
};
use crate::reflection::{self, enumerate_ball, GroupElement, ELEMENT_CAP};

/// Whether `v` is a nonzero nonnegative combination of the simple roots.
pub fn in_plc(v: &Vector) -> bool {
    v.iter().all(|&x| x >= -EPS) && v.iter().any(|&x| x > EPS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub interior: bool,
}

/// Membership in `K` with the default margin [`EPS`].
pub fn in_fundamental_chamber(datum: &CoxeterDatum, v: &Vector) -> Membership {
    in_fundamental_chamber_with_margin(datum, v, EPS)
}

/// Membership in `K`; the interior flag requires every wall pairing below
/// `-margin` and every coordinate above `margin`.
pub fn in_fundamental_chamber_with_margin(
    datum: &CoxeterDatum,
    v: &Vector,
    margin: f64,
) -> Membership {
    let walls = datum.walls(v);
    let member = in_plc(v) && walls.iter().all(|&p| p <= EPS);
    let interior = member && walls.iter().all(|&p| p < -margin) && v.iter().all(|&x| x > margin);
    Membership { member, interior }
}

/// `min(min_a v_a, min_s -(v, a_s))`; positive exactly on the open cone.
pub fn interior_margin(datum: &CoxeterDatum, v: &Vector) -> f64 {
    let walls = datum.walls(v);
    let wall_margin = walls.iter().map(|p| -p).fold(f64::INFINITY, f64::min);
    wall_margin.min(v.min())
}

/// A point of `K` together with its interior flag.
#[derive(Clone, Debug, PartialEq)]
pub struct ConePoint {
    pub coords: Vector,
    pub in_interior: bool,
}

impl ConePoint {
    pub fn new(datum: &CoxeterDatum, coords: Vector) -> Self {
        let in_interior = in_fundamental_chamber(datum, &coords).interior;
        Self {
            coords,
            in_interior,
        }
    }
}

fn require_interior_exists(datum: &CoxeterDatum) -> Result<()> {
    if !datum.is_connected(datum.all()) {
        return Err(Error::NotApplicable(
            "the Coxeter group is reducible".into(),
        ));
    }
    match classify_parabolic(datum, datum.all()).kind {
        ParabolicKind::Finite => Err(Error::NotApplicable("the Coxeter group is finite".into())),
        ParabolicKind::AffineIrreducible => {
            Err(Error::NotApplicable("the Coxeter group is affine".into()))
        }
        ParabolicKind::OtherInfinite => Ok(()),
    }
}

/// A normalized point of the open cone `In(K)`. Tries the solution of
/// `B x = -1` first and falls back to a margin-maximizing linear program.
pub fn find_interior_basepoint(datum: &CoxeterDatum) -> Result<ConePoint> {
    require_interior_exists(datum)?;
    let rhs = Vector::from_element(datum.rank(), -1.0);
    if let Some(x) = datum.gram().clone().lu().solve(&rhs) {
        if x.iter().all(|&c| c > EPS) {
            let v = normalize(&x)?.into_inner();
            if interior_margin(datum, &v) > EPS {
                return Ok(ConePoint::new(datum, v));
            }
        }
    }
    basepoint_by_lp(datum)
}

/// The interior basepoint computed by the linear program alone.
pub fn basepoint_by_lp(datum: &CoxeterDatum) -> Result<ConePoint> {
    require_interior_exists(datum)?;
    match max_margin_point(datum, GenSet::EMPTY, true) {
        Some((v, margin)) if margin > EPS => Ok(ConePoint::new(datum, v)),
        Some((_, margin)) => Err(Error::Infeasible(format!(
            "largest interior margin is {margin:e}"
        ))),
        None => Err(Error::Infeasible("the chamber is empty".into())),
    }
}

/// Checks a user-supplied basepoint and normalizes it.
pub fn validate_basepoint(datum: &CoxeterDatum, v: &Vector) -> Result<ConePoint> {
    datum.check_dim(v)?;
    let v = normalize(v)?.into_inner();
    if !in_fundamental_chamber(datum, &v).interior {
        return Err(Error::NotInterior);
    }
    Ok(ConePoint::new(datum, v))
}

/// Solves: maximize `t` over `v >= 0` with `sum v = 1`, `(v, a_s) = 0` for
/// `s` in `walls`, `(v, a_s) <= -t` otherwise, and (when `positive_coords`)
/// `v_a >= t`. Returns the optimal `v` and `t`, or `None` when infeasible.
pub fn max_margin_point(
    datum: &CoxeterDatum,
    walls: GenSet,
    positive_coords: bool,
) -> Option<(Vector, f64)> {
    let n = datum.rank();
    let b = datum.gram();
    let free: Vec<usize> = (0..n).filter(|&s| !walls.contains(s)).collect();
    let uses_t = !free.is_empty() || positive_coords;
    // Columns: v (n), t, slack per free wall, surplus per coordinate.
    let t_col = n;
    let slack0 = n + usize::from(uses_t);
    let surplus0 = slack0 + free.len();
    let cols = surplus0 + if positive_coords { n } else { 0 };
    let rows = n + if positive_coords { n } else { 0 } + 1;
    let mut a = DMatrix::zeros(rows, cols);
    let mut rhs = vec![0.0; rows];
    let mut row = 0;
    for s in 0..n {
        for j in 0..n {
            a[(row, j)] = b[(s, j)];
        }
        if let Some(k) = free.iter().position(|&f| f == s) {
            a[(row, t_col)] = 1.0;
            a[(row, slack0 + k)] = 1.0;
        }
        row += 1;
    }
    if positive_coords {
        for i in 0..n {
            a[(row, i)] = 1.0;
            a[(row, t_col)] = -1.0;
            a[(row, surplus0 + i)] = -1.0;
            row += 1;
        }
    }
    for j in 0..n {
        a[(row, j)] = 1.0;
    }
    rhs[row] = 1.0;
    let mut c = vec![0.0; cols];
    if uses_t {
        c[t_col] = 1.0;
    }
    match lp::maximize(&c, &a, &rhs) {
        Outcome::Optimal { x, .. } => {
            let v = Vector::from_iterator(n, x[..n].iter().copied());
            let t = if uses_t { x[t_col] } else { 0.0 };
            Some((v, t))
        }
        Outcome::Infeasible => None,
        Outcome::Unbounded => unreachable!("margin is bounded because sum v = 1"),
    }
}

/// Some point of `K`, preferring the interior basepoint when one exists.
pub fn some_chamber_point(datum: &CoxeterDatum) -> Option<Vector> {
    if let Ok(p) = find_interior_basepoint(datum) {
        return Some(p.coords);
    }
    max_margin_point(datum, GenSet::EMPTY, false).map(|(v, _)| v)
}

fn require_antidominant(datum: &CoxeterDatum, v: &Vector) -> Result<()> {
    datum.check_dim(v)?;
    let walls = datum.walls(v);
    if let Some(s) = (0..datum.rank()).find(|&s| walls[s] > EPS) {
        return Err(Error::PreconditionViolated(format!(
            "(v, a_{}) = {:e} > 0",
            datum.label(s),
            walls[s]
        )));
    }
    Ok(())
}

/// Smallest coordinate of `w v - v` over the ball; `+inf` for a ball with
/// only the identity.
pub fn displacement_min_coordinate(
    datum: &CoxeterDatum,
    v: &Vector,
    ball: &[GroupElement],
) -> Result<f64> {
    require_antidominant(datum, v)?;
    let mut min = f64::INFINITY;
    for w in ball.iter().filter(|w| !w.is_identity()) {
        let diff = w.act(v)? - v;
        min = min.min(diff.min());
    }
    Ok(min)
}

/// Whether `w v - v` lies in `PLC(Pi) + {0}` for every `w` with
/// `l(w) <= ball_radius`.
pub fn check_displacement(datum: &CoxeterDatum, v: &Vector, ball_radius: usize) -> Result<bool> {
    require_antidominant(datum, v)?;
    let ball = enumerate_ball(datum, ball_radius)?;
    Ok(displacement_min_coordinate(datum, v, ball.elements())? >= -EPS)
}

/// Mean of the linear images `w v0` over the finite parabolic `W_subset`.
/// For an interior `v0` the result lies on the walls of `subset` and strictly
/// inside every other wall.
pub fn average_over_parabolic(datum: &CoxeterDatum, subset: GenSet, v0: &Vector) -> Result<Vector> {
    datum.check_dim(v0)?;
    let elements = enumerate_finite_parabolic_elements(datum, subset)?;
    let mut sum = Vector::zeros(datum.rank());
    for w in &elements {
        sum += w.act(v0)?;
    }
    Ok(sum / elements.len() as f64)
}

/// Wall pairings of an averaged point, split by membership in the subset.
#[derive(Clone, Debug, PartialEq)]
pub struct AveragingCheck {
    /// `max |(c, a_s)|` over `s` in the subset (0 for the empty subset).
    pub inside_max_abs: f64,
    /// `max (c, a_t)` over `t` outside the subset (`-inf` if none).
    pub outside_max: f64,
    pub in_chamber: bool,
}

impl AveragingCheck {
    pub fn passes(&self, tol: f64) -> bool {
        self.inside_max_abs <= tol && self.outside_max < -EPS && self.in_chamber
    }
}

pub fn check_average(datum: &CoxeterDatum, subset: GenSet, c: &Vector) -> AveragingCheck {
    let walls = datum.walls(c);
    let mut inside = 0.0f64;
    let mut outside = f64::NEG_INFINITY;
    for s in 0..datum.rank() {
        if subset.contains(s) {
            inside = inside.max(walls[s].abs());
        } else {
            outside = outside.max(walls[s]);
        }
    }
    AveragingCheck {
        inside_max_abs: inside,
        outside_max: outside,
        in_chamber: in_fundamental_chamber(datum, c).member,
    }
}

/// Generators whose wall contains `v`; for `v` with all `(v, a_s) <= 0`
/// these generate the full stabilizer of `v`.
pub fn stabilizer_generators(datum: &CoxeterDatum, v: &Vector) -> Result<GenSet> {
    require_antidominant(datum, v)?;
    let walls = datum.walls(v);
    Ok(GenSet::from_indices(
        (0..datum.rank()).filter(|&s| walls[s].abs() <= EPS),
    ))
}

/// Outcome of checking the stabilizer over a ball.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerReport {
    pub generators: GenSet,
    /// Ball elements fixing `v`, in shortlex order.
    pub fixers: Vec<Vec<usize>>,
    /// Ball elements of the parabolic generated by `generators`.
    pub parabolic: Vec<Vec<usize>>,
}

impl StabilizerReport {
    pub fn agrees(&self) -> bool {
        self.fixers == self.parabolic
    }
}

pub fn stabilizer_report(
    datum: &CoxeterDatum,
    v: &Vector,
    ball_radius: usize,
) -> Result<StabilizerReport> {
    let generators = stabilizer_generators(datum, v)?;
    let ball = enumerate_ball(datum, ball_radius)?;
    let sub = reflection::generate_closure(datum, generators, Some(ball_radius), ELEMENT_CAP)?;
    let scale = v.amax().max(1.0);
    let mut fixers = Vec::new();
    let mut parabolic = Vec::new();
    for w in ball.elements() {
        if (w.act(v)? - v).amax() <= EPS * scale {
            fixers.push(w.word().to_vec());
        }
        if sub.position_of_matrix(w.matrix()).is_some() {
            parabolic.push(w.word().to_vec());
        }
    }
    Ok(StabilizerReport {
        generators,
        fixers,
        parabolic,
    })
}

/// Whether, on the ball, the elements fixing `v` are exactly those of the
/// parabolic subgroup generated by [`stabilizer_generators`].
pub fn verify_stabilizer(datum: &CoxeterDatum, v: &Vector, ball_radius: usize) -> Result<bool> {
    Ok(stabilizer_report(datum, v, ball_radius)?.agrees())
}

/// For a nonzero isotropic `x` in `K`, the simple roots orthogonal to `x`.
/// `x` is supported on them and lies in the radical of the restricted form.
pub fn isotropic_boundary_structure(datum: &CoxeterDatum, x: &Vector) -> Result<GenSet> {
    datum.check_dim(x)?;
    if !in_fundamental_chamber(datum, x).member {
        return Err(Error::PreconditionViolated(
            "x is not in the fundamental chamber".into(),
        ));
    }
    let scale = x.amax();
    let q = datum.form(x, x);
    if q.abs() > EPS * scale * scale {
        return Err(Error::PreconditionViolated(format!(
            "x is not isotropic: (x, x) = {q:e}"
        )));
    }
    let walls = datum.walls(x);
    let m =
        GenSet::from_indices((0..datum.rank()).filter(|&s| walls[s].abs() <= EPS * scale.max(1.0)));
    let outside_support = (0..datum.rank())
        .filter(|&s| !m.contains(s))
        .map(|s| x[s].abs())
        .fold(0.0, f64::max);
    if outside_support > 1e-8 * scale.max(1.0) {
        return Err(Error::PreconditionViolated(format!(
            "x has weight {outside_support:e} off its orthogonal simple roots"
        )));
    }
    Ok(m)
}

/// Decides whether `(cap_{s in subset} H_s) ∩ K̂` is nonempty and, when it
/// is, returns a witness. Components of `subset` are treated separately:
/// each must be finite or affine. Affine components contribute their
/// radicals; an all-finite subset averages a point of `K` over `W_subset`.
pub fn hyperplane_meets_chamber(
    datum: &CoxeterDatum,
    subset: GenSet,
) -> Result<Option<NormalizedPoint>> {
    if subset.is_empty() {
        return Err(Error::PreconditionViolated(
            "subset must be nonempty".into(),
        ));
    }
    let mut radical = Vector::zeros(datum.rank());
    let mut any_affine = false;
    for comp in datum.components(subset) {
        let class = classify_parabolic(datum, comp);
        match class.kind {
            ParabolicKind::Finite => {}
            ParabolicKind::AffineIrreducible => {
                any_affine = true;
                radical += class.radical.expect("affine class carries its radical");
            }
            ParabolicKind::OtherInfinite => return Ok(None),
        }
    }
    if any_affine {
        return Ok(Some(normalize(&radical)?));
    }
    let Some(point) = some_chamber_point(datum) else {
        return Ok(None);
    };
    let c = average_over_parabolic(datum, subset, &point)?;
    Ok(Some(normalize(&c)?))
}

/// Independent check of [`hyperplane_meets_chamber`] by linear programming.
pub fn hyperplane_meets_chamber_lp(datum: &CoxeterDatum, subset: GenSet) -> bool {
    max_margin_point(datum, subset, false).is_some()
}

/// Whether no nonzero nonnegative combination of `points` vanishes.
pub fn positively_independent(points: &[Vector]) -> bool {
    if points.is_empty() {
        return true;
    }
    if points.iter().all(in_plc) {
        // The coordinate sum is a functional positive on every point.
        return true;
    }
    let n = points[0].len();
    let k = points.len();
    let mut a = DMatrix::zeros(n + 1, k);
    for (j, p) in points.iter().enumerate() {
        for i in 0..n {
            a[(i, j)] = p[i];
        }
        a[(n, j)] = 1.0;
    }
    let mut b = vec![0.0; n + 1];
    b[n] = 1.0;
    lp::feasible_point(&a, &b).is_none()
}

/// One sampled point of the imaginary cone.
#[derive(Clone, Debug)]
pub struct ConeSample {
    pub base: Vector,
    pub element: GroupElement,
    pub image: Vector,
    pub normalized_image: NormalizedPoint,
}

/// Normalized points of `K` used to draw samples: the basepoint, the
/// averages over each nonempty spherical subset, and affine radicals.
pub fn chamber_generators(datum: &CoxeterDatum, basepoint: &ConePoint) -> Result<Vec<Vector>> {
    let mut out = vec![basepoint.coords.clone()];
    let poset = enumerate_spherical_poset(datum)?;
    for &t in poset.elements.iter().skip(1) {
        let c = average_over_parabolic(datum, t, &basepoint.coords)?;
        out.push(normalize(&c)?.into_inner());
    }
    for subset in datum.all().subsets().skip(1) {
        let class = classify_parabolic(datum, subset);
        if let Some(r) = class.radical {
            out.push(normalize(&r)?.into_inner());
        }
    }
    Ok(out)
}

/// Seeded random convex combinations of points of `K`, pushed through every
/// element of the ball.
pub fn sample_imaginary_cone(
    datum: &CoxeterDatum,
    ball_radius: usize,
    samples_per_chamber: usize,
    seed: u64,
) -> Result<Vec<ConeSample>> {
    let basepoint = find_interior_basepoint(datum)?;
    sample_imaginary_cone_from(datum, &basepoint, ball_radius, samples_per_chamber, seed)
}

/// [`sample_imaginary_cone`] with a given interior basepoint.
pub fn sample_imaginary_cone_from(
    datum: &CoxeterDatum,
    basepoint: &ConePoint,
    ball_radius: usize,
    samples_per_chamber: usize,
    seed: u64,
) -> Result<Vec<ConeSample>> {
    let gens = chamber_generators(datum, basepoint)?;
    let ball = enumerate_ball(datum, ball_radius)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(ball.len() * samples_per_chamber);
    for w in ball.elements() {
        for _ in 0..samples_per_chamber {
            let weights: Vec<f64> = gens
                .iter()
                .map(|_| -(1.0 - rng.random::<f64>()).ln())
                .collect();
            let total: f64 = weights.iter().sum();
            let mut base = Vector::zeros(datum.rank());
            for (g, wt) in gens.iter().zip(&weights) {
                base += g * (wt / total);
            }
            let image = w.act(&base)?;
            let normalized_image = normalize(&image)?;
            out.push(ConeSample {
                base,
                element: w.clone(),
                image,
                normalized_image,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn v(xs: &[f64]) -> Vector {
        Vector::from_vec(xs.to_vec())
    }

    #[test]
    fn membership_examples() {
        let d = fixtures::universal3();
        let m = in_fundamental_chamber(&d, &v(&[1.0, 1.0, 1.0]));
        assert!(m.member && m.interior);
        let m = in_fundamental_chamber(&d, &d.simple_root(0));
        assert!(!m.member && !m.interior);
        let m = in_fundamental_chamber(&d, &Vector::zeros(3));
        assert!(!m.member);
        let m = in_fundamental_chamber(&d, &v(&[2.0, 1.0, 1.0]));
        assert!(m.member && !m.interior);
    }

    #[test]
    fn basepoint_universal() {
        let d = fixtures::universal3();
        let p = find_interior_basepoint(&d).unwrap();
        assert!((p.coords.clone() - v(&[1.0 / 3.0; 3])).amax() < 1e-12);
        assert!((interior_margin(&d, &p.coords) - 1.0 / 3.0).abs() < 1e-12);
        assert!(p.in_interior);
    }

    #[test]
    fn basepoint_not_applicable() {
        for d in [fixtures::a2(), fixtures::affine_a1(), fixtures::affine_a2()] {
            assert!(matches!(
                find_interior_basepoint(&d),
                Err(Error::NotApplicable(_))
            ));
        }
        let reducible =
            CoxeterDatum::from_bonds(&["s", "t", "u"], &[(0, 1, crate::Bond::Infinite)]).unwrap();
        assert!(matches!(
            find_interior_basepoint(&reducible),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn basepoint_triangle_solves_linear_system() {
        let d = fixtures::triangle_334();
        let p = find_interior_basepoint(&d).unwrap();
        // The point is a positive multiple of the solution of B x = -1.
        let bx = d.walls(&p.coords);
        assert!((bx[0] - bx[1]).abs() < 1e-12 && (bx[1] - bx[2]).abs() < 1e-12);
        assert!(bx[0] < 0.0);
        assert!(p.coords.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn lp_basepoint_is_interior() {
        for d in [
            fixtures::universal3(),
            fixtures::triangle_334(),
            fixtures::mixed3(),
        ] {
            let p = basepoint_by_lp(&d).unwrap();
            assert!(p.in_interior);
            assert!((p.coords.sum() - 1.0).abs() < 1e-12);
        }
        // Universal rank 3: the max-margin point is the barycenter.
        let p = basepoint_by_lp(&fixtures::universal3()).unwrap();
        assert!((p.coords - v(&[1.0 / 3.0; 3])).amax() < 1e-9);
    }

    #[test]
    fn validate_user_basepoint() {
        let d = fixtures::universal3();
        let p = validate_basepoint(&d, &v(&[2.0, 2.0, 2.0])).unwrap();
        assert!((p.coords - v(&[1.0 / 3.0; 3])).amax() < 1e-15);
        assert!(matches!(
            validate_basepoint(&d, &v(&[2.0, 1.0, 1.0])),
            Err(Error::NotInterior)
        ));
    }

    #[test]
    fn displacement_examples() {
        let d = fixtures::universal3();
        assert!(check_displacement(&d, &v(&[1.0, 1.0, 1.0]), 6).unwrap());
        assert!(check_displacement(&d, &Vector::zeros(3), 6).unwrap());
        assert!(matches!(
            check_displacement(&d, &d.simple_root(0), 2),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn averaging_examples() {
        let d = fixtures::universal3();
        let ones = v(&[1.0, 1.0, 1.0]);
        let c = average_over_parabolic(&d, GenSet::EMPTY, &ones).unwrap();
        assert_eq!(c, ones);
        let c = average_over_parabolic(&d, GenSet::singleton(0), &ones).unwrap();
        assert!((c.clone() - v(&[2.0, 1.0, 1.0])).amax() < 1e-12);
        let walls = d.walls(&c);
        assert!(walls[0].abs() < 1e-12);
        assert!((walls[1] + 2.0).abs() < 1e-12 && (walls[2] + 2.0).abs() < 1e-12);
        assert!(check_average(&d, GenSet::singleton(0), &c).passes(1e-8));
        assert!(matches!(
            average_over_parabolic(&d, GenSet(3), &ones),
            Err(Error::NotSpherical(_))
        ));
    }

    #[test]
    fn averaging_mixed_fixture() {
        let d = fixtures::mixed3();
        let v0 = find_interior_basepoint(&d).unwrap().coords;
        let c = average_over_parabolic(&d, GenSet::singleton(0), &v0).unwrap();
        let rs = GroupElement::generator(&d, 0);
        let by_hand = (&v0 + rs.act(&v0).unwrap()) / 2.0;
        assert!((c.clone() - by_hand).amax() < 1e-14);
        assert!(d.pair_with_simple(&c, 0).abs() < 1e-12);
        let c = average_over_parabolic(&d, GenSet(3), &v0).unwrap();
        assert!(check_average(&d, GenSet(3), &c).passes(1e-8));
    }

    #[test]
    fn stabilizer_examples() {
        let d = fixtures::universal3();
        assert_eq!(
            stabilizer_generators(&d, &v(&[2.0, 1.0, 1.0])).unwrap(),
            GenSet::singleton(0)
        );
        assert_eq!(
            stabilizer_generators(&d, &v(&[1.0, 1.0, 1.0])).unwrap(),
            GenSet::EMPTY
        );
        assert_eq!(
            stabilizer_generators(&d, &Vector::zeros(3)).unwrap(),
            GenSet::full(3)
        );
        assert!(stabilizer_generators(&d, &d.simple_root(1)).is_err());
    }

    #[test]
    fn stabilizer_verification() {
        let d = fixtures::universal3();
        let r = stabilizer_report(&d, &v(&[2.0, 1.0, 1.0]), 5).unwrap();
        assert!(r.agrees());
        assert_eq!(r.fixers, vec![vec![], vec![0]]);
        let r = stabilizer_report(&d, &v(&[1.0, 1.0, 1.0]), 5).unwrap();
        assert_eq!(r.fixers, vec![Vec::<usize>::new()]);
        let a1 = fixtures::affine_a1();
        let r = stabilizer_report(&a1, &v(&[1.0, 1.0]), 5).unwrap();
        assert!(r.agrees());
        assert_eq!(r.generators, GenSet::full(2));
        assert_eq!(r.fixers.len(), 11);
    }

    #[test]
    fn isotropic_boundary_examples() {
        let d = fixtures::affine_pair3();
        let m = isotropic_boundary_structure(&d, &v(&[1.0, 1.0, 0.0])).unwrap();
        assert_eq!(m, GenSet(3));
        let p = find_interior_basepoint(&d).unwrap();
        assert!(isotropic_boundary_structure(&d, &p.coords).is_err());
        assert!(isotropic_boundary_structure(&d, &Vector::zeros(3)).is_err());
    }

    #[test]
    fn hyperplane_examples() {
        let d = fixtures::mixed3();
        let w = hyperplane_meets_chamber(&d, GenSet(3)).unwrap().unwrap();
        let x = w.coords();
        assert!(d.pair_with_simple(x, 0).abs() < 1e-9 && d.pair_with_simple(x, 1).abs() < 1e-9);
        assert!(in_fundamental_chamber(&d, x).member);

        let d = fixtures::affine_pair3();
        let w = hyperplane_meets_chamber(&d, GenSet(3)).unwrap().unwrap();
        assert!((w.coords() - v(&[0.5, 0.5, 0.0])).amax() < 1e-9);

        let d = fixtures::universal3();
        assert!(hyperplane_meets_chamber(&d, GenSet(7)).unwrap().is_none());
        // {s, t} with (a_s, a_t) = -1 is affine, so it meets the chamber.
        assert!(hyperplane_meets_chamber(&d, GenSet(3)).unwrap().is_some());
        assert!(hyperplane_meets_chamber(&d, GenSet::EMPTY).is_err());
    }

    #[test]
    fn lp_oracle_agrees_on_affine_times_finite() {
        let d = CoxeterDatum::from_bonds(
            &["s", "t", "u", "x"],
            &[
                (0, 1, crate::Bond::Infinite),
                (0, 3, crate::Bond::Infinite),
                (1, 3, crate::Bond::Infinite),
                (2, 3, crate::Bond::Infinite),
            ],
        )
        .unwrap();
        // {s, t, u}: affine pair times a commuting A1.
        let subset = GenSet(7);
        assert!(hyperplane_meets_chamber(&d, subset).unwrap().is_some());
        assert!(hyperplane_meets_chamber_lp(&d, subset));
    }

    #[test]
    fn positive_independence_examples() {
        assert!(!positively_independent(&[v(&[1.0, 0.0]), v(&[-1.0, 0.0])]));
        assert!(positively_independent(&[
            v(&[1.0, 0.0]),
            v(&[0.0, 1.0]),
            v(&[1.0, 1.0])
        ]));
        assert!(positively_independent(&[v(&[1.0, -1.0]), v(&[1.0, 0.0])]));
        assert!(!positively_independent(&[
            v(&[1.0, -1.0]),
            v(&[-1.0, 0.5]),
            v(&[0.0, 0.5])
        ]));
        let d = fixtures::mixed3();
        let u0 = find_interior_basepoint(&d).unwrap().coords;
        let orbit: Vec<Vector> = enumerate_finite_parabolic_elements(&d, GenSet(3))
            .unwrap()
            .iter()
            .map(|w| w.act(&u0).unwrap())
            .collect();
        assert_eq!(orbit.len(), 6);
        assert!(positively_independent(&orbit));
    }

    #[test]
    fn samples_are_deterministic_and_isotropic() {
        let d = fixtures::universal3();
        let a = sample_imaginary_cone(&d, 3, 2, 7).unwrap();
        let b = sample_imaginary_cone(&d, 3, 2, 7).unwrap();
        assert_eq!(a.len(), 22 * 2);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.base, y.base);
        }
        for s in &a {
            if s.element.is_identity() {
                assert_eq!(s.base, s.image);
            }
            assert!((&s.image - &s.base).iter().all(|&c| c >= -EPS));
            let x = s.normalized_image.coords();
            assert!(d.form(x, x) <= 1e-9);
        }
        assert!(matches!(
            sample_imaginary_cone(&fixtures::a2(), 2, 1, 0),
            Err(Error::NotApplicable(_))
        ));
    }
}
