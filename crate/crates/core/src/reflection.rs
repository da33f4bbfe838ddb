//! The reflection representation: reflections, group elements with cached
//! action matrices, reduced words, roots, and word balls.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::datum::{Bond, CoxeterDatum, Vector, EPS};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::grid::GridIndex;

/// Default cap on the number of roots produced by a BFS.
pub const ROOT_CAP: usize = 100_000;
/// Default cap on the number of group elements in a ball.
pub const ELEMENT_CAP: usize = 200_000;
/// Grid spacing, on root directions scaled to max-norm 1, used to bucket roots.
pub const ROOT_GRID: f64 = 1e-7;
/// Two roots are equal when they differ by at most this times their size.
pub const ROOT_MATCH: f64 = 1e-9;

/// `rho_x v = v - 2 (x, v) / (x, x) x`.
pub fn reflect(datum: &CoxeterDatum, x: &Vector, v: &Vector) -> Result<Vector> {
    datum.check_dim(x)?;
    datum.check_dim(v)?;
    let norm = datum.form(x, x);
    if norm.abs() <= EPS {
        return Err(Error::IsotropicMirror { norm });
    }
    Ok(v - x * (2.0 * datum.form(x, v) / norm))
}

/// Matrix of the reflection in `x`.
pub fn reflection_matrix(datum: &CoxeterDatum, x: &Vector) -> Result<DMatrix<f64>> {
    datum.check_dim(x)?;
    let norm = datum.form(x, x);
    if norm.abs() <= EPS {
        return Err(Error::IsotropicMirror { norm });
    }
    let bx = datum.gram() * x;
    Ok(DMatrix::identity(x.len(), x.len()) - x * bx.transpose() * (2.0 / norm))
}

/// Applies the simple reflection `r_s` in place. Only coordinate `s` changes.
pub fn apply_simple(datum: &CoxeterDatum, s: usize, v: &mut Vector) {
    let pairing = datum.pair_with_simple(v, s);
    v[s] -= 2.0 * pairing;
}

/// Right-multiplies `m` by the simple reflection `r_s` in place.
fn right_mul_simple(datum: &CoxeterDatum, s: usize, m: &mut DMatrix<f64>) {
    // (M rho_s) = M - 2 (M e_s) (B e_s)^T
    let col = m.column(s).clone_owned();
    let row = datum.gram().row(s).clone_owned();
    *m -= col * row * 2.0;
}

/// Matrix of `r_{w_1} r_{w_2} ... r_{w_k}`.
pub fn word_matrix(datum: &CoxeterDatum, word: &[usize]) -> DMatrix<f64> {
    let mut m = DMatrix::identity(datum.rank(), datum.rank());
    for &s in word {
        right_mul_simple(datum, s, &mut m);
    }
    m
}

/// Sign of a root according to its coordinate sum. Roots are either positive
/// or negative, and the coordinate sum separates the two.
fn is_negative_root(column: impl Iterator<Item = f64>) -> bool {
    column.sum::<f64>() < 0.0
}

/// Result of [`length_and_descents`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthInfo {
    pub length: usize,
    /// Generators `s` with `l(w r_s) < l(w)`, detected by `w(a_s)` negative.
    pub descents: GenSet,
    /// Lexicographically least reduced word.
    pub reduced_word: Vec<usize>,
}

/// Length, descent set and canonical reduced word of the element spelled by
/// an arbitrary word.
pub fn length_and_descents(datum: &CoxeterDatum, word: &[usize]) -> LengthInfo {
    let matrix = word_matrix(datum, word);
    let descents = GenSet::from_indices(
        (0..datum.rank()).filter(|&s| is_negative_root(matrix.column(s).iter().copied())),
    );
    let inverse = {
        let rev: Vec<usize> = word.iter().rev().copied().collect();
        word_matrix(datum, &rev)
    };
    let reduced_word = lexmin_word(datum, inverse);
    LengthInfo {
        length: reduced_word.len(),
        descents,
        reduced_word,
    }
}

/// Strips the smallest left descent until the identity is reached. `inverse`
/// is the matrix of `w^{-1}`; `s` is a left descent of `w` iff
/// `w^{-1}(a_s)` is negative.
fn lexmin_word(datum: &CoxeterDatum, mut inverse: DMatrix<f64>) -> Vec<usize> {
    let mut word = Vec::new();
    while let Some(s) =
        (0..datum.rank()).find(|&s| is_negative_root(inverse.column(s).iter().copied()))
    {
        word.push(s);
        // (s w)^{-1} = w^{-1} s
        right_mul_simple(datum, s, &mut inverse);
    }
    word
}

/// Element of `W`, stored with its canonical (lexicographically least)
/// reduced word and the action matrix.
#[derive(Clone, Debug)]
pub struct GroupElement {
    word: Vec<usize>,
    matrix: DMatrix<f64>,
}

impl GroupElement {
    pub fn identity(datum: &CoxeterDatum) -> Self {
        Self {
            word: Vec::new(),
            matrix: DMatrix::identity(datum.rank(), datum.rank()),
        }
    }

    pub fn generator(datum: &CoxeterDatum, s: usize) -> Self {
        Self::from_word(datum, &[s])
    }

    /// The element spelled by any word; the stored word is canonicalized.
    pub fn from_word(datum: &CoxeterDatum, word: &[usize]) -> Self {
        let info = length_and_descents(datum, word);
        let matrix = word_matrix(datum, &info.reduced_word);
        Self {
            word: info.reduced_word,
            matrix,
        }
    }

    pub fn from_labels(datum: &CoxeterDatum, labels: &[&str]) -> Result<Self> {
        let word = labels
            .iter()
            .map(|l| datum.generator_index(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_word(datum, &word))
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn labels(&self, datum: &CoxeterDatum) -> Vec<String> {
        self.word
            .iter()
            .map(|&s| datum.label(s).to_string())
            .collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn inverse(&self, datum: &CoxeterDatum) -> Self {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(datum, &rev)
    }

    /// `self * other`.
    pub fn compose(&self, datum: &CoxeterDatum, other: &GroupElement) -> Self {
        let word: Vec<usize> = self.word.iter().chain(&other.word).copied().collect();
        Self::from_word(datum, &word)
    }

    /// `self * r_s`.
    pub fn times_generator(&self, datum: &CoxeterDatum, s: usize) -> Self {
        let mut word = self.word.clone();
        word.push(s);
        Self::from_word(datum, &word)
    }

    /// Right descents of `self`: `l(w r_s) < l(w)`.
    pub fn descents(&self) -> GenSet {
        GenSet::from_indices(
            (0..self.matrix.ncols())
                .filter(|&s| is_negative_root(self.matrix.column(s).iter().copied())),
        )
    }

    /// Whether the canonical word only uses letters in `subset`, i.e.
    /// membership in the standard parabolic subgroup.
    pub fn in_parabolic(&self, subset: GenSet) -> bool {
        self.word.iter().all(|&s| subset.contains(s))
    }

    /// Minimal-length representative of the coset `self * W_subset`.
    pub fn min_coset_rep(&self, datum: &CoxeterDatum, subset: GenSet) -> Self {
        let mut word = self.word.clone();
        let mut m = self.matrix.clone();
        while let Some(s) = subset
            .iter()
            .find(|&s| is_negative_root(m.column(s).iter().copied()))
        {
            right_mul_simple(datum, s, &mut m);
            word.push(s);
        }
        Self::from_word(datum, &word)
    }

    /// Action on a vector.
    pub fn act(&self, v: &Vector) -> Result<Vector> {
        if v.len() != self.matrix.ncols() {
            return Err(Error::DimensionMismatch {
                expected: self.matrix.ncols(),
                found: v.len(),
            });
        }
        Ok(&self.matrix * v)
    }

    /// Matrix equality with a tolerance relative to the entry scale.
    pub fn same_action(&self, other: &GroupElement) -> bool {
        matrices_close(&self.matrix, &other.matrix)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for GroupElement {}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex order on canonical words.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

fn matrices_close(a: &DMatrix<f64>, b: &DMatrix<f64>) -> bool {
    let scale = a.amax().max(b.amax()).max(1.0);
    (a - b).amax() <= 1e-9 * scale
}

/// Action of `w` on `v`.
pub fn act(w: &GroupElement, v: &Vector) -> Result<Vector> {
    w.act(v)
}

/// Coefficients `(c_r, c_s)` of `(rho_r rho_s)^i a_r` from the dihedral
/// closed forms. `c` is the form value `(a_r, a_s)` used for infinite bonds.
pub fn dihedral_orbit_closed_form(bond: Bond, c: f64, i: i64) -> Result<(f64, f64)> {
    let fi = i as f64;
    match bond {
        Bond::Finite(m) if m >= 2 => {
            let theta = std::f64::consts::PI / m as f64;
            let s = theta.sin();
            Ok((
                ((2.0 * fi + 1.0) * theta).sin() / s,
                (2.0 * fi * theta).sin() / s,
            ))
        }
        Bond::Finite(m) => Err(Error::InvalidBond {
            s: "r".into(),
            t: "s".into(),
            detail: format!("m = {m}"),
        }),
        Bond::Infinite if c > -1.0 || c.is_nan() => Err(Error::InvalidBond {
            s: "r".into(),
            t: "s".into(),
            detail: format!("infinite bond with form value {c} > -1"),
        }),
        Bond::Infinite if c == -1.0 => Ok((2.0 * fi + 1.0, 2.0 * fi)),
        Bond::Infinite => {
            let theta = (-c).acosh();
            let s = theta.sinh();
            Ok((
                ((2.0 * fi + 1.0) * theta).sinh() / s,
                (2.0 * fi * theta).sinh() / s,
            ))
        }
    }
}

/// Sign class of a vector of root coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    Mixed,
    Zero,
}

/// Classifies coordinates: positive when all are `>= -tol` with one `> tol`.
pub fn sign_of(v: &Vector, tol: f64) -> Sign {
    let nonneg = v.iter().all(|&x| x >= -tol);
    let nonpos = v.iter().all(|&x| x <= tol);
    let some_pos = v.iter().any(|&x| x > tol);
    let some_neg = v.iter().any(|&x| x < -tol);
    match (nonneg && some_pos, nonpos && some_neg) {
        (true, _) => Sign::Positive,
        (_, true) => Sign::Negative,
        _ if !some_pos && !some_neg => Sign::Zero,
        _ => Sign::Mixed,
    }
}

/// A root together with the BFS level at which it was first reached.
#[derive(Clone, Debug, PartialEq)]
pub struct RootRecord {
    pub coords: Vector,
    pub depth: usize,
    pub sign: Sign,
}

/// BFS over the full root system: level 0 is the simple roots, level `k + 1`
/// applies every simple reflection to level `k`. Returns every root (positive
/// and negative) reached within `max_depth` levels, sorted by level and then
/// coordinates.
pub fn root_orbit(datum: &CoxeterDatum, max_depth: usize, cap: usize) -> Result<Vec<RootRecord>> {
    root_orbit_in(datum, datum.all(), max_depth, cap)
}

/// [`root_orbit`] for the root subsystem of the standard parabolic subgroup
/// generated by `subset`.
pub fn root_orbit_in(
    datum: &CoxeterDatum,
    subset: GenSet,
    max_depth: usize,
    cap: usize,
) -> Result<Vec<RootRecord>> {
    let mut roots: Vec<RootRecord> = Vec::new();
    let mut index = GridIndex::new(ROOT_GRID);
    let mut frontier = Vec::new();
    // Bucket by direction so that large roots still land in stable cells;
    // equality is then decided relative to the magnitude.
    let mut add = |v: Vector, depth: usize, roots: &mut Vec<RootRecord>| -> Result<bool> {
        let size = v.amax();
        let direction = &v / size;
        let found = index.find(direction.as_slice(), |id| {
            (&roots[id].coords - &v).amax() <= ROOT_MATCH * size.max(1.0)
        });
        if found.is_some() {
            return Ok(false);
        }
        if roots.len() >= cap {
            return Err(Error::BudgetExceeded {
                what: "root BFS",
                cap,
            });
        }
        index.insert(direction.as_slice(), roots.len());
        let sign = sign_of(&v, EPS);
        roots.push(RootRecord {
            coords: v,
            depth,
            sign,
        });
        Ok(true)
    };
    for s in subset.iter() {
        let v = datum.simple_root(s);
        if add(v, 0, &mut roots)? {
            frontier.push(roots.len() - 1);
        }
    }
    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for &id in &frontier {
            for s in subset.iter() {
                let mut v = roots[id].coords.clone();
                apply_simple(datum, s, &mut v);
                if add(v, depth, &mut roots)? {
                    next.push(roots.len() - 1);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    roots.sort_by(|a, b| {
        a.depth
            .cmp(&b.depth)
            .then_with(|| lex_cmp(&a.coords, &b.coords))
    });
    Ok(roots)
}

fn lex_cmp(a: &Vector, b: &Vector) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.partial_cmp(y) {
            Some(Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    Ordering::Equal
}

/// Positive roots reached within `max_depth` BFS levels.
pub fn generate_roots(datum: &CoxeterDatum, max_depth: usize) -> Result<Vec<RootRecord>> {
    generate_roots_capped(datum, max_depth, ROOT_CAP)
}

pub fn generate_roots_capped(
    datum: &CoxeterDatum,
    max_depth: usize,
    cap: usize,
) -> Result<Vec<RootRecord>> {
    let all = root_orbit(datum, max_depth, cap.saturating_mul(2))?;
    let positive: Vec<RootRecord> = all
        .into_iter()
        .filter(|r| r.sign == Sign::Positive)
        .collect();
    if positive.len() > cap {
        return Err(Error::BudgetExceeded {
            what: "root BFS",
            cap,
        });
    }
    Ok(positive)
}

/// Elements of `W` up to a length bound, in shortlex order of canonical words.
#[derive(Clone, Debug)]
pub struct Ball {
    elements: Vec<GroupElement>,
    index: GridIndex,
    probe: Vector,
}

impl Ball {
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn radius(&self) -> usize {
        self.elements.last().map_or(0, GroupElement::length)
    }

    /// Position of the element with the given action matrix, if present.
    pub fn position_of_matrix(&self, m: &DMatrix<f64>) -> Option<usize> {
        let key = fingerprint(m, &self.probe);
        self.index.find(key.as_slice(), |id| {
            matrices_close(self.elements[id].matrix(), m)
        })
    }

    pub fn position(&self, w: &GroupElement) -> Option<usize> {
        self.elements
            .binary_search(w)
            .ok()
            .or_else(|| self.position_of_matrix(w.matrix()))
    }
}

fn fingerprint(m: &DMatrix<f64>, probe: &Vector) -> Vector {
    let v = m * probe;
    let scale = v.amax().max(1.0);
    v / scale
}

/// Enumerates all elements with `l(w) <= radius`, distinguishing elements by
/// their action matrices.
pub fn enumerate_ball(datum: &CoxeterDatum, radius: usize) -> Result<Ball> {
    enumerate_ball_capped(datum, radius, ELEMENT_CAP)
}

pub fn enumerate_ball_capped(datum: &CoxeterDatum, radius: usize, cap: usize) -> Result<Ball> {
    generate_closure(datum, datum.all(), Some(radius), cap)
}

/// BFS over words in the generators of `subset`, by right multiplication.
/// Processing each level in shortlex order makes the first word found for an
/// element its lexicographically least reduced word.
pub(crate) fn generate_closure(
    datum: &CoxeterDatum,
    subset: GenSet,
    radius: Option<usize>,
    cap: usize,
) -> Result<Ball> {
    let n = datum.rank();
    // Generic probe vector; its orbit separates elements.
    let probe = Vector::from_fn(n, |i, _| 1.0 + 0.271_828 * (i as f64 + 1.0).sqrt());
    let mut ball = Ball {
        elements: vec![GroupElement::identity(datum)],
        index: GridIndex::new(1e-6),
        probe,
    };
    let key = fingerprint(ball.elements[0].matrix(), &ball.probe);
    ball.index.insert(key.as_slice(), 0);
    let mut frontier = 0..1;
    let mut level = 0;
    while radius.is_none_or(|r| level < r) {
        let start = ball.elements.len();
        for id in frontier.clone() {
            for s in subset.iter() {
                let mut m = ball.elements[id].matrix.clone();
                right_mul_simple(datum, s, &mut m);
                if ball.position_of_matrix(&m).is_some() {
                    continue;
                }
                if ball.elements.len() >= cap {
                    return Err(Error::BudgetExceeded {
                        what: "group element BFS",
                        cap,
                    });
                }
                let mut word = ball.elements[id].word.clone();
                word.push(s);
                let key = fingerprint(&m, &ball.probe);
                ball.index.insert(key.as_slice(), ball.elements.len());
                ball.elements.push(GroupElement { word, matrix: m });
            }
        }
        if ball.elements.len() == start {
            break;
        }
        frontier = start..ball.elements.len();
        level += 1;
    }
    Ok(ball)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn close(a: &Vector, b: &[f64]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn reflect_examples() {
        let d = fixtures::a2();
        let (a, b) = (d.simple_root(0), d.simple_root(1));
        assert!(close(&reflect(&d, &a, &a).unwrap(), &[-1.0, 0.0]));
        assert!(close(&reflect(&d, &a, &b).unwrap(), &[1.0, 1.0]));
        let commuting = CoxeterDatum::from_bonds(&["s", "t"], &[]).unwrap();
        let v = commuting.simple_root(1);
        assert!(close(
            &reflect(&commuting, &commuting.simple_root(0), &v).unwrap(),
            &[0.0, 1.0]
        ));
    }

    #[test]
    fn isotropic_mirror_rejected() {
        let d = fixtures::affine_a1();
        let x = Vector::from_vec(vec![1.0, 1.0]);
        assert!(matches!(
            reflect(&d, &x, &d.simple_root(0)),
            Err(Error::IsotropicMirror { .. })
        ));
    }

    #[test]
    fn reflection_matrix_is_involution() {
        let d = fixtures::triangle_334();
        let x = Vector::from_vec(vec![1.0, 0.3, 0.7]);
        let m = reflection_matrix(&d, &x).unwrap();
        let id = DMatrix::<f64>::identity(3, 3);
        assert!((&m * &m - id).amax() < 1e-9);
        assert!((&m * &x + &x).amax() < 1e-9);
    }

    #[test]
    fn act_examples() {
        let d = fixtures::a2();
        let w = GroupElement::from_word(&d, &[0, 1]);
        assert!(close(&w.act(&d.simple_root(0)).unwrap(), &[0.0, 1.0]));
        let e = GroupElement::identity(&d);
        let v = Vector::from_vec(vec![0.3, -2.0]);
        assert_eq!(e.act(&v).unwrap(), v);
        let d = fixtures::affine_a1();
        let w = GroupElement::from_word(&d, &[0, 1]);
        assert!(close(&w.act(&d.simple_root(0)).unwrap(), &[3.0, 2.0]));
        assert!(w.act(&Vector::zeros(3)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let (a, b) = dihedral_orbit_closed_form(Bond::Finite(3), 0.0, 1).unwrap();
        assert!(a.abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
        assert_eq!(
            dihedral_orbit_closed_form(Bond::Infinite, -1.0, 2).unwrap(),
            (5.0, 4.0)
        );
        assert_eq!(
            dihedral_orbit_closed_form(Bond::Infinite, -1.0, 0).unwrap(),
            (1.0, 0.0)
        );
        assert!(dihedral_orbit_closed_form(Bond::Finite(1), 0.0, 0).is_err());
        assert!(dihedral_orbit_closed_form(Bond::Infinite, -0.5, 0).is_err());
    }

    #[test]
    fn length_examples() {
        let d = fixtures::a2();
        let info = length_and_descents(&d, &[0, 0]);
        assert_eq!(info.length, 0);
        assert!(info.reduced_word.is_empty());
        let info = length_and_descents(&d, &[0, 1, 0]);
        assert_eq!(info.length, 3);
        assert_eq!(info.descents, GenSet::full(2));
        // r_s r_t r_s = r_t r_s r_t; the lexmin reduced word starts with s.
        assert_eq!(
            length_and_descents(&d, &[1, 0, 1]).reduced_word,
            vec![0, 1, 0]
        );
        let info = length_and_descents(&d, &[0]);
        assert_eq!(info.descents, GenSet::singleton(0));
    }

    #[test]
    fn ball_sizes() {
        assert_eq!(enumerate_ball(&fixtures::a2(), 0).unwrap().len(), 1);
        assert_eq!(enumerate_ball(&fixtures::a2(), 3).unwrap().len(), 6);
        assert_eq!(enumerate_ball(&fixtures::a2(), 10).unwrap().len(), 6);
        assert_eq!(enumerate_ball(&fixtures::affine_a1(), 4).unwrap().len(), 9);
        let universal = enumerate_ball(&fixtures::universal3(), 3).unwrap();
        assert_eq!(universal.len(), 1 + 3 + 6 + 12);
    }

    #[test]
    fn ball_words_are_lexmin_and_sorted() {
        let d = fixtures::triangle_334();
        let ball = enumerate_ball(&d, 4).unwrap();
        let els = ball.elements();
        for w in els {
            let info = length_and_descents(&d, w.word());
            assert_eq!(info.reduced_word, w.word());
        }
        assert!(els.windows(2).all(|p| p[0] < p[1]));
        let w = GroupElement::from_word(&d, &[2, 1, 2, 0]);
        assert_eq!(
            ball.position(&w).map(|i| els[i].word().to_vec()),
            Some(w.word().to_vec())
        );
    }

    #[test]
    fn ball_budget() {
        assert!(matches!(
            enumerate_ball_capped(&fixtures::universal3(), 6, 50),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn roots_of_dihedral_examples() {
        let r = generate_roots(&fixtures::a2(), 2).unwrap();
        assert_eq!(r.len(), 3);
        let all = root_orbit(&fixtures::a2(), 10, ROOT_CAP).unwrap();
        assert_eq!(all.len(), 6);
        let r = generate_roots(&fixtures::affine_a1(), 1).unwrap();
        let coords: Vec<Vec<f64>> = r
            .iter()
            .map(|x| x.coords.iter().copied().collect())
            .collect();
        assert_eq!(
            coords,
            vec![
                vec![0.0, 1.0],
                vec![1.0, 0.0],
                vec![1.0, 2.0],
                vec![2.0, 1.0]
            ]
        );
        let r = generate_roots(&fixtures::universal3(), 0).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|x| x.depth == 0));
    }

    #[test]
    fn parabolic_membership_and_coset_reps() {
        let d = fixtures::a2();
        let w = GroupElement::from_word(&d, &[0, 1]);
        let rep = w.min_coset_rep(&d, GenSet::singleton(1));
        assert_eq!(rep.word(), &[0]);
        assert!(GroupElement::from_word(&d, &[1]).in_parabolic(GenSet::singleton(1)));
        assert!(!w.in_parabolic(GenSet::singleton(1)));
    }

    #[test]
    fn inverse_and_compose() {
        let d = fixtures::mixed3();
        let w = GroupElement::from_word(&d, &[0, 2, 1, 2]);
        let e = w.compose(&d, &w.inverse(&d));
        assert!(e.is_identity());
    }
}
