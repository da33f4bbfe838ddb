//! Classification of standard parabolic subgroups by the signature of the
//! restricted form, and the poset of spherical subsets.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::datum::{CoxeterDatum, Vector};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::reflection::{self, GroupElement, ELEMENT_CAP};

/// Threshold on leading principal minors.
pub const MINOR_TOL: f64 = 1e-10;
/// Eigenvalues within this distance of zero count as zero.
pub const KERNEL_TOL: f64 = 1e-9;
/// Largest rank for which the spherical poset is enumerated.
pub const POSET_MAX_RANK: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParabolicKind {
    Finite,
    AffineIrreducible,
    OtherInfinite,
}

impl ParabolicKind {
    pub fn is_finite(self) -> bool {
        self == ParabolicKind::Finite
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicClass {
    pub subset: GenSet,
    pub kind: ParabolicKind,
    /// Positive spanning vector of the radical of the restricted form, as a
    /// full-length vector; present exactly for affine-irreducible subsets.
    pub radical: Option<Vector>,
}

/// Sylvester's criterion with an eigenvalue fallback when some minor is too
/// close to zero to decide.
pub fn is_positive_definite(m: &DMatrix<f64>) -> bool {
    let n = m.nrows();
    let mut ambiguous = false;
    for k in 1..=n {
        let minor = m.view((0, 0), (k, k)).determinant();
        if minor < -MINOR_TOL {
            return false;
        }
        if minor <= MINOR_TOL {
            ambiguous = true;
            break;
        }
    }
    if !ambiguous {
        return true;
    }
    smallest_eigenvalue(m) > MINOR_TOL
}

fn smallest_eigenvalue(m: &DMatrix<f64>) -> f64 {
    SymmetricEigen::new(m.clone())
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Classifies `W_subset` as finite, irreducible affine, or neither.
pub fn classify_parabolic(datum: &CoxeterDatum, subset: GenSet) -> ParabolicClass {
    let class = |kind, radical| ParabolicClass {
        subset,
        kind,
        radical,
    };
    if subset.is_empty() {
        return class(ParabolicKind::Finite, None);
    }
    let g = datum.restricted_gram(subset);
    if is_positive_definite(&g) {
        return class(ParabolicKind::Finite, None);
    }
    if !datum.is_connected(subset) {
        return class(ParabolicKind::OtherInfinite, None);
    }
    match positive_radical(&g) {
        Some(local) => {
            let mut full = Vector::zeros(datum.rank());
            for (i, s) in subset.iter().enumerate() {
                full[s] = local[i];
            }
            class(ParabolicKind::AffineIrreducible, Some(full))
        }
        None => class(ParabolicKind::OtherInfinite, None),
    }
}

/// If `g` is positive semidefinite with a one-dimensional kernel spanned by a
/// strictly positive vector, returns that vector scaled to minimum entry 1.
fn positive_radical(g: &DMatrix<f64>) -> Option<Vector> {
    let eig = SymmetricEigen::new(g.clone());
    if eig.eigenvalues.iter().any(|&l| l < -KERNEL_TOL) {
        return None;
    }
    let zeros: Vec<usize> = (0..eig.eigenvalues.len())
        .filter(|&i| eig.eigenvalues[i].abs() <= KERNEL_TOL)
        .collect();
    if zeros.len() != 1 {
        return None;
    }
    let mut v: Vector = eig.eigenvectors.column(zeros[0]).clone_owned();
    if v.sum() < 0.0 {
        v = -v;
    }
    let min = v.min();
    if min <= KERNEL_TOL {
        return None;
    }
    Some(v / min)
}

/// Spherical subsets ordered by inclusion.
#[derive(Clone, Debug, PartialEq)]
pub struct SphericalPoset {
    /// Spherical subsets sorted by size, then bitmask; index 0 is the empty set.
    pub elements: Vec<GenSet>,
    /// Cover relations `(smaller, larger)` as indices into `elements`.
    pub covers: Vec<(usize, usize)>,
}

impl SphericalPoset {
    pub fn index_of(&self, subset: GenSet) -> Option<usize> {
        self.elements.iter().position(|&t| t == subset)
    }

    pub fn contains(&self, subset: GenSet) -> bool {
        self.index_of(subset).is_some()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Maximal spherical subsets.
    pub fn maximal(&self) -> Vec<GenSet> {
        (0..self.elements.len())
            .filter(|&i| !self.covers.iter().any(|&(a, _)| a == i))
            .map(|i| self.elements[i])
            .collect()
    }
}

/// Builds the spherical poset by growing spherical sets one generator at a
/// time; a candidate is tested only when all its maximal proper subsets are
/// already spherical.
pub fn enumerate_spherical_poset(datum: &CoxeterDatum) -> Result<SphericalPoset> {
    let n = datum.rank();
    if n > POSET_MAX_RANK {
        return Err(Error::RankTooLarge {
            rank: n,
            max: POSET_MAX_RANK,
        });
    }
    let mut elements = vec![GenSet::EMPTY];
    let mut layer = vec![GenSet::EMPTY];
    while !layer.is_empty() {
        let mut next: Vec<GenSet> = Vec::new();
        for &t in &layer {
            for s in 0..n {
                if t.contains(s) {
                    continue;
                }
                let cand = t.insert(s);
                if next.contains(&cand) {
                    continue;
                }
                let faces_ok = cand.iter().all(|r| {
                    let face = cand.remove(r);
                    layer.contains(&face)
                });
                if faces_ok && is_positive_definite(&datum.restricted_gram(cand)) {
                    next.push(cand);
                }
            }
        }
        next.sort_by_key(|t| t.0);
        elements.extend(&next);
        layer = next;
    }
    let mut covers = Vec::new();
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            if b.len() == a.len() + 1 && a.is_subset(b) {
                covers.push((i, j));
            }
        }
    }
    Ok(SphericalPoset { elements, covers })
}

/// All elements of the finite parabolic subgroup `W_subset`, in shortlex order.
pub fn enumerate_finite_parabolic_elements(
    datum: &CoxeterDatum,
    subset: GenSet,
) -> Result<Vec<GroupElement>> {
    if !classify_parabolic(datum, subset).kind.is_finite() {
        return Err(Error::NotSpherical(datum.format_subset(subset)));
    }
    let ball = reflection::generate_closure(datum, subset, None, ELEMENT_CAP)?;
    Ok(ball.elements().to_vec())
}

/// Whether the BFS over the root subsystem of `W_subset` runs out of new
/// roots within `level_cap` levels and `root_cap` roots.
pub fn root_closure_terminates(
    datum: &CoxeterDatum,
    subset: GenSet,
    level_cap: usize,
    root_cap: usize,
) -> bool {
    match reflection::root_orbit_in(datum, subset, level_cap, root_cap) {
        Ok(roots) => roots.iter().map(|r| r.depth).max().unwrap_or(0) < level_cap,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::Bond;
    use crate::fixtures;

    #[test]
    fn dihedral_examples() {
        let c = classify_parabolic(&fixtures::a2(), GenSet::full(2));
        assert_eq!(c.kind, ParabolicKind::Finite);
        assert!(c.radical.is_none());
        let c = classify_parabolic(&fixtures::affine_a1(), GenSet::full(2));
        assert_eq!(c.kind, ParabolicKind::AffineIrreducible);
        let r = c.radical.unwrap();
        assert!((r[0] - 1.0).abs() < 1e-9 && (r[1] - 1.0).abs() < 1e-9);
        let c = classify_parabolic(&fixtures::hyperbolic_a1(), GenSet::full(2));
        assert_eq!(c.kind, ParabolicKind::OtherInfinite);
        assert_eq!(
            classify_parabolic(&fixtures::universal3(), GenSet::EMPTY).kind,
            ParabolicKind::Finite
        );
    }

    #[test]
    fn sylvester_minors_of_a2() {
        let g = fixtures::a2().gram().clone();
        assert!((g.view((0, 0), (1, 1)).determinant() - 1.0).abs() < 1e-12);
        assert!((g.determinant() - 0.75).abs() < 1e-12);
        assert!(is_positive_definite(&g));
    }

    #[test]
    fn classical_list() {
        use ParabolicKind::*;
        let cases = [
            (fixtures::a2(), Finite),
            (fixtures::b2(), Finite),
            (fixtures::h2(), Finite),
            (fixtures::a3(), Finite),
            (fixtures::affine_a1(), AffineIrreducible),
            (fixtures::affine_a2(), AffineIrreducible),
            (fixtures::triangle_334(), OtherInfinite),
            (fixtures::universal3(), OtherInfinite),
        ];
        for (d, kind) in cases {
            assert_eq!(
                classify_parabolic(&d, d.all()).kind,
                kind,
                "{}",
                d.to_json()
            );
        }
        let r = classify_parabolic(&fixtures::affine_a2(), GenSet::full(3))
            .radical
            .unwrap();
        assert!((r - Vector::from_element(3, 1.0)).amax() < 1e-8);
    }

    #[test]
    fn affine_times_finite_is_not_irreducible() {
        let d = CoxeterDatum::from_bonds(&["s", "t", "u"], &[(0, 1, Bond::Infinite)]).unwrap();
        let c = classify_parabolic(&d, d.all());
        assert_eq!(c.kind, ParabolicKind::OtherInfinite);
    }

    #[test]
    fn posets() {
        let p = enumerate_spherical_poset(&fixtures::a2()).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.covers.len(), 4);
        let p = enumerate_spherical_poset(&fixtures::affine_a1()).unwrap();
        assert_eq!(p.elements, vec![GenSet::EMPTY, GenSet(1), GenSet(2)]);
        let p = enumerate_spherical_poset(&fixtures::universal3()).unwrap();
        assert_eq!(p.len(), 4);
        let p = enumerate_spherical_poset(&fixtures::triangle_334()).unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!(p.maximal().len(), 3);
    }

    #[test]
    fn poset_rank_limit() {
        let labels: Vec<String> = (0..21).map(|i| format!("g{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let d = CoxeterDatum::from_bonds(&refs, &[]).unwrap();
        assert!(matches!(
            enumerate_spherical_poset(&d),
            Err(Error::RankTooLarge { .. })
        ));
    }

    #[test]
    fn finite_parabolic_orders() {
        assert_eq!(
            enumerate_finite_parabolic_elements(&fixtures::a2(), GenSet::full(2))
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_finite_parabolic_elements(&fixtures::a2(), GenSet::EMPTY)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_finite_parabolic_elements(&fixtures::a3(), GenSet::full(3))
                .unwrap()
                .len(),
            24
        );
        assert_eq!(
            enumerate_finite_parabolic_elements(&fixtures::h2(), GenSet::full(2))
                .unwrap()
                .len(),
            10
        );
        assert!(matches!(
            enumerate_finite_parabolic_elements(&fixtures::universal3(), GenSet(3)),
            Err(Error::NotSpherical(_))
        ));
    }

    #[test]
    fn closure_termination() {
        assert!(root_closure_terminates(
            &fixtures::a3(),
            GenSet::full(3),
            200,
            10_000
        ));
        assert!(!root_closure_terminates(
            &fixtures::affine_a1(),
            GenSet::full(2),
            200,
            10_000
        ));
        assert!(!root_closure_terminates(
            &fixtures::universal3(),
            GenSet::full(3),
            200,
            10_000
        ));
    }
}
