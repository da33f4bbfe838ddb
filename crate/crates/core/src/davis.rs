//! The fundamental chamber `K` as the order complex of the spherical poset,
//! its mirrors, and the Davis complex materialized over a word ball.

use std::collections::{BTreeMap, BTreeSet};

use crate::datum::CoxeterDatum;
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::parabolic::SphericalPoset;
use crate::reflection::{enumerate_ball, Ball, GroupElement};

/// Order complex of the spherical poset.
#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalChamber {
    /// One vertex per spherical subset, in poset order (index 0 is the empty set).
    pub vertices: Vec<GenSet>,
    /// Every nonempty chain, as increasing vertex indices, sorted by length
    /// then lexicographically.
    pub simplices: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl FundamentalChamber {
    pub fn simplex_index(&self, chain: &[usize]) -> Option<usize> {
        self.index.get(chain).copied()
    }

    pub fn vertex_index(&self, t: GenSet) -> Option<usize> {
        self.vertices.iter().position(|&v| v == t)
    }

    /// The chain of a simplex as subsets.
    pub fn chain(&self, simplex: usize) -> Vec<GenSet> {
        self.simplices[simplex]
            .iter()
            .map(|&i| self.vertices[i])
            .collect()
    }

    /// Index of the simplex spanned by a chain of subsets.
    pub fn simplex_of(&self, chain: &[GenSet]) -> Option<usize> {
        let idx: Option<Vec<usize>> = chain.iter().map(|&t| self.vertex_index(t)).collect();
        self.simplex_index(&idx?)
    }

    /// Chains not contained in a longer chain.
    pub fn maximal_simplices(&self) -> Vec<usize> {
        (0..self.simplices.len())
            .filter(|&i| {
                let c = &self.simplices[i];
                !self
                    .simplices
                    .iter()
                    .any(|d| d.len() > c.len() && c.iter().all(|x| d.contains(x)))
            })
            .collect()
    }

    /// The barycenter of every simplex.
    pub fn sample_points(&self) -> Vec<ChamberPoint> {
        (0..self.simplices.len())
            .map(|i| ChamberPoint::barycenter(self.chain(i)))
            .collect()
    }
}

pub fn build_fundamental_chamber(poset: &SphericalPoset) -> FundamentalChamber {
    let vertices = poset.elements.clone();
    let n = vertices.len();
    let mut simplices = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        let last = vertices[*chain.last().unwrap()];
        for (j, &t) in vertices.iter().enumerate() {
            if t != last && last.is_subset(t) {
                let mut longer = chain.clone();
                longer.push(j);
                stack.push(longer);
            }
        }
        simplices.push(chain);
    }
    simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index = simplices
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    FundamentalChamber {
        vertices,
        simplices,
        index,
    }
}

/// Simplices of the mirror `K_s`: chains whose least element contains `s`.
pub fn mirror(chamber: &FundamentalChamber, s: usize) -> Vec<usize> {
    (0..chamber.simplices.len())
        .filter(|&i| chamber.vertices[chamber.simplices[i][0]].contains(s))
        .collect()
}

/// A point of `K` given by its carrier chain and positive barycentric weights.
#[derive(Clone, Debug, PartialEq)]
pub struct ChamberPoint {
    pub carrier: Vec<GenSet>,
    pub barycentric: Vec<f64>,
}

impl ChamberPoint {
    pub fn new(carrier: Vec<GenSet>, barycentric: Vec<f64>) -> Result<Self> {
        if carrier.is_empty() || carrier.len() != barycentric.len() {
            return Err(Error::PreconditionViolated(
                "carrier and weights must be nonempty and of equal length".into(),
            ));
        }
        if carrier
            .windows(2)
            .any(|p| p[0] == p[1] || !p[0].is_subset(p[1]))
        {
            return Err(Error::PreconditionViolated(
                "carrier is not a strictly increasing chain".into(),
            ));
        }
        let total: f64 = barycentric.iter().sum();
        if barycentric.iter().any(|&w| w <= 0.0) || (total - 1.0).abs() > 1e-12 {
            return Err(Error::PreconditionViolated(
                "weights must be positive and sum to 1".into(),
            ));
        }
        Ok(Self {
            carrier,
            barycentric,
        })
    }

    pub fn vertex(t: GenSet) -> Self {
        Self {
            carrier: vec![t],
            barycentric: vec![1.0],
        }
    }

    pub fn barycenter(carrier: Vec<GenSet>) -> Self {
        let w = 1.0 / carrier.len() as f64;
        let barycentric = vec![w; carrier.len()];
        Self {
            carrier,
            barycentric,
        }
    }

    /// Whether the point lies on the mirror `K_s`.
    pub fn in_mirror(&self, s: usize) -> bool {
        self.carrier[0].contains(s)
    }
}

/// Generators of the stabilizer `W_k`: the least element of the carrier.
pub fn point_stabilizer(point: &ChamberPoint) -> GenSet {
    point.carrier[0]
}

/// The class of `(element, point)` in `W x K`.
#[derive(Clone, Debug, PartialEq)]
pub struct DavisCell {
    pub element: GroupElement,
    pub point: ChamberPoint,
}

/// Replaces the element by the minimal representative of its coset modulo
/// the point's stabilizer.
pub fn canonicalize_cell(datum: &CoxeterDatum, cell: &DavisCell) -> DavisCell {
    DavisCell {
        element: cell
            .element
            .min_coset_rep(datum, point_stabilizer(&cell.point)),
        point: cell.point.clone(),
    }
}

/// Chambers `wK` for `w` in a word ball, glued along mirrors.
#[derive(Clone, Debug)]
pub struct DavisBall {
    pub chamber: FundamentalChamber,
    pub ball: Ball,
    /// `(i, j, s)` with `i < j` and chamber `j` equal to chamber `i` times `r_s`.
    pub adjacency: Vec<(usize, usize, usize)>,
    /// `(i, s)` where the `s`-neighbour of chamber `i` lies outside the ball.
    pub frontier: Vec<(usize, usize)>,
}

impl DavisBall {
    pub fn chambers(&self) -> &[GroupElement] {
        self.ball.elements()
    }

    pub fn is_closed(&self) -> bool {
        self.frontier.is_empty()
    }

    /// Barycenters of all simplices of all chambers, canonicalized and
    /// deduplicated, in a deterministic order. Each entry carries the
    /// simplex index of its carrier.
    pub fn cells(&self, datum: &CoxeterDatum) -> Vec<(usize, DavisCell)> {
        let points = self.chamber.sample_points();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for w in self.chambers() {
            for (i, p) in points.iter().enumerate() {
                let cell = canonicalize_cell(
                    datum,
                    &DavisCell {
                        element: w.clone(),
                        point: p.clone(),
                    },
                );
                if seen.insert((cell.element.word().to_vec(), i)) {
                    out.push((i, cell));
                }
            }
        }
        out
    }
}

pub fn build_davis_ball(
    datum: &CoxeterDatum,
    poset: &SphericalPoset,
    radius: usize,
) -> Result<DavisBall> {
    let chamber = build_fundamental_chamber(poset);
    let ball = enumerate_ball(datum, radius)?;
    let mut adjacency = Vec::new();
    let mut frontier = Vec::new();
    for (i, w) in ball.elements().iter().enumerate() {
        for s in 0..datum.rank() {
            match ball.position(&w.times_generator(datum, s)) {
                Some(j) if i < j => adjacency.push((i, j, s)),
                Some(_) => {}
                None => frontier.push((i, s)),
            }
        }
    }
    Ok(DavisBall {
        chamber,
        ball,
        adjacency,
        frontier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::parabolic::enumerate_spherical_poset;

    fn chamber_of(d: &CoxeterDatum) -> FundamentalChamber {
        build_fundamental_chamber(&enumerate_spherical_poset(d).unwrap())
    }

    fn chains(c: &FundamentalChamber, ids: &[usize]) -> Vec<Vec<GenSet>> {
        ids.iter().map(|&i| c.chain(i)).collect()
    }

    const E: GenSet = GenSet::EMPTY;
    const S: GenSet = GenSet(1);
    const T: GenSet = GenSet(2);
    const ST: GenSet = GenSet(3);

    #[test]
    fn chamber_of_a2() {
        let c = chamber_of(&fixtures::a2());
        assert_eq!(c.vertices, vec![E, S, T, ST]);
        // 4 vertices, 5 edges, 2 triangles.
        assert_eq!(c.simplices.len(), 11);
        let max = chains(&c, &c.maximal_simplices());
        assert_eq!(max, vec![vec![E, S, ST], vec![E, T, ST]]);
    }

    #[test]
    fn chamber_of_infinite_dihedral() {
        let c = chamber_of(&fixtures::affine_a1());
        assert_eq!(c.vertices, vec![E, S, T]);
        let max = chains(&c, &c.maximal_simplices());
        assert_eq!(max, vec![vec![E, S], vec![E, T]]);
    }

    #[test]
    fn chamber_of_rank_one() {
        let d = CoxeterDatum::from_bonds(&["s"], &[]).unwrap();
        let c = chamber_of(&d);
        assert_eq!(c.vertices, vec![E, S]);
        assert_eq!(chains(&c, &c.maximal_simplices()), vec![vec![E, S]]);
    }

    #[test]
    fn simplex_faces_are_stored() {
        for (_, d) in fixtures::suite() {
            let c = chamber_of(&d);
            for chain in &c.simplices {
                for skip in 0..chain.len() {
                    if chain.len() == 1 {
                        continue;
                    }
                    let face: Vec<usize> = chain
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    assert!(c.simplex_index(&face).is_some());
                }
            }
        }
    }

    #[test]
    fn mirror_examples() {
        let c = chamber_of(&fixtures::a2());
        assert_eq!(
            chains(&c, &mirror(&c, 0)),
            vec![vec![S], vec![ST], vec![S, ST]]
        );
        let c = chamber_of(&fixtures::affine_a1());
        assert_eq!(chains(&c, &mirror(&c, 0)), vec![vec![S]]);
        let d = CoxeterDatum::from_bonds(&["s"], &[]).unwrap();
        let c = chamber_of(&d);
        assert_eq!(chains(&c, &mirror(&c, 0)), vec![vec![S]]);
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(point_stabilizer(&ChamberPoint::barycenter(vec![E, S])), E);
        assert_eq!(point_stabilizer(&ChamberPoint::vertex(ST)), ST);
        assert_eq!(point_stabilizer(&ChamberPoint::barycenter(vec![S, ST])), S);
        for (_, d) in fixtures::suite() {
            let c = chamber_of(&d);
            for p in c.sample_points() {
                for s in 0..d.rank() {
                    assert_eq!(p.in_mirror(s), point_stabilizer(&p).contains(s));
                }
            }
        }
    }

    #[test]
    fn chamber_point_validation() {
        assert!(ChamberPoint::new(vec![E, S], vec![0.5, 0.5]).is_ok());
        assert!(ChamberPoint::new(vec![S, E], vec![0.5, 0.5]).is_err());
        assert!(ChamberPoint::new(vec![E, S], vec![1.0, 0.0]).is_err());
        assert!(ChamberPoint::new(vec![E, S], vec![0.5]).is_err());
    }

    #[test]
    fn canonicalization_examples() {
        let d = fixtures::a2();
        let cell = |word: &[usize], p: ChamberPoint| DavisCell {
            element: GroupElement::from_word(&d, word),
            point: p,
        };
        let c = canonicalize_cell(&d, &cell(&[0], ChamberPoint::vertex(S)));
        assert!(c.element.is_identity());
        let interior = ChamberPoint::barycenter(vec![E, S, ST]);
        let c = canonicalize_cell(&d, &cell(&[0, 1], interior.clone()));
        assert_eq!(c.element.word(), &[0, 1]);
        let c = canonicalize_cell(&d, &cell(&[0, 1], ChamberPoint::vertex(T)));
        assert_eq!(c.element.word(), &[0]);
        // Idempotent and constant on classes.
        assert_eq!(canonicalize_cell(&d, &c), c);
        let p = ChamberPoint::vertex(ST);
        for w in enumerate_ball(&d, 3).unwrap().elements() {
            let c = canonicalize_cell(&d, &cell(w.word(), p.clone()));
            assert!(c.element.is_identity());
        }
    }

    #[test]
    fn hexagon() {
        let d = fixtures::a2();
        let poset = enumerate_spherical_poset(&d).unwrap();
        let ball = build_davis_ball(&d, &poset, 3).unwrap();
        assert_eq!(ball.chambers().len(), 6);
        assert!(ball.is_closed());
        assert_eq!(ball.adjacency.len(), 6);
        let mut degree = [0; 6];
        for &(i, j, _) in &ball.adjacency {
            degree[i] += 1;
            degree[j] += 1;
        }
        assert!(degree.iter().all(|&k| k == 2));
        // Each chamber's two walls are glued to distinct neighbours.
        for i in 0..6 {
            let labels: BTreeSet<usize> = ball
                .adjacency
                .iter()
                .filter(|e| e.0 == i || e.1 == i)
                .map(|e| e.2)
                .collect();
            assert_eq!(labels.len(), 2);
        }
        // One class for the centre vertex {s, t}.
        let cells = ball.cells(&d);
        let centre = ball.chamber.simplex_of(&[ST]).unwrap();
        assert_eq!(cells.iter().filter(|(i, _)| *i == centre).count(), 1);
    }

    #[test]
    fn small_balls() {
        let d = fixtures::a2();
        let poset = enumerate_spherical_poset(&d).unwrap();
        let ball = build_davis_ball(&d, &poset, 0).unwrap();
        assert_eq!(ball.chambers().len(), 1);
        assert!(ball.adjacency.is_empty());
        assert_eq!(ball.frontier, vec![(0, 0), (0, 1)]);

        let d = fixtures::affine_a1();
        let poset = enumerate_spherical_poset(&d).unwrap();
        let ball = build_davis_ball(&d, &poset, 4).unwrap();
        assert_eq!(ball.chambers().len(), 9);
        assert_eq!(ball.adjacency.len(), 8);
        assert_eq!(ball.frontier.len(), 2);
    }
}
