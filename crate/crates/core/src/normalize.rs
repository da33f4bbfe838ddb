//! Normalization onto the affine hyperplane `V1 = { sum_a v_a = 1 }`, the
//! induced dot-action, and empirical limit-root estimates.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::datum::{CoxeterDatum, Vector, EPS};
use crate::error::{Error, Result};
use crate::parabolic::classify_parabolic;
use crate::reflection::{self, GroupElement, RootRecord};

/// Grid used to cluster limit-root estimates.
pub const LIMIT_GRID: f64 = 1e-4;

/// The linear functional vanishing on `V0` and equal to 1 on `V1`.
pub fn phi(v: &Vector) -> f64 {
    v.sum()
}

/// A point of `V1`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedPoint(Vector);

impl Serialize for NormalizedPoint {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

impl NormalizedPoint {
    pub fn coords(&self) -> &Vector {
        &self.0
    }

    pub fn into_inner(self) -> Vector {
        self.0
    }

    pub fn as_slice(&self) -> &[f64] {
        self.0.as_slice()
    }

    /// Distance in the max norm.
    pub fn distance(&self, other: &NormalizedPoint) -> f64 {
        (&self.0 - &other.0).amax()
    }
}

/// `v / phi(v)`.
pub fn normalize(v: &Vector) -> Result<NormalizedPoint> {
    let sum = phi(v);
    if sum.abs() <= EPS {
        return Err(Error::OnV0 { sum });
    }
    Ok(NormalizedPoint(v / sum))
}

/// `w . x`, the normalization of `w x`.
pub fn dot_act(w: &GroupElement, x: &NormalizedPoint) -> Result<NormalizedPoint> {
    let image = w.act(x.coords())?;
    normalize(&image).map_err(|_| Error::LeftDomain)
}

/// A normalized root, one CSV row of the normalized-roots export.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalizedRoot {
    pub point: NormalizedPoint,
    pub depth: usize,
    /// `(x, x)` of the normalized point.
    pub isotropy: f64,
}

/// Normalizes every positive root reached within `max_depth` BFS levels.
pub fn normalized_roots(datum: &CoxeterDatum, max_depth: usize) -> Result<Vec<NormalizedRoot>> {
    let roots = reflection::generate_roots(datum, max_depth)?;
    roots.iter().map(|r| normalize_root(datum, r)).collect()
}

fn normalize_root(datum: &CoxeterDatum, r: &RootRecord) -> Result<NormalizedRoot> {
    let point = normalize(&r.coords)?;
    let isotropy = datum.form(point.coords(), point.coords());
    Ok(NormalizedRoot {
        point,
        depth: r.depth,
        isotropy,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitRootEstimate {
    pub point: NormalizedPoint,
    pub isotropy: f64,
    pub source_depth: usize,
}

/// Normalized roots from the two deepest BFS levels whose isotropy is within
/// `isotropy_tol`, one per `1e-4` grid cell (the least isotropic value wins).
/// This is a heuristic sample near the limit set, not a convergence result.
pub fn approximate_limit_roots(
    datum: &CoxeterDatum,
    max_depth: usize,
    isotropy_tol: f64,
) -> Result<Vec<LimitRootEstimate>> {
    if max_depth < 1 {
        return Err(Error::PreconditionViolated(
            "limit roots need max_depth >= 1".into(),
        ));
    }
    if classify_parabolic(datum, datum.all()).kind.is_finite() {
        return Err(Error::FiniteGroup);
    }
    let roots = reflection::generate_roots(datum, max_depth)?;
    if roots.iter().all(|r| r.depth < max_depth) {
        return Err(Error::FiniteGroup);
    }
    let mut clusters: BTreeMap<Vec<i64>, LimitRootEstimate> = BTreeMap::new();
    for r in roots.iter().filter(|r| r.depth + 1 >= max_depth) {
        let nr = normalize_root(datum, r)?;
        if nr.isotropy.abs() > isotropy_tol {
            continue;
        }
        let key: Vec<i64> = nr
            .point
            .as_slice()
            .iter()
            .map(|x| (x / LIMIT_GRID).round() as i64)
            .collect();
        let candidate = LimitRootEstimate {
            point: nr.point,
            isotropy: nr.isotropy,
            source_depth: nr.depth,
        };
        match clusters.get(&key) {
            Some(existing) if existing.isotropy.abs() <= candidate.isotropy.abs() => {}
            _ => {
                clusters.insert(key, candidate);
            }
        }
    }
    Ok(clusters.into_values().collect())
}
