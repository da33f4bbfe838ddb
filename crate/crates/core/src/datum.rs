//! Coxeter matrices, their Gram forms, and the datum document format.
//!
//! The simple roots are always the standard basis of `R^n`, so positive
//! linear combinations of them never vanish and coordinates are canonical.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genset::GenSet;

pub type Vector = DVector<f64>;

/// Comparison tolerance for equality predicates.
pub const EPS: f64 = 1e-9;
/// Tolerance for validating Gram entries against `-cos(pi/m)`.
pub const FORM_TOL: f64 = 1e-12;

/// Order of the product of two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    pub fn is_infinite(self) -> bool {
        matches!(self, Bond::Infinite)
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => f.write_str("inf"),
        }
    }
}

/// Bond token as it appears in a document: an integer or `"inf"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BondToken {
    Order(u32),
    Token(String),
}

impl BondToken {
    fn to_bond(&self) -> Option<Bond> {
        match self {
            BondToken::Order(m) => Some(Bond::Finite(*m)),
            BondToken::Token(t) if t.eq_ignore_ascii_case("inf") => Some(Bond::Infinite),
            BondToken::Token(_) => None,
        }
    }
}

impl From<Bond> for BondToken {
    fn from(b: Bond) -> Self {
        match b {
            Bond::Finite(m) => BondToken::Order(m),
            Bond::Infinite => BondToken::Token("inf".into()),
        }
    }
}

/// Serialized form of a datum. Omitted pairs default to `m = 2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatumDocument {
    pub generators: Vec<String>,
    #[serde(default)]
    pub bonds: Vec<(String, String, BondToken)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub infinite_bond_values: Vec<(String, String, f64)>,
}

/// Generator labels and the symmetric table of bonds `m_st`, plus form values
/// for infinite bonds.
#[derive(Clone, Debug, PartialEq)]
pub struct CoxeterMatrix {
    generators: Vec<String>,
    entries: Vec<Vec<Bond>>,
    infinite_bond_values: BTreeMap<(usize, usize), f64>,
}

impl CoxeterMatrix {
    /// Builds a matrix from labels, bond triples, and infinite-bond overrides
    /// given by index.
    pub fn new(
        generators: Vec<String>,
        bonds: &[(usize, usize, Bond)],
        infinite_bond_values: &[(usize, usize, f64)],
    ) -> Result<Self> {
        let n = generators.len();
        if n == 0 {
            return Err(Error::InvalidDocument("no generators".into()));
        }
        if n > GenSet::MAX_RANK {
            return Err(Error::RankTooLarge {
                rank: n,
                max: GenSet::MAX_RANK,
            });
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        let label = |i: usize| generators[i].clone();
        let mut entries = vec![vec![Bond::Finite(2); n]; n];
        let mut given: Vec<Vec<Option<Bond>>> = vec![vec![None; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Bond::Finite(1);
        }
        for &(s, t, bond) in bonds {
            if s >= n || t >= n {
                return Err(Error::UnknownGenerator(format!("index {}", s.max(t))));
            }
            if s == t {
                if bond != Bond::Finite(1) {
                    return Err(Error::InvalidBond {
                        s: label(s),
                        t: label(t),
                        detail: "diagonal entries must equal 1".into(),
                    });
                }
                continue;
            }
            if let Bond::Finite(m) = bond {
                if m < 2 {
                    return Err(Error::InvalidBond {
                        s: label(s),
                        t: label(t),
                        detail: format!("m = {m} but distinct generators need m >= 2"),
                    });
                }
            }
            for (a, b) in [(s, t), (t, s)] {
                match given[a][b] {
                    Some(prev) if prev != bond => {
                        return Err(Error::AsymmetricEntry {
                            s: label(s),
                            t: label(t),
                        })
                    }
                    _ => given[a][b] = Some(bond),
                }
            }
            entries[s][t] = bond;
            entries[t][s] = bond;
        }
        let mut values = BTreeMap::new();
        for &(s, t, c) in infinite_bond_values {
            if s >= n || t >= n {
                return Err(Error::UnknownGenerator(format!("index {}", s.max(t))));
            }
            let bad = |detail: &str| Error::InvalidInfiniteBondValue {
                s: label(s),
                t: label(t),
                value: c,
                detail: detail.into(),
            };
            if s == t || !entries[s][t].is_infinite() {
                return Err(bad("form values may only be given for infinite bonds"));
            }
            if !c.is_finite() || c > -1.0 {
                return Err(bad("infinite bonds need (a_s, a_t) <= -1"));
            }
            let key = (s.min(t), s.max(t));
            if let Some(&prev) = values.get(&key) {
                if prev != c {
                    return Err(Error::AsymmetricEntry {
                        s: label(s),
                        t: label(t),
                    });
                }
            }
            values.insert(key, c);
        }
        Ok(Self {
            generators,
            entries,
            infinite_bond_values: values,
        })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn bond(&self, s: usize, t: usize) -> Bond {
        self.entries[s][t]
    }

    /// Form value `(a_s, a_t)` for an infinite bond, defaulting to `-1`.
    pub fn infinite_value(&self, s: usize, t: usize) -> f64 {
        *self
            .infinite_bond_values
            .get(&(s.min(t), s.max(t)))
            .unwrap_or(&-1.0)
    }

    /// `B_st`: `1` on the diagonal, `-cos(pi/m)` for finite bonds and the
    /// supplied (or default) value for infinite ones.
    pub fn form_entry(&self, s: usize, t: usize) -> f64 {
        match self.entries[s][t] {
            Bond::Finite(1) => 1.0,
            Bond::Finite(2) => 0.0,
            Bond::Finite(m) => -(PI / m as f64).cos(),
            Bond::Infinite => self.infinite_value(s, t),
        }
    }
}

/// A validated Coxeter datum with simple roots realized as the standard basis.
#[derive(Clone, Debug)]
pub struct CoxeterDatum {
    matrix: CoxeterMatrix,
    form: DMatrix<f64>,
}

impl PartialEq for CoxeterDatum {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl CoxeterDatum {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let n = matrix.rank();
        let form = DMatrix::from_fn(n, n, |s, t| matrix.form_entry(s, t));
        Self { matrix, form }
    }

    /// Convenience constructor from labels and `(s, t, m)` triples by index.
    pub fn from_bonds(labels: &[&str], bonds: &[(usize, usize, Bond)]) -> Result<Self> {
        Self::with_values(labels, bonds, &[])
    }

    pub fn with_values(
        labels: &[&str],
        bonds: &[(usize, usize, Bond)],
        values: &[(usize, usize, f64)],
    ) -> Result<Self> {
        let generators = labels.iter().map(|s| s.to_string()).collect();
        Ok(Self::new(CoxeterMatrix::new(generators, bonds, values)?))
    }

    pub fn from_document(doc: &DatumDocument) -> Result<Self> {
        let index = |label: &str| {
            doc.generators
                .iter()
                .position(|g| g == label)
                .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
        };
        let mut bonds = Vec::with_capacity(doc.bonds.len());
        for (s, t, token) in &doc.bonds {
            let (i, j) = (index(s)?, index(t)?);
            let bond = token.to_bond().ok_or_else(|| Error::InvalidBond {
                s: s.clone(),
                t: t.clone(),
                detail: format!("unrecognized bond token {token:?}"),
            })?;
            bonds.push((i, j, bond));
        }
        let mut values = Vec::with_capacity(doc.infinite_bond_values.len());
        for (s, t, c) in &doc.infinite_bond_values {
            values.push((index(s)?, index(t)?, *c));
        }
        Ok(Self::new(CoxeterMatrix::new(
            doc.generators.clone(),
            &bonds,
            &values,
        )?))
    }

    /// Parses a JSON datum document.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: DatumDocument =
            serde_json::from_str(text).map_err(|e| Error::InvalidDocument(e.to_string()))?;
        Self::from_document(&doc)
    }

    /// Canonical document: every pair `s < t` with `m != 2`, then every
    /// non-default infinite-bond value.
    pub fn to_document(&self) -> DatumDocument {
        let n = self.rank();
        let labels = self.matrix.generators();
        let mut bonds = Vec::new();
        let mut values = Vec::new();
        for s in 0..n {
            for t in s + 1..n {
                let bond = self.bond(s, t);
                if bond != Bond::Finite(2) {
                    bonds.push((labels[s].clone(), labels[t].clone(), bond.into()));
                }
                if let Some(&c) = self.matrix.infinite_bond_values.get(&(s, t)) {
                    values.push((labels[s].clone(), labels[t].clone(), c));
                }
            }
        }
        DatumDocument {
            generators: labels.to_vec(),
            bonds,
            infinite_bond_values: values,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("datum document serializes")
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        self.matrix.generators()
    }

    pub fn label(&self, s: usize) -> &str {
        &self.matrix.generators()[s]
    }

    pub fn generator_index(&self, label: &str) -> Result<usize> {
        self.labels()
            .iter()
            .position(|g| g == label)
            .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    pub fn bond(&self, s: usize, t: usize) -> Bond {
        self.matrix.bond(s, t)
    }

    /// The Gram matrix `B` of the form in the simple-root basis.
    pub fn gram(&self) -> &DMatrix<f64> {
        &self.form
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn simple_root(&self, s: usize) -> Vector {
        let mut v = Vector::zeros(self.rank());
        v[s] = 1.0;
        v
    }

    pub fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `v^T B w`.
    pub fn bilinear(&self, v: &Vector, w: &Vector) -> Result<f64> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        Ok(self.form(v, w))
    }

    /// Unchecked `v^T B w`.
    pub fn form(&self, v: &Vector, w: &Vector) -> f64 {
        (&self.form * w).dot(v)
    }

    /// `(v, a_s)`.
    pub fn pair_with_simple(&self, v: &Vector, s: usize) -> f64 {
        self.form.row(s).transpose().dot(v)
    }

    /// Inner products of `v` against every simple root, i.e. `B v`.
    pub fn walls(&self, v: &Vector) -> Vector {
        &self.form * v
    }

    /// Restriction of the form to the span of the simple roots in `subset`.
    pub fn restricted_gram(&self, subset: GenSet) -> DMatrix<f64> {
        let idx: Vec<usize> = subset.iter().collect();
        DMatrix::from_fn(idx.len(), idx.len(), |i, j| self.form[(idx[i], idx[j])])
    }

    /// Connected components of the Coxeter graph (edges where `m_st != 2`)
    /// restricted to `subset`.
    pub fn components(&self, subset: GenSet) -> Vec<GenSet> {
        let mut remaining = subset;
        let mut out = Vec::new();
        while let Some(start) = remaining.iter().next() {
            let mut comp = GenSet::singleton(start);
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for t in remaining.iter() {
                    if !comp.contains(t) && self.bond(s, t) != Bond::Finite(2) {
                        comp = comp.insert(t);
                        stack.push(t);
                    }
                }
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, subset: GenSet) -> bool {
        self.components(subset).len() <= 1
    }

    pub fn format_subset(&self, subset: GenSet) -> String {
        let names: Vec<&str> = subset.iter().map(|s| self.label(s)).collect();
        format!("{{{}}}", names.join(","))
    }
}
