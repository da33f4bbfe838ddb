//! Named Coxeter data used throughout the tests and the CLI.

use crate::datum::{Bond, CoxeterDatum};

use Bond::{Finite, Infinite};

fn build(
    labels: &[&str],
    bonds: &[(usize, usize, Bond)],
    values: &[(usize, usize, f64)],
) -> CoxeterDatum {
    CoxeterDatum::with_values(labels, bonds, values).expect("fixture datum is valid")
}

/// Dihedral datum with a single bond `m`.
pub fn dihedral(m: Bond) -> CoxeterDatum {
    build(&["s", "t"], &[(0, 1, m)], &[])
}

/// Infinite dihedral datum with form value `c <= -1`.
pub fn infinite_dihedral(c: f64) -> CoxeterDatum {
    let values: &[(usize, usize, f64)] = if c == -1.0 { &[] } else { &[(0, 1, c)] };
    build(&["s", "t"], &[(0, 1, Infinite)], values)
}

/// Dihedral group of order 6.
pub fn a2() -> CoxeterDatum {
    dihedral(Finite(3))
}

pub fn b2() -> CoxeterDatum {
    dihedral(Finite(4))
}

pub fn h2() -> CoxeterDatum {
    dihedral(Finite(5))
}

/// Infinite dihedral group with `(a_s, a_t) = -1`.
pub fn affine_a1() -> CoxeterDatum {
    infinite_dihedral(-1.0)
}

/// Infinite dihedral group with `(a_s, a_t) = -1.5`.
pub fn hyperbolic_a1() -> CoxeterDatum {
    infinite_dihedral(-1.5)
}

/// Symmetric group on four letters.
pub fn a3() -> CoxeterDatum {
    build(
        &["s", "t", "u"],
        &[(0, 1, Finite(3)), (1, 2, Finite(3))],
        &[],
    )
}

/// Triangle group (3, 3, 3), the affine group of type A2.
pub fn affine_a2() -> CoxeterDatum {
    build(
        &["s", "t", "u"],
        &[(0, 1, Finite(3)), (1, 2, Finite(3)), (0, 2, Finite(3))],
        &[],
    )
}

/// Hyperbolic triangle group with bonds 3, 3, 4 (`m_tu = 4`).
pub fn triangle_334() -> CoxeterDatum {
    build(
        &["s", "t", "u"],
        &[(0, 1, Finite(3)), (0, 2, Finite(3)), (1, 2, Finite(4))],
        &[],
    )
}

/// Universal Coxeter group of rank 3: every bond infinite, form values `-1`.
pub fn universal3() -> CoxeterDatum {
    build(
        &["s", "t", "u"],
        &[(0, 1, Infinite), (0, 2, Infinite), (1, 2, Infinite)],
        &[],
    )
}

/// Rank 3 with one finite bond `m_st = 3` and the other two infinite.
pub fn mixed3() -> CoxeterDatum {
    build(
        &["s", "t", "u"],
        &[(0, 1, Finite(3)), (0, 2, Infinite), (1, 2, Infinite)],
        &[],
    )
}

/// Rank 3 with an affine pair `m_st = inf` and `m_su = m_tu = 3`.
pub fn affine_pair3() -> CoxeterDatum {
    build(
        &["s", "t", "u"],
        &[(0, 1, Infinite), (0, 2, Finite(3)), (1, 2, Finite(3))],
        &[],
    )
}

/// The data every invariant suite runs over.
pub fn suite() -> Vec<(&'static str, CoxeterDatum)> {
    vec![
        ("a2", a2()),
        ("affine-a1", affine_a1()),
        ("universal3", universal3()),
        ("triangle-334", triangle_334()),
        ("mixed3", mixed3()),
        ("affine-pair3", affine_pair3()),
    ]
}

/// Suite data plus the extra classification fixtures.
pub fn classification() -> Vec<(&'static str, CoxeterDatum)> {
    let mut all = suite();
    all.extend([
        ("b2", b2()),
        ("h2", h2()),
        ("hyperbolic-a1", hyperbolic_a1()),
        ("a3", a3()),
        ("affine-a2", affine_a2()),
    ]);
    all
}

/// Looks a fixture up by name.
pub fn by_name(name: &str) -> Option<CoxeterDatum> {
    classification()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, d)| d)
}
