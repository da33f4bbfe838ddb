//! Based root systems of finitely generated Coxeter groups, the imaginary
//! cone and its normalization, and a `W`-equivariant embedding of the Davis
//! complex into the normalized imaginary cone.
//!
//! The simple roots are realized as the standard basis of `R^n`; the form is
//! the Gram matrix of the Coxeter matrix. Everything is computed in `f64` with
//! the tolerance [`EPS`] for equality predicates.

pub mod cone;
pub mod datum;
pub mod davis;
pub mod embedding;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod genset;
mod grid;
pub mod lp;
pub mod normalize;
pub mod parabolic;
pub mod reflection;
pub mod verify;

pub use datum::{Bond, CoxeterDatum, CoxeterMatrix, DatumDocument, Vector, EPS, FORM_TOL};
pub use error::{Error, Result};
pub use genset::GenSet;
pub use reflection::{GroupElement, RootRecord};
