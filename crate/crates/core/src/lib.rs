//! Exact constructions of the classical associahedron realizations and
//! combinatorics of the simplicial multiassociahedron.
//!
//! All geometry is carried out over arbitrary-precision rationals, so every
//! check in this crate (incidences, sphericity, parallel facets) is an exact
//! equality test with no tolerances.
//!
//! * [`exact`]: rationals, vectors, exact rank and the convex hull kernel.
//! * [`polygon`]: diagonals, triangulations and flips of a convex polygon.
//! * [`realizations`]: secondary polytopes, cluster and Minkowski realizations.
//! * [`checks`]: associahedron verification, sphericity, parallel facets.
//! * [`multi`]: the multiassociahedron `Δ(n,k)` and its invariants.

pub mod checks;
pub mod error;
pub mod exact;
pub mod multi;
pub mod polygon;
pub mod realizations;

pub use error::{Error, Result};
pub use exact::{Polytope, Rational, RationalMatrix, RationalVector};
