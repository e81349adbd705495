//! GKZ vectors and secondary polytopes of planar configurations.

use num_traits::Zero;
use rayon::prelude::*;

use super::config::{config_triangulations, ConfigTriangulation, PointConfig2D};
use crate::error::{Error, Result};
use crate::exact::{convex_hull, Polytope, Rational, RationalVector};

/// `sum_i A_i f_i` where `A_i` is the total area of the triangles of `t`
/// containing point `i` and `f_i = e_1 + ... + e_i`. Coordinate `l` is
/// therefore `sum_{i >= l} A_i`.
pub fn gkz_vector(q: &PointConfig2D, t: &ConfigTriangulation) -> Result<RationalVector> {
    t.validate(q)?;
    Ok(gkz_unchecked(q, t))
}

fn gkz_unchecked(q: &PointConfig2D, t: &ConfigTriangulation) -> RationalVector {
    let m = q.len();
    let mut per_point = vec![Rational::zero(); m];
    for tri in &t.triangles {
        let area = q.triangle_area(tri);
        for &l in tri {
            per_point[l - 1] += &area;
        }
    }
    let mut coords = vec![Rational::zero(); m];
    let mut suffix = Rational::zero();
    for l in (0..m).rev() {
        suffix += &per_point[l];
        coords[l] = suffix.clone();
    }
    RationalVector::new(coords)
}

/// Every triangulation of `q` with its GKZ vector, in the deterministic
/// triangulation order.
pub fn gkz_vectors(q: &PointConfig2D) -> Vec<(ConfigTriangulation, RationalVector)> {
    config_triangulations(q)
        .into_par_iter()
        .map(|t| {
            let g = gkz_unchecked(q, &t);
            (t, g)
        })
        .collect()
}

/// Convex hull of all GKZ vectors of `q`.
pub fn secondary_polytope(q: &PointConfig2D) -> Result<Polytope> {
    if q.len() < 4 {
        return Err(Error::DimensionTooSmall);
    }
    let points: Vec<RationalVector> = gkz_vectors(q).into_iter().map(|(_, g)| g).collect();
    convex_hull(&points)
}
