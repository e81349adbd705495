//! Geometric and combinatorial checks on realizations.

mod verify;

pub use verify::{verify_associahedron, VerificationReport};

use crate::error::Result;
use crate::exact::{are_antiparallel, Polytope, Rational};
use crate::realizations::{
    enumerate_config_triangulations, gkz_vector, triangle_with_midpoints,
};

/// Whether all vertices have the same squared norm; returns that norm.
pub fn sphericity_check(p: &Polytope) -> (bool, Option<Rational>) {
    let mut norms = p.vertices.iter().map(|v| v.norm_squared());
    let Some(first) = norms.next() else {
        return (false, None);
    };
    if norms.all(|r| r == first) {
        (true, Some(first))
    } else {
        (false, None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelFacetReport {
    /// Unordered facet pairs `(i, j)`, `i < j`, with antiparallel normals.
    pub pairs: Vec<(usize, usize)>,
    pub count: usize,
}

/// All pairs of opposite facets. Normals are stored inside the direction
/// space of the affine hull, so comparing them is meaningful for
/// lower-dimensional polytopes too.
pub fn parallel_facet_pairs(p: &Polytope) -> ParallelFacetReport {
    let mut pairs = Vec::new();
    for (i, f) in p.facets.iter().enumerate() {
        for (j, g) in p.facets.iter().enumerate().skip(i + 1) {
            if are_antiparallel(&f.normal, &g.normal).unwrap_or(false) {
                pairs.push((i, j));
            }
        }
    }
    let count = pairs.len();
    ParallelFacetReport { pairs, count }
}

/// Secondary polytope of the triangle with its three edge midpoints,
/// verified as a 3-dimensional associahedron, with its parallel facet pairs.
pub fn weakly_convex_demo() -> Result<(Polytope, VerificationReport, ParallelFacetReport)> {
    let q = triangle_with_midpoints();
    let gkz = enumerate_config_triangulations(&q)
        .iter()
        .map(|t| gkz_vector(&q, t))
        .collect::<Result<Vec<_>>>()?;
    let poly = crate::exact::convex_hull(&gkz)?;
    let report = verify_associahedron(&poly, q.len() - 3);
    let parallel = parallel_facet_pairs(&poly);
    Ok((poly, report, parallel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{convex_hull, rat, ratio, RationalVector};
    use crate::realizations::{
        cluster_associahedron, minkowski_associahedron, parabola_config, random_convex_polygon,
        secondary_polytope, ClusterParams, MinkowskiParams, PointConfig2D,
    };

    fn v(x: &[i64]) -> RationalVector {
        RationalVector::from_ints(x)
    }

    fn cube(d: usize) -> Polytope {
        let pts: Vec<RationalVector> = (0..1 << d)
            .map(|mask: usize| {
                RationalVector::new((0..d).map(|i| rat(((mask >> i) & 1) as i64)).collect())
            })
            .collect();
        convex_hull(&pts).unwrap()
    }

    #[test]
    fn sphericity_examples() {
        let q = parabola_config(4, &rat(0), &rat(1), None).unwrap();
        let p = secondary_polytope(&q).unwrap();
        assert_eq!(sphericity_check(&p), (true, Some(rat(266))));

        // Unit square: norms 31/2 and 37/2 by hand.
        let sq = PointConfig2D::new(vec![v(&[0, 0]), v(&[1, 0]), v(&[1, 1]), v(&[0, 1])]).unwrap();
        let p = secondary_polytope(&sq).unwrap();
        let mut norms: Vec<Rational> = p.vertices.iter().map(|x| x.norm_squared()).collect();
        norms.sort();
        assert_eq!(norms, vec![ratio(31, 2), ratio(37, 2)]);
        assert_eq!(sphericity_check(&p), (false, None));

        let origin = convex_hull(&[v(&[0, 0, 0])]).unwrap();
        assert_eq!(sphericity_check(&origin), (true, Some(rat(0))));
    }

    #[test]
    fn parallel_pairs_examples() {
        let sq = cube(2);
        assert_eq!(parallel_facet_pairs(&sq).count, 2);
        let hex = secondary_polytope(&random_convex_polygon(6, 5).unwrap()).unwrap();
        assert_eq!(parallel_facet_pairs(&hex).count, 0);
        let a3 = minkowski_associahedron(&MinkowskiParams::uniform(3, rat(1)).unwrap()).unwrap();
        assert_eq!(parallel_facet_pairs(&a3).count, 3);
    }

    #[test]
    fn verification_accepts_small_realizations() {
        let hex = secondary_polytope(&random_convex_polygon(6, 9).unwrap()).unwrap();
        let r = verify_associahedron(&hex, 3);
        assert!(r.is_associahedron, "{:?}", r.failure_reason);
        assert_eq!((r.vertex_count, r.facet_count), (14, 9));
        assert!(r.is_simple);

        let cl = cluster_associahedron(&ClusterParams::default_for(2).unwrap()).unwrap();
        let r = verify_associahedron(&cl, 2);
        assert!(r.is_associahedron, "{:?}", r.failure_reason);
        assert_eq!(r.vertex_count, 5);
    }

    #[test]
    fn verification_rejects_cube() {
        let r = verify_associahedron(&cube(3), 3);
        assert!(!r.is_associahedron);
        assert_eq!(r.failure_reason.as_deref(), Some("facet count 6 ≠ 9"));
    }

    #[test]
    fn verification_rejects_wrong_dimension() {
        let r = verify_associahedron(&cube(2), 3);
        assert!(!r.is_associahedron);
        assert_eq!(r.failure_reason.as_deref(), Some("dimension 2 ≠ 3"));
    }

    #[test]
    fn weakly_convex_configuration_gives_associahedron() {
        let (poly, report, parallel) = weakly_convex_demo().unwrap();
        assert!(report.is_associahedron, "{:?}", report.failure_reason);
        assert_eq!(poly.vertex_count(), 14);
        assert_eq!(parallel.count, 3);
    }
}
