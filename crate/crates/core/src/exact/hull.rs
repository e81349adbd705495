//! Exact convex hulls with full vertex-facet incidence.
//!
//! Points are first re-expressed in intrinsic coordinates of their affine
//! hull, then the facet cone `{(a, b) : a.y <= b for all input y}` is built
//! incrementally by the double description method. Facet normals are mapped
//! back into the direction space of the affine hull and made primitive, so two
//! facets are antiparallel exactly when their stored normals are negatives.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::dd::{extreme_rays, BitSet};
use super::{AffineFrame, Rational, RationalVector};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive integer outer normal lying in the direction space of the hull.
    pub normal: RationalVector,
    pub offset: Rational,
    /// Sorted indices of the vertices on this facet.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHull {
    pub point: RationalVector,
    pub basis: Vec<RationalVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    /// Vertices in lexicographic order.
    pub vertices: Vec<RationalVector>,
    pub facets: Vec<Facet>,
    pub ambient_dim: usize,
    pub intrinsic_dim: usize,
    /// Present when the polytope is not full dimensional.
    pub affine_hull: Option<AffineHull>,
}

impl Polytope {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// For each vertex, the sorted list of facets containing it.
    pub fn vertex_facets(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for (fi, f) in self.facets.iter().enumerate() {
            for &v in &f.vertices {
                out[v].push(fi);
            }
        }
        out
    }

    /// Re-checks the incidence invariant: every vertex satisfies every facet
    /// inequality, with equality exactly on the facet's incidence set.
    pub fn incidences_consistent(&self) -> bool {
        self.facets.iter().all(|f| {
            let mut on = f.vertices.iter().peekable();
            self.vertices.iter().enumerate().all(|(i, v)| {
                let value = f.normal.dot(v);
                if on.peek() == Some(&&i) {
                    on.next();
                    value == f.offset
                } else {
                    value < f.offset
                }
            })
        })
    }

    pub fn map_vertices<F>(&self, f: F) -> Result<Polytope>
    where
        F: Fn(&RationalVector) -> RationalVector,
    {
        let pts: Vec<RationalVector> = self.vertices.iter().map(f).collect();
        convex_hull(&pts)
    }
}

fn integer_row(y: &RationalVector) -> Vec<BigInt> {
    // Row (y, -1) scaled to clear denominators.
    let lcm = y.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut row: Vec<BigInt> = y.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    row.push(-lcm);
    row
}

fn from_ints(v: &[BigInt]) -> RationalVector {
    RationalVector::new(v.iter().cloned().map(Rational::from_integer).collect())
}

/// Convex hull of a finite point set.
///
/// Duplicates and non-extreme points are dropped. Lower-dimensional inputs are
/// legal: facets are then computed inside the affine hull and
/// `intrinsic_dim` reports its dimension.
pub fn convex_hull(points: &[RationalVector]) -> Result<Polytope> {
    let mut pts: Vec<RationalVector> = points.to_vec();
    pts.sort();
    pts.dedup();
    // The lexicographic minimum is a vertex, so the frame does not depend on
    // input order or on non-extreme points.
    let frame = AffineFrame::new(&pts)?;

    let ambient_dim = frame.ambient_dim();
    let d = frame.dim();
    let affine_hull = (d < ambient_dim).then(|| AffineHull {
        point: frame.origin.clone(),
        basis: frame.basis.clone(),
    });

    if d == 0 {
        return Ok(Polytope {
            vertices: pts,
            facets: Vec::new(),
            ambient_dim,
            intrinsic_dim: 0,
            affine_hull,
        });
    }

    let projected: Vec<RationalVector> = pts.iter().map(|p| frame.project(p)).collect();
    let rows: Vec<Vec<BigInt>> = projected.iter().map(integer_row).collect();
    let rays = extreme_rays(&rows).expect("affinely spanning points give a pointed facet cone");

    // A point is a vertex iff the facets through it meet in that point alone.
    let n = pts.len();
    let mut through: Vec<Option<BitSet>> = vec![None; n];
    for (_, tight) in &rays {
        let mut set = BitSet::new(n);
        for &t in tight {
            set.insert(t);
        }
        for &t in tight {
            through[t] = Some(match through[t].take() {
                None => set.clone(),
                Some(acc) => acc.intersection(&set),
            });
        }
    }
    let is_vertex: Vec<bool> = through
        .iter()
        .map(|s| s.as_ref().is_some_and(|s| s.count() == 1))
        .collect();
    let mut new_index = vec![usize::MAX; n];
    let mut vertices = Vec::new();
    for i in 0..n {
        if is_vertex[i] {
            new_index[i] = vertices.len();
            vertices.push(pts[i].clone());
        }
    }

    let mut facets: Vec<Facet> = rays
        .iter()
        .map(|(coords, tight)| {
            let a = from_ints(&coords[..d]);
            let normal = from_ints(&frame.lift_functional(&a).primitive_integer());
            let mut incident: Vec<usize> = tight
                .iter()
                .filter(|&&t| is_vertex[t])
                .map(|&t| new_index[t])
                .collect();
            incident.sort_unstable();
            let offset = normal.dot(&vertices[incident[0]]);
            Facet {
                normal,
                offset,
                vertices: incident,
            }
        })
        .collect();
    facets.sort_by(|x, y| x.normal.cmp(&y.normal));

    Ok(Polytope {
        vertices,
        facets,
        ambient_dim,
        intrinsic_dim: d,
        affine_hull,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{are_antiparallel, rat};
    use crate::Error;

    fn v(x: &[i64]) -> RationalVector {
        RationalVector::from_ints(x)
    }

    #[test]
    fn unit_square() {
        let p = convex_hull(&[v(&[0, 0]), v(&[1, 0]), v(&[1, 1]), v(&[0, 1])]).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.facet_count(), 4);
        assert!(p.facets.iter().all(|f| f.vertices.len() == 2));
        assert!(p.incidences_consistent());
        assert_eq!(p.intrinsic_dim, 2);
        assert!(p.affine_hull.is_none());
    }

    #[test]
    fn collinear_midpoint_is_absorbed() {
        let p = convex_hull(&[v(&[0, 0]), v(&[1, 0]), v(&[2, 0])]).unwrap();
        assert_eq!(p.vertices, vec![v(&[0, 0]), v(&[2, 0])]);
        assert_eq!(p.intrinsic_dim, 1);
        assert_eq!(p.facet_count(), 2);
        assert!(are_antiparallel(&p.facets[0].normal, &p.facets[1].normal).unwrap());
    }

    #[test]
    fn gkz_segment_of_parabola_quadrilateral() {
        let p = convex_hull(&[v(&[12, 8, 7, 3]), v(&[12, 9, 5, 4])]).unwrap();
        assert_eq!(p.intrinsic_dim, 1);
        assert_eq!(p.vertex_count(), 2);
        assert!(p.incidences_consistent());
        // Normal lies along the segment direction (0,1,-2,1).
        let normals: Vec<_> = p.facets.iter().map(|f| f.normal.clone()).collect();
        assert!(normals.contains(&v(&[0, 1, -2, 1])));
        assert!(normals.contains(&v(&[0, -1, 2, -1])));
    }

    #[test]
    fn interior_and_duplicate_points_dropped() {
        let p = convex_hull(&[
            v(&[0, 0, 0]),
            v(&[2, 0, 0]),
            v(&[0, 2, 0]),
            v(&[0, 0, 2]),
            v(&[0, 0, 2]),
            v(&[1, 0, 0]),
            v(&[0, 1, 1]),
        ])
        .unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.facet_count(), 4);
        assert!(p.incidences_consistent());
    }

    #[test]
    fn single_point_and_empty() {
        let p = convex_hull(&[v(&[1, 2, 3]), v(&[1, 2, 3])]).unwrap();
        assert_eq!(p.vertex_count(), 1);
        assert_eq!(p.intrinsic_dim, 0);
        assert!(p.facets.is_empty());
        assert_eq!(convex_hull(&[]), Err(Error::EmptyPointSet));
    }

    #[test]
    fn cube_in_four_space() {
        // 3-cube embedded in the hyperplane x4 = 5 of R^4.
        let mut pts = Vec::new();
        for mask in 0..8 {
            pts.push(v(&[mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, 5]));
        }
        let p = convex_hull(&pts).unwrap();
        assert_eq!(p.intrinsic_dim, 3);
        assert_eq!(p.facet_count(), 6);
        assert!(p.facets.iter().all(|f| f.vertices.len() == 4));
        assert!(p.facets.iter().all(|f| f.normal[3] == rat(0)));
        assert!(p.incidences_consistent());
    }
}
