//! Planar point configurations in (weakly) convex position and their
//! triangulations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{orientation, rat, ratio, Rational, RationalVector};
use crate::polygon::{enumerate_triangulations, Triangulation};
use num_traits::{Signed, Zero};

/// Labeled points `1..=m` in counterclockwise order along the boundary of
/// their convex hull. Each hull edge carries at most one extra point in its
/// relative interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig2D {
    points: Vec<RationalVector>,
}

impl PointConfig2D {
    pub fn new(points: Vec<RationalVector>) -> Result<Self> {
        let m = points.len();
        if m < 3 {
            return Err(Error::InvalidConfiguration(format!(
                "need at least 3 points, got {m}"
            )));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != 2) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != m {
            return Err(Error::CoincidentPoints);
        }
        let cfg = PointConfig2D { points };
        cfg.check_position()?;
        Ok(cfg)
    }

    fn check_position(&self) -> Result<()> {
        let m = self.len();
        let p = |i: usize| &self.points[i % m];
        for i in 0..m {
            let (a, b) = (p(i), p(i + 1));
            for j in 0..m {
                if j == i || j == (i + 1) % m {
                    continue;
                }
                let o = orientation(a, b, p(j));
                if o.is_negative() {
                    return Err(Error::InvalidConfiguration(format!(
                        "point {} lies right of edge {}-{}: not counterclockwise convex position",
                        j + 1,
                        i + 1,
                        (i + 1) % m + 1
                    )));
                }
                if o.is_zero() {
                    let adjacent = j == (i + m - 1) % m || j == (i + 2) % m;
                    let between = within_segment(a, b, p(j));
                    if !adjacent || between {
                        return Err(Error::InvalidConfiguration(format!(
                            "point {} is collinear with edge {}-{} out of order",
                            j + 1,
                            i + 1,
                            (i + 1) % m + 1
                        )));
                    }
                }
            }
        }
        let flat: Vec<bool> = (0..m).map(|i| self.is_flat(i)).collect();
        for i in 0..m {
            if flat[i] && flat[(i + 1) % m] {
                return Err(Error::InvalidConfiguration(format!(
                    "points {} and {} are both interior to one hull edge",
                    i + 1,
                    (i + 1) % m + 1
                )));
            }
        }
        if flat.iter().filter(|&&f| !f).count() < 3 {
            return Err(Error::InvalidConfiguration("points are collinear".into()));
        }
        Ok(())
    }

    fn is_flat(&self, i: usize) -> bool {
        let m = self.len();
        orientation(
            &self.points[(i + m - 1) % m],
            &self.points[i],
            &self.points[(i + 1) % m],
        )
        .is_zero()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[RationalVector] {
        &self.points
    }

    /// Point with 1-based label `i`.
    pub fn point(&self, label: usize) -> &RationalVector {
        &self.points[label - 1]
    }

    /// No three points are collinear.
    pub fn is_strictly_convex(&self) -> bool {
        (0..self.len()).all(|i| !self.is_flat(i))
    }

    /// Labels of points lying in the relative interior of a hull edge.
    pub fn edge_interior_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_flat(i)).map(|i| i + 1).collect()
    }

    pub fn area(&self) -> Rational {
        let o = &self.points[0];
        let twice = (1..self.len() - 1).fold(Rational::zero(), |acc, i| {
            acc + orientation(o, &self.points[i], &self.points[i + 1])
        });
        twice / rat(2)
    }

    pub fn triangle_area(&self, t: &[usize; 3]) -> Rational {
        orientation(self.point(t[0]), self.point(t[1]), self.point(t[2])).abs() / rat(2)
    }
}

fn within_segment(a: &RationalVector, b: &RationalVector, p: &RationalVector) -> bool {
    // p is known to be collinear with a, b.
    let t = (p.sub(a)).dot(&b.sub(a));
    t.is_positive() && t < b.sub(a).norm_squared()
}

/// Affine map `x -> A x + shift` of the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap2 {
    pub matrix: [[Rational; 2]; 2],
    pub shift: [Rational; 2],
}

impl AffineMap2 {
    pub fn identity() -> Self {
        AffineMap2 {
            matrix: [[rat(1), rat(0)], [rat(0), rat(1)]],
            shift: [rat(0), rat(0)],
        }
    }

    pub fn determinant(&self) -> Rational {
        let [[a, b], [c, d]] = &self.matrix;
        a * d - b * c
    }

    pub fn apply(&self, p: &RationalVector) -> RationalVector {
        let [[a, b], [c, d]] = &self.matrix;
        RationalVector::new(vec![
            a * &p[0] + b * &p[1] + &self.shift[0],
            c * &p[0] + d * &p[1] + &self.shift[1],
        ])
    }

    /// A random nonsingular map with small rational entries.
    pub fn random(rng: &mut impl Rng) -> Self {
        loop {
            let mut e = || ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            let map = AffineMap2 {
                matrix: [[e(), e()], [e(), e()]],
                shift: [e(), e()],
            };
            if !map.determinant().is_zero() {
                return map;
            }
        }
    }

    pub fn from_seed(seed: u64) -> Self {
        Self::random(&mut ChaCha8Rng::seed_from_u64(seed))
    }
}

/// Points `(t, t^2)` for `t = a + i b`, `i = 0..m`, transformed by `map` and
/// listed counterclockwise (the order is reversed when the map or the sign of
/// `b` makes it clockwise; the reversed list is again equally spaced).
pub fn parabola_config(
    m: usize,
    a: &Rational,
    b: &Rational,
    map: Option<&AffineMap2>,
) -> Result<PointConfig2D> {
    if m < 4 {
        return Err(Error::PolygonTooSmall(m, 4));
    }
    if b.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    let identity = AffineMap2::identity();
    let map = map.unwrap_or(&identity);
    if map.determinant().is_zero() {
        return Err(Error::SingularMap);
    }
    let mut points: Vec<RationalVector> = (0..m)
        .map(|i| {
            let t = a + b * rat(i as i64);
            let p = RationalVector::new(vec![t.clone(), &t * &t]);
            map.apply(&p)
        })
        .collect();
    if orientation(&points[0], &points[1], &points[2]).is_negative() {
        points.reverse();
    }
    PointConfig2D::new(points)
}

/// A triangle with the midpoint of each edge: six points in weakly convex
/// position, `(0,0),(1,0),(2,0),(1,1),(0,2),(0,1)`.
pub fn triangle_with_midpoints() -> PointConfig2D {
    PointConfig2D::new(
        [[0, 0], [1, 0], [2, 0], [1, 1], [0, 2], [0, 1]]
            .iter()
            .map(|p| RationalVector::from_ints(p))
            .collect(),
    )
    .expect("static configuration is weakly convex")
}

/// A strictly convex `m`-gon with rational vertices near the unit circle,
/// drawn from the seeded generator. Angles come from sorted rational tangent
/// half-angle parameters; radii are perturbed slightly so the points are not
/// concyclic. Perturbations that break strict convexity are resampled.
pub fn random_convex_polygon(m: usize, seed: u64) -> Result<PointConfig2D> {
    if m < 3 {
        return Err(Error::PolygonTooSmall(m, 3));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut params: Vec<i64> = Vec::with_capacity(m);
        while params.len() < m {
            let t = rng.gen_range(-4000..=4000);
            if !params.contains(&t) {
                params.push(t);
            }
        }
        params.sort_unstable();
        let points: Vec<RationalVector> = params
            .iter()
            .map(|&t| {
                let t = ratio(t, 1000);
                let denom = rat(1) + &t * &t;
                let r = ratio(10_000 - rng.gen_range(0..=200), 10_000);
                let x = (rat(1) - &t * &t) / &denom;
                let y = rat(2) * &t / &denom;
                RationalVector::new(vec![&r * x, r * y])
            })
            .collect();
        if let Ok(cfg) = PointConfig2D::new(points) {
            if cfg.is_strictly_convex() {
                return Ok(cfg);
            }
        }
    }
}

/// A triangulation of a [`PointConfig2D`]; edge-interior points may be unused.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConfigTriangulation {
    /// Sorted label triples, each sorted ascending.
    pub triangles: Vec<[usize; 3]>,
    pub used_points: Vec<usize>,
}

impl ConfigTriangulation {
    pub fn new(mut triangles: Vec<[usize; 3]>) -> Self {
        for t in &mut triangles {
            t.sort_unstable();
        }
        triangles.sort_unstable();
        let mut used_points: Vec<usize> = triangles.iter().flatten().copied().collect();
        used_points.sort_unstable();
        used_points.dedup();
        ConfigTriangulation {
            triangles,
            used_points,
        }
    }

    pub fn from_polygon(t: &Triangulation) -> Self {
        Self::new(t.triangles().to_vec())
    }

    /// Checks that the triangles are non-degenerate, meet face to face and
    /// cover the hull of `q`.
    pub fn validate(&self, q: &PointConfig2D) -> Result<()> {
        let m = q.len();
        let mut total = Rational::zero();
        for t in &self.triangles {
            if t.iter().any(|&l| l < 1 || l > m) || t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidTriangulation(format!(
                    "bad triangle {t:?} for {m} points"
                )));
            }
            let area = q.triangle_area(t);
            if area.is_zero() {
                return Err(Error::InvalidTriangulation(format!(
                    "triangle {t:?} is degenerate"
                )));
            }
            total += area;
        }
        for (i, s) in self.triangles.iter().enumerate() {
            for t in &self.triangles[i + 1..] {
                if !compatible(q, s, t) {
                    return Err(Error::InvalidTriangulation(format!(
                        "triangles {s:?} and {t:?} overlap"
                    )));
                }
            }
        }
        if total != q.area() {
            return Err(Error::InvalidTriangulation(
                "triangles do not cover the configuration".into(),
            ));
        }
        Ok(())
    }
}

fn ccw(q: &PointConfig2D, t: &[usize; 3]) -> [RationalVector; 3] {
    let (a, b, c) = (q.point(t[0]), q.point(t[1]), q.point(t[2]));
    if orientation(a, b, c).is_positive() {
        [a.clone(), b.clone(), c.clone()]
    } else {
        [a.clone(), c.clone(), b.clone()]
    }
}

fn in_closed_triangle(tri: &[RationalVector; 3], p: &RationalVector) -> bool {
    (0..3).all(|i| !orientation(&tri[i], &tri[(i + 1) % 3], p).is_negative())
}

fn separated(tri: &[RationalVector; 3], other: &[RationalVector; 3]) -> bool {
    (0..3).any(|i| {
        other
            .iter()
            .all(|p| !orientation(&tri[i], &tri[(i + 1) % 3], p).is_positive())
    })
}

/// Two non-degenerate triangles have disjoint interiors and intersect in a
/// common face.
pub(crate) fn compatible(q: &PointConfig2D, s: &[usize; 3], t: &[usize; 3]) -> bool {
    let (ps, pt) = (ccw(q, s), ccw(q, t));
    if !(separated(&ps, &pt) || separated(&pt, &ps)) {
        return false;
    }
    let touches_improperly = |tri: &[RationalVector; 3], labels: &[usize; 3], other: &[usize; 3]| {
        other
            .iter()
            .any(|&l| !labels.contains(&l) && in_closed_triangle(tri, q.point(l)))
    };
    !touches_improperly(&ps, s, t) && !touches_improperly(&pt, t, s)
}

/// Triangulations of the region bounded by the boundary chain `chain` and
/// the chord from its last point back to its first. A collinear chain bounds
/// nothing; its inner points are then unused points of a hull edge.
fn chain_triangulations(q: &PointConfig2D, chain: &[usize]) -> Vec<Vec<[usize; 3]>> {
    let (first, last) = (chain[0], chain[chain.len() - 1]);
    let flat = |c: usize| orientation(q.point(first), q.point(c), q.point(last)).is_zero();
    if chain[1..chain.len() - 1].iter().all(|&c| flat(c)) {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for ci in 1..chain.len() - 1 {
        let c = chain[ci];
        if flat(c) {
            continue;
        }
        let left = chain_triangulations(q, &chain[..=ci]);
        let right = chain_triangulations(q, &chain[ci..]);
        for l in &left {
            for r in &right {
                let mut tris = Vec::with_capacity(l.len() + r.len() + 1);
                tris.extend_from_slice(l);
                tris.extend_from_slice(r);
                tris.push([first, c, last]);
                out.push(tris);
            }
        }
    }
    out
}

/// All triangulations of a (weakly) convex configuration, in sorted order.
///
/// Fix a hull edge from corner `A` to corner `B`. Every triangulation has a
/// triangle on the segment `AB`, or, when the edge carries a point `F` that
/// is used, a triangle on `AF`. Each case recurses over the apex of that
/// triangle.
pub fn enumerate_config_triangulations(q: &PointConfig2D) -> Vec<ConfigTriangulation> {
    let m = q.len();
    let a = (0..m).find(|&i| !q.is_flat(i)).expect("at least 3 corners");
    let cyclic = |from: usize, len: usize| -> Vec<usize> {
        (0..len).map(|k| (from + k) % m + 1).collect()
    };
    let mut chains = Vec::new();
    if q.is_flat((a + 1) % m) {
        // Skip F, or start the boundary at F.
        chains.push(cyclic(a + 2, m - 1));
        chains.push(cyclic(a + 1, m));
    } else {
        chains.push(cyclic(a + 1, m));
    }
    let mut out: Vec<ConfigTriangulation> = chains
        .iter()
        .flat_map(|c| chain_triangulations(q, c))
        .map(ConfigTriangulation::new)
        .collect();
    out.sort();
    out
}

/// Triangulations of the configuration: the polygon enumeration when all
/// points are in strictly convex position, the exhaustive search otherwise.
pub(crate) fn config_triangulations(q: &PointConfig2D) -> Vec<ConfigTriangulation> {
    if q.is_strictly_convex() {
        enumerate_triangulations(q.len())
            .expect("configuration has at least 3 points")
            .iter()
            .map(ConfigTriangulation::from_polygon)
            .collect()
    } else {
        enumerate_config_triangulations(q)
    }
}
