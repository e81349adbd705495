//! Combinatorics of a convex polygon with vertices labeled `1..=m` in cyclic
//! order: diagonals, crossings, triangulations and flips.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// The `r`-th Catalan number.
pub fn catalan(r: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..r as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// A diagonal `{a, b}` of the `m`-gon, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    a: usize,
    b: usize,
}

impl Diagonal {
    pub fn new(x: usize, y: usize, m: usize) -> Result<Self> {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        if a < 1 || b > m || b - a < 2 || (a == 1 && b == m) {
            return Err(Error::InvalidDiagonal(x, y, m));
        }
        Ok(Diagonal { a, b })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 10 {
            write!(f, "{}{}", self.a, self.b)
        } else {
            write!(f, "{}-{}", self.a, self.b)
        }
    }
}

/// Whether two segments with endpoints on a convex polygon cross in their
/// relative interiors. Shared endpoints do not count as crossings.
pub fn segments_cross((a1, b1): (usize, usize), (a2, b2): (usize, usize)) -> bool {
    let (a1, b1) = (a1.min(b1), a1.max(b1));
    let (a2, b2) = (a2.min(b2), a2.max(b2));
    (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)
}

pub fn crossing(d1: &Diagonal, d2: &Diagonal) -> bool {
    segments_cross(d1.endpoints(), d2.endpoints())
}

/// All `m(m-3)/2` diagonals, ordered lexicographically by endpoints.
pub fn diagonals(m: usize) -> Result<Vec<Diagonal>> {
    if m < 4 {
        return Err(Error::PolygonTooSmall(m, 4));
    }
    let mut out = Vec::with_capacity(m * (m - 3) / 2);
    for a in 1..=m {
        for b in a + 2..=m {
            if !(a == 1 && b == m) {
                out.push(Diagonal { a, b });
            }
        }
    }
    Ok(out)
}

/// A triangulation of the convex `m`-gon.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    m: usize,
    triangles: Vec<[usize; 3]>,
    diagonals: Vec<Diagonal>,
}

impl Triangulation {
    /// Builds a triangulation from its `m - 3` pairwise non-crossing diagonals.
    pub fn from_diagonals(m: usize, diagonals: &[Diagonal]) -> Result<Self> {
        if m < 3 {
            return Err(Error::PolygonTooSmall(m, 3));
        }
        let mut diags: Vec<Diagonal> = diagonals.to_vec();
        diags.sort();
        diags.dedup();
        if diags.len() != m - 3 {
            return Err(Error::InvalidTriangulation(format!(
                "expected {} diagonals, got {}",
                m - 3,
                diags.len()
            )));
        }
        for d in &diags {
            Diagonal::new(d.a, d.b, m)?;
        }
        for (i, d) in diags.iter().enumerate() {
            if let Some(e) = diags[i + 1..].iter().find(|e| crossing(d, e)) {
                return Err(Error::InvalidTriangulation(format!("{d} crosses {e}")));
            }
        }
        let present: BTreeSet<(usize, usize)> = diags.iter().map(Diagonal::endpoints).collect();
        let side = |x: usize, y: usize| y == x + 1 || (x == 1 && y == m) || present.contains(&(x, y));
        let mut triangles = Vec::with_capacity(m - 2);
        for i in 1..=m {
            for j in i + 1..=m {
                if !side(i, j) {
                    continue;
                }
                for k in j + 1..=m {
                    if side(j, k) && side(i, k) {
                        triangles.push([i, j, k]);
                    }
                }
            }
        }
        debug_assert_eq!(triangles.len(), m - 2);
        Ok(Triangulation {
            m,
            triangles,
            diagonals: diags,
        })
    }

    fn from_triangles(m: usize, mut triangles: Vec<[usize; 3]>) -> Self {
        for t in &mut triangles {
            t.sort_unstable();
        }
        triangles.sort_unstable();
        let mut diagonals: Vec<Diagonal> = triangles
            .iter()
            .flat_map(|&[i, j, k]| [(i, j), (j, k), (i, k)])
            .filter_map(|(x, y)| Diagonal::new(x, y, m).ok())
            .collect();
        diagonals.sort();
        diagonals.dedup();
        Triangulation {
            m,
            triangles,
            diagonals,
        }
    }

    pub fn polygon_size(&self) -> usize {
        self.m
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.binary_search(d).is_ok()
    }

    /// Replaces `d` by the other diagonal of the quadrilateral formed by the
    /// two triangles adjacent to `d`.
    pub fn flip(&self, d: &Diagonal) -> Result<Triangulation> {
        if !self.contains(d) {
            return Err(Error::DiagonalNotPresent(d.to_string()));
        }
        let (a, b) = d.endpoints();
        let apexes: Vec<usize> = self
            .triangles
            .iter()
            .filter(|t| t.contains(&a) && t.contains(&b))
            .map(|t| t.iter().copied().find(|&v| v != a && v != b).unwrap())
            .collect();
        debug_assert_eq!(apexes.len(), 2);
        let new = Diagonal::new(apexes[0], apexes[1], self.m)?;
        let diags: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|e| if e == d { new } else { *e })
            .collect();
        Triangulation::from_diagonals(self.m, &diags)
    }

    /// All triangulations reachable by a single flip, paired with the removed
    /// diagonal.
    pub fn flips(&self) -> Vec<(Diagonal, Triangulation)> {
        self.diagonals
            .iter()
            .map(|d| (*d, self.flip(d).expect("diagonal belongs to triangulation")))
            .collect()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.diagonals.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

fn triangulate_range(lo: usize, hi: usize, out: &mut Vec<Vec<[usize; 3]>>) {
    if hi - lo < 2 {
        out.push(Vec::new());
        return;
    }
    // The edge (lo, hi) lies in exactly one triangle; choose its apex.
    for apex in lo + 1..hi {
        let mut left = Vec::new();
        triangulate_range(lo, apex, &mut left);
        let mut right = Vec::new();
        triangulate_range(apex, hi, &mut right);
        for l in &left {
            for r in &right {
                let mut t = Vec::with_capacity(l.len() + r.len() + 1);
                t.push([lo, apex, hi]);
                t.extend_from_slice(l);
                t.extend_from_slice(r);
                out.push(t);
            }
        }
    }
}

/// All `Catalan(m - 2)` triangulations of the convex `m`-gon.
pub fn enumerate_triangulations(m: usize) -> Result<Vec<Triangulation>> {
    if m < 3 {
        return Err(Error::PolygonTooSmall(m, 3));
    }
    let mut raw = Vec::new();
    triangulate_range(1, m, &mut raw);
    Ok(raw
        .into_iter()
        .map(|t| Triangulation::from_triangles(m, t))
        .collect())
}

/// The face lattice data of the associahedron at the vertex/facet level.
#[derive(Clone, Debug)]
pub struct AbstractAssociahedron {
    pub m: usize,
    pub vertices: Vec<Triangulation>,
    pub facets: Vec<Diagonal>,
    /// For each facet, the sorted indices of triangulations using it.
    pub incidence: Vec<Vec<usize>>,
}

impl AbstractAssociahedron {
    pub fn dimension(&self) -> usize {
        self.m - 3
    }

    /// Edges of the flip graph as index pairs `(i, j)` with `i < j`.
    pub fn flip_edges(&self) -> Vec<(usize, usize)> {
        let index: HashMap<&Triangulation, usize> =
            self.vertices.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut edges = Vec::new();
        for (i, t) in self.vertices.iter().enumerate() {
            for (_, u) in t.flips() {
                let j = index[&u];
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        edges
    }
}

pub fn abstract_associahedron(m: usize) -> Result<AbstractAssociahedron> {
    let facets = diagonals(m)?;
    let vertices = enumerate_triangulations(m)?;
    let index: HashMap<Diagonal, usize> = facets.iter().enumerate().map(|(i, d)| (*d, i)).collect();
    let mut incidence = vec![Vec::new(); facets.len()];
    for (vi, t) in vertices.iter().enumerate() {
        for d in t.diagonals() {
            incidence[index[d]].push(vi);
        }
    }
    Ok(AbstractAssociahedron {
        m,
        vertices,
        facets,
        incidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: usize, b: usize, m: usize) -> Diagonal {
        Diagonal::new(a, b, m).unwrap()
    }

    /// Catalan numbers by the convolution recurrence, independent of `catalan`.
    fn catalan_recurrence(n: usize) -> Vec<u128> {
        let mut c = vec![1u128];
        for k in 1..=n {
            c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
        }
        c
    }

    #[test]
    fn catalan_matches_recurrence() {
        let rec = catalan_recurrence(20);
        for (r, &expected) in rec.iter().enumerate() {
            assert_eq!(catalan(r), expected);
        }
    }

    #[test]
    fn diagonal_lists() {
        assert_eq!(diagonals(4).unwrap(), vec![d(1, 3, 4), d(2, 4, 4)]);
        assert_eq!(diagonals(5).unwrap().len(), 5);
        let hex = diagonals(6).unwrap();
        assert_eq!(hex.len(), 9);
        for (a, b) in [(1, 4), (2, 5), (3, 6)] {
            assert!(hex.contains(&d(a, b, 6)));
        }
        assert_eq!(diagonals(3), Err(Error::PolygonTooSmall(3, 4)));
        assert!(Diagonal::new(1, 6, 6).is_err());
        assert!(Diagonal::new(2, 3, 6).is_err());
    }

    #[test]
    fn crossing_examples() {
        assert!(crossing(&d(1, 4, 6), &d(2, 5, 6)));
        assert!(!crossing(&d(1, 4, 6), &d(4, 6, 6)));
        assert!(!crossing(&d(1, 3, 6), &d(4, 6, 6)));
        let all = diagonals(7).unwrap();
        for x in &all {
            assert!(!crossing(x, x));
            for y in &all {
                assert_eq!(crossing(x, y), crossing(y, x));
            }
        }
    }

    #[test]
    fn triangulation_counts_follow_catalan() {
        let rec = catalan_recurrence(8);
        for m in 3..=10 {
            let ts = enumerate_triangulations(m).unwrap();
            assert_eq!(ts.len() as u128, rec[m - 2], "m = {m}");
            let unique: BTreeSet<_> = ts.iter().collect();
            assert_eq!(unique.len(), ts.len());
            for t in &ts {
                assert_eq!(t.diagonals().len(), m - 3);
                assert_eq!(t.triangles().len(), m - 2);
            }
        }
    }

    #[test]
    fn triangles_tile_the_polygon() {
        let m = 7;
        for t in enumerate_triangulations(m).unwrap() {
            let mut uses: HashMap<(usize, usize), usize> = HashMap::new();
            for &[i, j, k] in t.triangles() {
                for e in [(i, j), (j, k), (i, k)] {
                    *uses.entry(e).or_default() += 1;
                }
            }
            for (&(x, y), &count) in &uses {
                let boundary = y == x + 1 || (x == 1 && y == m);
                assert_eq!(count, if boundary { 1 } else { 2 });
            }
            assert_eq!(uses.len(), m + (m - 3));
        }
    }

    #[test]
    fn flips_on_small_polygons() {
        let t = Triangulation::from_diagonals(4, &[d(1, 3, 4)]).unwrap();
        let u = t.flip(&d(1, 3, 4)).unwrap();
        assert_eq!(u.diagonals(), &[d(2, 4, 4)]);
        assert_eq!(u.flip(&d(2, 4, 4)).unwrap(), t);
        assert!(matches!(t.flip(&d(2, 4, 4)), Err(Error::DiagonalNotPresent(_))));

        // Pentagon: every triangulation has two flips and the flip graph is a 5-cycle.
        let a = abstract_associahedron(5).unwrap();
        let edges = a.flip_edges();
        assert_eq!(edges.len(), 5);
        let mut degree = [0; 5];
        for &(i, j) in &edges {
            degree[i] += 1;
            degree[j] += 1;
        }
        assert!(degree.iter().all(|&x| x == 2));
    }

    #[test]
    fn flip_graph_is_regular_and_connected() {
        for m in 4..=8 {
            let a = abstract_associahedron(m).unwrap();
            let n = a.vertices.len();
            let mut adj = vec![Vec::new(); n];
            for (i, j) in a.flip_edges() {
                adj[i].push(j);
                adj[j].push(i);
            }
            assert!(adj.iter().all(|x| x.len() == m - 3));
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn abstract_associahedron_shapes() {
        let a4 = abstract_associahedron(4).unwrap();
        assert_eq!((a4.vertices.len(), a4.facets.len()), (2, 2));
        assert!(a4.incidence.iter().all(|s| s.len() == 1));

        let a5 = abstract_associahedron(5).unwrap();
        assert_eq!((a5.vertices.len(), a5.facets.len()), (5, 5));
        assert!(a5.incidence.iter().all(|s| s.len() == 2));

        let a6 = abstract_associahedron(6).unwrap();
        assert_eq!((a6.vertices.len(), a6.facets.len()), (14, 9));
        let mut per_vertex = vec![0; 14];
        for s in &a6.incidence {
            for &v in s {
                per_vertex[v] += 1;
            }
        }
        assert!(per_vertex.iter().all(|&c| c == 3));
    }
}
