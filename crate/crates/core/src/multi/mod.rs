//! The simplicial multiassociahedron `Δ(n,k)`: the complex of
//! `(k+1)`-crossing-free sets of `k`-relevant diagonals of a convex `n`-gon.
//! Its facets are the `k`-triangulations.

mod ground;

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix, RationalVector};
use crate::polygon::{catalan, segments_cross};
use ground::{members, CrossingSystem, Mask, MAX_GROUND};

/// Default cap on the number of facets for flip-graph construction.
pub const MAX_FACETS: u128 = 10_000;

/// A diagonal of the `n`-gon with at least `k` polygon vertices strictly on
/// each side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KDiagonal {
    a: usize,
    b: usize,
    n: usize,
    k: usize,
}

impl KDiagonal {
    pub fn new(x: usize, y: usize, n: usize, k: usize) -> Result<Self> {
        let (a, b) = (x.min(y), x.max(y));
        if a < 1 || b > n || !is_relevant(a, b, n, k) {
            return Err(Error::InvalidParameters(format!(
                "{a}-{b} is not a {k}-relevant diagonal of the {n}-gon"
            )));
        }
        Ok(KDiagonal { a, b, n, k })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn crosses(&self, other: &KDiagonal) -> bool {
        segments_cross(self.endpoints(), other.endpoints())
    }
}

impl fmt::Display for KDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n < 10 {
            write!(f, "{}{}", self.a, self.b)
        } else {
            write!(f, "{}-{}", self.a, self.b)
        }
    }
}

fn is_relevant(a: usize, b: usize, n: usize, k: usize) -> bool {
    let inside = b - a - 1;
    let outside = n - (b - a) - 1;
    inside >= k && outside >= k
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if k < 1 || n < 2 * k + 1 {
        return Err(Error::InvalidParameters(format!(
            "need k >= 1 and n >= 2k+1, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// The `n(n-2k-1)/2` relevant diagonals in lexicographic order.
pub fn relevant_diagonals(n: usize, k: usize) -> Result<Vec<KDiagonal>> {
    check_params(n, k)?;
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if is_relevant(a, b, n, k) {
                out.push(KDiagonal { a, b, n, k });
            }
        }
    }
    Ok(out)
}

/// Whether no `k + 1` diagonals of `s` are pairwise crossing.
pub fn is_k1_crossing_free(s: &[KDiagonal], k: usize) -> bool {
    fn clique(s: &[KDiagonal], chosen: &mut Vec<usize>, start: usize, size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        for i in start..s.len() {
            if chosen.iter().all(|&j| s[j].crosses(&s[i])) {
                chosen.push(i);
                if clique(s, chosen, i + 1, size) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    !clique(s, &mut Vec::new(), 0, k + 1)
}

/// A `k`-triangulation: a maximal `(k+1)`-crossing-free set of relevant
/// diagonals, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KTriangulation {
    pub diagonals: Vec<KDiagonal>,
}

impl fmt::Display for KTriangulation {
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

/// Face counts `f_0, f_1, ...` without the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// Dimension of the complex; `-1` for the complex whose only face is empty.
    pub fn dimension(&self) -> i64 {
        self.0.len() as i64 - 1
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub struct SimplicialComplexNK {
    pub n: usize,
    pub k: usize,
    pub vertices: Vec<KDiagonal>,
    pub facets: Vec<KTriangulation>,
}

impl SimplicialComplexNK {
    pub fn build(n: usize, k: usize) -> Result<Self> {
        let vertices = relevant_diagonals(n, k)?;
        let facets = enumerate_k_triangulations(n, k)?;
        Ok(SimplicialComplexNK {
            n,
            k,
            vertices,
            facets,
        })
    }

    /// `k(n - 2k - 1)`, the common facet size.
    pub fn expected_facet_size(&self) -> usize {
        self.k * (self.n - 2 * self.k - 1)
    }
}

fn relevant_system(n: usize, k: usize) -> Result<(Vec<KDiagonal>, CrossingSystem)> {
    let diags = relevant_diagonals(n, k)?;
    if diags.len() > MAX_GROUND {
        return Err(Error::InvalidParameters(format!(
            "{} relevant diagonals exceed the supported {MAX_GROUND}",
            diags.len()
        )));
    }
    let segs = diags.iter().map(KDiagonal::endpoints).collect();
    Ok((diags, CrossingSystem::new(segs, k)))
}

fn decode(diags: &[KDiagonal], set: Mask) -> KTriangulation {
    KTriangulation {
        diagonals: members(set).map(|i| diags[i]).collect(),
    }
}

/// All facets of `Δ(n,k)` in lexicographic order.
pub fn enumerate_k_triangulations(n: usize, k: usize) -> Result<Vec<KTriangulation>> {
    let (diags, system) = relevant_system(n, k)?;
    Ok(system
        .maximal_sets()
        .into_iter()
        .map(|s| decode(&diags, s))
        .collect())
}

/// Face counts of `Δ(n,k)` by number of diagonals.
pub fn f_vector(n: usize, k: usize) -> Result<FVector> {
    let (_, system) = relevant_system(n, k)?;
    let counts = system.face_counts();
    Ok(FVector(counts[1..].to_vec()))
}

/// Whether every facet has `k(n-2k-1)` diagonals; returns the dimension
/// `k(n-2k-1) - 1`.
pub fn purity_and_dimension_check(n: usize, k: usize) -> Result<(bool, i64)> {
    let facets = enumerate_k_triangulations(n, k)?;
    let size = k * (n - 2 * k - 1);
    let pure = facets.iter().all(|f| f.diagonals.len() == size);
    Ok((pure, size as i64 - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapoyleasPachReport {
    pub holds: bool,
    pub expected_size: usize,
    /// Distinct sizes of maximal sets found.
    pub sizes: Vec<usize>,
    pub maximal_sets: usize,
}

/// Enumerates every maximal `(k+1)`-crossing-free set of segments (edges
/// and all diagonals) of the `n`-gon and checks each has `k(2n-2k-1)`
/// elements.
pub fn capoyleas_pach(n: usize, k: usize) -> Result<CapoyleasPachReport> {
    check_params(n, k)?;
    if n * (n - 1) / 2 > MAX_GROUND {
        return Err(Error::InvalidParameters(format!(
            "{n}-gon has more than {MAX_GROUND} segments"
        )));
    }
    let mut segs = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            segs.push((a, b));
        }
    }
    let system = CrossingSystem::new(segs, k);
    let maximal = system.maximal_sets();
    let mut sizes: Vec<usize> = maximal.iter().map(|s| s.count_ones() as usize).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let expected_size = k * (2 * n - 2 * k - 1);
    Ok(CapoyleasPachReport {
        holds: sizes == [expected_size],
        expected_size,
        sizes,
        maximal_sets: maximal.len(),
    })
}

pub fn capoyleas_pach_check(n: usize, k: usize) -> Result<bool> {
    Ok(capoyleas_pach(n, k)?.holds)
}

#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub nodes: Vec<KTriangulation>,
    /// Pairs `(i, j)`, `i < j`, of facets sharing all but one diagonal.
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    /// Every ridge lies in exactly two facets, so each diagonal of each
    /// facet can be flipped.
    pub every_diagonal_flippable: bool,
}

impl FlipGraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }
}

/// Ridge adjacency graph on the facets of `Δ(n,k)`. Fails when the facet
/// count (by the determinant formula) exceeds `limit`.
pub fn flip_graph(n: usize, k: usize, limit: u128) -> Result<FlipGraph> {
    check_params(n, k)?;
    let expected = jonsson_count(n, k)?;
    if expected > limit {
        return Err(Error::InvalidParameters(format!(
            "Δ({n},{k}) has {expected} facets, above the limit of {limit}"
        )));
    }
    let (diags, system) = relevant_system(n, k)?;
    let facets = system.maximal_sets();

    let mut ridges: HashMap<Mask, Vec<usize>> = HashMap::new();
    for (fi, &f) in facets.iter().enumerate() {
        for i in members(f) {
            ridges.entry(f & !(1 << i)).or_default().push(fi);
        }
    }
    let mut edges = Vec::new();
    let mut every_diagonal_flippable = true;
    for owners in ridges.values() {
        if owners.len() != 2 {
            every_diagonal_flippable = false;
        }
        for (x, &i) in owners.iter().enumerate() {
            for &j in &owners[x + 1..] {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    let mut adj = vec![Vec::new(); facets.len()];
    for &(i, j) in &edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; facets.len()];
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
    Ok(FlipGraph {
        nodes: facets.into_iter().map(|s| decode(&diags, s)).collect(),
        edges,
        connected: seen.iter().all(|&s| s),
        every_diagonal_flippable,
    })
}

pub fn flip_graph_connected(n: usize, k: usize) -> Result<(bool, FlipGraph)> {
    let g = flip_graph(n, k, MAX_FACETS)?;
    Ok((g.connected, g))
}

/// `det(C_{n-i-j})` for `1 <= i, j <= k`, with `C_r = 0` for `r < 0`.
pub fn jonsson_count(n: usize, k: usize) -> Result<u128> {
    check_params(n, k)?;
    let cat = |r: i64| if r < 0 { 0 } else { catalan(r as usize) };
    let rows = (1..=k as i64)
        .map(|i| {
            RationalVector::new(
                (1..=k as i64)
                    .map(|j| {
                        Rational::from_integer(BigInt::from(cat(n as i64 - i - j)))
                    })
                    .collect(),
            )
        })
        .collect();
    let det = RationalMatrix::new(rows)?.determinant()?;
    det.to_integer()
        .to_u128()
        .ok_or_else(|| Error::InvalidParameters("determinant is negative".into()))
}

/// Facets of the cyclic polytope `C(vertices, dim)` by Gale's evenness
/// condition, as sorted 1-based label sets.
pub fn cyclic_polytope_facets(vertices: usize, dim: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = 1u64 << vertices;
    for mask in 0..total {
        if mask.count_ones() as usize != dim {
            continue;
        }
        let in_set = |i: usize| mask >> (i - 1) & 1 == 1;
        let outside: Vec<usize> = (1..=vertices).filter(|&i| !in_set(i)).collect();
        let even = outside.windows(2).all(|w| {
            let between = (w[0] + 1..w[1]).filter(|&l| in_set(l)).count();
            between % 2 == 0
        });
        if even {
            out.push((1..=vertices).filter(|&i| in_set(i)).collect());
        }
    }
    out.sort();
    out
}

/// f-vector of the boundary complex of `C(2k+3, 2k)`.
pub fn cyclic_polytope_boundary_fvector(k: usize) -> Result<FVector> {
    if k < 1 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let (verts, dim) = (2 * k + 3, 2 * k);
    let mut faces: HashSet<u64> = HashSet::new();
    for facet in cyclic_polytope_facets(verts, dim) {
        let fmask: u64 = facet.iter().fold(0, |m, &i| m | 1 << (i - 1));
        // All nonempty subsets of the facet.
        let mut sub = fmask;
        while sub != 0 {
            faces.insert(sub);
            sub = (sub - 1) & fmask;
        }
    }
    let mut counts = vec![0u64; dim];
    for f in faces {
        counts[f.count_ones() as usize - 1] += 1;
    }
    Ok(FVector(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kd(a: usize, b: usize, n: usize, k: usize) -> KDiagonal {
        KDiagonal::new(a, b, n, k).unwrap()
    }

    #[test]
    fn relevant_diagonal_examples() {
        let d = relevant_diagonals(6, 2).unwrap();
        assert_eq!(d, vec![kd(1, 4, 6, 2), kd(2, 5, 6, 2), kd(3, 6, 6, 2)]);
        assert!(relevant_diagonals(5, 2).unwrap().is_empty());
        assert_eq!(relevant_diagonals(6, 1).unwrap().len(), 9);
        assert!(relevant_diagonals(4, 2).is_err());
        assert!(relevant_diagonals(5, 0).is_err());
        for n in 3..=12 {
            for k in 1..=(n - 1) / 2 {
                assert_eq!(
                    relevant_diagonals(n, k).unwrap().len(),
                    n * (n - 2 * k - 1) / 2
                );
            }
        }
    }

    #[test]
    fn crossing_free_examples() {
        let (a, b, c) = (kd(1, 4, 6, 2), kd(2, 5, 6, 2), kd(3, 6, 6, 2));
        assert!(is_k1_crossing_free(&[a, b], 2));
        assert!(!is_k1_crossing_free(&[a, b, c], 2));
        assert!(is_k1_crossing_free(&[], 2));
    }

    #[test]
    fn hexagon_two_triangulations() {
        let facets = enumerate_k_triangulations(6, 2).unwrap();
        let shown: Vec<String> = facets.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, vec!["{14,25}", "{14,36}", "{25,36}"]);
        assert_eq!(f_vector(6, 2).unwrap(), FVector(vec![3, 3]));
        assert_eq!(purity_and_dimension_check(6, 2).unwrap(), (true, 1));
    }

    #[test]
    fn point_case() {
        assert_eq!(
            enumerate_k_triangulations(7, 3).unwrap(),
            vec![KTriangulation { diagonals: vec![] }]
        );
        assert_eq!(f_vector(7, 3).unwrap(), FVector(vec![]));
        assert_eq!(purity_and_dimension_check(7, 3).unwrap(), (true, -1));
    }

    #[test]
    fn simplex_boundary_case() {
        for k in 1..=4 {
            let facets = enumerate_k_triangulations(2 * k + 2, k).unwrap();
            assert_eq!(facets.len(), k + 1);
            assert!(facets.iter().all(|f| f.diagonals.len() == k));
        }
    }

    #[test]
    fn dual_associahedron_fvector() {
        // 9 diagonals, 21 non-crossing pairs, 14 triangulations.
        assert_eq!(f_vector(6, 1).unwrap(), FVector(vec![9, 21, 14]));
    }

    #[test]
    fn jonsson_examples() {
        assert_eq!(jonsson_count(6, 2).unwrap(), 3);
        assert_eq!(jonsson_count(9, 2).unwrap(), 594);
        assert_eq!(jonsson_count(6, 1).unwrap(), 14);
        assert_eq!(jonsson_count(7, 3).unwrap(), 1);
    }

    #[test]
    fn gale_evenness_small() {
        assert_eq!(cyclic_polytope_boundary_fvector(1).unwrap(), FVector(vec![5, 5]));
        // C(6,3) has 2(6-3) = 8 facets.
        assert_eq!(cyclic_polytope_facets(6, 3).len(), 8);
    }

    #[test]
    fn capoyleas_pach_small() {
        let r = capoyleas_pach(6, 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.expected_size, 14);
        let r = capoyleas_pach(5, 2).unwrap();
        assert_eq!((r.holds, r.expected_size, r.maximal_sets), (true, 10, 1));
        let r = capoyleas_pach(6, 1).unwrap();
        assert_eq!((r.holds, r.expected_size, r.maximal_sets), (true, 9, 14));
    }

    #[test]
    fn flip_graph_small() {
        let (connected, g) = flip_graph_connected(6, 2).unwrap();
        assert!(connected);
        assert_eq!((g.nodes.len(), g.edges.len()), (3, 3));
        let (connected, g) = flip_graph_connected(6, 1).unwrap();
        assert!(connected);
        assert_eq!((g.nodes.len(), g.edges.len()), (14, 21));
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(g.every_diagonal_flippable);
    }

    #[test]
    fn flip_graph_guard() {
        assert!(flip_graph(12, 1, 1000).is_err());
    }
}
