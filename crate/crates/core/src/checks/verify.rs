//! Decides whether a polytope is combinatorially the `n`-dimensional
//! associahedron by searching for an incidence isomorphism between its
//! facets and the diagonals of the `(n+3)`-gon.

use std::collections::HashMap;

use crate::exact::Polytope;
use crate::polygon::{abstract_associahedron, catalan, Diagonal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_associahedron: bool,
    pub dimension: usize,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub is_simple: bool,
    /// Facet index to diagonal, when an isomorphism was found.
    pub incidence_isomorphism: Option<Vec<Diagonal>>,
    pub failure_reason: Option<String>,
}

/// Facet signature: degree plus the sorted multiset of pairwise
/// intersection sizes with all other facets.
fn signatures(sets: &[Vec<usize>], universe: usize) -> (Vec<(usize, Vec<usize>)>, Vec<Vec<usize>>) {
    let mut member = vec![vec![false; universe]; sets.len()];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            member[i][v] = true;
        }
    }
    let inter: Vec<Vec<usize>> = (0..sets.len())
        .map(|i| {
            (0..sets.len())
                .map(|j| sets[j].iter().filter(|&&v| member[i][v]).count())
                .collect()
        })
        .collect();
    let sigs = (0..sets.len())
        .map(|i| {
            let mut row: Vec<usize> = (0..sets.len())
                .filter(|&j| j != i)
                .map(|j| inter[i][j])
                .collect();
            row.sort_unstable();
            (sets[i].len(), row)
        })
        .collect();
    (sigs, inter)
}

struct IsoSearch<'a> {
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    poly_inter: &'a [Vec<usize>],
    abs_inter: &'a [Vec<usize>],
    assignment: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let f = self.order[depth];
        for ci in 0..self.candidates[f].len() {
            let d = self.candidates[f][ci];
            if self.used[d] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&g| {
                let e = self.assignment[g].expect("earlier facets are assigned");
                self.poly_inter[f][g] == self.abs_inter[d][e]
            });
            if !consistent {
                continue;
            }
            self.assignment[f] = Some(d);
            self.used[d] = true;
            if self.run(depth + 1) {
                return true;
            }
            self.used[d] = false;
            self.assignment[f] = None;
        }
        false
    }
}

/// Checks, in order: dimension, facet count, vertex count, simplicity, and an
/// incidence isomorphism with the abstract associahedron of the
/// `(n+3)`-gon. The first failing check is recorded in `failure_reason`.
pub fn verify_associahedron(p: &Polytope, n: usize) -> VerificationReport {
    let mut report = VerificationReport {
        is_associahedron: false,
        dimension: p.intrinsic_dim,
        vertex_count: p.vertex_count(),
        facet_count: p.facet_count(),
        is_simple: false,
        incidence_isomorphism: None,
        failure_reason: None,
    };
    let vertex_facets = p.vertex_facets();
    report.is_simple = vertex_facets.iter().all(|fs| fs.len() == p.intrinsic_dim);

    let fail = |mut r: VerificationReport, reason: String| {
        r.failure_reason = Some(reason);
        r
    };
    if n == 0 {
        return fail(report, "dimension must be at least 1".into());
    }
    if p.intrinsic_dim != n {
        let reason = format!("dimension {} ≠ {}", p.intrinsic_dim, n);
        return fail(report, reason);
    }
    let expected_facets = n * (n + 3) / 2;
    if p.facet_count() != expected_facets {
        let reason = format!("facet count {} ≠ {}", p.facet_count(), expected_facets);
        return fail(report, reason);
    }
    let expected_vertices = catalan(n + 1);
    if p.vertex_count() as u128 != expected_vertices {
        let reason = format!("vertex count {} ≠ {}", p.vertex_count(), expected_vertices);
        return fail(report, reason);
    }
    if !report.is_simple {
        let (v, fs) = vertex_facets
            .iter()
            .enumerate()
            .find(|(_, fs)| fs.len() != n)
            .expect("some vertex is not simple");
        let reason = format!("vertex {v} lies on {} facets, expected {n}", fs.len());
        return fail(report, reason);
    }

    let abs = abstract_associahedron(n + 3).expect("n >= 1 gives a polygon with at least 4 sides");
    let poly_sets: Vec<Vec<usize>> = p.facets.iter().map(|f| f.vertices.clone()).collect();
    let (poly_sigs, poly_inter) = signatures(&poly_sets, p.vertex_count());
    let (abs_sigs, abs_inter) = signatures(&abs.incidence, abs.vertices.len());

    let candidates: Vec<Vec<usize>> = poly_sigs
        .iter()
        .map(|s| {
            (0..abs_sigs.len())
                .filter(|&d| abs_sigs[d] == *s)
                .collect()
        })
        .collect();
    if let Some(f) = candidates.iter().position(Vec::is_empty) {
        let reason = format!("facet {f} matches no diagonal by incidence signature");
        return fail(report, reason);
    }
    // Most constrained facets first.
    let mut order: Vec<usize> = (0..poly_sets.len()).collect();
    order.sort_by_key(|&f| (candidates[f].len(), f));

    let mut search = IsoSearch {
        order,
        candidates,
        poly_inter: &poly_inter,
        abs_inter: &abs_inter,
        assignment: vec![None; poly_sets.len()],
        used: vec![false; abs.facets.len()],
    };
    if !search.run(0) {
        return fail(report, "no incidence isomorphism to the associahedron".into());
    }
    let mapping: Vec<Diagonal> = search
        .assignment
        .iter()
        .map(|d| abs.facets[d.expect("complete assignment")])
        .collect();

    // Every vertex must map onto a distinct triangulation.
    let triangulations: HashMap<Vec<Diagonal>, usize> = abs
        .vertices
        .iter()
        .enumerate()
        .map(|(i, t)| (t.diagonals().to_vec(), i))
        .collect();
    let mut hit = vec![false; abs.vertices.len()];
    for (v, fs) in vertex_facets.iter().enumerate() {
        let mut diags: Vec<Diagonal> = fs.iter().map(|&f| mapping[f]).collect();
        diags.sort();
        match triangulations.get(&diags) {
            Some(&t) if !hit[t] => hit[t] = true,
            _ => {
                let reason = format!("vertex {v} does not map to a distinct triangulation");
                return fail(report, reason);
            }
        }
    }

    report.incidence_isomorphism = Some(mapping);
    report.is_associahedron = true;
    report
}
