use std::collections::{BTreeSet, HashSet};

use assoc_core::multi::{
    cyclic_polytope_boundary_fvector, enumerate_k_triangulations, f_vector, flip_graph,
    is_k1_crossing_free, jonsson_count, relevant_diagonals, KDiagonal, MAX_FACETS,
};
use assoc_core::polygon::enumerate_triangulations;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Faces of the dual associahedron boundary: all subsets of triangulations.
fn triangulation_subset_counts(n: usize) -> Vec<u64> {
    let mut faces: HashSet<Vec<(usize, usize)>> = HashSet::new();
    for t in enumerate_triangulations(n).unwrap() {
        let d: Vec<(usize, usize)> = t.diagonals().iter().map(|d| d.endpoints()).collect();
        for mask in 1u32..1 << d.len() {
            let face = (0..d.len()).filter(|i| mask >> i & 1 == 1).map(|i| d[i]).collect();
            faces.insert(face);
        }
    }
    let mut counts = vec![0u64; n - 3];
    for f in faces {
        counts[f.len() - 1] += 1;
    }
    counts
}

/// All (k+1)-crossing-free subsets by brute force over the power set.
fn brute_force_sizes(n: usize, k: usize) -> (usize, Vec<BTreeSet<KDiagonal>>) {
    let diags = relevant_diagonals(n, k).unwrap();
    let free: Vec<BTreeSet<KDiagonal>> = (0u32..1 << diags.len())
        .map(|mask| {
            (0..diags.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| diags[i])
                .collect::<Vec<_>>()
        })
        .filter(|s| is_k1_crossing_free(s, k))
        .map(|s| s.into_iter().collect())
        .collect();
    let largest = free.iter().map(BTreeSet::len).max().unwrap();
    let maximal = free
        .iter()
        .filter(|s| {
            diags
                .iter()
                .filter(|d| !s.contains(d))
                .all(|d| {
                    let mut bigger: Vec<KDiagonal> = s.iter().copied().collect();
                    bigger.push(*d);
                    !is_k1_crossing_free(&bigger, k)
                })
        })
        .cloned()
        .collect();
    (largest, maximal)
}

fn relabel(n: usize, k: usize, f: impl Fn(usize) -> usize) -> impl Fn(&[KDiagonal]) -> BTreeSet<KDiagonal> {
    move |ds| {
        ds.iter()
            .map(|d| {
                let (a, b) = d.endpoints();
                KDiagonal::new(f(a), f(b), n, k).unwrap()
            })
            .collect()
    }
}

#[test]
fn triangulation_complex_matches_polygon_combinatorics() {
    for n in 5..=8 {
        assert_eq!(f_vector(n, 1).unwrap().0, triangulation_subset_counts(n), "n = {n}");
    }
}

#[test]
fn jonsson_matches_enumeration() {
    for k in 1..=3 {
        for n in 2 * k + 1..=10 {
            let facets = enumerate_k_triangulations(n, k).unwrap();
            assert_eq!(jonsson_count(n, k).unwrap(), facets.len() as u128, "({n},{k})");
        }
    }
}

#[test]
fn facets_are_exactly_the_largest_free_sets() {
    for (n, k) in [(5, 1), (6, 1), (7, 1), (8, 1), (6, 2), (7, 2), (8, 2), (9, 2), (8, 3), (9, 3)] {
        let (largest, maximal) = brute_force_sizes(n, k);
        assert_eq!(largest, k * (n - 2 * k - 1), "({n},{k})");
        let enumerated: Vec<BTreeSet<KDiagonal>> = enumerate_k_triangulations(n, k)
            .unwrap()
            .into_iter()
            .map(|t| t.diagonals.into_iter().collect())
            .collect();
        let mut maximal = maximal;
        maximal.sort();
        assert_eq!(enumerated, maximal, "({n},{k})");
    }
}

#[test]
fn facets_are_symmetric_under_dihedral_relabeling() {
    for (n, k) in [(7, 1), (8, 2), (9, 2), (9, 3)] {
        let facets: BTreeSet<BTreeSet<KDiagonal>> = enumerate_k_triangulations(n, k)
            .unwrap()
            .into_iter()
            .map(|t| t.diagonals.into_iter().collect())
            .collect();
        let rotate = relabel(n, k, |i| i % n + 1);
        let reflect = relabel(n, k, |i| n + 1 - i);
        for map in [&rotate as &dyn Fn(&[KDiagonal]) -> BTreeSet<KDiagonal>, &reflect] {
            let image: BTreeSet<BTreeSet<KDiagonal>> = facets
                .iter()
                .map(|f| map(&f.iter().copied().collect::<Vec<_>>()))
                .collect();
            assert_eq!(image, facets, "({n},{k})");
        }
    }
}

#[test]
fn flip_graphs_are_connected_pseudomanifolds() {
    for (n, k) in [(5, 1), (7, 1), (8, 1), (6, 2), (7, 2), (8, 2), (9, 2), (8, 3), (9, 3), (7, 3)] {
        let g = flip_graph(n, k, MAX_FACETS).unwrap();
        assert!(g.connected, "({n},{k})");
        if n > 2 * k + 1 {
            assert!(g.every_diagonal_flippable, "({n},{k})");
            let size = k * (n - 2 * k - 1);
            assert!(g.degrees().iter().all(|&d| d == size), "({n},{k})");
        }
    }
}

#[test]
fn cyclic_special_case() {
    for k in 1..=3 {
        assert_eq!(f_vector(2 * k + 3, k).unwrap(), cyclic_polytope_boundary_fvector(k).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Greedy extension of a random face in random order always reaches a
    /// facet of the common size.
    #[test]
    fn every_face_extends_to_a_facet(k in 1usize..=3, extra in 1usize..=3, seed in any::<u64>()) {
        let n = 2 * k + 1 + extra;
        let mut diags = relevant_diagonals(n, k).unwrap();
        diags.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut face: Vec<KDiagonal> = Vec::new();
        for d in &diags {
            face.push(*d);
            if !is_k1_crossing_free(&face, k) {
                face.pop();
            }
        }
        prop_assert_eq!(face.len(), k * (n - 2 * k - 1));
    }
}
