//! Crossing-free set enumeration over a ground set of at most 128 segments
//! of a convex polygon, using bitmasks.

use rayon::prelude::*;

use crate::polygon::segments_cross;

pub(crate) type Mask = u128;

pub(crate) const MAX_GROUND: usize = 128;

#[derive(Clone, Debug)]
pub(crate) struct CrossingSystem {
    pub segments: Vec<(usize, usize)>,
    cross: Vec<Mask>,
    /// Faces are sets without a `(k+1)`-crossing.
    k: usize,
}

impl CrossingSystem {
    pub fn new(segments: Vec<(usize, usize)>, k: usize) -> Self {
        assert!(segments.len() <= MAX_GROUND, "ground set exceeds {MAX_GROUND} segments");
        let cross = segments
            .iter()
            .map(|&s| {
                segments
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| segments_cross(s, t))
                    .fold(0, |m, (j, _)| m | 1 << j)
            })
            .collect();
        CrossingSystem { segments, cross, k }
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    /// Whether `cand` contains `size` pairwise crossing segments.
    fn has_clique(&self, cand: Mask, size: usize) -> bool {
        if size == 0 {
            return true;
        }
        let mut cand = cand;
        while cand.count_ones() as usize >= size {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.has_clique(cand & self.cross[v], size - 1) {
                return true;
            }
        }
        false
    }

    /// Adding segment `i` to the crossing-free set `set` keeps it crossing-free.
    pub fn can_add(&self, set: Mask, i: usize) -> bool {
        !self.has_clique(set & self.cross[i], self.k)
    }

    #[cfg(test)]
    pub fn is_free(&self, set: Mask) -> bool {
        !self.has_clique(set, self.k + 1)
    }

    pub fn is_maximal(&self, set: Mask) -> bool {
        (0..self.len()).all(|i| set >> i & 1 == 1 || !self.can_add(set, i))
    }

    fn walk<F: FnMut(Mask)>(&self, set: Mask, start: usize, visit: &mut F) {
        visit(set);
        for i in start..self.len() {
            if self.can_add(set, i) {
                self.walk(set | 1 << i, i + 1, visit);
            }
        }
    }

    /// Visits every nonempty crossing-free set whose smallest element is
    /// `first`, in lexicographic order of the sorted element lists.
    pub fn walk_branch<F: FnMut(Mask)>(&self, first: usize, visit: &mut F) {
        self.walk(1 << first, first + 1, visit);
    }

    /// Number of crossing-free sets by cardinality, index 0 being the empty set.
    pub fn face_counts(&self) -> Vec<u64> {
        let per_branch: Vec<Vec<u64>> = (0..self.len())
            .into_par_iter()
            .map(|first| {
                let mut counts = vec![0u64; self.len() + 1];
                self.walk_branch(first, &mut |s| counts[s.count_ones() as usize] += 1);
                counts
            })
            .collect();
        let mut total = vec![0u64; self.len() + 1];
        total[0] = 1;
        for counts in per_branch {
            for (t, c) in total.iter_mut().zip(counts) {
                *t += c;
            }
        }
        while total.len() > 1 && *total.last().unwrap() == 0 {
            total.pop();
        }
        total
    }

    /// All maximal crossing-free sets, in lexicographic order.
    pub fn maximal_sets(&self) -> Vec<Mask> {
        if self.len() == 0 {
            return vec![0];
        }
        let per_branch: Vec<Vec<Mask>> = (0..self.len())
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::new();
                self.walk_branch(first, &mut |s| {
                    if self.is_maximal(s) {
                        out.push(s);
                    }
                });
                out
            })
            .collect();
        per_branch.into_iter().flatten().collect()
    }
}

pub(crate) fn members(set: Mask) -> impl Iterator<Item = usize> {
    let mut s = set;
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximal_sets_are_free_and_saturated() {
        // All 15 segments of a hexagon, 2-crossing-free.
        let segs: Vec<(usize, usize)> = (1..=6)
            .flat_map(|a| (a + 1..=6).map(move |b| (a, b)))
            .collect();
        let sys = CrossingSystem::new(segs, 1);
        let max = sys.maximal_sets();
        assert_eq!(max.len(), 14);
        for &m in &max {
            assert!(sys.is_free(m));
            assert_eq!(m.count_ones(), 9);
            assert_eq!(members(m).count(), 9);
        }
        let counts = sys.face_counts();
        assert_eq!(counts[0], 1);
        assert_eq!(counts.len(), 10);
    }
}
