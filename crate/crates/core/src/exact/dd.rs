//! Double description method for pointed polyhedral cones.
//!
//! Computes the extreme rays of `{ z : A z <= 0 }` for an integer matrix `A`
//! of full column rank, inserting one constraint at a time. All arithmetic is
//! on integers; rays are kept primitive.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{primitive, Rational, RationalMatrix, RationalVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b)
        })
    }
}

#[derive(Clone, Debug)]
struct Ray {
    coords: Vec<BigInt>,
    tight: BitSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of `{ z : rows * z <= 0 }` with, for each ray, the indices of
/// the rows it satisfies with equality.
///
/// Returns `None` when the cone is not pointed (rows do not have full column
/// rank).
pub fn extreme_rays(rows: &[Vec<BigInt>]) -> Option<Vec<(Vec<BigInt>, Vec<usize>)>> {
    let dim = rows.first()?.len();
    let nrows = rows.len();

    // Greedily pick `dim` independent rows for the initial simplicial cone.
    let mut basis_idx = Vec::with_capacity(dim);
    let mut basis_rows: Vec<RationalVector> = Vec::with_capacity(dim);
    for (i, row) in rows.iter().enumerate() {
        let candidate = RationalVector::new(row.iter().cloned().map(Rational::from_integer).collect());
        basis_rows.push(candidate);
        let rank = RationalMatrix::new(basis_rows.clone()).ok()?.rank();
        if rank == basis_rows.len() {
            basis_idx.push(i);
            if basis_idx.len() == dim {
                break;
            }
        } else {
            basis_rows.pop();
        }
    }
    if basis_idx.len() < dim {
        return None;
    }

    // Rays of the initial cone are the columns of -B^{-1}.
    let basis = RationalMatrix::new(basis_rows).ok()?;
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for k in 0..dim {
        let col = basis.solve(&RationalVector::unit(dim, k).neg())?;
        let coords = col.primitive_integer();
        let mut tight = BitSet::new(nrows);
        for (j, &bi) in basis_idx.iter().enumerate() {
            if j != k {
                tight.insert(bi);
            }
        }
        rays.push(Ray { coords, tight });
    }

    let mut in_basis = vec![false; nrows];
    for &i in &basis_idx {
        in_basis[i] = true;
    }

    for (ri, row) in rows.iter().enumerate() {
        if in_basis[ri] {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let mut negative = Vec::new();
        let mut positive = Vec::new();
        let mut zero = Vec::new();
        for (i, v) in values.iter().enumerate() {
            if v.is_zero() {
                zero.push(i);
            } else if v.is_negative() {
                negative.push(i);
            } else {
                positive.push(i);
            }
        }
        if positive.is_empty() {
            for &i in &zero {
                rays[i].tight.insert(ri);
            }
            continue;
        }

        let mut created = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let common = rays[p].tight.intersection(&rays[q].tight);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(r, ray)| {
                    r == p || r == q || !common.is_subset(&ray.tight)
                });
                if !adjacent {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(a, b)| vp * a + &vq * b)
                    .collect();
                let mut tight = common;
                tight.insert(ri);
                created.push(Ray {
                    coords: primitive(coords),
                    tight,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(negative.len() + zero.len() + created.len());
        for &i in &negative {
            next.push(rays[i].clone());
        }
        for &i in &zero {
            let mut r = rays[i].clone();
            r.tight.insert(ri);
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    Some(
        rays.into_iter()
            .map(|r| {
                let tight = r.tight.iter().collect();
                (r.coords, tight)
            })
            .collect(),
    )
}
