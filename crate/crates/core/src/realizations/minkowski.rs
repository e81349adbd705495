//! Weighted Minkowski sums of the simplices `conv{e_i, ..., e_j}` over the
//! intervals of `{1, ..., n+1}` (Loday-type realization).

use std::collections::BTreeMap;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{convex_hull, Polytope, Rational, RationalVector};

/// All intervals `[i, j]`, `1 <= i < j <= n+1`, in lexicographic order.
pub fn minkowski_intervals(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            out.push((i, j));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinkowskiParams {
    n: usize,
    alpha: BTreeMap<(usize, usize), Rational>,
}

impl MinkowskiParams {
    pub fn new(n: usize, alpha: BTreeMap<(usize, usize), Rational>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameters("n must be at least 1".into()));
        }
        let intervals = minkowski_intervals(n);
        for key in alpha.keys() {
            if !intervals.contains(key) {
                return Err(Error::InvalidParameters(format!(
                    "[{},{}] is not an interval of 1..={}",
                    key.0,
                    key.1,
                    n + 1
                )));
            }
        }
        for iv in &intervals {
            match alpha.get(iv) {
                None => {
                    return Err(Error::InvalidParameters(format!(
                        "missing alpha for [{},{}]",
                        iv.0, iv.1
                    )))
                }
                Some(a) if !a.is_positive() => {
                    return Err(Error::InvalidParameters(format!(
                        "alpha[{},{}] must be positive",
                        iv.0, iv.1
                    )))
                }
                _ => {}
            }
        }
        Ok(MinkowskiParams { n, alpha })
    }

    /// The same weight on every interval.
    pub fn uniform(n: usize, value: Rational) -> Result<Self> {
        let alpha = minkowski_intervals(n)
            .into_iter()
            .map(|iv| (iv, value.clone()))
            .collect();
        Self::new(n, alpha)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.alpha
    }
}

fn scaled_simplex(dim: usize, (i, j): (usize, usize), alpha: &Rational) -> Vec<RationalVector> {
    (i..=j)
        .map(|l| RationalVector::unit(dim, l - 1).scale(alpha))
        .collect()
}

/// Vertices of the Minkowski sum of two point sets' hulls.
pub fn minkowski_sum(a: &[RationalVector], b: &[RationalVector]) -> Result<Polytope> {
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            sums.push(p.add(q));
        }
    }
    convex_hull(&sums)
}

/// Sums the simplices in the given interval order, reducing to the vertex set
/// of the partial sum after each step.
pub fn minkowski_associahedron_in_order(
    p: &MinkowskiParams,
    order: &[(usize, usize)],
) -> Result<Polytope> {
    let dim = p.n + 1;
    let mut current = convex_hull(&[RationalVector::zeros(dim)])?;
    for iv in order {
        let alpha = p.alpha.get(iv).ok_or_else(|| {
            Error::InvalidParameters(format!("unknown interval [{},{}]", iv.0, iv.1))
        })?;
        current = minkowski_sum(&current.vertices, &scaled_simplex(dim, *iv, alpha))?;
    }
    Ok(current)
}

pub fn minkowski_associahedron(p: &MinkowskiParams) -> Result<Polytope> {
    minkowski_associahedron_in_order(p, &minkowski_intervals(p.n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn segment_for_n_one() {
        let p = MinkowskiParams::uniform(1, rat(1)).unwrap();
        let poly = minkowski_associahedron(&p).unwrap();
        assert_eq!(
            poly.vertices,
            vec![RationalVector::from_ints(&[0, 1]), RationalVector::from_ints(&[1, 0])]
        );
        assert_eq!(poly.intrinsic_dim, 1);
    }

    #[test]
    fn small_counts() {
        let pent = minkowski_associahedron(&MinkowskiParams::uniform(2, rat(1)).unwrap()).unwrap();
        assert_eq!((pent.intrinsic_dim, pent.vertex_count(), pent.facet_count()), (2, 5, 5));
        // All vertices lie in x1 + x2 + x3 = 3.
        assert!(pent.vertices.iter().all(|v| v.iter().sum::<Rational>() == rat(3)));
        let a3 = minkowski_associahedron(&MinkowskiParams::uniform(3, rat(1)).unwrap()).unwrap();
        assert_eq!((a3.intrinsic_dim, a3.vertex_count(), a3.facet_count()), (3, 14, 9));
    }

    #[test]
    fn parameter_validation() {
        assert!(MinkowskiParams::uniform(2, rat(0)).is_err());
        let mut alpha: BTreeMap<_, _> = minkowski_intervals(2)
            .into_iter()
            .map(|iv| (iv, rat(1)))
            .collect();
        alpha.insert((1, 4), rat(1));
        assert!(MinkowskiParams::new(2, alpha).is_err());
    }
}
