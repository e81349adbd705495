//! Realization of the associahedron from the cluster complex of type `A_n`:
//! the polytope `{ x in R^{n+1} : sum x = 0, x_i - x_j <= f(i,j) }` over the
//! `n(n+3)/2` pairs with `j <= i + 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{convex_hull, extreme_rays, rat, Polytope, Rational, RationalVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterParams {
    n: usize,
    f: BTreeMap<(usize, usize), Rational>,
}

/// Index pairs `(i, j)`, `i != j`, `i - j >= -1`, over `1..=n+1`: the simple
/// pairs `(i, i+1)` and all pairs with `i > j`.
pub fn cluster_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n + 3) / 2);
    for i in 1..=n + 1 {
        for j in 1..=n + 1 {
            if i != j && j <= i + 1 {
                out.push((i, j));
            }
        }
    }
    out
}

impl ClusterParams {
    pub fn new(n: usize, f: BTreeMap<(usize, usize), Rational>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameters("n must be at least 1".into()));
        }
        let pairs = cluster_pairs(n);
        for key in f.keys() {
            if !pairs.contains(key) {
                return Err(Error::InvalidParameters(format!(
                    "pair ({},{}) is not an index pair for n = {n}",
                    key.0, key.1
                )));
            }
        }
        for p in &pairs {
            match f.get(p) {
                None => {
                    return Err(Error::InvalidParameters(format!(
                        "missing value for pair ({},{})",
                        p.0, p.1
                    )))
                }
                Some(v) if !v.is_positive() => {
                    return Err(Error::InvalidParameters(format!(
                        "f({},{}) must be positive",
                        p.0, p.1
                    )))
                }
                _ => {}
            }
        }
        Ok(ClusterParams { n, f })
    }

    /// Shipped parameters for `n <= 5`: `f(i,j) = d(n+2-d)` with `d = i - j`
    /// for `i > j`, and `f(i,i+1) = n^2`. Up to translation this bounds each
    /// interval sum of consecutive differences from below by its squared
    /// length, and each single difference from above. Verified in the tests.
    pub fn default_for(n: usize) -> Result<Self> {
        if !(1..=MAX_DEFAULT_N).contains(&n) {
            return Err(Error::InvalidParameters(format!(
                "no default cluster parameters for n = {n}"
            )));
        }
        let m = n as i64;
        let f = cluster_pairs(n)
            .into_iter()
            .map(|(i, j)| {
                let d = i as i64 - j as i64;
                let v = if d < 0 { m * m } else { d * (m + 2 - d) };
                ((i, j), rat(v))
            })
            .collect();
        ClusterParams::new(n, f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.f
    }
}

pub const MAX_DEFAULT_N: usize = 5;

/// Normal `e_i - e_j` as an integer row in the intrinsic coordinates
/// `x_1..x_n` of the hyperplane `sum x = 0` (`x_{n+1} = -(x_1 + ... + x_n)`).
fn intrinsic_row(n: usize, i: usize, j: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); n];
    let mut add = |idx: usize, s: i64| {
        if idx == n + 1 {
            for x in row.iter_mut() {
                *x -= s;
            }
        } else {
            row[idx - 1] += s;
        }
    };
    add(i, 1);
    add(j, -1);
    row
}

pub fn cluster_associahedron(p: &ClusterParams) -> Result<Polytope> {
    let n = p.n;
    let pairs = cluster_pairs(n);

    // Homogenize: (c, -f) . (y, t) <= 0 and t >= 0.
    let mut rows: Vec<Vec<BigInt>> = pairs
        .iter()
        .map(|&(i, j)| {
            let value = &p.f[&(i, j)];
            let mut row: Vec<BigInt> = intrinsic_row(n, i, j)
                .into_iter()
                .map(|c| c * value.denom())
                .collect();
            row.push(-value.numer().clone());
            row
        })
        .collect();
    let mut t_row = vec![BigInt::zero(); n + 1];
    t_row[n] = -BigInt::one();
    rows.push(t_row);

    let rays = extreme_rays(&rows).ok_or(Error::NotAPolytope)?;
    let mut vertices = Vec::with_capacity(rays.len());
    for (coords, _) in &rays {
        let t = &coords[n];
        if t.is_zero() {
            return Err(Error::NotAPolytope);
        }
        let mut x: Vec<Rational> = coords[..n]
            .iter()
            .map(|c| Rational::new(c.clone(), t.clone()))
            .collect();
        let last = -x.iter().fold(Rational::zero(), |acc, v| acc + v);
        x.push(last);
        vertices.push(RationalVector::new(x));
    }
    if vertices.is_empty() {
        return Err(Error::NotAPolytope);
    }
    let poly = convex_hull(&vertices)?;
    if poly.intrinsic_dim != n {
        return Err(Error::NotAPolytope);
    }

    // Each inequality must support a facet of its own.
    for &(i, j) in &pairs {
        let normal = RationalVector::new(
            (1..=n + 1)
                .map(|l| {
                    if l == i {
                        rat(1)
                    } else if l == j {
                        rat(-1)
                    } else {
                        rat(0)
                    }
                })
                .collect(),
        );
        let found = poly
            .facets
            .iter()
            .any(|f| f.normal == normal && f.offset == p.f[&(i, j)]);
        if !found {
            return Err(Error::UnsuitableParameters {
                i,
                j,
                reason: "redundant".into(),
            });
        }
    }
    debug_assert_eq!(poly.facet_count(), pairs.len());
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_counts() {
        for n in 1..=6 {
            assert_eq!(cluster_pairs(n).len(), n * (n + 3) / 2);
        }
        assert_eq!(
            cluster_pairs(2),
            vec![(1, 2), (2, 1), (2, 3), (3, 1), (3, 2)]
        );
    }

    #[test]
    fn nonpositive_values_rejected() {
        let f = cluster_pairs(2).into_iter().map(|p| (p, rat(0))).collect();
        assert!(matches!(
            ClusterParams::new(2, f),
            Err(Error::InvalidParameters(_))
        ));
        let partial = [((1, 2), rat(1))].into_iter().collect();
        assert!(ClusterParams::new(2, partial).is_err());
    }

    #[test]
    fn small_defaults_are_associahedra() {
        use crate::checks::{parallel_facet_pairs, verify_associahedron};
        for n in 1..=3 {
            let poly = cluster_associahedron(&ClusterParams::default_for(n).unwrap()).unwrap();
            let r = verify_associahedron(&poly, n);
            assert!(r.is_associahedron, "n = {n}: {:?}", r.failure_reason);
            assert_eq!(parallel_facet_pairs(&poly).count, n);
        }
        assert!(ClusterParams::default_for(0).is_err());
        assert!(ClusterParams::default_for(MAX_DEFAULT_N + 1).is_err());
    }

    #[test]
    fn redundant_inequality_reported() {
        // x_3 - x_1 <= 4 follows from the two steps of size 1.
        let f = cluster_pairs(2)
            .into_iter()
            .map(|p| (p, rat(if p == (3, 1) { 4 } else { 1 })))
            .collect();
        let err = cluster_associahedron(&ClusterParams::new(2, f).unwrap()).unwrap_err();
        assert!(matches!(err, Error::UnsuitableParameters { i: 3, j: 1, .. }));
        assert_eq!(
            err.to_string(),
            "parameters not suitable: inequality x_3 - x_1 <= f(3,1) is redundant"
        );
    }
}
