//! Exact rational linear algebra and the convex hull kernel.

mod dd;
mod hull;

use std::fmt;
use std::ops::{Deref, Index};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use dd::extreme_rays;
pub use hull::{convex_hull, AffineHull, Facet, Polytope};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q`, or `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` or a finite decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int: BigInt = match int {
            "" | "-" | "+" => BigInt::zero(),
            _ => int.parse().ok()?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().ok()?;
        let mag = int.abs() * &scale + frac;
        let numer = if negative { -mag } else { mag };
        return Some(Rational::new(numer, scale));
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// A point or direction with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RationalVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RationalVector(entries.iter().map(|&x| rat(x)).collect())
    }

    /// The `i`-th standard basis vector (0-based) of `Q^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn dot(&self, other: &RationalVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn norm_squared(&self) -> Rational {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn select(&self, indices: &[usize]) -> RationalVector {
        RationalVector(indices.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// Smallest integer vector that is a positive multiple of `self`.
    /// The zero vector maps to the zero vector.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        primitive(ints)
    }
}

impl Deref for RationalVector {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(v: Vec<Rational>) -> Self {
        RationalVector(v)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(x))?;
        }
        write!(f, ")")
    }
}

/// Divides an integer vector by the gcd of its entries.
pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x = &*x / &g;
        }
    }
    v
}

/// Dense matrix over the rationals, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<RationalVector>,
    cols: usize,
}

/// Reduced row echelon form of a matrix together with its pivot columns.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub rows: Vec<RationalVector>,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<RationalVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, RationalVector::dim);
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.dim(),
            });
        }
        Ok(RationalMatrix { rows, cols })
    }

    pub fn rows(&self) -> &[RationalVector] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Gauss-Jordan elimination; zero rows are dropped.
    pub fn row_echelon(&self) -> RowEchelon {
        let mut m: Vec<Vec<Rational>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in &mut m[r] {
                *x *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let factor = row[c].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x -= &factor * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        RowEchelon {
            rows: m.into_iter().map(RationalVector).collect(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().pivots.len()
    }

    /// Determinant of a square matrix (Bareiss-free rational elimination).
    pub fn determinant(&self) -> Result<Rational> {
        let n = self.rows.len();
        if n != self.cols {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.cols,
            });
        }
        let mut m: Vec<Vec<Rational>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let factor = &m[i][c] / &m[c][c];
                for j in c..n {
                    let t = &factor * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
        Ok(det)
    }

    /// Solves `self * x = rhs` for a square nonsingular matrix.
    pub fn solve(&self, rhs: &RationalVector) -> Option<RationalVector> {
        let n = self.rows.len();
        if n != self.cols || rhs.dim() != n {
            return None;
        }
        let augmented: Vec<RationalVector> = self
            .rows
            .iter()
            .zip(rhs.iter())
            .map(|(row, b)| {
                let mut e = row.0.clone();
                e.push(b.clone());
                RationalVector(e)
            })
            .collect();
        let ech = RationalMatrix {
            rows: augmented,
            cols: n + 1,
        }
        .row_echelon();
        if ech.pivots.len() != n || ech.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        Some(RationalVector(
            ech.rows.iter().map(|r| r.0[n].clone()).collect(),
        ))
    }
}

fn check_same_dim(points: &[RationalVector]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let dim = first.dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    Ok(dim)
}

/// Dimension of the affine hull of `points`, by exact rank.
pub fn affine_dimension(points: &[RationalVector]) -> Result<usize> {
    check_same_dim(points)?;
    let base = &points[0];
    let diffs: Vec<RationalVector> = points[1..].iter().map(|p| p.sub(base)).collect();
    if diffs.is_empty() {
        return Ok(0);
    }
    Ok(RationalMatrix::new(diffs)?.rank())
}

/// True iff `v` is a negative multiple of `u`.
pub fn are_antiparallel(u: &RationalVector, v: &RationalVector) -> Result<bool> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: v.dim(),
        });
    }
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let pu = u.primitive_integer();
    let pv = v.primitive_integer();
    Ok(pu.iter().zip(&pv).all(|(a, b)| *a == -b))
}

/// Twice the signed area of the triangle `abc` (positive when counterclockwise).
pub fn orientation(a: &RationalVector, b: &RationalVector, c: &RationalVector) -> Rational {
    let (bx, by) = (&b[0] - &a[0], &b[1] - &a[1]);
    let (cx, cy) = (&c[0] - &a[0], &c[1] - &a[1]);
    bx * cy - by * cx
}

/// Area of a planar triangle; zero when the points are collinear.
pub fn triangle_area(a: &RationalVector, b: &RationalVector, c: &RationalVector) -> Result<Rational> {
    for p in [a, b, c] {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
    }
    Ok(orientation(a, b, c).abs() / rat(2))
}

/// Coordinates for the affine hull of a point set: a base point, the reduced
/// echelon basis of the direction space and its pivot columns. Projecting onto
/// the pivot columns is an affine isomorphism of the hull onto `Q^d`.
#[derive(Clone, Debug)]
pub struct AffineFrame {
    pub origin: RationalVector,
    pub basis: Vec<RationalVector>,
    pub pivots: Vec<usize>,
}

impl AffineFrame {
    pub fn new(points: &[RationalVector]) -> Result<Self> {
        check_same_dim(points)?;
        let origin = points[0].clone();
        let diffs: Vec<RationalVector> = points[1..].iter().map(|p| p.sub(&origin)).collect();
        let (basis, pivots) = if diffs.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            let ech = RationalMatrix::new(diffs)?.row_echelon();
            (ech.rows, ech.pivots)
        };
        Ok(AffineFrame {
            origin,
            basis,
            pivots,
        })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.dim()
    }

    /// Intrinsic coordinates of a point of the affine hull.
    pub fn project(&self, p: &RationalVector) -> RationalVector {
        p.sub(&self.origin).select(&self.pivots)
    }

    /// Whether `p` lies in the affine hull.
    pub fn contains(&self, p: &RationalVector) -> bool {
        let y = self.project(p);
        let mut back = self.origin.clone();
        for (coef, b) in y.iter().zip(&self.basis) {
            back = back.add(&b.scale(coef));
        }
        back == *p
    }

    /// The unique vector `n` in the direction space with
    /// `n . (x - origin) = a . project(x)` on the affine hull.
    pub fn lift_functional(&self, a: &RationalVector) -> RationalVector {
        let d = self.dim();
        if d == self.ambient_dim() {
            // Full dimensional: basis is the identity.
            let mut n = RationalVector::zeros(d);
            for (k, &p) in self.pivots.iter().enumerate() {
                n.0[p] = a[k].clone();
            }
            return n;
        }
        let gram: Vec<RationalVector> = self
            .basis
            .iter()
            .map(|bi| RationalVector(self.basis.iter().map(|bj| bi.dot(bj)).collect()))
            .collect();
        let coeffs = RationalMatrix { rows: gram, cols: d }
            .solve(a)
            .expect("echelon basis has a nonsingular Gram matrix");
        let mut n = RationalVector::zeros(self.ambient_dim());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            n = n.add(&b.scale(c));
        }
        n
    }
}
