//! Exact rational arithmetic and the sign-vector kernels behind every
//! geometric predicate in the crate.
//!
//! All elimination is fraction-free: rational inputs are first scaled to
//! integers (a positive factor per row or column) and then reduced with
//! Bareiss' algorithm, so intermediate values stay bounded by Hadamard's
//! bound instead of blowing up through repeated rational normalisation.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number in canonical form (positive denominator, reduced).
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// A point (or direction vector) of R^d with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point { coords: coords.iter().map(|&c| integer(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }
}

impl From<Vec<Rational>> for Point {
    fn from(coords: Vec<Rational>) -> Self {
        Point { coords }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn of(value: &BigInt) -> Option<Sign> {
        if value.is_positive() {
            Some(Sign::Positive)
        } else if value.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Zero-free sign pattern of a one-dimensional dependence, normalised so the
/// first entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector {
    signs: Vec<Sign>,
}

impl SignVector {
    /// Canonicalises `signs` by flipping the whole pattern if needed.
    pub fn canonical(mut signs: Vec<Sign>) -> Self {
        if signs.first() == Some(&Sign::Negative) {
            signs.iter_mut().for_each(|s| *s = -*s);
        }
        SignVector { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Indices carrying `sign`.
    pub fn indices(&self, sign: Sign) -> Vec<usize> {
        self.signs.iter().enumerate().filter(|(_, &s)| s == sign).map(|(i, _)| i).collect()
    }

    pub fn as_i8(&self) -> Vec<i8> {
        self.signs.iter().map(|s| s.as_i8()).collect()
    }
}

/// Least common multiple of the denominators, i.e. the smallest positive
/// integer clearing all of them.
fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector by a positive integer so every entry is integral.
pub(crate) fn clear_denominators(values: &[Rational]) -> Vec<BigInt> {
    let scale = common_denominator(values);
    values.iter().map(|v| (v * &scale).to_integer()).collect()
}

/// Bareiss fraction-free determinant of a square integer matrix.
pub(crate) fn integer_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let value = &row[j] * pivot - &lead * &pivot_row[j];
                // Sylvester's identity makes this division exact.
                row[j] = value / &prev;
            }
        }
        prev = pivot.clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if negate {
        -det
    } else {
        det
    }
}

/// Exact determinant of a square rational matrix.
///
/// Each row is scaled by the least common multiple of its denominators,
/// the integer determinant is computed fraction-free and the scale is
/// divided back out. A singular matrix yields zero.
///
/// # Panics
/// Panics if `m` is empty or not square.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    assert!(n >= 1, "determinant of an empty matrix");
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let factor = common_denominator(row);
            let scaled = row.iter().map(|v| (v * &factor).to_integer()).collect();
            scale *= factor;
            scaled
        })
        .collect();
    Rational::new(integer_determinant(rows), scale)
}

/// Sign pattern of the kernel of the `k × (k+1)` matrix whose columns are
/// `columns`, via the generalised cross product: the kernel vector has
/// entries `(-1)^i det(M without column i)`. Returns the position of the
/// first vanishing coefficient on failure (a rank drop makes all vanish).
pub(crate) fn kernel_signs(columns: &[&[BigInt]]) -> std::result::Result<Vec<Sign>, usize> {
    let cols = columns.len();
    let rows = cols - 1;
    debug_assert!(columns.iter().all(|c| c.len() == rows));
    let mut signs = Vec::with_capacity(cols);
    for skip in 0..cols {
        let minor = (0..rows)
            .map(|r| {
                columns
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, c)| c[r].clone())
                    .collect()
            })
            .collect();
        let det = integer_determinant(minor);
        let sign = Sign::of(&det).ok_or(skip)?;
        signs.push(if skip % 2 == 0 { sign } else { -sign });
    }
    Ok(signs)
}

/// Integer column for a point in homogeneous coordinates `(1, p)`, scaled
/// by a positive factor.
pub(crate) fn homogeneous_column(point: &Point) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(point.dim() + 1);
    values.push(Rational::one());
    values.extend(point.coords().iter().cloned());
    clear_denominators(&values)
}

/// True iff the given integer vectors are linearly independent, tested via
/// the Gram determinant (nonzero exactly when the vectors are independent).
pub(crate) fn independent(vectors: &[&[BigInt]]) -> bool {
    let n = vectors.len();
    if n == 0 {
        return true;
    }
    let gram = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| vectors[i].iter().zip(vectors[j]).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    !integer_determinant(gram).is_zero()
}

fn check_count(found: usize, dim: usize, extra: usize, what: &str) -> Result<()> {
    if found != dim + extra {
        return Err(Error::mismatch(
            format!("{} {what} in dimension {dim}", dim + extra),
            format!("{found} {what}"),
        ));
    }
    Ok(())
}

fn uniform_dim(items: &[Point]) -> Result<usize> {
    let dim = items.first().map(Point::dim).unwrap_or(0);
    if let Some(bad) = items.iter().find(|p| p.dim() != dim) {
        return Err(Error::mismatch(format!("dimension {dim}"), format!("dimension {}", bad.dim())));
    }
    Ok(dim)
}

/// Signs of the affine dependence `Σλ_i = 0, Σλ_i p_i = 0` among `k+2`
/// points of R^k.
pub fn affine_dependence(points: &[Point]) -> Result<SignVector> {
    let dim = uniform_dim(points)?;
    check_count(points.len(), dim, 2, "points")?;
    let columns: Vec<Vec<BigInt>> = points.iter().map(homogeneous_column).collect();
    let refs: Vec<&[BigInt]> = columns.iter().map(Vec::as_slice).collect();
    kernel_signs(&refs)
        .map(SignVector::canonical)
        .map_err(|_| Error::DegenerateConfiguration { vertices: (0..points.len()).collect() })
}

/// Signs of the linear dependence `Σμ_i u_i = 0` among `k+1` vectors of R^k.
pub fn linear_dependence(vectors: &[Point]) -> Result<SignVector> {
    let dim = uniform_dim(vectors)?;
    check_count(vectors.len(), dim, 1, "vectors")?;
    let columns: Vec<Vec<BigInt>> = vectors.iter().map(|v| clear_denominators(v.coords())).collect();
    let refs: Vec<&[BigInt]> = columns.iter().map(Vec::as_slice).collect();
    kernel_signs(&refs)
        .map(SignVector::canonical)
        .map_err(|_| Error::DegenerateConfiguration { vertices: (0..vectors.len()).collect() })
}
