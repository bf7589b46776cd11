//! Point configurations encoding simplexwise-linear maps.
//!
//! A [`VertexConfiguration`] sends vertex `i` of Δ_N to `points[i]` and is
//! extended affinely over every face. A [`SphericalConfiguration`] sends
//! vertex `i` to the direction `vectors[i]`; a face goes to the positive cone
//! of its vectors intersected with the unit sphere.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, homogeneous_column, independent, Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexConfiguration {
    dim: usize,
    points: Vec<Point>,
}

impl VertexConfiguration {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::mismatch("ambient dimension >= 1", 0));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::mismatch(format!("points of dimension {dim}"), format!("a point of dimension {}", p.dim())));
        }
        Ok(VertexConfiguration { dim, points })
    }

    pub fn from_integers(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| Point::from_integers(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The configuration of the selected vertices, relabelled `0..` in the
    /// given order.
    pub fn restrict(&self, vertices: &[usize]) -> Result<Self> {
        let points = vertices
            .iter()
            .map(|&v| self.points.get(v).cloned().ok_or(Error::IndexOutOfRange { index: v, len: self.len() }))
            .collect::<Result<_>>()?;
        Ok(VertexConfiguration { dim: self.dim, points })
    }

    pub(crate) fn integer_columns(&self) -> Vec<Vec<BigInt>> {
        self.points.iter().map(homogeneous_column).collect()
    }

    /// First subset of `min(n, d+1)` vertices that is affinely dependent.
    pub fn general_position_violation(&self) -> Option<Vec<usize>> {
        let size = self.len().min(self.dim + 1);
        first_dependent_subset(&self.integer_columns(), size)
    }

    /// Every subset of at most `d+1` points is affinely independent.
    pub fn is_general_position(&self) -> bool {
        self.general_position_violation().is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalConfiguration {
    dim: usize,
    vectors: Vec<Point>,
}

impl SphericalConfiguration {
    pub fn new(dim: usize, vectors: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::mismatch("ambient dimension >= 1", 0));
        }
        if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
            return Err(Error::mismatch(format!("vectors of dimension {dim}"), format!("a vector of dimension {}", v.dim())));
        }
        if let Some(i) = vectors.iter().position(Point::is_zero) {
            return Err(Error::DegenerateConfiguration { vertices: vec![i] });
        }
        Ok(SphericalConfiguration { dim, vectors })
    }

    pub fn from_integers(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| Point::from_integers(r)).collect())
    }

    /// Dimension of the containing R^d; the sphere has dimension `d - 1`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sphere_dim(&self) -> usize {
        self.dim - 1
    }

    pub fn vectors(&self) -> &[Point] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub(crate) fn integer_columns(&self) -> Vec<Vec<BigInt>> {
        self.vectors.iter().map(|v| clear_denominators(v.coords())).collect()
    }

    pub fn genericity_violation(&self) -> Option<Vec<usize>> {
        let size = self.len().min(self.dim);
        first_dependent_subset(&self.integer_columns(), size)
    }

    /// Every subset of at most `d` vectors is linearly independent.
    pub fn is_generic(&self) -> bool {
        self.genericity_violation().is_none()
    }
}

// Independence is inherited by subsets, so checking every subset of the
// maximal size covers all smaller ones.
fn first_dependent_subset(columns: &[Vec<BigInt>], size: usize) -> Option<Vec<usize>> {
    (0..columns.len()).combinations(size).find(|subset| {
        let vs: Vec<&[BigInt]> = subset.iter().map(|&i| columns[i].as_slice()).collect();
        !independent(&vs)
    })
}

pub fn is_general_position(cfg: &VertexConfiguration) -> bool {
    cfg.is_general_position()
}

pub fn is_generic_spherical(s: &SphericalConfiguration) -> bool {
    s.is_generic()
}
