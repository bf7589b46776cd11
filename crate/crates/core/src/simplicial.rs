//! Faces and skeleta of the simplex Δ_N, together with the mod-2 scalars
//! that every count in the crate lands in.

use std::collections::BTreeSet;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of Z/2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parity(bool);

impl Parity {
    pub const ZERO: Parity = Parity(false);
    pub const ONE: Parity = Parity(true);

    pub fn of_count(count: usize) -> Parity {
        Parity(count % 2 == 1)
    }

    pub fn is_one(self) -> bool {
        self.0
    }

    pub fn value(self) -> u8 {
        self.0 as u8
    }
}

impl From<bool> for Parity {
    fn from(b: bool) -> Self {
        Parity(b)
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity(self.0 ^ rhs.0)
    }
}

impl AddAssign for Parity {
    fn add_assign(&mut self, rhs: Parity) {
        self.0 ^= rhs.0;
    }
}

impl Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::ZERO, Add::add)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.value())
    }
}

impl<'de> Deserialize<'de> for Parity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(Parity::ZERO),
            1 => Ok(Parity::ONE),
            other => Err(serde::de::Error::custom(format!("parity must be 0 or 1, got {other}"))),
        }
    }
}

/// A nonempty face of Δ_N, stored as a strictly increasing vertex list.
///
/// Faces order lexicographically by their vertex lists.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Face(Vec<usize>);

impl Face {
    pub fn new(vertices: Vec<usize>) -> Result<Face> {
        if vertices.is_empty() {
            return Err(Error::InvalidFace { vertices, reason: "the empty face is not represented" });
        }
        if !vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidFace { vertices, reason: "vertices must be strictly increasing" });
        }
        Ok(Face(vertices))
    }

    /// Builds a face from vertices in any order.
    pub fn from_unsorted(vertices: impl IntoIterator<Item = usize>) -> Result<Face> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        Face::new(v)
    }

    pub fn vertex(v: usize) -> Face {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max_vertex(&self) -> usize {
        *self.0.last().expect("faces are nonempty")
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        // Both lists are sorted; walk them in step.
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// The face spanned by `self` and `other`.
    pub fn join(&self, other: &Face) -> Face {
        Face(self.0.iter().chain(&other.0).copied().collect::<BTreeSet<_>>().into_iter().collect())
    }

    /// Cone over `self` with apex `apex`.
    pub fn cone(&self, apex: usize) -> Result<Face> {
        if self.contains(apex) {
            return Err(Error::InvalidFace { vertices: self.0.clone(), reason: "apex already in face" });
        }
        Face::from_unsorted(self.0.iter().copied().chain([apex]))
    }

    /// Bitmask of the vertex set. Vertices must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1u64 << v))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Face {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Face> {
        Face::new(v)
    }
}

impl From<Face> for Vec<usize> {
    fn from(f: Face) -> Vec<usize> {
        f.0
    }
}

/// All faces of Δ_N of dimension `k`, lexicographically ordered.
pub fn enumerate_faces(n: usize, k: usize) -> Result<Vec<Face>> {
    if k > n {
        return Err(Error::InvalidDimension { dim: k, max: n });
    }
    Ok((0..=n).combinations(k + 1).map(Face).collect())
}

/// All `k`-faces on an explicit vertex set, lexicographically ordered.
pub fn faces_on(vertices: &[usize], k: usize) -> Vec<Face> {
    vertices.iter().copied().combinations(k + 1).map(Face::from_unsorted).map(Result::unwrap).collect()
}

/// The face on the vertices of Δ_N not in `sigma`.
pub fn complement(sigma: &Face, n: usize) -> Result<Face> {
    if let Some(&v) = sigma.vertices().iter().find(|&&v| v > n) {
        return Err(Error::IndexOutOfRange { index: v, len: n + 1 });
    }
    let rest: Vec<usize> = (0..=n).filter(|v| !sigma.contains(*v)).collect();
    if rest.is_empty() {
        return Err(Error::EmptyComplement { face: sigma.vertices().to_vec() });
    }
    Ok(Face(rest))
}

/// The facets of `sigma`, obtained by deleting one vertex at a time, in
/// lexicographic order.
pub fn boundary_facets(sigma: &Face) -> Result<Vec<Face>> {
    if sigma.dim() == 0 {
        return Err(Error::NoBoundary);
    }
    let mut facets: Vec<Face> = (0..sigma.len())
        .map(|skip| {
            Face(sigma.0.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v).collect())
        })
        .collect();
    facets.sort();
    Ok(facets)
}

/// Facets of `sigma`, with a vertex contributing none.
pub fn facets_or_empty(sigma: &Face) -> Vec<Face> {
    boundary_facets(sigma).unwrap_or_default()
}

/// A subcomplex of Δ_N given by an explicit, subset-closed face list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    n: usize,
    faces: Vec<Face>,
}

impl Complex {
    /// Validates subset-closure and vertex range, then stores the faces
    /// sorted by dimension and lexicographically within a dimension.
    pub fn new(n: usize, faces: impl IntoIterator<Item = Face>) -> Result<Complex> {
        let set: BTreeSet<Face> = faces.into_iter().collect();
        for face in &set {
            if face.max_vertex() > n {
                return Err(Error::IndexOutOfRange { index: face.max_vertex(), len: n + 1 });
            }
            for facet in facets_or_empty(face) {
                if !set.contains(&facet) {
                    return Err(Error::InvalidComplex(format!("{face} is present but its facet {facet} is not")));
                }
            }
        }
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        Ok(Complex { n, faces })
    }

    /// The `k`-skeleton Δ_N^k.
    pub fn skeleton(n: usize, k: usize) -> Result<Complex> {
        if k > n {
            return Err(Error::InvalidDimension { dim: k, max: n });
        }
        let mut faces = Vec::new();
        for j in 0..=k {
            faces.extend(enumerate_faces(n, j)?);
        }
        Ok(Complex { n, faces })
    }

    /// The full simplex Δ_N.
    pub fn simplex(n: usize) -> Complex {
        Complex::skeleton(n, n).expect("k = n is always in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_dim(&self, k: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim() == k)
    }

    pub fn dim(&self) -> Option<usize> {
        self.faces.last().map(Face::dim)
    }
}

/// Unordered pairs of disjoint faces of `k` whose dimensions add up to
/// `total_dim`, each listed once with the lexicographically smaller face
/// first; the list itself is sorted.
pub fn disjoint_pairs(k: &Complex, total_dim: usize) -> Vec<(Face, Face)> {
    let mut pairs = Vec::new();
    for a in 0..=total_dim / 2 {
        let b = total_dim - a;
        let small: Vec<&Face> = k.faces_of_dim(a).collect();
        let large: Vec<&Face> = k.faces_of_dim(b).collect();
        for (i, s) in small.iter().enumerate() {
            // With equal dimensions, walk only the upper triangle.
            let start = if a == b { i + 1 } else { 0 };
            for t in &large[start..] {
                if s.is_disjoint(t) {
                    let (x, y) = if s < t { (s, t) } else { (t, s) };
                    pairs.push(((*x).clone(), (*y).clone()));
                }
            }
        }
    }
    pairs.sort();
    pairs
}
