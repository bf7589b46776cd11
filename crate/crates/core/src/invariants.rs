//! Intersection predicates and the mod-2 invariants built from them.
//!
//! Every predicate reduces to one sign test. For `d+2` points of R^d in
//! general position the affine dependence is unique up to scale and has
//! no zero coefficient; the convex hulls of two disjoint faces covering all
//! `d+2` points meet exactly when the dependence is positive on one face and
//! negative on the other (the Radon partition). The spherical case replaces
//! affine by linear dependence among `d+1` vectors of R^d.
//!
//! [`SimplexwiseMap`] and [`SphericalMap`] memoise the sign pattern per
//! vertex subset, so invariants that revisit the same `d+2` points (every
//! disjoint pair inside one sub-simplex does) pay for one kernel only.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::config::{SphericalConfiguration, VertexConfiguration};
use crate::error::{Error, Result};
use crate::linalg::{kernel_signs, Sign};
use crate::simplicial::{boundary_facets, disjoint_pairs, facets_or_empty, faces_on, Complex, Face, Parity};

/// Cached Radon/cone sign tests over a fixed list of integer columns.
struct SignOracle {
    columns: Vec<Vec<BigInt>>,
    cache: RefCell<HashMap<u64, Vec<Sign>>>,
}

impl SignOracle {
    fn new(columns: Vec<Vec<BigInt>>) -> Self {
        SignOracle { columns, cache: RefCell::new(HashMap::new()) }
    }

    /// Number of vertices a single test must involve.
    fn width(&self) -> usize {
        self.columns.first().map_or(1, |c| c.len() + 1)
    }

    fn check_vertex(&self, face: &Face) -> Result<()> {
        let top = face.max_vertex();
        if top >= self.columns.len() || top >= 64 {
            return Err(Error::IndexOutOfRange { index: top, len: self.columns.len() });
        }
        Ok(())
    }

    fn meets(&self, sigma: &Face, tau: &Face) -> Result<bool> {
        self.check_vertex(sigma)?;
        self.check_vertex(tau)?;
        if !sigma.is_disjoint(tau) {
            return Err(Error::OverlappingSubcomplexes { a: sigma.vertices().to_vec(), b: tau.vertices().to_vec() });
        }
        let involved = sigma.len() + tau.len();
        if involved != self.width() {
            return Err(Error::mismatch(format!("faces on {} vertices in total", self.width()), format!("{involved} vertices")));
        }
        let mask = sigma.mask() | tau.mask();
        let vertices: Vec<usize> = (0..64).filter(|v| mask & (1u64 << v) != 0).collect();
        let mut cache = self.cache.borrow_mut();
        let signs = match cache.get(&mask) {
            Some(signs) => signs,
            None => {
                let cols: Vec<&[BigInt]> = vertices.iter().map(|&v| self.columns[v].as_slice()).collect();
                let signs = kernel_signs(&cols).map_err(|_| Error::DegenerateConfiguration { vertices: vertices.clone() })?;
                cache.entry(mask).or_insert(signs)
            }
        };
        let sign_of = |v: usize| signs[vertices.binary_search(&v).expect("vertex is in the union")];
        let s = sign_of(sigma.vertices()[0]);
        Ok(sigma.vertices().iter().all(|&v| sign_of(v) == s) && tau.vertices().iter().all(|&v| sign_of(v) == -s))
    }
}

/// Pairs realising a mod-2 count, plus the count's parity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossings {
    pub parity: Parity,
    pub pairs: Vec<(Face, Face)>,
}

impl Crossings {
    fn from_pairs(pairs: Vec<(Face, Face)>) -> Self {
        Crossings { parity: Parity::of_count(pairs.len()), pairs }
    }

    pub fn count(&self) -> usize {
        self.pairs.len()
    }
}

/// A simplexwise-linear map Δ_N → R^d given by its vertex images.
pub struct SimplexwiseMap<'a> {
    config: &'a VertexConfiguration,
    oracle: SignOracle,
}

impl<'a> SimplexwiseMap<'a> {
    pub fn new(config: &'a VertexConfiguration) -> Self {
        SimplexwiseMap { config, oracle: SignOracle::new(config.integer_columns()) }
    }

    pub fn config(&self) -> &VertexConfiguration {
        self.config
    }

    pub fn dim(&self) -> usize {
        self.config.dim()
    }

    fn check_complex(&self, k: &Complex) -> Result<()> {
        if k.vertex_count() > self.config.len() {
            return Err(Error::mismatch(
                format!("a complex on at most {} vertices", self.config.len()),
                format!("{} vertices", k.vertex_count()),
            ));
        }
        Ok(())
    }

    /// Whether f(σ) and f(τ) meet, for disjoint faces on `d+2` vertices in total.
    pub fn faces_intersect(&self, sigma: &Face, tau: &Face) -> Result<bool> {
        self.oracle.meets(sigma, tau)
    }

    /// Intersecting disjoint pairs of `k` with dimensions summing to `d`.
    pub fn van_kampen(&self, k: &Complex) -> Result<Crossings> {
        self.check_complex(k)?;
        let mut hits = Vec::new();
        for (s, t) in disjoint_pairs(k, self.dim()) {
            if self.faces_intersect(&s, &t)? {
                hits.push((s, t));
            }
        }
        Ok(Crossings::from_pairs(hits))
    }

    /// |f(σ) ∩ f(∂τ)| mod 2, with f(σ) filling the cycle f(∂σ).
    pub fn linking_number(&self, sigma: &Face, tau: &Face) -> Result<Parity> {
        if sigma.dim() == 0 || tau.dim() == 0 || sigma.dim() + tau.dim() != self.dim() + 1 {
            return Err(Error::mismatch(
                format!("two faces of dimension >= 1 with dimensions summing to {}", self.dim() + 1),
                format!("dimensions {} and {}", sigma.dim(), tau.dim()),
            ));
        }
        let mut parity = Parity::ZERO;
        for rho in boundary_facets(tau)? {
            parity += Parity::from(self.faces_intersect(sigma, &rho)?);
        }
        Ok(parity)
    }

    fn require_cgs_shape(&self) -> Result<()> {
        let d = self.dim();
        if d % 2 == 0 {
            return Err(Error::WrongParity { dim: d });
        }
        if self.config.len() != d + 3 {
            return Err(Error::mismatch(format!("{} points", d + 3), format!("{} points", self.config.len())));
        }
        Ok(())
    }

    /// Linked unordered pairs of complementary `(d+1)/2`-faces of Δ_{d+2};
    /// the parity is the Conway–Gordon–Sachs number. Odd `d` only.
    pub fn cgs(&self) -> Result<Crossings> {
        self.require_cgs_shape()?;
        let d = self.dim();
        let all: Vec<usize> = (0..d + 3).collect();
        let mut linked = Vec::new();
        // Each unordered pair has exactly one member containing vertex 0.
        for sigma in faces_on(&all, (d + 1) / 2).into_iter().filter(|f| f.contains(0)) {
            let tau = Face::from_unsorted(all.iter().copied().filter(|v| !sigma.contains(*v)))?;
            if self.linking_number(&sigma, &tau)?.is_one() {
                linked.push((sigma, tau));
            }
        }
        Ok(Crossings::from_pairs(linked))
    }

    /// Intersecting disjoint pairs of a `(d-1)/2`-face and a `(d+1)/2`-face of
    /// Δ_{d+2}. The count is expected to be even and positive.
    pub fn mixed_pairs(&self) -> Result<Crossings> {
        self.require_cgs_shape()?;
        let d = self.dim();
        let skeleton = Complex::skeleton(d + 2, (d + 1) / 2)?;
        self.van_kampen(&skeleton)
    }

    /// ρ₂|f(A) ∩ f(B)|: cell pairs whose dimensions sum to `d` contribute
    /// their intersection, all others contribute nothing.
    pub fn wedge(&self, a: &[Face], b: &[Face]) -> Result<Parity> {
        for x in a {
            if let Some(y) = b.iter().find(|y| !x.is_disjoint(y)) {
                return Err(Error::OverlappingSubcomplexes { a: x.vertices().to_vec(), b: y.vertices().to_vec() });
            }
        }
        let mut parity = Parity::ZERO;
        for x in a {
            for y in b.iter().filter(|y| x.dim() + y.dim() == self.dim()) {
                parity += Parity::from(self.faces_intersect(x, y)?);
            }
        }
        Ok(parity)
    }
}

/// A map Δ_N → S^{d-1} given by one direction vector per vertex.
pub struct SphericalMap<'a> {
    config: &'a SphericalConfiguration,
    oracle: SignOracle,
}

impl<'a> SphericalMap<'a> {
    pub fn new(config: &'a SphericalConfiguration) -> Self {
        SphericalMap { config, oracle: SignOracle::new(config.integer_columns()) }
    }

    pub fn config(&self) -> &SphericalConfiguration {
        self.config
    }

    pub fn sphere_dim(&self) -> usize {
        self.config.sphere_dim()
    }

    /// Whether the positive cones of σ and τ share a nonzero vector.
    pub fn faces_intersect(&self, sigma: &Face, tau: &Face) -> Result<bool> {
        self.oracle.meets(sigma, tau)
    }

    /// Intersecting disjoint pairs of `k` with dimensions summing to the
    /// sphere dimension.
    pub fn van_kampen(&self, k: &Complex) -> Result<Crossings> {
        if k.vertex_count() > self.config.len() {
            return Err(Error::mismatch(format!("at most {} vertices", self.config.len()), k.vertex_count()));
        }
        let mut hits = Vec::new();
        for (s, t) in disjoint_pairs(k, self.sphere_dim()) {
            if self.faces_intersect(&s, &t)? {
                hits.push((s, t));
            }
        }
        Ok(Crossings::from_pairs(hits))
    }

    pub fn linking_number(&self, sigma: &Face, tau: &Face) -> Result<Parity> {
        let m = self.sphere_dim();
        if sigma.dim() == 0 || tau.dim() == 0 || sigma.dim() + tau.dim() != m + 1 {
            return Err(Error::mismatch(
                format!("two faces of dimension >= 1 with dimensions summing to {}", m + 1),
                format!("dimensions {} and {}", sigma.dim(), tau.dim()),
            ));
        }
        let mut parity = Parity::ZERO;
        for rho in boundary_facets(tau)? {
            parity += Parity::from(self.faces_intersect(sigma, &rho)?);
        }
        Ok(parity)
    }

    /// Spherical Conway–Gordon–Sachs count; needs an odd sphere dimension
    /// `m` and `m+3` vectors.
    pub fn cgs(&self) -> Result<Crossings> {
        let m = self.sphere_dim();
        if m % 2 == 0 {
            return Err(Error::WrongParity { dim: m });
        }
        if self.config.len() != m + 3 {
            return Err(Error::mismatch(format!("{} vectors", m + 3), format!("{} vectors", self.config.len())));
        }
        let all: Vec<usize> = (0..m + 3).collect();
        let mut linked = Vec::new();
        for sigma in faces_on(&all, (m + 1) / 2).into_iter().filter(|f| f.contains(0)) {
            let tau = Face::from_unsorted(all.iter().copied().filter(|v| !sigma.contains(*v)))?;
            if self.linking_number(&sigma, &tau)?.is_one() {
                linked.push((sigma, tau));
            }
        }
        Ok(Crossings::from_pairs(linked))
    }
}

pub fn faces_intersect(cfg: &VertexConfiguration, sigma: &Face, tau: &Face) -> Result<bool> {
    SimplexwiseMap::new(cfg).faces_intersect(sigma, tau)
}

pub fn van_kampen_number(cfg: &VertexConfiguration, k: &Complex) -> Result<Parity> {
    Ok(SimplexwiseMap::new(cfg).van_kampen(k)?.parity)
}

pub fn linking_number_mod2(cfg: &VertexConfiguration, sigma: &Face, tau: &Face) -> Result<Parity> {
    SimplexwiseMap::new(cfg).linking_number(sigma, tau)
}

pub fn cgs_number(cfg: &VertexConfiguration) -> Result<Parity> {
    Ok(SimplexwiseMap::new(cfg).cgs()?.parity)
}

/// `(parity, count)` of intersecting mixed-dimension pairs.
pub fn mixed_pair_parity(cfg: &VertexConfiguration) -> Result<(Parity, usize)> {
    let c = SimplexwiseMap::new(cfg).mixed_pairs()?;
    Ok((c.parity, c.count()))
}

pub fn subcomplex_wedge(cfg: &VertexConfiguration, a: &[Face], b: &[Face]) -> Result<Parity> {
    SimplexwiseMap::new(cfg).wedge(a, b)
}

pub fn spherical_faces_intersect(s: &SphericalConfiguration, sigma: &Face, tau: &Face) -> Result<bool> {
    SphericalMap::new(s).faces_intersect(sigma, tau)
}

pub fn spherical_van_kampen(s: &SphericalConfiguration, k: &Complex) -> Result<Parity> {
    Ok(SphericalMap::new(s).van_kampen(k)?.parity)
}

pub fn spherical_linking_mod2(s: &SphericalConfiguration, sigma: &Face, tau: &Face) -> Result<Parity> {
    SphericalMap::new(s).linking_number(sigma, tau)
}

pub fn spherical_cgs(s: &SphericalConfiguration) -> Result<Parity> {
    Ok(SphericalMap::new(s).cgs()?.parity)
}

/// Cone cells `{*ρ : ρ facet of σ}`; for a vertex σ this is the apex alone,
/// the cone over the empty facet.
pub fn cone_over_boundary(sigma: &Face, apex: usize) -> Result<Vec<Face>> {
    if sigma.dim() == 0 {
        return Ok(vec![Face::vertex(apex)]);
    }
    facets_or_empty(sigma).iter().map(|rho| rho.cone(apex)).collect()
}
