//! Executable form of the chain of wedge identities that relates the
//! restriction of a map Δ_{d+2} → R^d to Δ_{d+1} with its middle skeleton
//! (d even) or its Conway–Gordon–Sachs number (d odd).
//!
//! Conventions: the map has `d+3` vertices, the last one (`d+2`) is the apex
//! `*`, faces σ range over Δ_{d+1} (vertices `0..=d+1`) and σ̄ is the
//! complement of σ in Δ_{d+1}. A wedge `A∧B` is evaluated with
//! [`SimplexwiseMap::wedge`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{cone_over_boundary, SimplexwiseMap};
use crate::simplicial::{complement, enumerate_faces, facets_or_empty, Face, Parity};

/// `*σ∧∂σ̄ = σ∧σ̄ + *∂σ∧σ̄` for one face σ.
///
/// For a vertex σ the cone over its boundary is the apex itself, so the
/// last term reads `*∧σ̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundaryExchange {
    pub sigma: Face,
    pub cone_vs_boundary: Parity,
    pub face_vs_complement: Parity,
    pub cone_boundary_vs_complement: Parity,
}

impl BoundaryExchange {
    pub fn holds(&self) -> bool {
        self.cone_vs_boundary == self.face_vs_complement + self.cone_boundary_vs_complement
    }
}

/// The five sums of one telescoping step for faces of dimension `k`:
///
/// ```text
/// Σ_σ (σ∧σ̄ + *σ∧∂σ̄) = Σ_σ *∂σ∧σ̄ = Σ_{τ⊂∂σ} *τ∧σ̄ = Σ_{σ̄⊂∂τ̄} *τ∧σ̄ = Σ_τ *τ∧∂τ̄
/// ```
///
/// with dim σ = k and dim τ = k-1. For k = 0 the last two sums are empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TelescopingStep {
    pub k: usize,
    pub sums: [Parity; 5],
}

impl TelescopingStep {
    pub fn holds(&self) -> bool {
        self.sums.iter().all(|&s| s == self.sums[0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProofTrace {
    pub exchanges: Vec<BoundaryExchange>,
    pub steps: Vec<TelescopingStep>,
    /// `Σ_{dim σ ≤ m} σ∧σ̄ + Σ_{dim σ = m} *σ∧∂σ̄` with `m = ⌊(d-1)/2⌋`;
    /// the telescoping drives it to zero.
    pub difference: Parity,
}

impl ProofTrace {
    pub fn holds(&self) -> bool {
        self.exchanges.iter().all(BoundaryExchange::holds)
            && self.steps.iter().all(TelescopingStep::holds)
            && self.difference == Parity::ZERO
    }
}

struct Frame<'m, 'a> {
    map: &'m SimplexwiseMap<'a>,
    base: usize,
    apex: usize,
}

impl<'m, 'a> Frame<'m, 'a> {
    fn new(map: &'m SimplexwiseMap<'a>) -> Result<Self> {
        let d = map.dim();
        if map.config().len() != d + 3 {
            return Err(Error::mismatch(format!("{} points", d + 3), format!("{} points", map.config().len())));
        }
        Ok(Frame { map, base: d + 1, apex: d + 2 })
    }

    fn top(&self) -> usize {
        (self.map.dim() - 1) / 2
    }

    fn bar(&self, sigma: &Face) -> Result<Face> {
        complement(sigma, self.base)
    }

    fn faces(&self, k: usize) -> Result<Vec<Face>> {
        enumerate_faces(self.base, k)
    }

    fn face_vs_complement(&self, sigma: &Face) -> Result<Parity> {
        self.map.wedge(std::slice::from_ref(sigma), &[self.bar(sigma)?])
    }

    fn cone_vs_boundary(&self, sigma: &Face) -> Result<Parity> {
        self.map.wedge(&[sigma.cone(self.apex)?], &facets_or_empty(&self.bar(sigma)?))
    }

    fn exchange(&self, sigma: &Face) -> Result<BoundaryExchange> {
        Ok(BoundaryExchange {
            sigma: sigma.clone(),
            cone_vs_boundary: self.cone_vs_boundary(sigma)?,
            face_vs_complement: self.face_vs_complement(sigma)?,
            cone_boundary_vs_complement: self.map.wedge(&cone_over_boundary(sigma, self.apex)?, &[self.bar(sigma)?])?,
        })
    }

    fn step(&self, k: usize) -> Result<TelescopingStep> {
        let sigmas = self.faces(k)?;
        let taus = if k == 0 { Vec::new() } else { self.faces(k - 1)? };

        let mut first = Parity::ZERO;
        let mut second = Parity::ZERO;
        let mut third = Parity::ZERO;
        for sigma in &sigmas {
            let bar = [self.bar(sigma)?];
            first += self.face_vs_complement(sigma)? + self.cone_vs_boundary(sigma)?;
            // The cone over the empty face is excluded from the sums.
            let cones: Vec<Face> = facets_or_empty(sigma).iter().map(|t| t.cone(self.apex)).collect::<Result<_>>()?;
            second += self.map.wedge(&cones, &bar)?;
            for tau in facets_or_empty(sigma) {
                third += self.map.wedge(&[tau.cone(self.apex)?], &bar)?;
            }
        }

        let mut fourth = Parity::ZERO;
        let mut fifth = Parity::ZERO;
        for tau in &taus {
            let cone = [tau.cone(self.apex)?];
            let tau_bar_facets = facets_or_empty(&self.bar(tau)?);
            for sigma in &sigmas {
                let bar = self.bar(sigma)?;
                if tau_bar_facets.contains(&bar) {
                    fourth += self.map.wedge(&cone, &[bar])?;
                }
            }
            fifth += self.map.wedge(&cone, &tau_bar_facets)?;
        }
        Ok(TelescopingStep { k, sums: [first, second, third, fourth, fifth] })
    }

    fn difference(&self) -> Result<Parity> {
        let top = self.top();
        let mut total = Parity::ZERO;
        for k in 0..=top {
            for sigma in self.faces(k)? {
                total += self.face_vs_complement(&sigma)?;
            }
        }
        for sigma in self.faces(top)? {
            total += self.cone_vs_boundary(&sigma)?;
        }
        Ok(total)
    }
}

/// Boundary-exchange identity for a face σ of Δ_{d+1}.
pub fn boundary_exchange(map: &SimplexwiseMap<'_>, sigma: &Face) -> Result<BoundaryExchange> {
    let frame = Frame::new(map)?;
    if sigma.max_vertex() > frame.base || sigma.dim() > frame.top() {
        return Err(Error::mismatch(
            format!("a face of the base simplex of dimension <= {}", frame.top()),
            format!("{sigma}"),
        ));
    }
    frame.exchange(sigma)
}

/// One telescoping step, `0 <= k <= ⌊(d-1)/2⌋`.
pub fn telescoping_step(map: &SimplexwiseMap<'_>, k: usize) -> Result<TelescopingStep> {
    let frame = Frame::new(map)?;
    if k > frame.top() {
        return Err(Error::InvalidDimension { dim: k, max: frame.top() });
    }
    frame.step(k)
}

/// Every boundary exchange, every telescoping step and the final difference.
pub fn lemma_trace(map: &SimplexwiseMap<'_>) -> Result<ProofTrace> {
    let frame = Frame::new(map)?;
    let mut exchanges = Vec::new();
    let mut steps = Vec::new();
    for k in 0..=frame.top() {
        for sigma in frame.faces(k)? {
            exchanges.push(frame.exchange(&sigma)?);
        }
        steps.push(frame.step(k)?);
    }
    Ok(ProofTrace { exchanges, steps, difference: frame.difference()? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::VertexConfiguration;
    use crate::linalg::Point;

    fn line(xs: &[i64]) -> VertexConfiguration {
        VertexConfiguration::new(1, xs.iter().map(|&x| Point::from_integers(&[x])).collect()).unwrap()
    }

    #[test]
    fn vertex_exchange_needs_the_apex_term() {
        // Apex at 2 lies inside f({1,2}) = [1,3] while f({0}) = 0 does not.
        let cfg = line(&[0, 1, 3, 2]);
        let map = SimplexwiseMap::new(&cfg);
        let ex = boundary_exchange(&map, &Face::vertex(0)).unwrap();
        assert_eq!(ex.cone_vs_boundary, Parity::ONE);
        assert_eq!(ex.face_vs_complement, Parity::ZERO);
        assert_eq!(ex.cone_boundary_vs_complement, Parity::ONE);
        assert!(ex.holds());
    }

    #[test]
    fn trace_holds_on_a_line() {
        let cfg = line(&[0, 1, 3, 2]);
        let trace = lemma_trace(&SimplexwiseMap::new(&cfg)).unwrap();
        assert_eq!(trace.exchanges.len(), 3);
        assert_eq!(trace.steps.len(), 1);
        assert!(trace.holds(), "{trace:?}");
    }

    #[test]
    fn rejects_bad_shapes() {
        let cfg = line(&[0, 1, 3]);
        assert!(lemma_trace(&SimplexwiseMap::new(&cfg)).is_err());
        let cfg = line(&[0, 1, 3, 2]);
        let map = SimplexwiseMap::new(&cfg);
        assert!(telescoping_step(&map, 1).is_err());
        assert!(boundary_exchange(&map, &Face::new(vec![0, 1]).unwrap()).is_err());
    }
}
