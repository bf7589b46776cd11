//! Single-invariant evaluation for configuration files.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::harness::io::ConfigFile;
use crate::invariants::{Crossings, SimplexwiseMap, SphericalMap};
use crate::simplicial::{boundary_facets, Complex, Face};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantRequest {
    /// v over the full simplex on all vertices.
    V,
    /// v over the `k`-skeleton; `None` picks `⌊d/2⌋` (or `⌊m/2⌋` on a sphere).
    VSkeleton(Option<usize>),
    C,
    Mixed,
    Lk(Face, Face),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    V,
    VSkeleton,
    C,
    Mixed,
    Lk,
}

impl FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "v" => InvariantKind::V,
            "v-skeleton" => InvariantKind::VSkeleton,
            "c" => InvariantKind::C,
            "mixed" => InvariantKind::Mixed,
            "lk" => InvariantKind::Lk,
            other => return Err(Error::Parse(format!("unknown invariant {other:?}"))),
        })
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::V => "v",
            InvariantKind::VSkeleton => "v-skeleton",
            InvariantKind::C => "c",
            InvariantKind::Mixed => "mixed",
            InvariantKind::Lk => "lk",
        })
    }
}

/// Parses a vertex list such as `"0,2,4"` into a face.
pub fn parse_face(list: &str) -> Result<Face> {
    let vertices = list
        .split(',')
        .map(|v| v.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad vertex {v:?} in {list:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Face::from_unsorted(vertices)
}

fn pairs_value(c: &Crossings) -> Value {
    serde_json::to_value(&c.pairs).expect("faces serialise")
}

/// Evaluates `request` on a parsed configuration file.
///
/// The configuration must be in general position (generic, for vectors);
/// otherwise the violating subset is reported as a degeneracy.
pub fn compute_invariant(file: &ConfigFile, request: &InvariantRequest, verbose: bool) -> Result<Value> {
    let mut out = Map::new();
    match file {
        ConfigFile::Points(cfg) => {
            if let Some(vertices) = cfg.general_position_violation() {
                return Err(Error::DegenerateConfiguration { vertices });
            }
            let map = SimplexwiseMap::new(cfg);
            let n = cfg.len().checked_sub(1).ok_or_else(|| Error::mismatch("at least one point", 0))?;
            match request {
                InvariantRequest::V => {
                    let c = map.van_kampen(&Complex::simplex(n))?;
                    out.insert("v".into(), json!(c.parity));
                    if verbose {
                        out.insert("crossingPairs".into(), pairs_value(&c));
                    }
                }
                InvariantRequest::VSkeleton(k) => {
                    let k = k.unwrap_or(cfg.dim() / 2);
                    let c = map.van_kampen(&Complex::skeleton(n, k)?)?;
                    out.insert("v".into(), json!(c.parity));
                    out.insert("skeleton".into(), json!(k));
                    if verbose {
                        out.insert("crossingPairs".into(), pairs_value(&c));
                    }
                }
                InvariantRequest::C => {
                    let c = map.cgs()?;
                    out.insert("c".into(), json!(c.parity));
                    if verbose {
                        out.insert("linkedPairs".into(), pairs_value(&c));
                    }
                }
                InvariantRequest::Mixed => {
                    let c = map.mixed_pairs()?;
                    out.insert("parity".into(), json!(c.parity));
                    out.insert("count".into(), json!(c.count()));
                    if verbose {
                        out.insert("intersectingPairs".into(), pairs_value(&c));
                    }
                }
                InvariantRequest::Lk(s, t) => {
                    out.insert("lk".into(), json!(map.linking_number(s, t)?));
                    if verbose {
                        let hits = filling_hits(s, t, |a, b| map.faces_intersect(a, b))?;
                        out.insert("intersectingPairs".into(), hits);
                    }
                }
            }
        }
        ConfigFile::Vectors(s) => {
            if let Some(vertices) = s.genericity_violation() {
                return Err(Error::DegenerateConfiguration { vertices });
            }
            let map = SphericalMap::new(s);
            let n = s.len().checked_sub(1).ok_or_else(|| Error::mismatch("at least one vector", 0))?;
            match request {
                InvariantRequest::V | InvariantRequest::VSkeleton(_) => {
                    let k = match request {
                        InvariantRequest::VSkeleton(k) => k.unwrap_or(s.sphere_dim() / 2),
                        _ => n,
                    };
                    let c = map.van_kampen(&Complex::skeleton(n, k)?)?;
                    out.insert("v".into(), json!(c.parity));
                    if matches!(request, InvariantRequest::VSkeleton(_)) {
                        out.insert("skeleton".into(), json!(k));
                    }
                    if verbose {
                        out.insert("crossingPairs".into(), pairs_value(&c));
                    }
                }
                InvariantRequest::C => {
                    let c = map.cgs()?;
                    out.insert("c".into(), json!(c.parity));
                    if verbose {
                        out.insert("linkedPairs".into(), pairs_value(&c));
                    }
                }
                InvariantRequest::Mixed => {
                    return Err(Error::mismatch("a point configuration for the mixed count", "vectors"));
                }
                InvariantRequest::Lk(a, b) => {
                    out.insert("lk".into(), json!(map.linking_number(a, b)?));
                    if verbose {
                        let hits = filling_hits(a, b, |x, y| map.faces_intersect(x, y))?;
                        out.insert("intersectingPairs".into(), hits);
                    }
                }
            }
        }
    }
    if verbose {
        out.insert("configuration".into(), file.to_value());
    }
    Ok(Value::Object(out))
}

/// Facets ρ of τ met by σ: the terms of the mod-2 linking sum.
fn filling_hits(sigma: &Face, tau: &Face, meets: impl Fn(&Face, &Face) -> Result<bool>) -> Result<Value> {
    let mut hits = Vec::new();
    for rho in boundary_facets(tau)? {
        if meets(sigma, &rho)? {
            hits.push(json!([sigma, rho]));
        }
    }
    Ok(Value::Array(hits))
}
