//! Mod-2 van Kampen and Conway–Gordon–Sachs invariants of simplexwise-linear
//! maps of simplices into R^d, computed with exact rational predicates, and a
//! seeded harness that checks the quantitative Radon and van Kampen–Flores
//! parity statements (and the restriction, cone and link identities relating
//! them) over random general-position configurations.

pub mod config;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod linalg;
pub mod proof_trace;
pub mod rng;
pub mod simplicial;

pub use config::{is_general_position, is_generic_spherical, SphericalConfiguration, VertexConfiguration};
pub use error::{Error, Result};
pub use invariants::{Crossings, SimplexwiseMap, SphericalMap};
pub use linalg::{Point, Rational, Sign, SignVector};
pub use simplicial::{Complex, Face, Parity};
