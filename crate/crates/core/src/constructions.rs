//! The perturbed cone of a map into one dimension higher, and the link of a
//! map at a vertex as a map into the sphere of directions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::config::{SphericalConfiguration, VertexConfiguration};
use crate::error::{Error, Result};
use crate::linalg::{Point, Rational};
use crate::rng::{derive_seed, SeedStream};

pub const CONE_RETRY_CAP: usize = 1000;
pub const DEFAULT_EPSILON_EXPONENT: u32 = 20;

// Perturbations are multiples of H / 2^(e + PERTURBATION_BITS), drawn from
// [-2^PERTURBATION_BITS, 2^PERTURBATION_BITS].
const PERTURBATION_BITS: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeConfiguration {
    pub base: VertexConfiguration,
    pub result: VertexConfiguration,
    /// Index of the apex in `result`; always the last vertex.
    pub apex_index: usize,
    /// Perturbation magnitude `H * 2^-e`.
    pub epsilon: Rational,
    pub perturbation_seed: u64,
    /// Perturbations tried before general position was reached.
    pub attempts: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkConfiguration {
    pub base: VertexConfiguration,
    pub center: usize,
    /// Vectors f(B) - f(center) for B != center, in increasing order of B.
    pub result: SphericalConfiguration,
}

/// Largest coordinate-wise spread `max - min` over all axes, or 1 when every
/// point coincides.
fn coordinate_spread(base: &VertexConfiguration) -> Rational {
    let spread = (0..base.dim())
        .map(|axis| {
            let values = base.points().iter().map(|p| &p.coords()[axis]);
            let max = values.clone().max().expect("nonempty");
            let min = values.min().expect("nonempty");
            max - min
        })
        .max()
        .unwrap_or_else(Rational::zero);
    if spread.is_zero() {
        Rational::one()
    } else {
        spread
    }
}

/// The unperturbed cone: every point lifted to height 0, plus an apex above
/// the centroid at height equal to the coordinate spread.
pub fn cone_lift(base: &VertexConfiguration) -> Result<VertexConfiguration> {
    if base.is_empty() {
        return Err(Error::mismatch("a nonempty base", "no points"));
    }
    let height = coordinate_spread(base);
    let count = Rational::from_integer(BigInt::from(base.len()));
    let mut points: Vec<Point> = base
        .points()
        .iter()
        .map(|p| Point::new(p.coords().iter().cloned().chain([Rational::zero()]).collect()))
        .collect();
    let centroid = (0..base.dim())
        .map(|axis| base.points().iter().map(|p| p.coords()[axis].clone()).sum::<Rational>() / &count)
        .chain([height]);
    points.push(Point::new(centroid.collect()));
    VertexConfiguration::new(base.dim() + 1, points)
}

/// General-position shift of the cone over `base`.
pub fn cone_configuration(base: &VertexConfiguration, perturbation_seed: u64, epsilon_exponent: u32) -> Result<ConeConfiguration> {
    if base.len() != base.dim() + 3 {
        return Err(Error::mismatch(format!("{} base points", base.dim() + 3), format!("{} points", base.len())));
    }
    if epsilon_exponent == 0 {
        return Err(Error::mismatch("a positive epsilon exponent", 0));
    }
    let lifted = cone_lift(base)?;
    let height = coordinate_spread(base);
    let unit = &height / Rational::from_integer(BigInt::one() << (epsilon_exponent + PERTURBATION_BITS));
    let epsilon = &height / Rational::from_integer(BigInt::one() << epsilon_exponent);
    let reach = 1i64 << PERTURBATION_BITS;

    for attempt in 0..CONE_RETRY_CAP {
        let mut stream = SeedStream::new(derive_seed(perturbation_seed, attempt as u64));
        let points = lifted
            .points()
            .iter()
            .map(|p| {
                Point::new(
                    p.coords()
                        .iter()
                        .map(|c| c + &unit * Rational::from_integer(BigInt::from(stream.uniform(-reach, reach))))
                        .collect(),
                )
            })
            .collect();
        let result = VertexConfiguration::new(lifted.dim(), points)?;
        if result.is_general_position() {
            return Ok(ConeConfiguration {
                base: base.clone(),
                apex_index: result.len() - 1,
                result,
                epsilon,
                perturbation_seed,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::RetryCapExceeded { attempts: CONE_RETRY_CAP })
}

/// Link of `base` at vertex `center`: the direction vectors to every other
/// vertex. No normalisation, every spherical predicate is scale-invariant.
pub fn link_configuration(base: &VertexConfiguration, center: usize) -> Result<LinkConfiguration> {
    let origin = base.points().get(center).ok_or(Error::IndexOutOfRange { index: center, len: base.len() })?;
    let vectors = base
        .points()
        .iter()
        .enumerate()
        .filter(|(b, _)| *b != center)
        .map(|(_, p)| p.sub(origin))
        .collect();
    Ok(LinkConfiguration { base: base.clone(), center, result: SphericalConfiguration::new(base.dim(), vectors)? })
}
