use crate::config::VertexConfiguration;
use crate::error::{Error, Result};
use crate::linalg::Point;
use crate::rng::SeedStream;

pub const SAMPLE_RETRY_CAP: usize = 1000;
pub const DEFAULT_BOUND: u32 = 1000;

/// A sampled configuration and how many whole draws were rejected first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub config: VertexConfiguration,
    pub resamples: usize,
}

/// Draws integer points uniformly from `[-bound, bound]^d` until the
/// configuration is in general position.
pub fn sample_from_stream(dim: usize, point_count: usize, bound: u32, stream: &mut SeedStream) -> Result<Sample> {
    if point_count == 0 {
        return Err(Error::mismatch("at least one point", 0));
    }
    if bound == 0 {
        return Err(Error::mismatch("a positive coordinate bound", 0));
    }
    let b = bound as i64;
    for attempt in 0..SAMPLE_RETRY_CAP {
        let points = (0..point_count)
            .map(|_| Point::from_integers(&(0..dim).map(|_| stream.uniform(-b, b)).collect::<Vec<_>>()))
            .collect();
        let config = VertexConfiguration::new(dim, points)?;
        if config.is_general_position() {
            return Ok(Sample { config, resamples: attempt });
        }
    }
    Err(Error::RetryCapExceeded { attempts: SAMPLE_RETRY_CAP })
}

pub fn sample_configuration(dim: usize, point_count: usize, bound: u32, seed: u64) -> Result<VertexConfiguration> {
    sample_from_stream(dim, point_count, bound, &mut SeedStream::new(seed)).map(|s| s.config)
}

/// Points `(t, t², …, t^d)` for `t = 1..=point_count`.
pub fn moment_curve_configuration(dim: usize, point_count: usize) -> Result<VertexConfiguration> {
    let points = (1..=point_count as i64)
        .map(|t| {
            let mut coords = Vec::with_capacity(dim);
            let mut power = 1i64;
            for _ in 0..dim {
                power = power.checked_mul(t).ok_or_else(|| Error::mismatch("coordinates fitting in 64 bits", "overflow"))?;
                coords.push(power);
            }
            Ok(Point::from_integers(&coords))
        })
        .collect::<Result<_>>()?;
    VertexConfiguration::new(dim, points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer;

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_configuration(2, 5, 1000, 42).unwrap();
        let b = sample_configuration(2, 5, 1000, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_general_position());
        assert_ne!(a, sample_configuration(2, 5, 1000, 43).unwrap());
    }

    #[test]
    fn tiny_bound_gives_a_permutation() {
        match sample_configuration(1, 3, 1, 5) {
            Ok(cfg) => {
                let mut xs: Vec<_> = cfg.points().iter().map(|p| p.coords()[0].clone()).collect();
                xs.sort();
                assert_eq!(xs, vec![integer(-1), integer(0), integer(1)]);
            }
            Err(e) => assert!(matches!(e, Error::RetryCapExceeded { .. })),
        }
        // Four distinct integers cannot be drawn from {-1, 0, 1}.
        assert!(matches!(sample_configuration(1, 4, 1, 5), Err(Error::RetryCapExceeded { attempts: 1000 })));
    }

    #[test]
    fn moment_curve_points() {
        let cfg = moment_curve_configuration(3, 4).unwrap();
        assert_eq!(cfg.points()[1], Point::from_integers(&[2, 4, 8]));
        assert!(cfg.is_general_position());
        assert!(moment_curve_configuration(6, 9).unwrap().is_general_position());
    }
}
