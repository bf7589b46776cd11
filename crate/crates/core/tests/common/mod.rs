#![allow(dead_code)]

use vkf::harness::sample_configuration;
use vkf::linalg::Point;
use vkf::rng::SeedStream;
use vkf::VertexConfiguration;

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut total = 0i128;
    for col in 0..n {
        if m[0][col] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, &v)| v).collect()).collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][col] as i128 * cofactor_det(&minor);
    }
    total
}

pub fn random_matrix(stream: &mut SeedStream, n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| stream.uniform(lo, hi)).collect()).collect()
}

pub fn sampled(dim: usize, points: usize, seed: u64) -> VertexConfiguration {
    sample_configuration(dim, points, 1000, seed).expect("sampling succeeds")
}

pub fn permuted(cfg: &VertexConfiguration, perm: &[usize]) -> VertexConfiguration {
    cfg.restrict(perm).unwrap()
}

/// Applies `x -> A x + b` to every point.
pub fn affine_image(cfg: &VertexConfiguration, a: &[Vec<i64>], b: &[i64]) -> VertexConfiguration {
    let points = cfg
        .points()
        .iter()
        .map(|p| {
            Point::new(
                (0..cfg.dim())
                    .map(|i| {
                        let mut acc = vkf::linalg::integer(b[i]);
                        for j in 0..cfg.dim() {
                            acc += vkf::linalg::integer(a[i][j]) * &p.coords()[j];
                        }
                        acc
                    })
                    .collect(),
            )
        })
        .collect();
    VertexConfiguration::new(cfg.dim(), points).unwrap()
}
