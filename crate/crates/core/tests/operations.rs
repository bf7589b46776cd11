//! Worked examples for the invariant, construction and harness operations
//! that need sampled configurations or several modules at once.

mod common;

use vkf::constructions::{cone_configuration, cone_lift, link_configuration};
use vkf::harness::{moment_curve_configuration, sample_configuration};
use vkf::invariants::{cgs_number, spherical_cgs, spherical_van_kampen, van_kampen_number};
use vkf::proof_trace::{boundary_exchange, lemma_trace, telescoping_step};
use vkf::simplicial::enumerate_faces;
use vkf::{Complex, Error, Parity, SimplexwiseMap, SphericalMap};

use common::sampled;

#[test]
fn radon_number_is_odd_for_general_position_simplices() {
    for d in 1..=6 {
        for seed in 0..10 {
            let cfg = sampled(d, d + 2, seed);
            assert_eq!(van_kampen_number(&cfg, &Complex::simplex(d + 1)).unwrap(), Parity::ONE, "d={d} seed={seed}");
        }
    }
}

#[test]
fn cgs_is_odd_in_odd_dimensions() {
    for d in [1, 3, 5] {
        for seed in 0..10 {
            assert_eq!(cgs_number(&sampled(d, d + 3, seed)).unwrap(), Parity::ONE);
        }
    }
}

#[test]
fn k6_moment_curve_has_exactly_one_linked_pair_per_parity() {
    let cfg = moment_curve_configuration(3, 6).unwrap();
    let c = SimplexwiseMap::new(&cfg).cgs().unwrap();
    assert_eq!(c.parity, Parity::ONE);
    // Ten unordered complementary triangle pairs are examined.
    assert_eq!(enumerate_faces(5, 2).unwrap().iter().filter(|f| f.contains(0)).count(), 10);
}

#[test]
fn mixed_pairs_in_dimension_three() {
    for seed in 0..20 {
        let m = SimplexwiseMap::new(&sampled(3, 6, seed)).mixed_pairs().unwrap();
        assert_eq!(m.parity, Parity::ZERO);
        assert!(m.count() >= 1);
    }
}

#[test]
fn cone_over_collinear_points() {
    let base = moment_curve_configuration(1, 4).unwrap();
    let cone = cone_configuration(&base, 3, 20).unwrap();
    assert_eq!(cone.result.dim(), 2);
    assert_eq!(cone.result.len(), 5);
    let lifted = SimplexwiseMap::new(&cone.result);
    // d odd: v(f̂ | Δ_4^1) = c(f) = 1.
    assert_eq!(lifted.van_kampen(&Complex::skeleton(4, 1).unwrap()).unwrap().parity, cgs_number(&base).unwrap());
    // Cone over Δ_2 (vertices 0,1,2 and the apex) against f|Δ_2.
    let part = cone.result.restrict(&[0, 1, 2, 4]).unwrap();
    assert_eq!(
        van_kampen_number(&part, &Complex::simplex(3)).unwrap(),
        van_kampen_number(&base, &Complex::simplex(2)).unwrap()
    );
}

#[test]
fn cone_over_k5_fixture() {
    let base = moment_curve_configuration(2, 5).unwrap();
    let cone = cone_configuration(&base, 17, 20).unwrap();
    let c_hat = cgs_number(&cone.result).unwrap();
    assert_eq!(c_hat, Parity::ONE);
    assert_eq!(c_hat, van_kampen_number(&base, &Complex::skeleton(4, 1).unwrap()).unwrap());
}

#[test]
fn unperturbed_cone_is_never_general_position() {
    for d in 1..=4 {
        assert!(!cone_lift(&sampled(d, d + 3, 5)).unwrap().is_general_position());
    }
}

#[test]
fn link_at_every_vertex_of_k6() {
    let cfg = moment_curve_configuration(3, 6).unwrap();
    let skeleton = Complex::skeleton(4, 2).unwrap();
    for a in 0..6 {
        let link = link_configuration(&cfg, a).unwrap();
        assert_eq!(spherical_van_kampen(&link.result, &skeleton).unwrap(), Parity::ONE, "vertex {a}");
    }
}

#[test]
fn link_sum_matches_skeleton_in_even_dimensions() {
    for d in [2, 4] {
        for seed in 0..5 {
            let cfg = sampled(d, d + 3, seed);
            let total: Parity =
                (0..cfg.len()).map(|a| spherical_cgs(&link_configuration(&cfg, a).unwrap().result).unwrap()).sum();
            assert_eq!(total, van_kampen_number(&cfg, &Complex::skeleton(d + 2, d / 2).unwrap()).unwrap());
        }
    }
}

#[test]
fn spherical_cgs_requires_odd_sphere() {
    let cfg = sampled(3, 6, 1);
    let link = link_configuration(&cfg, 0).unwrap();
    assert!(matches!(SphericalMap::new(&link.result).cgs(), Err(Error::WrongParity { dim: 2 })));
}

#[test]
fn proof_trace_on_samples() {
    for d in 1..=5 {
        for seed in 0..5 {
            let cfg = sampled(d, d + 3, seed);
            let map = SimplexwiseMap::new(&cfg);
            let trace = lemma_trace(&map).unwrap();
            assert!(trace.holds(), "d={d} seed={seed}: {trace:?}");
            assert_eq!(trace.steps.len(), (d - 1) / 2 + 1);
            assert_eq!(trace.steps[0].sums[3], Parity::ZERO);
            assert_eq!(trace.steps[0].sums[4], Parity::ZERO);
        }
    }
}

#[test]
fn proof_trace_single_pieces() {
    let cfg = sampled(5, 8, 9);
    let map = SimplexwiseMap::new(&cfg);
    for k in 0..=2 {
        assert!(telescoping_step(&map, k).unwrap().holds());
        for sigma in enumerate_faces(6, k).unwrap() {
            assert!(boundary_exchange(&map, &sigma).unwrap().holds());
        }
    }
}

#[test]
fn fixed_sample_is_reproducible() {
    let a = sample_configuration(2, 5, 1000, 42).unwrap();
    assert_eq!(a, sample_configuration(2, 5, 1000, 42).unwrap());
    assert!(a.is_general_position());
}
