mod common;

use proptest::prelude::*;

use vkf::constructions::{cone_configuration, link_configuration};
use vkf::invariants::{cgs_number, linking_number_mod2, mixed_pair_parity, van_kampen_number};
use vkf::linalg::{affine_dependence, determinant, integer, linear_dependence, rational, Point, Sign};
use vkf::{Complex, Error, SimplexwiseMap};

use common::{affine_image, cofactor_det, permuted, sampled};

fn matrix(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))
}

fn point_rows(count: usize, dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-50i64..=50, dim), count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn determinant_matches_cofactor_expansion(m in matrix(5)) {
        let r: Vec<Vec<_>> = m.iter().map(|row| row.iter().map(|&v| integer(v)).collect()).collect();
        prop_assert_eq!(determinant(&r), integer(cofactor_det(&m) as i64));
    }

    #[test]
    fn affine_dependence_is_similarity_invariant(
        rows in (1usize..=4).prop_flat_map(|d| point_rows(d + 2, d)),
        num in 1i64..20, den in 1i64..20,
        shift in prop::collection::vec(-30i64..=30, 4),
    ) {
        let points: Vec<Point> = rows.iter().map(|r| Point::from_integers(r)).collect();
        let Ok(signs) = affine_dependence(&points) else { return Ok(()); };
        let scale = rational(num, den);
        let moved: Vec<Point> = points
            .iter()
            .map(|p| Point::new(p.coords().iter().zip(&shift).map(|(c, &s)| c * &scale + integer(s)).collect()))
            .collect();
        prop_assert_eq!(affine_dependence(&moved).unwrap(), signs.clone());
        // Σλ = 0 forces both signs to appear.
        prop_assert!(!signs.indices(Sign::Positive).is_empty());
        prop_assert!(!signs.indices(Sign::Negative).is_empty());
    }

    #[test]
    fn linear_dependence_is_scale_invariant(
        rows in (1usize..=4).prop_flat_map(|d| point_rows(d + 1, d)),
        num in 1i64..20, den in 1i64..20,
    ) {
        let vectors: Vec<Point> = rows.iter().map(|r| Point::from_integers(r)).collect();
        let Ok(signs) = linear_dependence(&vectors) else { return Ok(()); };
        let scale = rational(num, den);
        let scaled: Vec<Point> = vectors.iter().map(|v| Point::new(v.coords().iter().map(|c| c * &scale).collect())).collect();
        prop_assert_eq!(linear_dependence(&scaled).unwrap(), signs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_survive_relabeling(seed in any::<u64>(), d in 1usize..=5, perm_seed in any::<u64>()) {
        let cfg = sampled(d, d + 3, seed);
        let mut perm: Vec<usize> = (0..d + 3).collect();
        // Fisher-Yates driven by the proptest seed.
        let mut stream = vkf::rng::SeedStream::new(perm_seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, stream.uniform(0, i as i64) as usize);
        }
        let other = permuted(&cfg, &perm);
        let full = Complex::simplex(d + 2);
        prop_assert_eq!(van_kampen_number(&cfg, &full).unwrap(), van_kampen_number(&other, &full).unwrap());
        let skel = Complex::skeleton(d + 2, d / 2).unwrap();
        prop_assert_eq!(van_kampen_number(&cfg, &skel).unwrap(), van_kampen_number(&other, &skel).unwrap());
        if d % 2 == 1 {
            prop_assert_eq!(cgs_number(&cfg).unwrap(), cgs_number(&other).unwrap());
            prop_assert_eq!(mixed_pair_parity(&cfg).unwrap(), mixed_pair_parity(&other).unwrap());
        }
    }

    #[test]
    fn invariants_survive_affine_maps(seed in any::<u64>(), d in 1usize..=4, entries in prop::collection::vec(-4i64..=4, 16), shift in prop::collection::vec(-9i64..=9, 4)) {
        let a: Vec<Vec<i64>> = (0..d).map(|i| entries[i * 4..i * 4 + d].to_vec()).collect();
        prop_assume!(cofactor_det(&a) != 0);
        let cfg = sampled(d, d + 3, seed);
        let img = affine_image(&cfg, &a, &shift);
        prop_assert!(img.is_general_position());
        let skel = Complex::skeleton(d + 2, d / 2).unwrap();
        prop_assert_eq!(van_kampen_number(&cfg, &skel).unwrap(), van_kampen_number(&img, &skel).unwrap());
        let base = Complex::simplex(d + 1);
        prop_assert_eq!(van_kampen_number(&cfg, &base).unwrap(), van_kampen_number(&img, &base).unwrap());
        if d % 2 == 1 {
            prop_assert_eq!(cgs_number(&cfg).unwrap(), cgs_number(&img).unwrap());
        }
    }

    #[test]
    fn radon_partition_is_unique(seed in any::<u64>(), d in 1usize..=6) {
        let cfg = sampled(d, d + 2, seed);
        let hits = SimplexwiseMap::new(&cfg).van_kampen(&Complex::simplex(d + 1)).unwrap();
        prop_assert_eq!(hits.count(), 1);
    }

    #[test]
    fn linking_is_symmetric(seed in any::<u64>(), d in 1usize..=5) {
        let cfg = sampled(d, d + 3, seed);
        for (s, t) in vkf::simplicial::disjoint_pairs(&Complex::simplex(d + 2), d + 1) {
            if s.dim() == 0 || t.dim() == 0 {
                continue;
            }
            prop_assert_eq!(linking_number_mod2(&cfg, &s, &t).unwrap(), linking_number_mod2(&cfg, &t, &s).unwrap());
        }
    }

    #[test]
    fn links_of_general_position_maps_are_generic(seed in any::<u64>(), d in 1usize..=6) {
        let cfg = sampled(d, d + 3, seed);
        for a in 0..cfg.len() {
            prop_assert!(link_configuration(&cfg, a).unwrap().result.is_generic());
        }
    }

    #[test]
    fn cone_is_deterministic_and_in_general_position(seed in any::<u64>(), pseed in any::<u64>(), d in 1usize..=3) {
        let cfg = sampled(d, d + 3, seed);
        let a = cone_configuration(&cfg, pseed, 20).unwrap();
        prop_assert_eq!(&a, &cone_configuration(&cfg, pseed, 20).unwrap());
        prop_assert!(a.result.is_general_position());
        prop_assert_eq!(a.result.dim(), d + 1);
        prop_assert_eq!(a.result.len(), cfg.len() + 1);
    }

    #[test]
    fn sampled_configurations_are_in_general_position(seed in any::<u64>(), d in 1usize..=6, extra in 0usize..=3) {
        prop_assert!(sampled(d, d + extra, seed).is_general_position());
    }
}

#[test]
fn degenerate_inputs_are_rejected_not_resolved() {
    let cfg = vkf::VertexConfiguration::from_integers(1, &[&[0], &[1], &[1], &[3]]).unwrap();
    assert!(matches!(van_kampen_number(&cfg, &Complex::simplex(2)), Err(Error::DegenerateConfiguration { .. })));
}
