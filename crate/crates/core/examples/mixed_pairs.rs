// Mixed intersecting pairs in odd dimensions: always an even, nonzero number.
//
//     cargo run --release --example mixed_pairs

use vkf::harness::sample_configuration;
use vkf::invariants::mixed_pair_parity;

fn main() {
    for d in [1, 3, 5] {
        let counts: Vec<usize> = (0..8)
            .map(|seed| {
                let cfg = sample_configuration(d, d + 3, 1000, seed).unwrap();
                let (parity, count) = mixed_pair_parity(&cfg).unwrap();
                assert!(!parity.is_one() && count > 0);
                count
            })
            .collect();
        println!("d={d}: mixed pair counts {counts:?}");
    }
}
