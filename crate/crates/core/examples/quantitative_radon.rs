// v(f|Δ_{d+1}) = 1 for random general-position maps in every dimension.
//
//     cargo run --release --example quantitative_radon

use vkf::harness::sample_configuration;
use vkf::invariants::van_kampen_number;
use vkf::{Complex, Parity};

fn main() {
    for d in 1..=6 {
        let mut ones = 0;
        for seed in 0..25 {
            let cfg = sample_configuration(d, d + 2, 1000, seed).unwrap();
            if van_kampen_number(&cfg, &Complex::simplex(d + 1)).unwrap() == Parity::ONE {
                ones += 1;
            }
        }
        println!("d={d}: v = 1 in {ones}/25 samples");
        assert_eq!(ones, 25);
    }
}
