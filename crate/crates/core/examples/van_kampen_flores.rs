// The skeleton van Kampen number and, for odd d, the Conway–Gordon–Sachs
// number of d+3 points, on the classical K5 / K6 fixtures and on samples.
//
//     cargo run --release --example van_kampen_flores

use vkf::harness::{moment_curve_configuration, sample_configuration};
use vkf::{Complex, SimplexwiseMap};

fn main() {
    let k5 = moment_curve_configuration(2, 5).unwrap();
    let v = SimplexwiseMap::new(&k5).van_kampen(&Complex::skeleton(4, 1).unwrap()).unwrap();
    println!("K5 on the moment curve: v = {} from {} crossing edge pairs", v.parity, v.count());
    for (a, b) in &v.pairs {
        println!("  {a:?} x {b:?}");
    }

    let k6 = moment_curve_configuration(3, 6).unwrap();
    let c = SimplexwiseMap::new(&k6).cgs().unwrap();
    println!("K6 on the moment curve: c = {} from {} linked triangle pairs", c.parity, c.count());

    for d in 1..=5 {
        let cfg = sample_configuration(d, d + 3, 1000, 2024 + d as u64).unwrap();
        let map = SimplexwiseMap::new(&cfg);
        let v = map.van_kampen(&Complex::skeleton(d + 2, d / 2).unwrap()).unwrap();
        let c = if d % 2 == 1 { map.cgs().unwrap().parity.to_string() } else { "-".into() };
        println!("random d={d}: v(skeleton {}) = {}  c = {c}", d / 2, v.parity);
    }
}
