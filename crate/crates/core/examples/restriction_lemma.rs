// The restriction identity between v on the full simplex and the pieces it
// splits into, with the boundary-exchange and telescoping sums that prove it.
//
//     cargo run --release --example restriction_lemma

use vkf::harness::sample_configuration;
use vkf::proof_trace::lemma_trace;
use vkf::SimplexwiseMap;

fn main() {
    for d in [1, 3, 5] {
        let cfg = sample_configuration(d, d + 3, 1000, 99).unwrap();
        let map = SimplexwiseMap::new(&cfg);
        let trace = lemma_trace(&map).unwrap();
        println!("d={d}: {} boundary exchanges, all hold: {}", trace.exchanges.len(), trace.exchanges.iter().all(|e| e.holds()));
        for step in &trace.steps {
            let sums: Vec<String> = step.sums.iter().map(ToString::to_string).collect();
            println!("  k={}: sums [{}]", step.k, sums.join(", "));
        }
        println!("  difference = {}", trace.difference);
        assert!(trace.holds());
    }
}
