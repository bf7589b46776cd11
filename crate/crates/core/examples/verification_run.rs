// A seeded verification run; the JSON report is identical for any worker count.
//
//     cargo run --release --example verification_run

use vkf::harness::{run_verification, RunConfig, Statement};

fn main() {
    let rc = RunConfig::new(Statement::VkfPlus, 3, 50, 0x5eed).unwrap();
    let one = run_verification(&rc.clone().with_workers(1)).unwrap();
    let four = run_verification(&rc.with_workers(4)).unwrap();
    assert_eq!(one.to_json(), four.to_json());
    let passed = one.trials.iter().filter(|t| t.pass).count();
    println!("{} d=3: {passed}/{} trials passed in {:.2?}", Statement::VkfPlus, one.trials.len(), one.duration);
    println!("{}", one.to_json());
}
