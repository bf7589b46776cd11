// Raising and lowering dimension: the perturbed cone in R^{d+1} and the link
// of a vertex on S^{d-1}.
//
//     cargo run --release --example cone_and_link

use vkf::constructions::{cone_configuration, cone_lift, link_configuration};
use vkf::harness::moment_curve_configuration;
use vkf::invariants::{cgs_number, spherical_van_kampen, van_kampen_number};
use vkf::Complex;

fn main() {
    let base = moment_curve_configuration(2, 5).unwrap();
    println!("unperturbed lift in general position: {}", cone_lift(&base).unwrap().is_general_position());

    let cone = cone_configuration(&base, 7, 20).unwrap();
    println!("cone: apex {} after {} attempt(s), epsilon = {}", cone.apex_index, cone.attempts, cone.epsilon);
    println!("  c(cone) = {}", cgs_number(&cone.result).unwrap());
    println!("  v(base | 1-skeleton) = {}", van_kampen_number(&base, &Complex::skeleton(4, 1).unwrap()).unwrap());

    let k6 = moment_curve_configuration(3, 6).unwrap();
    for a in 0..k6.len() {
        let link = link_configuration(&k6, a).unwrap();
        let v = spherical_van_kampen(&link.result, &Complex::skeleton(4, 2).unwrap()).unwrap();
        println!("link at vertex {a}: {} directions on S^2, v = {v}", link.result.len());
    }
}
