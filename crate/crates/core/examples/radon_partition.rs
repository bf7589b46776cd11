// Radon partitions of d+2 points via the exact affine dependence.
//
//     cargo run --example radon_partition

use vkf::linalg::{affine_dependence, Sign};
use vkf::{Complex, Point, SimplexwiseMap, VertexConfiguration};

fn main() {
    let points: Vec<Point> = [[0, 0], [4, 0], [0, 4], [1, 1]].iter().map(|p| Point::from_integers(p)).collect();
    let signs = affine_dependence(&points).expect("general position");
    println!("affine dependence signs: {:?}", signs.as_i8());
    println!("  positive side {:?}, negative side {:?}", signs.indices(Sign::Positive), signs.indices(Sign::Negative));

    // The same partition falls out of the intersection predicate: exactly one
    // disjoint pair of faces of the simplex on the four points meets.
    let cfg = VertexConfiguration::new(2, points).unwrap();
    let hits = SimplexwiseMap::new(&cfg).van_kampen(&Complex::simplex(3)).unwrap();
    for (sigma, tau) in &hits.pairs {
        println!("intersecting pair: {sigma:?} meets {tau:?}");
    }
    assert_eq!(hits.count(), 1);

    // Degenerate inputs are reported, never silently resolved.
    let collinear: Vec<Point> = [[0, 0], [1, 1], [2, 2], [5, 0]].iter().map(|p| Point::from_integers(p)).collect();
    println!("collinear input: {}", affine_dependence(&collinear).unwrap_err());
}
