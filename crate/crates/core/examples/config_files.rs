// Reading configuration files and computing invariants the way the CLI does.
//
//     cargo run --example config_files

use vkf::harness::{compute_invariant, parse_face, ConfigFile, InvariantRequest};

fn main() {
    let file = ConfigFile::from_json(
        r#"{"dim": 3, "points": [["1","1","1"], ["2","4","8"], ["3","9","27"], ["4","16","64"], ["5","25","125"], ["6","36","216"]]}"#,
    )
    .unwrap();
    println!("c: {}", compute_invariant(&file, &InvariantRequest::C, false).unwrap());
    let lk = InvariantRequest::Lk(parse_face("0,2,4").unwrap(), parse_face("1,3,5").unwrap());
    println!("lk: {}", compute_invariant(&file, &lk, true).unwrap());

    let circle = ConfigFile::from_json(r#"{"dim": 2, "vectors": [["1","0"], ["0","1"], ["-1","1/3"], ["-1/2","-1"]]}"#).unwrap();
    println!("spherical v: {}", compute_invariant(&circle, &InvariantRequest::V, false).unwrap());

    let bad = ConfigFile::from_json(r#"{"dim": 2, "points": [["0","0"], ["1","1"], ["2","2"], ["0","1"]]}"#)
        .and_then(|f| compute_invariant(&f, &InvariantRequest::V, false));
    println!("degenerate file: {}", bad.unwrap_err());
}
