//! The exhaustive mod-p oracle: enumerate every common zero of a system over
//! a small prime field, and check a claimed component decomposition against
//! the enumerated points.

use idealkit::parse::parse_poly;
use idealkit::poly::VariableTable;
use idealkit::variety::{brute_force, variety_covered, DEFAULT_EVAL_CAP};

fn main() {
    let table = VariableTable::from_names(&["x", "y"]).unwrap();

    let system = vec![parse_poly("x^2 - y^2", &table).unwrap()];
    let v = brute_force(&system, 7, DEFAULT_EVAL_CAP).unwrap();
    println!("V(x^2 - y^2) mod 7 has {} points:", v.len());
    for pt in &v.points {
        println!("  {:?}", pt);
    }

    // the two lines x = y and x = -y decompose the variety exactly
    let comps = vec![
        vec![parse_poly("x - y", &table).unwrap()],
        vec![parse_poly("x + y", &table).unwrap()],
    ];
    let report = variety_covered(&system, &comps, 7, DEFAULT_EVAL_CAP).unwrap();
    println!(
        "decomposition into two lines: covered = {}, sound = {}",
        report.covered, report.sound
    );

    // dropping one line misses points, which get itemized
    let partial = vec![vec![parse_poly("x - y", &table).unwrap()]];
    let report = variety_covered(&system, &partial, 7, DEFAULT_EVAL_CAP).unwrap();
    println!(
        "one line only: covered = {}, first missed point = {:?}",
        report.covered,
        report.missing.first()
    );
}
