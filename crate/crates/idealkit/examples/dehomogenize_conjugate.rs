//! The weighted dehomogenization and the conjugation involution, driven by
//! the shipped spin-coefficient fixtures: bidegree validation, the reduction
//! onto the smaller alphabet, and commutation of the two maps.

use idealkit::cases::FixtureSet;
use idealkit::parse::print_poly;

fn main() {
    let fx = FixtureSet::builtin().unwrap();

    for name in ["d1", "p1", "p2"] {
        let e = fx.side.get(name).unwrap();
        let (a, b) = e.poly.bidegree().unwrap();
        let reduced = e.poly.dehomogenize().unwrap();
        println!("{name}: bidegree ({a},{b})");
        println!("  full:    {}", print_poly(&e.poly));
        println!("  reduced: {}", print_poly(&reduced));
    }

    // conjugation commutes with dehomogenization
    let p2 = fx.side.poly("p2").unwrap();
    let road_one = p2.conjugate().unwrap().dehomogenize().unwrap();
    let road_two = p2.dehomogenize().unwrap().conjugate().unwrap();
    println!("conjugate then reduce == reduce then conjugate: {}", road_one == road_two);

    // a polynomial mixing bidegrees is rejected, with the offenders listed
    let table = fx.side.table.clone();
    let bad = idealkit::parse::parse_poly("a + b", &table).unwrap();
    match bad.bidegree() {
        Err(e) => println!("mixed bidegrees rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
