//! Radical membership by the adjoined-variable trick: f vanishes on the
//! solution set of a system iff adjoining 1 - t*f makes the ideal trivial.

use idealkit::groebner::{radical_member, Limits};
use idealkit::parse::parse_poly;
use idealkit::poly::VariableTable;

fn main() {
    let table = VariableTable::from_names(&["x", "y"]).unwrap();
    let lim = Limits::default();

    // x vanishes wherever x^2 does, even though x is not in the ideal <x^2>
    let x = parse_poly("x", &table).unwrap();
    let x2 = parse_poly("x^2", &table).unwrap();
    println!(
        "x in rad<x^2>: {}",
        radical_member(&x, &[x2], &lim).unwrap()
    );

    // y does not vanish on the zero set of x
    let y = parse_poly("y", &table).unwrap();
    let gx = parse_poly("x", &table).unwrap();
    println!("y in rad<x>:   {}", radical_member(&y, &[gx], &lim).unwrap());

    // x + y vanishes on V(x^2, y) but is not in the ideal
    let f = parse_poly("x + y", &table).unwrap();
    let gens = vec![
        parse_poly("x^2", &table).unwrap(),
        parse_poly("y", &table).unwrap(),
    ];
    println!(
        "x + y in rad<x^2, y>: {}",
        radical_member(&f, &gens, &lim).unwrap()
    );
}
