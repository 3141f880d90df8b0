//! Ideal membership through normal forms: a polynomial lies in the ideal
//! exactly when its remainder against a Gröbner basis vanishes.

use idealkit::groebner::{buchberger, Limits};
use idealkit::parse::{parse_poly, print_poly};
use idealkit::poly::{TermOrder, VariableTable};

fn main() {
    let table = VariableTable::from_names(&["x", "y"]).unwrap();
    let gens = vec![
        parse_poly("x^2 - y", &table).unwrap(),
        parse_poly("y^2 - x", &table).unwrap(),
    ];
    let ord = TermOrder::grevlex(table.len());
    let gb = buchberger(&gens, &ord, &Limits::default()).unwrap();

    let candidates = [
        "x^4 - x",          // (x^2-y)(x^2+y) + (y^2-x): a member
        "x^3 - y^3",        // also a member
        "x + y",            // not a member
    ];
    for text in candidates {
        let f = parse_poly(text, &table).unwrap();
        let nf = gb.normal_form(&f).unwrap();
        println!(
            "{text:10} -> normal form {:12} member: {}",
            print_poly(&nf),
            nf.is_zero()
        );
    }
}
