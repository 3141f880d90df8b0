//! Compute reduced Gröbner bases of a small system under all three orders
//! and check the definitional property: every S-polynomial of basis pairs
//! reduces to zero.

use idealkit::groebner::{buchberger, s_polynomial, Limits};
use idealkit::parse::{parse_poly, print_poly};
use idealkit::poly::{OrderKind, TermOrder, VariableTable};

fn main() {
    let table = VariableTable::from_names(&["x", "y", "z"]).unwrap();
    let gens = vec![
        parse_poly("x^2 + y^2 + z^2 - 1", &table).unwrap(),
        parse_poly("x - y + z", &table).unwrap(),
        parse_poly("x*y - z", &table).unwrap(),
    ];

    for kind in [OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex] {
        let ord = TermOrder::natural(kind, table.len());
        let gb = buchberger(&gens, &ord, &Limits::default()).unwrap();
        println!("order {}:", kind.name());
        for g in gb.generators() {
            println!("  {}", print_poly(g));
        }
        let mut all_zero = true;
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                let s = s_polynomial(&gb.generators()[i], &gb.generators()[j], &ord).unwrap();
                all_zero &= gb.normal_form(&s).unwrap().is_zero();
            }
        }
        println!(
            "  S-polynomials reduce to zero: {all_zero}; pairs reduced: {}",
            gb.stats().pairs_reduced
        );
    }
}
