//! The finiteness criterion: a system has finitely many solutions iff every
//! variable shows up as a pure power among the basis leading terms. The
//! count of standard monomials bounds the number of solutions with
//! multiplicity.

use idealkit::analyze::{is_zero_dimensional, leading_terms, standard_monomials};
use idealkit::groebner::{buchberger, Limits};
use idealkit::parse::parse_poly;
use idealkit::poly::{TermOrder, VariableTable};

fn main() {
    let table = VariableTable::from_names(&["x", "y"]).unwrap();
    let ord = TermOrder::grevlex(table.len());

    // two conics: finitely many intersections
    let finite = vec![
        parse_poly("x^2 + y^2 - 4", &table).unwrap(),
        parse_poly("x*y - 1", &table).unwrap(),
    ];
    let gb = buchberger(&finite, &ord, &Limits::default()).unwrap();
    let h = leading_terms(&gb, table.clone());
    println!(
        "two conics: zero-dimensional = {}, standard monomials = {:?}",
        is_zero_dimensional(&h),
        standard_monomials(&h, 1000).unwrap()
    );

    // one curve: infinitely many points
    let infinite = vec![parse_poly("x*y - 1", &table).unwrap()];
    let gb = buchberger(&infinite, &ord, &Limits::default()).unwrap();
    let h = leading_terms(&gb, table);
    println!(
        "one hyperbola: zero-dimensional = {}, standard monomials = {:?}",
        is_zero_dimensional(&h),
        standard_monomials(&h, 1000).unwrap()
    );
}
