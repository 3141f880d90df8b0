//! Parse a polynomial, print its canonical form, and show that parsing the
//! printed form gives the same polynomial back.

use idealkit::parse::{parse_poly, print_poly};
use idealkit::poly::VariableTable;

fn main() {
    let table = VariableTable::from_names(&["x1", "xc1", "x2", "xc2"]).unwrap();

    // same polynomial, three spellings
    let spellings = [
        "22 + 12*x1 - xc2",
        "12*x1+22-xc2",
        "- xc2 + 6*x1 + 22 + 6*x1",
    ];
    for text in spellings {
        let f = parse_poly(text, &table).unwrap();
        println!("{text:24} -> {}", print_poly(&f));
    }

    // the canonical form is a fixed point of parse . print
    let f = parse_poly("9108*x2*xc2 + 247 - 1/3*x1^2*xc1", &table).unwrap();
    let printed = print_poly(&f);
    let again = parse_poly(&printed, &table).unwrap();
    println!("canonical: {printed}");
    println!("round trip identical: {}", again == f);

    // errors carry positions
    match parse_poly("x1 + + 3", &table) {
        Err(e) => println!("rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
}
