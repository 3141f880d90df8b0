//! Multi-prime structural sampling: compute the basis modulo many primes and
//! compare monomial skeletons. A prime whose skeleton dissents from the
//! majority is unlucky; a denominator divisible by the prime is a bad
//! reduction. Both are flagged, never silently dropped.

use idealkit::groebner::Limits;
use idealkit::modular::sample_structure;
use idealkit::parse::parse_poly;
use idealkit::poly::{TermOrder, VariableTable};
use idealkit::scalars::primes_in_window;

fn main() {
    let table = VariableTable::from_names(&["x", "y"]).unwrap();
    let gens = vec![
        parse_poly("x + y", &table).unwrap(),
        parse_poly("x - y", &table).unwrap(),
        parse_poly("1/3*x^2 - y", &table).unwrap(),
    ];
    let ord = TermOrder::lex(table.len());
    let lim = Limits::default();

    // tiny primes: 2 collapses the first two generators (unlucky) and 3
    // divides a denominator (bad reduction)
    let report = sample_structure(&gens, &ord, &[2, 3, 5, 7, 11, 13], &lim);
    println!("small primes:");
    for s in &report.samples {
        println!("  p = {:2}  status {:?}", s.prime, s.status);
    }
    println!(
        "  agreeing {} | dissenting {:?} | failures {:?}",
        report.agreeing, report.dissenting, report.failures
    );

    // the default desk-scale window: everything agrees
    let primes = primes_in_window(1 << 15, 1 << 16, 20);
    let report = sample_structure(&gens, &ord, &primes, &lim);
    println!(
        "window (2^15, 2^16), {} primes: unanimous = {}, majority trivial = {}",
        report.samples.len(),
        report.unanimous(),
        report.majority_is_trivial()
    );
}
