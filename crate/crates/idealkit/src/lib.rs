//! Exact computer algebra for multivariate polynomial ideals, plus a scripted
//! verification layer for a family of published polynomial systems shipped as
//! fixtures.
//!
//! The toolkit side is ordinary machinery: arbitrary-precision rationals and
//! prime fields ([`scalars`]), sparse polynomials with term orders,
//! conjugation and weighted dehomogenization ([`poly`]), a bit-exact fixture
//! format ([`parse`]), Buchberger's algorithm with normal forms and radical
//! membership ([`groebner`]), finiteness analysis of leading-term sets
//! ([`analyze`]), multi-prime structural sampling ([`modular`]), and a
//! brute-force variety oracle over small prime fields ([`variety`]).
//!
//! The [`cases`] module wires those pieces into named, reproducible checks
//! over the shipped fixture systems; the `idealkit` binary and the files in
//! `examples/` drive everything from the command line.

pub mod analyze;
pub mod cases;
pub mod cli;
pub mod groebner;
pub mod modular;
pub mod parse;
pub mod poly;
pub mod scalars;
pub mod variety;
