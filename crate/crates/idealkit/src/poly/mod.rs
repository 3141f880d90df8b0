//! Sparse exact-coefficient multivariate polynomials over a declared
//! variable table, together with term orders, the conjugation involution and
//! the weighted dehomogenization map used by the fixture systems.
//!
//! Terms are always stored sorted descending under one canonical order
//! (graded reverse lexicographic with the table's own variable order), no
//! matter which order an algorithm later runs under. That gives every
//! polynomial a single printed form, which keeps diffs and hashes stable.

mod monomial;
mod order;
mod table;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalars::{FpElement, PrimeField, Rational, ScalarError};

pub use monomial::{cmp_canonical, Monomial};
pub use order::{OrderKind, TermOrder};
pub use table::{DehomTarget, VariableTable};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("polynomials live on different variable tables")]
    TableMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("not bihomogeneous; offending terms: {}", offenders.join(", "))]
    NotBihomogeneous { offenders: Vec<String> },
    #[error("exact division failed: divisor leading term does not divide remainder")]
    NonDivisible,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("variable table carries no weights")]
    MissingWeights,
    #[error("variable table carries no conjugation pairing")]
    MissingConj,
    #[error("variable table carries no dehomogenization map")]
    MissingDehom,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable {0:?} is used but absent from the target table")]
    VariableInUse(String),
    #[error("bad variable table: {0}")]
    BadTable(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Field coefficients a polynomial can carry. Implemented by exact rationals
/// and by prime-field elements.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
    fn one_like(&self) -> Self;
    /// (negative?, absolute value) used for sign-leading display.
    fn sign_abs(&self) -> (bool, Self);
}

impl Coefficient for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        self.recip()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn sign_abs(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }
}

impl Coefficient for FpElement {
    fn is_zero(&self) -> bool {
        FpElement::is_zero(self)
    }
    fn is_one(&self) -> bool {
        FpElement::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        *self - *rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        FpElement::inv(self)
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn sign_abs(&self) -> (bool, Self) {
        (false, *self)
    }
}

fn coeff_pow<C: Coefficient>(c: &C, e: u16) -> C {
    let mut acc = c.one_like();
    for _ in 0..e {
        acc = acc.mul(c);
    }
    acc
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term<C> {
    pub coeff: C,
    pub mono: Monomial,
}

/// A sparse multivariate polynomial. Invariants: no zero coefficients, no
/// duplicate monomials, terms sorted strictly descending under the canonical
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C: Coefficient> {
    table: Arc<VariableTable>,
    terms: Vec<Term<C>>,
}

pub type QPoly = Polynomial<Rational>;
pub type FpPoly = Polynomial<FpElement>;

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(table: Arc<VariableTable>) -> Self {
        Polynomial {
            table,
            terms: Vec::new(),
        }
    }

    pub fn constant(table: Arc<VariableTable>, c: C) -> Self {
        let arity = table.len();
        Self::from_terms(table, vec![(c, Monomial::one(arity))])
    }

    /// c * v^e for a named variable.
    pub fn variable(table: Arc<VariableTable>, name: &str, c: C, e: u16) -> Result<Self, PolyError> {
        let i = table
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let arity = table.len();
        Ok(Self::from_terms(table, vec![(c, Monomial::var(arity, i, e))]))
    }

    /// Normalize an arbitrary term list: sort, merge duplicates, drop zeros.
    pub fn from_terms(table: Arc<VariableTable>, terms: Vec<(C, Monomial)>) -> Self {
        let mut terms: Vec<Term<C>> = terms
            .into_iter()
            .map(|(coeff, mono)| {
                debug_assert_eq!(mono.arity(), table.len());
                Term { coeff, mono }
            })
            .collect();
        terms.sort_by(|a, b| cmp_canonical(&b.mono, &a.mono));
        let mut merged: Vec<Term<C>> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        merged.push(t);
                    }
                }
            }
        }
        Polynomial {
            table,
            terms: merged,
        }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_constant())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    fn check_table(&self, rhs: &Self) -> Result<(), PolyError> {
        if VariableTable::compatible(&self.table, &rhs.table) {
            Ok(())
        } else {
            Err(PolyError::TableMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check_table(rhs)?;
        let mut out: Vec<Term<C>> = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            match cmp_canonical(&self.terms[i].mono, &rhs.terms[j].mono) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(rhs.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].coeff.add(&rhs.terms[j].coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: self.terms[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Ok(Polynomial {
            table: self.table.clone(),
            terms: out,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.checked_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.table.clone());
        }
        Polynomial {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiply by the single term c * m. Multiplication by a fixed monomial
    /// preserves the canonical order, so the term list stays sorted.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.table.clone());
        }
        Polynomial {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check_table(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.table.clone()));
        }
        let mut acc = Self::zero(self.table.clone());
        for t in &rhs.terms {
            acc = acc.checked_add(&self.mul_term(&t.coeff, &t.mono))?;
        }
        Ok(acc)
    }

    /// The unique maximal term under the given order.
    pub fn leading_term(&self, ord: &TermOrder) -> Result<(&C, &Monomial), PolyError> {
        if self.terms.is_empty() {
            return Err(PolyError::ZeroPolynomial);
        }
        if ord.kind() == OrderKind::GrevLex && ord.priority().iter().enumerate().all(|(k, &i)| k == i)
        {
            let t = &self.terms[0];
            return Ok((&t.coeff, &t.mono));
        }
        let t = self
            .terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.mono, &b.mono))
            .expect("nonempty");
        Ok((&t.coeff, &t.mono))
    }

    /// Leading term under the canonical storage order.
    pub fn leading_canonical(&self) -> Option<(&C, &Monomial)> {
        self.terms.first().map(|t| (&t.coeff, &t.mono))
    }

    /// Replace every variable by its conjugate partner; coefficients are
    /// untouched (all fixture coefficients are real rationals).
    pub fn conjugate(&self) -> Result<Self, PolyError> {
        let conj = self.table.conj().ok_or(PolyError::MissingConj)?;
        let terms = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.permute(conj)))
            .collect();
        Ok(Self::from_terms(self.table.clone(), terms))
    }

    fn term_bidegree(&self, mono: &Monomial, weights: &[(u32, u32)]) -> (u32, u32) {
        let mut a = 0u32;
        let mut b = 0u32;
        for (i, &e) in mono.exps().iter().enumerate() {
            a += e as u32 * weights[i].0;
            b += e as u32 * weights[i].1;
        }
        (a, b)
    }

    /// The common weighted bidegree of all terms, or the list of terms that
    /// break it. Doubles as a transcription-typo detector for fixtures.
    pub fn bidegree(&self) -> Result<(u32, u32), PolyError> {
        let weights = self.table.weights().ok_or(PolyError::MissingWeights)?;
        let mut expected: Option<(u32, u32)> = None;
        let mut offenders = Vec::new();
        for t in &self.terms {
            let d = self.term_bidegree(&t.mono, weights);
            match expected {
                None => expected = Some(d),
                Some(e) if e != d => offenders.push(format!(
                    "{} [({},{}) vs ({},{})]",
                    display_term(&self.table, t),
                    d.0,
                    d.1,
                    e.0,
                    e.1
                )),
                _ => {}
            }
        }
        if !offenders.is_empty() {
            return Err(PolyError::NotBihomogeneous { offenders });
        }
        Ok(expected.unwrap_or((0, 0)))
    }

    /// The weighted dehomogenization: exponents of renamed variables carry
    /// over, the two degree-carrying variables are divided out. Requires the
    /// polynomial to be bihomogeneous.
    pub fn dehomogenize(&self) -> Result<Self, PolyError> {
        self.bidegree()?;
        let (reduced, index_map) = self.table.dehom_image()?;
        let arity = reduced.len();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = vec![0u16; arity];
                for (i, &e) in t.mono.exps().iter().enumerate() {
                    if let Some(j) = index_map[i] {
                        exps[j] = e;
                    }
                }
                (t.coeff.clone(), Monomial::new(exps))
            })
            .collect();
        Ok(Self::from_terms(reduced, terms))
    }

    /// Substitute constants for some variables; the result lives on the same
    /// table.
    pub fn specialize(&self, bindings: &[(&str, C)]) -> Result<Self, PolyError> {
        let mut bound: Vec<(usize, C)> = Vec::with_capacity(bindings.len());
        for (name, v) in bindings {
            let i = self
                .table
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            bound.push((i, v.clone()));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut c = t.coeff.clone();
                let mut exps = t.mono.exps().to_vec();
                for (i, v) in &bound {
                    let e = exps[*i];
                    if e > 0 {
                        c = c.mul(&coeff_pow(v, e));
                        exps[*i] = 0;
                    }
                }
                (c, Monomial::new(exps))
            })
            .collect();
        Ok(Self::from_terms(self.table.clone(), terms))
    }

    /// Exact quotient f / g by repeated leading-term division under the
    /// canonical order; fails with `NonDivisible` as soon as a leading term
    /// does not divide the running remainder.
    pub fn exact_divide(&self, g: &Self) -> Result<Self, PolyError> {
        self.check_table(g)?;
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let (g_lc, g_lm) = g.leading_canonical().expect("nonzero");
        let g_lc_inv = g_lc.inv()?;
        let mut r = self.clone();
        let mut q_terms: Vec<(C, Monomial)> = Vec::new();
        while let Some((r_lc, r_lm)) = r.leading_canonical() {
            let m = r_lm.checked_div(g_lm).ok_or(PolyError::NonDivisible)?;
            let c = r_lc.mul(&g_lc_inv);
            r = r.checked_sub(&g.mul_term(&c, &m))?;
            q_terms.push((c, m));
        }
        Ok(Self::from_terms(self.table.clone(), q_terms))
    }

    /// Divide by the leading coefficient under the canonical order. This is
    /// the normal form used for comparisons "up to a nonzero scalar".
    pub fn monic_canonical(&self) -> Self {
        match self.leading_canonical() {
            None => self.clone(),
            Some((lc, _)) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Move the polynomial onto a table that contains every used variable by
    /// name (unused variables may be dropped or added).
    pub fn map_onto(&self, target: &Arc<VariableTable>) -> Result<Self, PolyError> {
        let mut index_map: Vec<Option<usize>> = Vec::with_capacity(self.table.len());
        for name in self.table.names() {
            index_map.push(target.index_of(name));
        }
        let arity = target.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0u16; arity];
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    let j = index_map[i]
                        .ok_or_else(|| PolyError::VariableInUse(self.table.name(i).to_string()))?;
                    exps[j] = e;
                }
            }
            terms.push((t.coeff.clone(), Monomial::new(exps)));
        }
        Ok(Self::from_terms(target.clone(), terms))
    }
}

impl Polynomial<FpElement> {
    pub fn eval(&self, point: &[FpElement], field: &PrimeField) -> FpElement {
        debug_assert_eq!(point.len(), self.table.len());
        let mut acc = field.zero();
        for t in &self.terms {
            let mut v = t.coeff;
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    v = v * point[i].pow(e as u64);
                }
            }
            acc = acc + v;
        }
        acc
    }
}

impl Polynomial<Rational> {
    /// The image of the polynomial over Z_p. Terms whose coefficient reduces
    /// to zero vanish; a denominator divisible by p is a `BadReduction`.
    pub fn reduce_mod_p(&self, field: &PrimeField) -> Result<FpPoly, ScalarError> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.coeff.reduce_mod_p(field)?, t.mono.clone())))
            .collect::<Result<Vec<_>, ScalarError>>()?;
        Ok(Polynomial::from_terms(self.table.clone(), terms))
    }

    /// Value of the mod-p image at a point of Z_p^n.
    pub fn eval_fp(&self, point: &[FpElement], field: &PrimeField) -> Result<FpElement, ScalarError> {
        Ok(self.reduce_mod_p(field)?.eval(point, field))
    }

    /// Write self = scalar * primitive where primitive has coprime integer
    /// coefficients and a positive leading coefficient. Zero stays zero with
    /// scalar one.
    pub fn primitive_part(&self) -> (QPoly, Rational) {
        if self.is_zero() {
            return (self.clone(), Rational::one());
        }
        let mut den_lcm = BigInt::one();
        for t in &self.terms {
            den_lcm = den_lcm.lcm(t.coeff.denom());
        }
        let mut num_gcd = BigInt::zero();
        for t in &self.terms {
            let scaled = t.coeff.numer() * &den_lcm / t.coeff.denom();
            num_gcd = num_gcd.gcd(&scaled);
        }
        debug_assert!(!num_gcd.is_zero());
        let mut scalar = Rational::new(num_gcd, den_lcm).expect("nonzero lcm");
        if self.terms[0].coeff.is_negative() {
            scalar = -scalar;
        }
        let inv = scalar.recip().expect("nonzero scalar");
        (self.scale(&inv), scalar)
    }

    /// The largest monomial dividing every term.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.mono.clone();
        Some(it.fold(first, |acc, t| acc.gcd(&t.mono)))
    }
}

fn display_factors(table: &VariableTable, mono: &Monomial, out: &mut String) {
    let mut first = true;
    for (i, &e) in mono.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(table.name(i));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

fn display_term<C: Coefficient>(table: &VariableTable, t: &Term<C>) -> String {
    let mut s = String::new();
    let (_, abs) = t.coeff.sign_abs();
    if t.mono.is_constant() {
        s.push_str(&abs.to_string());
    } else if abs.is_one() {
        display_factors(table, &t.mono, &mut s);
    } else {
        s.push_str(&abs.to_string());
        s.push('*');
        display_factors(table, &t.mono, &mut s);
    }
    s
}

/// Canonical printed form: terms descending under the canonical order,
/// explicit `*`, sign leading each term. `parse(print(f)) == f` exactly.
impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let (negative, _) = t.coeff.sign_abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", display_term(&self.table, t))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table2() -> Arc<VariableTable> {
        VariableTable::from_names(&["x", "y"]).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn poly(table: &Arc<VariableTable>, terms: &[(i64, [u16; 2])]) -> QPoly {
        Polynomial::from_terms(
            table.clone(),
            terms
                .iter()
                .map(|(c, e)| (q(*c), Monomial::new(e.to_vec())))
                .collect(),
        )
    }

    #[test]
    fn difference_of_squares() {
        let t = table2();
        let f = poly(&t, &[(1, [1, 0]), (-1, [0, 1])]);
        let g = poly(&t, &[(1, [1, 0]), (1, [0, 1])]);
        let expect = poly(&t, &[(1, [2, 0]), (-1, [0, 2])]);
        assert_eq!(f.checked_mul(&g).unwrap(), expect);
    }

    #[test]
    fn add_zero_is_identity() {
        let t = table2();
        let f = poly(&t, &[(3, [1, 1]), (2, [0, 0])]);
        let z = Polynomial::zero(t.clone());
        assert_eq!(f.checked_add(&z).unwrap(), f);
    }

    #[test]
    fn table_mismatch_detected() {
        let t1 = table2();
        let t2 = VariableTable::from_names(&["a", "b"]).unwrap();
        let f = poly(&t1, &[(1, [1, 0])]);
        let g = Polynomial::from_terms(t2, vec![(q(1), Monomial::new(vec![1, 0]))]);
        assert_eq!(f.checked_add(&g), Err(PolyError::TableMismatch));
    }

    #[test]
    fn leading_term_order_contrast() {
        // x + y^2: lex picks x, grlex picks y^2.
        let t = table2();
        let f = poly(&t, &[(1, [1, 0]), (1, [0, 2])]);
        let lex = TermOrder::lex(2);
        let grlex = TermOrder::natural(OrderKind::GrLex, 2);
        let (c, m) = f.leading_term(&lex).unwrap();
        assert!(c.is_one());
        assert_eq!(m, &Monomial::new(vec![1, 0]));
        let (_, m) = f.leading_term(&grlex).unwrap();
        assert_eq!(m, &Monomial::new(vec![0, 2]));
    }

    #[test]
    fn leading_term_of_constant() {
        let t = table2();
        let f = poly(&t, &[(5, [0, 0])]);
        let (c, m) = f.leading_term(&TermOrder::grevlex(2)).unwrap();
        assert_eq!(c, &q(5));
        assert!(m.is_constant());
    }

    #[test]
    fn leading_term_of_zero_fails() {
        let t = table2();
        let z: QPoly = Polynomial::zero(t);
        assert_eq!(
            z.leading_term(&TermOrder::grevlex(2)).unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn specialize_and_identity() {
        let t = table2();
        let f = poly(&t, &[(1, [2, 0]), (1, [0, 1])]);
        let g = f.specialize(&[("x", q(0))]).unwrap();
        assert_eq!(g, poly(&t, &[(1, [0, 1])]));
        let h = f.specialize(&[]).unwrap();
        assert_eq!(h, f);
    }

    #[test]
    fn exact_divide_basics() {
        let t = table2();
        let f = poly(&t, &[(1, [2, 0]), (-1, [0, 2])]);
        let g = poly(&t, &[(1, [1, 0]), (-1, [0, 1])]);
        let expect = poly(&t, &[(1, [1, 0]), (1, [0, 1])]);
        assert_eq!(f.exact_divide(&g).unwrap(), expect);

        let f2 = poly(&t, &[(1, [2, 0]), (1, [0, 0])]);
        let x = poly(&t, &[(1, [1, 0])]);
        assert_eq!(f2.exact_divide(&x), Err(PolyError::NonDivisible));
        assert_eq!(
            f2.exact_divide(&Polynomial::zero(t)),
            Err(PolyError::ZeroDivisor)
        );
    }

    #[test]
    fn eval_fp_examples() {
        let t = table2();
        let p5 = PrimeField::new(5).unwrap();
        // x^2 - 1 at x = 2 mod 5 -> 3
        let f = poly(&t, &[(1, [2, 0]), (-1, [0, 0])]);
        let v = f.eval_fp(&[p5.element(2), p5.element(0)], &p5).unwrap();
        assert_eq!(v.value(), 3);
        // every polynomial at the all-zeros point gives its constant term
        let g = poly(&t, &[(7, [3, 1]), (4, [0, 0])]);
        let v = g.eval_fp(&[p5.element(0), p5.element(0)], &p5).unwrap();
        assert_eq!(v.value(), 4);
    }

    #[test]
    fn primitive_part_scaling() {
        let t = table2();
        let f = poly(&t, &[(-4, [1, 0]), (-6, [0, 1])]);
        let (prim, scalar) = f.primitive_part();
        assert_eq!(prim, poly(&t, &[(2, [1, 0]), (3, [0, 1])]));
        assert_eq!(scalar, q(-2));
        assert_eq!(prim.scale(&scalar), f);
    }

    #[test]
    fn conjugate_involution() {
        let t = VariableTable::from_names(&["x1", "xc1"])
            .unwrap()
            .with_conj_pairs(&[("x1".into(), "xc1".into())])
            .unwrap();
        let f = Polynomial::from_terms(
            t.clone(),
            vec![
                (q(2), Monomial::new(vec![2, 0])),
                (q(3), Monomial::new(vec![0, 1])),
            ],
        );
        let c = f.conjugate().unwrap();
        assert_eq!(
            c,
            Polynomial::from_terms(
                t.clone(),
                vec![
                    (q(2), Monomial::new(vec![0, 2])),
                    (q(3), Monomial::new(vec![1, 0])),
                ],
            )
        );
        assert_eq!(c.conjugate().unwrap(), f);
    }

    #[test]
    fn mixed_bidegrees_rejected_with_offenders() {
        let t = VariableTable::from_names(&["a", "b"])
            .unwrap()
            .with_weights(vec![(1, 0), (0, 1)])
            .unwrap();
        let f = Polynomial::from_terms(
            t,
            vec![
                (q(1), Monomial::new(vec![1, 0])),
                (q(1), Monomial::new(vec![0, 1])),
            ],
        );
        match f.bidegree() {
            Err(PolyError::NotBihomogeneous { offenders }) => {
                assert_eq!(offenders.len(), 1);
            }
            other => panic!("expected NotBihomogeneous, got {other:?}"),
        }
    }

    #[test]
    fn display_canonical() {
        let t = VariableTable::from_names(&["x1", "xc1", "x2", "xc2"]).unwrap();
        let f = Polynomial::from_terms(
            t,
            vec![
                (q(22), Monomial::new(vec![0, 0, 0, 0])),
                (q(12), Monomial::new(vec![1, 0, 0, 0])),
                (q(-1), Monomial::new(vec![0, 0, 0, 1])),
            ],
        );
        assert_eq!(f.to_string(), "12*x1 - xc2 + 22");
    }
}
