//! Exact coefficient domains: arbitrary-precision rationals and prime fields.
//!
//! `Rational` is the coefficient type for everything read from fixture files;
//! `FpElement` is the coefficient type for modular sampling and the brute-force
//! variety oracle. Both are immutable values and safe to share across threads.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    /// The prime divides a denominator, so the rational has no image mod p.
    #[error("denominator {denominator} is not invertible mod {prime}")]
    BadReduction { prime: u64, denominator: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Arbitrary-precision rational in canonical form: reduced, denominator >= 1,
/// zero stored as 0/1. Backed by `num_rational::BigRational`, which maintains
/// exactly those invariants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `numer / denom`, reduced to canonical form.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ScalarError> {
        let d: BigInt = denom.into();
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Image of the rational in Z_p: numerator * denominator^-1 mod p.
    /// Fails with `BadReduction` when p divides the denominator.
    pub fn reduce_mod_p(&self, p: &PrimeField) -> Result<FpElement, ScalarError> {
        let modulus = BigInt::from(p.modulus());
        let num = self.numer().mod_floor(&modulus);
        let den = self.denom().mod_floor(&modulus);
        let den_u64 = u64::try_from(&den).expect("mod_floor result fits u64");
        if den_u64 == 0 {
            return Err(ScalarError::BadReduction {
                prime: p.modulus(),
                denominator: self.denom().to_string(),
            });
        }
        let num_el = p.element(u64::try_from(&num).expect("mod_floor result fits u64"));
        let den_el = p.element(den_u64);
        Ok(num_el * den_el.inv().expect("nonzero mod prime"))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div for &Rational {
    type Output = Rational;
    /// Panics on division by zero; use `checked_div` where zero is an input.
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// A prime modulus, checked at construction by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField(u64);

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(PrimeField(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.0
    }

    pub fn element(&self, value: u64) -> FpElement {
        FpElement {
            value: value % self.0,
            modulus: self.0,
        }
    }

    pub fn zero(&self) -> FpElement {
        self.element(0)
    }

    pub fn one(&self) -> FpElement {
        self.element(1)
    }

    /// The canonical image of a signed integer.
    pub fn from_i64(&self, n: i64) -> FpElement {
        let m = self.0 as i128;
        let v = (n as i128).rem_euclid(m) as u64;
        self.element(v)
    }
}

/// Deterministic trial division; the primes used here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The first `count` primes in the open interval `(lo, hi)`.
pub fn primes_in_window(lo: u64, hi: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = lo + 1;
    while n < hi && out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// An element of Z_p. The modulus travels with the value; mixing moduli in
/// arithmetic is a programming error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FpElement {
    value: u64,
    modulus: u64,
}

impl FpElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn field(&self) -> PrimeField {
        PrimeField(self.modulus)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<FpElement, ScalarError> {
        if self.value == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime so gcd must be 1");
        let v = t0.rem_euclid(self.modulus as i128) as u64;
        Ok(FpElement {
            value: v,
            modulus: self.modulus,
        })
    }

    pub fn checked_div(&self, rhs: &FpElement) -> Result<FpElement, ScalarError> {
        Ok(*self * rhs.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> FpElement {
        let mut base = *self;
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn assert_same_field(&self, rhs: &FpElement) {
        assert_eq!(self.modulus, rhs.modulus, "mixed prime fields");
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        self.assert_same_field(&rhs);
        let mut v = self.value + rhs.value;
        if v >= self.modulus {
            v -= self.modulus;
        }
        FpElement {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        self.assert_same_field(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus - rhs.value
        };
        FpElement {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        self.assert_same_field(&rhs);
        let v = (self.value as u128 * rhs.value as u128 % self.modulus as u128) as u64;
        FpElement {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        if self.value == 0 {
            self
        } else {
            FpElement {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }
}
