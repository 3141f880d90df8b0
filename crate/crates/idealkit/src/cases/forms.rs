//! Quotients of polynomials and the two operations the derivation checks
//! need: cross-multiplied difference numerators and solving an equation that
//! is linear in one adjoined unknown.

use thiserror::Error;

use crate::poly::{Monomial, PolyError, QPoly};
use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormsError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("not linear in {variable}: degree {degree}")]
    NotLinear { variable: String, degree: u16 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// numerator / denominator with no normalization beyond content removal.
#[derive(Debug, Clone)]
pub struct RationalForm {
    pub numerator: QPoly,
    pub denominator: QPoly,
}

impl RationalForm {
    pub fn new(numerator: QPoly, denominator: QPoly) -> Result<Self, FormsError> {
        if denominator.is_zero() {
            return Err(FormsError::ZeroDenominator);
        }
        Ok(RationalForm {
            numerator,
            denominator,
        })
    }

    pub fn conjugate(&self) -> Result<Self, FormsError> {
        Ok(RationalForm {
            numerator: self.numerator.conjugate()?,
            denominator: self.denominator.conjugate()?,
        })
    }
}

/// a.num * b.den - b.num * a.den, with integer content removed and the sign
/// normalized so the canonical leading coefficient is positive.
pub fn rational_difference_numerator(a: &RationalForm, b: &RationalForm) -> Result<QPoly, FormsError> {
    let left = a.numerator.checked_mul(&b.denominator)?;
    let right = b.numerator.checked_mul(&a.denominator)?;
    let diff = left.checked_sub(&right)?;
    Ok(diff.primitive_part().0)
}

/// Write f = A*v + B with A, B free of v and A nonzero; the solution of
/// f = 0 for v is then the form (-B) / A.
pub fn solve_linear_in(f: &QPoly, var: &str) -> Result<RationalForm, FormsError> {
    let idx = f
        .table()
        .index_of(var)
        .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
    let max_deg = f.terms().iter().map(|t| t.mono.exp(idx)).max().unwrap_or(0);
    if max_deg != 1 {
        return Err(FormsError::NotLinear {
            variable: var.to_string(),
            degree: max_deg,
        });
    }
    let mut a_terms: Vec<(Rational, Monomial)> = Vec::new();
    let mut b_terms: Vec<(Rational, Monomial)> = Vec::new();
    for t in f.terms() {
        if t.mono.exp(idx) == 1 {
            let mut exps = t.mono.exps().to_vec();
            exps[idx] = 0;
            a_terms.push((t.coeff.clone(), Monomial::new(exps)));
        } else {
            b_terms.push((t.coeff.clone(), t.mono.clone()));
        }
    }
    let a = QPoly::from_terms(f.table().clone(), a_terms);
    let b = QPoly::from_terms(f.table().clone(), b_terms);
    RationalForm::new(b.neg(), a)
}

/// Result of comparing a computed polynomial against a printed target after
/// stripping both to primitive parts and common monomial factors.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub equal: bool,
    /// scalar s with computed = s * (m_c / m_t) * target on the agreeing part
    pub scalar: Rational,
    /// monomial content stripped from (computed, target)
    pub monomial_content: (Monomial, Monomial),
    pub diffs: Vec<(Monomial, Rational, Rational)>,
}

impl Comparison {
    /// Exact equality up to the scalar only (no monomial factor involved).
    pub fn scalar_only(&self) -> bool {
        self.equal
            && self.monomial_content.0 == self.monomial_content.1
    }
}

/// Compare `computed` against `target` up to a nonzero scalar and a common
/// monomial factor. Both sides are normalized to monic primitive parts with
/// their monomial content extracted; coefficient differences are itemized
/// per monomial (of the stripped target side).
pub fn compare_up_to_scalar(computed: &QPoly, target: &QPoly) -> Result<Comparison, FormsError> {
    let arity = computed.table().len();
    let trivial = Monomial::one(arity);
    if computed.is_zero() || target.is_zero() {
        return Ok(Comparison {
            equal: computed.is_zero() && target.is_zero(),
            scalar: Rational::one(),
            monomial_content: (trivial.clone(), trivial),
            diffs: Vec::new(),
        });
    }
    let mc = computed.monomial_content().expect("nonzero");
    let mt = target.monomial_content().expect("nonzero");
    let c_stripped = strip_monomial(computed, &mc);
    let t_stripped = strip_monomial(target, &mt);
    let (c_prim, c_scale) = c_stripped.primitive_part();
    let (t_prim, t_scale) = t_stripped.primitive_part();
    let scalar = c_scale.checked_div(&t_scale).expect("nonzero scales");

    let mut diffs = Vec::new();
    let mut i = 0;
    let mut j = 0;
    let ct = c_prim.terms();
    let tt = t_prim.terms();
    while i < ct.len() || j < tt.len() {
        match (ct.get(i), tt.get(j)) {
            (Some(c), Some(t)) => match crate::poly::cmp_canonical(&c.mono, &t.mono) {
                std::cmp::Ordering::Greater => {
                    diffs.push((c.mono.clone(), Rational::zero(), c.coeff.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    diffs.push((t.mono.clone(), t.coeff.clone(), Rational::zero()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if c.coeff != t.coeff {
                        diffs.push((c.mono.clone(), t.coeff.clone(), c.coeff.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(c), None) => {
                diffs.push((c.mono.clone(), Rational::zero(), c.coeff.clone()));
                i += 1;
            }
            (None, Some(t)) => {
                diffs.push((t.mono.clone(), t.coeff.clone(), Rational::zero()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Ok(Comparison {
        equal: diffs.is_empty(),
        scalar,
        monomial_content: (mc, mt),
        diffs,
    })
}

fn strip_monomial(f: &QPoly, m: &Monomial) -> QPoly {
    QPoly::from_terms(
        f.table().clone(),
        f.terms()
            .iter()
            .map(|t| {
                (
                    t.coeff.clone(),
                    t.mono.checked_div(m).expect("monomial content divides"),
                )
            })
            .collect(),
    )
}
