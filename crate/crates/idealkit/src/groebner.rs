//! Buchberger's algorithm with the coprime and chain criteria, multivariate
//! division (normal forms), reduced bases, triviality detection, and radical
//! membership through the adjoined-variable trick.
//!
//! The pair selection is the normal strategy: the pair with the smallest lcm
//! under the working order goes first, ties broken by generator indices, so
//! identical inputs always produce byte-identical bases.
//!
//! Over Q the inner loop is fraction-free: instead of dividing by leading
//! coefficients it cross-multiplies with integer cofactors and strips integer
//! content after every cancellation, which keeps intermediate coefficients
//! primitive. Over Z_p the same hooks degenerate to making things monic.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Coefficient, Monomial, PolyError, Polynomial, QPoly, TermOrder, VariableTable};
use crate::scalars::{FpElement, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroebnerError {
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Caps on the Buchberger loop; exceeding one aborts with `ResourceLimit`,
/// never silently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Limits {
    /// Cap on S-polynomial reductions performed.
    pub max_pairs: usize,
    /// Cap on terms in any intermediate polynomial.
    pub max_terms: usize,
    /// Cap on the bit size of intermediate leading coefficients; lex runs
    /// can blow up in coefficient size long before the term cap bites.
    pub max_coeff_bits: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 1_000_000,
            max_terms: 100_000,
            max_coeff_bits: 1 << 20,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, serde::Serialize)]
pub struct GroebnerStats {
    pub pairs_considered: usize,
    pub pairs_reduced: usize,
    pub reductions_to_zero: usize,
    pub max_intermediate_terms: usize,
    pub max_coeff_bits: u64,
}

/// Coefficient domains the engine can run over.
pub trait GbCoeff: Coefficient {
    /// Cofactors `(mf, mg)` with `mf * fc == mg * gc`, as small as the domain
    /// allows (lcm cofactors over Z, `(1, fc/gc)` over a field).
    fn cross(fc: &Self, gc: &Self) -> (Self, Self);
    /// Bit size of the coefficient, used by the blow-up guard.
    fn bit_size(&self) -> u64;
    /// Renormalize a term list after a cancellation: strip integer content
    /// and fix the sign over Q, make monic over Z_p. Must only change the
    /// terms by a nonzero scalar.
    fn renorm(terms: &mut [(Self, Monomial)]);
}

impl GbCoeff for Rational {
    fn cross(fc: &Self, gc: &Self) -> (Self, Self) {
        // Engine invariant: coefficients are integers (denominator 1).
        debug_assert!(fc.is_integer() && gc.is_integer());
        let g = fc.numer().gcd(gc.numer());
        let mf = Rational::from_int(gc.numer() / &g);
        let mg = Rational::from_int(fc.numer() / &g);
        (mf, mg)
    }

    fn bit_size(&self) -> u64 {
        self.numer().bits()
    }

    fn renorm(terms: &mut [(Self, Monomial)]) {
        if terms.is_empty() {
            return;
        }
        let mut content = BigInt::zero();
        for (c, _) in terms.iter() {
            debug_assert!(c.is_integer());
            content = content.gcd(c.numer());
            if content.is_one() {
                break;
            }
        }
        if terms[0].0.is_negative() {
            content = -content;
        }
        if content.is_one() {
            return;
        }
        for (c, _) in terms.iter_mut() {
            *c = Rational::from_int(c.numer() / &content);
        }
    }
}

impl GbCoeff for FpElement {
    fn cross(fc: &Self, gc: &Self) -> (Self, Self) {
        (self_one(fc), *fc * gc.inv().expect("nonzero leading coefficient"))
    }

    fn bit_size(&self) -> u64 {
        64
    }

    fn renorm(terms: &mut [(Self, Monomial)]) {
        if let Some((lc, _)) = terms.first() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for (c, _) in terms.iter_mut() {
                *c = *c * inv;
            }
        }
    }
}

fn self_one(c: &FpElement) -> FpElement {
    c.field().one()
}

/// Clear denominators so the engine invariant (integer coefficients) holds.
fn clear_denominators(f: &QPoly) -> QPoly {
    f.primitive_part().0
}

// ---------------------------------------------------------------------------
// Internal representation: term lists sorted descending under the working
// order, so leading terms are O(1) in the hot loop.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct OrdPoly<C> {
    terms: Vec<(C, Monomial)>,
}

impl<C: GbCoeff> OrdPoly<C> {
    fn from_poly(f: &Polynomial<C>, ord: &TermOrder) -> Self {
        let mut terms: Vec<(C, Monomial)> = f
            .terms()
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.clone()))
            .collect();
        terms.sort_by(|a, b| ord.cmp(&b.1, &a.1));
        OrdPoly { terms }
    }

    fn into_poly(self, table: Arc<VariableTable>) -> Polynomial<C> {
        Polynomial::from_terms(table, self.terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    fn lc(&self) -> &C {
        &self.terms[0].0
    }

    /// self := mf * self - mg * m * g, merged under `ord`.
    fn cancel(&self, mf: &C, mg: &C, m: &Monomial, g: &OrdPoly<C>, ord: &TermOrder) -> OrdPoly<C> {
        let mf_is_one = mf.is_one();
        let scale = |c: &C| if mf_is_one { c.clone() } else { c.mul(mf) };
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].1.mul(m);
            match ord.cmp(&self.terms[i].1, &gm) {
                std::cmp::Ordering::Greater => {
                    out.push((scale(&self.terms[i].0), self.terms[i].1.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((g.terms[j].0.mul(mg).neg(), gm));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = scale(&self.terms[i].0).sub(&g.terms[j].0.mul(mg));
                    if !c.is_zero() {
                        out.push((c, gm));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push((scale(&self.terms[i].0), self.terms[i].1.clone()));
            i += 1;
        }
        while j < g.terms.len() {
            out.push((g.terms[j].0.mul(mg).neg(), g.terms[j].1.mul(m)));
            j += 1;
        }
        OrdPoly { terms: out }
    }
}

/// Full fraction-free reduction of `r` by `basis`: every term of the result
/// is divisible by no basis leading monomial. The result is defined up to a
/// nonzero scalar and kept primitive.
fn reduce_full<C: GbCoeff>(
    mut r: OrdPoly<C>,
    basis: &[OrdPoly<C>],
    ord: &TermOrder,
    limits: &Limits,
    stats: &mut GroebnerStats,
) -> Result<OrdPoly<C>, GroebnerError> {
    let mut idx = 0;
    while idx < r.terms.len() {
        let mut reducer: Option<usize> = None;
        for (bi, b) in basis.iter().enumerate() {
            if !b.is_zero() && b.lm().divides(&r.terms[idx].1) {
                reducer = Some(bi);
                break;
            }
        }
        match reducer {
            None => idx += 1,
            Some(bi) => {
                let b = &basis[bi];
                let m = r.terms[idx].1.checked_div(b.lm()).expect("divides");
                let (mf, mg) = C::cross(&r.terms[idx].0, b.lc());
                // terms above idx only get rescaled, so irreducibility there
                // is preserved and the scan can resume at idx
                let head_irreducible = idx;
                r = r.cancel(&mf, &mg, &m, b, ord);
                C::renorm(&mut r.terms);
                idx = head_irreducible;
                stats.max_intermediate_terms = stats.max_intermediate_terms.max(r.terms.len());
                if r.terms.len() > limits.max_terms {
                    return Err(GroebnerError::ResourceLimit(format!(
                        "intermediate polynomial grew past {} terms",
                        limits.max_terms
                    )));
                }
                let bits = r.terms.iter().map(|(c, _)| c.bit_size()).max().unwrap_or(0);
                stats.max_coeff_bits = stats.max_coeff_bits.max(bits);
                if bits > limits.max_coeff_bits {
                    return Err(GroebnerError::ResourceLimit(format!(
                        "intermediate coefficient grew past {} bits",
                        limits.max_coeff_bits
                    )));
                }
            }
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// Multivariate division remainder. Deterministic: always reduces the
/// largest reducible term, using the first divisor in the given list order.
/// The result satisfies `f - normal_form(f) ∈ <G>` exactly.
pub fn normal_form<C: GbCoeff>(
    f: &Polynomial<C>,
    reducers: &[Polynomial<C>],
    ord: &TermOrder,
) -> Result<Polynomial<C>, GroebnerError> {
    for g in reducers {
        if !VariableTable::compatible(f.table(), g.table()) {
            return Err(GroebnerError::Poly(PolyError::TableMismatch));
        }
    }
    let basis: Vec<OrdPoly<C>> = reducers
        .iter()
        .map(|g| OrdPoly::from_poly(g, ord))
        .collect();
    let mut r = OrdPoly::from_poly(f, ord);
    let mut idx = 0;
    while idx < r.terms.len() {
        let mut reducer: Option<usize> = None;
        for (bi, b) in basis.iter().enumerate() {
            if !b.is_zero() && b.lm().divides(&r.terms[idx].1) {
                reducer = Some(bi);
                break;
            }
        }
        match reducer {
            None => idx += 1,
            Some(bi) => {
                let b = &basis[bi];
                let m = r.terms[idx].1.checked_div(b.lm()).expect("divides");
                // exact field step: r -= (c/lc_b) * m * b
                let q = r.terms[idx].0.mul(&b.lc().inv().map_err(PolyError::from)?);
                r = r.cancel(&q.one_like(), &q, &m, b, ord);
            }
        }
    }
    Ok(r.into_poly(f.table().clone()))
}

/// The lcm-cancellation combination of two nonzero polynomials.
pub fn s_polynomial<C: GbCoeff>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    ord: &TermOrder,
) -> Result<Polynomial<C>, GroebnerError> {
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::Poly(PolyError::ZeroPolynomial));
    }
    if !VariableTable::compatible(f.table(), g.table()) {
        return Err(GroebnerError::Poly(PolyError::TableMismatch));
    }
    let (fc, fm) = f.leading_term(ord)?;
    let (gc, gm) = g.leading_term(ord)?;
    let lcm = fm.lcm(gm);
    let mf_mono = lcm.checked_div(fm).expect("lcm divisible");
    let mg_mono = lcm.checked_div(gm).expect("lcm divisible");
    // S = (lcm/lt(f)) f - (lcm/lt(g)) g with coefficients 1/lc
    let a = f.mul_term(&fc.inv().map_err(PolyError::from)?, &mf_mono);
    let b = g.mul_term(&gc.inv().map_err(PolyError::from)?, &mg_mono);
    a.checked_sub(&b).map_err(GroebnerError::Poly)
}

/// A reduced Gröbner basis: monic inter-reduced generators sorted ascending
/// by leading monomial under the order they were computed with.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<C: Coefficient> {
    generators: Vec<Polynomial<C>>,
    order: TermOrder,
    stats: GroebnerStats,
}

impl<C: GbCoeff> GroebnerBasis<C> {
    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn stats(&self) -> &GroebnerStats {
        &self.stats
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff the basis is exactly {1}: the ideal is the whole ring, i.e.
    /// the system has no solution over the algebraic closure.
    pub fn is_trivial(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant() && !self.generators[0].is_zero()
    }

    /// Leading monomials of all generators under the basis order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_term(&self.order).ok().map(|(_, m)| m.clone()))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial<C>) -> Result<Polynomial<C>, GroebnerError> {
        normal_form(f, &self.generators, &self.order)
    }

    /// Ideal membership test.
    pub fn contains(&self, f: &Polynomial<C>) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the coprime (product) criterion and the chain
/// criterion, normal selection strategy. Returns the reduced monic basis.
pub fn buchberger<C: GbCoeff>(
    gens: &[Polynomial<C>],
    ord: &TermOrder,
    limits: &Limits,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    let table = gens
        .first()
        .map(|g| g.table().clone())
        .ok_or(GroebnerError::Poly(PolyError::ZeroPolynomial))?;
    for g in gens {
        if !VariableTable::compatible(&table, g.table()) {
            return Err(GroebnerError::Poly(PolyError::TableMismatch));
        }
    }

    let mut stats = GroebnerStats::default();
    let mut basis: Vec<OrdPoly<C>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut p = OrdPoly::from_poly(g, ord);
        C::renorm(&mut p.terms);
        basis.push(p);
    }

    let mut pairs: Vec<Pair> = Vec::new();
    let mut remaining: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push(Pair {
                i,
                j,
                lcm: basis[i].lm().lcm(basis[j].lm()),
            });
            remaining.insert((i, j));
        }
    }

    while !pairs.is_empty() {
        stats.pairs_considered += 1;
        // normal strategy: smallest lcm under ord, ties by generator indices
        let mut best = 0;
        for k in 1..pairs.len() {
            let c = ord.cmp(&pairs[k].lcm, &pairs[best].lcm).then_with(|| {
                (pairs[k].i, pairs[k].j).cmp(&(pairs[best].i, pairs[best].j))
            });
            if c == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        remaining.remove(&(pair.i, pair.j));
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);

        // coprime criterion
        if fi.lm().is_coprime_with(fj.lm()) {
            continue;
        }
        // chain criterion: some g_k divides the lcm and both flanking pairs
        // are already done
        let chained = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lm().divides(&pair.lcm)
                && !remaining.contains(&key(pair.i, k))
                && !remaining.contains(&key(pair.j, k))
        });
        if chained {
            continue;
        }

        stats.pairs_reduced += 1;
        if stats.pairs_reduced > limits.max_pairs {
            return Err(GroebnerError::ResourceLimit(format!(
                "pair reductions exceeded {}",
                limits.max_pairs
            )));
        }
        // fraction-free S-polynomial
        let m_i = pair.lcm.checked_div(fi.lm()).expect("lcm");
        let m_j = pair.lcm.checked_div(fj.lm()).expect("lcm");
        let (mf, mg) = C::cross(fi.lc(), fj.lc());
        let shifted_i = OrdPoly {
            terms: fi
                .terms
                .iter()
                .map(|(c, m)| (c.clone(), m.mul(&m_i)))
                .collect(),
        };
        let mut s = shifted_i.cancel(&mf, &mg, &m_j, fj, ord);
        C::renorm(&mut s.terms);

        let s = reduce_full(s, &basis, ord, limits, &mut stats)?;
        if s.is_zero() {
            stats.reductions_to_zero += 1;
            continue;
        }
        let new_index = basis.len();
        for (k, b) in basis.iter().enumerate() {
            pairs.push(Pair {
                i: k,
                j: new_index,
                lcm: b.lm().lcm(s.lm()),
            });
            remaining.insert((k, new_index));
        }
        basis.push(s);
    }

    // minimize: drop generators whose leading monomial another one divides
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j].lm().divides(basis[i].lm())
                && (basis[i].lm() != basis[j].lm() || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial<C>> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(p, _)| p.clone().into_poly(table.clone()))
        .collect();

    // inter-reduce tails and make monic
    let mut reduced: Vec<Polynomial<C>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial<C>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let nf = normal_form(&minimal[i], &others, ord)?;
        if !nf.is_zero() {
            reduced.push(nf.monic_under(ord)?);
        }
    }
    reduced.sort_by(|a, b| {
        let (_, am) = a.leading_term(ord).expect("nonzero");
        let (_, bm) = b.leading_term(ord).expect("nonzero");
        ord.cmp(am, bm)
    });

    Ok(GroebnerBasis {
        generators: reduced,
        order: ord.clone(),
        stats,
    })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

trait MonicExt<C: Coefficient>: Sized {
    fn monic_under(&self, ord: &TermOrder) -> Result<Self, GroebnerError>;
}

impl<C: GbCoeff> MonicExt<C> for Polynomial<C> {
    fn monic_under(&self, ord: &TermOrder) -> Result<Self, GroebnerError> {
        let (lc, _) = self.leading_term(ord)?;
        let inv = lc.inv().map_err(PolyError::from)?;
        Ok(self.scale(&inv))
    }
}

/// Radical membership by the adjoined-variable trick: f vanishes on the
/// variety of `gens` iff the ideal generated by `gens` and `1 - t*f` is the
/// whole ring. A fresh lowest-priority variable is adjoined internally and
/// the test runs under grevlex, where triviality is order-independent.
pub fn radical_member(f: &QPoly, gens: &[QPoly], limits: &Limits) -> Result<bool, GroebnerError> {
    if gens.is_empty() {
        return Err(GroebnerError::Poly(PolyError::ZeroPolynomial));
    }
    if f.is_zero() {
        return Ok(true);
    }
    let table = gens[0].table();
    let extended = table.extended("t_rad")?;
    let ord = TermOrder::grevlex(extended.len());
    let mut lifted: Vec<QPoly> = gens
        .iter()
        .map(|g| g.map_onto(&extended))
        .collect::<Result<_, _>>()?;
    let t_name = extended.name(extended.len() - 1).to_string();
    let t = Polynomial::variable(extended.clone(), &t_name, Rational::one(), 1)?;
    let one = Polynomial::constant(extended.clone(), Rational::one());
    let saturator = one.checked_sub(&t.checked_mul(&f.map_onto(&extended)?)?)?;
    lifted.push(saturator);
    let lifted: Vec<QPoly> = lifted.iter().map(clear_denominators).collect();
    Ok(buchberger(&lifted, &ord, limits)?.is_trivial())
}

/// Convenience: Buchberger over Q after clearing denominators.
pub fn buchberger_q(
    gens: &[QPoly],
    ord: &TermOrder,
    limits: &Limits,
) -> Result<GroebnerBasis<Rational>, GroebnerError> {
    let cleared: Vec<QPoly> = gens.iter().map(clear_denominators).collect();
    buchberger(&cleared, ord, limits)
}
