//! Structural analysis of computed bases: the pure-power finiteness
//! criterion, leading-term extraction, and standard-monomial counting.

use std::sync::Arc;

use thiserror::Error;

use crate::groebner::GroebnerBasis;
use crate::poly::{Monomial, TermOrder, VariableTable};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyzeError {
    #[error("standard monomial count exceeded the cap of {0}")]
    CapExceeded(usize),
}

/// Where a leading-term set came from; fixture-sourced sets are labelled as
/// such in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum LeadingTermSource {
    ComputedBasis,
    DeclaredFixture,
}

/// The set of leading monomials of a basis under some order.
#[derive(Debug, Clone)]
pub struct LeadingTermSet {
    pub monomials: Vec<Monomial>,
    pub order: TermOrder,
    pub source: LeadingTermSource,
    pub table: Arc<VariableTable>,
}

impl LeadingTermSet {
    pub fn from_monomials(
        table: Arc<VariableTable>,
        order: TermOrder,
        mut monomials: Vec<Monomial>,
        source: LeadingTermSource,
    ) -> Self {
        monomials.sort();
        monomials.dedup();
        LeadingTermSet {
            monomials,
            order,
            source,
            table,
        }
    }

    pub fn contains_constant(&self) -> bool {
        self.monomials.iter().any(|m| m.is_constant())
    }
}

/// Leading monomials of all generators of a computed basis.
pub fn leading_terms<C: crate::groebner::GbCoeff>(
    gb: &GroebnerBasis<C>,
    table: Arc<VariableTable>,
) -> LeadingTermSet {
    LeadingTermSet::from_monomials(
        table,
        gb.order().clone(),
        gb.leading_monomials(),
        LeadingTermSource::ComputedBasis,
    )
}

/// The finiteness criterion: the system has finitely many solutions iff for
/// every variable some pure power x^m appears among the leading terms.
pub fn is_zero_dimensional(h: &LeadingTermSet) -> bool {
    if h.contains_constant() {
        // the unit ideal: empty variety, trivially finite
        return true;
    }
    let n = h.table.len();
    (0..n).all(|v| {
        h.monomials.iter().any(|m| {
            m.exp(v) > 0 && (0..n).all(|w| w == v || m.exp(w) == 0)
        })
    })
}

/// Number of monomials divisible by no element of the set (the vector-space
/// dimension of the quotient ring), or `None` when the count is infinite.
/// Counts by walking the lattice box bounded by the pure powers; aborts with
/// `CapExceeded` past `cap`.
pub fn standard_monomials(h: &LeadingTermSet, cap: usize) -> Result<Option<usize>, AnalyzeError> {
    if h.contains_constant() {
        return Ok(Some(0));
    }
    if !is_zero_dimensional(h) {
        return Ok(None);
    }
    let n = h.table.len();
    // componentwise bound: the smallest pure power of each variable
    let bound: Vec<u16> = (0..n)
        .map(|v| {
            h.monomials
                .iter()
                .filter(|m| m.exp(v) > 0 && (0..n).all(|w| w == v || m.exp(w) == 0))
                .map(|m| m.exp(v))
                .min()
                .expect("zero-dimensional")
        })
        .collect();
    let mixed: Vec<&Monomial> = h
        .monomials
        .iter()
        .filter(|m| m.exps().iter().filter(|&&e| e > 0).count() > 1)
        .collect();

    let mut count = 0usize;
    let mut exps = vec![0u16; n];
    walk(&mut exps, 0, &bound, &mixed, cap, &mut count)?;
    Ok(Some(count))
}

fn walk(
    exps: &mut Vec<u16>,
    v: usize,
    bound: &[u16],
    mixed: &[&Monomial],
    cap: usize,
    count: &mut usize,
) -> Result<(), AnalyzeError> {
    if v == exps.len() {
        let candidate = Monomial::new(exps.clone());
        if !mixed.iter().any(|m| m.divides(&candidate)) {
            *count += 1;
            if *count > cap {
                return Err(AnalyzeError::CapExceeded(cap));
            }
        }
        return Ok(());
    }
    for e in 0..bound[v] {
        exps[v] = e;
        walk(exps, v + 1, bound, mixed, cap, count)?;
    }
    exps[v] = 0;
    Ok(())
}
