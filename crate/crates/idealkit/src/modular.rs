//! Prime-field Gröbner computations and multi-prime structural sampling:
//! compute the basis modulo many primes, compare monomial skeletons with the
//! coefficients discarded, and flag dissenting (unlucky) primes.
//!
//! No rational reconstruction is attempted; the sampling is purely
//! structural, which is all the verification layer needs.

use rayon::prelude::*;
use serde::Serialize;

use crate::groebner::{buchberger, GroebnerBasis, GroebnerError, Limits};
use crate::poly::{FpPoly, Monomial, QPoly, TermOrder};
use crate::scalars::{FpElement, PrimeField, ScalarError};

/// One generator's monomials with coefficients discarded, sorted; a skeleton
/// is the sorted list of those, so identical ideals with reordered
/// generators compare equal.
pub type Skeleton = Vec<Vec<Monomial>>;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum SampleStatus {
    Ok,
    BadReduction(String),
    ResourceLimit(String),
}

#[derive(Debug, Clone)]
pub struct PrimeSample {
    pub prime: u64,
    pub skeleton: Option<Skeleton>,
    pub status: SampleStatus,
}

#[derive(Debug, Clone)]
pub struct SampleReport {
    pub samples: Vec<PrimeSample>,
    pub majority_skeleton: Option<Skeleton>,
    pub agreeing: usize,
    pub dissenting: Vec<u64>,
    pub failures: Vec<u64>,
}

impl SampleReport {
    pub fn unanimous(&self) -> bool {
        self.dissenting.is_empty() && self.failures.is_empty() && self.agreeing == self.samples.len()
    }

    /// True when the majority skeleton is the single constant generator.
    pub fn majority_is_trivial(&self) -> bool {
        matches!(
            &self.majority_skeleton,
            Some(sk) if sk.len() == 1 && sk[0].len() == 1 && sk[0][0].is_constant()
        )
    }
}

/// Reduce the generators mod p and run the same Buchberger contract as the
/// rational engine.
pub fn gb_mod_p(
    gens: &[QPoly],
    ord: &TermOrder,
    p: u64,
    limits: &Limits,
) -> Result<GroebnerBasis<FpElement>, GbModPError> {
    let field = PrimeField::new(p).map_err(GbModPError::Scalar)?;
    let reduced: Vec<FpPoly> = gens
        .iter()
        .map(|g| g.reduce_mod_p(&field))
        .collect::<Result<_, _>>()
        .map_err(GbModPError::Scalar)?;
    buchberger(&reduced, ord, limits).map_err(GbModPError::Groebner)
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GbModPError {
    #[error(transparent)]
    Scalar(ScalarError),
    #[error(transparent)]
    Groebner(GroebnerError),
}

pub fn skeleton_of<C: crate::groebner::GbCoeff>(gb: &GroebnerBasis<C>) -> Skeleton {
    let mut sk: Skeleton = gb
        .generators()
        .iter()
        .map(|g| {
            let mut ms: Vec<Monomial> = g.terms().iter().map(|t| t.mono.clone()).collect();
            ms.sort();
            ms
        })
        .collect();
    sk.sort();
    sk
}

/// Run `gb_mod_p` for every prime in the list (in parallel; the merge is
/// keyed by prime, so the report is deterministic), extract skeletons, and
/// compare them against the majority.
pub fn sample_structure(
    gens: &[QPoly],
    ord: &TermOrder,
    primes: &[u64],
    limits: &Limits,
) -> SampleReport {
    let mut samples: Vec<PrimeSample> = primes
        .par_iter()
        .map(|&p| match gb_mod_p(gens, ord, p, limits) {
            Ok(gb) => PrimeSample {
                prime: p,
                skeleton: Some(skeleton_of(&gb)),
                status: SampleStatus::Ok,
            },
            Err(GbModPError::Scalar(e)) => PrimeSample {
                prime: p,
                skeleton: None,
                status: SampleStatus::BadReduction(e.to_string()),
            },
            Err(GbModPError::Groebner(GroebnerError::ResourceLimit(m))) => PrimeSample {
                prime: p,
                skeleton: None,
                status: SampleStatus::ResourceLimit(m),
            },
            Err(GbModPError::Groebner(e)) => PrimeSample {
                prime: p,
                skeleton: None,
                status: SampleStatus::ResourceLimit(e.to_string()),
            },
        })
        .collect();
    samples.sort_by_key(|s| s.prime);

    // majority skeleton among successful samples
    let mut counts: Vec<(&Skeleton, usize)> = Vec::new();
    for s in samples.iter().filter_map(|s| s.skeleton.as_ref()) {
        match counts.iter_mut().find(|(sk, _)| *sk == s) {
            Some((_, c)) => *c += 1,
            None => counts.push((s, 1)),
        }
    }
    let majority_skeleton = counts
        .iter()
        .max_by_key(|(_, c)| *c)
        .map(|(sk, _)| (*sk).clone());

    let mut agreeing = 0;
    let mut dissenting = Vec::new();
    let mut failures = Vec::new();
    for s in &samples {
        match (&s.skeleton, &majority_skeleton) {
            (Some(sk), Some(maj)) if sk == maj => agreeing += 1,
            (Some(_), Some(_)) => dissenting.push(s.prime),
            (Some(_), None) => unreachable!("majority exists when any sample succeeded"),
            (None, _) => failures.push(s.prime),
        }
    }
    SampleReport {
        samples,
        majority_skeleton,
        agreeing,
        dissenting,
        failures,
    }
}
