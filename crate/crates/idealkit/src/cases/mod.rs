//! The scripted verification layer: every named case loads printed fixture
//! systems, runs one pipeline over them, and produces a reproducible
//! [`CaseReport`] with certificates and itemized term diffs.
//!
//! Cases never hardcode outcomes; statuses are computed from the algebra.
//! Entries whose source printing is damaged (suspect or flagged) are treated
//! as diff-reporting targets rather than ground truth, so their cases may
//! legitimately end in `DiffsFound`.

mod fixtures;
mod forms;
mod report;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::analyze::{is_zero_dimensional, standard_monomials, LeadingTermSet, LeadingTermSource};
use crate::groebner::{buchberger_q, radical_member, GroebnerError, Limits};
use crate::modular::{sample_structure, skeleton_of, SampleReport};
use crate::parse::{print_poly, SystemEntry};
use crate::poly::{Monomial, OrderKind, QPoly, TermOrder};
use crate::scalars::{primes_in_window, Rational};
use crate::variety::{brute_force, variety_covered, DEFAULT_EVAL_CAP};

pub use fixtures::{FixtureError, FixtureSet, FILE_NAMES};
pub use forms::{
    compare_up_to_scalar, rational_difference_numerator, solve_linear_in, Comparison, FormsError,
    RationalForm,
};
pub use report::{CaseReport, CaseStatus, TermDiff};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CaseId {
    S1Derivation,
    N1Derivation,
    N1Factorization,
    P2Components,
    G6Reality,
    P1Branch,
    SSystem,
    D1Branch,
    FinalSystem,
    Finiteness5102,
    ModularDemo,
}

impl CaseId {
    pub fn all() -> &'static [CaseId] {
        &[
            CaseId::S1Derivation,
            CaseId::N1Derivation,
            CaseId::N1Factorization,
            CaseId::P2Components,
            CaseId::G6Reality,
            CaseId::P1Branch,
            CaseId::SSystem,
            CaseId::D1Branch,
            CaseId::FinalSystem,
            CaseId::Finiteness5102,
            CaseId::ModularDemo,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseId::S1Derivation => "S1_DERIVATION",
            CaseId::N1Derivation => "N1_DERIVATION",
            CaseId::N1Factorization => "N1_FACTORIZATION",
            CaseId::P2Components => "P2_COMPONENTS",
            CaseId::G6Reality => "G6_REALITY",
            CaseId::P1Branch => "P1_BRANCH",
            CaseId::SSystem => "S_SYSTEM",
            CaseId::D1Branch => "D1_BRANCH",
            CaseId::FinalSystem => "FINAL_SYSTEM",
            CaseId::Finiteness5102 => "FINITENESS_5102",
            CaseId::ModularDemo => "MODULAR_DEMO",
        }
    }

    pub fn parse(s: &str) -> Option<CaseId> {
        CaseId::all().iter().copied().find(|c| c.as_str() == s)
    }

    /// Cases built purely on cleanly printed fixtures gate strictly; cases
    /// whose targets carry suspect annotations or flagged readings may end
    /// in DiffsFound without failing a verification run.
    pub fn is_strict(&self) -> bool {
        matches!(
            self,
            CaseId::G6Reality
                | CaseId::P1Branch
                | CaseId::D1Branch
                | CaseId::FinalSystem
                | CaseId::ModularDemo
        )
    }

    pub fn citation(&self) -> &'static str {
        match self {
            CaseId::S1Derivation => "eq 4.124b from eqs 4.123/4.124",
            CaseId::N1Derivation => "eq 4.130 from eqs 4.126/4.129",
            CaseId::N1Factorization => "eq eq-N1",
            CaseId::P2Components => "eqs 4.134-4.142",
            CaseId::G6Reality => "eq 4.143",
            CaseId::P1Branch => "eqs 4.144/4.146",
            CaseId::SSystem => "eqs 4.148-4.150",
            CaseId::D1Branch => "eqs 4.195-4.201",
            CaseId::FinalSystem => "eqs f.1/f.3/f.4 + 4.124b",
            CaseId::Finiteness5102 => "eq 5.102",
            CaseId::ModularDemo => "multi-prime sampling methodology",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tunables shared by all cases.
#[derive(Debug, Clone)]
pub struct CaseConfig {
    pub limits: Limits,
    /// Number of sampling primes drawn from the window.
    pub sample_count: usize,
    pub prime_window: (u64, u64),
    /// Primes for exhaustive variety enumeration.
    pub enum_primes: Vec<u64>,
    pub eval_cap: u128,
}

impl Default for CaseConfig {
    fn default() -> Self {
        CaseConfig {
            limits: Limits::default(),
            sample_count: 20,
            prime_window: (1 << 15, 1 << 16),
            enum_primes: vec![7, 11, 13],
            eval_cap: DEFAULT_EVAL_CAP,
        }
    }
}

impl CaseConfig {
    pub fn sampling_primes(&self) -> Vec<u64> {
        primes_in_window(self.prime_window.0, self.prime_window.1, self.sample_count)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CaseError {
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
    #[error(transparent)]
    Variety(#[from] crate::variety::VarietyError),
    #[error(transparent)]
    Analyze(#[from] crate::analyze::AnalyzeError),
}

fn mono_string(m: &Monomial, names: &[String]) -> String {
    let mut s = String::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        let fallback = format!("v{i}");
        s.push_str(names.get(i).map(|x| x.as_str()).unwrap_or(&fallback));
        if e > 1 {
            s.push('^');
            s.push_str(&e.to_string());
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

struct CaseBuilder {
    id: CaseId,
    start: Instant,
    certificates: Vec<String>,
    diffs: Vec<TermDiff>,
}

impl CaseBuilder {
    fn new(id: CaseId) -> Self {
        CaseBuilder {
            id,
            start: Instant::now(),
            certificates: Vec::new(),
            diffs: Vec::new(),
        }
    }

    fn cert(&mut self, s: impl Into<String>) {
        self.certificates.push(s.into());
    }

    fn push_diffs(&mut self, cmp: &Comparison, names: &[String]) {
        for (mono, expected, computed) in &cmp.diffs {
            self.diffs.push(TermDiff {
                monomial: mono_string(mono, names),
                expected: expected.to_string(),
                computed: computed.to_string(),
            });
        }
    }

    fn finish(self, status: CaseStatus) -> CaseReport {
        CaseReport {
            case_id: self.id.as_str().to_string(),
            status,
            citation: self.id.citation().to_string(),
            certificates: self.certificates,
            diffs: self.diffs,
            elapsed_ms: self.start.elapsed().as_millis(),
        }
    }
}

/// Run one case; internal failures become `Skipped` reports with the reason
/// recorded, never panics.
pub fn run_case(id: CaseId, fx: &FixtureSet, config: &CaseConfig) -> CaseReport {
    let result = match id {
        CaseId::S1Derivation => s1_derivation(fx),
        CaseId::N1Derivation => n1_derivation(fx),
        CaseId::N1Factorization => n1_factorization(fx),
        CaseId::P2Components => p2_components(fx, config),
        CaseId::G6Reality => g6_reality(fx),
        CaseId::P1Branch => p1_branch(fx, config),
        CaseId::SSystem => s_system(fx, config),
        CaseId::D1Branch => d1_branch(fx, config),
        CaseId::FinalSystem => final_system(fx, config),
        CaseId::Finiteness5102 => finiteness(fx),
        CaseId::ModularDemo => modular_demo(fx, config),
    };
    match result {
        Ok(report) => report,
        Err(e) => {
            let mut b = CaseBuilder::new(id);
            b.cert(format!("skipped: {e}"));
            b.finish(CaseStatus::Skipped)
        }
    }
}

/// Run every case in parallel; the report list is sorted by case id and is
/// independent of completion order.
pub fn run_all(fx: &FixtureSet, config: &CaseConfig) -> Vec<CaseReport> {
    let mut reports: Vec<CaseReport> = CaseId::all()
        .par_iter()
        .map(|&id| run_case(id, fx, config))
        .collect();
    reports.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    reports
}

// ---------------------------------------------------------------------------
// Shared system assembly
// ---------------------------------------------------------------------------

/// dehom(p1), p3 and both conjugates, on the reduced 4-variable alphabet.
pub fn p1_branch_generators(fx: &FixtureSet) -> Result<Vec<QPoly>, CaseError> {
    let p1x = fx
        .side
        .poly("p1")
        .expect("fixture p1")
        .dehomogenize()?
        .map_onto(&fx.p2c.table)?;
    let p3 = fx.p2c.poly("p3").expect("fixture p3").clone();
    Ok(vec![p1x.clone(), p3.clone(), p1x.conjugate()?, p3.conjugate()?])
}

/// d1x, e1, their conjugates, e2 (self-conjugate) and e3.
pub fn d1_branch_generators(fx: &FixtureSet) -> Result<Vec<QPoly>, CaseError> {
    let d1x = fx.d1b.poly("d1x").expect("fixture d1x").clone();
    let e1 = fx.d1b.poly("e1").expect("fixture e1").clone();
    let e2 = fx.d1b.poly("e2").expect("fixture e2").clone();
    let e3 = fx.d1b.poly("e3").expect("fixture e3").clone();
    Ok(vec![
        d1x.conjugate()?,
        d1x,
        e1.conjugate()?,
        e1,
        e2,
        e3,
    ])
}

/// f1, f3, f4, the dehomogenized first side relation, and all conjugates.
pub fn final_system_generators(fx: &FixtureSet) -> Result<Vec<QPoly>, CaseError> {
    let s1x = fx
        .side
        .poly("s1_num")
        .expect("fixture s1_num")
        .dehomogenize()?
        .map_onto(&fx.fin.table)?;
    let mut gens = vec![
        fx.fin.poly("f1").expect("fixture f1").clone(),
        fx.fin.poly("f3").expect("fixture f3").clone(),
        fx.fin.poly("f4").expect("fixture f4").clone(),
        s1x,
    ];
    let conjs: Vec<QPoly> = gens
        .iter()
        .map(|g| g.conjugate().map_err(CaseError::from))
        .collect::<Result<_, _>>()?;
    gens.extend(conjs);
    Ok(gens)
}

/// The six printed components as polynomial lists.
pub fn component_systems(fx: &FixtureSet) -> Vec<(String, Vec<QPoly>)> {
    (1..=6)
        .map(|i| {
            let prefix = format!("g{i}_");
            let polys = fx
                .p2c
                .with_prefix(&prefix)
                .iter()
                .map(|e| e.poly.clone())
                .collect();
            (format!("g{i}"), polys)
        })
        .collect()
}

fn flagged_monomials(entry: &SystemEntry) -> Vec<Monomial> {
    entry.flags.iter().map(|(m, _)| m.clone()).collect()
}

// ---------------------------------------------------------------------------
// Individual cases
// ---------------------------------------------------------------------------

fn s1_derivation(fx: &FixtureSet) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::S1Derivation);
    let names = fx.side.table.names();
    let d1 = fx.side.poly("d1").expect("d1").clone();
    let dmu = RationalForm::new(fx.side.poly("dmu_num").expect("dmu_num").clone(), d1.clone())?;
    let dmubar = RationalForm::new(fx.side.poly("dmubar_num").expect("dmubar_num").clone(), d1)?;
    let computed = rational_difference_numerator(&dmubar, &dmu.conjugate()?)?;
    let target = fx.side.poly("s1_num").expect("s1_num");
    let cmp = compare_up_to_scalar(&computed, target)?;
    b.cert(format!(
        "difference numerator has {} terms; printed target has {} terms",
        computed.num_terms(),
        target.num_terms()
    ));
    b.cert(format!("scalar certificate: {}", cmp.scalar));
    if !cmp.scalar_only() {
        b.cert(format!(
            "monomial content (computed, target): ({}, {})",
            mono_string(&cmp.monomial_content.0, names),
            mono_string(&cmp.monomial_content.1, names),
        ));
    }
    if cmp.equal {
        let status = if cmp.scalar.is_one() && cmp.scalar_only() {
            CaseStatus::Confirmed
        } else {
            CaseStatus::ConfirmedUpToScalar
        };
        Ok(b.finish(status))
    } else {
        b.push_diffs(&cmp, names);
        Ok(b.finish(CaseStatus::DiffsFound))
    }
}

fn n1_derivation(fx: &FixtureSet) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::N1Derivation);
    let names = fx.side.table.names();
    let route_commutator = RationalForm::new(
        fx.side.poly("dba_c_num").expect("dba_c_num").clone(),
        fx.side.poly("d2").expect("d2").clone(),
    )?;
    let route_condition = RationalForm::new(
        fx.side.poly("dba_v_num").expect("dba_v_num").clone(),
        fx.side.poly("d3").expect("d3").clone(),
    )?;

    // supporting check: solving the six-index contraction for the adjoined
    // unknown must reproduce the second route
    let vii = fx.vii13.poly("vii13_num").expect("vii13_num");
    let solved = solve_linear_in(vii, "da")?;
    let num_match = compare_up_to_scalar(
        &solved.numerator.map_onto(&fx.side.table)?,
        &route_condition.numerator,
    )?;
    let den_match = compare_up_to_scalar(
        &solved.denominator.map_onto(&fx.side.table)?,
        &route_condition.denominator,
    )?;
    b.cert(format!(
        "linear solve of the six-index contraction reproduces the printed route: numerator {} (scalar {}), denominator {} (scalar {})",
        num_match.equal, num_match.scalar, den_match.equal, den_match.scalar
    ));

    let computed = rational_difference_numerator(&route_condition, &route_commutator)?;
    let target = fx.side.poly("n1").expect("n1");
    let cmp = compare_up_to_scalar(&computed, target)?;
    b.cert(format!(
        "difference numerator has {} terms; printed target has {} terms",
        computed.num_terms(),
        target.num_terms()
    ));
    if cmp.equal {
        b.cert(format!("scalar certificate: {}", cmp.scalar));
        if !cmp.scalar_only() {
            b.cert(format!(
                "monomial content (computed, target): ({}, {})",
                mono_string(&cmp.monomial_content.0, names),
                mono_string(&cmp.monomial_content.1, names),
            ));
        }
        let status = if cmp.scalar.is_one() && cmp.scalar_only() {
            CaseStatus::Confirmed
        } else {
            CaseStatus::ConfirmedUpToScalar
        };
        return Ok(b.finish(status));
    }

    // not a scalar multiple: look for an exact polynomial cofactor in
    // either direction and certify it, including the residual after
    // cancelling it
    let (computed_prim, _) = computed.primitive_part();
    let (target_prim, _) = target.primitive_part();
    match computed_prim.exact_divide(&target_prim) {
        Ok(q) => {
            b.cert(format!(
                "computed difference equals the printed target times an exact cofactor: {}",
                print_poly(&q)
            ));
            let residual = compare_up_to_scalar(&computed_prim.exact_divide(&q)?, target)?;
            b.cert(format!(
                "after cancelling the cofactor the printed target is reproduced with {} residual diffs (scalar {})",
                residual.diffs.len(),
                residual.scalar
            ));
        }
        Err(_) => match target_prim.exact_divide(&computed_prim) {
            Ok(q) => b.cert(format!(
                "printed target equals the computed difference times an exact cofactor: {}",
                print_poly(&q)
            )),
            Err(_) => b.cert("no exact cofactor relates the two sides".to_string()),
        },
    }
    b.push_diffs(&cmp, names);
    Ok(b.finish(CaseStatus::DiffsFound))
}

fn n1_factorization(fx: &FixtureSet) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::N1Factorization);
    let names = fx.side.table.names();
    let n1 = fx.side.get("n1").expect("n1");
    let target = n1.poly.specialize(&[("F11", Rational::zero())])?;

    let bc = QPoly::variable(fx.side.table.clone(), "bc", Rational::from_int(-12), 1)?;
    let p1 = fx.side.poly("p1").expect("p1");

    let as_printed = bc
        .checked_mul(p1)?
        .checked_mul(fx.side.poly("p2").expect("p2"))?;
    let cmp = compare_up_to_scalar(&as_printed, &target)?;
    b.cert(format!(
        "monomial content (product, target): ({}, {})",
        mono_string(&cmp.monomial_content.0, names),
        mono_string(&cmp.monomial_content.1, names),
    ));
    b.cert(format!("scalar certificate: {}", cmp.scalar));

    // map diffs back to full target monomials and check each one is flagged
    let flagged = flagged_monomials(n1);
    let all_diffs_flagged = cmp
        .diffs
        .iter()
        .all(|(mono, _, _)| flagged.contains(&mono.mul(&cmp.monomial_content.1)));
    b.cert(format!(
        "diffs confined to monomials flagged in the printed fixture: {all_diffs_flagged}"
    ));

    let amended = bc
        .checked_mul(p1)?
        .checked_mul(fx.side.poly("p2_amended").expect("p2_amended"))?;
    let cmp_amended = compare_up_to_scalar(&amended, &target)?;
    b.cert(format!(
        "with the amended 1188-term sign the factorization matches exactly: {}",
        cmp_amended.equal
    ));

    if cmp.equal {
        Ok(b.finish(if cmp.scalar.is_one() && cmp.scalar_only() {
            CaseStatus::Confirmed
        } else {
            CaseStatus::ConfirmedUpToScalar
        }))
    } else {
        for (mono, expected, computed) in &cmp.diffs {
            b.diffs.push(TermDiff {
                monomial: mono_string(&mono.mul(&cmp.monomial_content.1), names),
                expected: expected.to_string(),
                computed: computed.to_string(),
            });
        }
        Ok(b.finish(CaseStatus::DiffsFound))
    }
}

fn p2_components(fx: &FixtureSet, config: &CaseConfig) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::P2Components);
    let names = fx.p2c.table.names();
    let p2x_printed = fx.p2c.poly("p2x").expect("p2x").clone();
    let n2 = fx.p2c.poly("n2").expect("n2").clone();
    let from_spin = fx
        .side
        .poly("p2")
        .expect("p2")
        .dehomogenize()?
        .map_onto(&fx.p2c.table)?;
    let from_spin_amended = fx
        .side
        .poly("p2_amended")
        .expect("p2_amended")
        .dehomogenize()?
        .map_onto(&fx.p2c.table)?;

    // reconcile the two printings of the same polynomial
    let cmp_printings = compare_up_to_scalar(&from_spin, &p2x_printed)?;
    b.cert(format!(
        "spin-coefficient printing vs reduced printing: {} diffs",
        cmp_printings.diffs.len()
    ));
    b.push_diffs(&cmp_printings, names);
    let cmp_amended = compare_up_to_scalar(&from_spin_amended, &p2x_printed)?;
    b.cert(format!(
        "amended spin-coefficient reading equals the reduced printing exactly: {}",
        cmp_amended.equal
    ));

    // radical membership of both branch polynomials against every component
    let comps = component_systems(fx);
    let mut membership_ok = true;
    for (name, gens) in &comps {
        let rm = radical_member(&p2x_printed, gens, &config.limits)?;
        let rm_n2 = radical_member(&n2, gens, &config.limits)?;
        let rm_spin_sign = radical_member(&from_spin, gens, &config.limits)?;
        membership_ok &= rm && rm_n2;
        b.cert(format!(
            "{name}: p2 vanishes on the component: {rm}; n2 vanishes: {rm_n2}; unamended sign variant vanishes: {rm_spin_sign}"
        ));
    }

    // coverage oracle over the enumeration primes
    let system = vec![p2x_printed.clone(), n2.clone()];
    let component_gens: Vec<Vec<QPoly>> = comps.iter().map(|(_, g)| g.clone()).collect();
    let mut sound_all = true;
    let mut covered_all = true;
    for &p in &config.enum_primes {
        let report = variety_covered(&system, &component_gens, p, config.eval_cap)?;
        sound_all &= report.sound;
        covered_all &= report.covered;
        b.cert(format!(
            "mod {p}: |V(system)| = {}, |union of components| = {}, covered = {}, sound = {}",
            report.system_points, report.component_points, report.covered, report.sound
        ));
        for pt in report.missing.iter().take(5) {
            b.cert(format!("mod {p}: system zero missed by all components: {pt:?}"));
        }
        for pt in report.extra.iter().take(5) {
            b.cert(format!("mod {p}: component point not a system zero: {pt:?}"));
        }
    }
    b.cert(format!(
        "oracle-grade verdict: memberships {membership_ok}, sound {sound_all}, covered {covered_all}"
    ));

    let status = if !membership_ok || !sound_all {
        CaseStatus::Refuted
    } else if b.diffs.is_empty() && covered_all {
        CaseStatus::Confirmed
    } else {
        CaseStatus::DiffsFound
    };
    Ok(b.finish(status))
}

fn g6_reality(fx: &FixtureSet) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::G6Reality);
    let f = fx.p2c.poly("g6_5").expect("g6_5");
    let diff = f.checked_sub(&f.conjugate()?)?;
    let x1 = QPoly::variable(fx.p2c.table.clone(), "x1", Rational::one(), 1)?;
    let xc1 = QPoly::variable(fx.p2c.table.clone(), "xc1", Rational::one(), 1)?;
    let axis = x1.checked_sub(&xc1)?;
    match diff.exact_divide(&axis) {
        Ok(q) if q.is_constant() && !q.is_zero() => {
            let scalar = q.terms()[0].coeff.clone();
            b.cert(format!(
                "difference from the conjugate is {scalar} times the reality axis"
            ));
            Ok(b.finish(CaseStatus::Confirmed))
        }
        _ => {
            b.cert(format!(
                "difference from the conjugate is not a scalar multiple of the reality axis: {}",
                print_poly(&diff)
            ));
            Ok(b.finish(CaseStatus::Refuted))
        }
    }
}

fn p1_branch(fx: &FixtureSet, config: &CaseConfig) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::P1Branch);
    let names = fx.p2c.table.names();

    // the dehomogenized first factor must equal its printed reduced form
    let p1x = fx
        .side
        .poly("p1")
        .expect("p1")
        .dehomogenize()?
        .map_onto(&fx.p2c.table)?;
    b.cert(format!(
        "dehomogenized first factor equals the printed reduced form: {}",
        &p1x == fx.p2c.poly("p1x").expect("p1x")
    ));

    // p3 must be the curvature-free dehomogenization of the side relation
    let s1_at_zero = fx
        .side
        .poly("s1_num")
        .expect("s1_num")
        .specialize(&[("F11", Rational::zero())])?
        .dehomogenize()?
        .map_onto(&fx.p2c.table)?;
    let p3 = fx.p2c.poly("p3").expect("p3");
    let cmp = compare_up_to_scalar(&s1_at_zero, p3)?;
    b.cert(format!(
        "curvature-free side relation reproduces the printed numerator: {} (scalar {})",
        cmp.equal, cmp.scalar
    ));
    if !cmp.equal {
        b.push_diffs(&cmp, names);
    }

    let gens = p1_branch_generators(fx)?;
    let ord = TermOrder::grevlex(fx.p2c.table.len());
    let gb = buchberger_q(&gens, &ord, &config.limits)?;
    b.cert(format!(
        "reduced basis has {} generators; trivial: {}; pairs reduced: {}",
        gb.len(),
        gb.is_trivial(),
        gb.stats().pairs_reduced
    ));
    if !gb.is_trivial() {
        let lms: Vec<String> = gb
            .leading_monomials()
            .iter()
            .map(|m| mono_string(m, names))
            .collect();
        b.cert(format!("leading monomials: {}", lms.join(", ")));
        if let Ok(v) = brute_force(&gens, 7, config.eval_cap) {
            b.cert(format!(
                "mod 7 the formal system has {} solutions, e.g. {:?}",
                v.len(),
                v.points.first()
            ));
        }
    }
    let status = if gb.is_trivial() && cmp.equal {
        CaseStatus::Confirmed
    } else if !gb.is_trivial() {
        CaseStatus::Refuted
    } else {
        CaseStatus::DiffsFound
    };
    Ok(b.finish(status))
}

fn s_system(fx: &FixtureSet, config: &CaseConfig) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::SSystem);
    let p1x = fx
        .side
        .poly("p1")
        .expect("p1")
        .dehomogenize()?
        .map_onto(&fx.p2c.table)?;
    let p3 = fx.p2c.poly("p3").expect("p3").clone();
    let ideal = vec![p1x.clone(), p3.clone()];
    let s_polys: Vec<QPoly> = ["s1", "s2", "s3"]
        .iter()
        .map(|n| fx.p2c.poly(n).expect("s entry").clone())
        .collect();

    // forward direction: the printed triangular system should vanish on the
    // branch variety if the two systems are equivalent
    let mut forward_all = true;
    for (i, name) in ["s1", "s2", "s3"].iter().enumerate() {
        let member = radical_member(&s_polys[i], &ideal, &config.limits)?;
        forward_all &= member;
        b.cert(format!("{name} vanishes on the branch variety: {member}"));
    }

    // reverse direction: the branch pair vanishes on the triangular
    // system's variety, i.e. the printed system is a sound component
    let rev_p1 = radical_member(&p1x, &s_polys, &config.limits)?;
    let rev_p3 = radical_member(&p3, &s_polys, &config.limits)?;
    b.cert(format!(
        "the branch pair vanishes on the triangular system's variety (sound component): {}",
        rev_p1 && rev_p3
    ));

    // the flagged readings make the middle relation an exact combination of
    // the flanking ones
    let s2 = fx.p2c.poly("s2").expect("s2");
    let xc1 = QPoly::variable(fx.p2c.table.clone(), "xc1", Rational::one(), 1)?;
    let neg_6_x2 = QPoly::variable(fx.p2c.table.clone(), "x2", Rational::from_int(-6), 1)?;
    let combo = s_polys[0]
        .checked_mul(&xc1)?
        .checked_add(&neg_6_x2.checked_mul(&s_polys[2])?)?;
    b.cert(format!(
        "under the flagged readings the middle relation is an exact combination of the other two: {}",
        &combo == s2
    ));

    // when equivalence fails, itemize oracle witnesses: branch-variety
    // points where a printed relation does not vanish
    if !forward_all {
        let p = config.enum_primes.first().copied().unwrap_or(7);
        let field = crate::scalars::PrimeField::new(p).expect("enumeration prime");
        let v = brute_force(&ideal, p, config.eval_cap)?;
        for (i, name) in ["s1", "s2", "s3"].iter().enumerate() {
            let witness = v.points.iter().find_map(|pt| {
                let point: Vec<_> = pt.iter().map(|&c| field.element(c)).collect();
                match s_polys[i].eval_fp(&point, &field) {
                    Ok(value) if !value.is_zero() => Some((pt.clone(), value)),
                    _ => None,
                }
            });
            if let Some((pt, value)) = witness {
                b.diffs.push(TermDiff {
                    monomial: format!("{name} at {pt:?} mod {p}"),
                    expected: "0".to_string(),
                    computed: value.to_string(),
                });
            }
        }
    }

    Ok(b.finish(if forward_all {
        CaseStatus::Confirmed
    } else {
        CaseStatus::DiffsFound
    }))
}

fn d1_branch(fx: &FixtureSet, config: &CaseConfig) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::D1Branch);
    // the printed system names an undefined symbol for its second member; it
    // is read as the conjugate of the linear relation
    b.cert("second generator read as the conjugate of the linear relation".to_string());

    let d1x = fx
        .side
        .poly("d1")
        .expect("d1")
        .dehomogenize()?
        .map_onto(&fx.d1b.table)?;
    b.cert(format!(
        "dehomogenized denominator equals the printed linear relation: {}",
        &d1x == fx.d1b.poly("d1x").expect("d1x")
    ));

    // the first relation should be the dehomogenized numerator of the
    // Pfaffian whose denominator vanished
    let dmu_x = fx
        .side
        .poly("dmu_num")
        .expect("dmu_num")
        .dehomogenize()?
        .map_onto(&fx.d1b.table)?;
    let e1 = fx.d1b.poly("e1").expect("e1");
    let cmp = compare_up_to_scalar(&dmu_x, e1)?;
    b.cert(format!(
        "dehomogenized Pfaffian numerator reproduces the first relation: {} (scalar {})",
        cmp.equal, cmp.scalar
    ));

    let e2 = fx.d1b.poly("e2").expect("e2");
    b.cert(format!(
        "third relation is self-conjugate: {}",
        &e2.conjugate()? == e2
    ));

    let gens = d1_branch_generators(fx)?;
    let ord = TermOrder::grevlex(fx.d1b.table.len());
    let gb = buchberger_q(&gens, &ord, &config.limits)?;
    b.cert(format!(
        "reduced basis has {} generators; trivial: {}; pairs reduced: {}",
        gb.len(),
        gb.is_trivial(),
        gb.stats().pairs_reduced
    ));
    Ok(b.finish(if gb.is_trivial() {
        CaseStatus::Confirmed
    } else {
        CaseStatus::Refuted
    }))
}

fn final_system(fx: &FixtureSet, config: &CaseConfig) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::FinalSystem);
    let gens = final_system_generators(fx)?;
    b.cert(format!("system of {} generators in 5 unknowns", gens.len()));
    let ord = TermOrder::grevlex(fx.fin.table.len());
    let gb = buchberger_q(&gens, &ord, &config.limits)?;
    b.cert(format!(
        "reduced basis: [{}]; pairs reduced: {}; max intermediate terms: {}",
        gb.generators()
            .iter()
            .map(print_poly)
            .collect::<Vec<_>>()
            .join(", "),
        gb.stats().pairs_reduced,
        gb.stats().max_intermediate_terms
    ));
    Ok(b.finish(if gb.is_trivial() {
        CaseStatus::Confirmed
    } else {
        CaseStatus::Refuted
    }))
}

fn finiteness(fx: &FixtureSet) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::Finiteness5102);
    let monos: Vec<Monomial> = fx
        .lt
        .entries
        .iter()
        .map(|e| e.poly.leading_canonical().expect("single term").1.clone())
        .collect();
    let h = LeadingTermSet::from_monomials(
        fx.lt.table.clone(),
        TermOrder::natural(OrderKind::GrLex, fx.lt.table.len()),
        monos,
        LeadingTermSource::DeclaredFixture,
    );
    b.cert("leading terms are fixture-sourced, not recomputed".to_string());
    let zero_dim = is_zero_dimensional(&h);
    b.cert(format!(
        "every unknown has a pure power among the leading terms: {zero_dim}"
    ));
    let count = standard_monomials(&h, 20_000)?;
    b.cert(format!(
        "standard monomial count (solution bound with multiplicity): {count:?}"
    ));
    let ok = zero_dim && count == Some(15_000);
    Ok(b.finish(if ok {
        CaseStatus::Confirmed
    } else {
        CaseStatus::Refuted
    }))
}

fn modular_demo(fx: &FixtureSet, config: &CaseConfig) -> Result<CaseReport, CaseError> {
    let mut b = CaseBuilder::new(CaseId::ModularDemo);
    let primes = config.sampling_primes();
    b.cert(format!(
        "sampling {} primes from ({}, {})",
        primes.len(),
        config.prime_window.0,
        config.prime_window.1
    ));

    fn summary(label: &str, report: &SampleReport) -> String {
        format!(
            "{label}: agreeing {}, dissenting {:?}, failures {:?}, majority trivial: {}",
            report.agreeing,
            report.dissenting,
            report.failures,
            report.majority_is_trivial()
        )
    }

    let p1_gens = p1_branch_generators(fx)?;
    let ord4 = TermOrder::grevlex(fx.p2c.table.len());
    let r1 = sample_structure(&p1_gens, &ord4, &primes, &config.limits);
    b.cert(summary("first branch system", &r1));

    let rational_skeleton = skeleton_of(&buchberger_q(&p1_gens, &ord4, &config.limits)?);
    let matches_rational = r1.majority_skeleton.as_ref() == Some(&rational_skeleton);
    b.cert(format!(
        "first branch majority skeleton equals the rational skeleton: {matches_rational}"
    ));

    let fin_gens = final_system_generators(fx)?;
    let ord5 = TermOrder::grevlex(fx.fin.table.len());
    let r2 = sample_structure(&fin_gens, &ord5, &primes, &config.limits);
    b.cert(summary("final system", &r2));

    let ok = r1.unanimous() && r2.unanimous() && r2.majority_is_trivial() && matches_rational;
    Ok(b.finish(if ok {
        CaseStatus::Confirmed
    } else {
        CaseStatus::DiffsFound
    }))
}
