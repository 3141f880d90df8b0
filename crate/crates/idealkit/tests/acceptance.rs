//! Acceptance suite: one test per shipped guarantee, each printing a single
//! PASS/FAIL line (run with `cargo test --test acceptance -- --nocapture` to
//! see them all). Every tolerance is pinned in code here.
//!
//! The second check is expected to stay red: the formal triviality claim it
//! encodes is refuted by the toolkit itself, with machine-checked witnesses.
//! See the assertion message for the full analysis.

use std::time::{Duration, Instant};

use idealkit::analyze::{is_zero_dimensional, leading_terms, standard_monomials, LeadingTermSet, LeadingTermSource};
use idealkit::cases::{
    compare_up_to_scalar, component_systems, d1_branch_generators, final_system_generators,
    p1_branch_generators, run_case, CaseConfig, CaseId, CaseStatus, FixtureSet,
};
use idealkit::groebner::{buchberger_q, radical_member, GroebnerError, Limits};
use idealkit::modular::{gb_mod_p, GbModPError};
use idealkit::parse::parse_poly;
use idealkit::poly::{Monomial, OrderKind, QPoly, TermOrder, VariableTable};
use idealkit::scalars::{primes_in_window, Rational};
use idealkit::variety::{brute_force, variety_covered, DEFAULT_EVAL_CAP};

fn fixtures() -> FixtureSet {
    FixtureSet::builtin().expect("builtin fixtures parse")
}

fn config() -> CaseConfig {
    CaseConfig::default()
}

fn report_line(n: u32, name: &str, pass: bool, elapsed: Duration, detail: &str) {
    println!(
        "ACCEPTANCE {:02} {:<22} {} ({} ms) {}",
        n,
        name,
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_millis(),
        detail
    );
}

#[test]
fn criterion_01_final_system_basis_is_trivial() {
    let start = Instant::now();
    let fx = fixtures();
    let gens = final_system_generators(&fx).expect("assembly");
    let ord = TermOrder::grevlex(fx.fin.table.len());
    let gb = buchberger_q(&gens, &ord, &Limits::default()).expect("basis");
    let elapsed = start.elapsed();
    let pass = gb.is_trivial() && elapsed < Duration::from_secs(60);
    report_line(1, "FINAL_SYSTEM", pass, elapsed, "");
    assert!(gb.is_trivial(), "final system basis is not {{1}}");
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn criterion_02_p1_branch() {
    let start = Instant::now();
    let fx = fixtures();
    let limits = Limits::default();

    // side clause: the triangular relations pass radical membership in the
    // branch pair, or the case emits an itemized diff report
    let s_report = run_case(CaseId::SSystem, &fx, &config());
    let s_clause = match s_report.status {
        CaseStatus::Confirmed | CaseStatus::ConfirmedUpToScalar => true,
        CaseStatus::DiffsFound => !s_report.diffs.is_empty(),
        _ => false,
    };

    // side clause: the printed numerator is reproduced from the side relation
    let s1_at_zero = fx
        .side
        .poly("s1_num")
        .unwrap()
        .specialize(&[("F11", Rational::zero())])
        .unwrap()
        .dehomogenize()
        .unwrap()
        .map_onto(&fx.p2c.table)
        .unwrap();
    let p3_matches = compare_up_to_scalar(&s1_at_zero, fx.p2c.poly("p3").unwrap())
        .unwrap()
        .equal;

    let gens = p1_branch_generators(&fx).expect("assembly");
    let ord = TermOrder::grevlex(fx.p2c.table.len());
    let gb = buchberger_q(&gens, &ord, &limits).expect("basis");
    let elapsed = start.elapsed();
    let pass = gb.is_trivial() && s_clause && p3_matches && elapsed < Duration::from_secs(60);
    report_line(
        2,
        "P1_BRANCH",
        pass,
        elapsed,
        &format!(
            "trivial: {}, numerator derivation: {}, triangular-system clause: {}",
            gb.is_trivial(),
            p3_matches,
            s_clause
        ),
    );
    assert!(p3_matches, "printed numerator not reproduced");
    assert!(s_clause, "triangular relations neither members nor itemized");
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    assert!(
        gb.is_trivial(),
        "the reduced basis of the first-branch system with conjugates is NOT {{1}}: \
         it has {} generators. This expectation over-formalizes a printed no-solution \
         argument that relies on the conjugate variables being actual complex \
         conjugates. The formal ideal in four independent variables has solutions: \
         the whole curve x1 = xc1 = 0, x2*xc2 = -1/2 lies on all four generators \
         (no conjugate-consistent point satisfies x2*conj(x2) < 0, so the printed \
         real-solution claim is untouched), and the substituted quadratic \
         895*x1^2 + 3225*x1 + 2907 has negative discriminant (real-root argument), \
         not an empty complex zero set. The exhaustive mod-7 oracle finds {} formal \
         solutions. The verification case P1_BRANCH reports this refutation with \
         certificates.",
        gb.len(),
        brute_force(&gens, 7, DEFAULT_EVAL_CAP).map(|v| v.len()).unwrap_or(0),
    );
}

#[test]
fn criterion_03_d1_branch_basis_is_trivial() {
    let start = Instant::now();
    let fx = fixtures();
    let gens = d1_branch_generators(&fx).expect("assembly");
    let ord = TermOrder::grevlex(fx.d1b.table.len());
    let gb = buchberger_q(&gens, &ord, &Limits::default()).expect("basis");
    let elapsed = start.elapsed();
    let pass = gb.is_trivial() && elapsed < Duration::from_secs(60);
    report_line(3, "D1_BRANCH", pass, elapsed, "");
    assert!(gb.is_trivial(), "vanishing-denominator branch basis is not {{1}}");
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn criterion_04_n1_factorization_diffs_confined_to_flags() {
    let start = Instant::now();
    let fx = fixtures();
    let report = run_case(CaseId::N1Factorization, &fx, &config());
    let elapsed = start.elapsed();

    // recompute the comparison here so the assertions are independent of the
    // case's own bookkeeping
    let n1 = fx.side.get("n1").unwrap();
    let target = n1.poly.specialize(&[("F11", Rational::zero())]).unwrap();
    let product = QPoly::variable(fx.side.table.clone(), "bc", Rational::from_int(-12), 1)
        .unwrap()
        .checked_mul(fx.side.poly("p1").unwrap())
        .unwrap()
        .checked_mul(fx.side.poly("p2").unwrap())
        .unwrap();
    let cmp = compare_up_to_scalar(&product, &target).unwrap();
    let flagged: Vec<Monomial> = n1.flags.iter().map(|(m, _)| m.clone()).collect();
    let all_flagged = cmp
        .diffs
        .iter()
        .all(|(m, _, _)| flagged.contains(&m.mul(&cmp.monomial_content.1)));
    let zero_diffs_elsewhere = cmp.diffs.len() <= flagged.len();

    let amended = QPoly::variable(fx.side.table.clone(), "bc", Rational::from_int(-12), 1)
        .unwrap()
        .checked_mul(fx.side.poly("p1").unwrap())
        .unwrap()
        .checked_mul(fx.side.poly("p2_amended").unwrap())
        .unwrap();
    let amended_exact = compare_up_to_scalar(&amended, &target).unwrap().equal;

    let pass = report.status != CaseStatus::Refuted
        && report.status != CaseStatus::Skipped
        && all_flagged
        && zero_diffs_elsewhere
        && amended_exact
        && elapsed < Duration::from_secs(5);
    report_line(
        4,
        "N1_FACTORIZATION",
        pass,
        elapsed,
        &format!(
            "{} diffs, all on flagged monomials: {}, amended reading exact: {}",
            cmp.diffs.len(),
            all_flagged,
            amended_exact
        ),
    );
    assert_ne!(report.status, CaseStatus::Refuted);
    assert_ne!(report.status, CaseStatus::Skipped);
    assert!(all_flagged, "a diff landed on an unflagged monomial");
    assert!(zero_diffs_elsewhere);
    assert!(amended_exact, "the amended sign reading no longer matches");
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
}

#[test]
fn criterion_05_derivations_not_refuted() {
    let start = Instant::now();
    let fx = fixtures();
    let cfg = config();
    let s1 = run_case(CaseId::S1Derivation, &fx, &cfg);
    let n1 = run_case(CaseId::N1Derivation, &fx, &cfg);
    let elapsed = start.elapsed();

    let ok = |r: &idealkit::cases::CaseReport| match r.status {
        CaseStatus::Confirmed | CaseStatus::ConfirmedUpToScalar => true,
        CaseStatus::DiffsFound => !r.diffs.is_empty(),
        CaseStatus::Refuted | CaseStatus::Skipped => false,
    };
    let pass = ok(&s1) && ok(&n1) && elapsed < Duration::from_secs(10);
    report_line(
        5,
        "S1/N1 DERIVATIONS",
        pass,
        elapsed,
        &format!("S1 {} / N1 {}", s1.status.name(), n1.status.name()),
    );
    assert!(ok(&s1), "first derivation refuted or skipped: {s1:?}");
    assert!(ok(&n1), "second derivation refuted or skipped: {n1:?}");
    // the first derivation reproduces its target exactly up to the scalar
    assert_eq!(s1.status, CaseStatus::ConfirmedUpToScalar);
    // the second reproduces it after cancelling the linear cofactor; the
    // certificate must say the residual is empty
    assert!(
        n1.certificates
            .iter()
            .any(|c| c.contains("0 residual diffs")),
        "cofactor cancellation no longer exact: {:?}",
        n1.certificates
    );
    // the adjoined-unknown solve of the six-index contraction must keep
    // reproducing the second route exactly
    assert!(
        n1.certificates
            .iter()
            .any(|c| c.contains("numerator true") && c.contains("denominator true")),
        "linear-solve cross-check regressed: {:?}",
        n1.certificates
    );
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
}

#[test]
fn criterion_06_p2_components_membership_and_soundness() {
    let start = Instant::now();
    let fx = fixtures();
    let limits = Limits::default();
    let p2x = fx.p2c.poly("p2x").unwrap().clone();
    let n2 = fx.p2c.poly("n2").unwrap().clone();

    let comps = component_systems(&fx);
    assert_eq!(comps.len(), 6);
    for (name, gens) in &comps {
        assert!(
            radical_member(&p2x, gens, &limits).unwrap(),
            "p2 does not vanish on component {name}"
        );
    }

    let system = vec![p2x, n2];
    let component_gens: Vec<Vec<QPoly>> = comps.iter().map(|(_, g)| g.clone()).collect();
    let mut covered_all = true;
    for p in [7u64, 11, 13] {
        let r = variety_covered(&system, &component_gens, p, DEFAULT_EVAL_CAP).unwrap();
        assert!(r.sound, "component point failed the system mod {p}: {:?}", r.extra.first());
        covered_all &= r.covered;
        if !r.covered {
            // spurious small-characteristic zeros are expected; they must be
            // itemized, never silently dropped
            assert!(!r.missing.is_empty());
        }
    }
    // the case itself must carry the itemization
    let report = run_case(CaseId::P2Components, &fx, &config());
    assert_ne!(report.status, CaseStatus::Refuted);
    assert!(
        covered_all || report.certificates.iter().any(|c| c.contains("missed by all components")),
        "coverage discrepancies are not itemized"
    );
    let elapsed = start.elapsed();
    report_line(
        6,
        "P2_COMPONENTS",
        elapsed < Duration::from_secs(300),
        elapsed,
        &format!("memberships pass, sound at 7/11/13, covered everywhere: {covered_all}"),
    );
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
}

#[test]
fn criterion_07_g6_reality_scalar() {
    let start = Instant::now();
    let fx = fixtures();
    let f = fx.p2c.poly("g6_5").unwrap();
    let diff = f.checked_sub(&f.conjugate().unwrap()).unwrap();
    let axis = parse_poly("x1 - xc1", &fx.p2c.table).unwrap();
    let q = diff.exact_divide(&axis).expect("difference is a multiple of the axis");
    let elapsed = start.elapsed();
    let expected = Rational::from_int(-562);
    let pass = q.is_constant() && !q.is_zero() && q.terms()[0].coeff == expected;
    report_line(7, "G6_REALITY", pass && elapsed < Duration::from_secs(1), elapsed, "scalar -562");
    assert!(q.is_constant() && !q.is_zero());
    assert_eq!(q.terms()[0].coeff, expected, "reality scalar changed");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

#[test]
fn criterion_08_finiteness_and_order_invariance() {
    let start = Instant::now();
    let fx = fixtures();

    // the declared leading-term fixture is zero-dimensional with exactly
    // 6*5*5*5*4*5 standard monomials
    let monos: Vec<Monomial> = fx
        .lt
        .entries
        .iter()
        .map(|e| e.poly.leading_canonical().unwrap().1.clone())
        .collect();
    let h = LeadingTermSet::from_monomials(
        fx.lt.table.clone(),
        TermOrder::grevlex(fx.lt.table.len()),
        monos,
        LeadingTermSource::DeclaredFixture,
    );
    assert!(is_zero_dimensional(&h));
    assert_eq!(standard_monomials(&h, 20_000).unwrap(), Some(15_000));

    // a single mixed monomial is not zero-dimensional
    let t2 = VariableTable::from_names(&["x", "y"]).unwrap();
    let xy = LeadingTermSet::from_monomials(
        t2.clone(),
        TermOrder::grevlex(2),
        vec![Monomial::new(vec![1, 1])],
        LeadingTermSource::DeclaredFixture,
    );
    assert!(!is_zero_dimensional(&xy));

    // order invariance of the finiteness verdict on every fixture system
    // that completes under all three orders within a desk-scale budget
    let budget = Limits {
        max_pairs: 200,
        max_terms: 150,
        max_coeff_bits: 384,
    };
    let mut systems: Vec<(String, Vec<QPoly>)> = component_systems(&fx);
    systems.push(("d1_branch".into(), d1_branch_generators(&fx).unwrap()));
    systems.push(("final_system".into(), final_system_generators(&fx).unwrap()));
    systems.push(("p1_branch".into(), p1_branch_generators(&fx).unwrap()));
    // independent basis computations may run concurrently; the merge is
    // keyed by system name
    use rayon::prelude::*;
    let sweep: Vec<(String, Vec<(bool, bool)>)> = systems
        .par_iter()
        .map(|(name, gens)| {
            let arity = gens[0].table().len();
            let mut verdicts = Vec::new();
            for kind in [OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex] {
                let ord = TermOrder::natural(kind, arity);
                match buchberger_q(gens, &ord, &budget) {
                    Ok(gb) => {
                        let h = leading_terms(&gb, gens[0].table().clone());
                        verdicts.push((gb.is_trivial(), is_zero_dimensional(&h)));
                    }
                    Err(GroebnerError::ResourceLimit(_)) => {}
                    Err(e) => panic!("{name}: {e}"),
                }
            }
            (name.clone(), verdicts)
        })
        .collect();
    let mut participated = 0;
    for (name, verdicts) in &sweep {
        if verdicts.len() == 3 {
            participated += 1;
            assert!(
                verdicts.windows(2).all(|w| w[0] == w[1]),
                "{name}: triviality or finiteness verdict depends on the order: {verdicts:?}"
            );
        }
    }
    assert!(participated >= 6, "only {participated} systems completed under all orders");
    let elapsed = start.elapsed();
    report_line(
        8,
        "FINITENESS",
        elapsed < Duration::from_secs(1),
        elapsed,
        &format!("verdict order-invariant on {participated} systems"),
    );
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

#[test]
fn criterion_09_modular_coherence() {
    let start = Instant::now();
    let fx = fixtures();
    let limits = Limits::default();

    // every assembled system whose rational basis is {1} participates
    let candidates: Vec<(&str, Vec<QPoly>)> = vec![
        ("p1_branch", p1_branch_generators(&fx).unwrap()),
        ("d1_branch", d1_branch_generators(&fx).unwrap()),
        ("final_system", final_system_generators(&fx).unwrap()),
    ];
    let mut participating = 0;
    for (name, gens) in &candidates {
        let arity = gens[0].table().len();
        let ord = TermOrder::grevlex(arity);
        let rational_trivial = buchberger_q(gens, &ord, &limits).unwrap().is_trivial();
        if !rational_trivial {
            println!("  {name}: rational basis not trivial; excluded from coherence");
            continue;
        }
        participating += 1;

        // 20 sampled primes in the window: at least 18 must reduce to {1},
        // every exception classified
        let primes = primes_in_window(1 << 15, 1 << 16, 20);
        assert_eq!(primes.len(), 20);
        let mut trivial_count = 0;
        for &p in &primes {
            match gb_mod_p(gens, &ord, p, &limits) {
                Ok(gb) if gb.is_trivial() => trivial_count += 1,
                Ok(_) => println!("  {name}: prime {p} classified unlucky (skeleton dissent)"),
                Err(GbModPError::Scalar(e)) => {
                    println!("  {name}: prime {p} classified bad reduction ({e})")
                }
                Err(e) => panic!("{name}: unclassified failure at {p}: {e}"),
            }
        }
        assert!(
            trivial_count >= 18,
            "{name}: only {trivial_count}/20 sampled primes reduce to {{1}}"
        );

        // the exhaustive oracle agrees at the enumeration primes wherever the
        // reduction is faithful
        for p in [5u64, 7, 11, 13] {
            match gb_mod_p(gens, &ord, p, &limits) {
                Ok(gb) if gb.is_trivial() => {
                    let v = brute_force(gens, p, DEFAULT_EVAL_CAP).unwrap();
                    assert!(
                        v.is_empty(),
                        "{name}: mod {p} basis is {{1}} but the oracle found {:?}",
                        v.points.first()
                    );
                }
                Ok(_) => println!("  {name}: enumeration prime {p} unlucky; oracle check waived"),
                Err(GbModPError::Scalar(e)) => {
                    println!("  {name}: enumeration prime {p} bad reduction ({e})")
                }
                Err(e) => panic!("{name}: unclassified failure at {p}: {e}"),
            }
        }
    }
    assert!(participating >= 2, "expected at least two trivial systems");
    let elapsed = start.elapsed();
    report_line(
        9,
        "MODULAR COHERENCE",
        elapsed < Duration::from_secs(120),
        elapsed,
        &format!("{participating} trivial systems coherent mod p"),
    );
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
}

#[test]
fn criterion_10_engine_properties() {
    // deterministic randomized trials; the counts here are the contract
    let start = Instant::now();
    let mut rng = Lcg::new(0x1dea1c0de);
    let table = VariableTable::from_names(&["x1", "xc1", "x2", "xc2"])
        .unwrap()
        .with_conj_pairs(&[("x1".into(), "xc1".into()), ("x2".into(), "xc2".into())])
        .unwrap();

    let mut trials = 0usize;

    // parser round trip: parse(print(f)) == f
    for _ in 0..250 {
        let f = rng.poly(&table, 6, 3, 9);
        let printed = idealkit::parse::print_poly(&f);
        let back = parse_poly(&printed, &table).unwrap();
        assert_eq!(back, f, "round trip failed on {printed}");
        trials += 1;
    }

    // ring axioms: distributivity and associativity
    for _ in 0..200 {
        let f = rng.poly(&table, 4, 2, 7);
        let g = rng.poly(&table, 4, 2, 7);
        let h = rng.poly(&table, 4, 2, 7);
        let left = f.checked_mul(&g.checked_add(&h).unwrap()).unwrap();
        let right = f.checked_mul(&g).unwrap().checked_add(&f.checked_mul(&h).unwrap()).unwrap();
        assert_eq!(left, right, "distributivity");
        let assoc_l = f.checked_mul(&g).unwrap().checked_mul(&h).unwrap();
        let assoc_r = f.checked_mul(&g.checked_mul(&h).unwrap()).unwrap();
        assert_eq!(assoc_l, assoc_r, "associativity");
        trials += 1;
    }

    // leading terms are multiplicative over a field (no zero divisors)
    for _ in 0..150 {
        let f = rng.nonzero_poly(&table, 4, 2, 7);
        let g = rng.nonzero_poly(&table, 4, 2, 7);
        for kind in [OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex] {
            let ord = TermOrder::natural(kind, table.len());
            let (fc, fm) = f.leading_term(&ord).unwrap();
            let (gc, gm) = g.leading_term(&ord).unwrap();
            let prod = f.checked_mul(&g).unwrap();
            let (pc, pm) = prod.leading_term(&ord).unwrap();
            assert_eq!(pm, &fm.mul(gm), "leading monomial multiplicative");
            assert_eq!(pc.clone(), fc * gc, "leading coefficient multiplicative");
        }
        trials += 1;
    }

    // exact division undoes multiplication
    for _ in 0..150 {
        let f = rng.nonzero_poly(&table, 4, 2, 8);
        let g = rng.nonzero_poly(&table, 4, 2, 8);
        let prod = f.checked_mul(&g).unwrap();
        assert_eq!(prod.exact_divide(&g).unwrap(), f);
        trials += 1;
    }

    // conjugation is an involution and commutes with dehomogenization
    let fx = fixtures();
    for _ in 0..150 {
        let f = rng.poly(&table, 5, 2, 9);
        assert_eq!(f.conjugate().unwrap().conjugate().unwrap(), f, "involution");
        let g = rng.bihomogeneous(&fx.side.table, 4, 2);
        let a = g.conjugate().unwrap().dehomogenize().unwrap();
        let b = g.dehomogenize().unwrap().conjugate().unwrap();
        assert_eq!(a, b, "conjugation commutes with dehomogenization");
        trials += 1;
    }

    // basis properties on random small systems: inputs reduce to zero and
    // every S-polynomial of basis pairs reduces to zero
    let small = VariableTable::from_names(&["x", "y", "z"]).unwrap();
    let budget = Limits {
        max_pairs: 20_000,
        max_terms: 10_000,
        max_coeff_bits: 1 << 14,
    };
    let mut basis_trials = 0;
    while basis_trials < 60 {
        let gens: Vec<QPoly> = (0..3).map(|_| rng.nonzero_poly(&small, 3, 2, 4)).collect();
        let ord = TermOrder::grevlex(small.len());
        let gb = match buchberger_q(&gens, &ord, &budget) {
            Ok(gb) => gb,
            Err(GroebnerError::ResourceLimit(_)) => continue,
            Err(e) => panic!("{e}"),
        };
        for g in &gens {
            assert!(gb.contains(g).unwrap(), "input escapes its own basis");
        }
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                let s = idealkit::groebner::s_polynomial(
                    &gb.generators()[i],
                    &gb.generators()[j],
                    &ord,
                )
                .unwrap();
                assert!(gb.normal_form(&s).unwrap().is_zero(), "S-polynomial survives");
            }
        }
        basis_trials += 1;
        trials += 1;
    }

    // scalar homomorphisms: mod-p reduction respects + and *
    let p = idealkit::scalars::PrimeField::new(32771).unwrap();
    for _ in 0..150 {
        let a = rng.rational_coprime_to(32771);
        let b = rng.rational_coprime_to(32771);
        let sum = (&a + &b).reduce_mod_p(&p).unwrap();
        let prod = (&a * &b).reduce_mod_p(&p).unwrap();
        assert_eq!(sum, a.reduce_mod_p(&p).unwrap() + b.reduce_mod_p(&p).unwrap());
        assert_eq!(prod, a.reduce_mod_p(&p).unwrap() * b.reduce_mod_p(&p).unwrap());
        trials += 1;
    }

    let elapsed = start.elapsed();
    let pass = trials >= 1000 && elapsed < Duration::from_secs(120);
    report_line(10, "ENGINE PROPERTIES", pass, elapsed, &format!("{trials} trials"));
    assert!(trials >= 1000, "only {trials} randomized trials ran");
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
}

/// Small deterministic generator so the trial set is reproducible.
struct Lcg(u64);

impl Lcg {
    fn new(seed: u64) -> Self {
        Lcg(seed | 1)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    fn coeff(&mut self, bound: i64) -> Rational {
        let v = self.below((2 * bound) as u64) as i64 - bound;
        Rational::from_int(if v == 0 { 1 } else { v })
    }

    fn poly(&mut self, table: &std::sync::Arc<VariableTable>, terms: u64, max_exp: u64, coeff_bound: i64) -> QPoly {
        let n = table.len();
        let count = self.below(terms + 1);
        let list: Vec<(Rational, Monomial)> = (0..count)
            .map(|_| {
                let exps: Vec<u16> = (0..n).map(|_| self.below(max_exp + 1) as u16).collect();
                (self.coeff(coeff_bound), Monomial::new(exps))
            })
            .collect();
        QPoly::from_terms(table.clone(), list)
    }

    fn nonzero_poly(&mut self, table: &std::sync::Arc<VariableTable>, terms: u64, max_exp: u64, coeff_bound: i64) -> QPoly {
        loop {
            let f = self.poly(table, terms, max_exp, coeff_bound);
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// Random bihomogeneous polynomial on the weighted alphabet, built by
    /// padding random monomials with the degree carriers.
    fn bihomogeneous(&mut self, table: &std::sync::Arc<VariableTable>, terms: u64, max_exp: u64) -> QPoly {
        let weights = table.weights().expect("weighted table");
        let (target_a, target_b) = (max_exp as u32 + 2, max_exp as u32 + 2);
        let p_idx = table.index_of("p").unwrap();
        let pc_idx = table.index_of("pc").unwrap();
        let n = table.len();
        let count = 1 + self.below(terms);
        let mut list = Vec::new();
        'outer: for _ in 0..count {
            let mut exps = vec![0u16; n];
            for (i, e) in exps.iter_mut().enumerate() {
                if i == p_idx || i == pc_idx {
                    continue;
                }
                *e = self.below(max_exp + 1) as u16;
            }
            let mut a = 0u32;
            let mut b = 0u32;
            for (i, &e) in exps.iter().enumerate() {
                a += e as u32 * weights[i].0;
                b += e as u32 * weights[i].1;
            }
            if a > target_a || b > target_b {
                continue 'outer;
            }
            exps[p_idx] = (target_a - a) as u16;
            exps[pc_idx] = (target_b - b) as u16;
            list.push((self.coeff(9), Monomial::new(exps)));
        }
        if list.is_empty() {
            let mut exps = vec![0u16; n];
            exps[p_idx] = target_a as u16;
            exps[pc_idx] = target_b as u16;
            list.push((Rational::one(), Monomial::new(exps)));
        }
        QPoly::from_terms(table.clone(), list)
    }

    fn rational_coprime_to(&mut self, p: i64) -> Rational {
        loop {
            let num = self.below(2000) as i64 - 1000;
            let den = 1 + self.below(1000) as i64;
            if den % p != 0 {
                return Rational::new(num, den).unwrap();
            }
        }
    }
}
