//! Command-line driver. One thin binary dispatches onto the library; all
//! results go to stdout in the canonical text format (or JSON with
//! `--format json`), diagnostics to stderr.
//!
//! Exit codes: 0 success / confirmed; 1 a check was refuted or a strict case
//! found diffs; 2 usage or parse error; 3 resource limit.

use std::path::PathBuf;

use serde_json::json;

use crate::analyze::{is_zero_dimensional, standard_monomials, LeadingTermSet, LeadingTermSource};
use crate::cases::{run_all, run_case, CaseConfig, CaseId, CaseStatus, FixtureSet};
use crate::groebner::{buchberger_q, radical_member, GroebnerError, Limits};
use crate::modular::{sample_structure, SampleStatus};
use crate::parse::{load_system, print_poly, SystemFile};
use crate::poly::{OrderKind, QPoly, TermOrder};
use crate::scalars::primes_in_window;
use crate::variety::{brute_force, VarietyError};

const USAGE: &str = "\
usage: idealkit <command> [options]

commands:
  gb <file>              reduced Groebner basis of all entries in the file
  nf <file> -f <name>    normal form of entry <name> against the basis of the others
  radical <file> -f <name>
                         radical membership of entry <name> in the ideal of the others
  solve-zp <file> -p <prime>
                         exhaustive solution set of the system mod p
  finiteness <file>      zero-dimensionality verdict and standard monomial count
  dehom <file>           dehomogenize every entry (needs weights + dehom header)
  conj <file>            conjugate every entry (needs conj header)
  sample <file> -n <count>
                         multi-prime structural sampling of the basis skeleton
  verify <case_id|all>   run scripted verification cases over the shipped fixtures

options:
  --order lex|grlex|grevlex   term order (default grevlex)
  --vars v1,v2,...            variable priority, overrides the file's order
  --format text|json          output format (default text)
  --max-pairs N               Buchberger pair cap (default 1000000)
  --max-terms N               intermediate term cap (default 100000)
  --window LO:HI              sampling prime window (default 32768:65536)
  --cap N                     evaluation cap for solve-zp (default 10000000)
  --fixtures DIR              fixture directory for verify
                              (or IDEALKIT_FIXTURES; default: built-in copies)
";

struct Options {
    order_kind: OrderKind,
    priority_names: Option<Vec<String>>,
    json: bool,
    limits: Limits,
    window: (u64, u64),
    eval_cap: u128,
    fixtures: Option<PathBuf>,
    entry: Option<String>,
    prime: Option<u64>,
    count: Option<usize>,
    positional: Vec<String>,
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprintln!("{USAGE}");
    2
}

fn parse_options(args: &[String]) -> Result<Options, String> {
    let mut o = Options {
        order_kind: OrderKind::GrevLex,
        priority_names: None,
        json: false,
        limits: Limits::default(),
        window: (1 << 15, 1 << 16),
        eval_cap: crate::variety::DEFAULT_EVAL_CAP,
        fixtures: std::env::var_os("IDEALKIT_FIXTURES").map(PathBuf::from),
        entry: None,
        prime: None,
        count: None,
        positional: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let mut take = |flag: &str| -> Result<String, String> {
            it.next()
                .cloned()
                .ok_or_else(|| format!("{flag} needs a value"))
        };
        match a.as_str() {
            "--order" => {
                let v = take("--order")?;
                o.order_kind =
                    OrderKind::parse(&v).ok_or_else(|| format!("unknown order {v:?}"))?;
            }
            "--vars" => {
                let v = take("--vars")?;
                o.priority_names = Some(v.split(',').map(|s| s.trim().to_string()).collect());
            }
            "--format" => match take("--format")?.as_str() {
                "json" => o.json = true,
                "text" => o.json = false,
                other => return Err(format!("unknown format {other:?}")),
            },
            "--max-pairs" => {
                o.limits.max_pairs = take("--max-pairs")?
                    .parse()
                    .map_err(|_| "--max-pairs needs an integer".to_string())?;
            }
            "--max-terms" => {
                o.limits.max_terms = take("--max-terms")?
                    .parse()
                    .map_err(|_| "--max-terms needs an integer".to_string())?;
            }
            "--window" => {
                let v = take("--window")?;
                let (lo, hi) = v
                    .split_once(':')
                    .ok_or_else(|| "--window needs LO:HI".to_string())?;
                o.window = (
                    lo.parse().map_err(|_| "bad window".to_string())?,
                    hi.parse().map_err(|_| "bad window".to_string())?,
                );
            }
            "--cap" => {
                o.eval_cap = take("--cap")?
                    .parse()
                    .map_err(|_| "--cap needs an integer".to_string())?;
            }
            "--fixtures" => o.fixtures = Some(PathBuf::from(take("--fixtures")?)),
            "-f" => o.entry = Some(take("-f")?),
            "-p" => {
                o.prime = Some(
                    take("-p")?
                        .parse()
                        .map_err(|_| "-p needs a prime".to_string())?,
                );
            }
            "-n" => {
                o.count = Some(
                    take("-n")?
                        .parse()
                        .map_err(|_| "-n needs an integer".to_string())?,
                );
            }
            other if other.starts_with('-') => return Err(format!("unknown option {other:?}")),
            other => o.positional.push(other.to_string()),
        }
    }
    Ok(o)
}

fn load(path: &str) -> Result<SystemFile, i32> {
    load_system(path).map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

/// The effective order: the requested kind, with the priority taken from the
/// command line when given, otherwise the file's own variable order.
fn effective_order(o: &Options, sys: &SystemFile) -> Result<TermOrder, i32> {
    match &o.priority_names {
        None => Ok(TermOrder::natural(o.order_kind, sys.table.len())),
        Some(names) => {
            let mut priority = Vec::with_capacity(names.len());
            for n in names {
                match sys.table.index_of(n) {
                    Some(i) => priority.push(i),
                    None => {
                        eprintln!("error: unknown variable {n:?} in --vars");
                        return Err(2);
                    }
                }
            }
            TermOrder::new(o.order_kind, priority).map_err(|e| {
                eprintln!("error: {e}");
                2
            })
        }
    }
}

fn groebner_exit(e: &GroebnerError) -> i32 {
    match e {
        GroebnerError::ResourceLimit(msg) => {
            eprintln!("error: resource limit: {msg}");
            3
        }
        other => {
            eprintln!("error: {other}");
            2
        }
    }
}

fn all_polys(sys: &SystemFile) -> Vec<QPoly> {
    sys.entries.iter().map(|e| e.poly.clone()).collect()
}

fn split_entry(sys: &SystemFile, name: &str) -> Result<(QPoly, Vec<QPoly>), i32> {
    let Some(target) = sys.poly(name) else {
        eprintln!("error: no entry named {name:?}");
        return Err(2);
    };
    let rest: Vec<QPoly> = sys
        .entries
        .iter()
        .filter(|e| e.name != name)
        .map(|e| e.poly.clone())
        .collect();
    if rest.is_empty() {
        eprintln!("error: no other entries to generate an ideal");
        return Err(2);
    }
    Ok((target.clone(), rest))
}

pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run_with_args(&args)
}

pub fn run_with_args(args: &[String]) -> i32 {
    if args.is_empty() {
        return usage_error("missing command");
    }
    let command = args[0].clone();
    let o = match parse_options(&args[1..]) {
        Ok(o) => o,
        Err(m) => return usage_error(&m),
    };
    match command.as_str() {
        "gb" => cmd_gb(&o),
        "nf" => cmd_nf(&o),
        "radical" => cmd_radical(&o),
        "solve-zp" => cmd_solve_zp(&o),
        "finiteness" => cmd_finiteness(&o),
        "dehom" => cmd_map(&o, true),
        "conj" => cmd_map(&o, false),
        "sample" => cmd_sample(&o),
        "verify" => cmd_verify(&o),
        other => usage_error(&format!("unknown command {other:?}")),
    }
}

fn one_file(o: &Options) -> Result<SystemFile, i32> {
    match o.positional.as_slice() {
        [path] => load(path),
        _ => Err(usage_error("expected exactly one file argument")),
    }
}

fn cmd_gb(o: &Options) -> i32 {
    let sys = match one_file(o) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let ord = match effective_order(o, &sys) {
        Ok(x) => x,
        Err(c) => return c,
    };
    let gb = match buchberger_q(&all_polys(&sys), &ord, &o.limits) {
        Ok(gb) => gb,
        Err(e) => return groebner_exit(&e),
    };
    eprintln!("# order: {ord}");
    if o.json {
        let out = json!({
            "order": ord.kind().name(),
            "trivial": gb.is_trivial(),
            "generators": gb.generators().iter().map(print_poly).collect::<Vec<_>>(),
            "stats": gb.stats(),
        });
        println!("{out}");
    } else {
        for g in gb.generators() {
            println!("{}", print_poly(g));
        }
    }
    0
}

fn cmd_nf(o: &Options) -> i32 {
    let sys = match one_file(o) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let Some(name) = &o.entry else {
        return usage_error("nf needs -f <name>");
    };
    let (target, rest) = match split_entry(&sys, name) {
        Ok(x) => x,
        Err(c) => return c,
    };
    let ord = match effective_order(o, &sys) {
        Ok(x) => x,
        Err(c) => return c,
    };
    let gb = match buchberger_q(&rest, &ord, &o.limits) {
        Ok(gb) => gb,
        Err(e) => return groebner_exit(&e),
    };
    let nf = match gb.normal_form(&target) {
        Ok(nf) => nf,
        Err(e) => return groebner_exit(&e),
    };
    eprintln!("# order: {ord}");
    if o.json {
        println!("{}", json!({ "entry": name, "normal_form": print_poly(&nf) }));
    } else {
        println!("{}", print_poly(&nf));
    }
    0
}

fn cmd_radical(o: &Options) -> i32 {
    let sys = match one_file(o) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let Some(name) = &o.entry else {
        return usage_error("radical needs -f <name>");
    };
    let (target, rest) = match split_entry(&sys, name) {
        Ok(x) => x,
        Err(c) => return c,
    };
    match radical_member(&target, &rest, &o.limits) {
        Ok(member) => {
            if o.json {
                println!("{}", json!({ "entry": name, "member": member }));
            } else {
                println!("{member}");
            }
            if member {
                0
            } else {
                1
            }
        }
        Err(e) => groebner_exit(&e),
    }
}

fn cmd_solve_zp(o: &Options) -> i32 {
    let sys = match one_file(o) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let Some(p) = o.prime else {
        return usage_error("solve-zp needs -p <prime>");
    };
    match brute_force(&all_polys(&sys), p, o.eval_cap) {
        Ok(v) => {
            if o.json {
                println!("{}", json!({ "prime": p, "count": v.len(), "points": v.points }));
            } else {
                println!("# {} solutions mod {}", v.len(), p);
                for pt in &v.points {
                    let coords: Vec<String> = pt.iter().map(|c| c.to_string()).collect();
                    println!("({})", coords.join(", "));
                }
            }
            0
        }
        Err(VarietyError::CapExceeded { points, cap }) => {
            eprintln!("error: {points} points exceeds the cap of {cap}");
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn cmd_finiteness(o: &Options) -> i32 {
    let sys = match one_file(o) {
        Ok(s) => s,
        Err(c) => return c,
    };
    // a file whose entries are all single monomials is a declared
    // leading-term set; anything else gets its basis computed first
    let declared = sys.entries.iter().all(|e| e.poly.num_terms() == 1);
    let (h, source) = if declared {
        let monos = sys
            .entries
            .iter()
            .map(|e| e.poly.leading_canonical().expect("single term").1.clone())
            .collect();
        (
            LeadingTermSet::from_monomials(
                sys.table.clone(),
                TermOrder::natural(o.order_kind, sys.table.len()),
                monos,
                LeadingTermSource::DeclaredFixture,
            ),
            "declared fixture",
        )
    } else {
        let ord = match effective_order(o, &sys) {
            Ok(x) => x,
            Err(c) => return c,
        };
        let gb = match buchberger_q(&all_polys(&sys), &ord, &o.limits) {
            Ok(gb) => gb,
            Err(e) => return groebner_exit(&e),
        };
        (
            crate::analyze::leading_terms(&gb, sys.table.clone()),
            "computed basis",
        )
    };
    let finite = is_zero_dimensional(&h);
    let count = standard_monomials(&h, 1_000_000);
    if o.json {
        println!(
            "{}",
            json!({
                "source": source,
                "zero_dimensional": finite,
                "standard_monomials": count.as_ref().ok().copied().flatten(),
            })
        );
    } else {
        println!("# leading terms: {source}");
        println!("zero-dimensional: {finite}");
        match count {
            Ok(Some(n)) => println!("standard monomials: {n}"),
            Ok(None) => println!("standard monomials: infinite"),
            Err(e) => println!("standard monomials: {e}"),
        }
    }
    0
}

fn cmd_map(o: &Options, dehom: bool) -> i32 {
    let sys = match one_file(o) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let mut results = Vec::new();
    for e in &sys.entries {
        let mapped = if dehom {
            e.poly.dehomogenize()
        } else {
            e.poly.conjugate()
        };
        match mapped {
            Ok(f) => results.push((e.name.clone(), print_poly(&f))),
            Err(err) => {
                eprintln!("error: {}: {err}", e.name);
                return 2;
            }
        }
    }
    if o.json {
        let obj: serde_json::Map<String, serde_json::Value> = results
            .into_iter()
            .map(|(k, v)| (k, serde_json::Value::String(v)))
            .collect();
        println!("{}", serde_json::Value::Object(obj));
    } else {
        for (name, text) in results {
            println!("{name}: {text}");
        }
    }
    0
}

fn cmd_sample(o: &Options) -> i32 {
    let sys = match one_file(o) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let ord = match effective_order(o, &sys) {
        Ok(x) => x,
        Err(c) => return c,
    };
    let count = o.count.unwrap_or(20);
    let primes = primes_in_window(o.window.0, o.window.1, count);
    if primes.len() < count {
        eprintln!(
            "error: window ({}, {}) holds only {} primes",
            o.window.0,
            o.window.1,
            primes.len()
        );
        return 2;
    }
    let report = sample_structure(&all_polys(&sys), &ord, &primes, &o.limits);
    eprintln!("# order: {ord}");
    if o.json {
        let samples: Vec<_> = report
            .samples
            .iter()
            .map(|s| {
                json!({
                    "prime": s.prime,
                    "status": match &s.status {
                        SampleStatus::Ok => "ok".to_string(),
                        SampleStatus::BadReduction(m) => format!("bad reduction: {m}"),
                        SampleStatus::ResourceLimit(m) => format!("resource limit: {m}"),
                    },
                    "generators": s.skeleton.as_ref().map(|sk| sk.len()),
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "agreeing": report.agreeing,
                "dissenting": report.dissenting,
                "failures": report.failures,
                "unanimous": report.unanimous(),
                "majority_trivial": report.majority_is_trivial(),
                "samples": samples,
            })
        );
    } else {
        println!(
            "agreeing {} of {}; dissenting {:?}; failures {:?}; majority trivial: {}",
            report.agreeing,
            report.samples.len(),
            report.dissenting,
            report.failures,
            report.majority_is_trivial()
        );
    }
    0
}

fn cmd_verify(o: &Options) -> i32 {
    let which = match o.positional.as_slice() {
        [w] => w.clone(),
        _ => return usage_error("verify needs a case id or 'all'"),
    };
    let fx = match &o.fixtures {
        Some(dir) => FixtureSet::from_dir(dir),
        None => FixtureSet::builtin(),
    };
    let fx = match fx {
        Ok(fx) => fx,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut config = CaseConfig {
        limits: o.limits,
        ..CaseConfig::default()
    };
    config.prime_window = o.window;
    if let Some(n) = o.count {
        config.sample_count = n;
    }

    let reports = if which == "all" {
        run_all(&fx, &config)
    } else {
        match CaseId::parse(&which) {
            Some(id) => vec![run_case(id, &fx, &config)],
            None => {
                return usage_error(&format!(
                    "unknown case {which:?}; cases: {}",
                    CaseId::all()
                        .iter()
                        .map(|c| c.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            }
        }
    };

    if o.json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
    } else {
        for r in &reports {
            print!("{}", r.render_text());
        }
    }

    // exit 0 iff every strict case is confirmed; skipped cases map to 3
    let mut exit = 0;
    for r in &reports {
        let id = CaseId::parse(&r.case_id).expect("known id");
        if r.status == CaseStatus::Skipped {
            exit = exit.max(3);
        } else if id.is_strict() && !r.status.passes_strict() {
            exit = exit.max(1);
        }
    }
    exit
}
