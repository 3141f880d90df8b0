//! Access to the shipped fixture systems. The canonical copies live in the
//! crate's `fixtures/` directory and are embedded into the binary; a
//! directory override lets the command line point at edited copies.

use std::path::Path;

use crate::parse::{parse_system, ParseError, SystemEntry, SystemFile};

pub const SIDE_RELATIONS: &str = include_str!("../../fixtures/side_relations.sys");
pub const VII13: &str = include_str!("../../fixtures/vii13.sys");
pub const P2_COMPONENTS: &str = include_str!("../../fixtures/p2_components.sys");
pub const D1_BRANCH: &str = include_str!("../../fixtures/d1_branch.sys");
pub const FINAL_SYSTEM: &str = include_str!("../../fixtures/final_system.sys");
pub const LEADING_TERMS: &str = include_str!("../../fixtures/leading_terms.sys");

pub const FILE_NAMES: &[&str] = &[
    "side_relations.sys",
    "vii13.sys",
    "p2_components.sys",
    "d1_branch.sys",
    "final_system.sys",
    "leading_terms.sys",
];

#[derive(Debug, Clone, thiserror::Error)]
pub enum FixtureError {
    #[error("fixture {file}: {source}")]
    Parse {
        file: String,
        #[source]
        source: ParseError,
    },
    #[error("fixture entry {name} missing from {file}")]
    Missing { file: String, name: String },
}

/// The six fixture files, parsed and validated.
#[derive(Debug, Clone)]
pub struct FixtureSet {
    pub side: SystemFile,
    pub vii13: SystemFile,
    pub p2c: SystemFile,
    pub d1b: SystemFile,
    pub fin: SystemFile,
    pub lt: SystemFile,
}

fn parse_one(file: &str, text: &str) -> Result<SystemFile, FixtureError> {
    parse_system(text).map_err(|source| FixtureError::Parse {
        file: file.to_string(),
        source,
    })
}

impl FixtureSet {
    /// The copies compiled into the library.
    pub fn builtin() -> Result<Self, FixtureError> {
        Ok(FixtureSet {
            side: parse_one("side_relations.sys", SIDE_RELATIONS)?,
            vii13: parse_one("vii13.sys", VII13)?,
            p2c: parse_one("p2_components.sys", P2_COMPONENTS)?,
            d1b: parse_one("d1_branch.sys", D1_BRANCH)?,
            fin: parse_one("final_system.sys", FINAL_SYSTEM)?,
            lt: parse_one("leading_terms.sys", LEADING_TERMS)?,
        })
    }

    /// Load the same six files from a directory instead.
    pub fn from_dir(dir: &Path) -> Result<Self, FixtureError> {
        let read = |file: &str| -> Result<SystemFile, FixtureError> {
            let path = dir.join(file);
            let text = std::fs::read_to_string(&path).map_err(|e| FixtureError::Parse {
                file: path.display().to_string(),
                source: ParseError::Io {
                    path: path.display().to_string(),
                    msg: e.to_string(),
                },
            })?;
            parse_one(file, &text)
        };
        Ok(FixtureSet {
            side: read("side_relations.sys")?,
            vii13: read("vii13.sys")?,
            p2c: read("p2_components.sys")?,
            d1b: read("d1_branch.sys")?,
            fin: read("final_system.sys")?,
            lt: read("leading_terms.sys")?,
        })
    }

    pub fn entry<'a>(
        &self,
        file: &'a SystemFile,
        file_name: &str,
        name: &str,
    ) -> Result<&'a SystemEntry, FixtureError> {
        file.get(name).ok_or_else(|| FixtureError::Missing {
            file: file_name.to_string(),
            name: name.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::print_poly;

    #[test]
    fn builtin_fixtures_parse() {
        let fx = FixtureSet::builtin().unwrap();
        assert_eq!(fx.side.entries.len(), 14);
        assert_eq!(fx.vii13.entries.len(), 1);
        assert!(fx.p2c.entries.len() >= 20);
        assert_eq!(fx.d1b.entries.len(), 4);
        assert_eq!(fx.fin.entries.len(), 7);
        assert_eq!(fx.lt.entries.len(), 6);
    }

    #[test]
    fn derived_final_entries_match_the_operations() {
        // the generated entries in the final-system file must equal what the
        // dehomogenization and conjugation operations produce from the
        // transcribed ones
        let fx = FixtureSet::builtin().unwrap();
        let s1x = fx
            .side
            .poly("s1_num")
            .unwrap()
            .dehomogenize()
            .unwrap()
            .map_onto(&fx.fin.table)
            .unwrap();
        assert_eq!(fx.fin.poly("s1x"), Some(&s1x));
        assert_eq!(s1x.conjugate().unwrap(), s1x, "self-conjugate");
        for name in ["f1", "f3", "f4"] {
            let conj = fx.fin.poly(name).unwrap().conjugate().unwrap();
            assert_eq!(fx.fin.poly(&format!("{name}_conj")), Some(&conj));
        }
    }

    #[test]
    fn printing_parsed_fixtures_is_idempotent() {
        let fx = FixtureSet::builtin().unwrap();
        for file in [&fx.side, &fx.vii13, &fx.p2c, &fx.d1b, &fx.fin, &fx.lt] {
            for e in &file.entries {
                let printed = print_poly(&e.poly);
                let reparsed = crate::parse::parse_poly(&printed, &file.table).unwrap();
                assert_eq!(reparsed, e.poly, "round trip failed for {}", e.name);
                assert_eq!(print_poly(&reparsed), printed);
            }
        }
    }

    #[test]
    fn weighted_entries_are_bihomogeneous() {
        // every side-relation entry must carry one common bidegree; this is
        // the transcription-typo alarm
        let fx = FixtureSet::builtin().unwrap();
        let expected: &[(&str, (u32, u32))] = &[
            ("d1", (1, 0)),
            ("d2", (2, 1)),
            ("d3", (3, 1)),
            ("d4_factor1", (1, 0)),
            ("d4_factor2", (1, 1)),
            ("dmu_num", (2, 1)),
            ("dmubar_num", (2, 1)),
            ("s1_num", (2, 2)),
            ("dba_c_num", (4, 1)),
            ("dba_v_num", (5, 1)),
            ("n1", (6, 2)),
            ("p1", (1, 1)),
            ("p2", (2, 1)),
            ("p2_amended", (2, 1)),
        ];
        for (name, want) in expected {
            let e = fx.side.get(name).unwrap_or_else(|| panic!("missing {name}"));
            let got = e.poly.bidegree().unwrap_or_else(|err| {
                panic!("{name} not bihomogeneous: {err}");
            });
            assert_eq!(got, *want, "bidegree of {name}");
        }
    }

    #[test]
    fn expected_term_counts() {
        let fx = FixtureSet::builtin().unwrap();
        let counts: &[(&str, usize)] = &[
            ("dmu_num", 16),
            ("dmubar_num", 11),
            ("s1_num", 31),
            ("dba_c_num", 25),
            ("dba_v_num", 43),
            ("n1", 84),
            ("p1", 6),
            ("p2", 12),
        ];
        for (name, want) in counts {
            let e = fx.side.get(name).unwrap();
            assert_eq!(e.poly.num_terms(), *want, "term count of {name}");
        }
        assert_eq!(fx.vii13.get("vii13_num").unwrap().poly.num_terms(), 63);
        assert_eq!(fx.p2c.get("n2").unwrap().poly.num_terms(), 91);
        assert_eq!(fx.p2c.get("p3").unwrap().poly.num_terms(), 22);
        assert_eq!(fx.p2c.get("p2x").unwrap().poly.num_terms(), 12);
        assert_eq!(fx.d1b.get("e3").unwrap().poly.num_terms(), 21);
        assert_eq!(fx.fin.get("f1").unwrap().poly.num_terms(), 16);
    }

    #[test]
    fn dehomogenization_matches_printed_reduced_forms() {
        let fx = FixtureSet::builtin().unwrap();
        // d1 and p1 dehomogenize exactly onto their printed reduced forms
        let d1x = fx.side.poly("d1").unwrap().dehomogenize().unwrap();
        let d1x = d1x.map_onto(&fx.d1b.table).unwrap();
        assert_eq!(&d1x, fx.d1b.poly("d1x").unwrap());

        let p1x = fx.side.poly("p1").unwrap().dehomogenize().unwrap();
        let p1x = p1x.map_onto(&fx.p2c.table).unwrap();
        assert_eq!(&p1x, fx.p2c.poly("p1x").unwrap());
    }

    #[test]
    fn component_leading_term_under_lex() {
        // 66*x1 + 125 leads with (66, x1) under lex
        let fx = FixtureSet::builtin().unwrap();
        let g = fx.p2c.poly("g1_3").unwrap();
        let ord = crate::poly::TermOrder::lex(fx.p2c.table.len());
        let (c, m) = g.leading_term(&ord).unwrap();
        assert_eq!(c, &crate::scalars::Rational::from_int(66));
        assert_eq!(m.exps(), &[1, 0, 0, 0]);
    }

    #[test]
    fn evaluation_at_a_constructed_root_vanishes() {
        // x1 = -125 * 66^-1 mod 7 is a root of 66*x1 + 125 by construction
        let fx = FixtureSet::builtin().unwrap();
        let g = fx.p2c.poly("g1_3").unwrap();
        let p = crate::scalars::PrimeField::new(7).unwrap();
        let root = p.from_i64(-125) * p.from_i64(66).inv().unwrap();
        let point = vec![root, p.zero(), p.zero(), p.zero()];
        assert!(g.eval_fp(&point, &p).unwrap().is_zero());
    }

    #[test]
    fn curvature_free_part_is_divisible_by_the_conjugate_scalar() {
        // every curvature-free term of the long side relation carries bc
        let fx = FixtureSet::builtin().unwrap();
        let n1 = fx.side.poly("n1").unwrap();
        let at_zero = n1
            .specialize(&[("F11", crate::scalars::Rational::zero())])
            .unwrap();
        let bc = crate::poly::Polynomial::variable(
            fx.side.table.clone(),
            "bc",
            crate::scalars::Rational::one(),
            1,
        )
        .unwrap();
        assert!(at_zero.exact_divide(&bc).is_ok());
    }

    #[test]
    fn branch_polynomial_reduces_to_zero_on_a_component() {
        // the second branch polynomial is an ideal member of the first
        // component, whose generators are linear in three of the variables
        let fx = FixtureSet::builtin().unwrap();
        let p2x = fx.p2c.poly("p2x").unwrap();
        let gens: Vec<crate::poly::QPoly> = fx
            .p2c
            .with_prefix("g1_")
            .iter()
            .map(|e| e.poly.clone())
            .collect();
        let ord = crate::poly::TermOrder::grevlex(fx.p2c.table.len());
        let gb = crate::groebner::buchberger(&gens, &ord, &crate::groebner::Limits::default())
            .unwrap();
        assert!(gb.normal_form(p2x).unwrap().is_zero());
    }

    #[test]
    fn fixture_dir_copies_match_builtin() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        let fx = FixtureSet::from_dir(&dir).unwrap();
        assert_eq!(fx.side.entries.len(), 14);
    }
}
