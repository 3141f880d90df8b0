//! Brute-force enumeration of solution sets over small prime fields: the
//! independent oracle used to validate component decompositions and
//! no-solution claims. Everything here is exhaustive and exact mod p.

use rayon::prelude::*;
use thiserror::Error;

use crate::poly::{FpPoly, QPoly};
use crate::scalars::{FpElement, PrimeField, ScalarError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VarietyError {
    #[error("{points} points exceeds the enumeration cap of {cap}")]
    CapExceeded { points: u128, cap: u128 },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub const DEFAULT_EVAL_CAP: u128 = 10_000_000;

/// All common zeros of a system in Z_p^n, sorted lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct FpVariety {
    pub prime: u64,
    pub points: Vec<Vec<u64>>,
}

impl FpVariety {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn contains(&self, point: &[u64]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(point)).is_ok()
    }
}

/// Substitute `v` for variable `var` in every polynomial; polynomials that
/// become nonzero constants prune the whole branch.
enum Specialized {
    Inconsistent,
    Remaining(Vec<FpPoly>),
}

fn specialize_var(polys: &[FpPoly], var: usize, v: FpElement, field: &PrimeField) -> Specialized {
    let table = polys
        .first()
        .map(|p| p.table().clone())
        .expect("nonempty system");
    let name = table.name(var).to_string();
    let mut out = Vec::with_capacity(polys.len());
    for p in polys {
        let q = p.specialize(&[(name.as_str(), v)]).expect("known variable");
        if q.is_constant() {
            if !q.is_zero() {
                return Specialized::Inconsistent;
            }
            // identically zero: drop it
        } else {
            out.push(q);
        }
    }
    let _ = field;
    Specialized::Remaining(out)
}

fn enumerate(
    polys: &[FpPoly],
    var: usize,
    arity: usize,
    prefix: &mut Vec<u64>,
    field: &PrimeField,
    out: &mut Vec<Vec<u64>>,
) {
    if var == arity {
        out.push(prefix.clone());
        return;
    }
    for v in 0..field.modulus() {
        let el = field.element(v);
        match specialize_var(polys, var, el, field) {
            Specialized::Inconsistent => continue,
            Specialized::Remaining(rest) => {
                prefix.push(v);
                if rest.is_empty() {
                    // all constraints satisfied; remaining coordinates free
                    free_fill(var + 1, arity, prefix, field, out);
                } else {
                    enumerate(&rest, var + 1, arity, prefix, field, out);
                }
                prefix.pop();
            }
        }
    }
}

fn free_fill(var: usize, arity: usize, prefix: &mut Vec<u64>, field: &PrimeField, out: &mut Vec<Vec<u64>>) {
    if var == arity {
        out.push(prefix.clone());
        return;
    }
    for v in 0..field.modulus() {
        prefix.push(v);
        free_fill(var + 1, arity, prefix, field, out);
        prefix.pop();
    }
}

/// Exhaustive common-zero enumeration of the mod-p images of `gens`.
/// Fails with `CapExceeded` when p^n is past the cap, and with
/// `BadReduction` when p divides some coefficient denominator.
pub fn brute_force(gens: &[QPoly], p: u64, cap: u128) -> Result<FpVariety, VarietyError> {
    let field = PrimeField::new(p)?;
    let arity = gens.first().map(|g| g.table().len()).unwrap_or(0);
    let points = (p as u128).checked_pow(arity as u32).unwrap_or(u128::MAX);
    if points > cap {
        return Err(VarietyError::CapExceeded { points, cap });
    }
    let reduced: Vec<FpPoly> = gens
        .iter()
        .map(|g| g.reduce_mod_p(&field))
        .collect::<Result<_, _>>()?;
    // identically-zero polynomials impose nothing; nonzero constants kill all
    let mut live = Vec::new();
    for q in reduced {
        if q.is_constant() {
            if !q.is_zero() {
                return Ok(FpVariety {
                    prime: p,
                    points: Vec::new(),
                });
            }
        } else {
            live.push(q);
        }
    }
    if live.is_empty() {
        // no constraints: the whole grid (only sensible for tiny tables)
        let mut out = Vec::new();
        free_fill(0, arity, &mut Vec::new(), &field, &mut out);
        return Ok(FpVariety { prime: p, points: out });
    }

    // parallelize over the first coordinate; each branch owns its inputs
    let mut slices: Vec<Vec<Vec<u64>>> = (0..p)
        .into_par_iter()
        .map(|v| {
            let mut out = Vec::new();
            let el = field.element(v);
            match specialize_var(&live, 0, el, &field) {
                Specialized::Inconsistent => {}
                Specialized::Remaining(rest) => {
                    let mut prefix = vec![v];
                    if rest.is_empty() {
                        free_fill(1, arity, &mut prefix, &field, &mut out);
                    } else {
                        enumerate(&rest, 1, arity, &mut prefix, &field, &mut out);
                    }
                }
            }
            out
        })
        .collect();
    let mut points: Vec<Vec<u64>> = slices.drain(..).flatten().collect();
    points.sort();
    points.dedup();
    Ok(FpVariety { prime: p, points })
}

/// Point-set comparison of a system against a union of components.
#[derive(Debug, Clone)]
pub struct CoverageReport {
    pub prime: u64,
    pub system_points: usize,
    pub component_points: usize,
    /// Points of V(F) missed by every component.
    pub missing: Vec<Vec<u64>>,
    /// Component points that are not zeros of F.
    pub extra: Vec<Vec<u64>>,
    /// V(F) ⊆ ∪ V(G_i)
    pub covered: bool,
    /// ∪ V(G_i) ⊆ V(F)
    pub sound: bool,
}

/// Compare V(F) against the union of the component varieties mod p.
pub fn variety_covered(
    system: &[QPoly],
    components: &[Vec<QPoly>],
    p: u64,
    cap: u128,
) -> Result<CoverageReport, VarietyError> {
    let vf = brute_force(system, p, cap)?;
    let mut union: Vec<Vec<u64>> = Vec::new();
    for comp in components {
        union.extend(brute_force(comp, p, cap)?.points);
    }
    union.sort();
    union.dedup();
    let missing: Vec<Vec<u64>> = vf
        .points
        .iter()
        .filter(|pt| union.binary_search(pt).is_err())
        .cloned()
        .collect();
    let extra: Vec<Vec<u64>> = union
        .iter()
        .filter(|pt| !vf.contains(pt))
        .cloned()
        .collect();
    Ok(CoverageReport {
        prime: p,
        system_points: vf.points.len(),
        component_points: union.len(),
        covered: missing.is_empty(),
        sound: extra.is_empty(),
        missing,
        extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::VariableTable;

    #[test]
    fn quadratic_roots_mod_five() {
        let t = VariableTable::from_names(&["x"]).unwrap();
        let f = parse_poly("x^2 - 1", &t).unwrap();
        let v = brute_force(&[f], 5, DEFAULT_EVAL_CAP).unwrap();
        assert_eq!(v.points, vec![vec![1], vec![4]]);
    }

    #[test]
    fn irreducible_quadratic_mod_three() {
        let t = VariableTable::from_names(&["x"]).unwrap();
        let f = parse_poly("x^2 + 1", &t).unwrap();
        let v = brute_force(&[f], 3, DEFAULT_EVAL_CAP).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn cap_blocks_large_grids() {
        let t = VariableTable::from_names(&["x", "y", "z"]).unwrap();
        let f = parse_poly("x + y + z", &t).unwrap();
        assert!(matches!(
            brute_force(&[f], 101, 1000),
            Err(VarietyError::CapExceeded { .. })
        ));
    }

    #[test]
    fn factor_cover_is_exact() {
        let t = VariableTable::from_names(&["x"]).unwrap();
        let f = parse_poly("x^2 - 1", &t).unwrap();
        let comp1 = vec![parse_poly("x - 1", &t).unwrap()];
        let comp2 = vec![parse_poly("x + 1", &t).unwrap()];
        let report = variety_covered(&[f], &[comp1, comp2], 7, DEFAULT_EVAL_CAP).unwrap();
        assert!(report.covered && report.sound);
        assert_eq!(report.system_points, 2);
    }

    #[test]
    fn empty_component_list_misses_points() {
        let t = VariableTable::from_names(&["x"]).unwrap();
        let f = parse_poly("x^2 - 1", &t).unwrap();
        let report = variety_covered(&[f], &[], 7, DEFAULT_EVAL_CAP).unwrap();
        assert!(!report.covered);
        assert!(report.sound);
        assert_eq!(report.missing.len(), 2);
    }

    #[test]
    fn vanishing_product_is_union() {
        let t = VariableTable::from_names(&["x", "y"]).unwrap();
        let f = parse_poly("x - 1", &t).unwrap();
        let g = parse_poly("y - 2", &t).unwrap();
        let fg = f.checked_mul(&g).unwrap();
        let vfg = brute_force(&[fg], 5, DEFAULT_EVAL_CAP).unwrap();
        let vf = brute_force(&[f], 5, DEFAULT_EVAL_CAP).unwrap();
        let vg = brute_force(&[g], 5, DEFAULT_EVAL_CAP).unwrap();
        let mut union = vf.points.clone();
        union.extend(vg.points.clone());
        union.sort();
        union.dedup();
        assert_eq!(vfg.points, union);
    }

    #[test]
    fn bad_reduction_surfaces() {
        let t = VariableTable::from_names(&["x"]).unwrap();
        let f = parse_poly("1/5*x - 1", &t).unwrap();
        assert!(matches!(
            brute_force(&[f], 5, DEFAULT_EVAL_CAP),
            Err(VarietyError::Scalar(ScalarError::BadReduction { .. }))
        ));
    }
}
