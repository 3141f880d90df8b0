use std::cmp::Ordering;

use serde::Serialize;

/// Exponent vector over a fixed variable table. Length always equals the
/// table size of the polynomial that owns it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    /// x_i^e as a monomial.
    pub fn var(arity: usize, index: usize, e: u16) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = e;
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), rhs.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, rhs: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), rhs.arity());
        self.exps.iter().zip(&rhs.exps).all(|(a, b)| a <= b)
    }

    /// self / rhs, or None when rhs does not divide self.
    pub fn checked_div(&self, rhs: &Monomial) -> Option<Monomial> {
        if !rhs.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), rhs.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), rhs.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, rhs: &Monomial) -> bool {
        self.exps.iter().zip(&rhs.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Map exponents through a variable permutation: result[perm[i]] = self[i].
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] += e;
        }
        Monomial { exps }
    }
}

/// Graded reverse lexicographic comparison with the table's own variable
/// order. This is the canonical storage order for every polynomial,
/// independent of the order an algorithm runs under.
pub fn cmp_canonical(a: &Monomial, b: &Monomial) -> Ordering {
    let (da, db) = (a.degree(), b.degree());
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.arity()).rev() {
        if a.exps[i] != b.exps[i] {
            // Smaller exponent in the least significant position wins.
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_and_lcm() {
        let a = Monomial::new(vec![2, 1]);
        let b = Monomial::new(vec![1, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.checked_div(&b), Some(Monomial::new(vec![1, 1])));
        assert_eq!(a.lcm(&b), a);
        assert!(a.checked_div(&Monomial::new(vec![0, 2])).is_none());
    }

    #[test]
    fn canonical_grevlex_tie_break() {
        // Same degree: x1 beats xc2 because its trailing exponent is smaller.
        let x1 = Monomial::new(vec![1, 0, 0, 0]);
        let xc2 = Monomial::new(vec![0, 0, 0, 1]);
        assert_eq!(cmp_canonical(&x1, &xc2), Ordering::Greater);
    }
}
