use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
}

impl OrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GrLex => "grlex",
            OrderKind::GrevLex => "grevlex",
        }
    }

    pub fn parse(s: &str) -> Option<OrderKind> {
        match s {
            "lex" => Some(OrderKind::Lex),
            "grlex" => Some(OrderKind::GrLex),
            "grevlex" => Some(OrderKind::GrevLex),
            _ => None,
        }
    }
}

/// An admissible monomial order: one of the three standard kinds together
/// with an explicit variable priority (a permutation of variable indices,
/// highest priority first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self, String> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &i in &priority {
            if i >= n || seen[i] {
                return Err(format!("priority {:?} is not a permutation", priority));
            }
            seen[i] = true;
        }
        Ok(TermOrder { kind, priority })
    }

    /// The given kind with the table's own variable order as priority.
    pub fn natural(kind: OrderKind, arity: usize) -> Self {
        TermOrder {
            kind,
            priority: (0..arity).collect(),
        }
    }

    pub fn grevlex(arity: usize) -> Self {
        Self::natural(OrderKind::GrevLex, arity)
    }

    pub fn lex(arity: usize) -> Self {
        Self::natural(OrderKind::Lex, arity)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn arity(&self) -> usize {
        self.priority.len()
    }

    /// Same order on a table extended by trailing (lowest priority) variables.
    pub fn extend(&self, new_arity: usize) -> TermOrder {
        let mut priority = self.priority.clone();
        priority.extend(self.priority.len()..new_arity);
        TermOrder {
            kind: self.kind,
            priority,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), self.priority.len());
        debug_assert_eq!(b.arity(), self.priority.len());
        match self.kind {
            OrderKind::Lex => self.cmp_lex(a, b),
            OrderKind::GrLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    da.cmp(&db)
                } else {
                    self.cmp_lex(a, b)
                }
            }
            OrderKind::GrevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                for &i in self.priority.iter().rev() {
                    if a.exp(i) != b.exp(i) {
                        return b.exp(i).cmp(&a.exp(i));
                    }
                }
                Ordering::Equal
            }
        }
    }

    fn cmp_lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &i in &self.priority {
            if a.exp(i) != b.exp(i) {
                return a.exp(i).cmp(&b.exp(i));
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        if self.priority.iter().enumerate().any(|(k, &i)| k != i) {
            write!(f, "{:?}", self.priority)?;
        }
        Ok(())
    }
}
