use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::PolyError;

/// Where a variable goes under the weighted dehomogenization map: either it
/// is one of the two degree-carrying variables that get divided out, or it is
/// renamed onto the reduced alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DehomTarget {
    Drop,
    Rename(String),
}

/// A declared, ordered alphabet of variables. Optionally carries a
/// conjugation pairing (an involution on indices), per-variable bidegree
/// weights, and a dehomogenization map. All three are declared explicitly by
/// fixture headers, never inferred.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariableTable {
    names: Vec<String>,
    #[serde(skip)]
    index: BTreeMap<String, usize>,
    conj: Option<Vec<usize>>,
    weights: Option<Vec<(u32, u32)>>,
    dehom: Option<Vec<DehomTarget>>,
}

impl VariableTable {
    pub fn new(names: Vec<String>) -> Result<Arc<Self>, PolyError> {
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(PolyError::BadTable(format!("invalid variable name {n:?}")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(PolyError::BadTable(format!("duplicate variable {n:?}")));
            }
        }
        Ok(Arc::new(VariableTable {
            names,
            index,
            conj: None,
            weights: None,
            dehom: None,
        }))
    }

    pub fn from_names(names: &[&str]) -> Result<Arc<Self>, PolyError> {
        Self::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Set the conjugation involution from (left, right) name pairs. Every
    /// variable must end up paired; self-pairs are declared as (v, v).
    pub fn with_conj_pairs(self: &Arc<Self>, pairs: &[(String, String)]) -> Result<Arc<Self>, PolyError> {
        let mut conj: Vec<Option<usize>> = vec![None; self.len()];
        for (a, b) in pairs {
            let ia = self
                .index_of(a)
                .ok_or_else(|| PolyError::UnknownVariable(a.clone()))?;
            let ib = self
                .index_of(b)
                .ok_or_else(|| PolyError::UnknownVariable(b.clone()))?;
            if conj[ia].is_some() || (ia != ib && conj[ib].is_some()) {
                return Err(PolyError::BadTable(format!("variable {a} paired twice")));
            }
            conj[ia] = Some(ib);
            conj[ib] = Some(ia);
        }
        let conj: Vec<usize> = conj
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| PolyError::BadTable(format!("variable {} has no conjugate", self.names[i]))))
            .collect::<Result<_, _>>()?;
        let mut t = (**self).clone();
        t.conj = Some(conj);
        Ok(Arc::new(t))
    }

    pub fn with_weights(self: &Arc<Self>, weights: Vec<(u32, u32)>) -> Result<Arc<Self>, PolyError> {
        if weights.len() != self.len() {
            return Err(PolyError::BadTable("weights must cover every variable".into()));
        }
        let mut t = (**self).clone();
        t.weights = Some(weights);
        Ok(Arc::new(t))
    }

    pub fn with_dehom(self: &Arc<Self>, map: Vec<DehomTarget>) -> Result<Arc<Self>, PolyError> {
        if map.len() != self.len() {
            return Err(PolyError::BadTable("dehom map must cover every variable".into()));
        }
        let mut t = (**self).clone();
        t.dehom = Some(map);
        Ok(Arc::new(t))
    }

    pub fn conj(&self) -> Option<&[usize]> {
        self.conj.as_deref()
    }

    pub fn conj_index(&self, i: usize) -> Option<usize> {
        self.conj.as_ref().map(|c| c[i])
    }

    pub fn weights(&self) -> Option<&[(u32, u32)]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, i: usize) -> Option<(u32, u32)> {
        self.weights.as_ref().map(|w| w[i])
    }

    pub fn dehom(&self) -> Option<&[DehomTarget]> {
        self.dehom.as_deref()
    }

    /// Build the reduced table for the dehomogenization map, plus the index
    /// map old -> new (None for the two dropped degree carriers).
    ///
    /// Exactly one variable of weight (1,0) and one of weight (0,1) must be
    /// dropped; conjugation carries over to the reduced alphabet.
    pub fn dehom_image(self: &Arc<Self>) -> Result<(Arc<VariableTable>, Vec<Option<usize>>), PolyError> {
        let map = self
            .dehom
            .as_ref()
            .ok_or(PolyError::MissingDehom)?;
        let weights = self.weights.as_ref().ok_or(PolyError::MissingWeights)?;
        let mut names = Vec::new();
        let mut index_map: Vec<Option<usize>> = Vec::with_capacity(self.len());
        let mut dropped = Vec::new();
        for (i, target) in map.iter().enumerate() {
            match target {
                DehomTarget::Drop => {
                    index_map.push(None);
                    dropped.push(weights[i]);
                }
                DehomTarget::Rename(n) => {
                    index_map.push(Some(names.len()));
                    names.push(n.clone());
                }
            }
        }
        if dropped.len() != 2 || !dropped.contains(&(1, 0)) || !dropped.contains(&(0, 1)) {
            return Err(PolyError::BadTable(
                "dehom must drop exactly one (1,0) and one (0,1) variable".into(),
            ));
        }
        let mut reduced = VariableTable::new(names)?;
        if let Some(conj) = &self.conj {
            let pairs: Vec<(String, String)> = (0..self.len())
                .filter(|&i| i <= conj[i])
                .filter_map(|i| match (&index_map[i], &index_map[conj[i]]) {
                    (Some(a), Some(b)) => Some((
                        reduced.name(*a).to_string(),
                        reduced.name(*b).to_string(),
                    )),
                    _ => None,
                })
                .collect();
            reduced = reduced.with_conj_pairs(&pairs)?;
        }
        Ok((reduced, index_map))
    }

    /// A copy of this table with one extra trailing self-conjugate variable.
    /// Weights and the dehom map do not carry over.
    pub fn extended(self: &Arc<Self>, extra: &str) -> Result<Arc<Self>, PolyError> {
        let mut names = self.names.clone();
        let name = if self.index_of(extra).is_some() {
            let mut k = 0;
            loop {
                let candidate = format!("{extra}{k}");
                if self.index_of(&candidate).is_none() {
                    break candidate;
                }
                k += 1;
            }
        } else {
            extra.to_string()
        };
        names.push(name.clone());
        let t = VariableTable::new(names)?;
        if let Some(conj) = &self.conj {
            let mut pairs: Vec<(String, String)> = conj
                .iter()
                .enumerate()
                .filter(|(i, j)| i <= *j)
                .map(|(i, &j)| (self.names[i].clone(), self.names[j].clone()))
                .collect();
            pairs.push((name.clone(), name));
            t.with_conj_pairs(&pairs)
        } else {
            Ok(t)
        }
    }

    /// Structural compatibility: same names in the same order.
    pub fn compatible(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_requires_total_involution() {
        let t = VariableTable::from_names(&["x1", "xc1", "z"]).unwrap();
        assert!(t
            .with_conj_pairs(&[("x1".into(), "xc1".into())])
            .is_err());
        let t = t
            .with_conj_pairs(&[("x1".into(), "xc1".into()), ("z".into(), "z".into())])
            .unwrap();
        assert_eq!(t.conj_index(0), Some(1));
        assert_eq!(t.conj_index(1), Some(0));
        assert_eq!(t.conj_index(2), Some(2));
    }

    #[test]
    fn rejects_duplicate_names() {
        assert!(VariableTable::from_names(&["x", "x"]).is_err());
    }

    #[test]
    fn extended_avoids_collisions() {
        let t = VariableTable::from_names(&["x", "z"]).unwrap();
        let e = t.extended("z").unwrap();
        assert_eq!(e.names(), &["x", "z", "z0"]);
    }
}
