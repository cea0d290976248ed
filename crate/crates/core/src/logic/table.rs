//! Finite groups given by multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::TableError;

/// A finite group on `0..order` with `0` the identity. Group axioms are
/// checked on construction; inverses are derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

/// On-disk form: `{"order": n, "names": [...], "mul": [[...]]}` plus an
/// optional `gens` list used when the table backs an oracle.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableDocument {
    pub order: usize,
    pub names: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<Vec<GenRef>>,
}

/// A marker given either by element index or by element name.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GenRef {
    Index(usize),
    Name(String),
}

impl FiniteGroupTable {
    pub fn new(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<FiniteGroupTable, TableError> {
        let n = mul.len();
        if n == 0 {
            return Err(TableError::Malformed("empty table".into()));
        }
        if names.len() != n {
            return Err(TableError::Malformed(format!("{} names for order {n}", names.len())));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::Malformed(format!("row {i} has {} entries", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(TableError::Malformed(format!("row {i} has entry {x} out of range")));
            }
        }
        if let Some(x) = (0..n).find(|&x| mul[0][x] != x || mul[x][0] != x) {
            return Err(TableError::NotAGroup(format!("element 0 is not an identity for {x}")));
        }
        let mut inv = vec![0; n];
        for x in 0..n {
            match (0..n).find(|&y| mul[x][y] == 0) {
                Some(y) if mul[y][x] == 0 => inv[x] = y,
                _ => return Err(TableError::NotAGroup(format!("element {x} has no two-sided inverse"))),
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = mul[x][y];
                for z in 0..n {
                    if mul[xy][z] != mul[x][mul[y][z]] {
                        return Err(TableError::NotAGroup(format!("({x}·{y})·{z} ≠ {x}·({y}·{z})")));
                    }
                }
            }
        }
        Ok(FiniteGroupTable { names, mul, inv })
    }

    /// Builds the table of `0..order` under `mul`, validating it.
    pub fn from_fn(names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroupTable, TableError> {
        let n = names.len();
        let rows = (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect();
        FiniteGroupTable::new(names, rows)
    }

    pub fn cyclic(n: usize) -> FiniteGroupTable {
        let names = (0..n).map(|i| i.to_string()).collect();
        FiniteGroupTable::from_fn(names, |x, y| (x + y) % n).expect("Z/n is a group")
    }

    pub fn trivial() -> FiniteGroupTable {
        FiniteGroupTable::cyclic(1)
    }

    /// `self × other`, element `(x, y)` numbered `x * |other| + y`.
    pub fn product(&self, other: &FiniteGroupTable) -> FiniteGroupTable {
        let m = other.order();
        let names = (0..self.order() * m).map(|i| format!("({},{})", self.names[i / m], other.names[i % m])).collect();
        FiniteGroupTable::from_fn(names, |a, b| self.mul(a / m, b / m) * m + other.mul(a % m, b % m))
            .expect("direct product of groups is a group")
    }

    pub fn from_document(doc: &TableDocument) -> Result<FiniteGroupTable, TableError> {
        if doc.order != doc.mul.len() {
            return Err(TableError::Malformed(format!("order {} but {} rows", doc.order, doc.mul.len())));
        }
        FiniteGroupTable::new(doc.names.clone(), doc.mul.clone())
    }

    pub fn from_json(text: &str) -> Result<FiniteGroupTable, TableError> {
        let doc: TableDocument = serde_json::from_str(text).map_err(|e| TableError::Malformed(e.to_string()))?;
        FiniteGroupTable::from_document(&doc)
    }

    pub fn to_document(&self) -> TableDocument {
        TableDocument { order: self.order(), names: self.names.clone(), mul: self.mul.clone(), gens: None }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_product() {
        let z2 = FiniteGroupTable::cyclic(2);
        let k4 = z2.product(&z2);
        assert_eq!(k4.order(), 4);
        assert!(k4.is_abelian());
        assert!((1..4).all(|x| k4.inv(x) == x));
        assert_eq!(FiniteGroupTable::cyclic(5).inv(2), 3);
    }

    #[test]
    fn rejects_non_groups() {
        let names = vec!["e".to_string(), "x".to_string()];
        assert!(matches!(FiniteGroupTable::new(names.clone(), vec![vec![0, 1], vec![1, 1]]), Err(TableError::NotAGroup(_))));
        assert!(matches!(FiniteGroupTable::new(names.clone(), vec![vec![0, 1]]), Err(TableError::Malformed(_))));
        assert!(matches!(FiniteGroupTable::new(names, vec![vec![0, 1], vec![1, 2]]), Err(TableError::Malformed(_))));
        // identity and inverses fine, associativity broken
        let names: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let bad = vec![vec![0, 1, 2, 3, 4], vec![1, 0, 3, 4, 2], vec![2, 4, 0, 1, 3], vec![3, 2, 4, 0, 1], vec![4, 3, 1, 2, 0]];
        assert!(matches!(FiniteGroupTable::new(names, bad), Err(TableError::NotAGroup(_))));
    }

    #[test]
    fn json_round_trip() {
        let t = FiniteGroupTable::cyclic(3);
        let text = serde_json::to_string(&t.to_document()).unwrap();
        assert_eq!(FiniteGroupTable::from_json(&text).unwrap(), t);
        assert!(FiniteGroupTable::from_json(r#"{"order": 2, "names": ["e"], "mul": [[0]]}"#).is_err());
    }

    #[test]
    fn subgroup_closure() {
        let z6 = FiniteGroupTable::cyclic(6);
        assert_eq!(z6.generated_subgroup(&[2]), vec![0, 2, 4]);
        assert_eq!(z6.generated_subgroup(&[]), vec![0]);
    }
}
