//! Ordered tables of variable names.
//!
//! Every polynomial in the crate is expressed over a fixed, ordered list of
//! variable names. The order is part of the canonical form: exponent vectors
//! are compared lexicographically in table order, so two polynomials agree
//! exactly when their printed forms agree.

use crate::error::{Error, Result};
use std::sync::{Arc, OnceLock};

/// An immutable, ordered list of distinct variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric())
}

impl VarTable {
    /// Builds a table from distinct names. Names must start with an ASCII
    /// letter and contain only ASCII letters and digits.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let mut seen: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !valid_name(n) {
                return Err(Error::BadArgs(format!("invalid variable name {n:?}")));
            }
            if seen.iter().any(|s| s == n) {
                return Err(Error::BadArgs(format!("duplicate variable name {n:?}")));
            }
            seen.push(n.to_string());
        }
        Ok(Arc::new(VarTable { names: seen }))
    }

    /// The standard table used by every built-in construction:
    /// `t` (with `t^2` playing the role of `q`), spectral variables
    /// `z`, `z1`, `z2`, the additive variable `u`, the boundary scale `eta`,
    /// and boundary parameters `e0`..`e8`.
    pub fn standard() -> Arc<Self> {
        static TABLE: OnceLock<Arc<VarTable>> = OnceLock::new();
        TABLE
            .get_or_init(|| {
                let mut names = vec![
                    "t".to_string(),
                    "z".to_string(),
                    "z1".to_string(),
                    "z2".to_string(),
                    "u".to_string(),
                    "eta".to_string(),
                ];
                for i in 0..=8 {
                    names.push(format!("e{i}"));
                }
                VarTable::new(&names).expect("standard table is well formed")
            })
            .clone()
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// True when the table has no variables (constants only).
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Index of `name`, if present.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Index of `name`, or an `unknown-var` error.
    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVar(name.to_string()))
    }

    /// Name of the variable at `idx`. Panics when out of range.
    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    /// All names, in table order.
    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Panics unless `a` and `b` are the same table. All arithmetic requires
/// operands over one shared table; mixing tables is a programming error.
pub(crate) fn assert_same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) {
    if !Arc::ptr_eq(a, b) && a != b {
        panic!("variable tables differ: {:?} vs {:?}", a.names, b.names);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_table_layout() {
        let t = VarTable::standard();
        assert_eq!(t.len(), 15);
        assert_eq!(t.index_of("t"), Some(0));
        assert_eq!(t.index_of("z"), Some(1));
        assert_eq!(t.index_of("u"), Some(4));
        assert_eq!(t.index_of("eta"), Some(5));
        assert_eq!(t.index_of("e0"), Some(6));
        assert_eq!(t.index_of("e8"), Some(14));
        assert_eq!(t.index_of("q"), None);
    }

    #[test]
    fn rejects_bad_names() {
        assert!(VarTable::new(&["1z"]).is_err());
        assert!(VarTable::new(&["z z"]).is_err());
        assert!(VarTable::new(&["z", "z"]).is_err());
        assert!(VarTable::new(&[""]).is_err());
    }

    #[test]
    fn require_reports_unknown_var() {
        let t = VarTable::standard();
        let err = t.require("q").unwrap_err();
        assert!(err.to_string().starts_with("unknown-var"));
    }
}
