//! Names for the generators of the quantized affine algebra.
//!
//! Key items:
//! - [`GeneratorLabel`]: raising and lowering operators, group-like Cartan
//!   elements and their inverses, Cartan weights, and the formal scaling
//!   label that acts only through gradation twists.
//!
//! Labels are ordered, hashable, and round-trip through short strings like
//! `E+0`, `Kinv2`, or `D`, which also serve as JSON map keys.

use crate::error::{Error, Result};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// One generator of the quantized affine algebra.
///
/// The node index runs over the affine node set 0..=r of the underlying
/// Cartan data. `K(i)` is group-like (the exponentiated Cartan element that
/// conjugates raising operators by fixed powers of the deformation
/// variable) and `H(i)` is the corresponding integer weight; `D` is the
/// formal scaling label, which never has a finite-dimensional matrix and
/// acts only through the spectral-parameter twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorLabel {
    /// Raising operator at the node.
    EPlus(usize),
    /// Lowering operator at the node.
    EMinus(usize),
    /// Group-like Cartan element at the node.
    K(usize),
    /// Inverse of the group-like Cartan element.
    KInv(usize),
    /// Integer Cartan weight at the node.
    H(usize),
    /// Formal scaling label; no representation matrix.
    D,
}

impl GeneratorLabel {
    /// The node index, if the label is attached to one.
    pub fn node(&self) -> Option<usize> {
        match self {
            GeneratorLabel::EPlus(i)
            | GeneratorLabel::EMinus(i)
            | GeneratorLabel::K(i)
            | GeneratorLabel::KInv(i)
            | GeneratorLabel::H(i) => Some(*i),
            GeneratorLabel::D => None,
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLabel::EPlus(i) => write!(f, "E+{i}"),
            GeneratorLabel::EMinus(i) => write!(f, "E-{i}"),
            GeneratorLabel::K(i) => write!(f, "K{i}"),
            GeneratorLabel::KInv(i) => write!(f, "Kinv{i}"),
            GeneratorLabel::H(i) => write!(f, "H{i}"),
            GeneratorLabel::D => write!(f, "D"),
        }
    }
}

impl FromStr for GeneratorLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_idx = |tail: &str| -> Result<usize> {
            tail.parse::<usize>()
                .map_err(|_| Error::ParseError(format!("bad generator label: {s}")))
        };
        if s == "D" {
            Ok(GeneratorLabel::D)
        } else if let Some(t) = s.strip_prefix("E+") {
            Ok(GeneratorLabel::EPlus(parse_idx(t)?))
        } else if let Some(t) = s.strip_prefix("E-") {
            Ok(GeneratorLabel::EMinus(parse_idx(t)?))
        } else if let Some(t) = s.strip_prefix("Kinv") {
            Ok(GeneratorLabel::KInv(parse_idx(t)?))
        } else if let Some(t) = s.strip_prefix("K") {
            Ok(GeneratorLabel::K(parse_idx(t)?))
        } else if let Some(t) = s.strip_prefix("H") {
            Ok(GeneratorLabel::H(parse_idx(t)?))
        } else {
            Err(Error::ParseError(format!("bad generator label: {s}")))
        }
    }
}

impl Serialize for GeneratorLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GeneratorLabel {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- text round trip ----

    #[test]
    fn labels_round_trip_through_strings() {
        let labels = [
            GeneratorLabel::EPlus(0),
            GeneratorLabel::EMinus(3),
            GeneratorLabel::K(1),
            GeneratorLabel::KInv(2),
            GeneratorLabel::H(0),
            GeneratorLabel::D,
        ];
        for l in labels {
            let s = l.to_string();
            let back: GeneratorLabel = s.parse().unwrap();
            assert_eq!(back, l, "round trip through {s}");
        }
    }

    #[test]
    fn rejects_malformed_labels() {
        for bad in ["E0", "E+x", "Q1", "", "Kinv", "K-1"] {
            assert!(bad.parse::<GeneratorLabel>().is_err(), "{bad} must fail");
        }
    }

    #[test]
    fn kinv_wins_over_k_prefix() {
        assert_eq!(
            "Kinv7".parse::<GeneratorLabel>().unwrap(),
            GeneratorLabel::KInv(7)
        );
        assert_eq!("K7".parse::<GeneratorLabel>().unwrap(), GeneratorLabel::K(7));
    }

    // ---- serde ----

    #[test]
    fn serializes_as_plain_strings() {
        let json = serde_json::to_string(&GeneratorLabel::EPlus(1)).unwrap();
        assert_eq!(json, "\"E+1\"");
        let back: GeneratorLabel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, GeneratorLabel::EPlus(1));
    }
}
