//! Gradation exponents for spectral-parameter twists.
//!
//! Key items:
//! - [`GradationSpec`]: one rational exponent per affine node, with the
//!   three named presets used throughout: homogeneous, principal, and spin.
//!
//! A gradation assigns the exponent s_i to the node's raising operator and
//! -s_i to its lowering operator when twisting by a spectral variable.
//! Different choices redistribute the spectral dependence without changing
//! any of the defining relations.

use super::cartan::CartanData;
use crate::error::{Error, Result};
use num_rational::Ratio;

/// Rational twist exponents, one per affine node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradationSpec {
    s: Vec<Ratio<i64>>,
}

impl GradationSpec {
    /// The homogeneous gradation: s_0 = 1 and all other s_i = 0, so only
    /// the affine-node operators carry the spectral variable.
    pub fn homogeneous(cartan: &CartanData) -> Self {
        let mut s = vec![Ratio::from_integer(0); cartan.nodes()];
        s[0] = Ratio::from_integer(1);
        GradationSpec { s }
    }

    /// The principal gradation: every s_i = 1.
    pub fn principal(cartan: &CartanData) -> Self {
        GradationSpec {
            s: vec![Ratio::from_integer(1); cartan.nodes()],
        }
    }

    /// The spin gradation: s_i = 1/d_i, the reciprocal symmetrizer. For the
    /// simply-laced A-series this coincides with the principal gradation.
    pub fn spin(cartan: &CartanData) -> Self {
        GradationSpec {
            s: (0..cartan.nodes())
                .map(|i| Ratio::new(1, cartan.d(i)))
                .collect(),
        }
    }

    /// A custom gradation; the exponent list must cover every affine node.
    pub fn custom(cartan: &CartanData, s: Vec<Ratio<i64>>) -> Result<Self> {
        if s.len() != cartan.nodes() {
            return Err(Error::BadArgs(format!(
                "gradation needs {} exponents, got {}",
                cartan.nodes(),
                s.len()
            )));
        }
        Ok(GradationSpec { s })
    }

    /// The trivial gradation: all exponents zero (no spectral dependence).
    pub fn trivial(cartan: &CartanData) -> Self {
        GradationSpec {
            s: vec![Ratio::from_integer(0); cartan.nodes()],
        }
    }

    /// Looks up a named preset: "homogeneous", "principal", or "spin".
    pub fn preset(name: &str, cartan: &CartanData) -> Result<Self> {
        match name {
            "homogeneous" => Ok(Self::homogeneous(cartan)),
            "principal" => Ok(Self::principal(cartan)),
            "spin" => Ok(Self::spin(cartan)),
            other => Err(Error::BadArgs(format!(
                "unknown gradation preset: {other} (expected homogeneous, principal, or spin)"
            ))),
        }
    }

    /// The exponent at one node.
    pub fn s(&self, i: usize) -> Ratio<i64> {
        self.s[i]
    }

    /// All exponents in node order.
    pub fn exponents(&self) -> &[Ratio<i64>] {
        &self.s
    }

    /// Number of nodes covered.
    pub fn len(&self) -> usize {
        self.s.len()
    }

    /// True when the exponent list is empty (never for validated data).
    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// True when every exponent is an integer, so a twist needs no
    /// fractional powers of the spectral variable.
    pub fn is_integral(&self) -> bool {
        self.s.iter().all(|x| x.is_integer())
    }

    /// The gradation with every exponent negated (the inverse twist).
    pub fn negated(&self) -> Self {
        GradationSpec {
            s: self.s.iter().map(|x| -x).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- presets ----

    #[test]
    fn preset_values_match_their_definitions() {
        let c = CartanData::affine_a(2).unwrap();
        let h = GradationSpec::homogeneous(&c);
        assert_eq!(h.s(0), Ratio::from_integer(1));
        assert_eq!(h.s(1), Ratio::from_integer(0));
        assert_eq!(h.s(2), Ratio::from_integer(0));
        let p = GradationSpec::principal(&c);
        assert!(p.exponents().iter().all(|&x| x == Ratio::from_integer(1)));
        // Simply-laced symmetrizers are 1, so spin equals principal here.
        assert_eq!(GradationSpec::spin(&c), p);
    }

    #[test]
    fn preset_lookup_by_name() {
        let c = CartanData::affine_a1();
        assert_eq!(
            GradationSpec::preset("homogeneous", &c).unwrap(),
            GradationSpec::homogeneous(&c)
        );
        assert!(GradationSpec::preset("diagonal", &c).is_err());
    }

    // ---- integrality ----

    #[test]
    fn integrality_detects_fractions() {
        let c = CartanData::affine_a1();
        assert!(GradationSpec::principal(&c).is_integral());
        let frac = GradationSpec::custom(&c, vec![Ratio::new(1, 2), Ratio::from_integer(0)])
            .unwrap();
        assert!(!frac.is_integral());
        assert!(GradationSpec::custom(&c, vec![Ratio::from_integer(1)]).is_err());
    }

    #[test]
    fn negation_inverts_every_exponent() {
        let c = CartanData::affine_a1();
        let g = GradationSpec::homogeneous(&c);
        let n = g.negated();
        assert_eq!(n.s(0), Ratio::from_integer(-1));
        assert_eq!(n.negated(), g);
    }
}
