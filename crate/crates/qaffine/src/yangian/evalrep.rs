//! Evaluation representations of a Yangian.
//!
//! Key items:
//! - [`YangianEvalRep`]: base matrices for the level-zero generators `I_a`
//!   together with a spectral variable; the level-one generators act as
//!   `J_a = (u + shift) * rho(I_a)` with an optional constant shift.
//! - [`YangianEvalRep::fundamental_sl2`]: the two-dimensional representation
//!   in the shipped sl2 basis.
//!
//! The spectral variable is carried by name so two representations of the
//! same underlying matrices can be placed at independent points (say `z1`
//! and `z2`) before being tensored.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::{Mat, RatFunc, VarTable};
use crate::yangian::data::YangianData;

/// An evaluation representation: matrices for the `I_a` basis and a rule
/// `J_a = (u + shift) * rho(I_a)` for the level-one generators.
#[derive(Debug, Clone)]
pub struct YangianEvalRep {
    data: YangianData,
    rho: Vec<Mat>,
    var: String,
    shift: Option<RatFunc>,
}

impl YangianEvalRep {
    /// Wraps explicit base matrices as an evaluation representation.
    ///
    /// Requirements: one square matrix per basis element of `data`, all of
    /// the same size over the same variable table; `var` must name a table
    /// variable; a shift, when given, must not involve the spectral
    /// variable. Whether the matrices actually satisfy the f-commutation is
    /// not decided here; `verify_yangian_relations` reports on it.
    pub fn new(
        data: YangianData,
        rho: Vec<Mat>,
        var: &str,
        shift: Option<RatFunc>,
    ) -> Result<Self> {
        if rho.len() != data.dim() {
            return Err(Error::BadArgs(format!(
                "expected {} base matrices, got {}",
                data.dim(),
                rho.len()
            )));
        }
        let first = rho
            .first()
            .ok_or_else(|| Error::BadArgs("at least one base matrix is required".into()))?;
        let n = first.rows();
        let vars = first.vars().clone();
        let var_idx = vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVar(var.to_string()))?;
        for m in &rho {
            if m.rows() != n || m.cols() != n {
                return Err(Error::BadArgs(
                    "base matrices must be square and equally sized".into(),
                ));
            }
            if !Arc::ptr_eq(m.vars(), &vars) {
                return Err(Error::AlgebraMismatch(
                    "base matrices use different variable tables".into(),
                ));
            }
        }
        if let Some(s) = &shift {
            if s.numer().depends_on(var_idx) || s.denom().depends_on(var_idx) {
                return Err(Error::BadArgs(format!(
                    "shift must not involve the spectral variable {var}"
                )));
            }
        }
        Ok(Self {
            data,
            rho,
            var: var.to_string(),
            shift,
        })
    }

    /// The two-dimensional sl2 representation in the shipped basis:
    /// `rho(I_1) = [[0,1],[1,0]]`, `rho(I_2) = [[0,1],[-1,0]]`,
    /// `rho(I_3) = diag(1,-1)`.
    pub fn fundamental_sl2(
        vars: &Arc<VarTable>,
        var: &str,
        shift: Option<RatFunc>,
    ) -> Result<Self> {
        let entry = |v: i64| RatFunc::from_int(vars, v);
        let mut i1 = Mat::zeros(vars, 2, 2);
        i1.set(0, 1, entry(1));
        i1.set(1, 0, entry(1));
        let mut i2 = Mat::zeros(vars, 2, 2);
        i2.set(0, 1, entry(1));
        i2.set(1, 0, entry(-1));
        let mut i3 = Mat::zeros(vars, 2, 2);
        i3.set(0, 0, entry(1));
        i3.set(1, 1, entry(-1));
        Self::new(YangianData::sl2(), vec![i1, i2, i3], var, shift)
    }

    /// The structure-constant data this representation realizes.
    pub fn data(&self) -> &YangianData {
        &self.data
    }

    /// Size of the representation space.
    pub fn rep_dim(&self) -> usize {
        self.rho[0].rows()
    }

    /// The spectral variable name.
    pub fn var(&self) -> &str {
        &self.var
    }

    /// The optional constant shift added to the spectral variable.
    pub fn shift(&self) -> Option<&RatFunc> {
        self.shift.as_ref()
    }

    /// Shared variable table.
    pub fn vars(&self) -> &Arc<VarTable> {
        self.rho[0].vars()
    }

    /// The matrix of the level-zero generator `I_a`.
    pub fn i_mat(&self, a: usize) -> &Mat {
        &self.rho[a]
    }

    /// The evaluation parameter `u + shift` as a scalar.
    pub fn parameter(&self) -> RatFunc {
        let u = RatFunc::var(self.vars(), &self.var).expect("validated at construction");
        match &self.shift {
            Some(s) => u.add(s),
            None => u,
        }
    }

    /// The matrix of the level-one generator `J_a = (u + shift) * rho(I_a)`.
    pub fn j_mat(&self, a: usize) -> Mat {
        self.rho[a].scalar_mul(&self.parameter())
    }
}
