//! The container for a matrix representation of a deformed affine algebra.
//!
//! Key items:
//! - [`Representation`]: Cartan data plus one matrix per generator label,
//!   with the metadata (name, spin, spectral variable, gradation) that the
//!   constructors and twists maintain.
//!
//! A representation is deliberately open: it stores whatever generator
//! matrices were put into it, and the verifiers in [`crate::qalgebra`]
//! decide whether those matrices actually satisfy the relations. This keeps
//! corrupted or experimental data representable, which the tests rely on.

use crate::error::{Error, Result};
use crate::qalgebra::{CartanData, GeneratorLabel, GradationSpec};
use crate::scalars::{Mat, VarTable};
use num_rational::Ratio;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A finite-dimensional matrix realization of the generators.
#[derive(Debug, Clone)]
pub struct Representation {
    cartan: Arc<CartanData>,
    vars: Arc<VarTable>,
    dim: usize,
    matrices: BTreeMap<GeneratorLabel, Mat>,
    gradation: Option<GradationSpec>,
    spectral_var: Option<String>,
    name: String,
    spin: Option<Ratio<i64>>,
}

impl Representation {
    /// Creates an empty representation shell; generator matrices are added
    /// with [`Representation::with_matrix`].
    pub fn new(
        cartan: Arc<CartanData>,
        vars: &Arc<VarTable>,
        dim: usize,
        name: impl Into<String>,
    ) -> Self {
        Representation {
            cartan,
            vars: Arc::clone(vars),
            dim,
            matrices: BTreeMap::new(),
            gradation: None,
            spectral_var: None,
            name: name.into(),
            spin: None,
        }
    }

    /// Adds or replaces one generator matrix. The matrix must be square of
    /// the representation dimension and share the variable table.
    pub fn with_matrix(mut self, label: GeneratorLabel, m: Mat) -> Result<Self> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::BadArgs(format!(
                "matrix for {label} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                self.dim,
                self.dim
            )));
        }
        if !Arc::ptr_eq(m.vars(), &self.vars) {
            return Err(Error::BadArgs(format!(
                "matrix for {label} uses a different variable table"
            )));
        }
        self.matrices.insert(label, m);
        Ok(self)
    }

    /// Records the spin metadata (used by the weight-module constructor).
    pub fn with_spin(mut self, spin: Ratio<i64>) -> Self {
        self.spin = Some(spin);
        self
    }

    /// Renames the representation.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Records which spectral variable the matrices carry and under which
    /// gradation it was introduced.
    pub fn with_twist_record(
        mut self,
        var_name: impl Into<String>,
        gradation: GradationSpec,
    ) -> Self {
        self.spectral_var = Some(var_name.into());
        self.gradation = Some(gradation);
        self
    }

    /// The matrix of one generator, or "bad-args" if it was never supplied.
    pub fn matrix(&self, label: GeneratorLabel) -> Result<&Mat> {
        self.matrices.get(&label).ok_or_else(|| {
            Error::BadArgs(format!("representation {} has no matrix for {label}", self.name))
        })
    }

    /// True when a matrix for the label is present.
    pub fn has(&self, label: GeneratorLabel) -> bool {
        self.matrices.contains_key(&label)
    }

    /// The generator labels with matrices, in label order.
    pub fn labels(&self) -> impl Iterator<Item = GeneratorLabel> + '_ {
        self.matrices.keys().copied()
    }

    /// The Cartan data the representation was built over.
    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    /// The shared variable table of all generator matrices.
    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// The dimension of the underlying space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The representation name, e.g. `sl2:spin=1/2`.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The spin label when the representation is a weight module.
    pub fn spin(&self) -> Option<Ratio<i64>> {
        self.spin
    }

    /// The spectral variable introduced by the last twist, if any.
    pub fn spectral_var(&self) -> Option<&str> {
        self.spectral_var.as_deref()
    }

    /// The gradation of the last twist, if any.
    pub fn gradation(&self) -> Option<&GradationSpec> {
        self.gradation.as_ref()
    }

    /// The product of all group-like matrices weighted by the marks,
    /// K_0^(n_0) K_1^(n_1) ... ; in a level-zero representation this
    /// central element acts as the identity.
    pub fn central_group_like(&self) -> Result<Mat> {
        let mut acc = Mat::identity(&self.vars, self.dim);
        for i in 0..self.cartan.nodes() {
            let k = self.matrix(GeneratorLabel::K(i))?;
            for _ in 0..self.cartan.kac(i) {
                acc = acc.mul(k);
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    fn shell() -> Representation {
        let cartan = Arc::new(CartanData::affine_a1());
        Representation::new(cartan, &VarTable::standard(), 2, "shell")
    }

    // ---- construction and lookup ----

    #[test]
    fn missing_matrices_are_reported_by_label() {
        let rep = shell();
        let err = rep.matrix(GeneratorLabel::EPlus(0)).unwrap_err();
        let msg = err.to_string();
        assert!(msg.starts_with("bad-args"), "{msg}");
        assert!(msg.contains("E+0"), "{msg}");
    }

    #[test]
    fn dimension_and_table_mismatches_are_rejected() {
        let rep = shell();
        let vars = rep.vars().clone();
        let wrong = Mat::identity(&vars, 3);
        assert!(rep.clone().with_matrix(GeneratorLabel::K(0), wrong).is_err());
        let other_table = VarTable::new(&["x"]).unwrap();
        let foreign = Mat::identity(&other_table, 2);
        assert!(rep.with_matrix(GeneratorLabel::K(0), foreign).is_err());
    }

    #[test]
    fn labels_iterate_in_order_and_replacement_overwrites() {
        let rep = shell();
        let vars = rep.vars().clone();
        let id = Mat::identity(&vars, 2);
        let rep = rep
            .with_matrix(GeneratorLabel::K(0), id.clone())
            .unwrap()
            .with_matrix(GeneratorLabel::EPlus(0), id.clone())
            .unwrap()
            .with_matrix(GeneratorLabel::K(0), id.scalar_mul(&RatFunc::from_int(&vars, 5)))
            .unwrap();
        let labels: Vec<_> = rep.labels().collect();
        assert_eq!(labels, vec![GeneratorLabel::EPlus(0), GeneratorLabel::K(0)]);
        assert_eq!(
            rep.matrix(GeneratorLabel::K(0)).unwrap().get(0, 0),
            &RatFunc::from_int(&vars, 5)
        );
    }
}
