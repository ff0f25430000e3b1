//! Tensor products of evaluation representations.
//!
//! Key items:
//! - [`TensorRep`]: an ordered list of factors acting on the Kronecker
//!   product space, with lazily built generator matrices.
//! - [`tensor_rep`]: the validated constructor.
//!
//! The generator action follows the iterated coproduct. Group-like
//! elements act factorwise. A raising or lowering operator acts as a sum
//! over slots: the chosen slot carries the operator, every slot to its
//! left carries K, and every slot to its right carries Kinv. Cartan
//! elements act as the usual sum of one-slot insertions. Because the
//! coproduct is coassociative, this flat formula agrees with every way of
//! parenthesizing pairwise products.

use super::rep::Representation;
use crate::error::{Error, Result};
use crate::qalgebra::GeneratorLabel;
use crate::scalars::{Mat, VarTable};
use std::sync::Arc;

/// An ordered tensor product of representations of one algebra.
#[derive(Debug, Clone)]
pub struct TensorRep {
    factors: Vec<Representation>,
}

/// Builds a tensor product after checking that all factors share the same
/// Cartan data ("algebra-mismatch") and that the list is nonempty
/// ("bad-args").
pub fn tensor_rep(factors: Vec<Representation>) -> Result<TensorRep> {
    let Some(first) = factors.first() else {
        return Err(Error::BadArgs("tensor product needs at least one factor".into()));
    };
    for f in &factors[1..] {
        if f.cartan() != first.cartan() {
            return Err(Error::AlgebraMismatch(format!(
                "cannot tensor a representation of {} with one of {}",
                first.cartan().name(),
                f.cartan().name()
            )));
        }
        if !Arc::ptr_eq(f.vars(), first.vars()) {
            return Err(Error::BadArgs(
                "tensor factors use different variable tables".into(),
            ));
        }
    }
    Ok(TensorRep { factors })
}

impl TensorRep {
    /// The factors in order.
    pub fn factors(&self) -> &[Representation] {
        &self.factors
    }

    /// The product of the factor dimensions.
    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }

    /// The shared variable table.
    pub fn vars(&self) -> &Arc<VarTable> {
        self.factors[0].vars()
    }

    /// Kronecker product of one chosen matrix per slot.
    fn kron_chain(&self, pick: impl Fn(usize, &Representation) -> Result<Mat>) -> Result<Mat> {
        let mut acc: Option<Mat> = None;
        for (slot, f) in self.factors.iter().enumerate() {
            let m = pick(slot, f)?;
            acc = Some(match acc {
                None => m,
                Some(prev) => prev.kron(&m),
            });
        }
        Ok(acc.expect("tensor products are nonempty by construction"))
    }

    /// The action of one generator on the product space, following the
    /// iterated coproduct.
    pub fn matrix(&self, label: GeneratorLabel) -> Result<Mat> {
        use GeneratorLabel as L;
        match label {
            L::K(_) | L::KInv(_) => self.kron_chain(|_, f| f.matrix(label).cloned()),
            L::EPlus(i) | L::EMinus(i) => {
                let mut acc = Mat::zeros(self.vars(), self.dim(), self.dim());
                for active in 0..self.factors.len() {
                    let term = self.kron_chain(|slot, f| {
                        if slot < active {
                            f.matrix(L::K(i)).cloned()
                        } else if slot == active {
                            f.matrix(label).cloned()
                        } else {
                            f.matrix(L::KInv(i)).cloned()
                        }
                    })?;
                    acc = acc.add(&term);
                }
                Ok(acc)
            }
            L::H(i) => {
                let mut acc = Mat::zeros(self.vars(), self.dim(), self.dim());
                for active in 0..self.factors.len() {
                    let term = self.kron_chain(|slot, f| {
                        if slot == active {
                            f.matrix(L::H(i)).cloned()
                        } else {
                            Ok(Mat::identity(f.vars(), f.dim()))
                        }
                    })?;
                    acc = acc.add(&term);
                }
                Ok(acc)
            }
            L::D => Err(Error::BadArgs(
                "the scaling element has no tensor realization here".into(),
            )),
        }
    }

    /// Materializes the product as a plain representation, building every
    /// generator matrix the first factor carries (the scaling element is
    /// skipped).
    pub fn to_representation(&self) -> Result<Representation> {
        let name = self
            .factors
            .iter()
            .map(|f| f.name().to_string())
            .collect::<Vec<_>>()
            .join(" * ");
        let mut rep = Representation::new(
            Arc::clone(self.factors[0].cartan()),
            self.vars(),
            self.dim(),
            name,
        );
        for label in self.factors[0].labels() {
            if matches!(label, GeneratorLabel::D) {
                continue;
            }
            rep = rep.with_matrix(label, self.matrix(label)?)?;
        }
        Ok(rep)
    }
}
