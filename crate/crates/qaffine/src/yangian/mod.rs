//! Yangian structure constants, evaluation representations, rational
//! R-matrices, defining-relation and Hopf checks, and RTT/coproduct
//! expansion of monodromy matrices.
//!
//! Key items:
//! - [`YangianData`]: structure constants `f_abc` with the `alpha`
//!   contraction and symmetrizer used by the defining relations.
//! - [`YangianEvalRep`]: evaluation representations `J_a = (u + shift) rho(I_a)`.
//! - [`rational_R`]: the additive R-matrix `1 - P/u`.
//! - [`verify_yangian_relations`] / [`verify_yangian_hopf`]: exact
//!   polynomial-identity checks of the defining relations and the Hopf
//!   structure (antipode axiom, coproduct intertwining).
//! - [`SeriesMatrix`] and [`monodromy_expansion`]: truncated expansion of
//!   monodromy matrices in inverse powers of the spectral variable, with
//!   coproduct and exchange-relation checks on the truncated series.

mod data;
mod evalrep;
mod hopf;
mod rational;
mod relations;
mod series;

pub use data::YangianData;
pub use evalrep::YangianEvalRep;
pub use hopf::verify_yangian_hopf;
pub use rational::rational_R;
pub use relations::verify_yangian_relations;
pub use series::{monodromy_expansion, SeriesMatrix};

use std::sync::Arc;

use num_rational::BigRational;

use crate::scalars::{RatFunc, VarTable};

/// Lifts an exact rational number into the scalar field.
pub(crate) fn ratfunc_from_rational(vars: &Arc<VarTable>, q: &BigRational) -> RatFunc {
    RatFunc::rational(vars, q.numer().clone(), q.denom().clone())
        .expect("rational number denominators are nonzero")
}
