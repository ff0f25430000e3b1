//! Evaluation representations: concrete matrices for the abstract algebra.
//!
//! Key items:
//! - [`Representation`]: the generator-matrix container with metadata.
//! - [`make_uq_sl2_spin`], [`make_uq_sln_defining`]: shipped constructors.
//! - [`apply_gradation_twist`]: weaves in a spectral variable.
//! - [`TensorRep`] and [`tensor_rep`]: coproduct-driven tensor products.
//!
//! The flow is: construct a representation (matrices in the deformation
//! variable t only), optionally twist it to introduce a spectral variable,
//! then tensor twisted copies to set up intertwining problems. The
//! verifiers in [`crate::qalgebra`] accept anything built here.

mod construct;
mod rep;
mod tensor;
mod twist;

pub use construct::{make_uq_sl2_spin, make_uq_sln_defining};
pub use rep::Representation;
pub use tensor::{tensor_rep, TensorRep};
pub use twist::apply_gradation_twist;
