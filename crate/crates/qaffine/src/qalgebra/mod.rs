//! Presentation data and structure maps of the deformed affine algebras.
//!
//! Key items:
//! - [`CartanData`]: validated extended Cartan matrices with symmetrizers
//!   and marks, including the shipped affine A-series.
//! - [`GeneratorLabel`]: the Chevalley-style generator names.
//! - [`GradationSpec`]: spectral twist exponents with the named presets.
//! - [`q_int`], [`q_factorial`], [`q_binomial`]: deformed combinatorics.
//! - [`coproduct_pairs`], [`tensor_coproduct_matrix`], [`counit`],
//!   [`antipode_matrix`]: the Hopf structure maps.
//! - [`verify_defining_relations`], [`verify_hopf_axioms`]: per-identity
//!   checkers producing [`crate::Report`] values.
//!
//! This module owns the abstract algebra side: what the generators are,
//! which relations they satisfy, and how the Hopf structure acts. Concrete
//! matrix realizations live in [`crate::evalreps`], and the two cooperate
//! through the [`crate::evalreps::Representation`] type.

mod cartan;
mod coproduct;
mod gradation;
mod labels;
mod qcomb;
mod verify;

pub use cartan::{CartanData, MAX_RANK};
pub use coproduct::{
    antipode_matrix, coproduct_pairs, coproduct_triples, counit, tensor_coproduct_matrix,
    CoproductFactor,
};
pub use gradation::GradationSpec;
pub use labels::GeneratorLabel;
pub use qcomb::{q_binomial, q_factorial, q_int};
pub use verify::{verify_defining_relations, verify_hopf_axioms};
