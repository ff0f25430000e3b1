//! Exact constructions and checks for quantum affine algebras, Yangians,
//! and the integrable structures they generate.
//!
//! The crate builds evaluation representations of quantum affine algebras
//! in Chevalley form, solves linear intertwining relations to produce
//! trigonometric and rational R-matrices and boundary K-matrices, and
//! verifies the resulting structural identities (defining relations, Hopf
//! axioms, Yang-Baxter, RTT, commuting transfer matrices, reflection
//! equations) either symbolically or at random modular points with tracked
//! failure bounds.
//!
//! All arithmetic is exact: integer-coefficient Laurent polynomials and
//! canonical rational functions, never floating point.

#![warn(missing_docs)]

mod error;
mod report;

pub mod evalreps;
pub mod intertwine;
pub mod qalgebra;
pub mod scalars;
pub mod spinchain;
pub mod yangian;

pub use error::{Error, Result};
pub use report::{Check, CheckMode, Report};
