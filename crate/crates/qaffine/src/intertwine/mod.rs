//! Solving and checking evaluation intertwiners (R-matrices).
//!
//! Key items:
//! - [`build_intertwiner_system`] / [`IntertwinerSystem`]: linearize the
//!   exchange equations `Ř·Δ(x) = Δ'(x)·Ř` for a spectral-twisted tensor
//!   pair, with Cartan weight preselection.
//! - [`solve_r`]: exact elimination, classification of the solution space,
//!   and canonical normalization of the unique intertwiner.
//! - [`RMatrix`] / [`RFlavor`]: the solved matrix with its normalization
//!   record and byte-stable JSON form.
//! - [`verify_ybe`], [`verify_unitarity`], [`fusion_points`]: the braid-form
//!   Yang-Baxter equation, the inversion identity, and the scan for spectral
//!   points where the intertwiner degenerates.
//!
//! The pipeline is: construct two evaluation representations, build the
//! system under a chosen gradation, solve, then feed the result to the
//! checks or to transfer-matrix construction. All arithmetic is exact;
//! randomized modes carry explicit failure bounds.

mod checks;
mod rmatrix;
mod solve;
mod system;

pub use checks::{fusion_points, verify_unitarity, verify_ybe, FusionPoint};
pub use rmatrix::{RFlavor, RMatrix};
pub use solve::solve_r;
pub use system::{build_intertwiner_system, IntertwinerSystem};
