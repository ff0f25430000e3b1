//! Inhomogeneous spin chains: monodromy, transfer matrices, and the
//! integrability checks built on them.
//!
//! Key items:
//! - [`TransferObjects`] / [`build_monodromy`]: an n-site chain assembled
//!   from one R-matrix, symbolically when small and as a streaming recipe
//!   otherwise.
//! - [`verify_rtt`]: the exchange relation between the auxiliary R-matrix
//!   and two monodromy copies at independent spectral points.
//! - [`verify_commuting`]: commutativity of transfer matrices, the
//!   generating function of the model's conserved charges.
//! - [`extract_hamiltonian`] / [`hamiltonian_density`]: the local chain
//!   Hamiltonian as the logarithmic derivative of a regular braid-form
//!   exchange matrix.
//! - [`compose_with_swap`]: conversion between braid-form and plain-form
//!   exchange matrices.
//!
//! Two conventions meet here. The intertwiner solvers produce braid-form
//! matrices (regular at argument 1), which is what Hamiltonian extraction
//! consumes; the chain builders and the exchange/commutation checks
//! consume the plain form obtained by composing with the factor swap.
//! Exact checks multiply full symbolic products and are capped in
//! dimension; every checker also offers (or internally uses) mod-p vector
//! streaming, which touches nothing larger than one dense vector.

mod chain;
mod commute;
mod hamiltonian;
mod rtt;
pub(crate) mod stream;

pub use chain::{
    build_monodromy, build_monodromy_capped, compose_with_swap, TransferObjects,
    DEFAULT_MAX_SYMBOLIC_DIM, MAX_STREAMING_DIM,
};
pub use commute::{verify_commuting, MAX_EXACT_COMMUTE_DIM};
pub use hamiltonian::{
    extract_hamiltonian, hamiltonian_density, MAX_HAMILTONIAN_DIM,
};
pub use rtt::{verify_rtt, MAX_EXACT_RTT_DIM};
