//! Exact scalar arithmetic: Laurent polynomials, canonical rational
//! functions, modular evaluation, probabilistic identity checks, and
//! fraction-free linear algebra.
//!
//! Everything downstream (representations, R-matrices, chains, boundaries)
//! reduces to this layer, and every object here is deterministic: canonical
//! forms are unique, pivoting rules are fixed, and random draws are
//! counter-based functions of an explicit seed.

mod gcd;
mod laurent;
mod matrix;
mod modp;
mod parse;
mod random;
mod ratfunc;
mod sz;
mod vartable;

pub use gcd::{canonical_assoc, div_exact, divides, poly_gcd, poly_lcm};
pub use laurent::{Exponents, LaurentPoly};
pub use matrix::{Mat, ModMat};
pub use modp::{addm, int_mod, invm, mulm, powm, powm_signed, subm, PrimePoint, PRIME};
pub use parse::{parse_poly, parse_ratfunc};
pub use random::{random_laurent, random_laurent_nonzero, random_ratfunc, Rng64};
pub use ratfunc::RatFunc;
pub use sz::{
    identity_check_sz, probe_check, sz_bound_below, sz_failure_bound, SzFailure, SzOutcome,
};
pub use vartable::VarTable;

