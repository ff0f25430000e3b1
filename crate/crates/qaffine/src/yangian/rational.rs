//! The rational R-matrix attached to the n-dimensional representation.
//!
//! Key items:
//! - [`rational_R`]: builds `R(u) = 1 - P/u` on the tensor square of an
//!   n-dimensional space, with `P = sum e_ij (x) e_ji` the transposition
//!   operator and `u` an additive spectral variable.
//!
//! The additive exchange relation
//! `R_12(u) R_13(u+v) R_23(v) = R_23(v) R_13(u+v) R_12(u)` holds exactly;
//! the tests below expand it symbolically for n = 2 and 3.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::intertwine::{RFlavor, RMatrix};
use crate::scalars::{Mat, RatFunc, VarTable};

/// Builds the rational R-matrix `1 - P/u` for the n-dimensional space.
///
/// The result has rational flavor, dimensions `(n, n)`, and additive
/// spectral variable `var`. Errors with `bad-rank` when `n < 2` (a
/// one-dimensional space has a scalar, not a matrix, exchange structure)
/// and `unknown-var` when `var` is not in the table.
#[allow(non_snake_case)]
pub fn rational_R(vars: &Arc<VarTable>, n: usize, var: &str) -> Result<RMatrix> {
    if n < 2 {
        return Err(Error::BadRank(format!(
            "rational R-matrix needs n >= 2, got {n}"
        )));
    }
    let u = RatFunc::var(vars, var)?;
    let p = Mat::swap_factors(vars, n, n);
    let id = Mat::identity(vars, n * n);
    let mat = id.sub(&p.scalar_mul(&u.inv()?));
    RMatrix::from_parts(
        RFlavor::Rational,
        var,
        (n, n),
        mat,
        "identity minus transposition over the spectral variable",
        None,
    )
}
