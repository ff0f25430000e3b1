//! Crate-wide error type.
//!
//! Every fallible public operation returns [`Error`]. Display strings start
//! with a stable kebab-case tag (`zero-divisor`, `no-intertwiner`, ...) so
//! that callers and the command-line layer can match on failures without
//! depending on the full message text.

use crate::scalars::RatFunc;
use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Division by a zero polynomial or rational function.
    #[error("zero-divisor: division by zero")]
    ZeroDivisor,

    /// A variable name is absent from the active variable table.
    #[error("unknown-var: {0}")]
    UnknownVar(String),

    /// A sampled modular point annihilated a denominator.
    #[error("bad-point: denominator vanished at the sampled point")]
    BadPoint,

    /// Resampling could not find enough usable points.
    #[error("point-exhaustion: only {found} of {needed} sample points usable after {attempts} draws")]
    PointExhaustion {
        /// Number of usable points found before giving up.
        found: usize,
        /// Number of points that were requested.
        needed: usize,
        /// Total draws spent.
        attempts: usize,
    },

    /// Arguments violate a documented precondition.
    #[error("bad-args: {0}")]
    BadArgs(String),

    /// Two objects were built over incompatible Cartan data or variable tables.
    #[error("algebra-mismatch: {0}")]
    AlgebraMismatch(String),

    /// Spin label is not a positive half-integer.
    #[error("bad-spin: {0}")]
    BadSpin(String),

    /// Cartan rank outside the supported range.
    #[error("bad-rank: {0}")]
    BadRank(String),

    /// A gradation twist would need fractional powers of the spectral variable.
    #[error("fractional-grading: {0}")]
    FractionalGrading(String),

    /// The intertwining system has only the zero solution.
    #[error("no-intertwiner: the intertwining system has no nonzero solution")]
    NoIntertwiner,

    /// The intertwining system has more than one solution; the tensor pair is
    /// reducible. Carries the full solution basis for inspection.
    #[error("reducible-pair: intertwiner space has dimension {}", basis.len())]
    ReduciblePair {
        /// Basis of the solution space, each vector in row-major matrix order.
        basis: Vec<Vec<RatFunc>>,
    },

    /// Matrix dimensions do not admit the requested composition.
    #[error("bad-composition: {0}")]
    BadComposition(String),

    /// The R-matrix is not proportional to the identity at the regular point.
    #[error("non-regular-R: {0}")]
    NonRegularR(String),

    /// A requested object exceeds the configured size cap.
    #[error("too-large: {0}")]
    TooLarge(String),

    /// A requested series order exceeds the supported range.
    #[error("order-too-high: {0}")]
    OrderTooHigh(String),

    /// The boundary solution space has dimension greater than one.
    #[error("reducible-boundary: boundary solution space has dimension {}", basis.len())]
    ReducibleBoundary {
        /// Basis of the solution space, each vector in row-major matrix order.
        basis: Vec<Vec<RatFunc>>,
    },

    /// The requested involutive split is not a symmetric pair.
    #[error("bad-split: {0}")]
    BadSplit(String),

    /// A string or artifact failed to parse.
    #[error("parse-error: {0}")]
    ParseError(String),
}

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
