//! The solved R-matrix type and its canonical JSON form.
//!
//! Key items:
//! - [`RFlavor`]: trigonometric (multiplicative spectral ratio) versus
//!   rational (additive spectral shift).
//! - [`RMatrix`]: a braided intertwiner `Ř(z): V¹⊗V² → V²⊗V¹` with exact
//!   rational-function entries, its normalization record, and optionally the
//!   source representations it was solved from.
//! - [`RMatrix::to_json`] / [`RMatrix::from_json`]: byte-reproducible
//!   serialization listing the nonzero entries in row-major order.
//!
//! Entries produced by the solver are Laurent polynomials with joint content
//! one: the kernel vector is scaled so a pivot entry equals one, denominators
//! are then cleared, and the overall sign is fixed by the pivot. Rescaling by
//! a nonzero rational function is exposed through [`RMatrix::scaled`] and is
//! recorded in the normalization string.

use crate::error::{Error, Result};
use crate::evalreps::Representation;
use crate::scalars::{parse_poly, Mat, RatFunc, VarTable};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// Spectral-parameter flavor of an R-matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RFlavor {
    /// Multiplicative ratio `z = λ/μ`; composition multiplies arguments.
    Trigonometric,
    /// Additive shift `u = λ − μ`; composition adds arguments.
    Rational,
}

impl fmt::Display for RFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RFlavor::Trigonometric => write!(f, "trigonometric"),
            RFlavor::Rational => write!(f, "rational"),
        }
    }
}

/// A braided R-matrix `Ř(z): V¹⊗V² → V²⊗V¹` with exact entries.
///
/// Rows are indexed by the target basis `V²⊗V¹` and columns by the source
/// basis `V¹⊗V²`, both in row-major tensor order, so the matrix is square of
/// size `dim V¹ · dim V²`.
#[derive(Debug, Clone)]
pub struct RMatrix {
    flavor: RFlavor,
    var: String,
    d1: usize,
    d2: usize,
    mat: Mat,
    normalization: String,
    sources: Option<(Representation, Representation)>,
}

impl RMatrix {
    /// Assembles an R-matrix from explicit parts.
    ///
    /// `sources`, when given, are the representations the matrix intertwines:
    /// the spectral-twisted first factor and its untwisted partner. They are
    /// kept for downstream checks and are not serialized.
    pub fn from_parts(
        flavor: RFlavor,
        var: impl Into<String>,
        dims: (usize, usize),
        mat: Mat,
        normalization: impl Into<String>,
        sources: Option<(Representation, Representation)>,
    ) -> Result<Self> {
        let var = var.into();
        let d = dims.0 * dims.1;
        if mat.rows() != d || mat.cols() != d {
            return Err(Error::BadArgs(format!(
                "R-matrix for dims {}x{} must be {d}x{d}, got {}x{}",
                dims.0,
                dims.1,
                mat.rows(),
                mat.cols()
            )));
        }
        mat.vars().require(&var)?;
        Ok(RMatrix {
            flavor,
            var,
            d1: dims.0,
            d2: dims.1,
            mat,
            normalization: normalization.into(),
            sources,
        })
    }

    /// Spectral flavor.
    pub fn flavor(&self) -> RFlavor {
        self.flavor
    }

    /// Name of the spectral variable (`z` for trigonometric solutions).
    pub fn spectral_var(&self) -> &str {
        &self.var
    }

    /// Dimensions `(dim V¹, dim V²)` of the factors.
    pub fn dims(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    /// The matrix of `Ř` itself.
    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    /// Human-readable record of how the solution was normalized.
    pub fn normalization(&self) -> &str {
        &self.normalization
    }

    /// The (twisted, partner) source representations, when known.
    pub fn sources(&self) -> Option<(&Representation, &Representation)> {
        self.sources.as_ref().map(|(a, b)| (a, b))
    }

    /// The shared variable table.
    pub fn vars(&self) -> &Arc<VarTable> {
        self.mat.vars()
    }

    /// Number of nonzero entries.
    pub fn nonzero_count(&self) -> usize {
        let mut n = 0;
        for r in 0..self.mat.rows() {
            for c in 0..self.mat.cols() {
                if !self.mat.get(r, c).is_zero() {
                    n += 1;
                }
            }
        }
        n
    }

    /// The matrix with the spectral variable replaced by `value`.
    pub fn substituted(&self, value: &RatFunc) -> Result<Mat> {
        let idx = self.mat.vars().require(&self.var)?;
        self.mat.substitute_var(idx, value)
    }

    /// The same intertwiner rescaled by a nonzero rational function.
    ///
    /// Rescaling preserves every intertwining and exchange identity; the
    /// normalization record is extended so the gauge change stays visible.
    pub fn scaled(&self, scale: &RatFunc) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::BadArgs(
                "cannot rescale an R-matrix by zero".into(),
            ));
        }
        Ok(RMatrix {
            flavor: self.flavor,
            var: self.var.clone(),
            d1: self.d1,
            d2: self.d2,
            mat: self.mat.scalar_mul(scale),
            normalization: format!("{}; rescaled", self.normalization),
            sources: self.sources.clone(),
        })
    }

    /// Canonical JSON rendering.
    ///
    /// Fields appear in a fixed order and entries are the nonzero ones in
    /// row-major order with canonical numerator and denominator strings, so
    /// equal matrices serialize to identical bytes. The final element of
    /// `vars` names the spectral variable.
    pub fn to_json(&self) -> String {
        let mut entries = Vec::new();
        for r in 0..self.mat.rows() {
            for c in 0..self.mat.cols() {
                let e = self.mat.get(r, c);
                if e.is_zero() {
                    continue;
                }
                entries.push(EntryJson {
                    row: r,
                    col: c,
                    num: e.numer().to_string(),
                    den: e.denom().to_string(),
                });
            }
        }
        let vars = match self.flavor {
            RFlavor::Trigonometric => vec!["t".to_string(), self.var.clone()],
            RFlavor::Rational => vec![self.var.clone()],
        };
        let doc = RMatrixJson {
            flavor: self.flavor,
            vars,
            dims: [self.d1, self.d2],
            normalization: self.normalization.clone(),
            entries,
        };
        serde_json::to_string_pretty(&doc).expect("R-matrix serialization cannot fail")
    }

    /// Parses the JSON produced by [`RMatrix::to_json`].
    ///
    /// Source representations are not part of the format, so the result
    /// carries none.
    pub fn from_json(vars: &Arc<VarTable>, input: &str) -> Result<Self> {
        let doc: RMatrixJson =
            serde_json::from_str(input).map_err(|e| Error::ParseError(e.to_string()))?;
        let var = doc
            .vars
            .last()
            .ok_or_else(|| Error::ParseError("empty vars list".into()))?
            .clone();
        for name in &doc.vars {
            vars.require(name)?;
        }
        let d = doc.dims[0] * doc.dims[1];
        if d == 0 {
            return Err(Error::ParseError("dims must be positive".into()));
        }
        let mut mat = Mat::zeros(vars, d, d);
        for e in &doc.entries {
            if e.row >= d || e.col >= d {
                return Err(Error::ParseError(format!(
                    "entry ({}, {}) outside a {d}x{d} matrix",
                    e.row, e.col
                )));
            }
            let num = parse_poly(vars, &e.num)?;
            let den = parse_poly(vars, &e.den)?;
            mat.set(e.row, e.col, RatFunc::new(num, den)?);
        }
        RMatrix::from_parts(
            doc.flavor,
            var,
            (doc.dims[0], doc.dims[1]),
            mat,
            doc.normalization,
            None,
        )
    }
}

/// Serialized form: field order is fixed by this struct.
#[derive(Serialize, Deserialize)]
struct RMatrixJson {
    flavor: RFlavor,
    vars: Vec<String>,
    dims: [usize; 2],
    normalization: String,
    entries: Vec<EntryJson>,
}

/// One nonzero entry with canonical numerator and denominator strings.
#[derive(Serialize, Deserialize)]
struct EntryJson {
    row: usize,
    col: usize,
    num: String,
    den: String,
}
