//! Structure-constant data for the Lie algebra underlying a Yangian.
//!
//! Key items:
//! - [`YangianData`]: a basis label, dimension, the full table of structure
//!   constants `f_abc` with `[I_a, I_b] = f_abc I_c` (summation over the
//!   repeated index `c`), and an invariant symmetric bilinear form, all
//!   stored as exact rationals.
//! - [`YangianData::sl2`]: the shipped real basis of sl2 with integer
//!   structure constants and the trace form of the defining representation.
//! - [`YangianData::alpha`]: the degree-four contraction
//!   `alpha_{abcdeg} = (1/24) f_adi f_bej f_cgk F_ijk` from the right-hand
//!   side of the Yangian defining relations, where `F_ijk = f_ijl g_lk` is
//!   the fully lowered table.
//! - [`YangianData::verify_structure`]: antisymmetry, Jacobi, and
//!   form-invariance checks.
//!
//! The structure constants carry the third index "up": `f_abc` is the
//! coefficient of `I_c` in `[I_a, I_b]`, antisymmetric in the first pair
//! only. Formulas usually quoted for an orthonormal basis (where the
//! constants are totally antisymmetric and index position is irrelevant)
//! are transcribed throughout this module family with the metric factors
//! explicit, so bases whose invariant form is not the identity, such as the
//! shipped sl2 basis with form diag(2, -2, 2), evaluate correctly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::Report;

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination;
/// `None` when the matrix is singular.
fn invert(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&factor * &inv[col][j]);
                }
            }
        }
    }
    Some(inv)
}

/// Structure constants and invariant form of a finite-dimensional Lie
/// algebra, the seed data for Yangian relation checks.
///
/// The basis is abstract: element `a` ranges over `0..dim()`. Commutators
/// are encoded as `[I_a, I_b] = sum_c f(a,b,c) I_c` with exact rational
/// coefficients, and `metric(a,b)` is the chosen invariant symmetric
/// bilinear form `g_ab` (for the shipped bases, the trace form of the
/// defining representation). The form is what raises and lowers indices in
/// every contraction formula, so it must be nondegenerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YangianData {
    label: String,
    dim: usize,
    /// Dense table, indexed `[a][b][c]`.
    f: Vec<Vec<Vec<BigRational>>>,
    /// Invariant symmetric bilinear form `g_ab`.
    metric: Vec<Vec<BigRational>>,
    /// Inverse form `g^ab`, used to raise indices.
    metric_inv: Vec<Vec<BigRational>>,
    /// Fully lowered table `F_abc = f_abd g_dc`.
    f_low: Vec<Vec<Vec<BigRational>>>,
    note: String,
}

impl YangianData {
    /// Builds structure-constant data from sparse lists of entries.
    ///
    /// Each `(a, b, c, value)` entry sets `f_abc = value`; each
    /// `(a, b, value)` metric entry sets `g_ab = g_ba = value`; unlisted
    /// entries are zero. The `f` table is stored exactly as given, so a
    /// deliberately inconsistent table (for fault-injection tests) is
    /// representable; [`Self::verify_structure`] reports on antisymmetry,
    /// Jacobi, and invariance of the form.
    ///
    /// Errors with `bad-args` when `dim` is zero, an index is out of range,
    /// the same slot is listed twice, or the form is singular.
    pub fn from_entries(
        label: &str,
        dim: usize,
        entries: &[(usize, usize, usize, BigRational)],
        metric: &[(usize, usize, BigRational)],
        note: &str,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadArgs("structure constants need dim >= 1".into()));
        }
        let mut f = vec![vec![vec![BigRational::zero(); dim]; dim]; dim];
        let mut seen = std::collections::BTreeSet::new();
        for (a, b, c, value) in entries {
            if *a >= dim || *b >= dim || *c >= dim {
                return Err(Error::BadArgs(format!(
                    "structure-constant index ({a},{b},{c}) out of range for dim {dim}"
                )));
            }
            if !seen.insert((*a, *b, *c)) {
                return Err(Error::BadArgs(format!(
                    "structure-constant slot ({a},{b},{c}) listed twice"
                )));
            }
            f[*a][*b][*c] = value.clone();
        }
        let mut gmat = vec![vec![BigRational::zero(); dim]; dim];
        let mut seen_pairs = std::collections::BTreeSet::new();
        for (a, b, value) in metric {
            if *a >= dim || *b >= dim {
                return Err(Error::BadArgs(format!(
                    "invariant-form index ({a},{b}) out of range for dim {dim}"
                )));
            }
            let key = (*a.min(b), *a.max(b));
            if !seen_pairs.insert(key) {
                return Err(Error::BadArgs(format!(
                    "invariant-form slot ({a},{b}) listed twice"
                )));
            }
            gmat[*a][*b] = value.clone();
            gmat[*b][*a] = value.clone();
        }
        let metric_inv = invert(&gmat).ok_or_else(|| {
            Error::BadArgs("the invariant form must be nondegenerate".into())
        })?;
        let mut f_low = vec![vec![vec![BigRational::zero(); dim]; dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    let mut total = BigRational::zero();
                    for d in 0..dim {
                        total += &f[a][b][d] * &gmat[d][c];
                    }
                    f_low[a][b][c] = total;
                }
            }
        }
        Ok(Self {
            label: label.to_string(),
            dim,
            f,
            metric: gmat,
            metric_inv,
            f_low,
            note: note.to_string(),
        })
    }

    /// The shipped sl2 basis: `I_1 = e + f`, `I_2 = e - f`, `I_3 = h` in
    /// terms of the standard raising/lowering/Cartan generators.
    ///
    /// The nonzero constants are `f_123 = -2`, `f_231 = -2`, `f_312 = 2`
    /// together with their antisymmetric partners; all are integers. The
    /// invariant form is the trace form of the defining representation,
    /// `diag(2, -2, 2)`, under which the fully lowered table is totally
    /// antisymmetric with `F_123 = -4`.
    pub fn sl2() -> Self {
        let two = BigRational::from(BigInt::from(2));
        let m_two = BigRational::from(BigInt::from(-2));
        let entries = vec![
            (0, 1, 2, m_two.clone()),
            (1, 0, 2, two.clone()),
            (1, 2, 0, m_two.clone()),
            (2, 1, 0, two.clone()),
            (2, 0, 1, two.clone()),
            (0, 2, 1, m_two.clone()),
        ];
        let metric = vec![(0, 0, two.clone()), (1, 1, m_two), (2, 2, two)];
        Self::from_entries(
            "sl2",
            3,
            &entries,
            &metric,
            "real basis e+f, e-f, h; integer structure constants; invariant \
             form is the defining-representation trace form diag(2, -2, 2)",
        )
        .expect("static sl2 table is well-formed")
    }

    /// Basis label, e.g. `"sl2"`.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of basis elements.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Free-text record of the basis and normalization convention.
    pub fn note(&self) -> &str {
        &self.note
    }

    /// The structure constant `f_abc`, the coefficient of `I_c` in
    /// `[I_a, I_b]`. Panics if an index is out of range.
    pub fn f(&self, a: usize, b: usize, c: usize) -> &BigRational {
        &self.f[a][b][c]
    }

    /// The invariant form entry `g_ab`. Panics if an index is out of range.
    pub fn metric(&self, a: usize, b: usize) -> &BigRational {
        &self.metric[a][b]
    }

    /// The inverse form entry `g^ab`, the index-raising coefficients.
    /// Panics if an index is out of range.
    pub fn metric_inv(&self, a: usize, b: usize) -> &BigRational {
        &self.metric_inv[a][b]
    }

    /// The fully lowered structure constant `F_abc = f_abd g_dc`, totally
    /// antisymmetric whenever the form is invariant. Panics if an index is
    /// out of range.
    pub fn f_low(&self, a: usize, b: usize, c: usize) -> &BigRational {
        &self.f_low[a][b][c]
    }

    /// The contraction `alpha_{abcdeg} = (1/24) sum_{i,j,k} f_adi f_bej
    /// f_cgk F_ijk` from the Yangian defining relations, with the trailing
    /// factor fully lowered through the invariant form. All six free
    /// indices are "down"; consumers pair `d`, `e`, `g` against dual-basis
    /// elements.
    pub fn alpha(&self, a: usize, b: usize, c: usize, d: usize, e: usize, g: usize) -> BigRational {
        let mut total = BigRational::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let term = self.f(a, d, i) * self.f(b, e, j) * self.f(c, g, k)
                        * self.f_low(i, j, k);
                    total += term;
                }
            }
        }
        total / BigRational::from(BigInt::from(24))
    }

    /// Checks the structure-constant invariants: antisymmetry
    /// `f_abc = -f_bac` for every slot, the Jacobi identity
    /// `sum_d (f_bcd f_ade + f_cad f_bde + f_abd f_cde) = 0` for every
    /// triple `(a, b, c)` and target index `e`, and invariance of the form,
    /// `g([I_a, I_b], I_c) + g(I_b, [I_a, I_c]) = 0` for every triple.
    pub fn verify_structure(&self) -> Report {
        let mut report = Report::new(format!("structure constants for {}", self.label));
        for a in 0..self.dim {
            for b in 0..self.dim {
                let ok = (0..self.dim).all(|c| self.f(a, b, c) + self.f(b, a, c) == BigRational::zero());
                report.record_detail(
                    format!("antisymmetry[{a},{b}]"),
                    ok,
                    "f_abc + f_bac != 0 for some c",
                );
            }
        }
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let ok = (0..self.dim).all(|e| {
                        let mut total = BigRational::zero();
                        for d in 0..self.dim {
                            total += self.f(b, c, d) * self.f(a, d, e);
                            total += self.f(c, a, d) * self.f(b, d, e);
                            total += self.f(a, b, d) * self.f(c, d, e);
                        }
                        total.is_zero()
                    });
                    report.record_detail(
                        format!("jacobi[{a},{b},{c}]"),
                        ok,
                        "cyclic double-commutator sum does not vanish",
                    );
                }
            }
        }
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let mut total = BigRational::zero();
                    for d in 0..self.dim {
                        total += self.f(a, b, d) * self.metric(d, c);
                        total += self.f(a, c, d) * self.metric(b, d);
                    }
                    report.record_detail(
                        format!("metric-invariance[{a},{b},{c}]"),
                        total.is_zero(),
                        "g([I_a,I_b],I_c) + g(I_b,[I_a,I_c]) != 0",
                    );
                }
            }
        }
        report
    }
}
