//! Exchange-equation checks on solved R-matrices.
//!
//! Key items:
//! - [`verify_ybe`]: the braid form of the Yang-Baxter equation on three
//!   factors, exactly or by seeded modular probing.
//! - [`verify_unitarity`]: the inversion identity
//!   `Ř(z⁻¹)·Ř(z) = φ(z)·Id`, returning the scalar when it holds.
//! - [`fusion_points`]: scan of `z = ±t^k` for spectral points where the
//!   intertwiner loses rank.
//!
//! The braid convention composes `Ř` maps between swapped tensor factors:
//! with arguments `z₁` (first/second), `z₂` (second/third) and the middle
//! argument their product (trigonometric) or sum (rational), the two ways of
//! reversing `V¹⊗V²⊗V³` must agree:
//!
//! ```text
//! (1⊗Ř¹²(z₁)) (Ř¹³(z₁∘z₂)⊗1) (1⊗Ř²³(z₂))
//!   = (Ř²³(z₂)⊗1) (1⊗Ř¹³(z₁∘z₂)) (Ř¹²(z₁)⊗1)
//! ```
//!
//! Modular probing is one-sided: failures are definitive, passes carry an
//! explicit Schwartz-Zippel bound in the report detail.

use crate::error::{Error, Result};
use crate::intertwine::rmatrix::{RFlavor, RMatrix};
use crate::report::{CheckMode, Report};
use crate::scalars::{probe_check, Mat, ModMat, RatFunc};

/// Base variable of the trigonometric deformation, scanned by
/// [`fusion_points`].
const BASE_VAR: &str = "t";

/// Verifies the braid-form Yang-Baxter equation for three R-matrices.
///
/// The factors must share one flavor and spectral variable and compose along
/// dimensions `(d₁,d₂)`, `(d₁,d₃)`, `(d₂,d₃)`; otherwise `bad-composition`
/// is returned. The spectral arguments are realized in the variables `z1`
/// and `z2`, so the R-matrices themselves must not use those names.
pub fn verify_ybe(
    r12: &RMatrix,
    r13: &RMatrix,
    r23: &RMatrix,
    mode: CheckMode,
) -> Result<Report> {
    let flavor = r12.flavor();
    if r13.flavor() != flavor || r23.flavor() != flavor {
        return Err(Error::BadComposition(format!(
            "mixed flavors: {}, {}, {}",
            r12.flavor(),
            r13.flavor(),
            r23.flavor()
        )));
    }
    let var = r12.spectral_var();
    if r13.spectral_var() != var || r23.spectral_var() != var {
        return Err(Error::BadComposition(
            "spectral variables differ between factors".into(),
        ));
    }
    if var == "z1" || var == "z2" {
        return Err(Error::BadArgs(
            "spectral variable collides with the composition variables z1, z2".into(),
        ));
    }
    let (d1, d2) = r12.dims();
    let (e1, d3) = r13.dims();
    let (e2, e3) = r23.dims();
    if e1 != d1 || e2 != d2 || e3 != d3 {
        return Err(Error::BadComposition(format!(
            "dims do not chain: R12 {:?}, R13 {:?}, R23 {:?}",
            r12.dims(),
            r13.dims(),
            r23.dims()
        )));
    }

    let vars = r12.vars().clone();
    let z1 = RatFunc::var(&vars, "z1")?;
    let z2 = RatFunc::var(&vars, "z2")?;
    let middle = match flavor {
        RFlavor::Trigonometric => z1.mul(&z2),
        RFlavor::Rational => z1.add(&z2),
    };
    let m12 = r12.substituted(&z1)?;
    let m13 = r13.substituted(&middle)?;
    let m23 = r23.substituted(&z2)?;

    let mut report = Report::new(format!(
        "yang-baxter braid form, dims ({d1}, {d2}, {d3}), {flavor}"
    ));
    match mode {
        CheckMode::Exact => {
            let id1 = Mat::identity(&vars, d1);
            let id2 = Mat::identity(&vars, d2);
            let id3 = Mat::identity(&vars, d3);
            let lhs = id3
                .kron(&m12)
                .mul(&m13.kron(&id2))
                .mul(&id1.kron(&m23));
            let rhs = m23
                .kron(&id1)
                .mul(&id2.kron(&m13))
                .mul(&m12.kron(&id3));
            let diff = lhs.sub(&rhs);
            match diff.first_nonzero() {
                None => report.record("ybe-exact", true),
                Some((r, c, v)) => report.record_detail(
                    "ybe-exact",
                    false,
                    format!("entry ({r}, {c}) differs by {v}"),
                ),
            }
        }
        CheckMode::ModP { trials, seed } => {
            if trials == 0 {
                return Err(Error::BadArgs("modp mode needs at least one trial".into()));
            }
            let bound = 2 * (m12.max_degree_bound()
                + m13.max_degree_bound()
                + m23.max_degree_bound());
            let outcome = probe_check(&vars, trials, seed, bound, |pt| {
                let p12 = m12.eval_mod(pt)?;
                let p13 = m13.eval_mod(pt)?;
                let p23 = m23.eval_mod(pt)?;
                let i1 = ModMat::identity(d1);
                let i2 = ModMat::identity(d2);
                let i3 = ModMat::identity(d3);
                let lhs = i3
                    .kron(&p12)
                    .mul(&p13.kron(&i2))
                    .mul(&i1.kron(&p23));
                let rhs = p23
                    .kron(&i1)
                    .mul(&i2.kron(&p13))
                    .mul(&p12.kron(&i3));
                Ok(lhs.sub(&rhs).first_nonzero())
            })?;
            let detail = match &outcome.failure {
                Some(f) => format!(
                    "entry ({}, {}) differs at point {}",
                    f.row, f.col, f.point_index
                ),
                None => format!(
                    "{} agreeing points; failure bound {}",
                    outcome.trials_run,
                    outcome.failure_bound_string()
                ),
            };
            report.record_detail("ybe-modp", outcome.passed, detail);
        }
    }
    Ok(report)
}

/// Verifies the inversion identity `Ř(z̄)·Ř(z) = φ(z)·Id`, where `z̄` is the
/// reciprocal ratio for trigonometric matrices and the negated shift for
/// rational ones.
///
/// Requires a self-pair: equal factor dimensions and, when sources are
/// recorded, equal source representations. Returns the report and the scalar
/// `φ` when the identity holds.
pub fn verify_unitarity(r: &RMatrix) -> Result<(Report, Option<RatFunc>)> {
    require_self_pair(r, "unitarity")?;
    let vars = r.vars().clone();
    let inverse_arg = match r.flavor() {
        RFlavor::Trigonometric => RatFunc::var_pow(&vars, r.spectral_var(), -1)?,
        RFlavor::Rational => RatFunc::var(&vars, r.spectral_var())?.neg(),
    };
    let reversed = r.substituted(&inverse_arg)?;
    let product = reversed.mul(r.matrix());
    let phi = product.get(0, 0).clone();

    let mut report = Report::new(format!("unitarity of {}x{} {}", r.dims().0, r.dims().1, r.flavor()));
    let n = product.rows();
    let mut diag_ok = true;
    let mut off_ok = true;
    for i in 0..n {
        for j in 0..n {
            let e = product.get(i, j);
            if i == j && diag_ok && !e.sub(&phi).is_zero() {
                diag_ok = false;
                report.record_detail(
                    "unitarity-diagonal",
                    false,
                    format!("entry ({i}, {i}) differs from the (0, 0) scalar"),
                );
            }
            if i != j && off_ok && !e.is_zero() {
                off_ok = false;
                report.record_detail(
                    "unitarity-off-diagonal",
                    false,
                    format!("entry ({i}, {j}) is nonzero"),
                );
            }
        }
    }
    if diag_ok {
        report.record("unitarity-diagonal", true);
    }
    if off_ok {
        report.record("unitarity-off-diagonal", true);
    }
    let scalar_ok = !phi.is_zero();
    report.record_detail(
        "unitarity-scalar-nonzero",
        scalar_ok,
        if scalar_ok {
            String::new()
        } else {
            "the product vanishes identically".to_string()
        },
    );
    let phi = (report.all_passed()).then_some(phi);
    Ok((report, phi))
}

/// One spectral point where the intertwiner drops rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FusionPoint {
    /// Sign of the substituted point, `+1` or `-1`.
    pub sign: i64,
    /// Exponent `k` of the substituted point `±t^k`.
    pub power: i32,
    /// Exact rank of the R-matrix there (below full).
    pub rank: usize,
}

impl FusionPoint {
    /// The substituted spectral value `sign · t^power`.
    pub fn value(&self, vars: &std::sync::Arc<crate::scalars::VarTable>) -> Result<RatFunc> {
        let base = RatFunc::var_pow(vars, BASE_VAR, self.power)?;
        Ok(base.mul(&RatFunc::from_int(vars, self.sign)))
    }
}

impl std::fmt::Display for FusionPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        match self.power {
            0 => write!(f, "{sign}1"),
            1 => write!(f, "{sign}t"),
            k => write!(f, "{sign}t^{k}"),
        }
    }
}

/// Scans `z = ±t^k` for `|k| ≤ max_power` and returns the points where the
/// exact rank of `Ř(z)` falls below full, in scan order (`+` before `-`,
/// ascending `k`).
///
/// Requires a trigonometric self-pair. Every degeneration of an invertible
/// intertwiner comes with the reciprocal point, so hits appear in `±k`
/// pairs; the scan itself makes no completeness claim beyond the bound.
pub fn fusion_points(r: &RMatrix, max_power: u32) -> Result<Vec<FusionPoint>> {
    if r.flavor() != RFlavor::Trigonometric {
        return Err(Error::BadArgs(
            "fusion scan applies to trigonometric R-matrices".into(),
        ));
    }
    require_self_pair(r, "fusion scan")?;
    let vars = r.vars().clone();
    let full = r.matrix().rows();
    let k = max_power as i32;
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        for power in -k..=k {
            let point = FusionPoint {
                sign,
                power,
                rank: 0,
            };
            let value = point.value(&vars)?;
            let rank = r.substituted(&value)?.rank();
            if rank < full {
                out.push(FusionPoint { rank, ..point });
            }
        }
    }
    Ok(out)
}

/// Shared precondition: the two factors must be the same representation.
fn require_self_pair(r: &RMatrix, what: &str) -> Result<()> {
    let (d1, d2) = r.dims();
    if d1 != d2 {
        return Err(Error::BadArgs(format!(
            "{what} requires equal factors, got dims ({d1}, {d2})"
        )));
    }
    if let Some((a, b)) = r.sources() {
        if a.name() != b.name() {
            return Err(Error::BadArgs(format!(
                "{what} requires equal factors, got {} and {}",
                a.name(),
                b.name()
            )));
        }
    }
    Ok(())
}
