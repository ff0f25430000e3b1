//! Hopf-structure checks for the Yangian: antipode axiom and coproduct
//! intertwining.
//!
//! Key items:
//! - [`verify_yangian_hopf`]: checks the antipode axiom
//!   `m(s (x) id) Delta(x) = 0` for `x` among the `I_a` and `J_a` (the
//!   counit vanishes on both), and the exchange intertwining
//!   `Rc(u-v) (rho1_u (x) rho2_v) Delta(x) = (rho2_v (x) rho1_u) Delta(x) Rc(u-v)`
//!   with `Rc = P R` built from the rational R-matrix.
//!
//! The coproduct is `Delta(I_a) = I_a (x) 1 + 1 (x) I_a` and
//! `Delta(J_a) = J_a (x) 1 + 1 (x) J_a + (1/2) f_abc I_c (x) I_b`; the
//! antipode is `s(I_a) = -I_a`, `s(J_a) = -J_a + (1/2) f_abc I_c I_b`.
//! All checks are exact identities in the two spectral variables.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::intertwine::{RFlavor, RMatrix};
use crate::report::Report;
use crate::scalars::Mat;
use crate::yangian::data::YangianData;
use crate::yangian::evalrep::YangianEvalRep;
use crate::yangian::ratfunc_from_rational;

/// The level-one antipode image `s(J_a) = -J_a + (1/2) f_abc I_c I_b`
/// realized in one representation.
fn antipode_level1(rep: &YangianEvalRep, a: usize) -> Mat {
    let y = rep.data();
    let vars = rep.vars();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut out = rep.j_mat(a).neg();
    for b in 0..y.dim() {
        for c in 0..y.dim() {
            let w = y.f(a, b, c) * &half;
            if !num_traits::Zero::is_zero(&w) {
                let tail = rep.i_mat(c).mul(rep.i_mat(b));
                out = out.add(&tail.scalar_mul(&ratfunc_from_rational(vars, &w)));
            }
        }
    }
    out
}

/// Verifies the Hopf-structure axioms on a pair of evaluation
/// representations against an additive R-matrix.
///
/// Report sections:
/// - `antipode-level0[a]` / `antipode-level1[a]`: the composition
///   `m(s (x) id) Delta(x)`, assembled term by term from the coproduct and
///   antipode formulas in the first representation, vanishes.
/// - `intertwine-level0[a]` / `intertwine-level1[a]`: the braided matrix
///   `P R(u_1 - u_2)` exchanges the two coproduct realizations, where
///   `u_i` are the representations' evaluation parameters (spectral
///   variable plus shift).
///
/// Errors: `algebra-mismatch` when either representation was built over
/// different structure constants; `bad-composition` when the R-matrix is
/// not of rational flavor or its dimensions do not match the two
/// representation spaces; `bad-args` when the representations share a
/// spectral variable.
pub fn verify_yangian_hopf(
    y: &YangianData,
    rep1: &YangianEvalRep,
    rep2: &YangianEvalRep,
    r: &RMatrix,
) -> Result<Report> {
    if rep1.data() != y || rep2.data() != y {
        return Err(Error::AlgebraMismatch(
            "representations were built over different structure constants".into(),
        ));
    }
    if r.flavor() != RFlavor::Rational {
        return Err(Error::BadComposition(
            "Hopf intertwining needs an additive (rational-flavor) R-matrix".into(),
        ));
    }
    let (d1, d2) = (rep1.rep_dim(), rep2.rep_dim());
    if r.dims() != (d1, d2) {
        return Err(Error::BadComposition(format!(
            "R-matrix is for dims {:?}, representations have ({d1}, {d2})",
            r.dims()
        )));
    }
    if rep1.var() == rep2.var() {
        return Err(Error::BadArgs(
            "the two representations must carry independent spectral variables".into(),
        ));
    }
    let vars = rep1.vars();
    let dim = y.dim();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut report = Report::new(format!(
        "yangian Hopf checks: {} pair of dims ({d1}, {d2})",
        y.label()
    ));

    // Antipode axiom, realized in the first representation. Each line is
    // the literal term-by-term image of m(s (x) id) applied to the
    // coproduct; the counit on both generator levels is zero, so the
    // target is the zero matrix.
    for a in 0..dim {
        let value = rep1.i_mat(a).neg().add(rep1.i_mat(a));
        report.record_detail(
            format!("antipode-level0[{a}]"),
            value.is_zero(),
            "s(I_a) + I_a != 0",
        );
    }
    for a in 0..dim {
        let mut value = antipode_level1(rep1, a).add(&rep1.j_mat(a));
        for b in 0..dim {
            for c in 0..dim {
                let w = y.f(a, b, c) * &half;
                if !num_traits::Zero::is_zero(&w) {
                    let term = rep1.i_mat(c).neg().mul(rep1.i_mat(b));
                    value = value.add(&term.scalar_mul(&ratfunc_from_rational(vars, &w)));
                }
            }
        }
        report.record_detail(
            format!("antipode-level1[{a}]"),
            value.is_zero(),
            "m(s (x) id) Delta(J_a) != 0",
        );
    }

    // Braided exchange matrix at the difference of evaluation parameters.
    let arg = rep1.parameter().sub(&rep2.parameter());
    let braided = Mat::swap_factors(vars, d1, d2).mul(&r.substituted(&arg)?);
    let id1 = Mat::identity(vars, d1);
    let id2 = Mat::identity(vars, d2);

    for a in 0..dim {
        let forward = rep1.i_mat(a).kron(&id2).add(&id1.kron(rep2.i_mat(a)));
        let swapped = rep2.i_mat(a).kron(&id1).add(&id2.kron(rep1.i_mat(a)));
        let residual = braided.mul(&forward).sub(&swapped.mul(&braided));
        report.record_detail(
            format!("intertwine-level0[{a}]"),
            residual.is_zero(),
            "braided matrix does not exchange Delta(I_a)",
        );
    }
    for a in 0..dim {
        let mut forward = rep1.j_mat(a).kron(&id2).add(&id1.kron(&rep2.j_mat(a)));
        let mut swapped = rep2.j_mat(a).kron(&id1).add(&id2.kron(&rep1.j_mat(a)));
        for b in 0..dim {
            for c in 0..dim {
                let w = y.f(a, b, c) * &half;
                if num_traits::Zero::is_zero(&w) {
                    continue;
                }
                let w = ratfunc_from_rational(vars, &w);
                forward = forward.add(
                    &rep1
                        .i_mat(c)
                        .kron(rep2.i_mat(b))
                        .scalar_mul(&w),
                );
                swapped = swapped.add(
                    &rep2
                        .i_mat(c)
                        .kron(rep1.i_mat(b))
                        .scalar_mul(&w),
                );
            }
        }
        let residual = braided.mul(&forward).sub(&swapped.mul(&braided));
        report.record_detail(
            format!("intertwine-level1[{a}]"),
            residual.is_zero(),
            "braided matrix does not exchange Delta(J_a)",
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, VarTable};
    use crate::yangian::rational::rational_R;

    // ---- full pass ----

    #[test]
    fn fundamental_pair_passes_all_hopf_checks() {
        let vars = VarTable::standard();
        let rep1 = YangianEvalRep::fundamental_sl2(&vars, "z1", None).unwrap();
        let rep2 = YangianEvalRep::fundamental_sl2(&vars, "z2", None).unwrap();
        let y = rep1.data().clone();
        let r = rational_R(&vars, 2, "u").unwrap();
        let report = verify_yangian_hopf(&y, &rep1, &rep2, &r).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.len(), 12);
    }

    #[test]
    fn shifted_pair_uses_parameter_difference() {
        // With a constant shift on one side the braiding argument becomes
        // (z1 + eta) - z2; the checks stay exact.
        let vars = VarTable::standard();
        let eta = RatFunc::var(&vars, "eta").unwrap();
        let rep1 = YangianEvalRep::fundamental_sl2(&vars, "z1", Some(eta)).unwrap();
        let rep2 = YangianEvalRep::fundamental_sl2(&vars, "z2", None).unwrap();
        let y = rep1.data().clone();
        let r = rational_R(&vars, 2, "u").unwrap();
        let report = verify_yangian_hopf(&y, &rep1, &rep2, &r).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    // ---- the level-one tail genuinely constrains ----

    #[test]
    fn identity_matrix_passes_level0_but_fails_level1() {
        // For equal representations the level-zero coproduct is symmetric
        // under the factor swap, so even the identity "exchange matrix"
        // passes that section. The level-one check separates the spectral
        // points and catches it.
        let vars = VarTable::standard();
        let rep1 = YangianEvalRep::fundamental_sl2(&vars, "z1", None).unwrap();
        let rep2 = YangianEvalRep::fundamental_sl2(&vars, "z2", None).unwrap();
        let y = rep1.data().clone();
        let fake = RMatrix::from_parts(
            RFlavor::Rational,
            "u",
            (2, 2),
            Mat::identity(&vars, 4),
            "identity stand-in",
            None,
        )
        .unwrap();
        let report = verify_yangian_hopf(&y, &rep1, &rep2, &fake).unwrap();
        assert!(!report.all_passed());
        for check in &report.checks {
            if check.name.starts_with("antipode") || check.name.starts_with("intertwine-level0") {
                assert!(check.passed, "{}", check.name);
            }
        }
        assert!(report
            .failures()
            .all(|c| c.name.starts_with("intertwine-level1")));
        assert_eq!(report.failures().count(), 3);
    }

    // ---- argument validation ----

    #[test]
    fn rejects_shape_and_variable_misuse() {
        let vars = VarTable::standard();
        let rep1 = YangianEvalRep::fundamental_sl2(&vars, "z1", None).unwrap();
        let rep2 = YangianEvalRep::fundamental_sl2(&vars, "z2", None).unwrap();
        let y = rep1.data().clone();
        let wrong_size = rational_R(&vars, 3, "u").unwrap();
        assert!(matches!(
            verify_yangian_hopf(&y, &rep1, &rep2, &wrong_size),
            Err(Error::BadComposition(_))
        ));
        let r = rational_R(&vars, 2, "u").unwrap();
        let same_var = YangianEvalRep::fundamental_sl2(&vars, "z1", None).unwrap();
        assert!(matches!(
            verify_yangian_hopf(&y, &rep1, &same_var, &r),
            Err(Error::BadArgs(_))
        ));
        let other = YangianData::from_entries("other", 3, &[], "empty").unwrap();
        assert!(matches!(
            verify_yangian_hopf(&other, &rep1, &rep2, &r),
            Err(Error::AlgebraMismatch(_))
        ));
    }
}
