//! Exact solution of the intertwining equations.
//!
//! Key items:
//! - [`solve_r`]: eliminates the stacked system, classifies the solution
//!   space by its dimension, and returns the normalized intertwiner.
//!
//! Elimination runs on the weight-surviving unknowns only; the discarded
//! slots are structurally zero. A one-dimensional solution space yields the
//! R-matrix; an empty one reports `no-intertwiner`; anything larger reports
//! `reducible-pair` together with the full solution basis, expanded back to
//! all matrix slots.
//!
//! Normalization of the unique solution proceeds in two steps. First the
//! kernel vector is scaled so the entry fixing the highest-weight pair, slot
//! `(0, 0)`, equals one (falling back to the first nonzero entry in
//! row-major order). Then denominators are cleared and the joint polynomial
//! and integer content is divided out, leaving Laurent-polynomial entries
//! with content one whose overall sign makes the pivot's head coefficient
//! positive. The record of both steps travels with the matrix.
//!
//! The solver never trusts elimination: before returning it re-checks the
//! intertwining identity `Ř·Δ(x) = Δ'(x)·Ř` exactly for every generator.

use crate::error::{Error, Result};
use crate::intertwine::rmatrix::{RFlavor, RMatrix};
use crate::intertwine::system::IntertwinerSystem;
use crate::qalgebra::tensor_coproduct_matrix;
use crate::scalars::{canonical_assoc, poly_gcd, poly_lcm, LaurentPoly, Mat, RatFunc};

/// Solves the stacked intertwining system.
///
/// Errors: `no-intertwiner` when only the zero matrix satisfies the
/// equations, `reducible-pair` (carrying the solution basis) when the
/// solution space has dimension greater than one.
pub fn solve_r(sys: &IntertwinerSystem) -> Result<RMatrix> {
    let vars = sys.matrix().vars().clone();
    let kept = sys.kept_slots();
    let d = {
        let (d1, d2) = sys.dims();
        d1 * d2
    };

    // Eliminate over the weight-surviving columns only.
    let restricted = Mat::from_fn(&vars, sys.matrix().rows(), kept.len(), |r, c| {
        sys.matrix().get(r, kept[c]).clone()
    });
    let kernel = restricted.nullspace();
    match kernel.len() {
        0 => return Err(Error::NoIntertwiner),
        1 => {}
        _ => {
            let basis = kernel
                .into_iter()
                .map(|v| {
                    let mut full = vec![RatFunc::zero(&vars); d * d];
                    for (i, &slot) in kept.iter().enumerate() {
                        full[slot] = v[i].clone();
                    }
                    full
                })
                .collect();
            return Err(Error::ReduciblePair { basis });
        }
    }

    let mut mat = Mat::zeros(&vars, d, d);
    for (i, &slot) in kept.iter().enumerate() {
        mat.set(slot / d, slot % d, kernel[0][i].clone());
    }

    let (mat, normalization) = normalize(mat)?;

    // Post-check: the intertwining identity must hold exactly; elimination
    // output is never trusted as-is.
    let (twisted, partner) = sys.sources();
    for &g in sys.generators() {
        let a = tensor_coproduct_matrix(g, twisted, partner)?;
        let b = tensor_coproduct_matrix(g, partner, twisted)?;
        let residual = mat.mul(&a).sub(&b.mul(&mat));
        assert!(
            residual.is_zero(),
            "solver bug: nonzero intertwining residual for {g}"
        );
    }

    RMatrix::from_parts(
        RFlavor::Trigonometric,
        sys.spectral_var(),
        sys.dims(),
        mat,
        normalization,
        Some((twisted.clone(), partner.clone())),
    )
}

/// Applies the pivot and content normalization; returns the matrix and its
/// normalization record.
fn normalize(mat: Mat) -> Result<(Mat, String)> {
    let vars = mat.vars().clone();
    let pivot = if !mat.get(0, 0).is_zero() {
        (0, 0)
    } else {
        let (r, c, _) = mat
            .first_nonzero()
            .expect("a kernel vector cannot be zero");
        (r, c)
    };

    // Step 1: pivot entry becomes one.
    let mat = mat.scalar_mul(&mat.get(pivot.0, pivot.1).inv()?);

    // Step 2: clear denominators, then divide out the joint content.
    let mut lcm = LaurentPoly::one(&vars);
    for_each_nonzero(&mat, |e| lcm = poly_lcm(&lcm, e.denom()));
    let mat = mat.scalar_mul(&RatFunc::from_poly(lcm));

    let mut content = LaurentPoly::zero(&vars);
    for_each_nonzero(&mat, |e| {
        debug_assert!(e.denom().is_one(), "denominators were cleared");
        content = if content.is_zero() {
            canonical_assoc(e.numer())
        } else {
            poly_gcd(&content, e.numer())
        };
    });
    let mut mat = mat.scalar_mul(&RatFunc::from_poly(content).inv()?);

    // Overall sign: pivot head coefficient positive.
    let pivot_num = mat.get(pivot.0, pivot.1).numer();
    if pivot_num.head_coeff().sign() == num_bigint::Sign::Minus {
        mat = mat.scalar_mul(&RatFunc::from_int(&vars, -1));
    }

    let record = format!(
        "pivot=({},{}); denominators cleared; joint content 1",
        pivot.0, pivot.1
    );
    Ok((mat, record))
}

/// Visits every nonzero entry in row-major order.
fn for_each_nonzero(mat: &Mat, mut f: impl FnMut(&RatFunc)) {
    for r in 0..mat.rows() {
        for c in 0..mat.cols() {
            let e = mat.get(r, c);
            if !e.is_zero() {
                f(e);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evalreps::{make_uq_sl2_spin, make_uq_sln_defining, Representation};
    use crate::intertwine::system::build_intertwiner_system;
    use crate::qalgebra::{GeneratorLabel, GradationSpec};
    use crate::scalars::VarTable;
    use num_rational::Ratio;
    use std::sync::Arc;

    fn half() -> Representation {
        make_uq_sl2_spin(Ratio::new(1, 2)).unwrap()
    }

    fn solve_pair(a: &Representation, b: &Representation) -> Result<RMatrix> {
        let grad = GradationSpec::homogeneous(a.cartan());
        solve_r(&build_intertwiner_system(a, b, &grad)?)
    }

    fn tz(vars: &Arc<VarTable>, texp: i32, zexp: i32) -> RatFunc {
        RatFunc::var_pow(vars, "t", texp)
            .unwrap()
            .mul(&RatFunc::var_pow(vars, "z", zexp).unwrap())
    }

    // ---- the solved six-vertex intertwiner ----

    #[test]
    fn spin_half_solution_matches_the_derived_entries() {
        let v = half();
        let r = solve_pair(&v, &v).unwrap();
        assert_eq!(r.dims(), (2, 2));
        assert_eq!(r.nonzero_count(), 6);
        assert_eq!(
            r.normalization(),
            "pivot=(0,0); denominators cleared; joint content 1"
        );

        let vars = r.vars().clone();
        let one = RatFunc::one(&vars);
        // Cleared-denominator gauge of the solved block 1 ⊕ (2x2) ⊕ 1:
        // corner entries 1 - z t^4, middle block rows (z - z t^4, t^2 - t^2 z)
        // and (t^2 - t^2 z, 1 - t^4).
        let corner = one.sub(&tz(&vars, 4, 1));
        let b = tz(&vars, 0, 1).sub(&tz(&vars, 4, 1));
        let c = tz(&vars, 2, 0).sub(&tz(&vars, 2, 1));
        let e = one.sub(&tz(&vars, 4, 0));
        let m = r.matrix();
        assert_eq!(m.get(0, 0), &corner);
        assert_eq!(m.get(3, 3), &corner);
        assert_eq!(m.get(1, 1), &b);
        assert_eq!(m.get(1, 2), &c);
        assert_eq!(m.get(2, 1), &c);
        assert_eq!(m.get(2, 2), &e);
        for (r_, c_) in [(0, 1), (0, 2), (0, 3), (1, 0), (1, 3), (3, 0)] {
            assert!(m.get(r_, c_).is_zero());
        }
    }

    #[test]
    fn spin_half_solution_at_one_is_scalar() {
        let v = half();
        let r = solve_pair(&v, &v).unwrap();
        let vars = r.vars().clone();
        let at_one = r.substituted(&RatFunc::one(&vars)).unwrap();
        let scale = at_one.get(0, 0).clone();
        assert!(!scale.is_zero());
        let expected = Mat::identity(&vars, 4).scalar_mul(&scale);
        assert!(at_one.sub(&expected).is_zero());
    }

    #[test]
    fn entry_ratios_are_gauge_independent() {
        let v = half();
        let r = solve_pair(&v, &v).unwrap();
        let vars = r.vars().clone();
        let m = r.matrix();
        // b / a = z (t^4 - 1) / (z t^4 - 1) independent of normalization.
        let lhs = m.get(1, 1).div(m.get(0, 0)).unwrap();
        let num = tz(&vars, 4, 1).sub(&tz(&vars, 0, 1));
        let den = tz(&vars, 4, 1).sub(&RatFunc::one(&vars));
        assert_eq!(lhs, num.div(&den).unwrap());
    }

    // ---- other pairs ----

    #[test]
    fn defining_sl3_pair_has_fifteen_entries() {
        let v = make_uq_sln_defining(3).unwrap();
        let r = solve_pair(&v, &v).unwrap();
        assert_eq!(r.dims(), (3, 3));
        assert_eq!(r.matrix().rows(), 9);
        assert_eq!(r.nonzero_count(), 15);
    }

    #[test]
    fn mixed_spin_pair_solves_uniquely() {
        let v = half();
        let w = make_uq_sl2_spin(Ratio::new(1, 1)).unwrap();
        let r = solve_pair(&v, &w).unwrap();
        assert_eq!(r.dims(), (2, 3));
        assert_eq!(r.matrix().rows(), 6);
        let back = solve_pair(&w, &v).unwrap();
        assert_eq!(back.dims(), (3, 2));
    }

    // ---- degenerate solution spaces ----

    /// Block-diagonal doubling of a representation: V ⊕ V.
    fn doubled(rep: &Representation) -> Representation {
        let vars = rep.vars().clone();
        let dim = rep.dim();
        let mut out = Representation::new(rep.cartan().clone(), &vars, 2 * dim, "doubled");
        for label in rep.labels() {
            let m = rep.matrix(label).unwrap();
            let big = Mat::from_fn(&vars, 2 * dim, 2 * dim, |r, c| {
                if r / dim == c / dim {
                    m.get(r % dim, c % dim).clone()
                } else {
                    RatFunc::zero(&vars)
                }
            });
            out = out.with_matrix(label, big).unwrap();
        }
        out
    }

    #[test]
    fn reducible_partner_reports_the_solution_basis() {
        let v = half();
        let w = doubled(&v);
        let err = solve_pair(&v, &w).unwrap_err();
        match err {
            Error::ReduciblePair { basis } => {
                assert_eq!(basis.len(), 4);
                for vec in &basis {
                    assert_eq!(vec.len(), 8 * 8);
                    assert!(vec.iter().any(|e| !e.is_zero()));
                }
            }
            other => panic!("expected reducible-pair, got {other}"),
        }
    }

    #[test]
    fn broken_partner_has_no_intertwiner() {
        let v = half();
        let mut w = half();
        let doubled_raise = w
            .matrix(GeneratorLabel::EPlus(1))
            .unwrap()
            .scalar_mul(&RatFunc::from_int(w.vars(), 2));
        w = w.with_matrix(GeneratorLabel::EPlus(1), doubled_raise).unwrap();
        let err = solve_pair(&v, &w).unwrap_err();
        assert!(matches!(err, Error::NoIntertwiner));
    }
}
