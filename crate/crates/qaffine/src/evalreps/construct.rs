//! Constructors for the shipped evaluation representations.
//!
//! Key items:
//! - [`make_uq_sl2_spin`]: the (2s+1)-dimensional weight module of the
//!   deformed affine sl2, for any positive half-integer spin s.
//! - [`make_uq_sln_defining`]: the n-dimensional defining module of the
//!   deformed affine sln.
//!
//! Both constructors realize the affine node by reusing finite-type
//! matrices: for sl2 the affine raising operator acts by the finite
//! lowering matrix (and vice versa), and for sln it connects the last
//! basis vector back to the first. The spectral parameter enters later,
//! through [`crate::evalreps::apply_gradation_twist`]; untwisted matrices
//! only involve the deformation variable t.

use super::rep::Representation;
use crate::error::{Error, Result};
use crate::qalgebra::{q_int, CartanData, GeneratorLabel, MAX_RANK};
use crate::scalars::{Mat, RatFunc, VarTable};
use num_rational::Ratio;
use std::sync::Arc;

/// Builds the spin-s weight module of the deformed affine sl2.
///
/// The space has dimension 2s+1 with basis v_0 (highest weight) down to
/// v_(2s). The finite-node matrices are
/// - K_1 = diag(t^(2s), t^(2s-2), ..., t^(-2s)),
/// - E+_1 v_k = [k] v_(k-1) and E-_1 v_k = [2s-k] v_(k+1) with deformed
///   integers in the base t^2,
/// - H_1 = diag(2s, 2s-2, ..., -2s),
///
/// and the affine node swaps raising and lowering: E+_0 acts by the matrix
/// of E-_1, E-_0 by the matrix of E+_1, K_0 by Kinv_1, and H_0 = -H_1.
/// The spin must be a positive integer or half-integer; anything else is
/// rejected with "bad-spin".
pub fn make_uq_sl2_spin(s: Ratio<i64>) -> Result<Representation> {
    if s <= Ratio::from_integer(0) {
        return Err(Error::BadSpin(format!("spin must be positive, got {s}")));
    }
    if *s.denom() > 2 {
        return Err(Error::BadSpin(format!(
            "spin must be an integer or half-integer, got {s}"
        )));
    }
    let two_s = (s * 2).to_integer();
    let dim = (two_s + 1) as usize;
    let vars = VarTable::standard();
    let base = RatFunc::var_pow(&vars, "t", 2)?;

    let mut k1 = Mat::zeros(&vars, dim, dim);
    let mut k1_inv = Mat::zeros(&vars, dim, dim);
    let mut h1 = Mat::zeros(&vars, dim, dim);
    let mut h0 = Mat::zeros(&vars, dim, dim);
    for k in 0..dim {
        let w = two_s - 2 * k as i64;
        k1.set(k, k, RatFunc::var_pow(&vars, "t", w as i32)?);
        k1_inv.set(k, k, RatFunc::var_pow(&vars, "t", -w as i32)?);
        h1.set(k, k, RatFunc::from_int(&vars, w));
        h0.set(k, k, RatFunc::from_int(&vars, -w));
    }
    let mut e_plus = Mat::zeros(&vars, dim, dim);
    let mut e_minus = Mat::zeros(&vars, dim, dim);
    for k in 1..dim {
        e_plus.set(k - 1, k, q_int(k as i64, &base)?);
    }
    for k in 0..dim - 1 {
        e_minus.set(k + 1, k, q_int(two_s - k as i64, &base)?);
    }

    use GeneratorLabel as L;
    Representation::new(
        Arc::new(CartanData::affine_a1()),
        &vars,
        dim,
        format!("sl2:spin={s}"),
    )
    .with_spin(s)
    .with_matrix(L::EPlus(1), e_plus.clone())?
    .with_matrix(L::EMinus(1), e_minus.clone())?
    .with_matrix(L::K(1), k1.clone())?
    .with_matrix(L::KInv(1), k1_inv.clone())?
    .with_matrix(L::H(1), h1)?
    .with_matrix(L::EPlus(0), e_minus)?
    .with_matrix(L::EMinus(0), e_plus)?
    .with_matrix(L::K(0), k1_inv)?
    .with_matrix(L::KInv(0), k1)?
    .with_matrix(L::H(0), h0)
}

/// Builds the defining n-dimensional module of the deformed affine sln.
///
/// For the finite nodes i = 1..n-1 the matrices are elementary:
/// E+_i = e(i-1, i), E-_i = e(i, i-1), K_i has t at position i-1 and 1/t at
/// position i, and H_i = e(i-1, i-1) - e(i, i). The affine node wraps
/// around: E+_0 = e(n-1, 0), E-_0 = e(0, n-1), K_0 has 1/t first and t
/// last, and H_0 = e(n-1, n-1) - e(0, 0). Requires 2 <= n <= 9 (the
/// shipped Cartan families stop at rank 8); anything else is rejected
/// with "bad-rank".
pub fn make_uq_sln_defining(n: usize) -> Result<Representation> {
    if n < 2 || n - 1 > MAX_RANK {
        return Err(Error::BadRank(format!(
            "defining module needs 2 <= n <= {}, got {n}",
            MAX_RANK + 1
        )));
    }
    let rank = n - 1;
    let cartan = Arc::new(CartanData::affine_a(rank)?);
    let vars = VarTable::standard();
    let one = RatFunc::one(&vars);
    let t = RatFunc::var_pow(&vars, "t", 1)?;
    let t_inv = RatFunc::var_pow(&vars, "t", -1)?;

    let unit = |r: usize, c: usize| {
        let mut m = Mat::zeros(&vars, n, n);
        m.set(r, c, one.clone());
        m
    };
    // Diagonal with `hi` at position p, `lo` at position q, and 1 elsewhere.
    let two_diag = |p: usize, hi: &RatFunc, q: usize, lo: &RatFunc| {
        let mut m = Mat::identity(&vars, n);
        m.set(p, p, hi.clone());
        m.set(q, q, lo.clone());
        m
    };
    let h_diag = |p: usize, q: usize| {
        let mut m = Mat::zeros(&vars, n, n);
        m.set(p, p, RatFunc::from_int(&vars, 1));
        m.set(q, q, RatFunc::from_int(&vars, -1));
        m
    };

    use GeneratorLabel as L;
    let mut rep = Representation::new(cartan, &vars, n, format!("sl{n}:defining"));
    for i in 1..=rank {
        rep = rep
            .with_matrix(L::EPlus(i), unit(i - 1, i))?
            .with_matrix(L::EMinus(i), unit(i, i - 1))?
            .with_matrix(L::K(i), two_diag(i - 1, &t, i, &t_inv))?
            .with_matrix(L::KInv(i), two_diag(i - 1, &t_inv, i, &t))?
            .with_matrix(L::H(i), h_diag(i - 1, i))?;
    }
    rep.with_matrix(L::EPlus(0), unit(n - 1, 0))?
        .with_matrix(L::EMinus(0), unit(0, n - 1))?
        .with_matrix(L::K(0), two_diag(0, &t_inv, n - 1, &t))?
        .with_matrix(L::KInv(0), two_diag(0, &t, n - 1, &t_inv))?
        .with_matrix(L::H(0), h_diag(n - 1, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::verify_defining_relations;
    use crate::scalars::parse_poly;

    fn rf(rep: &Representation, src: &str) -> RatFunc {
        RatFunc::from_poly(parse_poly(rep.vars(), src).unwrap())
    }

    // ---- weight modules ----

    #[test]
    fn spin_half_matrices_are_the_known_two_by_two_forms() {
        use GeneratorLabel as L;
        let rep = make_uq_sl2_spin(Ratio::new(1, 2)).unwrap();
        assert_eq!(rep.dim(), 2);
        let k = rep.matrix(L::K(1)).unwrap();
        assert_eq!(k.get(0, 0), &rf(&rep, "1*t^1"));
        assert_eq!(k.get(1, 1), &rf(&rep, "1*t^-1"));
        let e = rep.matrix(L::EPlus(1)).unwrap();
        assert!(e.get(0, 1).is_one());
        assert!(e.get(1, 0).is_zero());
        // The affine node reuses the finite matrices crosswise.
        assert_eq!(rep.matrix(L::EPlus(0)).unwrap(), rep.matrix(L::EMinus(1)).unwrap());
        assert_eq!(rep.matrix(L::K(0)).unwrap(), rep.matrix(L::KInv(1)).unwrap());
        assert_eq!(rep.spin(), Some(Ratio::new(1, 2)));
        assert_eq!(rep.name(), "sl2:spin=1/2");
    }

    #[test]
    fn bad_spins_are_rejected() {
        for s in [Ratio::from_integer(0), Ratio::from_integer(-1), Ratio::new(-1, 2)] {
            let err = make_uq_sl2_spin(s).unwrap_err();
            assert!(err.to_string().starts_with("bad-spin"), "{err}");
        }
        let err = make_uq_sl2_spin(Ratio::new(1, 3)).unwrap_err();
        assert!(err.to_string().starts_with("bad-spin"), "{err}");
    }

    #[test]
    fn spin_one_commutator_has_deformed_integer_eigenvalues() {
        use GeneratorLabel as L;
        let rep = make_uq_sl2_spin(Ratio::from_integer(1)).unwrap();
        let comm = rep
            .matrix(L::EPlus(1))
            .unwrap()
            .commutator(rep.matrix(L::EMinus(1)).unwrap());
        let two = rf(&rep, "1*t^-2 + 1*t^2");
        for (r, c) in [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)] {
            assert!(comm.get(r, c).is_zero());
        }
        assert_eq!(comm.get(0, 0), &two);
        assert!(comm.get(1, 1).is_zero());
        assert_eq!(comm.get(2, 2), &two.neg());
    }

    #[test]
    fn weight_modules_satisfy_all_relations_up_to_spin_two() {
        for two_s in 1..=4_i64 {
            let rep = make_uq_sl2_spin(Ratio::new(two_s, 2)).unwrap();
            let report = verify_defining_relations(&rep).unwrap();
            assert!(report.all_passed(), "spin {two_s}/2:\n{report}");
        }
    }

    #[test]
    fn weight_modules_are_level_zero() {
        let rep = make_uq_sl2_spin(Ratio::new(3, 2)).unwrap();
        let central = rep.central_group_like().unwrap();
        assert_eq!(central, Mat::identity(rep.vars(), rep.dim()));
    }

    // ---- defining modules ----

    #[test]
    fn defining_module_matrices_wrap_around() {
        use GeneratorLabel as L;
        let rep = make_uq_sln_defining(3).unwrap();
        assert_eq!(rep.dim(), 3);
        let e0 = rep.matrix(L::EPlus(0)).unwrap();
        assert!(e0.get(2, 0).is_one());
        let k2 = rep.matrix(L::K(2)).unwrap();
        assert!(k2.get(0, 0).is_one());
        assert_eq!(k2.get(1, 1), &rf(&rep, "1*t^1"));
        assert_eq!(k2.get(2, 2), &rf(&rep, "1*t^-1"));
        let k0 = rep.matrix(L::K(0)).unwrap();
        assert_eq!(k0.get(0, 0), &rf(&rep, "1*t^-1"));
        assert!(k0.get(1, 1).is_one());
        assert_eq!(k0.get(2, 2), &rf(&rep, "1*t^1"));
    }

    #[test]
    fn defining_modules_satisfy_relations_and_level_zero() {
        for n in [2, 3, 4] {
            let rep = make_uq_sln_defining(n).unwrap();
            let report = verify_defining_relations(&rep).unwrap();
            assert!(report.all_passed(), "n={n}:\n{report}");
            assert_eq!(
                rep.central_group_like().unwrap(),
                Mat::identity(rep.vars(), rep.dim()),
                "n={n}"
            );
        }
    }

    #[test]
    fn bad_ranks_are_rejected() {
        for n in [0, 1, 10, 20] {
            let err = make_uq_sln_defining(n).unwrap_err();
            assert!(err.to_string().starts_with("bad-rank"), "{err}");
        }
    }

    #[test]
    fn sl2_defining_module_is_the_spin_half_module() {
        let a = make_uq_sl2_spin(Ratio::new(1, 2)).unwrap();
        let b = make_uq_sln_defining(2).unwrap();
        assert_eq!(a.cartan(), b.cartan());
        for label in a.labels() {
            assert_eq!(
                a.matrix(label).unwrap(),
                b.matrix(label).unwrap(),
                "label {label}"
            );
        }
        assert_eq!(a.labels().count(), b.labels().count());
    }
}
