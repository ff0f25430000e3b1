//! Commutativity of transfer matrices at independent spectral points.
//!
//! Key items:
//! - [`verify_commuting`]: checks `[tau(z1), tau(z2)] = 0` for two handles
//!   on the same chain build, exactly on small chains or by streamed mod-p
//!   probing on long ones.
//!
//! The commuting family is the reason transfer matrices matter: every
//! coefficient of the spectral expansion is a conserved charge of the same
//! integrable model. Exact verification substitutes the two comparison
//! points into the symbolic transfer matrix; the mod-p mode never builds
//! `tau` at all, applying both orderings of the product to a random probe
//! vector site factor by site factor.

use crate::error::{Error, Result};
use crate::report::{CheckMode, Report};
use crate::scalars::{probe_check, subm};
use crate::spinchain::chain::TransferObjects;
use crate::spinchain::stream::{eval_factors, probe_rng, random_mod_vector, transfer_apply};
use std::sync::Arc;

/// Largest `v^n` for which the commutator is expanded symbolically.
pub const MAX_EXACT_COMMUTE_DIM: usize = 32;

/// Verifies that the chain's transfer matrices at the two comparison
/// points `z1` and `z2` commute.
///
/// The two arguments must be handles on the same build (same R-matrix,
/// site count, and inhomogeneities); passing two handles keeps the
/// signature parallel with the exchange-relation checker and guards
/// against comparing unrelated chains. Exact mode needs both transfer
/// matrices materialized and `v^n` at most [`MAX_EXACT_COMMUTE_DIM`];
/// mod-p mode works on deferred chains of any stored size.
///
/// Errors: `algebra-mismatch` for foreign variable tables,
/// `bad-composition` when the builds differ, `bad-args` for comparison
/// point collisions or zero-trial requests, `too-large` past the exact
/// cap or for deferred chains in exact mode.
pub fn verify_commuting(
    a: &TransferObjects,
    b: &TransferObjects,
    mode: CheckMode,
) -> Result<Report> {
    if !Arc::ptr_eq(a.r().vars(), b.r().vars()) {
        return Err(Error::AlgebraMismatch(
            "the two chains use different variable tables".into(),
        ));
    }
    if !a.same_build(b) {
        return Err(Error::BadComposition(
            "transfer matrices of different chain builds are not expected to commute"
                .into(),
        ));
    }
    let (x1, x2) = a.comparison_points()?;
    let v = a.site_dim();
    let n = a.n();
    let quantum = v.pow(n as u32);
    let mut report = Report::new(format!(
        "commuting transfer matrices for the {n}-site {} chain ({mode})",
        a.r().flavor()
    ));
    match mode {
        CheckMode::Exact => {
            if quantum > MAX_EXACT_COMMUTE_DIM {
                return Err(Error::TooLarge(format!(
                    "exact commutator needs dimension {quantum} > {MAX_EXACT_COMMUTE_DIM}; \
                     use the mod-p mode"
                )));
            }
            let z_idx = a.r().vars().require(a.spectral_var())?;
            let tau1 = a.transfer()?.substitute_var(z_idx, &x1)?;
            let tau2 = b.transfer()?.substitute_var(z_idx, &x2)?;
            match tau1.commutator(&tau2).first_nonzero() {
                None => report.record("commute-exact", true),
                Some((r, c, val)) => report.record_detail(
                    "commute-exact",
                    false,
                    format!("entry ({r}, {c}) of the commutator is {val}"),
                ),
            }
        }
        CheckMode::ModP { trials, seed } => {
            if trials == 0 {
                return Err(Error::BadArgs("modp mode needs at least one trial".into()));
            }
            let f1_sym = a.site_factors_at(&x1)?;
            let f2_sym = b.site_factors_at(&x2)?;
            let side_bound: u64 = f1_sym
                .iter()
                .chain(&f2_sym)
                .map(|f| f.max_degree_bound())
                .sum();
            // Each product tau1 tau2 x is linear in the probe vector.
            let bound = 2 * side_bound + 1;
            let w = a.aux_dim();
            let vars = a.r().vars().clone();
            let outcome = probe_check(&vars, trials, seed, bound, |pt| {
                let f1 = eval_factors(&f1_sym, pt)?;
                let f2 = eval_factors(&f2_sym, pt)?;
                let mut rng = probe_rng(pt);
                let x = random_mod_vector(&mut rng, quantum);
                let forward = transfer_apply(&f1, w, v, &transfer_apply(&f2, w, v, &x));
                let backward = transfer_apply(&f2, w, v, &transfer_apply(&f1, w, v, &x));
                Ok(forward
                    .iter()
                    .zip(&backward)
                    .position(|(p, q)| subm(*p, *q) != 0)
                    .map(|idx| (idx, 0)))
            })?;
            let detail = match &outcome.failure {
                Some(f) => format!("component {} differs at point {}", f.row, f.point_index),
                None => format!(
                    "{} agreeing points; failure bound {}",
                    outcome.trials_run,
                    outcome.failure_bound_string()
                ),
            };
            report.record_detail("commute-modp", outcome.passed, detail);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evalreps::make_uq_sl2_spin;
    use crate::intertwine::{build_intertwiner_system, solve_r, RFlavor, RMatrix};
    use crate::qalgebra::GradationSpec;
    use crate::scalars::{RatFunc, VarTable};
    use crate::spinchain::chain::{build_monodromy, compose_with_swap};
    use crate::yangian::rational_R;
    use num_rational::Ratio;

    fn vars() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn plain_spin_half_r(_vars: &Arc<VarTable>) -> RMatrix {
        let rho = make_uq_sl2_spin(Ratio::new(1, 2)).unwrap();
        let grad = GradationSpec::homogeneous(rho.cartan());
        let braided = solve_r(&build_intertwiner_system(&rho, &rho, &grad).unwrap()).unwrap();
        compose_with_swap(&braided).unwrap()
    }

    // ---- exact commutativity as an identity in every parameter ----

    #[test]
    fn two_site_trigonometric_transfer_matrices_commute_exactly() {
        // Free inhomogeneities e0, e1 make this an identity in the
        // deformation parameter, both spectral points, and both shifts.
        let v = vars();
        let r = plain_spin_half_r(&v);
        let inhom = [RatFunc::var(&v, "e0").unwrap(), RatFunc::var(&v, "e1").unwrap()];
        let chain = build_monodromy(&r, 2, &inhom).unwrap();
        let report = verify_commuting(&chain, &chain, CheckMode::Exact).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn three_site_rational_transfer_matrices_commute_exactly() {
        let v = vars();
        let r = rational_R(&v, 2, "u").unwrap();
        let inhom = [
            RatFunc::zero(&v),
            RatFunc::var(&v, "e0").unwrap(),
            RatFunc::from_int(&v, 2),
        ];
        let chain = build_monodromy(&r, 3, &inhom).unwrap();
        let report = verify_commuting(&chain, &chain, CheckMode::Exact).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    // ---- streamed commutativity on a long chain ----

    #[test]
    fn ten_site_chain_commutes_mod_p() {
        let v = vars();
        let r = plain_spin_half_r(&v);
        let mut inhom = vec![RatFunc::one(&v); 10];
        inhom[3] = RatFunc::var_pow(&v, "t", 2).unwrap();
        inhom[7] = RatFunc::var(&v, "e0").unwrap();
        let chain = TransferObjects::deferred(&r, 10, &inhom).unwrap();
        let report = verify_commuting(
            &chain,
            &chain,
            CheckMode::ModP {
                trials: 3,
                seed: 0x60bb_0001,
            },
        )
        .unwrap();
        assert!(report.all_passed(), "{report}");
    }

    // ---- failure detection ----

    #[test]
    fn corrupted_entry_breaks_commutativity() {
        // Adding 1 to a weight-violating entry destroys the exchange
        // structure; the commutator test must notice both exactly and
        // mod p. (Not every single-entry corruption does: this matrix has
        // enough symmetry at two sites that, for example, the corners
        // still commute. The chosen slot provably does not.)
        let v = vars();
        let r = plain_spin_half_r(&v);
        let mut bad = r.matrix().clone();
        bad.set(0, 1, bad.get(0, 1).add(&RatFunc::one(&v)));
        let broken = RMatrix::from_parts(
            RFlavor::Trigonometric,
            "z",
            (2, 2),
            bad,
            "corrupted",
            None,
        )
        .unwrap();
        let inhom = [RatFunc::one(&v), RatFunc::var(&v, "e0").unwrap()];
        let chain = build_monodromy(&broken, 2, &inhom).unwrap();
        let exact = verify_commuting(&chain, &chain, CheckMode::Exact).unwrap();
        assert!(!exact.all_passed());
        let modp = verify_commuting(
            &chain,
            &chain,
            CheckMode::ModP {
                trials: 3,
                seed: 0x60bb_0002,
            },
        )
        .unwrap();
        assert!(!modp.all_passed());
    }

    // ---- guards ----

    #[test]
    fn different_builds_are_rejected() {
        let v = vars();
        let r = plain_spin_half_r(&v);
        let a = build_monodromy(&r, 2, &[RatFunc::one(&v), RatFunc::one(&v)]).unwrap();
        let b = build_monodromy(
            &r,
            2,
            &[RatFunc::one(&v), RatFunc::var(&v, "e0").unwrap()],
        )
        .unwrap();
        assert!(matches!(
            verify_commuting(&a, &b, CheckMode::Exact),
            Err(Error::BadComposition(_))
        ));
        assert!(matches!(
            verify_commuting(&a, &a, CheckMode::ModP { trials: 0, seed: 1 }),
            Err(Error::BadArgs(_))
        ));
    }

    #[test]
    fn oversized_exact_request_is_refused() {
        let v = vars();
        let r = plain_spin_half_r(&v);
        let chain = TransferObjects::deferred(&r, 6, &vec![RatFunc::one(&v); 6]).unwrap();
        assert!(matches!(
            verify_commuting(&chain, &chain, CheckMode::Exact),
            Err(Error::TooLarge(_))
        ));
    }
}
