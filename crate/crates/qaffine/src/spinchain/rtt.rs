//! Exchange relation for monodromy matrices.
//!
//! Key items:
//! - [`verify_rtt`]: checks `R(z1, z2) T_1(z1) T_2(z2) = T_2(z2) T_1(z1)
//!   R(z1, z2)` over `W (x) W (x) V^n`, where `T_1`, `T_2` are the chain's
//!   monodromy at two independent spectral points carried on separate
//!   auxiliary slots and `R` is an auxiliary-space exchange matrix in plain
//!   (unbraided) form.
//!
//! The two spectral points are the dedicated variables `z1` and `z2`; the
//! R-matrix argument between them is `z1 / z2` for multiplicative shifts
//! and `z1 - z2` for additive ones. Exact verification multiplies the full
//! symbolic products and is capped in dimension; the mod-p mode streams
//! vectors through the factors without materializing anything large.

use crate::error::{Error, Result};
use crate::intertwine::{RFlavor, RMatrix};
use crate::report::{CheckMode, Report};
use crate::scalars::{probe_check, Mat, ModMat};
use crate::spinchain::chain::TransferObjects;
use crate::spinchain::stream::{apply_two_slot, eval_factors, probe_rng, random_mod_vector};
use std::sync::Arc;

/// Largest `w^2 v^n` for which the exchange relation is expanded
/// symbolically.
pub const MAX_EXACT_RTT_DIM: usize = 128;

/// Applies a stack of evaluated site factors to a vector over
/// `W (x) W (x) V^n`, with the auxiliary operator factor on `aux_slot` and
/// site k's quantum factor on slot `k + 2`. The last site acts first.
fn apply_monodromy_on(
    factors: &[ModMat],
    dims: &[usize],
    aux_slot: usize,
    x: Vec<u64>,
) -> Vec<u64> {
    let mut cur = x;
    for (k, f) in factors.iter().enumerate().rev() {
        cur = apply_two_slot(f, dims, aux_slot, k + 2, &cur);
    }
    cur
}

/// Validates the auxiliary R-matrix and the two fresh spectral variables,
/// returning the substituted per-site factor lists for `z -> z1` and
/// `z -> z2` together with the exchange matrix at the argument between the
/// two points.
fn rtt_pieces(
    chain: &TransferObjects,
    r_aux: &RMatrix,
) -> Result<(Vec<Mat>, Vec<Mat>, Mat)> {
    let vars = chain.r().vars();
    if !Arc::ptr_eq(vars, r_aux.vars()) {
        return Err(Error::AlgebraMismatch(
            "the chain and the auxiliary R-matrix use different variable tables".into(),
        ));
    }
    let w = chain.aux_dim();
    if r_aux.dims() != (w, w) {
        return Err(Error::BadComposition(format!(
            "auxiliary exchange matrix must act on W (x) W with dim W = {w}, got {:?}",
            r_aux.dims()
        )));
    }
    if r_aux.flavor() != chain.r().flavor() {
        return Err(Error::BadComposition(format!(
            "flavor mismatch: chain is {}, auxiliary matrix is {}",
            chain.r().flavor(),
            r_aux.flavor()
        )));
    }
    let (x1, x2) = chain.comparison_points()?;
    let t1_factors = chain.site_factors_at(&x1)?;
    let t2_factors = chain.site_factors_at(&x2)?;
    let arg = match chain.r().flavor() {
        RFlavor::Trigonometric => x1.mul(&x2.inv()?),
        RFlavor::Rational => x1.sub(&x2),
    };
    let r_sub = r_aux.substituted(&arg)?;
    Ok((t1_factors, t2_factors, r_sub))
}

/// Verifies the exchange relation between the auxiliary R-matrix and two
/// copies of the chain's monodromy at independent spectral points.
///
/// Exact mode multiplies the embedded products over `W (x) W (x) V^n` and
/// requires `w^2 v^n` at most [`MAX_EXACT_RTT_DIM`]; mod-p mode streams a
/// random probe vector through both sides at sampled points, so it scales
/// to long chains. Errors: `algebra-mismatch` for a foreign variable
/// table, `bad-composition` for a wrong auxiliary shape or flavor,
/// `bad-args` for spectral-variable collisions or zero-trial requests,
/// `too-large` past the exact cap.
pub fn verify_rtt(chain: &TransferObjects, r_aux: &RMatrix, mode: CheckMode) -> Result<Report> {
    let (t1_factors, t2_factors, r_sub) = rtt_pieces(chain, r_aux)?;
    let w = chain.aux_dim();
    let v = chain.site_dim();
    let n = chain.n();
    let mut dims = vec![v; n + 2];
    dims[0] = w;
    dims[1] = w;
    let total: usize = dims.iter().product();
    let mut report = Report::new(format!(
        "exchange relation for the {n}-site {} chain ({mode})",
        chain.r().flavor()
    ));
    match mode {
        CheckMode::Exact => {
            if total > MAX_EXACT_RTT_DIM {
                return Err(Error::TooLarge(format!(
                    "exact exchange check needs dimension {total} > {MAX_EXACT_RTT_DIM}; \
                     use the mod-p mode"
                )));
            }
            let embed_product = |factors: &[Mat], aux_slot: usize| -> Mat {
                let mut acc: Option<Mat> = None;
                for (k, f) in factors.iter().enumerate() {
                    let e = f.embed_on_slots(&dims, &[aux_slot, k + 2]);
                    acc = Some(match acc {
                        None => e,
                        Some(a) => a.mul(&e),
                    });
                }
                acc.expect("chains have at least one site")
            };
            let t1 = embed_product(&t1_factors, 0);
            let t2 = embed_product(&t2_factors, 1);
            let r_emb = r_sub.embed_on_slots(&dims, &[0, 1]);
            let lhs = r_emb.mul(&t1).mul(&t2);
            let rhs = t2.mul(&t1).mul(&r_emb);
            match lhs.sub(&rhs).first_nonzero() {
                None => report.record("rtt-exact", true),
                Some((r, c, val)) => report.record_detail(
                    "rtt-exact",
                    false,
                    format!("entry ({r}, {c}) differs by {val}"),
                ),
            }
        }
        CheckMode::ModP { trials, seed } => {
            if trials == 0 {
                return Err(Error::BadArgs("modp mode needs at least one trial".into()));
            }
            let side_bound: u64 = t1_factors
                .iter()
                .chain(&t2_factors)
                .map(|f| f.max_degree_bound())
                .sum::<u64>()
                + r_sub.max_degree_bound();
            // Both sides are linear in the probe vector, adding one to the
            // cleared difference's total degree.
            let bound = 2 * side_bound + 1;
            let vars = chain.r().vars().clone();
            let outcome = probe_check(&vars, trials, seed, bound, |pt| {
                let f1 = eval_factors(&t1_factors, pt)?;
                let f2 = eval_factors(&t2_factors, pt)?;
                let r_mod = r_sub.eval_mod(pt)?;
                let mut rng = probe_rng(pt);
                let x = random_mod_vector(&mut rng, total);
                // Left side: T2 acts first on the probe, then T1, then R.
                let left = {
                    let after_t2 = apply_monodromy_on(&f2, &dims, 1, x.clone());
                    let after_t1 = apply_monodromy_on(&f1, &dims, 0, after_t2);
                    apply_two_slot(&r_mod, &dims, 0, 1, &after_t1)
                };
                let right = {
                    let after_r = apply_two_slot(&r_mod, &dims, 0, 1, &x);
                    let after_t1 = apply_monodromy_on(&f1, &dims, 0, after_r);
                    apply_monodromy_on(&f2, &dims, 1, after_t1)
                };
                Ok(left
                    .iter()
                    .zip(&right)
                    .position(|(a, b)| a != b)
                    .map(|idx| (idx, 0)))
            })?;
            let detail = match &outcome.failure {
                Some(f) => format!(
                    "component {} differs at point {}",
                    f.row, f.point_index
                ),
                None => format!(
                    "{} agreeing points; failure bound {}",
                    outcome.trials_run,
                    outcome.failure_bound_string()
                ),
            };
            report.record_detail("rtt-modp", outcome.passed, detail);
        }
    }
    Ok(report)
}
