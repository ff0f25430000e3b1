//! Local Hamiltonians from regular exchange matrices.
//!
//! Key items:
//! - [`hamiltonian_density`]: the two-site interaction, the logarithmic
//!   derivative of a braid-form exchange matrix at its regular point.
//! - [`extract_hamiltonian`]: the full chain Hamiltonian, the cyclic sum of
//!   the density over nearest-neighbor pairs, with a report that re-checks
//!   regularity and commutation with the transfer matrix.
//!
//! A braid-form matrix is regular when its value at argument 1 is a
//! nonzero multiple of the identity. At that point the homogeneous
//! transfer matrix degenerates to (a multiple of) the cyclic shift, and
//! its logarithmic derivative is a sum of genuinely local two-site terms:
//! `h = R'(1) / s` acting on sites `(k, k+1)`, indices mod n. The wrap
//! term `(n, 1)` is part of that sum; dropping it would break commutation
//! with the transfer family on a closed chain.

use crate::error::{Error, Result};
use crate::intertwine::{RFlavor, RMatrix};
use crate::report::Report;
use crate::scalars::{addm, probe_check, subm, Mat, ModMat, RatFunc};
use crate::spinchain::chain::{compose_with_swap, TransferObjects};
use crate::spinchain::stream::{
    apply_two_slot, eval_factors, probe_rng, random_mod_vector, transfer_apply,
};

/// Largest `v^n` for which the symbolic chain Hamiltonian is materialized.
pub const MAX_HAMILTONIAN_DIM: usize = 256;

/// Trials used by the internal commutation re-check.
const TRANSFER_TRIALS: u32 = 20;

/// Seed used by the internal commutation re-check.
const TRANSFER_SEED: u64 = 0x4a3d_0001;

/// The two-site interaction of a regular braid-form exchange matrix: the
/// derivative at argument 1 divided by the scalar value there. Returns the
/// density together with that scalar.
///
/// Errors: `bad-args` unless the matrix acts on two copies of one space;
/// `non-regular` unless the value at 1 is a nonzero multiple of the
/// identity.
pub fn hamiltonian_density(r: &RMatrix) -> Result<(Mat, RatFunc)> {
    let (d1, d2) = r.dims();
    if d1 != d2 {
        return Err(Error::BadArgs(format!(
            "a Hamiltonian density needs equal factors, got dims ({d1}, {d2})"
        )));
    }
    if let Some((a, b)) = r.sources() {
        if a.name() != b.name() {
            return Err(Error::BadArgs(format!(
                "a Hamiltonian density needs equal factors, got {} and {}",
                a.name(),
                b.name()
            )));
        }
    }
    let vars = r.vars();
    let one = RatFunc::one(vars);
    let at_one = r.substituted(&one)?;
    let s = at_one.get(0, 0).clone();
    let scaled_id = Mat::identity(vars, d1 * d2).scalar_mul(&s);
    if s.is_zero() || !at_one.sub(&scaled_id).is_zero() {
        return Err(Error::NonRegularR(
            "the value at argument 1 is not a nonzero multiple of the identity; \
             rescale the matrix or compose with the factor swap first"
                .into(),
        ));
    }
    let z_idx = vars.require(r.spectral_var())?;
    let derived = r.matrix().map(|e| e.derivative(z_idx));
    let density = derived.substitute_var(z_idx, &one)?.scalar_mul(&s.inv()?);
    Ok((density, s))
}

/// Sums the evaluated density over the cyclic nearest-neighbor pairs of an
/// n-site chain, applied to a vector over `V^n`.
fn density_sum_apply(h: &ModMat, v: usize, n: usize, x: &[u64]) -> Vec<u64> {
    let dims = vec![v; n];
    let mut acc = vec![0u64; x.len()];
    for k in 0..n {
        let term = apply_two_slot(h, &dims, k, (k + 1) % n, x);
        for (a, b) in acc.iter_mut().zip(term) {
            *a = addm(*a, b);
        }
    }
    acc
}

/// Builds the n-site chain Hamiltonian `H = sum_k h_(k, k+1 mod n)` from a
/// regular braid-form exchange matrix and re-derives its two defining
/// properties in the report: the regular point, and commutation with the
/// homogeneous transfer matrix (streamed mod p at fixed internal trials).
///
/// Errors: `bad-args` for fewer than two sites or a mixed-factor matrix;
/// `non-regular` as for [`hamiltonian_density`]; `too-large` when `v^n`
/// exceeds [`MAX_HAMILTONIAN_DIM`].
pub fn extract_hamiltonian(r: &RMatrix, n: usize) -> Result<(Mat, Report)> {
    if n < 2 {
        return Err(Error::BadArgs(
            "a chain Hamiltonian needs at least two sites".into(),
        ));
    }
    let (density, s) = hamiltonian_density(r)?;
    let v = r.dims().0;
    let mut quantum = 1usize;
    for _ in 0..n {
        quantum = quantum.saturating_mul(v);
        if quantum > MAX_HAMILTONIAN_DIM {
            return Err(Error::TooLarge(format!(
                "chain Hamiltonian dimension {v}^{n} exceeds the cap {MAX_HAMILTONIAN_DIM}"
            )));
        }
    }
    let dims = vec![v; n];
    let mut hamiltonian = Mat::zeros(r.vars(), quantum, quantum);
    for k in 0..n {
        hamiltonian = hamiltonian.add(&density.embed_on_slots(&dims, &[k, (k + 1) % n]));
    }

    let mut report = Report::new(format!(
        "Hamiltonian extraction for the {n}-site chain"
    ));
    report.record_detail(
        "regular-point",
        true,
        format!("value at 1 is ({s}) times the identity"),
    );

    // Commutation with the homogeneous transfer matrix, streamed mod p.
    let plain = compose_with_swap(r)?;
    let shift = match r.flavor() {
        RFlavor::Trigonometric => RatFunc::one(r.vars()),
        RFlavor::Rational => RatFunc::zero(r.vars()),
    };
    let chain = TransferObjects::deferred(&plain, n, &vec![shift; n])?;
    let factor_bound: u64 = chain
        .site_factor_list()
        .iter()
        .map(|f| f.max_degree_bound())
        .sum();
    let bound = 2 * (density.max_degree_bound() + factor_bound) + 1;
    let outcome = probe_check(r.vars(), TRANSFER_TRIALS, TRANSFER_SEED, bound, |pt| {
        let h_mod = density.eval_mod(pt)?;
        let factors = eval_factors(chain.site_factor_list(), pt)?;
        let mut rng = probe_rng(pt);
        let x = random_mod_vector(&mut rng, quantum);
        let tau_then_h = density_sum_apply(&h_mod, v, n, &transfer_apply(&factors, v, v, &x));
        let h_then_tau = transfer_apply(&factors, v, v, &density_sum_apply(&h_mod, v, n, &x));
        Ok(tau_then_h
            .iter()
            .zip(&h_then_tau)
            .position(|(a, b)| subm(*a, *b) != 0)
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
    report.record_detail("commutes-with-transfer", outcome.passed, detail);
    Ok((hamiltonian, report))
}
