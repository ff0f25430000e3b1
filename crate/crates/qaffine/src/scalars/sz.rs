//! Probabilistic identity checking at random modular points.
//!
//! A rational-function identity `A = B` is tested by evaluating both sides
//! at points drawn uniformly from nonzero residues modulo the working
//! prime. When the identity is false, the cleared numerator of `A - B` is a
//! nonzero polynomial of bounded total degree `D`, so a single point
//! detects the discrepancy except with probability at most `D / (p - 1)`;
//! independent trials multiply the bound. Points that annihilate a
//! denominator are skipped and redrawn, with the total number of draws
//! capped at 100 per requested trial.

use super::matrix::Mat;
use super::modp::{PrimePoint, PRIME};
use super::vartable::VarTable;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::sync::Arc;

/// Location of a detected discrepancy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SzFailure {
    /// Index of the point (within the seed's stream) that exposed it.
    pub point_index: u64,
    /// Row of the first differing entry.
    pub row: usize,
    /// Column of the first differing entry.
    pub col: usize,
}

/// Result of a randomized identity check.
#[derive(Debug, Clone)]
pub struct SzOutcome {
    /// True when every trial agreed.
    pub passed: bool,
    /// Trials completed (equal to the request unless a failure stopped the run).
    pub trials_run: u32,
    /// Tracked total-degree bound of the cleared difference.
    pub degree_bound: u64,
    /// Points skipped because a denominator vanished.
    pub bad_points_skipped: u32,
    /// First discrepancy found, if any.
    pub failure: Option<SzFailure>,
}

impl SzOutcome {
    /// Exact failure-probability bound `(D / (p - 1))^trials` as a fraction.
    pub fn failure_bound(&self) -> (BigInt, BigInt) {
        sz_failure_bound(self.degree_bound, self.trials_run)
    }

    /// Compact, deterministic rendering of the failure bound.
    pub fn failure_bound_string(&self) -> String {
        format!(
            "({} / {})^{}",
            self.degree_bound,
            PRIME - 1,
            self.trials_run
        )
    }
}

/// The exact bound `(D^trials, (p - 1)^trials)`.
pub fn sz_failure_bound(degree_bound: u64, trials: u32) -> (BigInt, BigInt) {
    (
        BigInt::from(degree_bound).pow(trials),
        BigInt::from(PRIME - 1).pow(trials),
    )
}

/// True when `(D / (p - 1))^trials < 10^(-exp10)`, decided exactly.
pub fn sz_bound_below(degree_bound: u64, trials: u32, exp10: u32) -> bool {
    let (num, den) = sz_failure_bound(degree_bound, trials);
    num * BigInt::from(10u32).pow(exp10) < den
}

/// Runs up to `trials` probes, redrawing on bad points. The closure returns
/// `Ok(None)` when the identity holds at the point, `Ok(Some((row, col)))`
/// for the first differing entry, and `Err(bad-point)` when a denominator
/// vanishes. Draws are capped at `100 * trials`.
pub fn probe_check(
    vars: &Arc<VarTable>,
    trials: u32,
    seed: u64,
    degree_bound: u64,
    mut probe: impl FnMut(&PrimePoint) -> Result<Option<(usize, usize)>>,
) -> Result<SzOutcome> {
    assert!(trials > 0, "at least one trial is required");
    let cap = (trials as u64).saturating_mul(100);
    let mut done = 0u32;
    let mut skipped = 0u32;
    let mut index = 0u64;
    while done < trials {
        if index >= cap {
            return Err(Error::PointExhaustion {
                found: done as usize,
                needed: trials as usize,
                attempts: index as usize,
            });
        }
        let pt = PrimePoint::sample(vars, seed, index);
        index += 1;
        match probe(&pt) {
            Ok(None) => done += 1,
            Ok(Some((row, col))) => {
                return Ok(SzOutcome {
                    passed: false,
                    trials_run: done + 1,
                    degree_bound,
                    bad_points_skipped: skipped,
                    failure: Some(SzFailure {
                        point_index: pt.index(),
                        row,
                        col,
                    }),
                });
            }
            Err(Error::BadPoint) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(SzOutcome {
        passed: true,
        trials_run: done,
        degree_bound,
        bad_points_skipped: skipped,
        failure: None,
    })
}

/// Randomized equality check of two matrices of rational functions.
/// The degree bound is read off the symbolic entries.
pub fn identity_check_sz(a: &Mat, b: &Mat, trials: u32, seed: u64) -> Result<SzOutcome> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::BadComposition(format!(
            "cannot compare a {}x{} matrix with a {}x{} matrix",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let degree_bound = a.max_degree_bound() + b.max_degree_bound();
    probe_check(a.vars(), trials, seed, degree_bound, |pt| {
        let am = a.eval_mod(pt)?;
        let bm = b.eval_mod(pt)?;
        Ok(am.sub(&bm).first_nonzero())
    })
}
