//! Deterministic pseudo-random generation of polynomials and rational
//! functions, used by randomized tests and probabilistic verifiers.
//!
//! The generator is a SplitMix64 stream: a given seed always produces the
//! same sequence, independent of platform.

use super::laurent::LaurentPoly;
use super::modp;
use super::ratfunc::RatFunc;
use super::vartable::VarTable;
use num_bigint::BigInt;
use std::sync::Arc;

/// A small deterministic generator (SplitMix64).
#[derive(Debug, Clone)]
pub struct Rng64 {
    state: u64,
}

impl Rng64 {
    /// Creates a stream from a seed.
    pub fn new(seed: u64) -> Self {
        Rng64 { state: seed }
    }

    /// Next raw 64-bit value.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        modp::splitmix64(self.state)
    }

    /// Uniform value in `[0, n)`. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform value in `[lo, hi]`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// A random Laurent polynomial with up to `max_terms` terms, exponents in
/// `[-max_exp, max_exp]` on the listed active variables, and nonzero
/// coefficients bounded by `max_coeff` in absolute value. May be zero when
/// terms collide and cancel.
pub fn random_laurent(
    vars: &Arc<VarTable>,
    rng: &mut Rng64,
    max_terms: usize,
    max_exp: i32,
    max_coeff: i64,
    active: &[usize],
) -> LaurentPoly {
    let mut out = LaurentPoly::zero(vars);
    let n_terms = 1 + rng.below(max_terms.max(1) as u64) as usize;
    for _ in 0..n_terms {
        let mut expo = LaurentPoly::zero_expo(vars);
        for &v in active {
            expo[v] = rng.range_i64(-(max_exp as i64), max_exp as i64) as i32;
        }
        let mut c = rng.range_i64(1, max_coeff.max(1));
        if rng.below(2) == 1 {
            c = -c;
        }
        out.add_term(expo, BigInt::from(c));
    }
    out
}

/// Like [`random_laurent`] but guaranteed nonzero.
pub fn random_laurent_nonzero(
    vars: &Arc<VarTable>,
    rng: &mut Rng64,
    max_terms: usize,
    max_exp: i32,
    max_coeff: i64,
    active: &[usize],
) -> LaurentPoly {
    loop {
        let p = random_laurent(vars, rng, max_terms, max_exp, max_coeff, active);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random rational function with nonzero denominator.
pub fn random_ratfunc(
    vars: &Arc<VarTable>,
    rng: &mut Rng64,
    max_terms: usize,
    max_exp: i32,
    max_coeff: i64,
    active: &[usize],
) -> RatFunc {
    let num = random_laurent(vars, rng, max_terms, max_exp, max_coeff, active);
    let den = random_laurent_nonzero(vars, rng, max_terms, max_exp, max_coeff, active);
    RatFunc::new(num, den).expect("denominator is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let mut a = Rng64::new(42);
        let mut b = Rng64::new(42);
        for _ in 0..16 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn random_laurent_respects_bounds() {
        let vars = VarTable::standard();
        let mut rng = Rng64::new(7);
        for _ in 0..32 {
            let p = random_laurent(&vars, &mut rng, 4, 3, 9, &[0, 1]);
            for (e, c) in p.iter_terms() {
                for (idx, &k) in e.iter().enumerate() {
                    if idx > 1 {
                        assert_eq!(k, 0, "inactive variable must stay absent");
                    }
                    assert!(k.abs() <= 3);
                }
                assert!(c.magnitude() <= &9u32.into());
            }
        }
    }
}
