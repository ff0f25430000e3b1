//! Arithmetic modulo the Mersenne prime `2^61 - 1` and deterministic
//! sample-point generation.
//!
//! Probabilistic identity checks evaluate rational-function expressions at
//! points drawn from `[1, p-1]^k`. Points are generated by a counter-based
//! hash of `(seed, point index, variable index)`, so a `(seed, trials)` pair
//! fully determines every draw regardless of evaluation order.

use super::vartable::VarTable;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use std::sync::Arc;

/// The working prime `2^61 - 1`.
pub const PRIME: u64 = (1u64 << 61) - 1;

/// Addition mod `PRIME`.
#[inline]
pub fn addm(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

/// Subtraction mod `PRIME`.
#[inline]
pub fn subm(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

/// Multiplication mod `PRIME`, with Mersenne folding of the 122-bit product.
#[inline]
pub fn mulm(a: u64, b: u64) -> u64 {
    let wide = (a as u128) * (b as u128);
    let lo = (wide & (PRIME as u128)) as u64;
    let hi = (wide >> 61) as u64;
    let mut s = lo + hi;
    if s >= PRIME {
        s -= PRIME;
    }
    // hi can reach ~2^61, so one extra fold suffices.
    if s >= PRIME {
        s -= PRIME;
    }
    s
}

/// Exponentiation mod `PRIME` with a nonnegative exponent.
pub fn powm(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    base %= PRIME;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base);
        }
        base = mulm(base, base);
        exp >>= 1;
    }
    acc
}

/// Exponentiation with a signed exponent, using Fermat's little theorem for
/// the inverse. `base` must be nonzero when `exp` is negative.
pub fn powm_signed(base: u64, exp: i64) -> u64 {
    if exp >= 0 {
        powm(base, exp as u64)
    } else {
        assert!(!base.is_multiple_of(PRIME), "negative power of zero residue");
        // base^(p-1) = 1, so base^exp = base^(exp mod (p-1)).
        let e = exp.rem_euclid((PRIME - 1) as i64) as u64;
        powm(base, e)
    }
}

/// Multiplicative inverse mod `PRIME`; `None` for zero.
pub fn invm(a: u64) -> Option<u64> {
    if a.is_multiple_of(PRIME) {
        None
    } else {
        Some(powm(a, PRIME - 2))
    }
}

/// Reduces a big integer into `[0, PRIME)`.
pub fn int_mod(c: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let mut r = c % &p;
    if r.is_negative() {
        r += &p;
    }
    r.to_u64().expect("residue fits in u64")
}

// ---- deterministic point generation ----

/// One round of the SplitMix64 output function.
#[inline]
pub(crate) fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// A sampled evaluation point: one nonzero residue per table variable.
#[derive(Debug, Clone)]
pub struct PrimePoint {
    seed: u64,
    index: u64,
    residues: Vec<u64>,
}

impl PrimePoint {
    /// Draws the point with the given index from the stream determined by
    /// `seed`. Residues lie in `[1, PRIME - 1]`.
    pub fn sample(vars: &Arc<VarTable>, seed: u64, index: u64) -> Self {
        let residues = (0..vars.len())
            .map(|v| {
                let h = splitmix64(
                    splitmix64(seed ^ 0xA076_1D64_78BD_642F)
                        .wrapping_add(splitmix64(index).rotate_left(17))
                        .wrapping_add(v as u64),
                );
                1 + h % (PRIME - 1)
            })
            .collect();
        PrimePoint {
            seed,
            index,
            residues,
        }
    }

    /// A point with explicitly chosen residues (each reduced mod `PRIME`).
    pub fn from_residues(residues: Vec<u64>) -> Self {
        PrimePoint {
            seed: 0,
            index: 0,
            residues: residues.into_iter().map(|r| r % PRIME).collect(),
        }
    }

    /// Number of variables this point covers.
    pub fn num_vars(&self) -> usize {
        self.residues.len()
    }

    /// Residue assigned to the variable at `idx`.
    pub fn residue(&self, idx: usize) -> u64 {
        self.residues[idx]
    }

    /// Replaces the residue at `idx` (used to pin a variable to a value).
    pub fn set_residue(&mut self, idx: usize, value: u64) {
        self.residues[idx] = value % PRIME;
    }

    /// The seed this point was drawn from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The index of this point within its seed's stream.
    pub fn index(&self) -> u64 {
        self.index
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_is_mersenne_61() {
        assert_eq!(PRIME, 2305843009213693951);
    }

    #[test]
    fn mulm_agrees_with_u128_reference() {
        let pairs = [
            (PRIME - 1, PRIME - 1),
            (123456789123456789, 987654321987654321 % PRIME),
            (1, PRIME - 1),
            (0, 42),
        ];
        for (a, b) in pairs {
            let expect = ((a as u128 * b as u128) % PRIME as u128) as u64;
            assert_eq!(mulm(a, b), expect);
        }
    }

    #[test]
    fn fermat_inverse() {
        for a in [2u64, 3, 12345, PRIME - 2] {
            let inv = invm(a).unwrap();
            assert_eq!(mulm(a, inv), 1);
        }
        assert!(invm(0).is_none());
    }

    #[test]
    fn signed_power_inverts() {
        let a = 987654321u64;
        assert_eq!(mulm(powm_signed(a, -3), powm(a, 3)), 1);
    }

    #[test]
    fn points_are_deterministic_and_nonzero() {
        let vars = VarTable::standard();
        let p1 = PrimePoint::sample(&vars, 7, 0);
        let p2 = PrimePoint::sample(&vars, 7, 0);
        let p3 = PrimePoint::sample(&vars, 7, 1);
        let p4 = PrimePoint::sample(&vars, 8, 0);
        assert_eq!(p1.residues, p2.residues);
        assert_ne!(p1.residues, p3.residues);
        assert_ne!(p1.residues, p4.residues);
        for idx in 0..vars.len() {
            assert!(p1.residue(idx) >= 1 && p1.residue(idx) < PRIME);
        }
    }

    #[test]
    fn int_mod_handles_negatives() {
        assert_eq!(int_mod(&BigInt::from(-1)), PRIME - 1);
        assert_eq!(int_mod(&BigInt::from(PRIME)), 0);
    }
}
