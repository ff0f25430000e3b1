//! Deformed integers, factorials, and binomial coefficients.
//!
//! Key items:
//! - [`q_int`]: the deformed integer [n]_b as a Laurent polynomial in the base.
//! - [`q_factorial`]: the product [n]_b [n-1]_b ... [1]_b.
//! - [`q_binomial`]: the deformed binomial coefficient, exact in the base.
//!
//! Every function takes an arbitrary rational-function base b, so the same
//! code serves the rank-dependent bases b = t^(2 d_i) that appear in the
//! higher-rank Serre relations. The deformed integer is computed as the
//! balanced power sum b^(n-1) + b^(n-3) + ... + b^(1-n) rather than as the
//! quotient (b^n - b^-n)/(b - b^-1), so it is total: no division happens
//! and the base b = 1 is fine (where the quotient form would be 0/0).

use crate::error::{Error, Result};
use crate::scalars::RatFunc;

/// The deformed integer [n]_b = b^(n-1) + b^(n-3) + ... + b^(1-n).
///
/// Odd in n, so [-n]_b = -[n]_b and [0]_b = 0. At b = 1 it reduces to the
/// ordinary integer n.
pub fn q_int(n: i64, base: &RatFunc) -> Result<RatFunc> {
    if n < 0 {
        return Ok(q_int(-n, base)?.neg());
    }
    let mut acc = RatFunc::zero(base.vars());
    for k in 0..n {
        acc = acc.add(&base.pow(n - 1 - 2 * k)?);
    }
    Ok(acc)
}

/// The deformed factorial [n]_b! = [n]_b [n-1]_b ... [1]_b, with [0]_b! = 1.
///
/// Errors with "bad-args" for negative n.
pub fn q_factorial(n: i64, base: &RatFunc) -> Result<RatFunc> {
    if n < 0 {
        return Err(Error::BadArgs(format!(
            "factorial of negative integer {n}"
        )));
    }
    let mut acc = RatFunc::one(base.vars());
    for k in 1..=n {
        acc = acc.mul(&q_int(k, base)?);
    }
    Ok(acc)
}

/// The deformed binomial coefficient [m choose n]_b = [m]!/([n]! [m-n]!).
///
/// Always a Laurent polynomial in the base; the rational-function division
/// reduces to denominator 1. Errors with "bad-args" when n < 0 or n > m.
pub fn q_binomial(m: i64, n: i64, base: &RatFunc) -> Result<RatFunc> {
    if n < 0 || n > m {
        return Err(Error::BadArgs(format!(
            "binomial coefficient ({m} choose {n}) out of range"
        )));
    }
    let num = q_factorial(m, base)?;
    let den = q_factorial(n, base)?.mul(&q_factorial(m - n, base)?);
    num.div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{parse_poly, RatFunc, VarTable};
    use std::sync::Arc;

    fn vars() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn rf(src: &str) -> RatFunc {
        let v = vars();
        let num = parse_poly(&v, src).unwrap();
        RatFunc::from_poly(num)
    }

    // ---- deformed integers ----

    #[test]
    fn small_deformed_integers() {
        let b = rf("1*t^2");
        assert!(q_int(0, &b).unwrap().is_zero());
        assert!(q_int(1, &b).unwrap().is_one());
        assert_eq!(q_int(2, &b).unwrap(), rf("1*t^-2 + 1*t^2"));
        assert_eq!(q_int(3, &b).unwrap(), rf("1*t^-4 + 1 + 1*t^4"));
        assert_eq!(q_int(-3, &b).unwrap(), rf("1*t^-4 + 1 + 1*t^4").neg());
    }

    #[test]
    fn base_one_recovers_ordinary_integers() {
        let one = RatFunc::one(&vars());
        for n in -6_i64..=6 {
            assert_eq!(q_int(n, &one).unwrap(), RatFunc::from_int(&vars(), n));
        }
    }

    // ---- factorials ----

    #[test]
    fn factorial_product_and_negative_rejection() {
        let b = rf("1*t^2");
        assert!(q_factorial(0, &b).unwrap().is_one());
        let expect = q_int(3, &b)
            .unwrap()
            .mul(&q_int(2, &b).unwrap());
        assert_eq!(q_factorial(3, &b).unwrap(), expect);
        let err = q_factorial(-1, &b).unwrap_err();
        assert!(err.to_string().starts_with("bad-args"));
    }

    // ---- binomials ----

    #[test]
    fn binomial_edge_and_middle_values() {
        let b = rf("1*t^2");
        assert!(q_binomial(5, 0, &b).unwrap().is_one());
        assert!(q_binomial(5, 5, &b).unwrap().is_one());
        // (3 choose 1) equals the deformed integer [3].
        assert_eq!(q_binomial(3, 1, &b).unwrap(), q_int(3, &b).unwrap());
        // (4 choose 2) = [4][3]/[2] expanded in the balanced form.
        assert_eq!(
            q_binomial(4, 2, &b).unwrap(),
            rf("1*t^-8 + 1*t^-4 + 2 + 1*t^4 + 1*t^8")
        );
        assert!(q_binomial(3, -1, &b).is_err());
        assert!(q_binomial(3, 4, &b).is_err());
    }

    #[test]
    fn binomials_are_palindromic_in_the_base() {
        // Substituting b -> 1/b fixes every binomial: the balanced power
        // sums are symmetric around exponent zero.
        let v = vars();
        let t_idx = v.index_of("t").unwrap();
        let inv = RatFunc::var_pow(&v, "t", -1).unwrap();
        let b = rf("1*t^2");
        for m in 0..=8_i64 {
            for n in 0..=m {
                let c = q_binomial(m, n, &b).unwrap();
                assert_eq!(c.substitute(t_idx, &inv).unwrap(), c, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn base_one_binomials_are_classical() {
        let one = RatFunc::one(&vars());
        let classical = [[1_i64, 0, 0, 0, 0], [1, 1, 0, 0, 0], [1, 2, 1, 0, 0], [1, 3, 3, 1, 0], [1, 4, 6, 4, 1]];
        for (m, row) in classical.iter().enumerate() {
            for (n, want) in row.iter().enumerate().take(m + 1) {
                assert_eq!(
                    q_binomial(m as i64, n as i64, &one).unwrap(),
                    RatFunc::from_int(&vars(), *want)
                );
            }
        }
    }
}
