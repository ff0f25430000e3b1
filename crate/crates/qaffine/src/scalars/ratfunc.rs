//! Rational functions as canonical numerator/denominator pairs.
//!
//! Canonical form, maintained by every operation:
//! * numerator and denominator share no polynomial factor (full gcd
//!   reduction on construction);
//! * the denominator carries no monomial factor: its minimum exponent in
//!   every variable is zero (monomial units live in the numerator);
//! * the integer content of numerator and denominator is jointly 1 and the
//!   denominator's leading coefficient is positive;
//! * zero is `0 / 1`.
//!
//! Equal values therefore have equal representations, and the printed form
//! (`num` or `(num)/(den)`) is a canonical string.

use super::gcd::{div_exact, poly_gcd};
use super::laurent::{Exponents, LaurentPoly};
use super::modp::{self, PrimePoint};
use super::vartable::{assert_same_table, VarTable};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use std::fmt;
use std::sync::Arc;

/// A rational function in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    // ---- constructors ----

    /// Builds `num / den`, normalizing to canonical form.
    /// Fails with `zero-divisor` when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        assert_same_table(num.vars(), den.vars());
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let vars = num.vars().clone();
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: LaurentPoly::one(&vars),
            });
        }
        // Remove the common polynomial factor (content included).
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                div_exact(&num, &g).expect("gcd divides numerator"),
                div_exact(&den, &g).expect("gcd divides denominator"),
            )
        };
        // Move the denominator's monomial factor into the numerator.
        let dmin = den.min_exponents();
        if dmin.iter().any(|&m| m != 0) {
            let shift: Exponents = dmin.iter().map(|&m| -m).collect();
            den = den.mul_monomial(&shift);
            num = num.mul_monomial(&shift);
        }
        // Joint integer content 1, denominator leading coefficient positive.
        let c = num.int_content().gcd(&den.int_content());
        if !c.is_one() {
            num = num.div_int_exact(&c);
            den = den.div_int_exact(&c);
        }
        if den.head_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    /// Wraps a polynomial (denominator 1). Already canonical.
    pub fn from_poly(num: LaurentPoly) -> Self {
        let den = LaurentPoly::one(num.vars());
        RatFunc { num, den }
    }

    /// The zero function.
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        RatFunc {
            num: LaurentPoly::zero(vars),
            den: LaurentPoly::one(vars),
        }
    }

    /// The constant 1.
    pub fn one(vars: &Arc<VarTable>) -> Self {
        RatFunc {
            num: LaurentPoly::one(vars),
            den: LaurentPoly::one(vars),
        }
    }

    /// An integer constant.
    pub fn from_int(vars: &Arc<VarTable>, n: impl Into<BigInt>) -> Self {
        RatFunc {
            num: LaurentPoly::constant(vars, n),
            den: LaurentPoly::one(vars),
        }
    }

    /// The rational constant `p / q`.
    pub fn rational(vars: &Arc<VarTable>, p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        Self::new(
            LaurentPoly::constant(vars, p),
            LaurentPoly::constant(vars, q),
        )
    }

    /// The named variable.
    pub fn var(vars: &Arc<VarTable>, name: &str) -> Result<Self> {
        Ok(Self::from_poly(LaurentPoly::var(vars, name)?))
    }

    /// The named variable to an integer power (negative allowed).
    pub fn var_pow(vars: &Arc<VarTable>, name: &str, exp: i32) -> Result<Self> {
        Ok(Self::from_poly(LaurentPoly::var_pow(vars, name, exp)?))
    }

    // ---- accessors ----

    /// Numerator (canonical).
    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator (canonical).
    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// The variable table.
    pub fn vars(&self) -> &Arc<VarTable> {
        self.num.vars()
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for the constant 1.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// If constant, returns `(p, q)` with the value `p / q`, `q > 0`.
    pub fn as_constant(&self) -> Option<(BigInt, BigInt)> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(p), Some(q)) => Some((p, q)),
            _ => None,
        }
    }

    /// Sum of total-degree bounds of numerator and denominator; an upper
    /// bound used to track probabilistic identity-test failure bounds.
    pub fn degree_bound(&self) -> u64 {
        self.num.total_degree_bound() + self.den.total_degree_bound()
    }

    // ---- arithmetic ----

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = poly_gcd(&self.den, &other.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                div_exact(&self.den, &g).expect("gcd divides"),
                div_exact(&other.den, &g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &db) + &(&other.num * &da);
        let den = &(&self.den * &db);
        Self::new(num, den.clone()).expect("denominator stays nonzero")
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Product, with cross-reduction before the multiplications.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.vars());
        }
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = if g1.is_one() {
            self.num.clone()
        } else {
            div_exact(&self.num, &g1).expect("gcd divides")
        };
        let d2 = if g1.is_one() {
            other.den.clone()
        } else {
            div_exact(&other.den, &g1).expect("gcd divides")
        };
        let n2 = if g2.is_one() {
            other.num.clone()
        } else {
            div_exact(&other.num, &g2).expect("gcd divides")
        };
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            div_exact(&self.den, &g2).expect("gcd divides")
        };
        Self::new(&n1 * &n2, &d1 * &d2).expect("denominator stays nonzero")
    }

    /// Multiplicative inverse; `zero-divisor` on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Quotient; `zero-divisor` when `other` is zero.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative powers invert first (`zero-divisor` on zero).
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.vars());
        let mut b = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Formal derivative with respect to the variable at `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let num = &(&self.num.derivative(idx) * &self.den) - &(&self.num * &self.den.derivative(idx));
        let den = &self.den * &self.den;
        Self::new(num, den).expect("denominator stays nonzero")
    }

    /// Renames a variable (moves every exponent of `from` onto `to`).
    pub fn rename_var(&self, from: usize, to: usize) -> Self {
        Self::new(self.num.rename_var(from, to), self.den.rename_var(from, to))
            .expect("renaming preserves nonzero denominators")
    }

    /// Substitutes a rational function for the variable at `idx`.
    /// Fails with `zero-divisor` when the substituted denominator vanishes
    /// identically or when a negative power of zero would be needed.
    pub fn substitute(&self, idx: usize, value: &Self) -> Result<Self> {
        let n = substitute_poly(&self.num, idx, value)?;
        let d = substitute_poly(&self.den, idx, value)?;
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        n.div(&d)
    }

    /// Evaluates modulo the working prime; `bad-point` when the denominator
    /// vanishes at the point.
    pub fn eval_mod(&self, pt: &PrimePoint) -> Result<u64> {
        let d = self.den.eval_mod(pt);
        let dinv = modp::invm(d).ok_or(Error::BadPoint)?;
        Ok(modp::mulm(self.num.eval_mod(pt), dinv))
    }

    /// Asserts the canonical-form invariants (used by tests).
    pub fn assert_canonical(&self) {
        assert!(!self.den.is_zero(), "denominator must be nonzero");
        if self.num.is_zero() {
            assert!(self.den.is_one(), "zero must be 0/1");
            return;
        }
        let dmin = self.den.min_exponents();
        assert!(
            dmin.iter().all(|&m| m == 0),
            "denominator must carry no monomial factor"
        );
        assert!(
            self.den.head_coeff().is_positive(),
            "denominator head coefficient must be positive"
        );
        let g = poly_gcd(&self.num, &self.den);
        assert!(
            g.is_one(),
            "numerator and denominator must be coprime, found gcd {g}"
        );
        let c = self.num.int_content().gcd(&self.den.int_content());
        assert!(c.is_one(), "joint integer content must be 1");
    }
}

/// Substitutes `value` for the variable at `idx` inside a polynomial,
/// producing a rational function. Horner evaluation over the coefficient
/// polynomials; negative exponents use the inverse of `value`.
fn substitute_poly(p: &LaurentPoly, idx: usize, value: &RatFunc) -> Result<RatFunc> {
    if !p.depends_on(idx) {
        return Ok(RatFunc::from_poly(p.clone()));
    }
    let vars = p.vars().clone();
    // Collect coefficients by the exponent of the substituted variable.
    let min = p
        .iter_terms()
        .map(|(e, _)| e[idx])
        .min()
        .expect("nonzero polynomial");
    let max = p.iter_terms().map(|(e, _)| e[idx]).max().unwrap();
    let width = (max - min + 1) as usize;
    let mut coeffs = vec![LaurentPoly::zero(&vars); width];
    for (e, c) in p.iter_terms() {
        let mut e2 = e.clone();
        let k = e2[idx];
        e2[idx] = 0;
        coeffs[(k - min) as usize].add_term(e2, c.clone());
    }
    // Horner from the top coefficient down.
    let mut acc = RatFunc::zero(&vars);
    for c in coeffs.iter().rev() {
        acc = acc.mul(value).add(&RatFunc::from_poly(c.clone()));
    }
    if min != 0 {
        acc = acc.mul(&value.pow(min as i64)?);
    }
    Ok(acc)
}

// ---- operator sugar on references ----

impl std::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: Self) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl std::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: Self) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl std::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: Self) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl fmt::Display for RatFunc {
    /// Canonical string: `num` when the denominator is 1, else
    /// `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse::{parse_poly, parse_ratfunc};
    use crate::scalars::random::{random_ratfunc, Rng64};

    fn table() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(&table(), s).unwrap()
    }

    // ---- normalization ----

    #[test]
    fn reduces_common_factors() {
        // (z^2 - 1)/(z - 1) -> z + 1
        let r = rf("(z^2 - 1)/(z - 1)");
        assert_eq!(r, rf("z + 1"));
        assert_eq!(r.to_string(), "1 + 1*z^1");
        r.assert_canonical();
    }

    #[test]
    fn denominator_monomials_move_to_numerator() {
        let v = table();
        let r = RatFunc::new(
            parse_poly(&v, "1").unwrap(),
            parse_poly(&v, "z^2").unwrap(),
        )
        .unwrap();
        assert_eq!(r.to_string(), "1*z^-2");
        assert!(r.denom().is_one());
        r.assert_canonical();
    }

    #[test]
    fn sign_and_content_normalization() {
        let v = table();
        let r = RatFunc::new(
            parse_poly(&v, "2*z").unwrap(),
            parse_poly(&v, "-4*z + 4").unwrap(),
        )
        .unwrap();
        // The shared content 2 is removed and the denominator head (its
        // constant term) is already positive, so no sign flip happens.
        assert_eq!(r.to_string(), "(1*z^1)/(2 - 2*z^1)");
        r.assert_canonical();
    }

    #[test]
    fn zero_is_zero_over_one() {
        let v = table();
        let r = RatFunc::new(
            LaurentPoly::zero(&v),
            parse_poly(&v, "z^5 - 3").unwrap(),
        )
        .unwrap();
        assert!(r.is_zero());
        assert!(r.denom().is_one());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let v = table();
        let err = RatFunc::new(LaurentPoly::one(&v), LaurentPoly::zero(&v)).unwrap_err();
        assert_eq!(err.to_string(), "zero-divisor: division by zero");
    }

    // ---- arithmetic ----

    #[test]
    fn add_sub_roundtrip_is_canonical() {
        let mut rng = Rng64::new(0xbeef);
        let v = table();
        let active = [0usize, 1];
        for _ in 0..200 {
            let a = random_ratfunc(&v, &mut rng, 3, 2, 5, &active);
            let b = random_ratfunc(&v, &mut rng, 3, 2, 5, &active);
            let back = &(&a + &b) - &b;
            assert_eq!(back, a, "(a + b) - b must equal a exactly");
            back.assert_canonical();
        }
    }

    #[test]
    fn field_identities() {
        let a = rf("(z + 1)/(t - 1)");
        let b = rf("(z - 1)/(t + 1)");
        assert_eq!(a.mul(&b).div(&b).unwrap(), a);
        assert!(a.sub(&a).is_zero());
        assert!(a.div(&a).unwrap().is_one());
        let err = a.div(&RatFunc::zero(a.vars())).unwrap_err();
        assert_eq!(err.to_string(), "zero-divisor: division by zero");
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let a = rf("z + 1");
        let p = a.pow(-2).unwrap();
        assert_eq!(p, rf("1/(z^2 + 2*z + 1)"));
        assert!(a.pow(0).unwrap().is_one());
    }

    // ---- calculus and substitution ----

    #[test]
    fn derivative_example() {
        // d/dz (z + z^-1) = 1 - z^-2
        let a = rf("z + z^-1");
        let zi = table().index_of("z").unwrap();
        assert_eq!(a.derivative(zi), rf("1 - z^-2"));
    }

    #[test]
    fn quotient_rule_spot_check() {
        let a = rf("(z^2 + t)/(z - 1)");
        let zi = table().index_of("z").unwrap();
        // Derivative of (z^2+t)/(z-1) is ((2z)(z-1) - (z^2+t))/(z-1)^2.
        let expect = rf("(z^2 - 2*z - t)/(z^2 - 2*z + 1)");
        assert_eq!(a.derivative(zi), expect);
    }

    #[test]
    fn substitute_inverse_spectral_point() {
        // z -> 1/z in (z - 1)/(z + 1) gives (1 - z)/(1 + z).
        let a = rf("(z - 1)/(z + 1)");
        let zi = table().index_of("z").unwrap();
        let inv_z = rf("1/z");
        let s = a.substitute(zi, &inv_z).unwrap();
        assert_eq!(s, rf("(1 - z)/(z + 1)"));
        s.assert_canonical();
    }

    #[test]
    fn substitute_detects_vanishing_denominator() {
        let a = rf("1/(z - 1)");
        let zi = table().index_of("z").unwrap();
        let err = a.substitute(zi, &RatFunc::one(a.vars())).unwrap_err();
        assert_eq!(err.to_string(), "zero-divisor: division by zero");
    }

    #[test]
    fn substitution_composes_with_arithmetic() {
        let mut rng = Rng64::new(0x51ab);
        let v = table();
        let zi = v.index_of("z").unwrap();
        let active = [0usize, 1];
        let value = rf("(t + 1)/(t - 1)");
        for _ in 0..40 {
            let a = random_ratfunc(&v, &mut rng, 2, 1, 3, &active);
            let b = random_ratfunc(&v, &mut rng, 2, 1, 3, &active);
            let (Ok(sa), Ok(sb)) = (a.substitute(zi, &value), b.substitute(zi, &value)) else {
                continue;
            };
            let lhs = (&a * &b).substitute(zi, &value).unwrap();
            assert_eq!(lhs, &sa * &sb);
        }
    }

    // ---- modular evaluation ----

    #[test]
    fn eval_mod_is_a_homomorphism() {
        let mut rng = Rng64::new(0xfeed);
        let v = table();
        let active = [0usize, 1, 4];
        for i in 0..60 {
            let a = random_ratfunc(&v, &mut rng, 3, 2, 5, &active);
            let b = random_ratfunc(&v, &mut rng, 3, 2, 5, &active);
            let pt = PrimePoint::sample(&v, 99, i);
            let (ea, eb) = match (a.eval_mod(&pt), b.eval_mod(&pt)) {
                (Ok(x), Ok(y)) => (x, y),
                _ => continue,
            };
            let sum = &a + &b;
            let prod = &a * &b;
            if let Ok(es) = sum.eval_mod(&pt) {
                assert_eq!(es, modp::addm(ea, eb));
            }
            if let Ok(ep) = prod.eval_mod(&pt) {
                assert_eq!(ep, modp::mulm(ea, eb));
            }
        }
    }

    #[test]
    fn eval_mod_flags_bad_points() {
        let v = table();
        let a = rf("1/(z - 1)");
        let zi = v.index_of("z").unwrap();
        let mut pt = PrimePoint::sample(&v, 1, 0);
        pt.set_residue(zi, 1);
        assert_eq!(a.eval_mod(&pt).unwrap_err().to_string(),
            "bad-point: denominator vanished at the sampled point");
    }

    // ---- printing round-trip ----

    #[test]
    fn print_parse_roundtrip_random() {
        let mut rng = Rng64::new(0xc0de);
        let v = table();
        let active = [0usize, 1, 2, 3];
        for _ in 0..200 {
            let a = random_ratfunc(&v, &mut rng, 4, 3, 9, &active);
            let s = a.to_string();
            let b = parse_ratfunc(&v, &s).unwrap();
            assert_eq!(a, b, "round-trip failed for {s}");
        }
    }
}
