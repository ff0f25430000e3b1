//! Sparse multivariate Laurent polynomials with integer coefficients.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vectors, compared
//! lexicographically in variable-table order. The map never holds a zero
//! coefficient, so structural equality is exact arithmetic equality and the
//! printed form is canonical: terms appear in descending lexicographic
//! exponent order, each as `coeff * var^exp * ...` with explicit coefficient
//! and exponents.
//!
//! Key items:
//! * [`LaurentPoly`] with ring operations, exponent shifts, derivatives
//! * [`Exponents`], the exponent-vector type
//! * modular evaluation via [`LaurentPoly::eval_mod`]

use super::modp::{self, PrimePoint};
use super::vartable::{assert_same_table, VarTable};
use crate::error::Result;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::{smallvec, SmallVec};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exponent vector, one signed entry per table variable.
pub type Exponents = SmallVec<[i32; 16]>;

/// A sparse Laurent polynomial over a shared [`VarTable`].
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    // ---- constructors ----

    /// The zero polynomial.
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(vars: &Arc<VarTable>, c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Self::zero_expo(vars), c);
        }
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The named variable to the first power.
    pub fn var(vars: &Arc<VarTable>, name: &str) -> Result<Self> {
        Self::var_pow(vars, name, 1)
    }

    /// The named variable raised to an integer (possibly negative) power.
    pub fn var_pow(vars: &Arc<VarTable>, name: &str, exp: i32) -> Result<Self> {
        let idx = vars.require(name)?;
        let mut expo = Self::zero_expo(vars);
        expo[idx] = exp;
        Ok(Self::monomial(vars, BigInt::one(), expo))
    }

    /// A single-term polynomial `coeff * x^expo`.
    pub fn monomial(vars: &Arc<VarTable>, coeff: impl Into<BigInt>, expo: Exponents) -> Self {
        assert_eq!(expo.len(), vars.len(), "exponent vector length mismatch");
        let c: BigInt = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(expo, c);
        }
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// Builds from raw `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms(
        vars: &Arc<VarTable>,
        pairs: impl IntoIterator<Item = (Exponents, BigInt)>,
    ) -> Self {
        let mut out = Self::zero(vars);
        for (e, c) in pairs {
            out.add_term(e, c);
        }
        out
    }

    pub(crate) fn zero_expo(vars: &Arc<VarTable>) -> Exponents {
        smallvec![0; vars.len()]
    }

    // ---- accessors ----

    /// The variable table this polynomial lives over.
    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant polynomial `1`.
    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// If the polynomial is constant (including zero), its value.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&x| x == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Iterates over `(exponents, coefficient)` in ascending lexicographic order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// The lexicographically largest term (used as the division leading
    /// term), if any.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of the lexicographically largest term, zero for the zero poly.
    pub fn leading_coeff(&self) -> BigInt {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of the first term in canonical (ascending lexicographic)
    /// order; zero for the zero polynomial. Sign conventions key off this.
    pub fn head_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .next()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Componentwise minimum exponent over all terms (zeros for the zero poly).
    pub fn min_exponents(&self) -> Exponents {
        self.extreme_exponents(true)
    }

    /// Componentwise maximum exponent over all terms (zeros for the zero poly).
    pub fn max_exponents(&self) -> Exponents {
        self.extreme_exponents(false)
    }

    fn extreme_exponents(&self, min: bool) -> Exponents {
        let mut out: Option<Exponents> = None;
        for e in self.terms.keys() {
            match &mut out {
                None => out = Some(e.clone()),
                Some(acc) => {
                    for (a, &b) in acc.iter_mut().zip(e.iter()) {
                        if (min && b < *a) || (!min && b > *a) {
                            *a = b;
                        }
                    }
                }
            }
        }
        out.unwrap_or_else(|| Self::zero_expo(&self.vars))
    }

    /// Degree of the variable at `idx`: maximum minus minimum exponent over
    /// the terms, zero when the variable is absent.
    pub fn degree_span(&self, idx: usize) -> i64 {
        if self.is_zero() {
            return 0;
        }
        let lo = self.min_exponents()[idx] as i64;
        let hi = self.max_exponents()[idx] as i64;
        hi - lo
    }

    /// True when the variable at `idx` appears with a nonzero exponent.
    pub fn depends_on(&self, idx: usize) -> bool {
        self.terms.keys().any(|e| e[idx] != 0)
    }

    /// Total-degree bound of the associated ordinary polynomial obtained by
    /// clearing the componentwise minimum exponents. Used for probabilistic
    /// identity-test failure bounds.
    pub fn total_degree_bound(&self) -> u64 {
        if self.is_zero() {
            return 0;
        }
        let min = self.min_exponents();
        self.terms
            .keys()
            .map(|e| {
                e.iter()
                    .zip(min.iter())
                    .map(|(&x, &m)| (x as i64 - m as i64) as u64)
                    .sum::<u64>()
            })
            .max()
            .unwrap_or(0)
    }

    // ---- term-level mutation (internal) ----

    pub(crate) fn add_term(&mut self, expo: Exponents, coeff: BigInt) {
        assert_eq!(expo.len(), self.vars.len(), "exponent vector length mismatch");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    // ---- ring operations ----

    /// Sum of two polynomials.
    pub fn add(&self, other: &Self) -> Self {
        assert_same_table(&self.vars, &other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &Self) -> Self {
        assert_same_table(&self.vars, &other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Self) -> Self {
        assert_same_table(&self.vars, &other.vars);
        let mut out = Self::zero(&self.vars);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        // Iterate over the smaller operand in the outer loop.
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let mut e = ea.clone();
                for (x, &y) in e.iter_mut().zip(eb.iter()) {
                    *x += y;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by an integer.
    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.clone(), k * c))
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Multiplies by the monomial `x^shift` (exponent shift).
    pub fn mul_monomial(&self, shift: &Exponents) -> Self {
        assert_eq!(shift.len(), self.vars.len());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                for (x, &s) in e2.iter_mut().zip(shift.iter()) {
                    *x += s;
                }
                (e2, c.clone())
            })
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        result
    }

    /// Formal partial derivative with respect to the variable at `idx`.
    /// Laurent terms differentiate as `c x^e -> c e x^(e-1)`.
    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[idx];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            out.add_term(e2, c * BigInt::from(k));
        }
        out
    }

    /// Renames a variable: every exponent of `from` moves onto `to`.
    pub fn rename_var(&self, from: usize, to: usize) -> Self {
        if from == to {
            return self.clone();
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[to] += e2[from];
            e2[from] = 0;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Substitutes an integer value for the variable at `idx`.
    /// Requires all exponents of that variable to be nonnegative unless the
    /// value is `1` or `-1`.
    pub fn substitute_int(&self, idx: usize, value: &BigInt) -> Result<Self> {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[idx];
            let factor = if k >= 0 {
                value.pow(k as u32)
            } else if value.is_one() {
                BigInt::one()
            } else if (-value).is_one() {
                if k % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                }
            } else if value.is_zero() {
                return Err(crate::error::Error::ZeroDivisor);
            } else {
                return Err(crate::error::Error::BadArgs(format!(
                    "cannot substitute integer {value} for a variable with negative exponent {k}"
                )));
            };
            let mut e2 = e.clone();
            e2[idx] = 0;
            out.add_term(e2, c * factor);
        }
        Ok(out)
    }

    // ---- integer content and sign ----

    /// Greatest common divisor of all coefficients (nonnegative; zero for
    /// the zero polynomial).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`; panics when not exactly divisible.
    pub fn div_int_exact(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero(), "division by zero integer");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let (q, r) = num_integer::Integer::div_rem(c, d);
                assert!(r.is_zero(), "integer content division must be exact");
                (e.clone(), q)
            })
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    // ---- modular evaluation ----

    /// Evaluates modulo the working prime at a sampled point. Negative
    /// exponents use Fermat inversion; sampled residues are never zero.
    pub fn eval_mod(&self, pt: &PrimePoint) -> u64 {
        assert_eq!(
            pt.num_vars(),
            self.vars.len(),
            "point dimension must match variable table"
        );
        let mut acc: u64 = 0;
        for (e, c) in &self.terms {
            let mut m = modp::int_mod(c);
            for (idx, &k) in e.iter().enumerate() {
                if k != 0 {
                    m = modp::mulm(m, modp::powm_signed(pt.residue(idx), k as i64));
                }
            }
            acc = modp::addm(acc, m);
        }
        acc
    }
}

// ---- operator sugar on references ----

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

// ---- canonical printing ----

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms in ascending lexicographic exponent order
    /// (variable-table order, e.g. `3*t^-2*z^1 - 1` since the exponent
    /// vector of `t^-2*z` precedes the zero vector), each printed as
    /// `coeff * v^e * ...` with the coefficient and all nonzero exponents
    /// explicit, joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{mag}")?;
            for (idx, &k) in e.iter().enumerate() {
                if k != 0 {
                    write!(f, "*{}^{}", self.vars.name(idx), k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse::parse_poly;

    fn table() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn p(s: &str) -> LaurentPoly {
        parse_poly(&table(), s).unwrap()
    }

    // ---- construction and canonical form ----

    #[test]
    fn zero_and_one() {
        let v = table();
        assert!(LaurentPoly::zero(&v).is_zero());
        assert!(LaurentPoly::one(&v).is_one());
        assert_eq!(LaurentPoly::zero(&v).to_string(), "0");
        assert_eq!(LaurentPoly::one(&v).to_string(), "1");
    }

    #[test]
    fn cancellation_removes_terms() {
        // (t + t^-1) - (t + t^-1) must be structurally zero.
        let a = p("1*t^1 + 1*t^-1");
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn display_orders_terms_ascending_lex() {
        // The exponent vector of t^-2*z^1 is (-2, 1, ...), which precedes
        // the zero vector of the constant term.
        let q = p("-1 + 3*t^-2*z^1");
        assert_eq!(q.to_string(), "3*t^-2*z^1 - 1");
        let r = p("1*z^2 - 1");
        assert_eq!(r.to_string(), "-1 + 1*z^2");
    }

    #[test]
    fn negative_head_coefficient_prints_attached_sign() {
        let q = p("-2*z^-3 + 1");
        assert_eq!(q.to_string(), "-2*z^-3 + 1");
        assert_eq!(p("-2*z^3 + 1").to_string(), "1 - 2*z^3");
    }

    // ---- arithmetic ----

    #[test]
    fn multiplication_expands() {
        // (z - 1)(z + 1) = z^2 - 1
        let a = p("1*z^1 - 1");
        let b = p("1*z^1 + 1");
        assert_eq!(&a * &b, p("1*z^2 - 1"));
    }

    #[test]
    fn laurent_multiplication_cancels_exponents() {
        let a = p("1*z^-1");
        let b = p("1*z^1");
        assert!((&a * &b).is_one());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = p("1*t^1 + 1*t^-1");
        let mut acc = LaurentPoly::one(a.vars());
        for _ in 0..5 {
            acc = &acc * &a;
        }
        assert_eq!(a.pow(5), acc);
    }

    // ---- derivative ----

    #[test]
    fn derivative_of_laurent_term() {
        // d/dz (z + z^-1) = 1 - z^-2
        let a = p("1*z^1 + 1*z^-1");
        let idx = table().index_of("z").unwrap();
        assert_eq!(a.derivative(idx), p("1 - 1*z^-2"));
    }

    #[test]
    fn derivative_product_rule_spot_check() {
        let a = p("1*z^2 + 1*t^1");
        let b = p("1*z^-1 - 2");
        let idx = table().index_of("z").unwrap();
        let lhs = (&a * &b).derivative(idx);
        let rhs = &(&a.derivative(idx) * &b) + &(&a * &b.derivative(idx));
        assert_eq!(lhs, rhs);
    }

    // ---- structure helpers ----

    #[test]
    fn min_max_exponents_and_degree_bound() {
        let a = p("1*t^2*z^-3 + 5*t^-1");
        let zi = table().index_of("z").unwrap();
        let ti = table().index_of("t").unwrap();
        assert_eq!(a.min_exponents()[zi], -3);
        assert_eq!(a.max_exponents()[zi], 0);
        assert_eq!(a.min_exponents()[ti], -1);
        assert_eq!(a.max_exponents()[ti], 2);
        assert_eq!(a.degree_span(zi), 3);
        // Cleared poly: t^3 + 5*z^3; total degree bound 3.
        assert_eq!(a.total_degree_bound(), 3);
    }

    #[test]
    fn rename_var_moves_exponents() {
        let a = p("1*z^2 + 1*z^-1");
        let from = table().index_of("z").unwrap();
        let to = table().index_of("z1").unwrap();
        assert_eq!(a.rename_var(from, to), p("1*z1^2 + 1*z1^-1"));
    }

    #[test]
    fn int_content_and_exact_division() {
        let a = p("6*z^1 - 9");
        assert_eq!(a.int_content(), BigInt::from(3));
        assert_eq!(a.div_int_exact(&BigInt::from(3)), p("2*z^1 - 3"));
    }

    #[test]
    fn substitute_int_at_one() {
        let a = p("1*t^2*z^1 + 1*t^-2");
        let ti = table().index_of("t").unwrap();
        let b = a.substitute_int(ti, &BigInt::one()).unwrap();
        assert_eq!(b, p("1*z^1 + 1"));
    }
}
