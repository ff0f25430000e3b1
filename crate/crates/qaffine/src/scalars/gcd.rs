//! Exact division and greatest common divisors of Laurent polynomials.
//!
//! Monomials are units in the Laurent ring, so gcds are computed on the
//! associated ordinary polynomials obtained by clearing componentwise
//! minimum exponents. Results are returned as canonical associates:
//! minimum exponent zero in every variable and positive head coefficient.
//!
//! The multivariate gcd is layered for speed without giving up exactness:
//! a certified modular pre-test recognizes coprime pairs, an
//! integer-evaluation heuristic reconstructs candidate divisors that are
//! then verified by exact division, and a primitive polynomial remainder
//! sequence serves as the unconditional fallback.

use super::laurent::{Exponents, LaurentPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Shifts all minimum exponents to zero and makes the head coefficient
/// (first term in canonical order) positive. The result generates the same
/// ideal up to units of the Laurent ring.
pub fn canonical_assoc(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let min = p.min_exponents();
    let shift: Exponents = min.iter().map(|&m| -m).collect();
    let mut q = p.mul_monomial(&shift);
    if q.head_coeff().is_negative() {
        q = q.neg();
    }
    q
}

/// Exact division: returns `a / b` when `b` divides `a` over the integers,
/// `None` otherwise. Division by zero returns `None`.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(a.clone());
    }
    let vars = a.vars().clone();
    // Clear minimum exponents; remember the net monomial shift.
    let min_a = a.min_exponents();
    let min_b = b.min_exponents();
    let shift_a: Exponents = min_a.iter().map(|&m| -m).collect();
    let shift_b: Exponents = min_b.iter().map(|&m| -m).collect();
    let mut rem = a.mul_monomial(&shift_a);
    let b0 = b.mul_monomial(&shift_b);
    let (bl_e, bl_c) = b0.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
    let mut quot = LaurentPoly::zero(&vars);
    while !rem.is_zero() {
        let (rl_e, rl_c) = {
            let (e, c) = rem.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        // Leading exponents must dominate componentwise in the cleared ring.
        let mut qe: Exponents = Exponents::with_capacity(rl_e.len());
        for (&re, &be) in rl_e.iter().zip(bl_e.iter()) {
            if re < be {
                return None;
            }
            qe.push(re - be);
        }
        let (qc, r) = rl_c.div_rem(&bl_c);
        if !r.is_zero() {
            return None;
        }
        let qterm = LaurentPoly::monomial(&vars, qc, qe);
        rem = &rem - &(&qterm * &b0);
        quot = &quot + &qterm;
    }
    // a / b = (cleared a / cleared b) * x^(min_a - min_b).
    let net: Exponents = min_a
        .iter()
        .zip(min_b.iter())
        .map(|(&ma, &mb)| ma - mb)
        .collect();
    Some(quot.mul_monomial(&net))
}

/// Degree in the variable at `idx` of a min-cleared polynomial.
fn deg_in(p: &LaurentPoly, idx: usize) -> i32 {
    p.iter_terms().map(|(e, _)| e[idx]).max().unwrap_or(0)
}

/// Splits a min-cleared polynomial into coefficient polynomials of the
/// variable at `idx`, ascending from exponent zero.
fn coeffs_in(p: &LaurentPoly, idx: usize) -> Vec<LaurentPoly> {
    let vars = p.vars().clone();
    let deg = deg_in(p, idx);
    let mut out = vec![LaurentPoly::zero(&vars); (deg + 1) as usize];
    for (e, c) in p.iter_terms() {
        let k = e[idx];
        debug_assert!(k >= 0, "coefficient extraction requires cleared exponents");
        let mut e2 = e.clone();
        e2[idx] = 0;
        out[k as usize].add_term(e2, c.clone());
    }
    out
}

/// Reassembles coefficient polynomials into `sum coeffs[k] * v^k`.
fn assemble(coeffs: &[LaurentPoly], idx: usize) -> LaurentPoly {
    let vars = coeffs
        .first()
        .map(|c| c.vars().clone())
        .expect("assemble needs at least one coefficient");
    let mut out = LaurentPoly::zero(&vars);
    for (k, c) in coeffs.iter().enumerate() {
        let mut shift = LaurentPoly::zero_expo(&vars);
        shift[idx] = k as i32;
        out = &out + &c.mul_monomial(&shift);
    }
    out
}

/// Content with respect to one variable: the gcd of the coefficient
/// polynomials. Input must be min-cleared; the result is free of `idx`.
fn content_in(p: &LaurentPoly, idx: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(p.vars());
    for c in coeffs_in(p, idx) {
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Pseudo-remainder of min-cleared `f` by `g` in the variable at `idx`.
/// Multiplies through by powers of the leading coefficient of `g`, so the
/// result stays over the integers.
fn pseudo_rem(f: &LaurentPoly, g: &LaurentPoly, idx: usize) -> LaurentPoly {
    let mut r = coeffs_in(f, idx);
    let gc = coeffs_in(g, idx);
    let dg = gc.len() - 1;
    let lc_g = gc[dg].clone();
    loop {
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
        if r.len() <= dg {
            break;
        }
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lc_g;
        }
        let shift = dr - dg;
        for (j, gj) in gc.iter().enumerate() {
            r[j + shift] = &r[j + shift] - &(&lead * gj);
        }
    }
    if r.is_empty() {
        LaurentPoly::zero(f.vars())
    } else {
        assemble(&r, idx)
    }
}

/// Greatest common divisor. The result is the canonical associate: minimum
/// exponents zero, positive head coefficient, integer content equal to the
/// gcd of the operands' contents. Monomials are units, so the gcd of a
/// monomial with anything is a constant.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return canonical_assoc(b);
    }
    if b.is_zero() {
        return canonical_assoc(a);
    }
    let a = canonical_assoc(a);
    let b = canonical_assoc(b);
    let ca = a.int_content();
    let cb = b.int_content();
    let g_int = ca.gcd(&cb);
    if a.num_terms() == 1 || b.num_terms() == 1 {
        return LaurentPoly::constant(a.vars(), g_int);
    }
    // Certified modular pre-test: when the gcd provably involves no shared
    // variable, it is the constant gcd of the integer contents.
    if certified_coprime(&a, &b) {
        return LaurentPoly::constant(a.vars(), g_int);
    }
    let ap = a.div_int_exact(&ca);
    let bp = b.div_int_exact(&cb);
    let gp = match gcd_heuristic(&ap, &bp) {
        Some(g) => g,
        None => gcd_primitive(ap, bp),
    };
    canonical_assoc(&gp.mul_int(&g_int))
}

/// Largest absolute coefficient value.
fn height(p: &LaurentPoly) -> BigInt {
    p.iter_terms()
        .map(|(_, c)| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// Evaluation-reconstruction gcd of two primitive min-cleared polynomials.
/// Each variable is evaluated at a large integer, the remaining gcd is
/// computed recursively down to an integer gcd, and the result is lifted
/// back by reading off balanced base-xi digits. A candidate is accepted
/// only if it divides both inputs exactly; greatestness then follows by
/// certifying the cofactors coprime, or by recursing on them when the
/// certificate is inconclusive. Returns None when no evaluation point
/// yields a verified result, in which case the caller must fall back.
fn gcd_heuristic(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    for attempt in 0..6u32 {
        let Some(c) = heu_candidate(a, b, attempt) else {
            continue;
        };
        if c.as_constant().is_some() {
            // A constant candidate claims coprimality, which the modular
            // pre-test could not certify; try another evaluation point.
            continue;
        }
        let (Some(abar), Some(bbar)) = (div_exact(a, &c), div_exact(b, &c)) else {
            continue;
        };
        if certified_coprime(&canonical_assoc(&abar), &canonical_assoc(&bbar)) {
            return Some(c);
        }
        // The candidate is a common divisor but possibly not the greatest:
        // whatever is missing is exactly the gcd of the cofactors.
        return Some(canonical_assoc(&(&c * &poly_gcd(&abar, &bbar))));
    }
    None
}

/// One evaluation-reconstruction pass. Picks the highest active variable,
/// substitutes an integer beyond twice the smaller coefficient height,
/// recurses on the remaining variables, and lifts the result back through
/// balanced digits. Returns None when the evaluation degenerates or the
/// lifted degree exceeds the bound shared by both inputs.
fn heu_candidate(a: &LaurentPoly, b: &LaurentPoly, attempt: u32) -> Option<LaurentPoly> {
    let vars = a.vars().clone();
    let active = (0..vars.len())
        .rev()
        .find(|&v| deg_in(a, v) > 0 || deg_in(b, v) > 0);
    let Some(v) = active else {
        let ca = a.as_constant().expect("no active variable means constant");
        let cb = b.as_constant().expect("no active variable means constant");
        return Some(LaurentPoly::constant(&vars, ca.gcd(&cb)));
    };
    let base = BigInt::from(2) * height(a).min(height(b)) + BigInt::from(2);
    let xi = base << attempt;
    let a1 = a.substitute_int(v, &xi).ok()?;
    let b1 = b.substitute_int(v, &xi).ok()?;
    if a1.is_zero() || b1.is_zero() {
        return None;
    }
    let gamma = heu_candidate(&a1, &b1, attempt)?;
    let cap = deg_in(a, v).min(deg_in(b, v));
    let lifted = lift_balanced_digits(&gamma, v, &xi, cap)?;
    let content = lifted.int_content();
    Some(lifted.div_int_exact(&content))
}

/// Rewrites `gamma` as a polynomial in the variable at `v` by peeling
/// balanced base-xi digits from its coefficients: the digit polynomials
/// d_k satisfy gamma = sum d_k * xi^k with every coefficient of d_k in
/// (-xi/2, xi/2], and the lift is sum d_k * v^k. Fails when more than
/// `cap` digits appear, since the gcd degree in `v` cannot exceed it.
fn lift_balanced_digits(
    gamma: &LaurentPoly,
    v: usize,
    xi: &BigInt,
    cap: i32,
) -> Option<LaurentPoly> {
    let vars = gamma.vars().clone();
    let half = xi >> 1;
    let mut rest = gamma.clone();
    let mut out = LaurentPoly::zero(&vars);
    let mut k = 0i32;
    while !rest.is_zero() {
        if k > cap {
            return None;
        }
        let mut next = LaurentPoly::zero(&vars);
        for (e, c) in rest.iter_terms() {
            let mut digit = c.mod_floor(xi);
            if digit > half {
                digit -= xi;
            }
            if !digit.is_zero() {
                let mut e2 = e.clone();
                e2[v] += k;
                out.add_term(e2, digit.clone());
            }
            let q = (c - digit) / xi;
            if !q.is_zero() {
                next.add_term(e.clone(), q);
            }
        }
        rest = next;
        k += 1;
    }
    if out.is_zero() {
        None
    } else {
        Some(out)
    }
}

/// Tries to certify that the gcd of two min-cleared polynomials contains no
/// variable. For each variable active in both operands, the polynomials are
/// projected to univariate images modulo the working prime at points that
/// preserve the top degree; a degree-zero univariate gcd proves the true
/// gcd is free of that variable. Returns false when certification fails
/// (never wrongly certifies).
fn certified_coprime(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    use crate::scalars::modp::PrimePoint;
    let vars = a.vars();
    for v in 0..vars.len() {
        let da = deg_in(a, v);
        let db = deg_in(b, v);
        if da == 0 || db == 0 {
            continue;
        }
        let mut certified = false;
        for attempt in 0..4u64 {
            let pt = PrimePoint::sample(vars, 0x6cd5_eed0 ^ (v as u64), attempt);
            let ia = univariate_image(a, v, &pt);
            let ib = univariate_image(b, v, &pt);
            // The projection must not drop the top degree, or the bound on
            // the gcd degree is lost.
            if ia.len() as i32 - 1 != da || ib.len() as i32 - 1 != db {
                continue;
            }
            if univariate_gcd_degree(ia, ib) == 0 {
                certified = true;
                break;
            }
            // A nontrivial image gcd may be real; stop probing this variable.
            break;
        }
        if !certified {
            return false;
        }
    }
    true
}

/// Projects a min-cleared polynomial to a univariate polynomial in the
/// variable at `v` by evaluating all other variables at the point.
/// Coefficients ascend from exponent zero; trailing zeros are trimmed.
fn univariate_image(
    p: &LaurentPoly,
    v: usize,
    pt: &crate::scalars::modp::PrimePoint,
) -> Vec<u64> {
    use crate::scalars::modp;
    let deg = deg_in(p, v);
    let mut out = vec![0u64; (deg + 1) as usize];
    for (e, c) in p.iter_terms() {
        let mut m = modp::int_mod(c);
        for (idx, &k) in e.iter().enumerate() {
            if idx != v && k != 0 {
                m = modp::mulm(m, modp::powm_signed(pt.residue(idx), k as i64));
            }
        }
        out[e[v] as usize] = modp::addm(out[e[v] as usize], m);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Degree of the gcd of two univariate polynomials over the prime field.
fn univariate_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    use crate::scalars::modp;
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lb = *b.last().unwrap();
        let inv = modp::invm(lb).expect("leading coefficient is nonzero");
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let factor = modp::mulm(*a.last().unwrap(), inv);
            for (i, &bc) in b.iter().enumerate() {
                let idx = i + shift;
                a[idx] = modp::subm(a[idx], modp::mulm(factor, bc));
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Gcd of two primitive min-cleared polynomials; the result is primitive.
fn gcd_primitive(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly {
    let vars = a.vars().clone();
    if a.is_one() || b.is_one() || a.as_constant().is_some() || b.as_constant().is_some() {
        // Primitive constants are units.
        return LaurentPoly::one(&vars);
    }
    if a == b {
        return a;
    }
    // Pick the first variable on which both depend; when the supports are
    // split, the gcd divides a content, so recurse on it.
    let n = vars.len();
    let mut shared: Option<usize> = None;
    for v in 0..n {
        let da = deg_in(&a, v) > 0;
        let db = deg_in(&b, v) > 0;
        if da && db {
            shared = Some(v);
            break;
        }
    }
    let v = match shared {
        Some(v) => v,
        None => {
            // No shared variable. Any common divisor is free of every
            // variable of a (it divides b too), hence divides the content
            // of a with respect to each of its variables; iterate down to
            // the constant case.
            for v in 0..n {
                if deg_in(&a, v) > 0 {
                    return gcd_primitive(content_in(&a, v), b);
                }
            }
            unreachable!("non-constant polynomial with no active variable");
        }
    };
    let cont_a = content_in(&a, v);
    let cont_b = content_in(&b, v);
    let prim_a = div_exact(&a, &cont_a).expect("content divides");
    let prim_b = div_exact(&b, &cont_b).expect("content divides");
    let g_cont = poly_gcd(&cont_a, &cont_b);

    let (mut r0, mut r1) = if deg_in(&prim_a, v) >= deg_in(&prim_b, v) {
        (prim_a, prim_b)
    } else {
        (prim_b, prim_a)
    };
    let g_prim = loop {
        let r = pseudo_rem(&r0, &r1, v);
        if r.is_zero() {
            break r1;
        }
        if deg_in(&r, v) == 0 {
            // Coprime in v: only a content-level factor can survive, and
            // both sides are v-primitive, so the v-dependent gcd is 1.
            break LaurentPoly::one(&vars);
        }
        let cont = content_in(&r, v);
        let r = div_exact(&r, &cont).expect("content divides");
        r0 = r1;
        r1 = r;
    };
    // Strip any content the remainder sequence introduced.
    let cont = content_in(&g_prim, v);
    let g_prim = if cont.is_one() || deg_in(&g_prim, v) == 0 {
        g_prim
    } else {
        div_exact(&g_prim, &cont).expect("content divides")
    };
    let c = g_prim.int_content();
    let g_prim = if c.is_one() || c.is_zero() {
        g_prim
    } else {
        g_prim.div_int_exact(&c)
    };
    canonical_assoc(&(&g_prim * &g_cont))
}

/// Least common multiple, as a canonical associate; zero if either side is.
pub fn poly_lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero(a.vars());
    }
    let g = poly_gcd(a, b);
    let q = div_exact(a, &g).expect("gcd divides");
    canonical_assoc(&(&q * b))
}

/// True when `b` divides `a` exactly over the integers.
pub fn divides(b: &LaurentPoly, a: &LaurentPoly) -> bool {
    if b.is_zero() {
        return a.is_zero();
    }
    div_exact(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse::parse_poly;
    use crate::scalars::random::Rng64;
    use crate::scalars::vartable::VarTable;
    use std::sync::Arc;

    fn table() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn p(s: &str) -> LaurentPoly {
        parse_poly(&table(), s).unwrap()
    }

    // ---- exact division ----

    #[test]
    fn div_exact_univariate() {
        let a = p("z^2 - 1");
        let b = p("z - 1");
        assert_eq!(div_exact(&a, &b).unwrap(), p("z + 1"));
        assert!(div_exact(&b, &a).is_none());
    }

    #[test]
    fn div_exact_laurent_shift() {
        // (z^-1 - z^-3) / (z^-2) = z - z^-1
        let a = p("z^-1 - z^-3");
        let b = p("z^-2");
        assert_eq!(div_exact(&a, &b).unwrap(), p("z - z^-1"));
    }

    #[test]
    fn div_exact_requires_integer_coefficients() {
        assert!(div_exact(&p("z"), &p("2")).is_none());
        assert_eq!(div_exact(&p("2*z"), &p("2")).unwrap(), p("z"));
    }

    // ---- gcd ----

    #[test]
    fn gcd_univariate() {
        // The canonical associate has a positive head coefficient, so the
        // shared factor z - 1 is reported as 1 - z.
        assert_eq!(poly_gcd(&p("z^2 - 1"), &p("z - 1")), p("1 - z"));
        assert_eq!(poly_gcd(&p("z^2 - 1"), &p("z + 2")), p("1"));
    }

    #[test]
    fn gcd_with_monomial_is_constant() {
        // Monomials are units in the Laurent ring, so only the integer
        // content survives.
        assert_eq!(poly_gcd(&p("2*z"), &p("4*z^2")), p("2"));
        assert_eq!(poly_gcd(&p("2*z"), &p("4*z^2 + 2*z")), p("2"));
        assert_eq!(poly_gcd(&p("6"), &p("9")), p("3"));
    }

    #[test]
    fn gcd_multivariate() {
        // (t*z - 1) is the shared factor.
        let c = p("t*z - 1");
        let a = &c * &p("z + t");
        let b = &c * &p("z - t");
        assert_eq!(poly_gcd(&a, &b), canonical_assoc(&c));
    }

    #[test]
    fn gcd_of_laurent_inputs_is_cleared() {
        let a = p("z^-1 - z^-2");
        let b = p("z - 1");
        // Both are associates of 1 - z.
        assert_eq!(poly_gcd(&a, &b), p("1 - z"));
    }

    #[test]
    fn gcd_sign_normalization() {
        assert_eq!(poly_gcd(&p("-z + 1"), &p("-z^2 + 1")), p("1 - z"));
        assert_eq!(poly_gcd(&p("z - 1"), &p("z^2 - 1")), p("1 - z"));
    }

    #[test]
    fn gcd_disjoint_variables() {
        assert_eq!(poly_gcd(&p("2*t + 2"), &p("2*z")), p("2"));
    }

    #[test]
    fn lcm_product_relation() {
        let a = p("2*z^2 - 2");
        let b = p("4*z - 4");
        let g = poly_gcd(&a, &b);
        let l = poly_lcm(&a, &b);
        assert_eq!(&g * &l, canonical_assoc(&(&a * &b)));
    }

    // ---- randomized property: common factors are recovered ----

    #[test]
    fn random_products_share_planted_factor() {
        let vars = table();
        let mut rng = Rng64::new(0x9af1);
        let active = [0usize, 1, 4];
        for _ in 0..40 {
            let c = crate::scalars::random::random_laurent(&vars, &mut rng, 3, 2, 4, &active);
            if c.is_zero() || c.as_constant().is_some() {
                continue;
            }
            let a = crate::scalars::random::random_laurent(&vars, &mut rng, 3, 2, 4, &active);
            let b = crate::scalars::random::random_laurent(&vars, &mut rng, 3, 2, 4, &active);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let g = poly_gcd(&(&a * &c), &(&b * &c));
            assert!(
                divides(&canonical_assoc(&c), &g) || divides(&c, &g),
                "planted factor {c} must divide gcd {g}"
            );
        }
    }
}
