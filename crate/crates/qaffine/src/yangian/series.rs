//! Truncated spectral expansions of matrices of rational functions.
//!
//! Key items:
//! - [`SeriesMatrix`]: a matrix-valued polynomial in the inverse of one
//!   variable, truncated at a fixed order.
//! - [`SeriesMatrix::expand`]: the expansion of a rational-function matrix
//!   around the point at infinity, exact in every other variable.
//! - [`monodromy_expansion`]: the expansion of an additive-shift chain's
//!   monodromy, with order-by-order re-derivation of its factorization and
//!   exchange structure.
//!
//! The monodromy of an additive-shift chain is a formal power series
//! `T(u) = 1 + T_1 u^{-1} + T_2 u^{-2} + ...` whose coefficients generate
//! the chain's symmetry algebra; the series viewpoint is what connects the
//! finite chain back to the infinite-dimensional algebra of levels. Each
//! entry is expanded by clearing the spectral variable to a power series
//! quotient and running the standard division recurrence, so coefficients
//! are exact rational functions of the remaining variables.

use crate::error::{Error, Result};
use crate::intertwine::RFlavor;
use crate::report::Report;
use crate::scalars::{LaurentPoly, Mat, RatFunc, VarTable};
use crate::spinchain::TransferObjects;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Largest order [`monodromy_expansion`] will expand to.
pub const MAX_EXPANSION_ORDER: usize = 4;

/// A matrix power series in the inverse of one variable: coefficient `k`
/// multiplies the `-k`-th power. Coefficients never involve the expansion
/// variable.
#[derive(Debug, Clone)]
pub struct SeriesMatrix {
    coeffs: Vec<Mat>,
    var: String,
}

/// Splits `poly * var^(-shift)` into buckets by the power of `var`:
/// `poly = sum_j bucket_j var^(shift - j)`, returning `bucket_0..bucket_order`
/// as polynomials with the variable's exponent zeroed.
fn bucket_by_inverse_power(
    poly: &LaurentPoly,
    var_idx: usize,
    shift: i32,
    order: usize,
) -> Vec<LaurentPoly> {
    let vars = poly.vars().clone();
    let mut buckets: Vec<Vec<_>> = vec![Vec::new(); order + 1];
    for (expo, coeff) in poly.iter_terms() {
        let j = shift - expo[var_idx];
        debug_assert!(j >= 0, "bucket index must not be negative");
        let j = j as usize;
        if j <= order {
            let mut cleared = expo.clone();
            cleared[var_idx] = 0;
            buckets[j].push((cleared, coeff.clone()));
        }
    }
    buckets
        .into_iter()
        .map(|terms| LaurentPoly::from_terms(&vars, terms))
        .collect()
}

/// Expands one rational function around the point at infinity of `var_idx`
/// through the requested order.
fn expand_entry(f: &RatFunc, var_idx: usize, order: usize) -> Result<Vec<RatFunc>> {
    let vars = f.numer().vars().clone();
    if f.is_zero() {
        return Ok(vec![RatFunc::zero(&vars); order + 1]);
    }
    let den_top = f.denom().max_exponents()[var_idx];
    let num_top = f.numer().max_exponents()[var_idx];
    if num_top > den_top {
        return Err(Error::BadArgs(format!(
            "the entry grows like the variable to the power {}; \
             only functions bounded at infinity expand",
            num_top - den_top
        )));
    }
    let p = bucket_by_inverse_power(f.numer(), var_idx, den_top, order);
    let q = bucket_by_inverse_power(f.denom(), var_idx, den_top, order);
    let q0 = RatFunc::from_poly(q[0].clone());
    debug_assert!(
        !q0.is_zero(),
        "the top denominator bucket is the leading coefficient, hence nonzero"
    );
    let q0_inv = q0.inv()?;
    let mut coeffs: Vec<RatFunc> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = RatFunc::from_poly(p[k].clone());
        for i in 1..=k {
            acc = acc.sub(&RatFunc::from_poly(q[i].clone()).mul(&coeffs[k - i]));
        }
        coeffs.push(acc.mul(&q0_inv));
    }
    Ok(coeffs)
}

impl SeriesMatrix {
    /// Expands every entry of the matrix around the point at infinity of
    /// the named variable, keeping powers `0` through `-order`.
    ///
    /// Errors: `unknown-var` for a name outside the table, `bad-args` when
    /// an entry has a pole at infinity (numerator degree exceeding the
    /// denominator's in that variable).
    pub fn expand(mat: &Mat, var: &str, order: usize) -> Result<Self> {
        let var_idx = mat.vars().require(var)?;
        let mut coeffs =
            vec![Mat::zeros(mat.vars(), mat.rows(), mat.cols()); order + 1];
        for i in 0..mat.rows() {
            for j in 0..mat.cols() {
                let entry = expand_entry(mat.get(i, j), var_idx, order)?;
                for (k, c) in entry.into_iter().enumerate() {
                    coeffs[k].set(i, j, c);
                }
            }
        }
        Ok(Self {
            coeffs,
            var: var.to_string(),
        })
    }

    /// The truncation order: coefficients `0..=order()` are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The expansion variable's name.
    pub fn var(&self) -> &str {
        &self.var
    }

    /// Row and column count of every coefficient.
    pub fn dims(&self) -> (usize, usize) {
        (self.coeffs[0].rows(), self.coeffs[0].cols())
    }

    /// The variable table shared by all coefficients.
    pub fn vars(&self) -> &Arc<VarTable> {
        self.coeffs[0].vars()
    }

    /// Coefficient of the `-k`-th power. Errors with `order-too-high`
    /// beyond the truncation.
    pub fn coeff(&self, k: usize) -> Result<&Mat> {
        self.coeffs.get(k).ok_or_else(|| {
            Error::OrderTooHigh(format!(
                "coefficient {k} was requested from a series truncated at {}",
                self.order()
            ))
        })
    }

    /// Truncated product: the convolution of the two coefficient lists,
    /// kept through the smaller of the two orders.
    ///
    /// Errors: `bad-composition` for mismatched shapes or expansion
    /// variables.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.var != other.var {
            return Err(Error::BadComposition(format!(
                "cannot multiply series in {} by series in {}",
                self.var, other.var
            )));
        }
        let (_, k1) = self.dims();
        let (r2, _) = other.dims();
        if k1 != r2 {
            return Err(Error::BadComposition(format!(
                "cannot multiply {:?} by {:?}",
                self.dims(),
                other.dims()
            )));
        }
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = Mat::zeros(self.vars(), self.dims().0, other.dims().1);
            for i in 0..=k {
                acc = acc.add(&self.coeffs[i].mul(&other.coeffs[k - i]));
            }
            coeffs.push(acc);
        }
        Ok(Self {
            coeffs,
            var: self.var.clone(),
        })
    }

    /// Applies a shape-preserving map to every coefficient.
    fn map_coeffs(&self, f: impl Fn(&Mat) -> Mat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(f).collect(),
            var: self.var.clone(),
        }
    }
}

/// Expands the chain's symbolic monodromy through the requested order and
/// re-derives, coefficient by coefficient, the structure that makes the
/// expansion meaningful: the zeroth coefficient is the identity, the
/// series factors into the per-site series (the coproduct property of the
/// generating matrix entries), and the exchange relation holds order by
/// order in both inverse spectral points.
///
/// Errors: `bad-composition` for a non-additive chain, `order-too-high`
/// past [`MAX_EXPANSION_ORDER`], `too-large` when the chain was deferred.
pub fn monodromy_expansion(
    chain: &TransferObjects,
    order: usize,
) -> Result<(SeriesMatrix, Report)> {
    if chain.r().flavor() != RFlavor::Rational {
        return Err(Error::BadComposition(
            "only additive-shift chains expand around infinity; \
             multiplicative chains have no distinguished series point"
                .into(),
        ));
    }
    if order > MAX_EXPANSION_ORDER {
        return Err(Error::OrderTooHigh(format!(
            "expansion order {order} exceeds the cap {MAX_EXPANSION_ORDER}"
        )));
    }
    let t = chain.monodromy()?;
    let var = chain.spectral_var();
    let series = SeriesMatrix::expand(t, var, order)?;
    let n = chain.n();
    let w = chain.aux_dim();
    let v = chain.site_dim();
    let dims = chain.slot_dims();
    let total: usize = dims.iter().product();
    let mut report = Report::new(format!(
        "spectral expansion of the {n}-site monodromy through order {order}"
    ));

    // The constant term of every site factor is the identity, so the
    // monodromy's must be as well.
    let head_ok = series.coeff(0)?.sub(&Mat::identity(series.vars(), total)).is_zero();
    report.record_detail(
        "expansion-order0",
        head_ok,
        if head_ok {
            String::new()
        } else {
            "the constant term differs from the identity".to_string()
        },
    );

    // Factorization: the monodromy series equals the ordered product of
    // the embedded per-site series. Order 1 says the first-level charges
    // add over sites; higher orders interleave lower levels site by site,
    // which is the coproduct structure of the expansion coefficients.
    let mut product: Option<SeriesMatrix> = None;
    for (i, factor) in chain.site_factor_list().iter().enumerate() {
        let embedded = factor.embed_on_slots(&dims, &[0, i + 1]);
        let fs = SeriesMatrix::expand(&embedded, var, order)?;
        product = Some(match product {
            None => fs,
            Some(acc) => acc.mul(&fs)?,
        });
    }
    let product = product.expect("chains have at least one site");
    for k in 1..=order {
        let diff = series.coeff(k)?.sub(product.coeff(k)?);
        match diff.first_nonzero() {
            None => report.record(&format!("coproduct-order[{k}]"), true),
            Some((r, c, val)) => report.record_detail(
                &format!("coproduct-order[{k}]"),
                false,
                format!("entry ({r}, {c}) differs by {val}"),
            ),
        }
    }

    // Exchange relation, order by order: with x = 1/z1 and y = 1/z2 the
    // cleared auxiliary matrix (z1 - z2) R(z1 - z2) is (z1 - z2) 1 - P,
    // a polynomial, so both sides of the exchange relation are double
    // series in (x, y) with a finite shift to index -1 from the z1, z2
    // prefactors. Truncation leaves orders up to the expansion order
    // incomplete only past order - 1, so indices -1..order-1 compare.
    report.absorb("", series_exchange_report(&series, w, v, n, order)?);

    Ok((series, report))
}

/// Double-series exchange check used by [`monodromy_expansion`].
fn series_exchange_report(
    series: &SeriesMatrix,
    w: usize,
    v: usize,
    n: usize,
    order: usize,
) -> Result<Report> {
    let vars = series.vars().clone();
    let mut dims = vec![v; n + 2];
    dims[0] = w;
    dims[1] = w;
    let mut report = Report::new("order-by-order exchange relation");

    // Embed the series coefficients onto the doubled auxiliary space.
    let t1 = series.map_coeffs(|m| {
        let slots: Vec<usize> = std::iter::once(0).chain(2..n + 2).collect();
        m.embed_on_slots(&dims, &slots)
    });
    let t2 = series.map_coeffs(|m| {
        let slots: Vec<usize> = std::iter::once(1).chain(2..n + 2).collect();
        m.embed_on_slots(&dims, &slots)
    });

    // Double series sum_{k,l} M_{k,l} x^k y^l as a sparse key map.
    type Double = BTreeMap<(i32, i32), Mat>;
    let add_into = |acc: &mut Double, key: (i32, i32), m: &Mat| {
        acc.entry(key)
            .and_modify(|e| *e = e.add(m))
            .or_insert_with(|| m.clone());
    };
    let mut forward: Double = BTreeMap::new();
    let mut backward: Double = BTreeMap::new();
    for k in 0..=order {
        for l in 0..=order {
            let fw = t1.coeff(k)?.mul(t2.coeff(l)?);
            let bw = t2.coeff(l)?.mul(t1.coeff(k)?);
            add_into(&mut forward, (k as i32, l as i32), &fw);
            add_into(&mut backward, (k as i32, l as i32), &bw);
        }
    }

    // Multiply by the cleared auxiliary matrix x^{-1} - y^{-1} - P on the
    // left of the forward product and on the right of the backward one.
    let p_emb = Mat::swap_factors(&vars, w, w).embed_on_slots(&dims, &[0, 1]);
    let shifted = |src: &Double, left: bool| -> Double {
        let mut out: Double = BTreeMap::new();
        for ((k, l), m) in src {
            add_into(&mut out, (*k - 1, *l), m);
            add_into(&mut out, (*k, *l - 1), &m.neg());
            let swapped = if left { p_emb.mul(m) } else { m.mul(&p_emb) };
            add_into(&mut out, (*k, *l), &swapped.neg());
        }
        out
    };
    let lhs = shifted(&forward, true);
    let rhs = shifted(&backward, false);

    let limit = order as i32 - 1;
    let mut compared = 0usize;
    let mut ok = true;
    let mut detail = String::new();
    for key in lhs.keys().chain(rhs.keys()) {
        if key.0 > limit || key.1 > limit {
            continue;
        }
        let zero = Mat::zeros(&vars, dims.iter().product(), dims.iter().product());
        let a = lhs.get(key).unwrap_or(&zero);
        let b = rhs.get(key).unwrap_or(&zero);
        compared += 1;
        if ok {
            if let Some((r, c, val)) = a.sub(b).first_nonzero() {
                ok = false;
                detail = format!(
                    "order ({}, {}): entry ({r}, {c}) differs by {val}",
                    key.0, key.1
                );
            }
        }
    }
    if ok {
        detail = format!("{compared} double-series orders agree");
    }
    report.record_detail("rtt-series", ok, detail);
    Ok(report)
}
