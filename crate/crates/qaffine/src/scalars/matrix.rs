//! Dense matrices over the rational-function field, with exact
//! fraction-free elimination.
//!
//! Key items:
//! * [`Mat`]: dense matrix of [`RatFunc`] entries with ring operations,
//!   Kronecker products, slot embeddings, and partial traces
//! * [`nullspace`](Mat::nullspace): exact kernel basis via Bareiss
//!   elimination on a denominator-cleared integer-polynomial matrix
//! * [`ModMat`]: the same shapes evaluated modulo the working prime
//!
//! Rank and nullspace are deterministic: pivots are chosen by scanning
//! columns left to right and picking the candidate row whose entry has the
//! fewest terms (ties broken by row index).

// Index-style loops mirror the row/column arithmetic throughout this file.
#![allow(clippy::needless_range_loop)]

use super::gcd::{div_exact, poly_gcd};
use super::laurent::LaurentPoly;
use super::modp::{self, PrimePoint};
use super::ratfunc::RatFunc;
use super::vartable::{assert_same_table, VarTable};
use crate::error::Result;
use std::fmt;
use std::sync::Arc;

/// A dense `rows x cols` matrix of rational functions.
#[derive(Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
    vars: Arc<VarTable>,
}

impl Mat {
    // ---- constructors ----

    /// The zero matrix.
    pub fn zeros(vars: &Arc<VarTable>, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![RatFunc::zero(vars); rows * cols],
            vars: vars.clone(),
        }
    }

    /// The identity matrix.
    pub fn identity(vars: &Arc<VarTable>, n: usize) -> Self {
        let mut m = Self::zeros(vars, n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one(vars));
        }
        m
    }

    /// Builds entry by entry from a function of `(row, col)`.
    pub fn from_fn(
        vars: &Arc<VarTable>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> RatFunc,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat {
            rows,
            cols,
            data,
            vars: vars.clone(),
        }
    }

    /// The permutation matrix swapping tensor factors of dimensions
    /// `(d1, d2)`: maps `e_i (x) e_j` to `e_j (x) e_i`.
    pub fn swap_factors(vars: &Arc<VarTable>, d1: usize, d2: usize) -> Self {
        let mut m = Self::zeros(vars, d1 * d2, d1 * d2);
        for i in 0..d1 {
            for j in 0..d2 {
                m.set(j * d1 + i, i * d2 + j, RatFunc::one(vars));
            }
        }
        m
    }

    // ---- accessors ----

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The shared variable table.
    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// Entry at `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.data[r * self.cols + c]
    }

    /// Replaces the entry at `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, v: RatFunc) {
        self.data[r * self.cols + c] = v;
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// First nonzero entry in row-major order, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &RatFunc)> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                if !e.is_zero() {
                    return Some((r, c, e));
                }
            }
        }
        None
    }

    /// Largest entrywise degree bound (see [`RatFunc::degree_bound`]).
    pub fn max_degree_bound(&self) -> u64 {
        self.data.iter().map(|e| e.degree_bound()).max().unwrap_or(0)
    }

    // ---- ring operations ----

    /// Matrix sum. Panics on shape mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_same_table(&self.vars, &other.vars);
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a + b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
            vars: self.vars.clone(),
        }
    }

    /// Matrix difference. Panics on shape mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_same_table(&self.vars, &other.vars);
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a - b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
            vars: self.vars.clone(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e.neg()).collect(),
            vars: self.vars.clone(),
        }
    }

    /// Matrix product. Panics when inner dimensions disagree.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        assert_same_table(&self.vars, &other.vars);
        let mut out = Self::zeros(&self.vars, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    /// Scales every entry.
    pub fn scalar_mul(&self, s: &RatFunc) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e.mul(s)).collect(),
            vars: self.vars.clone(),
        }
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product; row/column indices of the result are row-major
    /// pairs `(self index, other index)`.
    pub fn kron(&self, other: &Self) -> Self {
        assert_same_table(&self.vars, &other.vars);
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(&self.vars, rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.vars, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// Trace. Panics unless square.
    pub fn trace(&self) -> RatFunc {
        assert_eq!(self.rows, self.cols, "trace needs a square matrix");
        let mut acc = RatFunc::zero(&self.vars);
        for i in 0..self.rows {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Partial trace over the leading tensor factor: input acts on
    /// `W (x) V` with `dim W = aux_dim`; the result acts on `V`.
    pub fn partial_trace_first(&self, aux_dim: usize) -> Self {
        assert_eq!(self.rows, self.cols, "partial trace needs a square matrix");
        assert_eq!(self.rows % aux_dim, 0, "aux dimension must divide");
        let d = self.rows / aux_dim;
        Self::from_fn(&self.vars, d, d, |i, j| {
            let mut acc = RatFunc::zero(&self.vars);
            for w in 0..aux_dim {
                acc = acc.add(self.get(w * d + i, w * d + j));
            }
            acc
        })
    }

    /// Entrywise map.
    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            vars: self.vars.clone(),
        }
    }

    /// Substitutes a rational function for a variable in every entry.
    pub fn substitute_var(&self, idx: usize, value: &RatFunc) -> Result<Self> {
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(e.substitute(idx, value)?);
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data,
            vars: self.vars.clone(),
        })
    }

    /// Renames a variable in every entry.
    pub fn rename_var(&self, from: usize, to: usize) -> Self {
        self.map(|e| e.rename_var(from, to))
    }

    /// Embeds a matrix acting on a subset of tensor slots into the full
    /// product space, identity elsewhere. `full_dims` lists every slot's
    /// dimension; `my_slots` lists, in order, the slots this matrix's own
    /// tensor factors occupy. Row-major index conventions throughout.
    pub fn embed_on_slots(&self, full_dims: &[usize], my_slots: &[usize]) -> Self {
        let sub_dim: usize = my_slots.iter().map(|&s| full_dims[s]).product();
        assert_eq!(self.rows, sub_dim, "slot dimensions must match matrix size");
        assert_eq!(self.cols, sub_dim, "slot embedding needs a square matrix");
        let n: usize = full_dims.iter().product();
        let others: Vec<usize> = (0..full_dims.len())
            .filter(|s| !my_slots.contains(s))
            .collect();
        let other_dim: usize = others.iter().map(|&s| full_dims[s]).product();

        // Decodes a flat sub-index into digits along `slots`.
        let decode = |mut idx: usize, slots: &[usize]| -> Vec<usize> {
            let mut digits = vec![0usize; slots.len()];
            for (pos, &s) in slots.iter().enumerate().rev() {
                digits[pos] = idx % full_dims[s];
                idx /= full_dims[s];
            }
            digits
        };
        // Encodes per-slot digits into a flat full-space index.
        let encode = |digits: &[usize]| -> usize {
            let mut idx = 0usize;
            for (s, &d) in full_dims.iter().zip(digits.iter()) {
                idx = idx * s + d;
            }
            idx
        };

        let mut out = Self::zeros(&self.vars, n, n);
        for sr in 0..sub_dim {
            for sc in 0..sub_dim {
                let v = self.get(sr, sc);
                if v.is_zero() {
                    continue;
                }
                let row_digits_sub = decode(sr, my_slots);
                let col_digits_sub = decode(sc, my_slots);
                for o in 0..other_dim {
                    let off_digits = decode(o, &others);
                    let mut row_digits = vec![0usize; full_dims.len()];
                    let mut col_digits = vec![0usize; full_dims.len()];
                    for (pos, &s) in my_slots.iter().enumerate() {
                        row_digits[s] = row_digits_sub[pos];
                        col_digits[s] = col_digits_sub[pos];
                    }
                    for (pos, &s) in others.iter().enumerate() {
                        row_digits[s] = off_digits[pos];
                        col_digits[s] = off_digits[pos];
                    }
                    out.set(encode(&row_digits), encode(&col_digits), v.clone());
                }
            }
        }
        out
    }

    // ---- exact linear algebra ----

    /// Clears denominators row by row, returning an integer-polynomial
    /// matrix with the same row space and kernel.
    fn cleared_rows(&self) -> Vec<Vec<LaurentPoly>> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            // Common multiple of the denominators in this row.
            let mut lcm = LaurentPoly::one(&self.vars);
            for c in 0..self.cols {
                let d = self.get(r, c).denom();
                let g = poly_gcd(&lcm, d);
                let extra = div_exact(d, &g).expect("gcd divides");
                lcm = &lcm * &extra;
            }
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                let e = self.get(r, c);
                let factor = div_exact(&lcm, e.denom()).expect("lcm clears the denominator");
                row.push(e.numer() * &factor);
            }
            out.push(row);
        }
        out
    }

    /// Rank over the rational-function field.
    pub fn rank(&self) -> usize {
        let mut rows = self.cleared_rows();
        bareiss(&mut rows, self.cols).len()
    }

    /// Exact kernel basis. Each basis vector is scaled so its first nonzero
    /// coordinate is 1; vectors are ordered by their free column.
    pub fn nullspace(&self) -> Vec<Vec<RatFunc>> {
        let mut rows = self.cleared_rows();
        let pivots = bareiss(&mut rows, self.cols);
        let rank = pivots.len();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set[f] {
                continue;
            }
            let mut x = vec![RatFunc::zero(&self.vars); self.cols];
            x[f] = RatFunc::one(&self.vars);
            // Echelon back-substitution from the lowest pivot row up.
            for k in (0..rank).rev() {
                let pc = pivots[k];
                let mut s = RatFunc::zero(&self.vars);
                for j in (pc + 1)..self.cols {
                    if rows[k][j].is_zero() || x[j].is_zero() {
                        continue;
                    }
                    let a = RatFunc::from_poly(rows[k][j].clone());
                    s = s.add(&a.mul(&x[j]));
                }
                if s.is_zero() {
                    x[pc] = RatFunc::zero(&self.vars);
                } else {
                    let piv = RatFunc::from_poly(rows[k][pc].clone());
                    x[pc] = s.neg().div(&piv).expect("pivot is nonzero");
                }
            }
            // Normalize the first nonzero coordinate to 1.
            if let Some(first) = x.iter().find(|e| !e.is_zero()).cloned() {
                for e in x.iter_mut() {
                    *e = e.div(&first).expect("leading coordinate is nonzero");
                }
            }
            basis.push(x);
        }
        basis
    }

    /// Evaluates every entry at a modular point. `bad-point` when any
    /// denominator vanishes there.
    pub fn eval_mod(&self, pt: &PrimePoint) -> Result<ModMat> {
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(e.eval_mod(pt)?);
        }
        Ok(ModMat {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// Fraction-free Bareiss elimination in place. Returns the pivot columns;
/// on exit the first `rank` rows hold the echelon form.
fn bareiss(rows: &mut [Vec<LaurentPoly>], cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev: Option<LaurentPoly> = None;
    let mut r = 0usize;
    for col in 0..cols {
        if r >= nrows {
            break;
        }
        // Deterministic pivot: fewest terms, ties by row index.
        let mut best: Option<(usize, usize)> = None;
        for i in r..nrows {
            let e = &rows[i][col];
            if e.is_zero() {
                continue;
            }
            let n = e.num_terms();
            if best.map(|(_, bn)| n < bn).unwrap_or(true) {
                best = Some((i, n));
            }
        }
        let Some((pivot_row, _)) = best else {
            continue;
        };
        rows.swap(r, pivot_row);
        for i in (r + 1)..nrows {
            if rows[i][col].is_zero() && rows[i][(col + 1)..].iter().all(|e| e.is_zero()) {
                continue;
            }
            for j in (col + 1)..cols {
                let num = &(&rows[r][col] * &rows[i][j]) - &(&rows[i][col] * &rows[r][j]);
                rows[i][j] = match &prev {
                    None => num,
                    Some(p) => div_exact(&num, p).expect("Bareiss division is exact"),
                };
            }
            rows[i][col] = LaurentPoly::zero(rows[i][col].vars());
        }
        prev = Some(rows[r][col].clone());
        pivots.push(col);
        r += 1;
    }
    pivots
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// ---- matrices over the working prime ----

/// A dense matrix of residues modulo the working prime.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModMat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMat {
    /// The zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ModMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// The identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry accessor.
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    /// Entry setter (reduces mod the prime).
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % modp::PRIME;
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b == 0 {
                        continue;
                    }
                    let idx = r * other.cols + c;
                    out.data[idx] = modp::addm(out.data[idx], modp::mulm(a, b));
                }
            }
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(&a, &b)| modp::subm(a, b))
            .collect();
        ModMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a == 0 {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let v = modp::mulm(a, other.get(r2, c2));
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, v);
                    }
                }
            }
        }
        out
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0u64; self.rows];
        for r in 0..self.rows {
            let mut acc = 0u64;
            for c in 0..self.cols {
                let a = self.data[r * self.cols + c];
                if a != 0 && v[c] != 0 {
                    acc = modp::addm(acc, modp::mulm(a, v[c]));
                }
            }
            out[r] = acc;
        }
        out
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|&x| x != 0)
            .map(|i| (i / self.cols, i % self.cols))
    }

    /// Rank by Gaussian elimination over the prime field.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        for col in 0..cols {
            let mut pivot = None;
            for r in rank..rows {
                if m[r * cols + col] != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            m.swap_chunks(p, rank, cols);
            let inv = modp::invm(m[rank * cols + col]).expect("pivot is nonzero");
            for r in (rank + 1)..rows {
                let factor = modp::mulm(m[r * cols + col], inv);
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = modp::mulm(factor, m[rank * cols + c]);
                    m[r * cols + c] = modp::subm(m[r * cols + c], sub);
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<u64> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for i in 0..width {
            self.swap(a * width + i, b * width + i);
        }
    }
}
