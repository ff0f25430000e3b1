//! Vector streaming for mod-p chain checks.
//!
//! Key items:
//! - [`apply_two_slot`]: applies a two-slot operator to a vector over a
//!   tensor product without embedding the operator into the full space.
//! - [`monodromy_apply`] / [`transfer_apply`]: the monodromy and transfer
//!   matrices as vector maps, built from the evaluated per-site factors.
//! - [`eval_factors`] / [`random_mod_vector`]: evaluation and probe-vector
//!   helpers shared by the chain verifiers.
//!
//! A chain on n spin-1/2 sites lives in dimension 2^n, so its transfer
//! matrix has 4^n entries; materializing it mod p is wasteful and the
//! symbolic version is impossible. Probabilistic identity checks only need
//! matrix-times-vector products, and every matrix here is a short product
//! of two-slot factors, so each product costs O(n * total * (w v)^2) word
//! operations instead of O(total^2).

use crate::error::Result;
use crate::scalars::{addm, mulm, Mat, ModMat, PrimePoint, Rng64, PRIME};

/// Applies a `(d1 d2) x (d1 d2)` operator `f` acting on slots `s1` and
/// `s2` of the tensor product with slot dimensions `dims` to the vector
/// `x`, returning the image. `d1 = dims[s1]` indexes the first operator
/// factor and `d2 = dims[s2]` the second.
pub(crate) fn apply_two_slot(
    f: &ModMat,
    dims: &[usize],
    s1: usize,
    s2: usize,
    x: &[u64],
) -> Vec<u64> {
    let total: usize = dims.iter().product();
    debug_assert_eq!(x.len(), total);
    debug_assert!(s1 != s2 && s1 < dims.len() && s2 < dims.len());
    let d1 = dims[s1];
    let d2 = dims[s2];
    debug_assert_eq!(f.rows(), d1 * d2);
    debug_assert_eq!(f.cols(), d1 * d2);
    let stride = |s: usize| -> usize { dims[s + 1..].iter().product() };
    let st1 = stride(s1);
    let st2 = stride(s2);
    // Row-wise nonzero lists keep the inner loop proportional to the
    // factor's sparsity (R-matrices are mostly zero off the weight blocks).
    let mut rows: Vec<Vec<(usize, usize, u64)>> = vec![Vec::new(); d1 * d2];
    for (row, entries) in rows.iter_mut().enumerate() {
        for col in 0..d1 * d2 {
            let val = f.get(row, col);
            if val != 0 {
                entries.push((col / d2, col % d2, val));
            }
        }
    }
    let mut y = vec![0u64; total];
    for (idx, out) in y.iter_mut().enumerate() {
        let digit1 = (idx / st1) % d1;
        let digit2 = (idx / st2) % d2;
        let base = idx - digit1 * st1 - digit2 * st2;
        let mut acc = 0u64;
        for &(i, j, val) in &rows[digit1 * d2 + digit2] {
            acc = addm(acc, mulm(val, x[base + i * st1 + j * st2]));
        }
        *out = acc;
    }
    y
}

/// Applies the monodromy `T = F_1 F_2 ... F_n` to a vector over
/// `W (x) V^n` (length `w * v^n`), where `factors[k]` is the evaluated
/// `(w v) x (w v)` site factor acting on slots `0` and `k + 1`. The
/// rightmost factor acts first.
pub(crate) fn monodromy_apply(
    factors: &[ModMat],
    w: usize,
    v: usize,
    x: &[u64],
) -> Vec<u64> {
    let n = factors.len();
    let mut dims = vec![v; n + 1];
    dims[0] = w;
    let mut cur = x.to_vec();
    for (k, f) in factors.iter().enumerate().rev() {
        cur = apply_two_slot(f, &dims, 0, k + 1, &cur);
    }
    cur
}

/// Applies the transfer matrix `tau = tr_W T` to a vector over `V^n`
/// (length `v^n`): for each auxiliary basis state `a`, the monodromy is
/// applied to `e_a (x) x` and the `a`-th block of the image accumulated.
pub(crate) fn transfer_apply(factors: &[ModMat], w: usize, v: usize, x: &[u64]) -> Vec<u64> {
    let n = factors.len();
    let quantum: usize = v.pow(n as u32);
    debug_assert_eq!(x.len(), quantum);
    let mut out = vec![0u64; quantum];
    let mut big = vec![0u64; w * quantum];
    for a in 0..w {
        big.iter_mut().for_each(|e| *e = 0);
        big[a * quantum..(a + 1) * quantum].copy_from_slice(x);
        let image = monodromy_apply(factors, w, v, &big);
        for (o, &val) in out.iter_mut().zip(&image[a * quantum..(a + 1) * quantum]) {
            *o = addm(*o, val);
        }
    }
    out
}

/// Evaluates a list of symbolic factors at the given prime point.
pub(crate) fn eval_factors(factors: &[Mat], pt: &PrimePoint) -> Result<Vec<ModMat>> {
    factors.iter().map(|f| f.eval_mod(pt)).collect()
}

/// A probe vector with independent uniform components below the prime.
pub(crate) fn random_mod_vector(rng: &mut Rng64, len: usize) -> Vec<u64> {
    (0..len).map(|_| rng.below(PRIME)).collect()
}

/// Derives the probe-vector stream for one check point: mixing the point
/// index in keeps the vectors independent across trial points.
pub(crate) fn probe_rng(pt: &PrimePoint) -> Rng64 {
    Rng64::new(pt.seed() ^ pt.index().wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evalreps::make_uq_sl2_spin;
    use crate::intertwine::{build_intertwiner_system, solve_r};
    use crate::qalgebra::GradationSpec;
    use crate::scalars::{Mat, RatFunc, VarTable};
    use crate::spinchain::build_monodromy;
    use num_rational::Ratio;
    use std::sync::Arc;

    fn vars() -> Arc<VarTable> {
        VarTable::standard()
    }

    fn random_mod_mat(rng: &mut Rng64, n: usize) -> ModMat {
        let mut m = ModMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rng.below(PRIME));
            }
        }
        m
    }

    // ---- two-slot application vs explicit embedding ----

    #[test]
    fn two_slot_application_matches_explicit_embedding() {
        // Slots of mixed sizes [2, 3, 2]; act on slots (0, 2) with a
        // random 4 x 4 operator and compare against the Kronecker
        // embedding f_{02} = sum e_ii' (x) 1_3 (x) e_jj'.
        let mut rng = Rng64::new(0x5712_aa01);
        let dims = [2usize, 3, 2];
        let total: usize = dims.iter().product();
        let f = random_mod_mat(&mut rng, 4);
        let x = random_mod_vector(&mut rng, total);
        let fast = apply_two_slot(&f, &dims, 0, 2, &x);
        let mut embedded = ModMat::zeros(total, total);
        for i in 0..2 {
            for j in 0..2 {
                for ip in 0..2 {
                    for jp in 0..2 {
                        let val = f.get(i * 2 + j, ip * 2 + jp);
                        for m in 0..3 {
                            embedded.set(
                                i * 6 + m * 2 + j,
                                ip * 6 + m * 2 + jp,
                                val,
                            );
                        }
                    }
                }
            }
        }
        assert_eq!(fast, embedded.apply(&x));
    }

    #[test]
    fn swapped_slot_order_transposes_the_factor_roles() {
        // Acting on (2, 0) must treat the first operator factor as the
        // last tensor slot.
        let mut rng = Rng64::new(0x5712_aa02);
        let dims = [2usize, 2, 2];
        let f = random_mod_mat(&mut rng, 4);
        let x = random_mod_vector(&mut rng, 8);
        // Swap the roles by conjugating with the (d1 d2) swap.
        let mut swapped = ModMat::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                for ip in 0..2 {
                    for jp in 0..2 {
                        swapped.set(j * 2 + i, jp * 2 + ip, f.get(i * 2 + j, ip * 2 + jp));
                    }
                }
            }
        }
        assert_eq!(
            apply_two_slot(&f, &dims, 2, 0, &x),
            apply_two_slot(&swapped, &dims, 0, 2, &x)
        );
    }

    // ---- streamed monodromy vs symbolic chain ----

    #[test]
    fn streamed_application_matches_symbolic_monodromy_and_transfer() {
        let v = vars();
        let rho = make_uq_sl2_spin(Ratio::new(1, 2)).unwrap();
        let grad = GradationSpec::homogeneous(rho.cartan());
        let r = solve_r(&build_intertwiner_system(&rho, &rho, &grad).unwrap()).unwrap();
        let inhom = [
            RatFunc::one(&v),
            RatFunc::var_pow(&v, "t", 2).unwrap(),
        ];
        let chain = build_monodromy(&r, 2, &inhom).unwrap();
        let pt = PrimePoint::sample(&v, 0xfeed_0001, 3);
        let factors = eval_factors(chain.site_factor_list(), &pt).unwrap();
        let mut rng = probe_rng(&pt);

        let x_big = random_mod_vector(&mut rng, 8);
        let t_mod = chain.monodromy().unwrap().eval_mod(&pt).unwrap();
        assert_eq!(
            monodromy_apply(&factors, 2, 2, &x_big),
            t_mod.apply(&x_big)
        );

        let x_small = random_mod_vector(&mut rng, 4);
        let tau_mod = chain.transfer().unwrap().eval_mod(&pt).unwrap();
        assert_eq!(
            transfer_apply(&factors, 2, 2, &x_small),
            tau_mod.apply(&x_small)
        );
    }

    #[test]
    fn streamed_transfer_handles_nontrivial_aux_dimension() {
        // A fake 3 x 2 "R-matrix" exercises the w != v index arithmetic:
        // take a random integer 6 x 6 factor on (W, V) and compare against
        // the embedded product for a 2-site chain.
        let v = vars();
        let mut rng = Rng64::new(0x5712_aa03);
        let mut sym = Mat::zeros(&v, 6, 6);
        for i in 0..6 {
            for j in 0..6 {
                sym.set(i, j, RatFunc::from_int(&v, rng.range_i64(-5, 5)));
            }
        }
        let dims = [3usize, 2, 2];
        let f1 = sym.embed_on_slots(&dims, &[0, 1]);
        let f2 = sym.embed_on_slots(&dims, &[0, 2]);
        let tau = f1.mul(&f2).partial_trace_first(3);
        let pt = PrimePoint::sample(&v, 0xfeed_0002, 0);
        let factor = sym.eval_mod(&pt).unwrap();
        let factors = vec![factor.clone(), factor];
        let x = random_mod_vector(&mut rng, 4);
        assert_eq!(
            transfer_apply(&factors, 3, 2, &x),
            tau.eval_mod(&pt).unwrap().apply(&x)
        );
    }
}
