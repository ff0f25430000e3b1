//! Monodromy and transfer matrices for inhomogeneous spin chains.
//!
//! Key items:
//! - [`TransferObjects`]: an n-site chain built from one R-matrix: the
//!   per-site shifted factors, and (when small enough) the symbolic
//!   monodromy `T = R_01 R_02 ... R_0n` over `W (x) V^n` together with its
//!   partial trace, the transfer matrix `tau` over `V^n`.
//! - [`build_monodromy`]: exact symbolic construction, guarded by a
//!   dimension cap.
//! - [`TransferObjects::deferred`]: records the same chain without
//!   materializing the big matrices, for the mod-p streaming verifiers.
//!
//! Spectral-shift convention: the additive shifts `theta - theta_i` of the
//! written product are realized multiplicatively as `z / zeta_i` for
//! trigonometric R-matrices and additively as `u - theta_i` for rational
//! ones. The R-matrix argument here is the plain (unbraided) exchange
//! matrix; a braided matrix composes with the factor swap first.

use crate::error::{Error, Result};
use crate::intertwine::{RFlavor, RMatrix};
use crate::scalars::{Mat, RatFunc};

/// Largest `dim W * dim V^n` for which [`build_monodromy`] materializes the
/// symbolic monodromy by default.
pub const DEFAULT_MAX_SYMBOLIC_DIM: usize = 64;

/// Largest `dim W * dim V^n` a deferred chain accepts; the mod-p streaming
/// verifiers hold one dense vector of this length per auxiliary basis state.
pub const MAX_STREAMING_DIM: usize = 1 << 13;

/// An n-site inhomogeneous chain: auxiliary space W (first factor of the
/// R-matrix), quantum space V (second factor), site shifts, and the
/// monodromy/transfer matrices when built symbolically.
#[derive(Debug, Clone)]
pub struct TransferObjects {
    r: RMatrix,
    n: usize,
    inhom: Vec<RatFunc>,
    site_factors: Vec<Mat>,
    monodromy: Option<Mat>,
    transfer: Option<Mat>,
}

/// Composes the factor swap with a square exchange matrix: `m` becomes
/// `P m` with `P` the transposition of the two tensor factors.
///
/// The intertwiner solvers produce exchange matrices in braid form (a map
/// that fixes the tensor order), while the chain builders here consume the
/// plain form whose value at the regular point is proportional to the swap
/// itself. `P^2 = 1`, so applying this twice returns the input; it converts
/// in either direction. Errors with `bad-composition` unless both factors
/// have the same dimension.
pub fn compose_with_swap(r: &RMatrix) -> Result<RMatrix> {
    let (d1, d2) = r.dims();
    if d1 != d2 {
        return Err(Error::BadComposition(format!(
            "the factor swap needs equal dimensions, got {d1} and {d2}"
        )));
    }
    let p = Mat::swap_factors(r.vars(), d1, d2);
    RMatrix::from_parts(
        r.flavor(),
        r.spectral_var(),
        (d1, d2),
        p.mul(r.matrix()),
        format!("{}; composed with the factor swap", r.normalization()),
        r.sources().map(|(a, b)| (a.clone(), b.clone())),
    )
}

/// Validates chain data and produces the per-site shifted factor matrices
/// `R(z / zeta_i)` (or `R(u - theta_i)`), each of size `(w v) x (w v)`.
fn site_factors(r: &RMatrix, n: usize, inhom: &[RatFunc]) -> Result<Vec<Mat>> {
    if n == 0 {
        return Err(Error::BadArgs("a chain needs at least one site".into()));
    }
    if inhom.len() != n {
        return Err(Error::BadArgs(format!(
            "expected {n} inhomogeneities, got {}",
            inhom.len()
        )));
    }
    let vars = r.vars().clone();
    let var_idx = vars
        .index_of(r.spectral_var())
        .expect("R-matrix spectral variable is table-checked at construction");
    let spectral = RatFunc::var(&vars, r.spectral_var())?;
    let mut factors = Vec::with_capacity(n);
    for (i, zeta) in inhom.iter().enumerate() {
        if zeta.numer().depends_on(var_idx) || zeta.denom().depends_on(var_idx) {
            return Err(Error::BadArgs(format!(
                "inhomogeneity {i} involves the spectral variable {}",
                r.spectral_var()
            )));
        }
        let arg = match r.flavor() {
            RFlavor::Trigonometric => {
                if zeta.is_zero() {
                    return Err(Error::BadArgs(format!(
                        "inhomogeneity {i} must be invertible for multiplicative shifts"
                    )));
                }
                spectral.mul(&zeta.inv()?)
            }
            RFlavor::Rational => spectral.sub(zeta),
        };
        factors.push(r.substituted(&arg)?);
    }
    Ok(factors)
}

/// The full slot-dimension list `[w, v, v, ..., v]` and the guarded total
/// dimension `w * v^n`.
fn chain_dims(r: &RMatrix, n: usize, cap: usize) -> Result<(Vec<usize>, usize)> {
    let (w, v) = r.dims();
    let mut dims = Vec::with_capacity(n + 1);
    dims.push(w);
    let mut total = w;
    for _ in 0..n {
        dims.push(v);
        total = total.saturating_mul(v);
        if total > cap {
            return Err(Error::TooLarge(format!(
                "chain dimension {w} * {v}^{n} exceeds the cap {cap}; \
                 build a deferred chain and use the mod-p streaming checks"
            )));
        }
    }
    Ok((dims, total))
}

/// Builds the symbolic monodromy and transfer matrices for an n-site chain
/// with the default dimension cap. See [`build_monodromy_capped`].
pub fn build_monodromy(r: &RMatrix, n: usize, inhom: &[RatFunc]) -> Result<TransferObjects> {
    build_monodromy_capped(r, n, inhom, DEFAULT_MAX_SYMBOLIC_DIM)
}

/// Builds the symbolic monodromy `T = R_01(z/zeta_1) ... R_0n(z/zeta_n)`
/// over `W (x) V^n` (site 1 leftmost) and the transfer matrix
/// `tau = tr_W T`, with an explicit dimension cap.
///
/// Errors: `bad-args` for an empty chain, a mismatched inhomogeneity list,
/// or shifts that are not invertible/constant in the spectral variable;
/// `too-large` when `w * v^n` exceeds `max_dim` (switch to
/// [`TransferObjects::deferred`] and the mod-p checks).
pub fn build_monodromy_capped(
    r: &RMatrix,
    n: usize,
    inhom: &[RatFunc],
    max_dim: usize,
) -> Result<TransferObjects> {
    let factors = site_factors(r, n, inhom)?;
    let (dims, _) = chain_dims(r, n, max_dim)?;
    let mut t: Option<Mat> = None;
    for (i, factor) in factors.iter().enumerate() {
        let embedded = factor.embed_on_slots(&dims, &[0, i + 1]);
        t = Some(match t {
            None => embedded,
            Some(acc) => acc.mul(&embedded),
        });
    }
    let t = t.expect("n >= 1 was validated");
    let tau = t.partial_trace_first(r.dims().0);
    Ok(TransferObjects {
        r: r.clone(),
        n,
        inhom: inhom.to_vec(),
        site_factors: factors,
        monodromy: Some(t),
        transfer: Some(tau),
    })
}

impl TransferObjects {
    /// Records a chain without materializing the symbolic monodromy, for
    /// use with the mod-p streaming verifiers. The per-site factors (small
    /// matrices) are still built exactly.
    ///
    /// Errors as [`build_monodromy_capped`], with the cap
    /// [`MAX_STREAMING_DIM`].
    pub fn deferred(r: &RMatrix, n: usize, inhom: &[RatFunc]) -> Result<Self> {
        let factors = site_factors(r, n, inhom)?;
        chain_dims(r, n, MAX_STREAMING_DIM)?;
        Ok(Self {
            r: r.clone(),
            n,
            inhom: inhom.to_vec(),
            site_factors: factors,
            monodromy: None,
            transfer: None,
        })
    }

    /// The R-matrix the chain was built from.
    pub fn r(&self) -> &RMatrix {
        &self.r
    }

    /// Number of sites.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Auxiliary-space dimension (first R-matrix factor).
    pub fn aux_dim(&self) -> usize {
        self.r.dims().0
    }

    /// Per-site quantum-space dimension (second R-matrix factor).
    pub fn site_dim(&self) -> usize {
        self.r.dims().1
    }

    /// The site shifts `zeta_1..zeta_n`.
    pub fn inhomogeneities(&self) -> &[RatFunc] {
        &self.inhom
    }

    /// The chain's spectral variable (the R-matrix's own variable).
    pub fn spectral_var(&self) -> &str {
        self.r.spectral_var()
    }

    /// The shifted per-site factor `R(z/zeta_i)` (0-indexed site), a
    /// `(w v) x (w v)` matrix.
    pub fn site_factor(&self, i: usize) -> &Mat {
        &self.site_factors[i]
    }

    /// All shifted per-site factors in site order.
    pub fn site_factor_list(&self) -> &[Mat] {
        &self.site_factors
    }

    /// Slot dimensions `[w, v, ..., v]` of the monodromy space.
    pub fn slot_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.aux_dim()];
        dims.extend(std::iter::repeat(self.site_dim()).take(self.n));
        dims
    }

    /// True when the symbolic monodromy was materialized.
    pub fn is_symbolic(&self) -> bool {
        self.monodromy.is_some()
    }

    /// The symbolic monodromy over `W (x) V^n`. Errors with `too-large`
    /// for deferred chains.
    pub fn monodromy(&self) -> Result<&Mat> {
        self.monodromy.as_ref().ok_or_else(|| {
            Error::TooLarge(
                "monodromy was not materialized; this chain is deferred to \
                 the mod-p streaming checks"
                    .into(),
            )
        })
    }

    /// The symbolic transfer matrix `tau = tr_W T` over `V^n`. Errors with
    /// `too-large` for deferred chains.
    pub fn transfer(&self) -> Result<&Mat> {
        self.transfer.as_ref().ok_or_else(|| {
            Error::TooLarge(
                "transfer matrix was not materialized; this chain is \
                 deferred to the mod-p streaming checks"
                    .into(),
            )
        })
    }

    /// Validates that the comparison points `z1`, `z2` are fresh for this
    /// chain (distinct from its spectral variable and absent from its
    /// shifts) and returns them as rational functions.
    pub(crate) fn comparison_points(&self) -> Result<(RatFunc, RatFunc)> {
        let vars = self.r.vars();
        let x1 = RatFunc::var(vars, "z1")?;
        let x2 = RatFunc::var(vars, "z2")?;
        if self.spectral_var() == "z1" || self.spectral_var() == "z2" {
            return Err(Error::BadArgs(
                "the chain's spectral variable collides with the comparison points z1, z2"
                    .into(),
            ));
        }
        for (name, idx) in [("z1", vars.require("z1")?), ("z2", vars.require("z2")?)] {
            for (i, zeta) in self.inhom.iter().enumerate() {
                if zeta.numer().depends_on(idx) || zeta.denom().depends_on(idx) {
                    return Err(Error::BadArgs(format!(
                        "inhomogeneity {i} involves the comparison point {name}"
                    )));
                }
            }
        }
        Ok((x1, x2))
    }

    /// The per-site factors with the spectral variable replaced by the
    /// given value (typically one of the comparison points).
    pub(crate) fn site_factors_at(&self, point: &RatFunc) -> Result<Vec<Mat>> {
        let z_idx = self.r.vars().require(self.spectral_var())?;
        self.site_factors
            .iter()
            .map(|f| f.substitute_var(z_idx, point))
            .collect()
    }

    /// True when the other chain was built from the same R-matrix, site
    /// count, and inhomogeneities.
    pub fn same_build(&self, other: &Self) -> bool {
        self.n == other.n
            && self.r.flavor() == other.r.flavor()
            && self.r.spectral_var() == other.r.spectral_var()
            && self.r.dims() == other.r.dims()
            && self.r.matrix().sub(other.r.matrix()).is_zero()
            && self
                .inhom
                .iter()
                .zip(&other.inhom)
                .all(|(a, b)| a.sub(b).is_zero())
    }
}
