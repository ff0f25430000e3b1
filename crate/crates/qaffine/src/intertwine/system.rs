//! Assembly of the linear system cutting out an evaluation intertwiner.
//!
//! Key items:
//! - [`IntertwinerSystem`]: the stacked coefficient matrix of the equations
//!   `Ř·Δ(x) − Δ'(x)·Ř = 0`, together with the generator list and the
//!   weight-preselection record.
//! - [`build_intertwiner_system`]: twists the first factor by the spectral
//!   variable `z`, forms both tensor actions, and linearizes the exchange
//!   equations over all Cartan and raising/lowering generators.
//!
//! The unknown matrix `Ř` maps `V¹⊗V²` to `V²⊗V¹`; with `D = d₁d₂` its entry
//! `(p, q)` is flattened to the unknown index `p·D + q`. For each generator
//! the equation at matrix slot `(a, b)` reads
//! `Σ_q Ř[a,q]·A[q,b] − Σ_p B[a,p]·Ř[p,b] = 0`, where `A` is the action on
//! the source `V¹_z⊗V²` and `B` the action on the target `V²⊗V¹_z`. Only the
//! ratio of the two evaluation parameters matters, so the second factor is
//! left untwisted and the first carries `z`.
//!
//! Because the Cartan matrices act diagonally, their equations force every
//! unknown whose row and column weights differ to vanish; those slots are
//! removed before elimination and the survivors are recorded. The full
//! stacked matrix keeps one row per generator per slot regardless, so row
//! and column counts stay predictable.

use crate::error::{Error, Result};
use crate::evalreps::{apply_gradation_twist, Representation};
use crate::qalgebra::{tensor_coproduct_matrix, GeneratorLabel, GradationSpec};
use crate::scalars::Mat;

/// Name of the spectral ratio variable introduced by the twist.
const SPECTRAL_VAR: &str = "z";

/// The linearized intertwining equations for one ordered pair of
/// representations.
#[derive(Debug, Clone)]
pub struct IntertwinerSystem {
    m: Mat,
    generators: Vec<GeneratorLabel>,
    kept: Vec<usize>,
    d1: usize,
    d2: usize,
    rho1: Representation,
    rho2: Representation,
}

impl IntertwinerSystem {
    /// The stacked coefficient matrix: one row per generator per matrix slot,
    /// one column per entry of `Ř` (including slots ruled out by weight).
    pub fn matrix(&self) -> &Mat {
        &self.m
    }

    /// Generators contributing equations, in row-block order.
    pub fn generators(&self) -> &[GeneratorLabel] {
        &self.generators
    }

    /// Flattened `Ř` slots that survive the Cartan weight preselection,
    /// ascending.
    pub fn kept_slots(&self) -> &[usize] {
        &self.kept
    }

    /// Total number of unknowns before preselection, `(d₁d₂)²`.
    pub fn total_unknowns(&self) -> usize {
        let d = self.d1 * self.d2;
        d * d
    }

    /// Dimensions `(d₁, d₂)` of the representation factors.
    pub fn dims(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    /// The spectral-twisted first factor and the untwisted second factor.
    pub fn sources(&self) -> (&Representation, &Representation) {
        (&self.rho1, &self.rho2)
    }

    /// Name of the spectral variable carried by the first factor.
    pub fn spectral_var(&self) -> &str {
        SPECTRAL_VAR
    }
}

/// Builds the intertwining system for `Ř(z): V¹_z⊗V² → V²⊗V¹_z`.
///
/// The first representation is twisted by `z` along the given gradation; the
/// second stays untwisted, so the system depends on the evaluation parameters
/// only through their ratio. Equations are generated for every Cartan
/// generator `K_i` and every raising and lowering generator `E±_i`.
///
/// Errors: `algebra-mismatch` when the representations carry different
/// Cartan data, and `bad-args` when either input already depends on a
/// spectral variable (the twist is owned by this builder).
pub fn build_intertwiner_system(
    rho1: &Representation,
    rho2: &Representation,
    gradation: &GradationSpec,
) -> Result<IntertwinerSystem> {
    if rho1.cartan() != rho2.cartan() {
        return Err(Error::AlgebraMismatch(format!(
            "cannot intertwine {} with {}: Cartan data differ",
            rho1.name(),
            rho2.name()
        )));
    }
    if let Some(v) = rho1.spectral_var().or_else(|| rho2.spectral_var()) {
        return Err(Error::BadArgs(format!(
            "representations must be spectral-free; found a twist by {v} \
             (the system applies its own twist)"
        )));
    }
    let twisted = apply_gradation_twist(rho1, gradation, SPECTRAL_VAR)?;
    let vars = twisted.vars().clone();
    let nodes = twisted.cartan().nodes();
    let d1 = twisted.dim();
    let d2 = rho2.dim();
    let d = d1 * d2;

    let mut generators = Vec::with_capacity(3 * nodes);
    for i in 0..nodes {
        generators.push(GeneratorLabel::K(i));
    }
    for i in 0..nodes {
        generators.push(GeneratorLabel::EPlus(i));
    }
    for i in 0..nodes {
        generators.push(GeneratorLabel::EMinus(i));
    }

    let mut actions = Vec::with_capacity(generators.len());
    for &g in &generators {
        let a = tensor_coproduct_matrix(g, &twisted, rho2)?;
        let b = tensor_coproduct_matrix(g, rho2, &twisted)?;
        actions.push((a, b));
    }

    // Weight preselection: a slot (a, b) can be nonzero only when every
    // diagonal Cartan action agrees between the source column and the target
    // row. Non-diagonal Cartan matrices would invalidate the shortcut, so in
    // that case every slot is kept.
    let cartan_actions: Vec<&(Mat, Mat)> = actions.iter().take(nodes).collect();
    let all_diagonal = cartan_actions
        .iter()
        .all(|(a, b)| is_diagonal(a) && is_diagonal(b));
    let mut kept = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let keep = !all_diagonal
                || cartan_actions
                    .iter()
                    .all(|(am, bm)| am.get(b, b) == bm.get(a, a));
            if keep {
                kept.push(a * d + b);
            }
        }
    }

    // Stack the equations: row (g, a, b) collects the coefficients of the
    // unknowns Ř[a, q] and Ř[p, b].
    let mut m = Mat::zeros(&vars, generators.len() * d * d, d * d);
    for (gi, (am, bm)) in actions.iter().enumerate() {
        for a in 0..d {
            for b in 0..d {
                let row = gi * d * d + a * d + b;
                for q in 0..d {
                    let c = am.get(q, b);
                    if !c.is_zero() {
                        m.set(row, a * d + q, c.clone());
                    }
                }
                for p in 0..d {
                    let c = bm.get(a, p);
                    if !c.is_zero() {
                        let col = p * d + b;
                        let v = m.get(row, col).sub(c);
                        m.set(row, col, v);
                    }
                }
            }
        }
    }

    Ok(IntertwinerSystem {
        m,
        generators,
        kept,
        d1,
        d2,
        rho1: twisted,
        rho2: rho2.clone(),
    })
}

/// True when every off-diagonal entry vanishes.
fn is_diagonal(m: &Mat) -> bool {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if r != c && !m.get(r, c).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evalreps::{make_uq_sl2_spin, make_uq_sln_defining};
    use crate::scalars::{PrimePoint, RatFunc};
    use num_rational::Ratio;

    fn half() -> Representation {
        make_uq_sl2_spin(Ratio::new(1, 2)).unwrap()
    }

    fn homogeneous(rep: &Representation) -> GradationSpec {
        GradationSpec::homogeneous(rep.cartan())
    }

    // ---- counting ----

    #[test]
    fn spin_half_pair_has_expected_shape() {
        let v = half();
        let sys = build_intertwiner_system(&v, &v, &homogeneous(&v)).unwrap();
        assert_eq!(sys.matrix().rows(), 96);
        assert_eq!(sys.matrix().cols(), 16);
        assert_eq!(sys.total_unknowns(), 16);
        assert_eq!(sys.generators().len(), 6);
        assert_eq!(sys.dims(), (2, 2));
    }

    #[test]
    fn weight_preselection_keeps_six_of_sixteen() {
        let v = half();
        let sys = build_intertwiner_system(&v, &v, &homogeneous(&v)).unwrap();
        assert_eq!(sys.kept_slots(), &[0, 5, 6, 9, 10, 15]);
    }

    #[test]
    fn mixed_spins_keep_the_matching_weight_slots() {
        let v = half();
        let w = make_uq_sl2_spin(Ratio::new(1, 1)).unwrap();
        let sys = build_intertwiner_system(&v, &w, &homogeneous(&v)).unwrap();
        assert_eq!(sys.matrix().rows(), 6 * 36);
        assert_eq!(sys.matrix().cols(), 36);
        assert_eq!(sys.kept_slots().len(), 10);
    }

    // ---- rank oracle ----

    #[test]
    fn modular_rank_leaves_nullity_one() {
        let v = half();
        let sys = build_intertwiner_system(&v, &v, &homogeneous(&v)).unwrap();
        for seed in [0x5eed_0001u64, 0x5eed_0002] {
            let pt = PrimePoint::sample(sys.matrix().vars(), seed, 0);
            let modular = sys.matrix().eval_mod(&pt).unwrap();
            assert_eq!(modular.rank(), 15);
        }
    }

    // ---- twist bookkeeping ----

    #[test]
    fn first_factor_carries_the_spectral_variable() {
        let v = half();
        let sys = build_intertwiner_system(&v, &v, &homogeneous(&v)).unwrap();
        let (twisted, partner) = sys.sources();
        assert_eq!(twisted.spectral_var(), Some("z"));
        assert_eq!(partner.spectral_var(), None);
        let zidx = twisted.vars().require("z").unwrap();
        let eplus = twisted.matrix(GeneratorLabel::EPlus(1)).unwrap();
        let plain = partner.matrix(GeneratorLabel::EPlus(1)).unwrap();
        let back = eplus
            .substitute_var(zidx, &RatFunc::one(twisted.vars()))
            .unwrap();
        assert!(back.sub(plain).is_zero());
    }

    #[test]
    fn pretwisted_inputs_are_rejected() {
        let v = half();
        let grad = homogeneous(&v);
        let tw = apply_gradation_twist(&v, &grad, "z").unwrap();
        let err = build_intertwiner_system(&tw, &v, &grad).unwrap_err();
        assert!(matches!(err, Error::BadArgs(_)));
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let v = half();
        let w = make_uq_sln_defining(3).unwrap();
        let grad = homogeneous(&v);
        let err = build_intertwiner_system(&v, &w, &grad).unwrap_err();
        assert!(matches!(err, Error::AlgebraMismatch(_)));
    }

    // ---- equation content ----

    #[test]
    fn cartan_rows_vanish_on_kept_slots() {
        let v = half();
        let sys = build_intertwiner_system(&v, &v, &homogeneous(&v)).unwrap();
        let d = 4;
        for gi in 0..2 {
            for &slot in sys.kept_slots() {
                let (a, b) = (slot / d, slot % d);
                let row = gi * d * d + a * d + b;
                for &col in sys.kept_slots() {
                    assert!(
                        sys.matrix().get(row, col).is_zero(),
                        "Cartan equation {gi} at slot ({a}, {b}) should not \
                         constrain kept unknowns"
                    );
                }
            }
        }
    }
}
