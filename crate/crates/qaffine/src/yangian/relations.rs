//! Defining-relation checks for Yangian evaluation representations.
//!
//! Key items:
//! - [`verify_yangian_relations`]: verifies, as exact polynomial-in-u
//!   matrix identities, the mixed commutation `[I_a, J_b] = f_abc J_c`,
//!   the cubic relation
//!   `[J_a,[J_b,I_c]] - [I_a,[J_b,J_c]] = alpha_{abcdeg} {I^d, I^e, I^g}`,
//!   and the quartic relation
//!   `[[J_a,J_b],[I_l,J_m]] + [[J_l,J_m],[I_a,J_b]]
//!    = (alpha_{abcdeg} f_lmc + alpha_{lmcdeg} f_abc) {I^d, I^e, J^g}`,
//!   with per-tuple pass/fail entries in the report.
//!
//! The symmetrizer `{x_1, x_2, x_3}` is the sum of the products over all
//! six orderings of the three arguments, and `I^d = g^{dd'} I_{d'}` is the
//! dual basis under the invariant form: the free indices `d, e, g` coming
//! out of the alpha contraction are "down", so they pair against raised
//! elements. In an orthonormal basis the dual basis coincides with the
//! basis itself and the formulas reduce to their usual totally
//! antisymmetric shape. For sl2 the cubic relation is vacuous: both sides
//! vanish identically, which the checks confirm rather than assume.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalars::Mat;
use crate::yangian::data::YangianData;
use crate::yangian::evalrep::YangianEvalRep;
use crate::yangian::ratfunc_from_rational;

/// Sum of the products of three square matrices over all six orderings.
fn sym3(x: &Mat, y: &Mat, z: &Mat) -> Mat {
    let mut total = x.mul(y).mul(z);
    total = total.add(&x.mul(z).mul(y));
    total = total.add(&y.mul(x).mul(z));
    total = total.add(&y.mul(z).mul(x));
    total = total.add(&z.mul(x).mul(y));
    total = total.add(&z.mul(y).mul(x));
    total
}

/// Verifies the Yangian defining relations on an evaluation representation.
///
/// Report sections, all exact identities in the spectral variable:
/// - `antisymmetry[a,b]` and `jacobi[a,b,c]`: the structure-constant table
///   itself (absorbed from [`YangianData::verify_structure`]).
/// - `base-commutation[a,b]`: the matrices `rho(I_a)` close under
///   commutator with coefficients `f_abc`.
/// - `mixed-commutation[a,b]`: `[I_a, J_b] = f_abc J_c`.
/// - `cubic[a,b,c]`: the degree-three relation with right-hand side
///   `alpha_{abcdeg} {I^d, I^e, I^g}`, trivial for sl2.
/// - `quartic[a,b,l,m]`: the degree-four relation for every index tuple,
///   with the analogous dual-basis right-hand side.
///
/// Errors with `algebra-mismatch` when `y` is not the data the
/// representation was built over. The shipped scope is sl2; the arithmetic
/// is dimension-generic but the quartic tuple space grows as dim^4.
pub fn verify_yangian_relations(y: &YangianData, rep: &YangianEvalRep) -> Result<Report> {
    if rep.data() != y {
        return Err(Error::AlgebraMismatch(
            "representation was built over different structure constants".into(),
        ));
    }
    let dim = y.dim();
    let vars = rep.vars();
    let n = rep.rep_dim();
    let param = rep.parameter();
    let mut report = Report::new(format!(
        "yangian relations: {} on the dim-{} evaluation representation",
        y.label(),
        n
    ));
    report.absorb("", y.verify_structure());

    let coeff = |q: &BigRational| ratfunc_from_rational(vars, q);

    // Base matrices close with the declared structure constants.
    for a in 0..dim {
        for b in 0..dim {
            let lhs = rep.i_mat(a).commutator(rep.i_mat(b));
            let mut rhs = Mat::zeros(vars, n, n);
            for c in 0..dim {
                rhs = rhs.add(&rep.i_mat(c).scalar_mul(&coeff(y.f(a, b, c))));
            }
            report.record_detail(
                format!("base-commutation[{a},{b}]"),
                lhs.sub(&rhs).is_zero(),
                "[I_a, I_b] differs from f_abc I_c",
            );
        }
    }

    // Mixed commutation, exact in the spectral variable.
    for a in 0..dim {
        for b in 0..dim {
            let lhs = rep.i_mat(a).commutator(&rep.j_mat(b));
            let mut rhs = Mat::zeros(vars, n, n);
            for c in 0..dim {
                rhs = rhs.add(&rep.j_mat(c).scalar_mul(&coeff(y.f(a, b, c))));
            }
            report.record_detail(
                format!("mixed-commutation[{a},{b}]"),
                lhs.sub(&rhs).is_zero(),
                "[I_a, J_b] differs from f_abc J_c",
            );
        }
    }

    // Precompute the alpha table and the symmetrized triple products once;
    // both relations below only read them. The symmetrizer arguments are
    // dual-basis elements I^d = g^{dd'} I_{d'}, matching the variance of
    // the alpha contraction's free indices.
    let idx = |a: usize, b: usize, c: usize| (a * dim + b) * dim + c;
    let mut alpha = vec![BigRational::default(); dim * dim * dim * dim * dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                for d in 0..dim {
                    for e in 0..dim {
                        for g in 0..dim {
                            alpha[idx(a, b, c) * dim * dim * dim + idx(d, e, g)] =
                                y.alpha(a, b, c, d, e, g);
                        }
                    }
                }
            }
        }
    }
    let alpha = |abc: (usize, usize, usize), deg: (usize, usize, usize)| {
        &alpha[idx(abc.0, abc.1, abc.2) * dim * dim * dim + idx(deg.0, deg.1, deg.2)]
    };
    let mut dual = Vec::with_capacity(dim);
    for d in 0..dim {
        let mut raised = Mat::zeros(vars, n, n);
        for dd in 0..dim {
            let w = y.metric_inv(d, dd);
            if !num_traits::Zero::is_zero(w) {
                raised = raised.add(&rep.i_mat(dd).scalar_mul(&coeff(w)));
            }
        }
        dual.push(raised);
    }
    let mut sym_base = Vec::with_capacity(dim * dim * dim);
    for d in 0..dim {
        for e in 0..dim {
            for g in 0..dim {
                sym_base.push(sym3(&dual[d], &dual[e], &dual[g]));
            }
        }
    }
    let sym_base = |d: usize, e: usize, g: usize| &sym_base[idx(d, e, g)];

    // Cubic relation: [J_a,[J_b,I_c]] - [I_a,[J_b,J_c]] = alpha {I^d,I^e,I^g}.
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let lhs = rep
                    .j_mat(a)
                    .commutator(&rep.j_mat(b).commutator(rep.i_mat(c)))
                    .sub(&rep.i_mat(a).commutator(&rep.j_mat(b).commutator(&rep.j_mat(c))));
                let mut rhs = Mat::zeros(vars, n, n);
                for d in 0..dim {
                    for e in 0..dim {
                        for g in 0..dim {
                            let w = alpha((a, b, c), (d, e, g));
                            if !num_traits::Zero::is_zero(w) {
                                rhs = rhs.add(&sym_base(d, e, g).scalar_mul(&coeff(w)));
                            }
                        }
                    }
                }
                report.record_detail(
                    format!("cubic[{a},{b},{c}]"),
                    lhs.sub(&rhs).is_zero(),
                    "cubic relation violated",
                );
            }
        }
    }

    // Quartic relation for every tuple (a, b, l, m). The symmetrizer
    // {I^d, I^e, J^g} equals the dual-basis triple product scaled by the
    // evaluation parameter, which factors out of the d,e,g sum.
    for a in 0..dim {
        for b in 0..dim {
            for l in 0..dim {
                for m in 0..dim {
                    let lhs = rep
                        .j_mat(a)
                        .commutator(&rep.j_mat(b))
                        .commutator(&rep.i_mat(l).commutator(&rep.j_mat(m)))
                        .add(
                            &rep.j_mat(l)
                                .commutator(&rep.j_mat(m))
                                .commutator(&rep.i_mat(a).commutator(&rep.j_mat(b))),
                        );
                    let mut rhs = Mat::zeros(vars, n, n);
                    for d in 0..dim {
                        for e in 0..dim {
                            for g in 0..dim {
                                let mut w = BigRational::default();
                                for c in 0..dim {
                                    w += alpha((a, b, c), (d, e, g)) * y.f(l, m, c);
                                    w += alpha((l, m, c), (d, e, g)) * y.f(a, b, c);
                                }
                                if !num_traits::Zero::is_zero(&w) {
                                    rhs = rhs.add(&sym_base(d, e, g).scalar_mul(&coeff(&w)));
                                }
                            }
                        }
                    }
                    let rhs = rhs.scalar_mul(&param);
                    report.record_detail(
                        format!("quartic[{a},{b},{l},{m}]"),
                        lhs.sub(&rhs).is_zero(),
                        "quartic relation violated",
                    );
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, VarTable};
    use num_bigint::BigInt;

    // ---- full pass on the shipped representation ----

    #[test]
    fn fundamental_sl2_satisfies_all_relations() {
        let vars = VarTable::standard();
        let rep = YangianEvalRep::fundamental_sl2(&vars, "u", None).unwrap();
        let y = rep.data().clone();
        let report = verify_yangian_relations(&y, &rep).unwrap();
        assert!(report.all_passed(), "{report}");
        // 9 antisymmetry + 27 jacobi + 27 invariance + 9 base + 9 mixed
        // + 27 cubic + 81 quartic.
        assert_eq!(report.len(), 189);
    }

    #[test]
    fn shifted_representation_also_passes() {
        let vars = VarTable::standard();
        let shift = RatFunc::var(&vars, "eta").unwrap();
        let rep = YangianEvalRep::fundamental_sl2(&vars, "u", Some(shift)).unwrap();
        let y = rep.data().clone();
        let report = verify_yangian_relations(&y, &rep).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    // ---- the cubic relation is vacuous for sl2 ----

    #[test]
    fn cubic_relation_sides_vanish_separately_for_sl2() {
        // Both sides are identically zero before any comparison: the left
        // side because J_a is a scalar multiple of I_a in an evaluation
        // representation, the right side because the alpha contraction
        // against the dual-basis symmetrizer cancels for sl2. The dual
        // basis under diag(2,-2,2) is I^d = I_d scaled by (1/2, -1/2, 1/2).
        let vars = VarTable::standard();
        let rep = YangianEvalRep::fundamental_sl2(&vars, "u", None).unwrap();
        let y = rep.data().clone();
        let dual: Vec<Mat> = (0..3)
            .map(|d| {
                let w = y.metric_inv(d, d);
                let w = RatFunc::rational(&vars, w.numer().clone(), w.denom().clone()).unwrap();
                rep.i_mat(d).scalar_mul(&w)
            })
            .collect();
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 2, 1), (0, 0, 0), (0, 1, 0), (1, 0, 0)] {
            let lhs = rep
                .j_mat(a)
                .commutator(&rep.j_mat(b).commutator(rep.i_mat(c)))
                .sub(&rep.i_mat(a).commutator(&rep.j_mat(b).commutator(&rep.j_mat(c))));
            assert!(lhs.is_zero(), "lhs at ({a},{b},{c})");
            let mut rhs = Mat::zeros(&vars, 2, 2);
            for d in 0..3 {
                for e in 0..3 {
                    for g in 0..3 {
                        let w = y.alpha(a, b, c, d, e, g);
                        let w = RatFunc::rational(
                            &vars,
                            w.numer().clone(),
                            w.denom().clone(),
                        )
                        .unwrap();
                        rhs = rhs.add(&sym3(&dual[d], &dual[e], &dual[g]).scalar_mul(&w));
                    }
                }
            }
            assert!(rhs.is_zero(), "rhs at ({a},{b},{c})");
        }
    }

    // ---- fault injection ----

    #[test]
    fn corrupted_structure_constant_is_reported() {
        let vars = VarTable::standard();
        let rep = YangianEvalRep::fundamental_sl2(&vars, "u", None).unwrap();
        // Same table with one sign flipped; the representation keeps its
        // honest matrices, so commutation against the corrupted table fails.
        let two = BigRational::from(BigInt::from(2));
        let m_two = BigRational::from(BigInt::from(-2));
        let entries = vec![
            (0, 1, 2, two.clone()), // corrupted: should be -2
            (1, 0, 2, two.clone()),
            (1, 2, 0, m_two.clone()),
            (2, 1, 0, two.clone()),
            (2, 0, 1, two.clone()),
            (0, 2, 1, m_two.clone()),
        ];
        let metric = vec![(0, 0, two.clone()), (1, 1, m_two), (2, 2, two)];
        let bad =
            YangianData::from_entries("sl2", 3, &entries, &metric, "planted fault").unwrap();
        let bad_rep = YangianEvalRep::new(
            bad.clone(),
            vec![
                rep.i_mat(0).clone(),
                rep.i_mat(1).clone(),
                rep.i_mat(2).clone(),
            ],
            "u",
            None,
        )
        .unwrap();
        let report = verify_yangian_relations(&bad, &bad_rep).unwrap();
        assert!(!report.all_passed());
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert!(failed.iter().any(|f| f.starts_with("antisymmetry")), "{failed:?}");
        assert!(failed.iter().any(|f| f.starts_with("jacobi")), "{failed:?}");
        assert!(
            failed.iter().any(|f| f.starts_with("base-commutation")),
            "{failed:?}"
        );
        assert!(
            failed.iter().any(|f| f.starts_with("mixed-commutation")),
            "{failed:?}"
        );
    }

    #[test]
    fn mismatched_data_is_rejected() {
        let vars = VarTable::standard();
        let rep = YangianEvalRep::fundamental_sl2(&vars, "u", None).unwrap();
        let one = BigRational::from(BigInt::from(1));
        let identity = vec![(0, 0, one.clone()), (1, 1, one.clone()), (2, 2, one)];
        let other =
            YangianData::from_entries("other", 3, &[], &identity, "empty table").unwrap();
        assert!(matches!(
            verify_yangian_relations(&other, &rep),
            Err(Error::AlgebraMismatch(_))
        ));
    }
}
