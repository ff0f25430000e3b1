//! Relation and Hopf-axiom verifiers for matrix representations.
//!
//! Key items:
//! - [`verify_defining_relations`]: checks the group-like pairing, the
//!   weight conjugation rules, the raising/lowering commutator, and the
//!   higher Serre relations on one representation.
//! - [`verify_hopf_axioms`]: checks coassociativity, the counit laws, and
//!   the antipode laws across a triple of representations.
//!
//! Every individual identity lands in a [`Report`] under a stable check
//! name such as `ef-commutator[1,1]` or `coassoc[E+0]`, so callers can
//! pinpoint exactly which relation a corrupted representation breaks.

use super::coproduct::{
    antipode_matrix, coproduct_pairs, coproduct_triples, counit, tensor_coproduct_matrix,
    CoproductFactor,
};
use super::labels::GeneratorLabel;
use super::qcomb::q_binomial;
use crate::error::{Error, Result};
use crate::evalreps::Representation;
use crate::report::Report;
use crate::scalars::{Mat, RatFunc};

/// Records whether `diff` is the zero matrix, with the offending entry in
/// the failure detail.
fn record_zero(report: &mut Report, name: String, diff: &Mat) {
    match diff.first_nonzero() {
        None => report.record(name, true),
        Some((r, c, v)) => {
            report.record_detail(name, false, format!("entry ({r},{c}) is {v}, expected 0"))
        }
    }
}

/// A small nonnegative matrix power by repeated multiplication.
fn mat_pow(m: &Mat, k: i64) -> Mat {
    let mut acc = Mat::identity(m.vars(), m.rows());
    for _ in 0..k {
        acc = acc.mul(m);
    }
    acc
}

/// Checks the defining relations of the deformed algebra on one
/// representation and reports each identity separately.
///
/// The checks, with their report names:
/// - `k-pair[i]`: K_i Kinv_i = 1.
/// - `k-conj-plus[i,j]` and `k-conj-minus[i,j]`: conjugating a raising or
///   lowering operator by K_i scales it by t^(+/- d_i a_ij).
/// - `ef-commutator[i,j]`: the commutator of a raising and a lowering
///   operator vanishes for i != j and equals
///   (K_i^2 - Kinv_i^2) / (t^(2 d_i) - t^(-2 d_i)) for i = j.
/// - `serre-plus[i,j]` and `serre-minus[i,j]` for i != j: the alternating
///   deformed-binomial sum of X_i^k X_j X_i^(1 - a_ij - k) vanishes.
///
/// Cartan generators carry no relation of their own here; they are
/// metadata used by constructors and twists.
pub fn verify_defining_relations(rep: &Representation) -> Result<Report> {
    use GeneratorLabel as L;
    let vars = rep.vars();
    let n = rep.cartan().nodes();
    let mut report = Report::new(format!("defining relations of {}", rep.name()));

    // ---- group-like pairing ----
    for i in 0..n {
        let prod = rep.matrix(L::K(i))?.mul(rep.matrix(L::KInv(i))?);
        let diff = prod.sub(&Mat::identity(vars, rep.dim()));
        record_zero(&mut report, format!("k-pair[{i}]"), &diff);
    }

    // ---- weight conjugation ----
    for i in 0..n {
        let k = rep.matrix(L::K(i))?;
        let kinv = rep.matrix(L::KInv(i))?;
        for j in 0..n {
            let exp = rep.cartan().d(i) * rep.cartan().a(i, j);
            for (tag, label, sign) in [("plus", L::EPlus(j), 1), ("minus", L::EMinus(j), -1)] {
                let x = rep.matrix(label)?;
                let scale = RatFunc::var_pow(vars, "t", (sign * exp) as i32)?;
                let diff = k.mul(x).mul(kinv).sub(&x.scalar_mul(&scale));
                record_zero(&mut report, format!("k-conj-{tag}[{i},{j}]"), &diff);
            }
        }
    }

    // ---- raising/lowering commutator ----
    for i in 0..n {
        let e = rep.matrix(L::EPlus(i))?;
        for j in 0..n {
            let f = rep.matrix(L::EMinus(j))?;
            let lhs = e.commutator(f);
            let diff = if i == j {
                let k = rep.matrix(L::K(i))?;
                let kinv = rep.matrix(L::KInv(i))?;
                let d2 = (2 * rep.cartan().d(i)) as i32;
                let denom = RatFunc::var_pow(vars, "t", d2)?
                    .sub(&RatFunc::var_pow(vars, "t", -d2)?);
                let rhs = k.mul(k).sub(&kinv.mul(kinv)).scalar_mul(&denom.inv()?);
                lhs.sub(&rhs)
            } else {
                lhs
            };
            record_zero(&mut report, format!("ef-commutator[{i},{j}]"), &diff);
        }
    }

    // ---- higher Serre relations ----
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let order = 1 - rep.cartan().a(i, j);
            let base = RatFunc::var_pow(vars, "t", (2 * rep.cartan().d(i)) as i32)?;
            for (tag, xi, xj) in [
                ("plus", L::EPlus(i), L::EPlus(j)),
                ("minus", L::EMinus(i), L::EMinus(j)),
            ] {
                let a = rep.matrix(xi)?;
                let b = rep.matrix(xj)?;
                let mut acc = Mat::zeros(vars, rep.dim(), rep.dim());
                for k in 0..=order {
                    let coeff = q_binomial(order, k, &base)?;
                    let signed = if k % 2 == 0 { coeff } else { coeff.neg() };
                    let term = mat_pow(a, k).mul(b).mul(&mat_pow(a, order - k));
                    acc = acc.add(&term.scalar_mul(&signed));
                }
                record_zero(&mut report, format!("serre-{tag}[{i},{j}]"), &acc);
            }
        }
    }

    Ok(report)
}

/// The counit of a formal tensor leg: the unit has counit 1.
fn factor_counit(f: &CoproductFactor) -> Result<i64> {
    match f {
        CoproductFactor::Gen(label) => counit(*label),
        CoproductFactor::One => Ok(1),
    }
}

/// Realizes a formal leg on a representation, without the antipode.
fn realize(f: &CoproductFactor, rep: &Representation) -> Result<Mat> {
    match f {
        CoproductFactor::Gen(label) => Ok(rep.matrix(*label)?.clone()),
        CoproductFactor::One => Ok(Mat::identity(rep.vars(), rep.dim())),
    }
}

/// Realizes the antipode of a formal leg on a representation.
fn realize_antipode(f: &CoproductFactor, rep: &Representation) -> Result<Mat> {
    match f {
        CoproductFactor::Gen(label) => antipode_matrix(*label, rep),
        CoproductFactor::One => Ok(Mat::identity(rep.vars(), rep.dim())),
    }
}

/// Checks the Hopf-algebra axioms generator by generator.
///
/// Coassociativity is checked on the triple product of the three given
/// representations by iterating the formal coproduct twice, once on each
/// leg, and comparing the realized sums; the report names are
/// `coassoc[x]`. The counit laws `counit-left[x]` / `counit-right[x]` and
/// the antipode laws `antipode-left[x]` / `antipode-right[x]` are
/// single-space identities and run on the first representation.
///
/// All three representations must share the same Cartan data.
pub fn verify_hopf_axioms(
    r1: &Representation,
    r2: &Representation,
    r3: &Representation,
) -> Result<Report> {
    if r1.cartan() != r2.cartan() || r1.cartan() != r3.cartan() {
        return Err(Error::AlgebraMismatch(format!(
            "hopf axioms need one algebra, got {}, {}, {}",
            r1.cartan().name(),
            r2.cartan().name(),
            r3.cartan().name()
        )));
    }
    let vars = r1.vars();
    let mut report = Report::new(format!(
        "hopf axioms on {} * {} * {}",
        r1.name(),
        r2.name(),
        r3.name()
    ));

    let labels: Vec<GeneratorLabel> = r1
        .labels()
        .filter(|l| !matches!(l, GeneratorLabel::D))
        .collect();

    for &x in &labels {
        // ---- coassociativity on the triple product ----
        let dim = r1.dim() * r2.dim() * r3.dim();
        let mut sides = Vec::with_capacity(2);
        for leg in [0, 1] {
            let mut acc = Mat::zeros(vars, dim, dim);
            for (a, b, c) in coproduct_triples(x, leg)? {
                let m = realize(&a, r1)?
                    .kron(&realize(&b, r2)?)
                    .kron(&realize(&c, r3)?);
                acc = acc.add(&m);
            }
            sides.push(acc);
        }
        record_zero(
            &mut report,
            format!("coassoc[{x}]"),
            &sides[0].sub(&sides[1]),
        );

        // ---- counit laws on the first representation ----
        let rho_x = r1.matrix(x)?;
        let mut left = Mat::zeros(vars, r1.dim(), r1.dim());
        let mut right = Mat::zeros(vars, r1.dim(), r1.dim());
        for (a, b) in coproduct_pairs(x)? {
            let ea = RatFunc::from_int(vars, factor_counit(&a)?);
            let eb = RatFunc::from_int(vars, factor_counit(&b)?);
            left = left.add(&realize(&b, r1)?.scalar_mul(&ea));
            right = right.add(&realize(&a, r1)?.scalar_mul(&eb));
        }
        record_zero(&mut report, format!("counit-left[{x}]"), &left.sub(rho_x));
        record_zero(&mut report, format!("counit-right[{x}]"), &right.sub(rho_x));

        // ---- antipode laws on the first representation ----
        let target = Mat::identity(vars, r1.dim())
            .scalar_mul(&RatFunc::from_int(vars, counit(x)?));
        let mut s_left = Mat::zeros(vars, r1.dim(), r1.dim());
        let mut s_right = Mat::zeros(vars, r1.dim(), r1.dim());
        for (a, b) in coproduct_pairs(x)? {
            s_left = s_left.add(&realize_antipode(&a, r1)?.mul(&realize(&b, r1)?));
            s_right = s_right.add(&realize(&a, r1)?.mul(&realize_antipode(&b, r1)?));
        }
        record_zero(
            &mut report,
            format!("antipode-left[{x}]"),
            &s_left.sub(&target),
        );
        record_zero(
            &mut report,
            format!("antipode-right[{x}]"),
            &s_right.sub(&target),
        );
    }

    // The coproduct is an algebra map, so the realized tensor matrices must
    // themselves satisfy the defining relations; spot-check the pairing.
    for i in 0..r1.cartan().nodes() {
        let k = tensor_coproduct_matrix(GeneratorLabel::K(i), r1, r2)?;
        let kinv = tensor_coproduct_matrix(GeneratorLabel::KInv(i), r1, r2)?;
        let diff = k.mul(&kinv).sub(&Mat::identity(vars, r1.dim() * r2.dim()));
        record_zero(&mut report, format!("tensor-k-pair[{i}]"), &diff);
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evalreps::{make_uq_sl2_spin, make_uq_sln_defining};
    use crate::scalars::parse_poly;
    use num_rational::Ratio;

    // ---- defining relations ----

    #[test]
    fn shipped_constructions_satisfy_all_relations() {
        for rep in [
            make_uq_sl2_spin(Ratio::new(1, 2)).unwrap(),
            make_uq_sl2_spin(Ratio::from_integer(1)).unwrap(),
            make_uq_sln_defining(3).unwrap(),
        ] {
            let report = verify_defining_relations(&rep).unwrap();
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn corrupting_one_raising_operator_breaks_exactly_the_commutator() {
        let rep = make_uq_sl2_spin(Ratio::new(1, 2)).unwrap();
        let two = RatFunc::from_int(rep.vars(), 2);
        let scaled = rep
            .matrix(GeneratorLabel::EPlus(1))
            .unwrap()
            .scalar_mul(&two);
        let bad = rep.with_matrix(GeneratorLabel::EPlus(1), scaled).unwrap();
        let report = verify_defining_relations(&bad).unwrap();
        // Conjugation and Serre relations are homogeneous in the corrupted
        // generator, so uniform scaling leaves them intact; only the
        // commutator against its own lowering partner notices.
        let failures: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert_eq!(failures, vec!["ef-commutator[1,1]".to_string()], "{report}");
    }

    #[test]
    fn serre_checks_really_run_at_higher_rank() {
        let rep = make_uq_sln_defining(3).unwrap();
        let report = verify_defining_relations(&rep).unwrap();
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "serre-plus[1,2]" && c.passed));
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "serre-minus[2,0]" && c.passed));
    }

    // ---- hopf axioms ----

    #[test]
    fn hopf_axioms_hold_on_a_mixed_triple() {
        let half = make_uq_sl2_spin(Ratio::new(1, 2)).unwrap();
        let one = make_uq_sl2_spin(Ratio::from_integer(1)).unwrap();
        let report = verify_hopf_axioms(&half, &half, &one).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn hopf_axioms_reject_mixed_algebras() {
        let half = make_uq_sl2_spin(Ratio::new(1, 2)).unwrap();
        let three = make_uq_sln_defining(3).unwrap();
        let err = verify_hopf_axioms(&half, &half, &three).unwrap_err();
        assert!(err.to_string().starts_with("algebra-mismatch"));
    }

    #[test]
    fn coassociativity_detects_a_broken_coproduct_input() {
        // Feeding a representation whose group-like matrix was tampered
        // with must surface in the tensor pairing check.
        let half = make_uq_sl2_spin(Ratio::new(1, 2)).unwrap();
        let twisted = half
            .matrix(GeneratorLabel::K(1))
            .unwrap()
            .scalar_mul(&RatFunc::from_poly(
                parse_poly(half.vars(), "1*z^1").unwrap(),
            ));
        let bad = half.with_matrix(GeneratorLabel::K(1), twisted).unwrap();
        let report = verify_hopf_axioms(&bad, &bad, &bad).unwrap();
        assert!(!report.all_passed());
        assert!(report
            .failures()
            .any(|c| c.name == "tensor-k-pair[1]" || c.name.starts_with("antipode")));
    }
}
