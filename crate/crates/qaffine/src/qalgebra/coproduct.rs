//! Hopf structure maps: coproduct, counit, and antipode.
//!
//! Key items:
//! - [`CoproductFactor`]: a tensor-leg symbol, either a generator or the unit.
//! - [`coproduct_pairs`]: the formal two-leg expansion of a generator.
//! - [`tensor_coproduct_matrix`]: the coproduct realized on a tensor product
//!   of two representations.
//! - [`counit`]: the scalar counit of a generator.
//! - [`antipode_matrix`]: the antipode realized on one representation.
//!
//! The coproduct acts on generators by
//! raising/lowering x_i -> x_i (x) Kinv_i + K_i (x) x_i,
//! group-likes K_i -> K_i (x) K_i, and Cartan elements H_i -> H_i (x) 1 +
//! 1 (x) H_i. Keeping the expansion formal (as label pairs) lets the
//! coassociativity check iterate the map twice instead of comparing against
//! a hand-expanded three-leg formula.

use super::labels::GeneratorLabel;
use crate::error::{Error, Result};
use crate::evalreps::Representation;
use crate::scalars::Mat;

/// One tensor leg in a formal coproduct expansion: a generator label or the
/// algebra unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoproductFactor {
    /// A generator, realized by its matrix in a representation.
    Gen(GeneratorLabel),
    /// The unit, realized by the identity matrix.
    One,
}

impl CoproductFactor {
    /// Expands this leg one more step: generators expand by their coproduct
    /// and the unit stays 1 (x) 1.
    fn pairs(&self) -> Result<Vec<(CoproductFactor, CoproductFactor)>> {
        match self {
            CoproductFactor::Gen(label) => coproduct_pairs(*label),
            CoproductFactor::One => Ok(vec![(CoproductFactor::One, CoproductFactor::One)]),
        }
    }
}

/// The formal coproduct of one generator as a sum of leg pairs.
///
/// Raising and lowering operators expand as x (x) Kinv + K (x) x, group-like
/// elements as K (x) K, and Cartan elements as H (x) 1 + 1 (x) H. The scaling
/// element has no finite-dimensional realization, so it is rejected with
/// "bad-args".
pub fn coproduct_pairs(
    label: GeneratorLabel,
) -> Result<Vec<(CoproductFactor, CoproductFactor)>> {
    use CoproductFactor::{Gen, One};
    use GeneratorLabel as L;
    match label {
        L::EPlus(i) => Ok(vec![
            (Gen(L::EPlus(i)), Gen(L::KInv(i))),
            (Gen(L::K(i)), Gen(L::EPlus(i))),
        ]),
        L::EMinus(i) => Ok(vec![
            (Gen(L::EMinus(i)), Gen(L::KInv(i))),
            (Gen(L::K(i)), Gen(L::EMinus(i))),
        ]),
        L::K(i) => Ok(vec![(Gen(L::K(i)), Gen(L::K(i)))]),
        L::KInv(i) => Ok(vec![(Gen(L::KInv(i)), Gen(L::KInv(i)))]),
        L::H(i) => Ok(vec![(Gen(L::H(i)), One), (One, Gen(L::H(i)))]),
        L::D => Err(Error::BadArgs(
            "the scaling element has no coproduct realization here".into(),
        )),
    }
}

/// Iterates the coproduct once more on the chosen leg, turning pairs into
/// triples. `leg` 0 applies it to the left leg, 1 to the right leg.
pub fn coproduct_triples(
    label: GeneratorLabel,
    leg: usize,
) -> Result<Vec<(CoproductFactor, CoproductFactor, CoproductFactor)>> {
    let mut out = Vec::new();
    for (a, b) in coproduct_pairs(label)? {
        match leg {
            0 => {
                for (a1, a2) in a.pairs()? {
                    out.push((a1, a2, b));
                }
            }
            1 => {
                for (b1, b2) in b.pairs()? {
                    out.push((a, b1, b2));
                }
            }
            _ => {
                return Err(Error::BadArgs(format!(
                    "coproduct leg must be 0 or 1, got {leg}"
                )))
            }
        }
    }
    Ok(out)
}

/// Realizes one formal leg as a matrix on the given representation.
fn realize(factor: &CoproductFactor, rep: &Representation) -> Result<Mat> {
    match factor {
        CoproductFactor::Gen(label) => Ok(rep.matrix(*label)?.clone()),
        CoproductFactor::One => Ok(Mat::identity(rep.vars(), rep.dim())),
    }
}

/// The coproduct of one generator realized on `left` (x) `right`.
///
/// Both representations must be built over the same Cartan data; a mismatch
/// is rejected with "algebra-mismatch".
pub fn tensor_coproduct_matrix(
    label: GeneratorLabel,
    left: &Representation,
    right: &Representation,
) -> Result<Mat> {
    if left.cartan() != right.cartan() {
        return Err(Error::AlgebraMismatch(format!(
            "cannot tensor a representation of {} with one of {}",
            left.cartan().name(),
            right.cartan().name()
        )));
    }
    let mut acc = Mat::zeros(left.vars(), left.dim() * right.dim(), left.dim() * right.dim());
    for (a, b) in coproduct_pairs(label)? {
        acc = acc.add(&realize(&a, left)?.kron(&realize(&b, right)?));
    }
    Ok(acc)
}

/// The counit of one generator: 0 on raising, lowering, and Cartan
/// generators, 1 on the group-like elements.
pub fn counit(label: GeneratorLabel) -> Result<i64> {
    use GeneratorLabel as L;
    match label {
        L::EPlus(_) | L::EMinus(_) | L::H(_) => Ok(0),
        L::K(_) | L::KInv(_) => Ok(1),
        L::D => Err(Error::BadArgs(
            "the scaling element has no counit realization here".into(),
        )),
    }
}

/// The antipode of one generator realized on a representation:
/// S(x_i) = -Kinv_i x_i K_i for raising/lowering x_i, S(K_i) = Kinv_i,
/// S(Kinv_i) = K_i, and S(H_i) = -H_i.
pub fn antipode_matrix(label: GeneratorLabel, rep: &Representation) -> Result<Mat> {
    use GeneratorLabel as L;
    match label {
        L::EPlus(i) | L::EMinus(i) => {
            let kinv = rep.matrix(L::KInv(i))?;
            let x = rep.matrix(label)?;
            let k = rep.matrix(L::K(i))?;
            Ok(kinv.mul(x).mul(k).neg())
        }
        L::K(i) => Ok(rep.matrix(L::KInv(i))?.clone()),
        L::KInv(i) => Ok(rep.matrix(L::K(i))?.clone()),
        L::H(i) => Ok(rep.matrix(L::H(i))?.neg()),
        L::D => Err(Error::BadArgs(
            "the scaling element has no antipode realization here".into(),
        )),
    }
}
