//! Extended Cartan matrices of untwisted affine type A.
//!
//! Key items:
//! - [`CartanData`]: rank, extended Cartan matrix, symmetrizers, and marks,
//!   validated on every construction path including JSON deserialization.
//! - [`CartanData::affine_a1`] and [`CartanData::affine_a`]: the shipped
//!   algebra families.
//!
//! The validation is exact integer arithmetic: symmetrizability, the sign
//! pattern, the kernel property of the marks, and positive definiteness of
//! the finite part are all checked, so any value of this type describes a
//! genuine affine Cartan matrix.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Maximum supported rank for the shipped A-series.
pub const MAX_RANK: usize = 8;

/// Extended Cartan data of an affine Kac-Moody algebra.
///
/// Indices run over the affine node set 0..=r where r is the rank. The
/// matrix entry `a(i, j)` is integral, the symmetrizers `d(i)` are positive
/// integers with d_i a_ij = d_j a_ji, and the marks `kac(i)` span the
/// one-dimensional kernel of the extended matrix with `kac(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CartanDataRaw")]
pub struct CartanData {
    name: String,
    rank: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    kac: Vec<i64>,
}

/// Unvalidated mirror used as the deserialization gate.
#[derive(Deserialize)]
struct CartanDataRaw {
    name: String,
    rank: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    kac: Vec<i64>,
}

impl TryFrom<CartanDataRaw> for CartanData {
    type Error = Error;

    fn try_from(raw: CartanDataRaw) -> Result<Self> {
        CartanData::from_parts(raw.name, raw.rank, raw.a, raw.d, raw.kac)
    }
}

impl CartanData {
    /// Builds and validates Cartan data from its raw parts.
    pub fn from_parts(
        name: String,
        rank: usize,
        a: Vec<Vec<i64>>,
        d: Vec<i64>,
        kac: Vec<i64>,
    ) -> Result<Self> {
        let data = CartanData {
            name,
            rank,
            a,
            d,
            kac,
        };
        data.validate()?;
        Ok(data)
    }

    /// The rank-1 affine algebra: extended matrix [[2, -2], [-2, 2]].
    pub fn affine_a1() -> Self {
        CartanData {
            name: "A1^(1)".to_string(),
            rank: 1,
            a: vec![vec![2, -2], vec![-2, 2]],
            d: vec![1, 1],
            kac: vec![1, 1],
        }
    }

    /// The affine A-series of rank r (cyclic Dynkin diagram on r + 1
    /// nodes); `affine_a(1)` coincides with [`CartanData::affine_a1`].
    pub fn affine_a(rank: usize) -> Result<Self> {
        if rank == 1 {
            return Ok(Self::affine_a1());
        }
        if !(2..=MAX_RANK).contains(&rank) {
            return Err(Error::BadRank(format!(
                "affine A-series supports rank 1 through {MAX_RANK}, got {rank}"
            )));
        }
        let n = rank + 1;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
            row[(i + 1) % n] = -1;
            row[(i + n - 1) % n] = -1;
        }
        let data = CartanData {
            name: format!("A{rank}^(1)"),
            rank,
            a,
            d: vec![1; n],
            kac: vec![1; n],
        };
        debug_assert!(data.validate().is_ok());
        Ok(data)
    }

    /// Checks every structural invariant; errors carry the first offense.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank + 1;
        let fail = |msg: String| Err(Error::BadArgs(msg));
        if self.rank == 0 {
            return fail("rank must be at least 1".into());
        }
        if self.a.len() != n || self.a.iter().any(|row| row.len() != n) {
            return fail(format!("matrix must be {n}x{n} for rank {}", self.rank));
        }
        if self.d.len() != n || self.kac.len() != n {
            return fail(format!("symmetrizers and marks must have length {n}"));
        }
        if self.d.iter().any(|&x| x <= 0) {
            return fail("symmetrizers must be positive".into());
        }
        if self.kac.iter().any(|&x| x <= 0) || self.kac[0] != 1 {
            return fail("marks must be positive with the affine mark equal to 1".into());
        }
        for i in 0..n {
            if self.a[i][i] != 2 {
                return fail(format!("diagonal entry ({i}, {i}) must be 2"));
            }
            for j in 0..n {
                if i != j && self.a[i][j] > 0 {
                    return fail(format!("off-diagonal entry ({i}, {j}) must be <= 0"));
                }
                if self.d[i] * self.a[i][j] != self.d[j] * self.a[j][i] {
                    return fail(format!("not symmetrizable at ({i}, {j})"));
                }
            }
        }
        // The marks must span the kernel: A * kac = 0.
        for i in 0..n {
            let s: i64 = (0..n).map(|j| self.a[i][j] * self.kac[j]).sum();
            if s != 0 {
                return fail(format!("marks are not a kernel vector (row {i})"));
            }
        }
        // Positive semi-definiteness of rank r: with the kernel pinned by
        // the marks, it suffices that the finite part (nodes 1..=r) of the
        // symmetrized matrix is positive definite, i.e. all leading
        // principal minors are positive.
        for k in 1..=self.rank {
            let minor: Vec<Vec<i128>> = (1..=k)
                .map(|i| {
                    (1..=k)
                        .map(|j| (self.d[i] * self.a[i][j]) as i128)
                        .collect()
                })
                .collect();
            if int_determinant(minor) <= 0 {
                return fail(format!(
                    "finite part is not positive definite (order {k} minor)"
                ));
            }
        }
        Ok(())
    }

    /// Display name of the algebra family.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The rank r; node indices run over 0..=r.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of affine nodes, rank + 1.
    pub fn nodes(&self) -> usize {
        self.rank + 1
    }

    /// Extended Cartan matrix entry.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    /// Symmetrizer of the node, a positive integer.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    /// Mark (Kac label) of the node, a positive integer.
    pub fn kac(&self, i: usize) -> i64 {
        self.kac[i]
    }
}

/// Exact determinant by fraction-free elimination. Entries stay well inside
/// i128 for the small validated sizes used here.
fn int_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| m[r][col] != 0);
        let Some(pr) = pivot_row else {
            return 0;
        };
        if pr != col {
            m.swap(pr, col);
            sign = -sign;
        }
        let piv = m[col][col];
        for r in col + 1..n {
            for c in col + 1..n {
                m[r][c] = (piv * m[r][c] - m[r][col] * m[col][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = piv;
    }
    sign * m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- shipped families ----

    #[test]
    fn rank_one_matrix_is_the_doubled_bond() {
        let c = CartanData::affine_a1();
        assert_eq!(c.a(0, 1), -2);
        assert_eq!(c.a(1, 0), -2);
        assert_eq!(c.a(0, 0), 2);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn a_series_is_cyclic() {
        let c = CartanData::affine_a(3).unwrap();
        assert_eq!(c.nodes(), 4);
        assert_eq!(c.a(0, 3), -1);
        assert_eq!(c.a(3, 0), -1);
        assert_eq!(c.a(0, 2), 0);
        assert_eq!(c.a(1, 2), -1);
        for r in 1..=MAX_RANK {
            assert!(CartanData::affine_a(r).is_ok(), "rank {r} must build");
        }
        assert!(CartanData::affine_a(0).is_err());
        assert!(CartanData::affine_a(MAX_RANK + 1).is_err());
    }

    // ---- validation ----

    #[test]
    fn rejects_broken_kernel() {
        let err = CartanData::from_parts(
            "bad".into(),
            1,
            vec![vec![2, -2], vec![-2, 2]],
            vec![1, 1],
            vec![1, 2],
        )
        .unwrap_err();
        assert!(err.to_string().contains("kernel"), "got: {err}");
    }

    #[test]
    fn rejects_positive_off_diagonal() {
        let err = CartanData::from_parts(
            "bad".into(),
            1,
            vec![vec![2, 2], vec![2, 2]],
            vec![1, 1],
            vec![1, 1],
        )
        .unwrap_err();
        assert!(err.to_string().contains("off-diagonal"), "got: {err}");
    }

    #[test]
    fn rejects_non_symmetrizable_data() {
        let err = CartanData::from_parts(
            "bad".into(),
            2,
            vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]],
            vec![1, 1, 1],
            vec![1, 1, 1],
        )
        .unwrap_err();
        assert!(err.to_string().contains("symmetrizable"), "got: {err}");
    }

    #[test]
    fn json_round_trip_validates() {
        let c = CartanData::affine_a(2).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        let back: CartanData = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        // Corrupt the kernel property and confirm deserialization refuses.
        let bad = json.replace("\"kac\":[1,1,1]", "\"kac\":[1,1,3]");
        assert_ne!(bad, json);
        assert!(serde_json::from_str::<CartanData>(&bad).is_err());
    }

    // ---- determinant helper ----

    #[test]
    fn determinant_matches_cofactor_expansion() {
        assert_eq!(int_determinant(vec![vec![2]]), 2);
        assert_eq!(int_determinant(vec![vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(
            int_determinant(vec![
                vec![0, 1, 2],
                vec![3, 4, 5],
                vec![6, 7, 9],
            ]),
            -3
        );
        // The full affine matrix is singular.
        let c = CartanData::affine_a(4).unwrap();
        let full: Vec<Vec<i128>> = (0..c.nodes())
            .map(|i| (0..c.nodes()).map(|j| c.a(i, j) as i128).collect())
            .collect();
        assert_eq!(int_determinant(full), 0);
    }
}
