//! Brute-force ground truth for ranks, rank profiles and the rank profile
//! matrix.
//!
//! Everything here is deliberately naive and shares no code with the
//! elimination engines it validates: `rank` is a fresh textbook
//! elimination, and `rpm_oracle` follows the inductive construction of the
//! rank profile matrix row by row (if adding row i+1 grows the rank, place
//! a pivot at the smallest column k where the leading-block rank grows).
//! None of this is meant to be fast; it is test scaffolding for small
//! matrices.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::subperm::SubPermutationMatrix;

/// A strictly increasing list of independent row or column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    indices: Vec<usize>,
}

impl RankProfile {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::DimensionMismatch(
                "rank profile indices must be strictly increasing".into(),
            ));
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Rank over GF(p) by plain Gaussian elimination with partial search.
pub fn rank(a: &DenseMatrix) -> usize {
    let f = a.field();
    let mut w = a.clone();
    let (m, n) = (w.rows(), w.cols());
    let mut r = 0;
    for j in 1..=n {
        // topmost non-zero entry of column j at or below row r+1
        let Some(piv) = (r + 1..=m).find(|&i| w.get(i, j) != 0) else {
            continue;
        };
        w.swap_rows(r + 1, piv);
        let inv = f.inv(w.get(r + 1, j)).expect("pivot is non-zero");
        for i in r + 2..=m {
            let c = f.mul(w.get(i, j), inv);
            if c == 0 {
                continue;
            }
            for jj in j..=n {
                let v = f.sub(w.get(i, jj), f.mul(c, w.get(r + 1, jj)));
                w.set(i, jj, v);
            }
        }
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

/// The rank profile matrix `R_A`, built by the inductive construction.
pub fn rpm_oracle(a: &DenseMatrix) -> SubPermutationMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut prev_full = 0; // rank of rows 1..i
    for i in 1..=m {
        let cur_full = rank(&a.leading(i, n));
        if cur_full == prev_full {
            continue;
        }
        // smallest k where rank(A[1..i, 1..k]) = rank(A[1..i-1, 1..k]) + 1
        let k = (1..=n)
            .find(|&k| rank(&a.leading(i, k)) == rank(&a.leading(i - 1, k)) + 1)
            .expect("full-width rank grew, so some leading block must too");
        pivots.push((i, k));
        prev_full = cur_full;
    }
    SubPermutationMatrix::new(m, n, pivots).expect("construction yields distinct rows and columns")
}

/// Lexicographically smallest sequence of independent rows: greedily keep
/// each row that increases the rank of the kept set.
pub fn row_rank_profile(a: &DenseMatrix) -> RankProfile {
    let mut kept: Vec<usize> = Vec::new();
    let mut current = 0;
    for i in 1..=a.rows() {
        kept.push(i);
        let sub = select_rows(a, &kept);
        let r = rank(&sub);
        if r > current {
            current = r;
        } else {
            kept.pop();
        }
    }
    RankProfile::new(kept).expect("indices pushed in increasing order")
}

pub fn col_rank_profile(a: &DenseMatrix) -> RankProfile {
    row_rank_profile(&a.transpose())
}

fn select_rows(a: &DenseMatrix, rows: &[usize]) -> DenseMatrix {
    let mut out = DenseMatrix::zero(rows.len(), a.cols(), a.field());
    for (oi, &i) in rows.iter().enumerate() {
        for j in 1..=a.cols() {
            out.set(oi + 1, j, a.get(i, j));
        }
    }
    out
}

/// True iff the first `min(m, n, r)` leading principal minors are non-zero,
/// with `r = rank(a)` (the generic rank profile condition).
pub fn has_generic_rank_profile(a: &DenseMatrix) -> bool {
    let r = rank(a);
    (1..=r).all(|k| k <= a.rows().min(a.cols()) && rank(&a.leading(k, k)) == k)
}

/// The running 4x4 example: rank 3, R_A pivots {(1,1), (2,3), (4,2)}.
#[cfg(test)]
pub(crate) fn example_matrix(p: u64) -> DenseMatrix {
    let f = crate::field::PrimeField::new(p).unwrap();
    DenseMatrix::from_rows(
        &[
            vec![2, 0, 3, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 4, 0],
            vec![0, 2, 0, 1],
        ],
        f,
    )
    .unwrap()
}
