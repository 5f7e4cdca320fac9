//! Crout-scheduled elimination with lexicographic pivot search and
//! rotations on both sides.
//!
//! Updates are deferred: a row receives all contributions from earlier
//! pivots in one batched dot product the moment it is visited, and only the
//! pivot's own column is updated below it. This performs far fewer modular
//! reductions than a right-looking schedule while producing the same
//! rotation-based PLUQ, whose pivoting matrix is the rank profile matrix.

use crate::error::Result;
use crate::field::ReductionCounter;
use crate::matrix::DenseMatrix;
use crate::perm::Permutation;

use super::{extract_factors, PluqFactors, Strategy};

/// Bare factorization output shared with the tile-recursive engine.
pub(crate) struct RawFactors {
    pub p: Permutation,
    pub q: Permutation,
    pub l: DenseMatrix,
    pub u: DenseMatrix,
    pub r: usize,
}

pub fn pluq_crout_lex(a: &DenseMatrix) -> Result<PluqFactors> {
    let mut ctr = ReductionCounter::new();
    let raw = crout_inner(a, &mut ctr)?;
    Ok(PluqFactors::new(
        raw.p,
        raw.q,
        raw.l,
        raw.u,
        raw.r,
        Strategy::CroutLex,
        ctr,
    ))
}

pub(crate) fn crout_inner(a: &DenseMatrix, ctr: &mut ReductionCounter) -> Result<RawFactors> {
    let (m, n) = (a.rows(), a.cols());
    let f = a.field();
    let mut w = a.clone();
    let mut p = Permutation::identity(m);
    let mut q = Permutation::identity(n);
    let mut k = 0; // pivots found so far; rows 1..=k and cols 1..=k are settled

    for i in 1..=m {
        // Deferred update of row i against the k settled pivots, then find
        // its leftmost non-zero in the trailing columns.
        if k > 0 {
            for j in k + 1..=n {
                let uc: Vec<u64> = (1..=k).map(|t| w.get(t, j)).collect();
                let d = f.dot_accumulate_counted(&w.row(i)[..k], &uc, ctr)?;
                let v = f.sub_counted(w.get(i, j), d, ctr);
                w.set(i, j, v);
            }
        }
        let Some(s) = (k + 1..=n).find(|&j| w.get(i, j) != 0) else {
            continue; // row i is dependent; its multipliers stay in cols 1..=k
        };
        // Bring the pivot column up to date below row i and divide by the
        // pivot to form the multipliers.
        let uc: Vec<u64> = (1..=k).map(|t| w.get(t, s)).collect();
        let inv = f.inv(w.get(i, s))?;
        for r in i + 1..=m {
            let mut v = w.get(r, s);
            if k > 0 {
                let d = f.dot_accumulate_counted(&w.row(r)[..k], &uc, ctr)?;
                v = f.sub_counted(v, d, ctr);
            }
            w.set(r, s, f.mul_counted(v, inv, ctr));
        }
        // Rotations keep the relative order of the untouched rows/columns.
        w.rotate_cols(k + 1, s);
        q = q.compose(&Permutation::rotation(k + 1, s, n)?);
        w.rotate_rows(k + 1, i);
        p = p.compose(&Permutation::rotation(k + 1, i, m)?);
        k += 1;
    }

    let (l, u) = extract_factors(&w, k);
    Ok(RawFactors { p, q, l, u, r: k })
}
