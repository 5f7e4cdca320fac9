//! Right-looking iterative Gaussian elimination, generic over the pivot
//! search order and the per-side permutation strategies.

use crate::error::Result;
use crate::field::ReductionCounter;
use crate::matrix::DenseMatrix;
use crate::perm::Permutation;
use crate::pivoting::{move_pivot, search_pivot, PermStrategy, SearchOrder};

use super::{extract_factors, PluqFactors, Strategy};

/// PLUQ by right-looking elimination: at each step, search the trailing
/// region under `order`, move the pivot to the diagonal with the given
/// strategies, then eliminate the whole trailing column and update the
/// trailing block.
pub fn pluq_iterative(
    a: &DenseMatrix,
    order: SearchOrder,
    row_perm: PermStrategy,
    col_perm: PermStrategy,
) -> Result<PluqFactors> {
    let (m, n) = (a.rows(), a.cols());
    let f = a.field();
    let mut w = a.clone();
    let mut p = Permutation::identity(m);
    let mut q = Permutation::identity(n);
    let mut ctr = ReductionCounter::new();
    let mut k = 0;
    while let Some(choice) = search_pivot(&w, k, order) {
        k += 1;
        move_pivot(&mut w, &mut p, &mut q, choice, k, row_perm, col_perm);
        let inv = f.inv(w.get(k, k))?;
        for i in k + 1..=m {
            let c = f.mul_counted(w.get(i, k), inv, &mut ctr);
            w.set(i, k, c);
            if c == 0 {
                continue;
            }
            for j in k + 1..=n {
                let v = f.sub_counted(w.get(i, j), f.mul_counted(c, w.get(k, j), &mut ctr), &mut ctr);
                w.set(i, j, v);
            }
        }
    }
    let (l, u) = extract_factors(&w, k);
    Ok(PluqFactors::new(
        p,
        q,
        l,
        u,
        k,
        Strategy::Iterative {
            order,
            row_perm,
            col_perm,
        },
        ctr,
    ))
}
