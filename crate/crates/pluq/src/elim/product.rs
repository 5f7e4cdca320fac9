//! Product-order pivot search with rotations on both sides, in
//! right-looking and left-looking schedules. Both reveal the rank profile
//! matrix; they produce identical factors and differ only in when the
//! updates are applied.

use crate::error::Result;
use crate::field::{PrimeField, ReductionCounter};
use crate::matrix::DenseMatrix;
use crate::perm::Permutation;
use crate::pivoting::{PermStrategy, SearchOrder};

use super::{extract_factors, pluq_iterative, PluqFactors, Strategy};

/// Right-looking schedule: eager trailing updates after every pivot.
pub fn pluq_right_looking_product(a: &DenseMatrix) -> Result<PluqFactors> {
    pluq_iterative(
        a,
        SearchOrder::Product,
        PermStrategy::Rotation,
        PermStrategy::Rotation,
    )
    .map(|f| f.with_strategy(Strategy::RightLookingProduct))
}

/// Left-looking schedule: each column remembers how many pivots have been
/// applied to it (`lvl`), and receives the missing contributions in one
/// batched dot product per entry when the search next needs its values.
pub fn pluq_left_looking_product(a: &DenseMatrix) -> Result<PluqFactors> {
    let (m, n) = (a.rows(), a.cols());
    let f = a.field();
    let mut w = a.clone();
    let mut p = Permutation::identity(m);
    let mut q = Permutation::identity(n);
    let mut ctr = ReductionCounter::new();
    let mut lvl = vec![0usize; n]; // per column position, pivots applied
    let mut k = 0;

    loop {
        // Column sweep of the product-order search: a column's topmost
        // non-zero is in the minimal antichain iff it is strictly above
        // every one found so far; the last survivor (smallest row) is the
        // lexicographically smallest element of the antichain.
        let mut best_i = m + 1;
        let mut candidate = None;
        for j in k + 1..=n {
            raise_col(&mut w, &mut lvl, j, k, f, &mut ctr)?;
            for i in k + 1..best_i {
                if w.get(i, j) != 0 {
                    candidate = Some((i, j));
                    best_i = i;
                    break;
                }
            }
        }
        let Some((pi, pj)) = candidate else {
            break;
        };
        k += 1;
        w.rotate_rows(k, pi);
        p = p.compose(&Permutation::rotation(k, pi, m)?);
        w.rotate_cols(k, pj);
        lvl[k - 1..pj].rotate_right(1);
        q = q.compose(&Permutation::rotation(k, pj, n)?);
        // The pivot column is fully updated; divide out the pivot.
        let inv = f.inv(w.get(k, k))?;
        for i in k + 1..=m {
            w.set(i, k, f.mul_counted(w.get(i, k), inv, &mut ctr));
        }
        lvl[k - 1] = k;
    }

    let (l, u) = extract_factors(&w, k);
    Ok(PluqFactors::new(
        p,
        q,
        l,
        u,
        k,
        Strategy::LeftLookingProduct,
        ctr,
    ))
}

/// Applies the pending updates of pivots `lvl[j]+1 ..= k` to column `j`:
/// first to the pivot rows that appeared since (each against the pivots
/// above it), then to the trailing rows.
fn raise_col(
    w: &mut DenseMatrix,
    lvl: &mut [usize],
    j: usize,
    k: usize,
    f: PrimeField,
    ctr: &mut ReductionCounter,
) -> Result<()> {
    let l0 = lvl[j - 1];
    if l0 >= k {
        return Ok(());
    }
    for s in l0 + 1..=k {
        if s - 1 > l0 {
            let uc: Vec<u64> = (l0 + 1..s).map(|t| w.get(t, j)).collect();
            let d = f.dot_accumulate_counted(&w.row(s)[l0..s - 1], &uc, ctr)?;
            let v = f.sub_counted(w.get(s, j), d, ctr);
            w.set(s, j, v);
        }
    }
    let uc: Vec<u64> = (l0 + 1..=k).map(|t| w.get(t, j)).collect();
    for i in k + 1..=w.rows() {
        let d = f.dot_accumulate_counted(&w.row(i)[l0..k], &uc, ctr)?;
        let v = f.sub_counted(w.get(i, j), d, ctr);
        w.set(i, j, v);
    }
    lvl[j - 1] = k;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::oracle;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn both_schedules_agree_and_reveal_rpm() {
        let mut state = 777u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state >> 11
        };
        for trial in 0..40 {
            let p = if trial % 2 == 0 { 7 } else { 131063 };
            let f = gf(p);
            let (m, n) = (1 + (next() % 6) as usize, 1 + (next() % 6) as usize);
            let mut a = DenseMatrix::zero(m, n, f);
            for i in 1..=m {
                for j in 1..=n {
                    let v = next();
                    a.set(i, j, if v % 2 == 0 { 0 } else { v % p });
                }
            }
            let right = pluq_right_looking_product(&a).unwrap();
            let left = pluq_left_looking_product(&a).unwrap();
            assert_eq!(left.rank(), right.rank());
            assert_eq!(left.p(), right.p(), "{a:?}");
            assert_eq!(left.q(), right.q(), "{a:?}");
            assert_eq!(left.l(), right.l(), "{a:?}");
            assert_eq!(left.u(), right.u(), "{a:?}");
            assert!(left.verify(&a).unwrap());
            assert_eq!(left.pivoting_matrix(), oracle::rpm_oracle(&a), "{a:?}");
            assert!(left.row_monotone() && left.col_monotone());
        }
    }

    #[test]
    fn example_matrix_pivots() {
        let a = oracle::example_matrix(101);
        let fac = pluq_left_looking_product(&a).unwrap();
        assert_eq!(fac.rank(), 3);
        assert_eq!(fac.pivoting_matrix().pivots(), &[(1, 1), (2, 3), (4, 2)]);
        assert_eq!(fac.strategy(), Strategy::LeftLookingProduct);
        let r = pluq_right_looking_product(&a).unwrap();
        assert_eq!(r.strategy(), Strategy::RightLookingProduct);
        assert!(r.strategy().reveals_rpm());
    }
}
