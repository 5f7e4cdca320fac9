//! Pivot search and pivot permutation strategies.
//!
//! A Gaussian elimination step is parameterized by two independent choices:
//! how to search the trailing working region for the next pivot (one of
//! five preorders on positions), and how to move the chosen pivot to the
//! diagonal (transposition or rotation, independently per side).

use crate::matrix::DenseMatrix;
use crate::perm::Permutation;

/// Preorder minimized by the pivot search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOrder {
    /// Any non-zero of the first non-zero row (ties: leftmost).
    RowOrder,
    /// Any non-zero of the first non-zero column (ties: topmost).
    ColOrder,
    /// Leftmost non-zero of the first non-zero row.
    Lex,
    /// Topmost non-zero of the first non-zero column.
    RevLex,
    /// A non-zero that is the only non-zero of its leading sub-region
    /// (ties: lexicographically smallest of the minimal antichain).
    Product,
}

/// How a chosen pivot is moved to the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermStrategy {
    Transposition,
    Rotation,
}

/// A pivot position, in absolute working-matrix coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PivotChoice {
    pub i: usize,
    pub j: usize,
}

/// Finds a minimal non-zero position of the trailing region
/// (rows `k+1..=m`, columns `k+1..=n`) under `order`, or `None` if the
/// region is all zero. Ties are broken deterministically as documented on
/// [`SearchOrder`].
pub fn search_pivot(a: &DenseMatrix, k: usize, order: SearchOrder) -> Option<PivotChoice> {
    let (m, n) = (a.rows(), a.cols());
    if k >= m || k >= n {
        return None;
    }
    match order {
        SearchOrder::RowOrder | SearchOrder::Lex => {
            for i in k + 1..=m {
                for j in k + 1..=n {
                    if a.get(i, j) != 0 {
                        return Some(PivotChoice { i, j });
                    }
                }
            }
            None
        }
        SearchOrder::ColOrder | SearchOrder::RevLex => {
            for j in k + 1..=n {
                for i in k + 1..=m {
                    if a.get(i, j) != 0 {
                        return Some(PivotChoice { i, j });
                    }
                }
            }
            None
        }
        SearchOrder::Product => {
            // Minimal antichain: non-zeros whose leading sub-region contains
            // no other non-zero. Scanning rows top-down, `best_j` is the
            // leftmost non-zero column seen so far; a non-zero at (i, j) is
            // minimal iff j < best_j.
            let mut best_j = n + 1;
            let mut minimal: Option<PivotChoice> = None;
            for i in k + 1..=m {
                for j in k + 1..best_j {
                    if a.get(i, j) != 0 {
                        // lexicographically first among the antichain: the
                        // first one found by this scan.
                        minimal.get_or_insert(PivotChoice { i, j });
                        best_j = j;
                        break;
                    }
                }
            }
            minimal
        }
    }
}

/// Moves the pivot at `choice` to position `(k, k)`, physically permuting
/// the working matrix and composing the accumulated permutations so that
/// `sigma_P(t)` / `sigma_Q(t)` keep tracking the original row / column now
/// at working position `t`.
pub fn move_pivot(
    a: &mut DenseMatrix,
    p_acc: &mut Permutation,
    q_acc: &mut Permutation,
    choice: PivotChoice,
    k: usize,
    row_strat: PermStrategy,
    col_strat: PermStrategy,
) {
    debug_assert!(choice.i >= k && choice.j >= k);
    match row_strat {
        PermStrategy::Transposition => {
            a.swap_rows(k, choice.i);
            let t = Permutation::transposition(k, choice.i, p_acc.size())
                .expect("indices validated by caller");
            *p_acc = p_acc.compose(&t);
        }
        PermStrategy::Rotation => {
            a.rotate_rows(k, choice.i);
            let r = Permutation::rotation(k, choice.i, p_acc.size())
                .expect("indices validated by caller");
            *p_acc = p_acc.compose(&r);
        }
    }
    match col_strat {
        PermStrategy::Transposition => {
            a.swap_cols(k, choice.j);
            let t = Permutation::transposition(k, choice.j, q_acc.size())
                .expect("indices validated by caller");
            *q_acc = q_acc.compose(&t);
        }
        PermStrategy::Rotation => {
            a.rotate_cols(k, choice.j);
            let r = Permutation::rotation(k, choice.j, q_acc.size())
                .expect("indices validated by caller");
            *q_acc = q_acc.compose(&r);
        }
    }
}
