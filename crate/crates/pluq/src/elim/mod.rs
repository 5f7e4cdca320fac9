//! PLUQ elimination engines.
//!
//! All engines produce the same kind of factorization `A = P L U Q` with
//! `L` unit lower triangular in its top r x r and `U` upper triangular with
//! non-zero diagonal in its left r x r; they differ in pivot search order,
//! pivot permutation strategy and update schedule, which determines what
//! rank profile information the pivoting matrix reveals.

mod crout;
mod iterative;
mod product;
mod recursive;

pub use crout::pluq_crout_lex;
pub use iterative::pluq_iterative;
pub use product::{pluq_left_looking_product, pluq_right_looking_product};
pub use recursive::pluq_tile_recursive;

use crate::error::Result;
use crate::field::ReductionCounter;
use crate::matrix::DenseMatrix;
use crate::oracle;
use crate::perm::{Permutation, Side};
use crate::pivoting::{PermStrategy, SearchOrder};
use crate::subperm::SubPermutationMatrix;

/// Which engine and strategy produced a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Iterative {
        order: SearchOrder,
        row_perm: PermStrategy,
        col_perm: PermStrategy,
    },
    CroutLex,
    LeftLookingProduct,
    RightLookingProduct,
    TileRecursive {
        threshold: usize,
    },
}

impl Strategy {
    /// Whether this strategy guarantees `Pi_{P,Q} = R_A` (the "Reveals"
    /// column of the pivoting-strategy table).
    pub fn reveals_rpm(&self) -> bool {
        use PermStrategy::*;
        use SearchOrder::*;
        match *self {
            Strategy::CroutLex
            | Strategy::LeftLookingProduct
            | Strategy::RightLookingProduct
            | Strategy::TileRecursive { .. } => true,
            Strategy::Iterative {
                order,
                row_perm,
                col_perm,
            } => matches!(
                (order, row_perm, col_perm),
                (Lex, Transposition, Rotation)
                    | (Lex, Rotation, Rotation)
                    | (RevLex, Rotation, Transposition)
                    | (RevLex, Rotation, Rotation)
                    | (Product, Rotation, Rotation)
            ),
        }
    }
}

/// A PLUQ decomposition: `A = P L U Q`.
///
/// `p.image(t)` / `q.image(t)` give the original row / column of the pivot
/// at diagonal position `t <= rank`; positions beyond the rank track where
/// the dependent rows and columns went.
#[derive(Debug, Clone)]
pub struct PluqFactors {
    p: Permutation,
    q: Permutation,
    l: DenseMatrix,
    u: DenseMatrix,
    rank: usize,
    strategy: Strategy,
    reductions: ReductionCounter,
}

impl PluqFactors {
    pub(crate) fn new(
        p: Permutation,
        q: Permutation,
        l: DenseMatrix,
        u: DenseMatrix,
        rank: usize,
        strategy: Strategy,
        reductions: ReductionCounter,
    ) -> Self {
        debug_assert_eq!(l.cols(), rank);
        debug_assert_eq!(u.rows(), rank);
        debug_assert_eq!(l.rows(), p.size());
        debug_assert_eq!(u.cols(), q.size());
        Self {
            p,
            q,
            l,
            u,
            rank,
            strategy,
            reductions,
        }
    }

    pub(crate) fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn p(&self) -> &Permutation {
        &self.p
    }

    pub fn q(&self) -> &Permutation {
        &self.q
    }

    /// `L`: m x r, unit lower triangular in its top r x r.
    pub fn l(&self) -> &DenseMatrix {
        &self.l
    }

    /// `U`: r x n, upper triangular with non-zero diagonal in its left r x r.
    pub fn u(&self) -> &DenseMatrix {
        &self.u
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn reductions(&self) -> u64 {
        self.reductions.count()
    }

    /// The pivoting matrix `Pi_{P,Q} = P [I_r; 0] Q`.
    pub fn pivoting_matrix(&self) -> SubPermutationMatrix {
        SubPermutationMatrix::from_pluq_perms(&self.p, &self.q, self.rank)
            .expect("rank bounded by construction")
    }

    /// Recomputes `P L U Q`.
    pub fn reconstruct(&self) -> Result<DenseMatrix> {
        let lu = self.l.matmul(&self.u)?;
        let luq = self.q.apply(&lu, Side::Cols, false)?;
        self.p.apply(&luq, Side::Rows, false)
    }

    /// `sigma_P` strictly increasing on positions `rank+1..=m`.
    pub fn row_monotone(&self) -> bool {
        self.p.is_k_monotone(self.rank)
    }

    /// `sigma_Q` strictly increasing on positions `rank+1..=n`.
    pub fn col_monotone(&self) -> bool {
        self.q.is_k_monotone(self.rank)
    }

    /// Checks the structural invariants: unit lower / upper triangular
    /// factors and exact reconstruction of `a`.
    pub fn verify(&self, a: &DenseMatrix) -> Result<bool> {
        let r = self.rank;
        for t in 1..=r {
            if self.l.get(t, t) != 1 || self.u.get(t, t) == 0 {
                return Ok(false);
            }
            for s in t + 1..=r {
                if self.l.get(t, s) != 0 {
                    return Ok(false);
                }
            }
            for s in 1..t {
                if self.u.get(t, s) != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(self.reconstruct()? == *a)
    }
}

/// One row of the pivoting-strategy table: what an iterative elimination
/// with this search order and permutation strategies is guaranteed to
/// reveal, and which permutation monotonicity it preserves.
#[derive(Debug, Clone, Copy)]
pub struct StrategyTableRow {
    pub order: SearchOrder,
    pub row_perm: PermStrategy,
    pub col_perm: PermStrategy,
    pub reveals_row_rp: bool,
    pub reveals_col_rp: bool,
    pub reveals_rpm: bool,
    pub mono_row: bool,
    pub mono_col: bool,
}

impl StrategyTableRow {
    pub fn label(&self) -> String {
        let o = match self.order {
            SearchOrder::RowOrder => "row",
            SearchOrder::ColOrder => "col",
            SearchOrder::Lex => "lex",
            SearchOrder::RevLex => "revlex",
            SearchOrder::Product => "product",
        };
        let s = |p: PermStrategy| match p {
            PermStrategy::Transposition => "trans",
            PermStrategy::Rotation => "rot",
        };
        format!("{o}/{}/{}", s(self.row_perm), s(self.col_perm))
    }
}

/// The pivoting-strategy table: every search-order / permutation
/// combination with a guarantee, and exactly what it guarantees.
pub fn strategy_table() -> Vec<StrategyTableRow> {
    use PermStrategy::{Rotation as R, Transposition as T};
    use SearchOrder::*;
    let row = |order, rp, cp, rrp, crp, rpm, mr, mc| StrategyTableRow {
        order,
        row_perm: rp,
        col_perm: cp,
        reveals_row_rp: rrp,
        reveals_col_rp: crp,
        reveals_rpm: rpm,
        mono_row: mr,
        mono_col: mc,
    };
    vec![
        row(RowOrder, T, T, true, false, false, false, false),
        row(ColOrder, T, T, false, true, false, false, false),
        row(Lex, T, T, true, false, false, false, false),
        row(Lex, T, R, true, true, true, false, true),
        row(Lex, R, R, true, true, true, true, true),
        row(RevLex, T, T, false, true, false, false, false),
        row(RevLex, R, T, true, true, true, true, false),
        row(RevLex, R, R, true, true, true, true, true),
        row(Product, R, T, true, false, false, true, false),
        row(Product, T, R, false, true, false, false, true),
        row(Product, R, R, true, true, true, true, true),
    ]
}

/// Runs the iterative elimination for one table row on `a` and checks every
/// claim of that row, returning the names of any violated claims.
pub fn check_table_row(a: &DenseMatrix, row: &StrategyTableRow) -> Result<Vec<&'static str>> {
    let fac = pluq_iterative(a, row.order, row.row_perm, row.col_perm)?;
    let mut violations = Vec::new();
    if !fac.verify(a)? {
        violations.push("reconstruction");
    }
    let pi = fac.pivoting_matrix();
    let (row_sup, col_sup) = pi.supports();
    if row.reveals_row_rp && row_sup != oracle::row_rank_profile(a).indices() {
        violations.push("RowRP");
    }
    if row.reveals_col_rp && col_sup != oracle::col_rank_profile(a).indices() {
        violations.push("ColRP");
    }
    if row.reveals_rpm && pi != oracle::rpm_oracle(a) {
        violations.push("RPM");
    }
    if row.mono_row && !fac.row_monotone() {
        violations.push("MonoRow");
    }
    if row.mono_col && !fac.col_monotone() {
        violations.push("MonoCol");
    }
    Ok(violations)
}

/// Reads the `L` and `U` factors out of a worked array in which the strict
/// lower part of the first `r` columns holds multipliers and rows `1..=r`
/// hold the upper factor.
pub(crate) fn extract_factors(w: &DenseMatrix, r: usize) -> (DenseMatrix, DenseMatrix) {
    let (m, n) = (w.rows(), w.cols());
    let f = w.field();
    let mut l = DenseMatrix::zero(m, r, f);
    let mut u = DenseMatrix::zero(r, n, f);
    for t in 1..=m {
        for s in 1..=r.min(t) {
            if s == t {
                l.set(t, s, 1);
            } else {
                l.set(t, s, w.get(t, s));
            }
        }
    }
    for t in 1..=r {
        for j in t..=n {
            u.set(t, j, w.get(t, j));
        }
    }
    (l, u)
}
