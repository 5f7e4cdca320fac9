//! Forms derived from a rank-profile-revealing PLUQ decomposition: column
//! and row echelon forms (including those of any leading sub-matrix), the
//! LEU decomposition, the Bruhat decomposition and a genericity report.
//!
//! Everything here requires factors whose pivoting matrix is the rank
//! profile matrix and whose permutations are rotation-shaped (monotone
//! outside the pivots); other factorizations are rejected with
//! [`Error::StrategyNotRevealing`].

use crate::elim::{pluq_crout_lex, pluq_iterative, PluqFactors};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::oracle;
use crate::perm::{Permutation, Side};
use crate::pivoting::{PermStrategy, SearchOrder};
use crate::subperm::SubPermutationMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EchelonKind {
    Column,
    Row,
}

/// An echelon form together with its pivot positions, sorted along the
/// echelon's staircase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonForm {
    matrix: DenseMatrix,
    pivots: Vec<(usize, usize)>,
    kind: EchelonKind,
}

impl EchelonForm {
    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn pivots(&self) -> &[(usize, usize)] {
        &self.pivots
    }

    pub fn kind(&self) -> EchelonKind {
        self.kind
    }

    /// Structural staircase check: unit pivots in strictly increasing
    /// positions, zeros before each pivot, and nothing outside the pivot
    /// columns (respectively rows).
    pub fn is_staircase(&self) -> bool {
        let a = &self.matrix;
        match self.kind {
            EchelonKind::Column => {
                let mut prev_row = 0;
                for (idx, &(pi, pj)) in self.pivots.iter().enumerate() {
                    if pj != idx + 1 || pi <= prev_row || a.get(pi, pj) != 1 {
                        return false;
                    }
                    if (1..pi).any(|i| a.get(i, pj) != 0) {
                        return false;
                    }
                    prev_row = pi;
                }
                (self.pivots.len() + 1..=a.cols())
                    .all(|j| (1..=a.rows()).all(|i| a.get(i, j) == 0))
            }
            EchelonKind::Row => {
                let mut prev_col = 0;
                for (idx, &(pi, pj)) in self.pivots.iter().enumerate() {
                    if pi != idx + 1 || pj <= prev_col || a.get(pi, pj) == 0 {
                        return false;
                    }
                    if (1..pj).any(|j| a.get(pi, j) != 0) {
                        return false;
                    }
                    prev_col = pj;
                }
                (self.pivots.len() + 1..=a.rows())
                    .all(|i| (1..=a.cols()).all(|j| a.get(i, j) == 0))
            }
        }
    }
}

fn require_revealing(fac: &PluqFactors) -> Result<()> {
    if fac.strategy().reveals_rpm() && fac.row_monotone() && fac.col_monotone() {
        Ok(())
    } else {
        Err(Error::StrategyNotRevealing)
    }
}

/// Column echelon form of the factored matrix: the columns of `P L`,
/// reordered so their pivot rows increase, padded with zero columns.
pub fn column_echelon(fac: &PluqFactors) -> Result<EchelonForm> {
    require_revealing(fac)?;
    let (m, n) = (fac.p().size(), fac.q().size());
    leading_column_echelon_inner(fac, m, n)
}

/// Column echelon form of the leading `i x j` sub-matrix, read directly off
/// the factors of the whole matrix.
pub fn leading_echelon(fac: &PluqFactors, i: usize, j: usize) -> Result<EchelonForm> {
    require_revealing(fac)?;
    if i > fac.p().size() || j > fac.q().size() {
        return Err(Error::IndexOutOfRange(format!(
            "leading ({i}, {j}) block of a {}x{} matrix",
            fac.p().size(),
            fac.q().size()
        )));
    }
    leading_column_echelon_inner(fac, i, j)
}

fn leading_column_echelon_inner(fac: &PluqFactors, i: usize, j: usize) -> Result<EchelonForm> {
    let pl = fac.p().apply(fac.l(), Side::Rows, false)?;
    // Pivots inside the first j columns, walked in pivot-row order.
    let mut kept: Vec<usize> = (1..=fac.rank())
        .filter(|&t| fac.q().image(t) <= j)
        .collect();
    kept.sort_by_key(|&t| fac.p().image(t));
    let mut c = DenseMatrix::zero(i, j, pl.field());
    let mut pivots = Vec::new();
    for (col, &t) in kept.iter().enumerate() {
        for row in 1..=i {
            c.set(row, col + 1, pl.get(row, t));
        }
        if fac.p().image(t) <= i {
            pivots.push((fac.p().image(t), col + 1));
        }
    }
    Ok(EchelonForm {
        matrix: c,
        pivots,
        kind: EchelonKind::Column,
    })
}

/// Row echelon form of the factored matrix: the rows of `U Q`, reordered so
/// their pivot columns increase, padded with zero rows.
pub fn row_echelon(fac: &PluqFactors) -> Result<EchelonForm> {
    require_revealing(fac)?;
    let (m, n) = (fac.p().size(), fac.q().size());
    let uq = fac.q().apply(fac.u(), Side::Cols, false)?;
    let mut order: Vec<usize> = (1..=fac.rank()).collect();
    order.sort_by_key(|&t| fac.q().image(t));
    let mut rmat = DenseMatrix::zero(m, n, uq.field());
    let mut pivots = Vec::new();
    for (row, &t) in order.iter().enumerate() {
        for col in 1..=n {
            rmat.set(row + 1, col, uq.get(t, col));
        }
        pivots.push((row + 1, fac.q().image(t)));
    }
    Ok(EchelonForm {
        matrix: rmat,
        pivots,
        kind: EchelonKind::Row,
    })
}

/// An LEU decomposition `A = L E U` with `L` unit lower triangular, `U`
/// upper triangular with invertible diagonal, and `E` the rank profile
/// matrix.
#[derive(Debug, Clone)]
pub struct LeuFactors {
    l: DenseMatrix,
    e: SubPermutationMatrix,
    u: DenseMatrix,
}

impl LeuFactors {
    pub fn l(&self) -> &DenseMatrix {
        &self.l
    }

    pub fn e(&self) -> &SubPermutationMatrix {
        &self.e
    }

    pub fn u(&self) -> &DenseMatrix {
        &self.u
    }

    /// Recomputes `L E U`.
    pub fn reconstruct(&self) -> Result<DenseMatrix> {
        self.l
            .matmul(&self.e.expand(self.l.field()))?
            .matmul(&self.u)
    }
}

/// Expands revealing PLUQ factors into an LEU decomposition: the entries of
/// `L` (resp. `U`) are scattered from position space to the original row
/// (resp. column) indices, and the free non-pivot diagonal entries are set
/// to one so both factors are invertible.
pub fn leu(fac: &PluqFactors) -> Result<LeuFactors> {
    require_revealing(fac)?;
    let (m, n) = (fac.p().size(), fac.q().size());
    let r = fac.rank();
    let f = fac.l().field();
    let mut lbar = DenseMatrix::zero(m, m, f);
    for a in 1..=m {
        for b in 1..=r.min(a) {
            lbar.set(fac.p().image(a), fac.p().image(b), fac.l().get(a, b));
        }
    }
    for a in r + 1..=m {
        let i = fac.p().image(a);
        lbar.set(i, i, 1);
    }
    let mut ubar = DenseMatrix::zero(n, n, f);
    for a in 1..=r {
        for b in a..=n {
            ubar.set(fac.q().image(a), fac.q().image(b), fac.u().get(a, b));
        }
    }
    for b in r + 1..=n {
        let j = fac.q().image(b);
        ubar.set(j, j, 1);
    }
    Ok(LeuFactors {
        l: lbar,
        e: fac.pivoting_matrix(),
        u: ubar,
    })
}

/// A Bruhat decomposition `A = V R U` with `V` upper triangular
/// invertible, `U` upper triangular invertible and `R` an r-sub-permutation
/// matrix.
#[derive(Debug, Clone)]
pub struct BruhatFactors {
    v: DenseMatrix,
    r: SubPermutationMatrix,
    u: DenseMatrix,
}

impl BruhatFactors {
    pub fn v(&self) -> &DenseMatrix {
        &self.v
    }

    pub fn r(&self) -> &SubPermutationMatrix {
        &self.r
    }

    pub fn u(&self) -> &DenseMatrix {
        &self.u
    }

    pub fn reconstruct(&self) -> Result<DenseMatrix> {
        self.v
            .matmul(&self.r.expand(self.v.field()))?
            .matmul(&self.u)
    }
}

/// Bruhat decomposition, obtained from the LEU decomposition of `J A`
/// (`J` the order-reversal permutation): `A = (J L J)(J E) U`.
pub fn bruhat(a: &DenseMatrix) -> Result<BruhatFactors> {
    let m = a.rows();
    let rev = Permutation::from_images((1..=m).rev().collect())?;
    let ja = rev.apply(a, Side::Rows, false)?;
    let fac = pluq_crout_lex(&ja)?;
    let leu = leu(&fac)?;
    // reverse rows and columns of the lower factor
    let v = rev
        .apply(&rev.apply(leu.l(), Side::Rows, false)?, Side::Cols, false)?;
    let pivots = leu
        .e()
        .pivots()
        .iter()
        .map(|&(i, j)| (m + 1 - i, j))
        .collect();
    let r = SubPermutationMatrix::new(m, a.cols(), pivots)?;
    Ok(BruhatFactors {
        v,
        r,
        u: leu.u().clone(),
    })
}

/// What the rank profiles of a matrix look like, with an operational
/// cross-check: when the column rank profile is generic, a reverse
/// lexicographic search with row rotations needs no column permutation at
/// all, and the rank profile matrix pivots sit at `(sigma_P(t), t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericityReport {
    pub rank: usize,
    /// Row rank profile is `1..=rank`.
    pub generic_row: bool,
    /// Column rank profile is `1..=rank`.
    pub generic_col: bool,
    /// All leading minors up to the rank are invertible.
    pub generic: bool,
    /// When `generic_col`: whether the RevLex / rotation-row elimination
    /// indeed left the columns untouched and placed pivots at
    /// `(sigma_P(t), t)`.
    pub revlex_q_identity: Option<bool>,
}

pub fn generic_profile_check(a: &DenseMatrix) -> Result<GenericityReport> {
    let r = oracle::rank(a);
    let generic_row = oracle::row_rank_profile(a).indices() == (1..=r).collect::<Vec<_>>();
    let generic_col = oracle::col_rank_profile(a).indices() == (1..=r).collect::<Vec<_>>();
    let generic = oracle::has_generic_rank_profile(a);
    let revlex_q_identity = if generic_col {
        let fac = pluq_iterative(
            a,
            SearchOrder::RevLex,
            PermStrategy::Rotation,
            PermStrategy::Transposition,
        )?;
        let expected: Vec<(usize, usize)> = {
            let mut v: Vec<(usize, usize)> =
                (1..=fac.rank()).map(|t| (fac.p().image(t), t)).collect();
            v.sort_unstable();
            v
        };
        Some(fac.q().is_identity() && fac.pivoting_matrix().pivots() == expected.as_slice())
    } else {
        None
    };
    Ok(GenericityReport {
        rank: r,
        generic_row,
        generic_col,
        generic,
        revlex_q_identity,
    })
}
