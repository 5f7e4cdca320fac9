//! r-sub-permutation matrices: rank-r 0/1 matrices with r ones, no two
//! sharing a row or column. They represent the rank profile matrix `R_A`,
//! the pivoting matrix `Pi_{P,Q}` and the `E` factor of an LEU
//! decomposition.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::DenseMatrix;
use crate::perm::Permutation;

/// An m x n matrix of rank r with exactly r entries equal to one.
///
/// Pivots are stored sorted by row index, so two values compare equal iff
/// they denote the same matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubPermutationMatrix {
    m: usize,
    n: usize,
    pivots: Vec<(usize, usize)>,
}

impl SubPermutationMatrix {
    pub fn new(m: usize, n: usize, mut pivots: Vec<(usize, usize)>) -> Result<Self> {
        if pivots.len() > m.min(n) {
            return Err(Error::RankTooLarge { r: pivots.len(), m, n });
        }
        pivots.sort_unstable();
        for w in pivots.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidSubPermutation(format!(
                    "duplicate row index {}",
                    w[0].0
                )));
            }
        }
        let mut cols: Vec<usize> = pivots.iter().map(|&(_, j)| j).collect();
        cols.sort_unstable();
        for w in cols.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidSubPermutation(format!(
                    "duplicate column index {}",
                    w[0]
                )));
            }
        }
        for &(i, j) in &pivots {
            if i == 0 || i > m || j == 0 || j > n {
                return Err(Error::InvalidSubPermutation(format!(
                    "pivot ({i}, {j}) outside {m}x{n}"
                )));
            }
        }
        Ok(Self { m, n, pivots })
    }

    /// The pivoting matrix `Pi_{P,Q} = P [I_r; 0] Q` of a PLUQ
    /// decomposition: ones at the original pivot positions
    /// `(sigma_P(t), sigma_Q(t))` for `t = 1..=r`.
    pub fn from_pluq_perms(p: &Permutation, q: &Permutation, r: usize) -> Result<Self> {
        let (m, n) = (p.size(), q.size());
        if r > m.min(n) {
            return Err(Error::RankTooLarge { r, m, n });
        }
        let pivots = (1..=r).map(|t| (p.image(t), q.image(t))).collect();
        Self::new(m, n, pivots)
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivots sorted by row index.
    pub fn pivots(&self) -> &[(usize, usize)] {
        &self.pivots
    }

    /// Sorted row and column supports.
    pub fn supports(&self) -> (Vec<usize>, Vec<usize>) {
        let rows: Vec<usize> = self.pivots.iter().map(|&(i, _)| i).collect();
        let mut cols: Vec<usize> = self.pivots.iter().map(|&(_, j)| j).collect();
        cols.sort_unstable();
        (rows, cols)
    }

    /// The dense 0/1 matrix with ones exactly at the pivot coordinates.
    pub fn expand(&self, field: PrimeField) -> DenseMatrix {
        let mut out = DenseMatrix::zero(self.m, self.n, field);
        for &(i, j) in &self.pivots {
            out.set(i, j, 1);
        }
        out
    }

    /// The leading (i, j) sub-matrix, keeping pivots inside the bounds.
    pub fn leading(&self, i: usize, j: usize) -> SubPermutationMatrix {
        let pivots = self
            .pivots
            .iter()
            .copied()
            .filter(|&(r, c)| r <= i && c <= j)
            .collect();
        SubPermutationMatrix {
            m: i,
            n: j,
            pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supports_and_expand() {
        let s = SubPermutationMatrix::new(4, 4, vec![(2, 3), (1, 1), (4, 2)]).unwrap();
        let (rs, cs) = s.supports();
        assert_eq!(rs, vec![1, 2, 4]);
        assert_eq!(cs, vec![1, 2, 3]);
        let f = PrimeField::new(101).unwrap();
        let d = s.expand(f);
        let expected = DenseMatrix::from_rows(
            &[
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 0],
                vec![0, 1, 0, 0],
            ],
            f,
        )
        .unwrap();
        assert_eq!(d, expected);

        let empty = SubPermutationMatrix::new(3, 2, vec![]).unwrap();
        assert_eq!(empty.supports(), (vec![], vec![]));
        assert!(empty.expand(f).is_zero());
        assert_eq!(
            SubPermutationMatrix::new(3, 3, vec![(1, 1), (2, 2)]).unwrap()
                .leading(1, 3).pivots(),
            &[(1, 1)]
        );
    }

    #[test]
    fn rejects_shared_rows_or_cols() {
        assert!(SubPermutationMatrix::new(3, 3, vec![(1, 1), (1, 2)]).is_err());
        assert!(SubPermutationMatrix::new(3, 3, vec![(1, 1), (2, 1)]).is_err());
        assert!(SubPermutationMatrix::new(2, 2, vec![(1, 1), (2, 2), (3, 3)]).is_err());
        assert!(SubPermutationMatrix::new(2, 2, vec![(3, 1)]).is_err());
    }

    #[test]
    fn pivoting_matrix_from_perms() {
        let p = Permutation::from_images(vec![2, 1]).unwrap();
        let q = Permutation::identity(2);
        let s = SubPermutationMatrix::from_pluq_perms(&p, &q, 1).unwrap();
        assert_eq!(s.pivots(), &[(2, 1)]);
        let none = SubPermutationMatrix::from_pluq_perms(&p, &q, 0).unwrap();
        assert_eq!(none.rank(), 0);
        assert!(SubPermutationMatrix::from_pluq_perms(&p, &q, 3).is_err());
    }
}
