//! Permutations stored as image arrays.
//!
//! All indices are 1-based. A `Permutation` holds the images
//! `sigma(1), ..., sigma(n)`; the associated matrices used in `A = P L U Q`
//! are only materialized on demand (see [`Permutation::matrix`]).
//!
//! Convention: in a factorization, `sigma_P(t)` is the original row of the
//! matrix that ends up at working position `t`, so row `sigma_P(t)` of
//! `P * M` is row `t` of `M`, and likewise for columns on the `Q` side.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Which side of the matrix a permutation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Rows,
    Cols,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::IndexOutOfRange(format!(
                "transposition ({a}, {b}) on size {n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Self { images })
    }

    /// The (k, i)-rotation: the cyclic shift moving index `i` to position `k`
    /// while preserving the relative order of everything else.
    ///
    /// `rotation(1, 4, 4)` is `(4, 1, 2, 3)`; `rotation(k, k, n)` is the
    /// identity.
    pub fn rotation(k: usize, i: usize, n: usize) -> Result<Self> {
        if k == 0 || i == 0 || k > i || i > n {
            return Err(Error::IndexOutOfRange(format!(
                "rotation ({k}, {i}) on size {n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images[k - 1..i].rotate_right(1);
        Ok(Self { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `sigma(t)`, 1-based.
    #[inline]
    pub fn image(&self, t: usize) -> usize {
        self.images[t - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (t, &v) in self.images.iter().enumerate() {
            images[v - 1] = t + 1;
        }
        Self { images }
    }

    /// Composition `self . other`: `t -> self(other(t))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size(), "composing unequal sizes");
        Self {
            images: other.images.iter().map(|&t| self.images[t - 1]).collect(),
        }
    }

    /// True iff the last `n - k` images form a strictly increasing sequence.
    pub fn is_k_monotone(&self, k: usize) -> bool {
        self.images[k.min(self.images.len())..].windows(2).all(|w| w[0] < w[1])
    }

    /// Materializes the permutation matrix `P` used in `A = P L U Q`:
    /// the 0/1 matrix with a one at `(sigma(t), t)` for every `t`.
    pub fn matrix(&self, field: crate::field::PrimeField) -> DenseMatrix {
        let n = self.size();
        let mut m = DenseMatrix::zero(n, n, field);
        for t in 1..=n {
            m.set(self.image(t), t, 1);
        }
        m
    }

    /// Applies the permutation to one side of `A`.
    ///
    /// `Rows` with `transpose = false` computes `P A` (row `sigma(t)` of the
    /// result is row `t` of `A`); `transpose = true` computes `P^T A`.
    /// `Cols` computes `A P^T` and `A P` respectively, so that applying and
    /// then apply-transposing restores `A`.
    pub fn apply(&self, a: &DenseMatrix, side: Side, transpose: bool) -> Result<DenseMatrix> {
        let expect = match side {
            Side::Rows => a.rows(),
            Side::Cols => a.cols(),
        };
        if self.size() != expect {
            return Err(Error::DimensionMismatch(format!(
                "permutation of size {} applied to {} of size {}",
                self.size(),
                if side == Side::Rows { "rows" } else { "cols" },
                expect
            )));
        }
        let mut out = DenseMatrix::zero(a.rows(), a.cols(), a.field());
        match side {
            Side::Rows => {
                for t in 1..=a.rows() {
                    let (src, dst) = if transpose {
                        (self.image(t), t)
                    } else {
                        (t, self.image(t))
                    };
                    for j in 1..=a.cols() {
                        out.set(dst, j, a.get(src, j));
                    }
                }
            }
            Side::Cols => {
                for t in 1..=a.cols() {
                    let (src, dst) = if transpose {
                        (self.image(t), t)
                    } else {
                        (t, self.image(t))
                    };
                    for i in 1..=a.rows() {
                        out.set(i, dst, a.get(i, src));
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn rotation_examples() {
        assert_eq!(Permutation::rotation(1, 4, 4).unwrap().images(), &[4, 1, 2, 3]);
        assert!(Permutation::rotation(2, 2, 5).unwrap().is_identity());
        assert_eq!(
            Permutation::rotation(2, 4, 5).unwrap().images(),
            &[1, 4, 2, 3, 5]
        );
        assert!(Permutation::rotation(3, 2, 5).is_err());
        assert!(Permutation::rotation(1, 6, 5).is_err());
    }

    #[test]
    fn monotonicity() {
        let r14 = Permutation::rotation(1, 4, 4).unwrap();
        assert!(r14.is_k_monotone(1));
        assert!(!r14.is_k_monotone(0));
        assert!(Permutation::identity(5).is_k_monotone(0));
        assert!(!Permutation::from_images(vec![2, 1]).unwrap().is_k_monotone(0));
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![3, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_ok());
    }

    #[test]
    fn apply_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let a = DenseMatrix::from_rows(&[vec![1, 2], vec![3, 4]], f).unwrap();
        let sigma = Permutation::from_images(vec![2, 1]).unwrap();
        let b = sigma.apply(&a, Side::Rows, false).unwrap();
        assert_eq!(b.row(1), &[3, 4]);
        assert_eq!(b.row(2), &[1, 2]);
        let back = sigma.apply(&b, Side::Rows, true).unwrap();
        assert_eq!(back, a);
        let id = Permutation::identity(2);
        assert_eq!(id.apply(&a, Side::Cols, false).unwrap(), a);
    }

    #[test]
    fn compose_matches_matrix_product() {
        let f = PrimeField::new(101).unwrap();
        let s1 = Permutation::rotation(1, 3, 4).unwrap();
        let s2 = Permutation::rotation(2, 4, 4).unwrap();
        let c = s2.compose(&s1);
        for t in 1..=4 {
            assert_eq!(c.image(t), s2.image(s1.image(t)));
        }
        // P_{s2 . s1} = ... matches applying s1 then s2 to an identity matrix.
        let m = c.matrix(f);
        let m2 = s2
            .apply(&s1.apply(&Permutation::identity(4).matrix(f), Side::Rows, false).unwrap(),
                Side::Rows, false)
            .unwrap();
        assert_eq!(m, m2);
    }
}
