//! Seeded test-matrix generation.
//!
//! The generator is a self-contained splitmix64 so that a given seed
//! produces bit-identical matrices on every platform. Structured instances
//! are built as `L R U` products: by invariance of the rank profile matrix
//! under left multiplication by invertible lower triangular matrices and
//! right multiplication by invertible upper triangular ones, the resulting
//! matrix has rank profile matrix exactly `R`.

use crate::error::Result;
use crate::field::PrimeField;
use crate::matrix::DenseMatrix;
use crate::subperm::SubPermutationMatrix;

/// splitmix64: tiny, seedable, portable.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `[0, bound)` by rejection sampling.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below(0)");
        // largest value below which next_u64 is an exact multiple of bound
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % bound;
            }
        }
    }

    /// Uniform field element.
    pub fn element(&mut self, field: PrimeField) -> u64 {
        self.below(field.modulus())
    }

    /// Uniform non-zero field element.
    pub fn nonzero_element(&mut self, field: PrimeField) -> u64 {
        1 + self.below(field.modulus() - 1)
    }

    /// `r` distinct values of `1..=n`, in uniform random order (partial
    /// Fisher-Yates shuffle).
    pub fn sample_distinct(&mut self, n: usize, r: usize) -> Vec<usize> {
        assert!(r <= n);
        let mut pool: Vec<usize> = (1..=n).collect();
        for i in 0..r {
            let j = i + self.below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        pool.truncate(r);
        pool
    }
}

/// Uniformly random dense matrix.
pub fn random_matrix(m: usize, n: usize, field: PrimeField, rng: &mut SplitMix64) -> DenseMatrix {
    let mut a = DenseMatrix::zero(m, n, field);
    for i in 1..=m {
        for j in 1..=n {
            a.set(i, j, rng.element(field));
        }
    }
    a
}

/// Uniformly random r-sub-permutation matrix: random row support order,
/// random column support order, paired position by position.
pub fn random_rsubperm(
    m: usize,
    n: usize,
    r: usize,
    rng: &mut SplitMix64,
) -> Result<SubPermutationMatrix> {
    let rows = rng.sample_distinct(m, r.min(m));
    let cols = rng.sample_distinct(n, r.min(n));
    SubPermutationMatrix::new(m, n, rows.into_iter().zip(cols).collect())
}

/// A matrix whose rank profile matrix is exactly `r_mat`, built as
/// `L expand(r_mat) U` with `L` random unit lower triangular and `U` random
/// upper triangular with invertible diagonal.
pub fn random_rpm_matrix(
    r_mat: &SubPermutationMatrix,
    field: PrimeField,
    rng: &mut SplitMix64,
) -> Result<DenseMatrix> {
    let (m, n) = (r_mat.rows(), r_mat.cols());
    let mut l = DenseMatrix::identity(m, field);
    for i in 1..=m {
        for j in 1..i {
            l.set(i, j, rng.element(field));
        }
    }
    let mut u = DenseMatrix::zero(n, n, field);
    for i in 1..=n {
        u.set(i, i, rng.nonzero_element(field));
        for j in i + 1..=n {
            u.set(i, j, rng.element(field));
        }
    }
    l.matmul(&r_mat.expand(field))?.matmul(&u)
}

/// A random matrix of the requested rank with a uniformly random rank
/// profile matrix.
pub fn random_rank_matrix(
    m: usize,
    n: usize,
    r: usize,
    field: PrimeField,
    rng: &mut SplitMix64,
) -> Result<DenseMatrix> {
    let r_mat = random_rsubperm(m, n, r, rng)?;
    random_rpm_matrix(&r_mat, field, rng)
}
