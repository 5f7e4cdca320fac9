//! Dense row-major matrices over GF(p).
//!
//! Public coordinates are 1-based throughout the crate.

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    m: usize,
    n: usize,
    entries: Vec<u64>,
    field: PrimeField,
}

impl DenseMatrix {
    pub fn zero(m: usize, n: usize, field: PrimeField) -> Self {
        Self {
            m,
            n,
            entries: vec![0; m * n],
            field,
        }
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        let mut a = Self::zero(n, n, field);
        for i in 1..=n {
            a.set(i, i, 1);
        }
        a
    }

    /// Builds a matrix from row vectors, canonicalizing nothing: every entry
    /// must already lie in `[0, p)`.
    pub fn from_rows(rows: &[Vec<u64>], field: PrimeField) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(m * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for &v in row {
                if !field.is_canonical(v) {
                    return Err(Error::DimensionMismatch(format!(
                        "entry {v} not canonical mod {}",
                        field.modulus()
                    )));
                }
                entries.push(v);
            }
        }
        Ok(Self { m, n, entries, field })
    }

    /// Builds a matrix from signed integer rows, reducing mod p. Convenient
    /// for transcribing small literal examples.
    pub fn from_signed_rows(rows: &[Vec<i64>], field: PrimeField) -> Result<Self> {
        let p = field.modulus() as i64;
        let reduced: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| v.rem_euclid(p) as u64).collect())
            .collect();
        Self::from_rows(&reduced, field)
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i >= 1 && i <= self.m && j >= 1 && j <= self.n);
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(i >= 1 && i <= self.m && j >= 1 && j <= self.n);
        debug_assert!(self.field.is_canonical(v));
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    /// Row `i` as a slice (1-based).
    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    /// Column `j` gathered into a vector (1-based).
    pub fn col(&self, j: usize) -> Vec<u64> {
        (1..=self.m).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 1..=self.n {
            let (x, y) = (self.get(a, j), self.get(b, j));
            self.set(a, j, y);
            self.set(b, j, x);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 1..=self.m {
            let (x, y) = (self.get(i, a), self.get(i, b));
            self.set(i, a, y);
            self.set(i, b, x);
        }
    }

    /// Cyclic shift of rows `k..=i`: row `i` moves to position `k`, rows
    /// `k..i` shift down one, everything else stays put.
    pub fn rotate_rows(&mut self, k: usize, i: usize) {
        debug_assert!(k >= 1 && k <= i && i <= self.m);
        for r in (k..i).rev() {
            self.swap_rows(r, r + 1);
        }
    }

    pub fn rotate_cols(&mut self, k: usize, j: usize) {
        debug_assert!(k >= 1 && k <= j && j <= self.n);
        for c in (k..j).rev() {
            self.swap_cols(c, c + 1);
        }
    }

    /// The leading sub-matrix with rows `1..=i` and columns `1..=j`.
    pub fn leading(&self, i: usize, j: usize) -> DenseMatrix {
        debug_assert!(i <= self.m && j <= self.n);
        let mut out = DenseMatrix::zero(i, j, self.field);
        for r in 1..=i {
            for c in 1..=j {
                out.set(r, c, self.get(r, c));
            }
        }
        out
    }

    /// The sub-matrix of rows `r0..=r1` and columns `c0..=c1` (inclusive,
    /// 1-based); empty ranges give empty matrices.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> DenseMatrix {
        let h = r1 + 1 - r0.min(r1 + 1);
        let w = c1 + 1 - c0.min(c1 + 1);
        let mut out = DenseMatrix::zero(h, w, self.field);
        for (oi, i) in (r0..=r1).enumerate() {
            for (oj, j) in (c0..=c1).enumerate() {
                out.set(oi + 1, oj + 1, self.get(i, j));
            }
        }
        out
    }

    /// `[A | B]` side by side.
    pub fn hstack(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {}x{} and {}x{}",
                self.m, self.n, other.m, other.n
            )));
        }
        let mut out = DenseMatrix::zero(self.m, self.n + other.n, self.field);
        for i in 1..=self.m {
            for j in 1..=self.n {
                out.set(i, j, self.get(i, j));
            }
            for j in 1..=other.n {
                out.set(i, self.n + j, other.get(i, j));
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zero(self.n, self.m, self.field);
        for i in 1..=self.m {
            for j in 1..=self.n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Classical product, each entry computed with a delayed-reduction dot.
    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.n != other.m || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "matmul of {}x{} and {}x{}",
                self.m, self.n, other.m, other.n
            )));
        }
        let mut out = DenseMatrix::zero(self.m, other.n, self.field);
        for j in 1..=other.n {
            let col = other.col(j);
            for i in 1..=self.m {
                let v = self.field.dot_accumulate(self.row(i), &col)?;
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}
