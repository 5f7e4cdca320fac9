//! Arithmetic in GF(p) for an odd prime p < 2^31.
//!
//! Elements are canonical `u64` values in `[0, p)`. The modulus bound keeps
//! any product plus a running sum inside 64 bits, which is what allows
//! [`PrimeField::dot_accumulate`] to delay modular reductions until the
//! accumulator is about to overflow. Every operation that performs a
//! reduction reports it to a [`ReductionCounter`], so the cost of a given
//! elimination schedule can be measured instead of estimated.

use crate::error::{Error, Result};

/// Upper bound (exclusive) on the modulus.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Tally of modular reductions performed by field operations.
///
/// One counter is owned by a single elimination run; it is monotonically
/// non-decreasing while the run is in progress.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ReductionCounter {
    count: u64,
}

impl ReductionCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn bump(&mut self) {
        self.count += 1;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn reset(&mut self) {
        self.count = 0;
    }
}

/// The field Z/pZ for an odd prime `2 < p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    /// Builds the field, checking primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// True iff `v` is a canonical element of this field.
    #[inline]
    pub fn is_canonical(&self, v: u64) -> bool {
        v < self.p
    }

    #[inline]
    pub fn add_counted(&self, a: u64, b: u64, ctr: &mut ReductionCounter) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        let s = a + b;
        if s >= self.p {
            ctr.bump();
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub_counted(&self, a: u64, b: u64, ctr: &mut ReductionCounter) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        if a >= b {
            a - b
        } else {
            ctr.bump();
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul_counted(&self, a: u64, b: u64, ctr: &mut ReductionCounter) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        ctr.bump();
        (a * b) % self.p
    }

    #[inline]
    pub fn neg_counted(&self, a: u64, ctr: &mut ReductionCounter) -> u64 {
        debug_assert!(a < self.p);
        if a == 0 {
            0
        } else {
            ctr.bump();
            self.p - a
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add_counted(a, b, &mut ReductionCounter::new())
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.sub_counted(a, b, &mut ReductionCounter::new())
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul_counted(a, b, &mut ReductionCounter::new())
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        self.neg_counted(a, &mut ReductionCounter::new())
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64> {
        debug_assert!(a < self.p);
        if a == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "a is a unit since p is prime");
        Ok(t0.rem_euclid(self.p as i64) as u64)
    }

    /// Dot product with delayed reduction.
    ///
    /// Products accumulate in a 64-bit sum; a reduction is performed (and
    /// counted) only when the next product would overflow, plus once at the
    /// end if the sum is not already canonical.
    pub fn dot_accumulate_counted(
        &self,
        u: &[u64],
        v: &[u64],
        ctr: &mut ReductionCounter,
    ) -> Result<u64> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "dot product of lengths {} and {}",
                u.len(),
                v.len()
            )));
        }
        let mut acc: u64 = 0;
        for (&x, &y) in u.iter().zip(v) {
            debug_assert!(x < self.p && y < self.p);
            let prod = x * y;
            if acc > u64::MAX - prod {
                acc %= self.p;
                ctr.bump();
            }
            acc += prod;
        }
        if acc >= self.p {
            acc %= self.p;
            ctr.bump();
        }
        Ok(acc)
    }

    pub fn dot_accumulate(&self, u: &[u64], v: &[u64]) -> Result<u64> {
        self.dot_accumulate_counted(u, v, &mut ReductionCounter::new())
    }
}
