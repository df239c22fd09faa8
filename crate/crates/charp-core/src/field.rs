//! Arithmetic in the prime field `F_p`.
//!
//! Elements are plain `u64` residues in `[0, p)`. The field itself is a small
//! `Copy` handle carrying `p`; every polynomial type stores one and routes its
//! coefficient arithmetic through it. Keeping `p` out of the element type
//! makes the inner loops branch-free and allocation-free.
//!
//! `p` is validated at construction: it must be prime and below `2^31`, so
//! products of two residues fit in a `u64` without widening.

use crate::error::{Error, Result};

/// The prime field `F_p` for a runtime-chosen prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

/// Deterministic trial-division primality test, adequate for `p < 2^31`.
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
    /// Builds the field, rejecting composite or oversized characteristics.
    pub fn new(p: u64) -> Result<PrimeField> {
        if p >= 1 << 31 {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary unsigned integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, n: u64) -> u64 {
        n % self.p
    }

    /// Reduces a signed integer, mapping negatives to their positive residue.
    #[inline]
    pub fn reduce_signed(self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        // Safe without u128: both factors are below 2^31.
        (a * b) % self.p
    }

    /// Modular exponentiation by squaring.
    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue, via Fermat's little
    /// theorem. Panics on zero; callers guard for it.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    #[inline]
    pub fn div(self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    /// `p^e` as a `u64`, with overflow reported as an error. Used for
    /// Frobenius exponents `q = p^e`.
    pub fn power_of_p(self, e: u32) -> Result<u64> {
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q.checked_mul(self.p).ok_or(Error::PowerOverflow { p: self.p, e })?;
            if q >= 1 << 40 {
                return Err(Error::PowerOverflow { p: self.p, e });
            }
        }
        Ok(q)
    }
}
