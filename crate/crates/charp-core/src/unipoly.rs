//! Univariate polynomials over `F_p`, the coefficient ring `A = F_p[t]` of
//! the engine.
//!
//! Coefficients are stored dense, lowest degree first, with no trailing
//! zeros. `A` is a Euclidean domain; `div_rem` and the monic `gcd` here are
//! what the Smith normal form and ideal-contraction layers lean on.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A dense univariate polynomial over `F_p`. The variable prints as `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: PrimeField,
    /// `coeffs[i]` multiplies `t^i`; the last entry is nonzero.
    coeffs: Vec<u64>,
}

impl UniPoly {
    pub fn zero(field: PrimeField) -> UniPoly {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> UniPoly {
        UniPoly::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u64) -> UniPoly {
        let c = field.reduce(c);
        UniPoly { field, coeffs: if c == 0 { Vec::new() } else { vec![c] } }
    }

    /// The variable `t`.
    pub fn var(field: PrimeField) -> UniPoly {
        UniPoly { field, coeffs: vec![0, 1] }
    }

    /// `c * t^k`.
    pub fn monomial(field: PrimeField, c: u64, k: usize) -> UniPoly {
        let c = field.reduce(c);
        if c == 0 {
            return UniPoly::zero(field);
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        UniPoly { field, coeffs }
    }

    /// Builds from raw coefficients (lowest degree first), reducing mod `p`
    /// and trimming trailing zeros.
    pub fn from_coeffs(field: PrimeField, coeffs: &[u64]) -> UniPoly {
        let mut coeffs: Vec<u64> = coeffs.iter().map(|&c| field.reduce(c)).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn assert_same_field(&self, other: &UniPoly) {
        assert_eq!(self.field, other.field, "mixed characteristics in univariate arithmetic");
    }

    fn trim(mut self) -> UniPoly {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.field.add(self.coeff(i), other.coeff(i)));
        }
        UniPoly { field: self.field, coeffs }.trim()
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.field.sub(self.coeff(i), other.coeff(i)));
        }
        UniPoly { field: self.field, coeffs }.trim()
    }

    pub fn neg(&self) -> UniPoly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        UniPoly { field: self.field, coeffs }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.field.add(coeffs[i + j], self.field.mul(a, b));
            }
        }
        UniPoly { field: self.field, coeffs }
    }

    pub fn mul_scalar(&self, c: u64) -> UniPoly {
        let c = self.field.reduce(c);
        if c == 0 {
            return UniPoly::zero(self.field);
        }
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        UniPoly { field: self.field, coeffs }
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg r < deg divisor`. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.assert_same_field(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = divisor.degree().unwrap();
        let lead_inv = self.field.inv(divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((UniPoly::zero(self.field), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = self.field.mul(c, lead_inv);
            quot[i - d] = q;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = i - d + j;
                rem[idx] = self.field.sub(rem[idx], self.field.mul(q, b));
            }
        }
        Ok((
            UniPoly { field: self.field, coeffs: quot }.trim(),
            UniPoly { field: self.field, coeffs: rem }.trim(),
        ))
    }

    /// True when `self` is an exact multiple of `divisor`.
    pub fn is_multiple_of(&self, divisor: &UniPoly) -> bool {
        match self.div_rem(divisor) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        self.assert_same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to leading coefficient one. The zero polynomial is unchanged.
    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            lc => self.mul_scalar(self.field.inv(lc)),
        }
    }

    /// Formal derivative. In characteristic `p` this can vanish on nonconstant
    /// input, which the factorization layer uses to detect `p`-th powers.
    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.field.mul(self.field.reduce(i as u64), c))
            .collect();
        UniPoly { field: self.field, coeffs }.trim()
    }

    /// `self^exp mod modulus` by square and multiply.
    pub fn pow_mod(&self, mut exp: u64, modulus: &UniPoly) -> Result<UniPoly> {
        let mut base = self.div_rem(modulus)?.1;
        let mut acc = UniPoly::one(self.field).div_rem(modulus)?.1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).div_rem(modulus)?.1;
            }
            base = base.mul(&base).div_rem(modulus)?.1;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Plain power by repeated squaring (small exponents only).
    pub fn pow(&self, mut exp: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(self.field);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Evaluates at `t = a`.
    pub fn eval(&self, a: u64) -> u64 {
        let a = self.field.reduce(a);
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add(self.field.mul(acc, a), c);
        }
        acc
    }

    /// Canonical comparison used to sort factor lists and divisor chains:
    /// degree first, then coefficients from the top degree down.
    pub fn canonical_cmp(&self, other: &UniPoly) -> Ordering {
        match self.coeffs.len().cmp(&other.coeffs.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.coeffs.len()).rev() {
            match self.coeffs[i].cmp(&other.coeffs[i]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Renders with an arbitrary variable name, e.g. `s^2 + 2*s + 1`.
    pub fn display_with(&self, name: &str) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        if self.is_zero() {
            return String::from("0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if c == 0 {
                continue;
            }
            if !first {
                out.push_str(" + ");
            }
            first = false;
            match (c, i) {
                (c, 0) => write!(out, "{c}").unwrap(),
                (1, 1) => write!(out, "{name}").unwrap(),
                (1, _) => write!(out, "{name}^{i}").unwrap(),
                (c, 1) => write!(out, "{c}*{name}").unwrap(),
                (c, _) => write!(out, "{c}*{name}^{i}").unwrap(),
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

/// The torsion generator `tau(q) = 1 + t + ... + t^(q-2)` for `q = p^e`.
///
/// This is `(t^(q-1) - 1) / (t - 1)`, the product of all cyclotomic levels
/// dividing `q - 1` except the first. For `q = 2` it degenerates to `1`.
pub fn tau(field: PrimeField, e: u32) -> Result<UniPoly> {
    if e == 0 {
        return Err(Error::NotAFrobeniusPower { q: 1, p: field.characteristic() });
    }
    let q = field.power_of_p(e)?;
    if q > 1 << 20 {
        return Err(Error::PowerOverflow { p: field.characteristic(), e });
    }
    Ok(UniPoly::from_coeffs(field, &vec![1; (q - 1) as usize]))
}
