//! Exponent vectors for multivariate monomials.
//!
//! A `Monomial` is just the exponent tuple; which variables the slots mean
//! is the ring's business. The derived `Ord` compares exponent vectors
//! lexicographically slot by slot; that is *not* a term order used for
//! Groebner computations (see [`crate::order`]) but a cheap structural order
//! that gives polynomials a canonical storage form.

use core::fmt;

use smallvec::SmallVec;

/// An exponent vector. Inline capacity covers the usual `t, x, y` plus one
/// tag variable without touching the heap.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 4]>,
}

impl Monomial {
    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    /// The single variable `i`.
    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Monomial {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Total degree over a subset of the variables.
    pub fn degree_over(&self, vars: &[usize]) -> u64 {
        vars.iter().map(|&i| self.exps[i] as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(b.checked_sub(a)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        Monomial { exps }
    }

    /// True when the two monomials share no variable.
    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Renders against a list of variable names, e.g. `x^2*y`.
    pub fn display_with(&self, names: &[impl AsRef<str>]) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            if e == 1 {
                write!(out, "{}", names[i].as_ref()).unwrap();
            } else {
                write!(out, "{}^{}", names[i].as_ref(), e).unwrap();
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl fmt::Display for Monomial {
    /// Debug-friendly rendering with positional names `v0, v1, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: alloc::vec::Vec<alloc::string::String> =
            (0..self.nvars()).map(|i| alloc::format!("v{i}")).collect();
        f.write_str(&self.display_with(&names))
    }
}
