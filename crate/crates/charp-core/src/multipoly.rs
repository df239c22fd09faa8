//! The multivariate polynomial ring `F_p[t, x, y, ...]` and its elements.
//!
//! A [`PolyRing`] is a characteristic plus an ordered list of variable
//! names; every polynomial holds a shared handle to its ring, and operations
//! on polynomials from different rings are rejected. By convention the
//! first variable is the *coefficient* (or base) variable: the engine
//! treats `F_p[vars[0]]` as the coefficient ring `A` of the others, which
//! is where contraction and torsion questions live.
//!
//! Terms are stored sorted under a fixed structural order (exponent tuples,
//! lexicographic), independent of any term order. This makes equality and
//! hashing canonical; the Groebner kernel re-sorts working copies under its
//! active order internally, where leading-term access has to be cheap.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::unipoly::UniPoly;

/// A polynomial ring: a prime field plus named variables.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// Builds a ring over `F_p` with the given variable names. Names must be
    /// distinct identifiers; at least one variable is required.
    pub fn new(field: PrimeField, vars: &[&str]) -> Result<Arc<PolyRing>> {
        if vars.is_empty() {
            return Err(Error::BadVariables(String::from("at least one variable is required")));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::BadVariables(alloc::format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::BadVariables(alloc::format!("duplicate variable {v:?}")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars: vars.iter().map(|s| String::from(*s)).collect() }))
    }

    /// The standard three-variable ring `F_p[t, x, y]`.
    pub fn txy(p: u64) -> Result<Arc<PolyRing>> {
        PolyRing::new(PrimeField::new(p)?, &["t", "x", "y"])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The order used when none is specified: grevlex, coefficient variable
    /// least significant.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.nvars())
    }

    /// A new ring with one extra variable appended, named to avoid clashes
    /// (`w`, then `w0`, `w1`, ...). Used for tag-variable constructions.
    pub fn extended(self: &Arc<PolyRing>) -> Arc<PolyRing> {
        let mut name = String::from("w");
        let mut counter = 0usize;
        while self.var_index(&name).is_some() {
            name = alloc::format!("w{counter}");
            counter += 1;
        }
        let mut vars = self.vars.clone();
        vars.push(name);
        Arc::new(PolyRing { field: self.field, vars })
    }

    /// True when `other` is this ring with extra variables appended.
    pub fn extends(&self, other: &PolyRing) -> bool {
        self.field == other.field
            && self.nvars() >= other.nvars()
            && self.vars[..other.nvars()] == other.vars[..]
    }
}

/// An element of a [`PolyRing`]. Zero is the empty term list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    /// Nonzero coefficients, monomials strictly descending in the structural
    /// order.
    terms: Vec<(Monomial, u64)>,
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> MultiPoly {
        MultiPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> MultiPoly {
        MultiPoly::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<PolyRing>, c: u64) -> MultiPoly {
        let c = ring.field().reduce(c);
        let terms = if c == 0 {
            Vec::new()
        } else {
            alloc::vec![(Monomial::one(ring.nvars()), c)]
        };
        MultiPoly { ring: ring.clone(), terms }
    }

    /// The variable with index `i`.
    pub fn var(ring: &Arc<PolyRing>, i: usize) -> MultiPoly {
        assert!(i < ring.nvars(), "variable index out of range");
        MultiPoly {
            ring: ring.clone(),
            terms: alloc::vec![(Monomial::var(ring.nvars(), i), 1)],
        }
    }

    /// A single term `c * m`.
    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: u64) -> MultiPoly {
        assert_eq!(m.nvars(), ring.nvars());
        let c = ring.field().reduce(c);
        let terms = if c == 0 { Vec::new() } else { alloc::vec![(m, c)] };
        MultiPoly { ring: ring.clone(), terms }
    }

    /// Builds from arbitrary terms: coefficients are reduced, duplicates
    /// combined, zeros dropped, and the list sorted into canonical form.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, u64)>) -> MultiPoly {
        let field = ring.field();
        let mut terms: Vec<(Monomial, u64)> =
            terms.into_iter().map(|(m, c)| (m, field.reduce(c))).collect();
        terms.sort_by(|(a, _), (b, _)| b.cmp(a));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match out.last_mut() {
                Some((last, acc)) if *last == m => *acc = field.add(*acc, c),
                _ => out.push((m, c)),
            }
            if let Some(&(_, 0)) = out.last() {
                out.pop();
            }
        }
        MultiPoly { ring: ring.clone(), terms: out }
    }

    /// Lifts a univariate polynomial into the ring, substituting the base
    /// variable for `t`.
    pub fn from_unipoly(ring: &Arc<PolyRing>, u: &UniPoly) -> MultiPoly {
        assert_eq!(u.field(), ring.field(), "mixed characteristics");
        let n = ring.nvars();
        let terms = u
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mut exps = alloc::vec![0u32; n];
                exps[0] = i as u32;
                (Monomial::from_exps(&exps), c)
            })
            .rev()
            .collect();
        MultiPoly { ring: ring.clone(), terms }
    }

    /// Extracts a univariate polynomial when only the base variable occurs.
    pub fn to_unipoly(&self) -> Result<UniPoly> {
        let mut coeffs = alloc::vec![0u64; self.terms.first().map_or(0, |(m, _)| m.exp(0) as usize + 1)];
        for (m, c) in &self.terms {
            if m.exps()[1..].iter().any(|&e| e != 0) {
                return Err(Error::NotUnivariate);
            }
            coeffs[m.exp(0) as usize] = *c;
        }
        Ok(UniPoly::from_coeffs(self.ring.field(), &coeffs))
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1 == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Largest total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exp(var)).max()
    }

    /// The term maximal under `order`; `None` for the zero polynomial.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, *c))
    }

    fn assert_same_ring(&self, other: &MultiPoly) {
        assert_eq!(self.ring, other.ring, "operands belong to different polynomial rings");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match mb.cmp(ma) {
                core::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = field.add(*ca, *cb);
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MultiPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> MultiPoly {
        let field = self.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul_scalar(&self, c: u64) -> MultiPoly {
        let field = self.field();
        let c = field.reduce(c);
        if c == 0 {
            return MultiPoly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> MultiPoly {
        let field = self.field();
        let c = field.reduce(c);
        if c == 0 {
            return MultiPoly::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), field.mul(*tc, c)))
            .collect();
        // Multiplying by a fixed monomial preserves the structural sort.
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), self.field().mul(*ca, *cb)));
            }
        }
        MultiPoly::from_terms(&self.ring, acc)
    }

    /// Small-exponent power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self^q` for `q` a power of the characteristic, computed term by term
    /// via the Frobenius endomorphism: `(sum c_i m_i)^q = sum c_i^q m_i^q`.
    pub fn frobenius_pow(&self, q: u64) -> Result<MultiPoly> {
        let p = self.field().characteristic();
        let mut rest = q;
        while rest > 1 && rest % p == 0 {
            rest /= p;
        }
        if rest != 1 || q < p {
            return Err(Error::NotAFrobeniusPower { q, p });
        }
        let k: u32 = q.try_into().map_err(|_| Error::ExponentOverflow)?;
        let field = self.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.exps().iter().any(|&e| e.checked_mul(k).is_none()) {
                return Err(Error::ExponentOverflow);
            }
            terms.push((m.pow(k), field.pow(*c, q)));
        }
        Ok(MultiPoly { ring: self.ring.clone(), terms })
    }

    /// Substitutes each variable by the matching entry of `images`. The base
    /// variable must map to itself and every other image must be a linear
    /// form in the non-base variables with coefficients in `F_p[base]`.
    /// This is exactly the class of coordinate changes that fix `A = F_p[t]`
    /// and act linearly on the fiber variables.
    pub fn linear_substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::WrongArity {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        for img in images {
            if img.ring != self.ring {
                return Err(Error::RingMismatch);
            }
        }
        if images[0] != MultiPoly::var(&self.ring, 0) {
            return Err(Error::NonLinearImage);
        }
        for img in &images[1..] {
            let linear = img
                .terms
                .iter()
                .all(|(m, _)| m.exps()[1..].iter().map(|&e| e as u64).sum::<u64>() == 1);
            if !linear {
                return Err(Error::NonLinearImage);
            }
        }
        let mut out = MultiPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut acc = MultiPoly::constant(&self.ring, *c);
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    acc = acc.mul(&img.pow(e));
                }
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Reinterprets the polynomial in a ring extending this one by extra
    /// variables.
    pub fn lift_to(&self, bigger: &Arc<PolyRing>) -> MultiPoly {
        assert!(bigger.extends(&self.ring), "target ring does not extend the source ring");
        let pad = bigger.nvars() - self.ring.nvars();
        if pad == 0 {
            return MultiPoly { ring: bigger.clone(), terms: self.terms.clone() };
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps.extend(core::iter::repeat(0).take(pad));
                (Monomial::from_exps(&exps), *c)
            })
            .collect();
        // Padding zeros at the end preserves the structural lex order.
        MultiPoly { ring: bigger.clone(), terms }
    }

    /// Projects back into a smaller ring; errors if any dropped variable
    /// actually occurs.
    pub fn restrict_to(&self, smaller: &Arc<PolyRing>) -> Result<MultiPoly> {
        assert!(self.ring.extends(smaller), "source ring does not extend the target ring");
        let keep = smaller.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.exps()[keep..].iter().any(|&e| e != 0) {
                    Err(Error::BadVariables(alloc::format!(
                        "a dropped variable still occurs in {self}"
                    )))
                } else {
                    Ok((Monomial::from_exps(&m.exps()[..keep]), *c))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiPoly { ring: smaller.clone(), terms })
    }

    /// Renders the polynomial with terms descending under `order`.
    /// Round-trips through the expression parser.
    pub fn display_with(&self, order: &MonomialOrder) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut sorted: Vec<&(Monomial, u64)> = self.terms.iter().collect();
        sorted.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (m, c) in sorted {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if m.is_one() {
                write!(out, "{c}").unwrap();
            } else if *c == 1 {
                out.push_str(&m.display_with(self.ring.vars()));
            } else {
                write!(out, "{c}*{}", m.display_with(self.ring.vars())).unwrap();
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&self.ring.default_order()))
    }
}
