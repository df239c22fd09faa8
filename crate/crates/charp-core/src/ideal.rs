//! Ideals of the polynomial ring and the operations between them.
//!
//! An [`Ideal`] is an immutable bag of generators plus a lazily computed,
//! cached reduced Groebner basis. All the derived operations — membership,
//! equality, sum, product, intersection, colon, saturation, elimination,
//! bracket powers, contraction to the coefficient variable — go through
//! that basis, so their results are canonical and independent of how the
//! generators were presented.

use alloc::boxed::Box;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, exact_div, normal_form};
use crate::multipoly::{MultiPoly, PolyRing};
use crate::order::MonomialOrder;
use crate::unipoly::UniPoly;

/// A finitely generated ideal, with a one-slot cache for the first reduced
/// Groebner basis computed from it. Requests under a different order are
/// recomputed on the fly (correct, just not cached); concurrent first
/// requests may duplicate work but converge on the same value because the
/// reduced basis is unique.
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<MultiPoly>,
    cache: OnceBox<(MonomialOrder, Arc<Vec<MultiPoly>>)>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        let cache = OnceBox::new();
        if let Some(v) = self.cache.get() {
            let _ = cache.set(Box::new(v.clone()));
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("gens", &self.gens).finish()
    }
}

impl Ideal {
    /// Builds an ideal from generators, dropping zeros. All generators must
    /// belong to `ring`.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<MultiPoly>) -> Ideal {
        let gens: Vec<MultiPoly> = gens
            .into_iter()
            .inspect(|g| assert_eq!(g.ring(), ring, "generator from a different ring"))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { ring: ring.clone(), gens, cache: OnceBox::new() }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, alloc::vec![MultiPoly::one(ring)])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// The generators as given (zeros removed), not the Groebner basis.
    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    /// The reduced Groebner basis under `order`. The first basis ever
    /// requested is cached; other orders are recomputed per call.
    pub fn basis(&self, order: &MonomialOrder) -> Arc<Vec<MultiPoly>> {
        let cached = self
            .cache
            .get_or_init(|| Box::new((order.clone(), Arc::new(buchberger(&self.gens, order)))));
        if &cached.0 == order {
            cached.1.clone()
        } else {
            Arc::new(buchberger(&self.gens, order))
        }
    }

    /// The reduced basis under the ring's default (grevlex) order.
    pub fn default_basis(&self) -> Arc<Vec<MultiPoly>> {
        self.basis(&self.ring.default_order())
    }

    /// The normal form of `f` against the reduced basis under `order`: the
    /// canonical representative of `f` modulo the ideal.
    pub fn reduce(&self, f: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
        assert_eq!(f.ring(), &self.ring, "element from a different ring");
        normal_form(f, &self.basis(order), order)
    }

    /// Ideal membership under the given order.
    pub fn contains_under(&self, f: &MultiPoly, order: &MonomialOrder) -> bool {
        self.reduce(f, order).is_zero()
    }

    /// Ideal membership (default order).
    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.contains_under(f, &self.ring.default_order())
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        assert_eq!(self.ring, other.ring, "ideals in different rings");
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Mathematical equality, decided by comparing reduced bases under the
    /// default order.
    pub fn equals(&self, other: &Ideal) -> bool {
        assert_eq!(self.ring, other.ring, "ideals in different rings");
        *self.default_basis() == *other.default_basis()
    }

    pub fn is_zero(&self) -> bool {
        self.default_basis().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.default_basis().iter().any(|g| g.is_constant())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring, "ideals in different rings");
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ideal::new(&self.ring, gens)
    }

    /// The product ideal, generated by all pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring, "ideals in different rings");
        let mut gens: Vec<MultiPoly> = Vec::new();
        for g in &self.gens {
            for h in &other.gens {
                let p = g.mul(h);
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// The ordinary `k`-th power of the ideal (`k = 0` gives the unit
    /// ideal). Not to be confused with [`Ideal::bracket_power`].
    pub fn power(&self, k: u32) -> Ideal {
        let mut out = Ideal::unit(&self.ring);
        for _ in 0..k {
            out = out.product(self);
        }
        out
    }

    /// Generator-wise `q`-th power, `q = p^e`: the Frobenius bracket power.
    /// Well defined (independent of the generating set) precisely because
    /// `q` is a power of the characteristic, which is validated.
    pub fn bracket_power(&self, q: u64) -> Result<Ideal> {
        // Validates the exponent even when there are no generators.
        MultiPoly::one(&self.ring).frobenius_pow(q)?;
        let gens: Result<Vec<MultiPoly>> =
            self.gens.iter().map(|g| g.frobenius_pow(q)).collect();
        Ok(Ideal::new(&self.ring, gens?))
    }

    /// Drops the listed variables: returns the ideal generated by the
    /// members of `self` that do not involve any of them (the contraction
    /// to the smaller ring, presented inside the same ring). Computed with
    /// a block order ranking the dropped variables above the rest.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let order = MonomialOrder::elimination(self.ring.nvars(), drop)?;
        let kept: Vec<MultiPoly> = self
            .basis(&order)
            .iter()
            .filter(|g| {
                g.terms().iter().all(|(m, _)| drop.iter().all(|&v| m.exp(v) == 0))
            })
            .cloned()
            .collect();
        Ok(Ideal::new(&self.ring, kept))
    }

    /// Ideal intersection via the tag-variable trick: contract
    /// `w*I + (1-w)*J` from the extended ring back down.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring, "ideals in different rings");
        let ext = self.ring.extended();
        let wi = ext.nvars() - 1;
        let w = MultiPoly::var(&ext, wi);
        let one_minus_w = MultiPoly::one(&ext).sub(&w);
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(w.mul(&g.lift_to(&ext)));
        }
        for h in &other.gens {
            gens.push(one_minus_w.mul(&h.lift_to(&ext)));
        }
        let tagged = Ideal::new(&ext, gens);
        let eliminated = tagged.eliminate(&[wi]).expect("tag variable index is valid");
        let back: Vec<MultiPoly> = eliminated
            .generators()
            .iter()
            .map(|g| g.restrict_to(&self.ring).expect("tag variable was eliminated"))
            .collect();
        Ideal::new(&self.ring, back)
    }

    /// The colon ideal `(self : f) = { g : g*f in self }` for a single
    /// nonzero `f`, computed as `(self ∩ (f)) / f`.
    pub fn colon_element(&self, f: &MultiPoly) -> Result<Ideal> {
        assert_eq!(f.ring(), &self.ring, "element from a different ring");
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let order = self.ring.default_order();
        let meet = self.intersect(&Ideal::new(&self.ring, alloc::vec![f.clone()]));
        let gens: Vec<MultiPoly> = meet
            .generators()
            .iter()
            .map(|g| exact_div(g, f, &order).expect("members of the intersection are multiples"))
            .collect();
        Ok(Ideal::new(&self.ring, gens))
    }

    /// The colon ideal `(self : other)`, the intersection of the colons by
    /// each generator of `other`. Errors on the zero ideal as divisor.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        assert_eq!(self.ring, other.ring, "ideals in different rings");
        if other.gens.is_empty() {
            return Err(Error::ZeroIdealDivisor);
        }
        let mut out: Option<Ideal> = None;
        for h in &other.gens {
            let part = self.colon_element(h)?;
            out = Some(match out {
                None => part,
                Some(acc) => acc.intersect(&part),
            });
        }
        Ok(out.expect("at least one generator"))
    }

    /// The saturation `(self : other^∞)`: colon by `other` repeated until
    /// the chain stabilizes.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.colon(other)?;
        loop {
            let next = current.colon(other)?;
            if next.equals(&current) {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Contracts the ideal to `F_p[v0]`, `v0` the coefficient variable,
    /// and returns the monic generator of that (principal) contraction —
    /// zero if the contraction is trivial.
    pub fn contract_to_base(&self) -> UniPoly {
        let field = self.ring.field();
        let n = self.ring.nvars();
        let univariate: Vec<UniPoly> = if n == 1 {
            self.gens
                .iter()
                .map(|g| g.to_unipoly().expect("single-variable ring"))
                .collect()
        } else {
            let drop: Vec<usize> = (1..n).collect();
            let eliminated = self.eliminate(&drop).expect("dropping the non-base variables");
            eliminated
                .generators()
                .iter()
                .map(|g| g.to_unipoly().expect("elimination removed the other variables"))
                .collect()
        };
        // gcd is monic by convention, and zero only for the zero ideal.
        univariate.iter().fold(UniPoly::zero(field), |acc, u| acc.gcd(u))
    }
}
