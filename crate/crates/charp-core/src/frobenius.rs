//! Frobenius powers of a hypersurface section and their torsion over
//! `F_p[t]`.
//!
//! The objects of study are the ideals `I_q = (x^q, y^q, F)` for
//! `q = p^e`, where `F` lives in `F_p[t][x, y]`. The quotient
//! `S/I_q` is a finitely generated `F_p[t]`-module — the cokernel of
//! multiplication by `F` on `F_p[t][x, y]/(x^q, y^q)` — and this module
//! computes its elementary divisors, tests which maximal ideals
//! `(pi(t), x, y)` are associated to it, and exercises the colon identity
//! that produces explicit torsion elements:
//!
//! * [`geometric_colon_check`] verifies
//!   `(x^(q-1), y^(q-1)) : (x - y) = (y^(q-1), gamma)` where `gamma` is the
//!   homogeneous geometric sum `(x^(q-1) - y^(q-1)) / (x - y)`.
//! * For the quartic `F = x y (x - y)(x - t y)`, the element
//!   `G = x y (x - y) y^(q-2)` is annihilated modulo `I_q` by exactly
//!   `(1 + t + ... + t^(q-2))`; [`torsion_checks`] verifies all three parts
//!   of that statement.
//! * [`linear_split_intersection`] computes, for `F` a product of pairwise
//!   non-proportional linear forms `l_k`, the ideal
//!   `∩_k ((l_k) + (x^q, y^q))` — the preimage of the tight closure of
//!   zero in the quotient — and [`split_image_is_power_image`] compares its
//!   image with that of `(x, y)^q`.
//!
//! Throughout, the ring must have exactly three variables with the
//! coefficient variable first: conventionally `(t, x, y)`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::factor::{is_irreducible, uni_factor, uni_factor_seeded};
use crate::groebner::exact_div;
use crate::ideal::Ideal;
use crate::multipoly::{MultiPoly, PolyRing};
use crate::parse::parse;
use crate::snf::{mult_matrix, smith_normal_form, ElementaryDivisors};
use crate::unipoly::{tau, UniPoly};

/// Exponents are capped well below `u32::MAX` so `x^q` always fits a
/// monomial exponent.
const MAX_Q: u64 = 1 << 20;

fn require_three_vars(ring: &Arc<PolyRing>) -> Result<()> {
    if ring.nvars() != 3 {
        return Err(Error::WrongArity { expected: 3, found: ring.nvars() });
    }
    Ok(())
}

fn checked_q(ring: &Arc<PolyRing>, e: u32) -> Result<u64> {
    let p = ring.field().characteristic();
    if e == 0 {
        return Err(Error::NotAFrobeniusPower { q: 1, p });
    }
    let q = ring.field().power_of_p(e)?;
    if q > MAX_Q {
        return Err(Error::ExponentOverflow);
    }
    Ok(q)
}

/// A linear form `a(t) x + b(t) y` with coefficients in `F_p[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    x_coeff: UniPoly,
    y_coeff: UniPoly,
}

impl LinearForm {
    pub fn new(x_coeff: UniPoly, y_coeff: UniPoly) -> Result<LinearForm> {
        if x_coeff.is_zero() && y_coeff.is_zero() {
            return Err(Error::InvalidSplitForm);
        }
        Ok(LinearForm { x_coeff, y_coeff })
    }

    pub fn x_coeff(&self) -> &UniPoly {
        &self.x_coeff
    }

    pub fn y_coeff(&self) -> &UniPoly {
        &self.y_coeff
    }

    /// The form as an element of the ring.
    pub fn to_poly(&self, ring: &Arc<PolyRing>) -> MultiPoly {
        let a = MultiPoly::from_unipoly(ring, &self.x_coeff);
        let b = MultiPoly::from_unipoly(ring, &self.y_coeff);
        a.mul(&MultiPoly::var(ring, 1)).add(&b.mul(&MultiPoly::var(ring, 2)))
    }

    /// Whether the two forms cut out the same line: `a1 b2 = a2 b1`.
    pub fn proportional(&self, other: &LinearForm) -> bool {
        self.x_coeff.mul(&other.y_coeff) == other.x_coeff.mul(&self.y_coeff)
    }
}

/// A polynomial `F` in `F_p[t][x, y]` together with, when one exists, its
/// factorization into linear forms over `F_p[t]` (found automatically at
/// construction time).
#[derive(Debug, Clone)]
pub struct Hypersurface {
    ring: Arc<PolyRing>,
    poly: MultiPoly,
    split: Option<Vec<(LinearForm, u32)>>,
}

impl Hypersurface {
    /// Wraps `poly`, detecting a product-of-linear-forms structure if there
    /// is one. `poly` must be nonzero and live in a three-variable ring.
    pub fn new(poly: MultiPoly) -> Result<Hypersurface> {
        let ring = poly.ring().clone();
        require_three_vars(&ring)?;
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let split = detect_split(&poly);
        Ok(Hypersurface { ring, poly, split })
    }

    /// The running example: `x y (x - y)(x - t y)`, four pairwise
    /// non-proportional linear forms for every prime `p`.
    pub fn quartic_example(p: u64) -> Result<Hypersurface> {
        let ring = PolyRing::txy(p)?;
        let poly = parse("x*y*(x-y)*(x-t*y)", &ring).map_err(Error::Parse)?;
        Hypersurface::new(poly)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// The linear factors with multiplicities, if `poly` is a scalar times
    /// a product of linear forms over `F_p[t]`.
    pub fn split(&self) -> Option<&[(LinearForm, u32)]> {
        self.split.as_deref()
    }
}

/// Enumerates the monic divisors of a nonzero polynomial, bailing out if
/// there are implausibly many (the search is meant for small coefficient
/// polynomials).
fn monic_divisors(u: &UniPoly) -> Option<Vec<UniPoly>> {
    let field = u.field();
    let fl = uni_factor(u).ok()?;
    let mut divisors = alloc::vec![UniPoly::one(field)];
    for (f, m) in &fl.factors {
        let mut next = Vec::with_capacity(divisors.len() * (*m as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*m {
                acc = acc.mul(f);
                next.push(acc.clone());
            }
        }
        divisors = next;
        if divisors.len() > 4096 {
            return None;
        }
    }
    Some(divisors)
}

/// The coefficient of `x^i y^j` in `f`, as a polynomial in `t`.
fn xy_coefficient(f: &MultiPoly, i: u32, j: u32) -> UniPoly {
    let field = f.field();
    let mut acc = UniPoly::zero(field);
    for (m, c) in f.terms() {
        if m.exp(1) == i && m.exp(2) == j {
            acc = acc.add(&UniPoly::monomial(field, *c, m.exp(0) as usize));
        }
    }
    acc
}

/// Tries to write `f` as `c * ∏ (a_k x + b_k y)^(m_k)` with `c` a nonzero
/// scalar and `a_k, b_k` in `F_p[t]`. Candidate coefficients are read off
/// the divisors of the extreme coefficient polynomials of `f` (by Gauss's
/// lemma any primitive linear factor has its `x`-coefficient dividing the
/// coefficient of the top `x`-power, and likewise for `y`), so the search
/// is exhaustive: `None` really means no such factorization exists — or
/// that a nonscalar content in `t` remains, which is refused.
fn detect_split(f: &MultiPoly) -> Option<Vec<(LinearForm, u32)>> {
    let ring = f.ring().clone();
    let field = f.field();
    let order = ring.default_order();
    let xy_degree = |m: &crate::monomial::Monomial| m.exp(1) + m.exp(2);
    let d = xy_degree(&f.terms()[0].0);
    if f.terms().iter().any(|(m, _)| xy_degree(m) != d) {
        return None; // not homogeneous in (x, y)
    }
    let mut factors: Vec<(LinearForm, u32)> = Vec::new();
    let push = |factors: &mut Vec<(LinearForm, u32)>, form: LinearForm| {
        if let Some(entry) = factors.iter_mut().find(|(g, _)| *g == form) {
            entry.1 += 1;
        } else {
            factors.push((form, 1));
        }
    };
    let mut rest = f.clone();
    // Pure powers of x and y first.
    let mx = rest.terms().iter().map(|(m, _)| m.exp(1)).min().unwrap();
    let my = rest.terms().iter().map(|(m, _)| m.exp(2)).min().unwrap();
    if mx > 0 {
        let x_pow = MultiPoly::var(&ring, 1).pow(mx);
        rest = exact_div(&rest, &x_pow, &order).expect("minimal x-exponent divides");
        let form = LinearForm::new(UniPoly::one(field), UniPoly::zero(field)).unwrap();
        factors.push((form, mx));
    }
    if my > 0 {
        let y_pow = MultiPoly::var(&ring, 2).pow(my);
        rest = exact_div(&rest, &y_pow, &order).expect("minimal y-exponent divides");
        let form = LinearForm::new(UniPoly::zero(field), UniPoly::one(field)).unwrap();
        factors.push((form, my));
    }
    // Remaining factors all have both coefficients nonzero.
    'peel: while rest.terms().iter().any(|(m, _)| xy_degree(m) > 0) {
        let dd = xy_degree(&rest.terms()[0].0);
        let top_x = xy_coefficient(&rest, dd, 0);
        let top_y = xy_coefficient(&rest, 0, dd);
        if top_x.is_zero() || top_y.is_zero() {
            return None; // a pure x or y factor reappeared: impossible for
                         // a true product of two-sided forms
        }
        let a_candidates = monic_divisors(&top_x)?;
        let b_candidates = monic_divisors(&top_y)?;
        for a in &a_candidates {
            for b in &b_candidates {
                for u in 1..field.characteristic() {
                    let form =
                        LinearForm::new(a.clone(), b.mul_scalar(u)).expect("nonzero coefficients");
                    if let Some(quotient) = exact_div(&rest, &form.to_poly(&ring), &order) {
                        push(&mut factors, form);
                        rest = quotient;
                        continue 'peel;
                    }
                }
            }
        }
        return None; // nothing divides: f has an irreducible factor of
                     // higher degree in (x, y)
    }
    if !rest.is_constant() || rest.is_zero() {
        return None; // leftover content in t
    }
    Some(factors)
}

/// The ideal `I_q = (x^q, y^q, f)` for `q = p^e`, together with the
/// exponent data.
#[derive(Debug, Clone)]
pub struct FrobeniusPower {
    pub e: u32,
    pub q: u64,
    pub ideal: Ideal,
}

/// Builds `I_q = (x^q, y^q, f)`, `q = p^e`, `e >= 1`.
pub fn frobenius_power(f: &MultiPoly, e: u32) -> Result<FrobeniusPower> {
    let ring = f.ring().clone();
    require_three_vars(&ring)?;
    let q = checked_q(&ring, e)?;
    let gens = alloc::vec![
        MultiPoly::var(&ring, 1).pow(q as u32),
        MultiPoly::var(&ring, 2).pow(q as u32),
        f.clone(),
    ];
    Ok(FrobeniusPower { e, q, ideal: Ideal::new(&ring, gens) })
}

/// The homogeneous geometric sum
/// `gamma = x^(q-2) + x^(q-3) y + ... + y^(q-2)`, the exact quotient
/// `(x^(q-1) - y^(q-1)) / (x - y)`. Requires `q >= 2` (for `q = 2` it
/// is 1).
pub fn geometric_sum(ring: &Arc<PolyRing>, q: u64) -> Result<MultiPoly> {
    require_three_vars(ring)?;
    if q < 2 {
        return Err(Error::DegenerateQ);
    }
    if q > MAX_Q {
        return Err(Error::ExponentOverflow);
    }
    let x = MultiPoly::var(ring, 1);
    let y = MultiPoly::var(ring, 2);
    let mut acc = MultiPoly::zero(ring);
    for i in 0..=(q - 2) as u32 {
        acc = acc.add(&x.pow(i).mul(&y.pow((q - 2) as u32 - i)));
    }
    Ok(acc)
}

/// Verifies the colon identity
/// `(x^(q-1), y^(q-1)) : (x - y) = (y^(q-1), gamma)`.
///
/// This is a polynomial identity in the plain ring, valid for every
/// `q >= 2` regardless of the characteristic; it is the source of the
/// torsion witnesses modulo Frobenius powers.
pub fn geometric_colon_check(ring: &Arc<PolyRing>, q: u64) -> Result<bool> {
    let gamma = geometric_sum(ring, q)?;
    let x = MultiPoly::var(ring, 1);
    let y = MultiPoly::var(ring, 2);
    let powers =
        Ideal::new(ring, alloc::vec![x.pow((q - 1) as u32), y.pow((q - 1) as u32)]);
    let lhs = powers.colon_element(&x.sub(&y))?;
    let rhs = Ideal::new(ring, alloc::vec![y.pow((q - 1) as u32), gamma]);
    Ok(lhs.equals(&rhs))
}

/// The element `G = x y (x - y) y^(q-2)`, whose class modulo
/// `I_q = (x^q, y^q, x y (x - y)(x - t y))` is `F_p[t]`-torsion with
/// annihilator `(1 + t + ... + t^(q-2))`. Requires `q >= 2`.
pub fn torsion_witness(ring: &Arc<PolyRing>, q: u64) -> Result<MultiPoly> {
    require_three_vars(ring)?;
    if q < 2 {
        return Err(Error::DegenerateQ);
    }
    if q > MAX_Q {
        return Err(Error::ExponentOverflow);
    }
    let x = MultiPoly::var(ring, 1);
    let y = MultiPoly::var(ring, 2);
    Ok(x.mul(&y).mul(&x.sub(&y)).mul(&y.pow((q - 2) as u32)))
}

/// The three membership facts that exhibit `G`'s class in `S/I_q` as
/// torsion with annihilator `(tau)`, `tau = 1 + t + ... + t^(q-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionChecks {
    pub q: u64,
    /// `tau * G` lies in `I_q`.
    pub scaled_witness_member: bool,
    /// `G` itself lies in `I_q`. Expected false for `q >= 3`; true at
    /// `q = 2`, where the statement degenerates.
    pub witness_member: bool,
    /// The monic generator of `(I_q : G) ∩ F_p[t]`.
    pub contraction: UniPoly,
    /// Whether the contraction equals `(tau)` exactly.
    pub contraction_is_scale: bool,
}

/// Runs the torsion checks for `I_q = (x^q, y^q, f)`. The expected values
/// hold when `f` is the quartic example; for other `f` the booleans simply
/// report what is true.
pub fn torsion_checks(f: &MultiPoly, e: u32) -> Result<TorsionChecks> {
    let fp = frobenius_power(f, e)?;
    let ring = f.ring();
    let field = f.field();
    let g = torsion_witness(ring, fp.q)?;
    let scale = tau(field, e)?;
    let scale_poly = MultiPoly::from_unipoly(ring, &scale);
    let scaled_witness_member = fp.ideal.contains(&scale_poly.mul(&g));
    let witness_member = fp.ideal.contains(&g);
    let contraction = fp.ideal.colon_element(&g)?.contract_to_base();
    let contraction_is_scale = contraction == scale;
    Ok(TorsionChecks {
        q: fp.q,
        scaled_witness_member,
        witness_member,
        contraction,
        contraction_is_scale,
    })
}

/// The contraction `(I_q : G) ∩ F_p[t]` as a monic polynomial, for
/// `q >= 3` (the `q = 2` case is degenerate: `G` already lies in `I_2`).
pub fn witness_colon_contraction(f: &MultiPoly, e: u32) -> Result<UniPoly> {
    let fp = frobenius_power(f, e)?;
    if fp.q < 3 {
        return Err(Error::DegenerateQ);
    }
    let g = torsion_witness(f.ring(), fp.q)?;
    Ok(fp.ideal.colon_element(&g)?.contract_to_base())
}

/// The elementary divisors of `S/I_q` as an `F_p[t]`-module, via the
/// Smith normal form of multiplication by `f` on
/// `F_p[t][x, y]/(x^q, y^q)`.
pub fn torsion_elementary_divisors(f: &MultiPoly, e: u32) -> Result<ElementaryDivisors> {
    let ring = f.ring().clone();
    require_three_vars(&ring)?;
    let q = checked_q(&ring, e)?;
    Ok(smith_normal_form(&mult_matrix(f, q)?))
}

/// For `F` a scalar times a product of pairwise non-proportional linear
/// forms `l_k` (each with multiplicity one), the ideal
/// `∩_k ((l_k) + (x^q, y^q))`: the preimage in `F_p[t][x, y]` of the tight
/// closure of zero in `S/I_q`.
pub fn linear_split_intersection(h: &Hypersurface, e: u32) -> Result<Ideal> {
    let split = h.split().ok_or(Error::MissingSplitForm)?;
    if split.iter().any(|(_, m)| *m != 1) {
        return Err(Error::InvalidSplitForm);
    }
    for i in 0..split.len() {
        for j in i + 1..split.len() {
            if split[i].0.proportional(&split[j].0) {
                return Err(Error::InvalidSplitForm);
            }
        }
    }
    let ring = h.ring();
    let q = checked_q(ring, e)?;
    let x_q = MultiPoly::var(ring, 1).pow(q as u32);
    let y_q = MultiPoly::var(ring, 2).pow(q as u32);
    let mut acc: Option<Ideal> = None;
    for (form, _) in split {
        let component = Ideal::new(
            ring,
            alloc::vec![form.to_poly(ring), x_q.clone(), y_q.clone()],
        );
        acc = Some(match acc {
            None => component,
            Some(prev) => prev.intersect(&component),
        });
    }
    Ok(acc.expect("a nonzero polynomial has at least one factor"))
}

/// Checks that the split intersection and `(x, y)^q` have the same image
/// modulo `I_q`: the tight closure of zero in `S/I_q` is as small as the
/// obvious lower bound, which is what makes the quotient by it tame.
pub fn split_image_is_power_image(h: &Hypersurface, e: u32) -> Result<bool> {
    let j = linear_split_intersection(h, e)?;
    let fp = frobenius_power(h.poly(), e)?;
    let ring = h.ring();
    let xy = Ideal::new(
        ring,
        alloc::vec![MultiPoly::var(ring, 1), MultiPoly::var(ring, 2)],
    );
    let power = xy.power(fp.q as u32);
    Ok(j.sum(&fp.ideal).equals(&power.sum(&fp.ideal)))
}

/// Confirms computationally that nonzero polynomials in the coefficient
/// variable alone are nonzerodivisors modulo `i`, by checking
/// `(i : alpha) = i` for each supplied `alpha`. The generators of `i` must
/// be free of the coefficient variable (that is the structural reason the
/// fact holds; anything else is rejected).
pub fn base_scalars_are_nonzerodivisors(i: &Ideal, alphas: &[UniPoly]) -> Result<bool> {
    for g in i.generators() {
        if g.terms().iter().any(|(m, _)| m.exp(0) != 0) {
            return Err(Error::BaseVariablePresent);
        }
    }
    let ring = i.ring();
    for alpha in alphas {
        if alpha.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let alpha_poly = MultiPoly::from_unipoly(ring, alpha);
        if !i.colon_element(&alpha_poly)?.equals(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The outcome of probing one maximal ideal `(pi, x, y)`.
#[derive(Debug, Clone)]
pub struct PrimeProbe {
    /// The monic irreducible `pi(t)` defining the maximal ideal.
    pub pi: UniPoly,
    pub associated: bool,
    /// When associated: an element whose annihilator modulo the probed
    /// ideal is exactly `(pi, x, y)`, in normal form.
    pub witness: Option<MultiPoly>,
}

/// Decides whether the maximal ideal `P = (pi, x, y)` is associated to
/// `S/j`: since `P` is maximal this happens exactly when `(j : P)`
/// properly contains `j`, and any element of the difference is a witness
/// with annihilator exactly `P`. `pi` must be irreducible.
pub fn is_associated_maximal(j: &Ideal, pi: &UniPoly) -> Result<PrimeProbe> {
    let ring = j.ring().clone();
    require_three_vars(&ring)?;
    if pi.is_constant() || !is_irreducible(pi) {
        return Err(Error::NotIrreducible);
    }
    let pi = pi.monic();
    let maximal = Ideal::new(
        &ring,
        alloc::vec![
            MultiPoly::from_unipoly(&ring, &pi),
            MultiPoly::var(&ring, 1),
            MultiPoly::var(&ring, 2),
        ],
    );
    let colon = j.colon(&maximal)?;
    let order = ring.default_order();
    let mut witness = None;
    for h in colon.basis(&order).iter() {
        let nf = j.reduce(h, &order);
        if !nf.is_zero() {
            witness = Some(nf);
            break;
        }
    }
    if let Some(h) = &witness {
        debug_assert!(
            j.colon_element(h).unwrap().equals(&maximal),
            "a maximal ideal admitting a witness is the witness's exact annihilator"
        );
    }
    Ok(PrimeProbe { pi, associated: witness.is_some(), witness })
}

/// The full associated-prime probe for one Frobenius power.
#[derive(Debug, Clone)]
pub struct AssociatedPrimesReport {
    pub q: u64,
    /// Elementary divisors of `S/I_q` over `F_p[t]`.
    pub elementary: ElementaryDivisors,
    /// One probe per irreducible factor of the largest elementary divisor.
    /// Any maximal ideal `(pi, x, y)` associated to `S/I_q` has `pi`
    /// dividing that divisor, so this candidate list is exhaustive.
    pub probes: Vec<PrimeProbe>,
}

/// Computes the elementary divisors of `S/I_q`, factors the largest one
/// (seeding the factorization RNG with `seed`; the output does not depend
/// on it), and probes each irreducible factor for being the `t`-part of an
/// associated maximal ideal.
pub fn probe_associated_primes(
    f: &MultiPoly,
    e: u32,
    seed: u64,
) -> Result<AssociatedPrimesReport> {
    let fp = frobenius_power(f, e)?;
    let elementary = torsion_elementary_divisors(f, e)?;
    let mut probes = Vec::new();
    if let Some(largest) = elementary.largest() {
        if !largest.is_one() {
            let factors = uni_factor_seeded(largest, seed)?;
            for (pi, _) in &factors.factors {
                probes.push(is_associated_maximal(&fp.ideal, pi)?);
            }
        }
    }
    Ok(AssociatedPrimesReport { q: fp.q, elementary, probes })
}
