//! Complete factorization in `F_p[t]`.
//!
//! The pipeline is the classical one: squarefree decomposition (with the
//! `p`-th root step that characteristic `p` demands), then distinct-degree
//! decomposition by Frobenius gcds, then Cantor-Zassenhaus equal-degree
//! splitting for buckets holding more than one factor. Splitting draws its
//! random elements from a ChaCha stream seeded explicitly, so a fixed seed
//! gives a fixed execution; the returned factor list is additionally sorted
//! into a canonical order, making the *output* independent of the seed.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::unipoly::UniPoly;

/// Seed used by [`uni_factor`] when the caller does not supply one.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed;

/// A complete factorization `unit * prod f_i^(m_i)` with monic irreducible
/// `f_i`, sorted by degree and then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    pub unit: u64,
    pub factors: Vec<(UniPoly, u32)>,
}

impl FactorList {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> UniPoly {
        let field = self
            .factors
            .first()
            .map(|(f, _)| f.field())
            .expect("product of an empty factor list needs a field; use product_in");
        self.product_in(field)
    }

    /// Multiplies back out, with an explicit field for the constant case.
    pub fn product_in(&self, field: PrimeField) -> UniPoly {
        let mut acc = UniPoly::constant(field, self.unit);
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }
}

/// Factors a nonzero univariate polynomial with the default seed.
pub fn uni_factor(f: &UniPoly) -> Result<FactorList> {
    uni_factor_seeded(f, DEFAULT_FACTOR_SEED)
}

/// Factors a nonzero univariate polynomial, seeding the equal-degree
/// splitting stage with `seed`.
pub fn uni_factor_seeded(f: &UniPoly, seed: u64) -> Result<FactorList> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading_coeff();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(UniPoly, u32)> = Vec::new();
    if !monic.is_constant() {
        for (part, mult) in squarefree_decomposition(&monic) {
            for (bucket, d) in distinct_degree(&part)? {
                let mut irreducibles = Vec::new();
                equal_degree(&bucket, d, &mut rng, &mut irreducibles)?;
                for g in irreducibles {
                    factors.push((g, mult));
                }
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
    Ok(FactorList { unit, factors })
}

/// Deterministic irreducibility test (Rabin): `f` of degree `n` is
/// irreducible iff `t^(p^n) = t (mod f)` and `gcd(f, t^(p^(n/r)) - t) = 1`
/// for every prime `r` dividing `n`.
pub fn is_irreducible(f: &UniPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    let g = f.monic();
    let p = g.field().characteristic();
    let t = UniPoly::var(g.field());
    let frobenius_tower = |m: usize| -> UniPoly {
        let mut h = t.div_rem(&g).expect("nonzero modulus").1;
        for _ in 0..m {
            h = h.pow_mod(p, &g).expect("nonzero modulus");
        }
        h
    };
    if frobenius_tower(n) != t.div_rem(&g).unwrap().1 {
        return false;
    }
    for r in prime_divisors(n) {
        let h = frobenius_tower(n / r);
        if !g.gcd(&h.sub(&t)).is_one() {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Coefficient-wise `p`-th root of a polynomial whose exponents are all
/// multiples of `p`. Valid because Frobenius is the identity on `F_p`.
fn p_th_root(f: &UniPoly) -> UniPoly {
    let p = f.field().characteristic() as usize;
    let coeffs: Vec<u64> = f.coeffs().iter().step_by(p).copied().collect();
    debug_assert!(f
        .coeffs()
        .iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || i % p == 0));
    UniPoly::from_coeffs(f.field(), &coeffs)
}

/// Splits a monic nonconstant polynomial into pairwise-coprime monic
/// squarefree parts with their multiplicities.
fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let p = f.field().characteristic() as u32;
    let mut out = Vec::new();
    let fd = f.derivative();
    if fd.is_zero() {
        // Every exponent is a multiple of p, so f is a p-th power.
        for (g, m) in squarefree_decomposition(&p_th_root(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&fd);
    let mut w = f.div_rem(&c).expect("gcd divides f").0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).expect("gcd divides").0;
        if !z.is_one() {
            out.push((z, i));
        }
        c = c.div_rem(&y).expect("gcd divides").0;
        w = y;
        i += 1;
    }
    if !c.is_one() {
        // The leftover collects factors with multiplicity divisible by p.
        for (g, m) in squarefree_decomposition(&p_th_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree decomposition of a monic squarefree polynomial: returns
/// `(g_d, d)` pairs where `g_d` is the product of all irreducible factors of
/// degree exactly `d`.
fn distinct_degree(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let p = f.field().characteristic();
    let t = UniPoly::var(f.field());
    let mut out = Vec::new();
    let mut v = f.clone();
    let mut h = t.div_rem(&v)?.1;
    let mut d = 0;
    while v.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(p, &v)?; // now t^(p^d) mod v
        let g = v.gcd(&h.sub(&t));
        if !g.is_one() {
            v = v.div_rem(&g)?.0;
            h = h.div_rem(&v)?.1;
            out.push((g, d));
        }
    }
    if !v.is_one() {
        let deg = v.degree().unwrap();
        out.push((v, deg));
    }
    Ok(out)
}

fn random_poly_below(deg: usize, field: PrimeField, rng: &mut ChaCha8Rng) -> UniPoly {
    let p = field.characteristic();
    loop {
        let coeffs: Vec<u64> = (0..deg).map(|_| rng.next_u64() % p).collect();
        let cand = UniPoly::from_coeffs(field, &coeffs);
        if !cand.is_constant() || (!cand.is_zero() && deg == 1) {
            return cand;
        }
    }
}

/// Cantor-Zassenhaus equal-degree splitting: `f` is monic squarefree with
/// all irreducible factors of degree exactly `d`.
fn equal_degree(
    f: &UniPoly,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<UniPoly>,
) -> Result<()> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        out.push(f.clone());
        return Ok(());
    }
    let field = f.field();
    let p = field.characteristic();
    let split = loop {
        let a = random_poly_below(n, field, rng);
        let candidate = if p == 2 {
            // Trace of a over F_{2^d}: a + a^2 + a^4 + ... + a^(2^(d-1));
            // it is 0 or 1 modulo each irreducible factor, and the two cases
            // occur independently with probability 1/2.
            let mut cur = a.div_rem(f)?.1;
            let mut trace = cur.clone();
            for _ in 1..d {
                cur = cur.pow_mod(2, f)?;
                trace = trace.add(&cur).div_rem(f)?.1;
            }
            f.gcd(&trace)
        } else {
            // a^((p^d - 1)/2) mod f, assembled as a product of Frobenius
            // twists of a^((p-1)/2) so the exponent never overflows:
            // (p^d - 1)/2 = (p - 1)/2 * (1 + p + ... + p^(d-1)).
            let mut twist = a.pow_mod((p - 1) / 2, f)?;
            let mut power = twist.clone();
            for _ in 1..d {
                twist = twist.pow_mod(p, f)?;
                power = power.mul(&twist).div_rem(f)?.1;
            }
            f.gcd(&power.sub(&UniPoly::one(field)))
        };
        let k = candidate.degree().unwrap_or(0);
        if k > 0 && k < n {
            break candidate;
        }
    };
    let rest = f.div_rem(&split)?.0;
    equal_degree(&split, d, rng, out)?;
    equal_degree(&rest, d, rng, out)
}
