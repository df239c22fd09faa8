//! Multivariate division and Buchberger's algorithm.
//!
//! The completion loop processes S-pairs in normal strategy order (total
//! degree of the pair's lcm, then the lcm under the active order, then the
//! pair indices), applies both classical pruning criteria (coprime leading
//! monomials, and the chain criterion), and finishes with auto-reduction, so
//! `buchberger` returns *the* reduced Groebner basis: monic, mutually
//! tail-reduced, sorted by ascending leading monomial. That canonical form
//! is what ideal equality and all downstream determinism rest on.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::multipoly::MultiPoly;
use crate::order::MonomialOrder;

/// Working form of a polynomial inside the division loop: terms strictly
/// descending under the active order, so the leading term is `terms[0]`.
#[derive(Clone)]
struct Ordered {
    terms: Vec<(Monomial, u64)>,
}

impl Ordered {
    fn of(f: &MultiPoly, order: &MonomialOrder) -> Ordered {
        let mut terms = f.terms().to_vec();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        Ordered { terms }
    }

    /// `self - c * m * g`, merging two descending term lists.
    fn sub_scaled(
        &self,
        c: u64,
        m: &Monomial,
        g: &Ordered,
        field: PrimeField,
        order: &MonomialOrder,
    ) -> Ordered {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < g.terms.len() {
            let (ma, ca) = &self.terms[i];
            let gb = g.terms[j].0.mul(m);
            let cb = field.neg(field.mul(g.terms[j].1, c));
            match order.cmp(ma, &gb) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gb, cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(*ca, cb);
                    if s != 0 {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < g.terms.len() {
            out.push((g.terms[j].0.mul(m), field.neg(field.mul(g.terms[j].1, c))));
            j += 1;
        }
        Ordered { terms: out }
    }
}

/// Fully reduces `f` modulo `basis`: the result contains no term divisible
/// by any basis leading monomial. Zero basis elements are skipped; the first
/// applicable reducer in list order is used, which makes the computation
/// deterministic for a fixed basis.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly], order: &MonomialOrder) -> MultiPoly {
    let ring = f.ring().clone();
    let field = f.field();
    let reducers: Vec<(Ordered, Monomial, u64)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            assert_eq!(g.ring(), &ring, "basis element from a different ring");
            let og = Ordered::of(g, order);
            let (lm, lc) = og.terms[0].clone();
            (og, lm, lc)
        })
        .collect();
    let mut work = Ordered::of(f, order);
    let mut remainder: Vec<(Monomial, u64)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.terms.first().cloned() {
        for (og, glm, glc) in &reducers {
            if glm.divides(&lm) {
                let m = glm.div(&lm).expect("divisibility checked");
                let c = field.div(lc, *glc);
                work = work.sub_scaled(c, &m, og, field, order);
                continue 'outer;
            }
        }
        // Irreducible leading term: move it to the remainder. Leading terms
        // strictly decrease, so pushing keeps the remainder sorted.
        remainder.push((lm, lc));
        work.terms.remove(0);
    }
    MultiPoly::from_terms(&ring, remainder)
}

/// Exact division in the polynomial ring: returns `g / f` when `f` divides
/// `g`, and `None` otherwise.
///
/// Reduction by the single divisor `f` is a complete divisibility test: as
/// long as the running remainder is a multiple of `f`, its leading monomial
/// is divisible by `lm(f)` (leading terms are multiplicative over a field),
/// and once it is not a multiple the quotient can never recover.
pub fn exact_div(g: &MultiPoly, f: &MultiPoly, order: &MonomialOrder) -> Option<MultiPoly> {
    assert!(!f.is_zero(), "division by the zero polynomial");
    let ring = g.ring().clone();
    let field = g.field();
    let of = Ordered::of(f, order);
    let (flm, flc) = of.terms[0].clone();
    let mut work = Ordered::of(g, order);
    let mut quotient: Vec<(Monomial, u64)> = Vec::new();
    while let Some((lm, lc)) = work.terms.first().cloned() {
        let m = flm.div(&lm)?;
        let c = field.div(lc, flc);
        quotient.push((m.clone(), c));
        work = work.sub_scaled(c, &m, &of, field, order);
    }
    Some(MultiPoly::from_terms(&ring, quotient))
}

/// The S-polynomial `(l / lt(f)) f - (l / lt(g)) g` where `l` is the lcm of
/// the leading monomials. Both inputs must be nonzero.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
    let (fm, fc) = f.leading_term(order).expect("s_polynomial of zero");
    let (gm, gc) = g.leading_term(order).expect("s_polynomial of zero");
    let l = fm.lcm(gm);
    let field = f.field();
    let a = f.mul_term(&fm.div(&l).unwrap(), field.inv(fc));
    let b = g.mul_term(&gm.div(&l).unwrap(), field.inv(gc));
    a.sub(&b)
}

/// Scales a nonzero polynomial so its leading coefficient under `order` is 1.
fn monic(f: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
    match f.leading_term(order) {
        Some((_, c)) if c != 1 => f.mul_scalar(f.field().inv(c)),
        _ => f.clone(),
    }
}

/// Selection key for the pair queue: degree of the lcm first, then the lcm
/// under the active order, then the indices. Strictly total, so the queue
/// pops in a reproducible sequence.
fn pair_is_less(
    a: &(Monomial, usize, usize),
    b: &(Monomial, usize, usize),
    order: &MonomialOrder,
) -> bool {
    match a.0.total_degree().cmp(&b.0.total_degree()) {
        Ordering::Less => return true,
        Ordering::Greater => return false,
        Ordering::Equal => {}
    }
    match order.cmp(&a.0, &b.0) {
        Ordering::Less => return true,
        Ordering::Greater => return false,
        Ordering::Equal => {}
    }
    (a.1, a.2) < (b.1, b.2)
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
///
/// The zero ideal yields an empty basis; the unit ideal yields `[1]`.
pub fn buchberger(gens: &[MultiPoly], order: &MonomialOrder) -> Vec<MultiPoly> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in gens {
        assert_eq!(g.ring(), &ring, "generators from different rings");
        if !g.is_zero() {
            let g = monic(g, order);
            if !basis.contains(&g) {
                basis.push(g);
            }
        }
    }
    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term(order).unwrap().0.clone())
        .collect();

    // Pending S-pairs (i < j). The chain criterion consults this set: a pair
    // may be dropped only when both sub-pairs through k have already been
    // dealt with, i.e. are no longer pending.
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // Normal selection strategy.
        let &(i, j) = pending
            .iter()
            .min_by(|&&(ai, aj), &&(bi, bj)| {
                let ka = (lms[ai].lcm(&lms[aj]), ai, aj);
                let kb = (lms[bi].lcm(&lms[bj]), bi, bj);
                if pair_is_less(&ka, &kb, order) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
            .unwrap();
        pending.remove(&(i, j));

        // Buchberger's first criterion: coprime leading monomials reduce to
        // zero automatically.
        if lms[i].coprime_with(&lms[j]) {
            continue;
        }
        // Chain criterion: some third element divides the lcm and both
        // connecting pairs are already settled.
        let lcm_ij = lms[i].lcm(&lms[j]);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&lcm_ij)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = monic(&r, order);
            let new = basis.len();
            lms.push(r.leading_term(order).unwrap().0.clone());
            basis.push(r);
            for k in 0..new {
                pending.insert((k, new));
            }
        }
    }

    reduce_basis(basis, order)
}

/// Minimizes and tail-reduces a Groebner basis into the canonical reduced
/// form: monic elements, no leading monomial dividing another, no term
/// divisible by a different element's leading monomial, sorted ascending by
/// leading monomial.
fn reduce_basis(mut basis: Vec<MultiPoly>, order: &MonomialOrder) -> Vec<MultiPoly> {
    basis.retain(|g| !g.is_zero());
    // Minimize: drop any element whose leading monomial is a multiple of
    // another surviving one. Processing largest first keeps the minimal set.
    basis.sort_by(|a, b| {
        order.cmp(a.leading_term(order).unwrap().0, b.leading_term(order).unwrap().0)
    });
    let mut keep: Vec<MultiPoly> = Vec::new();
    for g in basis {
        let lm = g.leading_term(order).unwrap().0.clone();
        if !keep
            .iter()
            .any(|h| h.leading_term(order).unwrap().0.divides(&lm))
        {
            keep.push(g);
        }
    }
    // Tail-reduce to a fixpoint. The leading terms are untouchable (no other
    // leading monomial divides them), so this terminates and yields the
    // unique reduced basis.
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<MultiPoly> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let reduced = monic(&normal_form(&keep[i], &others, order), order);
            if reduced != keep[i] {
                keep[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    keep.sort_by(|a, b| {
        order.cmp(a.leading_term(order).unwrap().0, b.leading_term(order).unwrap().0)
    });
    keep
}

/// Checks the Buchberger criterion directly: every S-polynomial of the given
/// basis reduces to zero against it. This is the definitional test used to
/// audit computed bases after the fact.
pub fn is_groebner_basis(basis: &[MultiPoly], order: &MonomialOrder) -> bool {
    let nonzero: Vec<&MultiPoly> = basis.iter().filter(|g| !g.is_zero()).collect();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let s = s_polynomial(nonzero[i], nonzero[j], order);
            if !normal_form(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::PolyRing;
    use crate::parse::parse;
    use alloc::sync::Arc;

    fn ring(p: u64) -> Arc<PolyRing> {
        PolyRing::txy(p).unwrap()
    }

    fn polys(r: &Arc<PolyRing>, exprs: &[&str]) -> Vec<MultiPoly> {
        exprs.iter().map(|e| parse(e, r).unwrap()).collect()
    }

    #[test]
    fn normal_form_textbook_example() {
        let r = ring(7);
        let f = parse("x^2*y + 1", &r).unwrap();
        let basis = polys(&r, &["x*y - 1"]);
        let nf = normal_form(&f, &basis, &MonomialOrder::grevlex(3));
        assert_eq!(nf, parse("x + 1", &r).unwrap());
    }

    #[test]
    fn normal_form_is_zero_exactly_on_members() {
        let r = ring(5);
        let order = MonomialOrder::grevlex(3);
        let basis = buchberger(&polys(&r, &["x^2 - y", "y^2 - t"]), &order);
        // x^4 = y^2 = t modulo the basis.
        let f = parse("x^4 - t", &r).unwrap();
        assert!(normal_form(&f, &basis, &order).is_zero());
        let g = parse("x^4 - 1", &r).unwrap();
        assert!(!normal_form(&g, &basis, &order).is_zero());
    }

    #[test]
    fn linear_generators_reduce_to_variables() {
        // (x - y, x + y) = (x, y) away from characteristic 2.
        let r = ring(5);
        let order = MonomialOrder::lex(3);
        let basis = buchberger(&polys(&r, &["x - y", "x + y"]), &order);
        assert_eq!(basis, polys(&r, &["y", "x"]));
    }

    #[test]
    fn s_pair_completion_discovers_y_cubed() {
        // Classic: {x^2, x*y + y^2} under lex x > y needs y^3.
        let r = ring(5);
        let order = MonomialOrder::lex(3);
        let basis = buchberger(&polys(&r, &["x^2", "x*y + y^2"]), &order);
        assert_eq!(basis, polys(&r, &["y^3", "x*y + y^2", "x^2"]));
        assert!(is_groebner_basis(&basis, &order));
        // y^3 is a member even though no generator shows it directly:
        // y^3 = y*(xy + y^2) - x*(xy + y^2) + y*x^2.
        let y3 = parse("y^3", &r).unwrap();
        assert!(normal_form(&y3, &basis, &order).is_zero());
    }

    #[test]
    fn zero_and_unit_ideals() {
        let r = ring(3);
        let order = MonomialOrder::grevlex(3);
        assert!(buchberger(&[], &order).is_empty());
        assert!(buchberger(&[MultiPoly::zero(&r)], &order).is_empty());
        let unit = buchberger(&polys(&r, &["x", "x + 1"]), &order);
        assert_eq!(unit, polys(&r, &["1"]));
    }

    #[test]
    fn basis_is_independent_of_generator_order_and_scaling() {
        let r = ring(7);
        let order = MonomialOrder::grevlex(3);
        let gens = polys(&r, &["x^2*y - t", "x*y^2 + 1", "t^2*x - y"]);
        let reference = buchberger(&gens, &order);
        assert!(is_groebner_basis(&reference, &order));
        // All six permutations, with assorted nonzero scalings.
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for (k, perm) in perms.iter().enumerate() {
            let shuffled: Vec<MultiPoly> =
                perm.iter().map(|&i| gens[i].mul_scalar(1 + k as u64 % 6)).collect();
            assert_eq!(buchberger(&shuffled, &order), reference, "permutation {perm:?}");
        }
    }

    #[test]
    fn reduced_basis_is_self_reduced() {
        let r = ring(5);
        let order = MonomialOrder::grevlex(3);
        let basis = buchberger(&polys(&r, &["x^2 + y", "x*y + t", "y^2 - t*x", "t^3 - y"]), &order);
        for (i, g) in basis.iter().enumerate() {
            let (lm_g, lc_g) = g.leading_term(&order).unwrap();
            assert_eq!(lc_g, 1, "basis element not monic");
            for (j, h) in basis.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm_h = h.leading_term(&order).unwrap().0;
                assert!(!lm_h.divides(lm_g), "minimality violated");
                // No term of g is divisible by the leading monomial of h.
                for (m, _) in g.terms() {
                    assert!(!lm_h.divides(m), "tail not reduced");
                }
            }
        }
    }

    #[test]
    fn elimination_order_basis_contains_the_contraction() {
        // (x - t, x) contains t; the block order pushes it into the basis.
        let r = ring(5);
        let order = MonomialOrder::elimination(3, &[1, 2]).unwrap();
        let basis = buchberger(&polys(&r, &["x - t", "x"]), &order);
        assert_eq!(basis, polys(&r, &["t", "x"]));
    }

    #[test]
    fn is_groebner_basis_rejects_incomplete_sets() {
        let r = ring(5);
        let order = MonomialOrder::lex(3);
        let gens = polys(&r, &["x^2", "x*y + y^2"]);
        assert!(!is_groebner_basis(&gens, &order));
    }

    #[test]
    fn exact_division_recovers_the_quotient() {
        let r = ring(7);
        let order = MonomialOrder::grevlex(3);
        let f = parse("x + 2*y + t", &r).unwrap();
        let q = parse("x^2*y - t*y + 3", &r).unwrap();
        let g = f.mul(&q);
        assert_eq!(exact_div(&g, &f, &order), Some(q));
        // Perturbing by 1 destroys divisibility.
        let g1 = g.add(&MultiPoly::one(&r));
        assert_eq!(exact_div(&g1, &f, &order), None);
        // x + y does not divide x^2 + y^2 away from characteristic 2 ...
        let s = parse("x^2 + y^2", &r).unwrap();
        assert_eq!(exact_div(&s, &parse("x + y", &r).unwrap(), &order), None);
        // ... but does in characteristic 2.
        let r2 = ring(2);
        let s2 = parse("x^2 + y^2", &r2).unwrap();
        let d = exact_div(&s2, &parse("x + y", &r2).unwrap(), &MonomialOrder::grevlex(3));
        assert_eq!(d, Some(parse("x + y", &r2).unwrap()));
        // Zero divided by anything is zero.
        assert_eq!(exact_div(&MultiPoly::zero(&r), &f, &order), Some(MultiPoly::zero(&r)));
    }
}
