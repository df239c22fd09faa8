//! Monomial orders: lexicographic, graded reverse lexicographic, and block
//! (elimination) orders built from them.
//!
//! An order is a sequence of blocks, each a comparison kind together with
//! the variable indices it covers, most significant first. Monomials are
//! compared block by block; the blocks must partition the ring's variables,
//! which keeps every order total.
//!
//! Ring convention: the first ring variable is the coefficient variable
//! (`t` in the standard ring `F_p[t, x, y]`), and the default orders demote
//! it below the others. Default grevlex on `(t, x, y)` therefore has
//! precedence `x > y > t`, and the elimination order used for contractions
//! puts the block `{x, y}` wholesale above `{t}`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A block monomial order on a ring with a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    nvars: usize,
    blocks: Vec<(OrderKind, Vec<usize>)>,
}

/// Default variable precedence: everything except the coefficient variable,
/// in declaration order, then the coefficient variable last.
fn default_precedence(nvars: usize) -> Vec<usize> {
    let mut prec: Vec<usize> = (1..nvars).collect();
    prec.push(0);
    prec
}

impl MonomialOrder {
    /// Builds an order from explicit blocks, validating that they partition
    /// the variable set.
    pub fn from_blocks(nvars: usize, blocks: Vec<(OrderKind, Vec<usize>)>) -> Result<MonomialOrder> {
        let mut seen = alloc::vec![false; nvars];
        for (_, vars) in &blocks {
            for &v in vars {
                if v >= nvars || seen[v] {
                    return Err(Error::BadVariables(alloc::format!(
                        "order blocks must partition the {nvars} ring variables"
                    )));
                }
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::BadVariables(alloc::format!(
                "order blocks must cover all {nvars} ring variables"
            )));
        }
        Ok(MonomialOrder { nvars, blocks })
    }

    /// Graded reverse lexicographic with the default precedence.
    pub fn grevlex(nvars: usize) -> MonomialOrder {
        MonomialOrder { nvars, blocks: alloc::vec![(OrderKind::GrevLex, default_precedence(nvars))] }
    }

    /// Pure lexicographic with the default precedence.
    pub fn lex(nvars: usize) -> MonomialOrder {
        MonomialOrder { nvars, blocks: alloc::vec![(OrderKind::Lex, default_precedence(nvars))] }
    }

    /// Elimination order: the `front` variables form a grevlex block ranked
    /// above a grevlex block of the remaining variables. Any monomial
    /// containing a front variable outranks every front-free monomial, so a
    /// Groebner basis under this order exposes the contraction to the back
    /// variables.
    pub fn elimination(nvars: usize, front: &[usize]) -> Result<MonomialOrder> {
        let rest: Vec<usize> =
            default_precedence(nvars).into_iter().filter(|v| !front.contains(v)).collect();
        MonomialOrder::from_blocks(
            nvars,
            alloc::vec![(OrderKind::GrevLex, front.to_vec()), (OrderKind::GrevLex, rest)],
        )
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[(OrderKind, Vec<usize>)] {
        &self.blocks
    }

    /// Compares two monomials. Both must come from a ring with this order's
    /// variable count.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars);
        debug_assert_eq!(b.nvars(), self.nvars);
        for (kind, vars) in &self.blocks {
            let ord = match kind {
                OrderKind::Lex => cmp_lex(vars, a, b),
                OrderKind::GrevLex => cmp_grevlex(vars, a, b),
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn cmp_lex(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in vars {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree_over(vars).cmp(&b.degree_over(vars)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Reverse tie-break: walking from the least significant variable up, the
    // monomial with the smaller exponent at the first difference is larger.
    for &v in vars.iter().rev() {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => {}
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps)
    }

    // Ring layout for these tests: slot 0 = t, slot 1 = x, slot 2 = y.

    #[test]
    fn grevlex_breaks_degree_ties_from_the_back() {
        let ord = MonomialOrder::grevlex(3);
        // x^3 > x^2 y: same degree, x^3 has the smaller y exponent.
        assert_eq!(ord.cmp(&m(&[0, 3, 0]), &m(&[0, 2, 1])), Ordering::Greater);
        // Degree dominates: y^4 > x^3.
        assert_eq!(ord.cmp(&m(&[0, 0, 4]), &m(&[0, 3, 0])), Ordering::Greater);
        // t is least significant: x > y > t at degree one.
        assert_eq!(ord.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[1, 0, 0])), Ordering::Greater);
        // But degree still counts t: t^2 > x.
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let ord = MonomialOrder::lex(3);
        // x > y^10 under lex with x > y > t.
        assert_eq!(ord.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 10])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[9, 0, 1]), &m(&[0, 0, 2])), Ordering::Less);
    }

    #[test]
    fn elimination_front_block_dominates() {
        // {x, y} >> {t}: anything with an x or y beats any power of t.
        let ord = MonomialOrder::elimination(3, &[1, 2]).unwrap();
        assert_eq!(ord.cmp(&m(&[0, 1, 0]), &m(&[5, 0, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[100, 0, 0])), Ordering::Greater);
        // Within the front block, grevlex.
        assert_eq!(ord.cmp(&m(&[0, 3, 0]), &m(&[9, 2, 1])), Ordering::Greater);
        // Front tie falls through to the t block.
        assert_eq!(ord.cmp(&m(&[2, 1, 1]), &m(&[1, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn blocks_must_partition() {
        assert!(MonomialOrder::from_blocks(
            3,
            alloc::vec![(OrderKind::Lex, alloc::vec![0, 1])]
        )
        .is_err());
        assert!(MonomialOrder::from_blocks(
            3,
            alloc::vec![(OrderKind::Lex, alloc::vec![0, 1, 1, 2])]
        )
        .is_err());
        assert!(MonomialOrder::from_blocks(
            2,
            alloc::vec![(OrderKind::Lex, alloc::vec![0, 5])]
        )
        .is_err());
    }

    /// Term-order axioms on a deterministic sample: totality, compatibility
    /// with multiplication, and 1 as the minimum.
    #[test]
    fn order_axioms() {
        let orders = [
            MonomialOrder::lex(3),
            MonomialOrder::grevlex(3),
            MonomialOrder::elimination(3, &[1, 2]).unwrap(),
            MonomialOrder::elimination(3, &[2]).unwrap(),
        ];
        let mut sample = alloc::vec::Vec::new();
        for a in 0..4u32 {
            for b in 0..4u32 {
                for c in 0..4u32 {
                    sample.push(m(&[a, b, c]));
                }
            }
        }
        for ord in &orders {
            for a in &sample {
                assert_eq!(ord.cmp(a, a), Ordering::Equal);
                if !a.is_one() {
                    assert_eq!(ord.cmp(a, &Monomial::one(3)), Ordering::Greater);
                }
                for b in &sample {
                    let ab = ord.cmp(a, b);
                    assert_eq!(ab, ord.cmp(b, a).reverse(), "antisymmetry");
                    if a != b {
                        assert_ne!(ab, Ordering::Equal, "totality: {a} vs {b}");
                    }
                    for c in &sample {
                        // Multiplicative: a > b implies ac > bc.
                        assert_eq!(ord.cmp(&a.mul(c), &b.mul(c)), ab, "multiplicativity");
                    }
                }
            }
        }
    }
}
