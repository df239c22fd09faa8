//! Randomized cross-checks of the engine against independent brute-force
//! oracles: Buchberger output against the S-polynomial criterion, ideal
//! membership against exhaustive linear algebra, elementary divisors
//! against minor gcds, and factorization against re-multiplication.

mod support;

use std::sync::Arc;

use proptest::prelude::*;

use charp_core::{
    buchberger, is_groebner_basis, parse, smith_normal_form, uni_factor_seeded, Ideal, Monomial,
    MonomialOrder, MultiPoly, PolyMatrix, PolyRing, PrimeField, UniPoly,
};
use support::{bounded_combination_exists, minor_gcd};

fn txy(p: u64) -> Arc<PolyRing> {
    PolyRing::txy(p).expect("2 and 3 are prime")
}

/// A monomial in (t, x, y) of total degree exactly `deg`.
fn monomial_of_degree(deg: u32) -> impl Strategy<Value = Monomial> {
    (0..=deg).prop_flat_map(move |a| {
        (0..=(deg - a)).prop_map(move |b| Monomial::from_exps(&[a, b, deg - a - b]))
    })
}

/// A monomial in (t, x, y) of total degree at most `maxdeg`.
fn monomial_up_to(maxdeg: u32) -> impl Strategy<Value = Monomial> {
    (0..=maxdeg).prop_flat_map(monomial_of_degree)
}

/// A sparse polynomial with up to `maxterms` terms of degree <= `maxdeg`.
/// Coefficient collisions may cancel, so the zero polynomial does occur.
fn poly_up_to(p: u64, maxdeg: u32, maxterms: usize) -> impl Strategy<Value = MultiPoly> {
    let ring = txy(p);
    proptest::collection::vec((monomial_up_to(maxdeg), 1..p), 0..=maxterms)
        .prop_map(move |terms| MultiPoly::from_terms(&ring, terms))
}

/// A homogeneous polynomial of degree exactly `deg` (or zero, on cancel).
fn homogeneous_poly(p: u64, deg: u32, maxterms: usize) -> impl Strategy<Value = MultiPoly> {
    let ring = txy(p);
    proptest::collection::vec((monomial_of_degree(deg), 1..p), 1..=maxterms)
        .prop_map(move |terms| MultiPoly::from_terms(&ring, terms))
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3u64)]
}

// ---------------------------------------------------------------------------
// Buchberger output really is a Groebner basis.
// ---------------------------------------------------------------------------

fn gb_instance() -> impl Strategy<Value = (u64, Vec<MultiPoly>, MonomialOrder)> {
    small_prime().prop_flat_map(|p| {
        (
            Just(p),
            proptest::collection::vec(poly_up_to(p, 4, 4), 1..=3),
            prop_oneof![
                Just(MonomialOrder::grevlex(3)),
                Just(MonomialOrder::lex(3)),
                Just(MonomialOrder::elimination(3, &[1, 2]).expect("valid block")),
            ],
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Every computed basis passes the full S-polynomial criterion: the
    /// S-polynomial of each pair reduces to zero. `is_groebner_basis`
    /// applies no pair-skipping criteria, so this is an independent check
    /// of the shortcuts Buchberger's loop takes.
    #[test]
    fn computed_bases_pass_the_s_polynomial_test((_p, gens, order) in gb_instance()) {
        let basis = buchberger(&gens, &order);
        prop_assert!(is_groebner_basis(&basis, &order));
        // The basis generates the same ideal: each original generator
        // reduces to zero against it.
        for g in &gens {
            prop_assert!(charp_core::normal_form(g, &basis, &order).is_zero());
        }
    }
}

// ---------------------------------------------------------------------------
// Membership against exhaustive linear algebra.
// ---------------------------------------------------------------------------

fn homogeneous_membership_instance() -> impl Strategy<Value = (Vec<MultiPoly>, MultiPoly)> {
    small_prime().prop_flat_map(|p| {
        let gens = proptest::collection::vec(
            (1..=4u32).prop_flat_map(move |d| homogeneous_poly(p, d, 3)),
            1..=3,
        );
        // The target is a monomial or a homogeneous polynomial of degree
        // <= 6, so membership forces a homogeneous certificate whose
        // cofactors stay within degree deg(f).
        let target = prop_oneof![
            monomial_up_to(6).prop_map(move |m| {
                let ring = txy(p);
                MultiPoly::term(&ring, m, 1)
            }),
            (0..=6u32).prop_flat_map(move |d| homogeneous_poly(p, d, 3)),
        ];
        (gens, target)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// For homogeneous generators, Groebner membership and the bounded
    /// linear-algebra oracle must agree exactly.
    #[test]
    fn membership_matches_the_linear_algebra_oracle(
        (gens, f) in homogeneous_membership_instance()
    ) {
        let ring = f.ring().clone();
        let gens: Vec<MultiPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(&ring, gens.clone());
        let bound = f.total_degree().unwrap_or(0) as u32;
        let expected = bounded_combination_exists(&f, &gens, bound);
        prop_assert_eq!(ideal.contains(&f), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Constructed combinations of arbitrary (not necessarily homogeneous)
    /// generators are always recognized as members.
    #[test]
    fn explicit_combinations_are_members(
        (gens, cofactors) in small_prime().prop_flat_map(|p| {
            let n = 1..=3usize;
            n.prop_flat_map(move |k| (
                proptest::collection::vec(poly_up_to(p, 4, 3), k),
                proptest::collection::vec(poly_up_to(p, 2, 2), k),
            ))
        })
    ) {
        let ring = gens[0].ring().clone();
        let mut f = MultiPoly::zero(&ring);
        for (g, h) in gens.iter().zip(&cofactors) {
            f = f.add(&g.mul(h));
        }
        let ideal = Ideal::new(&ring, gens.clone());
        prop_assert!(ideal.contains(&f));
    }
}

// ---------------------------------------------------------------------------
// Elementary divisors against brute-force minor gcds.
// ---------------------------------------------------------------------------

fn small_matrix() -> impl Strategy<Value = PolyMatrix> {
    prop_oneof![Just(2u64), Just(3u64)].prop_flat_map(|p| {
        let field = PrimeField::new(p).expect("prime");
        proptest::collection::vec(proptest::collection::vec(0..p, 3), 16).prop_map(
            move |coeffs| {
                let rows: Vec<Vec<UniPoly>> = coeffs
                    .chunks(4)
                    .map(|chunk| {
                        chunk.iter().map(|c| UniPoly::from_coeffs(field, c)).collect()
                    })
                    .collect();
                PolyMatrix::from_rows(field, rows).expect("4 x 4")
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// The product d_1 ... d_k of the first k elementary divisors equals
    /// the monic gcd of all k x k minors, and minors beyond the rank all
    /// vanish. This pins the Smith normal form against a computation that
    /// never performs a row operation.
    #[test]
    fn elementary_divisors_match_minor_gcds(m in small_matrix()) {
        let field = m.field();
        let divisors = smith_normal_form(&m).divisors;
        let rank = divisors.len();
        let mut product = UniPoly::one(field);
        for (k, d) in divisors.iter().enumerate() {
            product = product.mul(d);
            prop_assert_eq!(&minor_gcd(field, &m, k + 1), &product.monic());
        }
        for k in (rank + 1)..=m.rows().min(m.cols()) {
            prop_assert!(minor_gcd(field, &m, k).is_zero());
        }
    }
}

// ---------------------------------------------------------------------------
// Factorization re-multiplication.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Factoring and multiplying back is the identity, the factors are
    /// monic irreducibles, and the result is seed-independent.
    #[test]
    fn factoring_and_remultiplying_is_the_identity(
        (p, coeffs, seed) in prop_oneof![Just(2u64), Just(3u64), Just(5u64)]
            .prop_flat_map(|p| {
                (Just(p), proptest::collection::vec(0..p, 1..=9), any::<u64>())
            })
    ) {
        let field = PrimeField::new(p).expect("prime");
        let f = UniPoly::from_coeffs(field, &coeffs);
        prop_assume!(!f.is_zero());
        let list = uni_factor_seeded(&f, seed).expect("nonzero input factors");
        prop_assert_eq!(&list.product_in(field), &f);
        for (g, mult) in &list.factors {
            prop_assert!(*mult >= 1);
            prop_assert_eq!(g.leading_coeff(), 1, "factors are monic");
            prop_assert!(charp_core::is_irreducible(g));
        }
        // Canonical order and seed independence.
        let again = uni_factor_seeded(&f, seed.wrapping_add(0x9e3779b97f4a7c15));
        prop_assert_eq!(&list, &again.expect("same input"));
    }
}

// ---------------------------------------------------------------------------
// Printing and parsing are inverse; basic ring identities.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// `parse` inverts `display_with` under every order we print with.
    #[test]
    fn display_then_parse_roundtrips(
        (f, lexish) in small_prime()
            .prop_flat_map(|p| (poly_up_to(p, 5, 5), any::<bool>()))
    ) {
        let order = if lexish {
            MonomialOrder::lex(3)
        } else {
            MonomialOrder::grevlex(3)
        };
        let text = f.display_with(&order);
        let back = parse(&text, f.ring()).expect("printed form parses");
        prop_assert_eq!(back, f);
    }

    /// Multiplication distributes over addition, and the Frobenius map is
    /// additive: (f + g)^q = f^q + g^q in characteristic p. The right-hand
    /// side is computed by the per-term exponent map, the left by repeated
    /// squaring, so the two power paths check each other.
    #[test]
    fn ring_identities_hold(
        (p, f, g, h) in small_prime().prop_flat_map(|p| {
            (Just(p), poly_up_to(p, 3, 3), poly_up_to(p, 3, 3), poly_up_to(p, 3, 3))
        })
    ) {
        let left = f.add(&g).mul(&h);
        let right = f.mul(&h).add(&g.mul(&h));
        prop_assert_eq!(left, right);

        let q = p * p;
        let sum_pow = f.add(&g).pow(q as u32);
        let pow_sum = f
            .frobenius_pow(q)
            .expect("q is a power of p")
            .add(&g.frobenius_pow(q).expect("q is a power of p"));
        prop_assert_eq!(sum_pow, pow_sum);
    }
}
