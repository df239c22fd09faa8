//! Exact commutative algebra in prime characteristic.
//!
//! The crate implements arithmetic for the polynomial ring
//! `F_p[t, x, y]`, Groebner-basis driven ideal calculus (membership,
//! intersection, colon, saturation, elimination), Smith normal forms of
//! matrices over `F_p[t]`, and on top of those a small laboratory for
//! studying Frobenius powers of ideals: bracket powers `(x^q, y^q, F)` for
//! `q = p^e`, the `F_p[t]`-torsion of the resulting quotients, and which
//! maximal ideals `(pi(t), x, y)` are associated to them.
//!
//! Everything is exact; there are no floating point numbers anywhere.
//! Computations are deterministic: the one randomized algorithm
//! (equal-degree splitting inside univariate factorization) runs on an
//! explicitly seeded stream and sorts its output canonically.
//!
//! The crate is `no_std` (with `alloc`); the companion `charp-cli` crate
//! carries IO, serialization and the command line interface.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod factor;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod multipoly;
pub mod order;
pub mod parse;
pub mod snf;
pub mod unipoly;

pub use error::{Error, ParseError, Result};
pub use factor::{is_irreducible, uni_factor, uni_factor_seeded, FactorList};
pub use field::PrimeField;
pub use frobenius::{
    base_scalars_are_nonzerodivisors, frobenius_power, geometric_colon_check, geometric_sum,
    is_associated_maximal, linear_split_intersection, probe_associated_primes,
    split_image_is_power_image, torsion_checks, torsion_elementary_divisors, torsion_witness,
    witness_colon_contraction, AssociatedPrimesReport, FrobeniusPower, Hypersurface, LinearForm,
    PrimeProbe, TorsionChecks,
};
pub use groebner::{buchberger, is_groebner_basis, normal_form, s_polynomial};
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use multipoly::{MultiPoly, PolyRing};
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse;
pub use snf::{mult_matrix, smith_normal_form, ElementaryDivisors, PolyMatrix};
pub use unipoly::{tau, UniPoly};
