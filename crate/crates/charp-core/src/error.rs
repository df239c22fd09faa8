//! Error types shared across the engine.

use alloc::string::String;
use core::fmt;

/// Errors reported by the algebra engine.
///
/// Mathematical *falsehood* is never an error: operations that check an
/// identity return `bool` or a report struct. `Error` covers invalid inputs
/// and unsupported parameter ranges only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The characteristic is not a prime number.
    NotPrime(u64),
    /// The characteristic is out of the supported range (`2 <= p < 2^31`).
    PrimeOutOfRange(u64),
    /// Division by the zero polynomial.
    DivisionByZero,
    /// An operation undefined for the zero polynomial (factoring, colon by
    /// an element, hypersurface construction).
    ZeroPolynomial,
    /// An exponent `q` that is not a positive power of the characteristic.
    NotAFrobeniusPower { q: u64, p: u64 },
    /// `p^e` does not fit into the supported range.
    PowerOverflow { p: u64, e: u32 },
    /// Operands belong to different polynomial rings.
    RingMismatch,
    /// A ring with an unsupported variable list (empty, duplicate names, or
    /// malformed identifiers).
    BadVariables(String),
    /// A substitution image was not a linear form in the non-base variables.
    NonLinearImage,
    /// The operation needs exactly the three-variable ring layout
    /// (base variable plus two main variables).
    WrongArity { expected: usize, found: usize },
    /// The check is vacuous or undefined at `q = 2`.
    DegenerateQ,
    /// The univariate argument must be irreducible of positive degree.
    NotIrreducible,
    /// Generators were required to be free of the base variable but were not.
    BaseVariablePresent,
    /// A polynomial expected to involve only the base variable used others.
    NotUnivariate,
    /// An exponent too large for the engine's monomial representation.
    ExponentOverflow,
    /// A hypersurface operation needed a product-of-linear-forms description
    /// that is missing or does not multiply back to the hypersurface.
    MissingSplitForm,
    /// A split form whose factors fail validation (zero form or two
    /// proportional forms).
    InvalidSplitForm,
    /// Colon or saturation by the zero ideal.
    ZeroIdealDivisor,
    /// Expression parse failure.
    Parse(ParseError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::PrimeOutOfRange(p) => {
                write!(f, "characteristic {p} outside supported range 2..2^31")
            }
            Error::DivisionByZero => write!(f, "division by zero polynomial"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::NotAFrobeniusPower { q, p } => {
                write!(f, "{q} is not a positive power of the characteristic {p}")
            }
            Error::PowerOverflow { p, e } => write!(f, "{p}^{e} exceeds the supported range"),
            Error::RingMismatch => write!(f, "operands belong to different polynomial rings"),
            Error::BadVariables(msg) => write!(f, "bad variable list: {msg}"),
            Error::NonLinearImage => {
                write!(f, "substitution images must be linear forms in the main variables")
            }
            Error::WrongArity { expected, found } => {
                write!(f, "operation needs a ring with {expected} variables, found {found}")
            }
            Error::DegenerateQ => write!(f, "check is degenerate at q = 2; use e with p^e >= 3"),
            Error::NotIrreducible => write!(f, "polynomial must be irreducible of positive degree"),
            Error::BaseVariablePresent => {
                write!(f, "generators must not involve the base variable")
            }
            Error::NotUnivariate => {
                write!(f, "polynomial involves variables besides the base variable")
            }
            Error::ExponentOverflow => write!(f, "exponent out of supported range"),
            Error::MissingSplitForm => {
                write!(f, "hypersurface has no product-of-linear-forms description")
            }
            Error::InvalidSplitForm => write!(f, "invalid product-of-linear-forms description"),
            Error::ZeroIdealDivisor => write!(f, "colon or saturation by the zero ideal"),
            Error::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

/// A syntax error in a polynomial expression, with a byte offset into the
/// source string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
