//! Exact arithmetic in `R = F[[pi]]`, modelled by the localization of `F[pi]`
//! at the prime `(pi)`. Finitely generated R-modules have the same invariants
//! in both models, and the arithmetic stays exact and terminating.

mod field;
mod local;
mod poly;
mod text;

pub use field::{Field, Scalar};
pub use local::{LocalElement, Valuation};
pub use poly::Polynomial;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("{0} is not a prime (or exceeds 32 bits)")]
    NotPrime(u64),
    #[error("unknown field tag '{0}' (expected Q or Fp:<p>)")]
    BadFieldTag(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no inverse")]
    ZeroNotInvertible,
    #[error("{0} is not a unit of R")]
    NotAUnit(String),
    #[error("quotient leaves R: valuation {numerator} < {denominator}")]
    QuotientNotInRing { numerator: u32, denominator: u32 },
    #[error("denominator vanishes at pi = 0; value is not in R")]
    NotInRing,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl LocalElement {
    /// Parses the grammar emitted by `Display`, e.g. `pi^3 + 2*pi^4` or
    /// `(1 + pi)/(1 - pi)`.
    pub fn parse(src: &str, field: Field) -> Result<LocalElement, RingError> {
        text::parse(src, field)
    }
}
