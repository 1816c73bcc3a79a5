use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,

    #[error("not a square: {0}")]
    NotASquare(String),

    #[error("degenerate curve: discriminant vanishes ({witness})")]
    Degenerate { witness: String },

    #[error("denominator of {formula} vanishes at the given point")]
    DenominatorVanishes { formula: String },

    #[error("vanishing invariant {0} (division by zero)")]
    VanishingInvariant(&'static str),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("modular polynomial of level {0} unavailable (no embedded data or data file)")]
    ModularPolyUnavailable(u32),

    #[error("Weierstrass model not minimal at {place}")]
    NonMinimal { place: String },

    #[error("section does not satisfy the Weierstrass equation")]
    NotASection,

    #[error("component identification failed at place {place}: {reason}")]
    ComponentFailure { place: String, reason: String },

    #[error("sections are linearly dependent: height Gram matrix is singular")]
    SingularGram,

    #[error("inconsistent polynomial system: residual {0}")]
    Inconsistent(String),

    #[error("catalog data error: {0}")]
    Catalog(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
