use thiserror::Error;

use crate::qseries::Rational;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(i64, i64),

    #[error("leading coefficient {0} is not a monomial c*x^j")]
    NonMonomialLead(String),

    #[error("leading coefficient {0} cannot be raised to a rational power exactly")]
    LeadNotReducible(String),

    #[error("level {level} times exponent {exponent} is not an integer")]
    NonIntegralLevel { level: i64, exponent: Rational },

    #[error("series has no nonzero coefficient within its truncation")]
    ZeroSeries,

    #[error("Laurent polynomial division is not exact")]
    NotDivisible,

    #[error("expansion does not terminate at depth {0}")]
    NonTerminating(Rational),

    #[error("x-exponent {0} is not an integer; use an even argument multiplier")]
    NonIntegralXExponent(Rational),

    #[error("Im(tau) must be positive, got tau = {0}")]
    TauNotInUpperHalfPlane(String),

    #[error("pole of the integrand: {0}")]
    Pole(String),

    #[error("Gamma function pole at {0}")]
    GammaPole(f64),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resonant denominator E(lambda) = E(mu) at dominant weight j={j}, depth={depth}")]
    Resonance { j: i64, depth: Rational },

    #[error("zero sine denominator at index {0}")]
    ZeroSine(i64),

    #[error("tail bound {bound:e} exceeds {limit:e} at order {order}")]
    TailBound { bound: f64, limit: f64, order: u32 },

    #[error("malformed series encoding: {0}")]
    Encoding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
