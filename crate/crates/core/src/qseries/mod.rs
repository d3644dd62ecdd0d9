//! Exact truncated series in fractional powers of the nome `p = e^{2 pi i tau}`
//! whose coefficients are Laurent polynomials in `x = e^{2 pi i z}` over the
//! rationals.
//!
//! A [`NomeSeries`] is `e^{2 pi i K u} p^lead * sum_{n=0}^{N} c_n(x) p^{n/D}`,
//! where `D` is the grid denominator and `K` the level tag. Everything here is
//! exact; [`NomeSeries::eval`] is the only place floating point enters.

mod json;
mod laurent;
mod scaled;
mod series;

pub use json::{SeriesJson, TermJson, CoeffJson};
pub use laurent::LaurentX;
pub use scaled::{Prefactor, ScaledSeries};
pub use series::NomeSeries;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `num/den` form used by every serialized artifact.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Encoding(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// The integer value of `r`, if it is one and fits in `i64`.
pub(crate) fn as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

pub(crate) fn denom_u64(r: &Rational) -> u64 {
    r.denom().to_u64().expect("denominator fits in u64")
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Exact `c^e` for rational `c` and rational `e`, when the result is rational.
pub(crate) fn rational_pow(c: &Rational, e: &Rational) -> Option<Rational> {
    if c.is_one() || e.is_zero() {
        return Some(Rational::one());
    }
    if c.is_zero() {
        return if e.is_positive() { Some(Rational::zero()) } else { None };
    }
    let n = as_i64(e)?;
    let base = if n < 0 { c.recip() } else { c.clone() };
    Some(num_traits::pow::pow(base, n.unsigned_abs() as usize))
}
