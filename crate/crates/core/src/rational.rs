//! Exact rationals and their `"p/q"` text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator; zero is `0/1`.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as an exact rational (expected an integer or \"p/q\")")]
pub struct ParseRationalError {
    pub input: String,
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse an integer or a fraction `p/q` (`q != 0`). Decimal points are
/// rejected so that nothing inexact crosses the boundary.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError { input: s.to_string() };
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| err())?;
    let q = BigInt::from_str(q).map_err(|_| err())?;
    if q == BigInt::from(0) {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

/// Canonical `"p/q"` rendering; integers keep the `/1`.
pub fn render_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
