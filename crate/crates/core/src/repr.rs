//! Text forms of polynomials: nested `"p/q"` arrays for JSON and monomial
//! strings for CSV.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{parse_rational, render_rational, ParseRationalError, Rational};
use crate::{LambdaPoly, XLambdaPoly};

/// `[λ-degree]` array of `"p/q"` strings.
pub fn lambda_poly_to_strings(p: &LambdaPoly) -> Vec<String> {
    p.coeffs().iter().map(render_rational).collect()
}

pub fn lambda_poly_from_strings<S: AsRef<str>>(v: &[S]) -> Result<LambdaPoly, ParseRationalError> {
    let coeffs = v
        .iter()
        .map(|s| parse_rational(s.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LambdaPoly::from_coeffs(coeffs))
}

/// `[x-degree][λ-degree]` array of `"p/q"` strings.
pub fn poly_to_nested(p: &XLambdaPoly) -> Vec<Vec<String>> {
    p.coeffs().iter().map(lambda_poly_to_strings).collect()
}

/// Inverse of [`poly_to_nested`]; the result is re-canonicalized, so
/// trailing zeros in the input are accepted.
pub fn poly_from_nested<S: AsRef<str>>(v: &[Vec<S>]) -> Result<XLambdaPoly, ParseRationalError> {
    let coeffs = v
        .iter()
        .map(|row| lambda_poly_from_strings(row))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(XLambdaPoly::from_coeffs(coeffs))
}

fn push_term(out: &mut String, c: &Rational, vars: &[(&str, usize)]) {
    let mut factors: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    let mag = c.abs();
    if factors.is_empty() || !mag.is_one() {
        factors.insert(0, mag.to_string());
    }
    let body = factors.join("*");
    match (out.is_empty(), c.is_negative()) {
        (true, false) => out.push_str(&body),
        (true, true) => {
            out.push('-');
            out.push_str(&body);
        }
        (false, false) => {
            out.push_str(" + ");
            out.push_str(&body);
        }
        (false, true) => {
            out.push_str(" - ");
            out.push_str(&body);
        }
    }
}

/// Monomial string with terms in decreasing x-degree, then decreasing
/// λ-degree, e.g. `x^2 - 2*x + 10/9*lambda^2 - 4/3*lambda + 13/18`.
pub fn render_monomials(p: &XLambdaPoly) -> String {
    let mut out = String::new();
    for (i, lp) in p.coeffs().iter().enumerate().rev() {
        for (j, c) in lp.coeffs().iter().enumerate().rev() {
            if !c.is_zero() {
                push_term(&mut out, c, &[("x", i), ("lambda", j)]);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_lambda_monomials(p: &LambdaPoly) -> String {
    render_monomials(&XLambdaPoly::constant(p.clone()))
}

/// Serde adapter storing an [`XLambdaPoly`] as nested `"p/q"` arrays.
pub mod nested {
    use super::*;

    pub fn serialize<S: Serializer>(p: &XLambdaPoly, s: S) -> Result<S::Ok, S::Error> {
        poly_to_nested(p).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<XLambdaPoly, D::Error> {
        let v: Vec<Vec<String>> = Vec::deserialize(d)?;
        poly_from_nested(&v).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter storing a [`LambdaPoly`] as a `"p/q"` array.
pub mod flat {
    use super::*;

    pub fn serialize<S: Serializer>(p: &LambdaPoly, s: S) -> Result<S::Ok, S::Error> {
        lambda_poly_to_strings(p).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<LambdaPoly, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        lambda_poly_from_strings(&v).map_err(serde::de::Error::custom)
    }
}
