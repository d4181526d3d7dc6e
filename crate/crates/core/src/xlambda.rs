//! Helpers for the concrete tower Q ⊂ Q[λ] ⊂ Q[λ][x].

use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::{LambdaPoly, TruncatedSeries, XLambdaPoly};

/// λ as an element of Q[λ].
pub fn lambda() -> LambdaPoly {
    LambdaPoly::var()
}

/// x as an element of Q[λ][x].
pub fn x() -> XLambdaPoly {
    XLambdaPoly::var()
}

pub fn rat(r: Rational) -> XLambdaPoly {
    XLambdaPoly::constant(LambdaPoly::constant(r))
}

/// Embed a λ-polynomial as an x-degree-0 element.
pub fn lift(p: LambdaPoly) -> XLambdaPoly {
    XLambdaPoly::constant(p)
}

/// The x-free part of an element whose x-degree is at most zero.
pub fn as_lambda_poly(p: &XLambdaPoly) -> Option<LambdaPoly> {
    match p.degree() {
        None => Some(LambdaPoly::zero()),
        Some(0) => Some(p.coeff(0)),
        Some(_) => None,
    }
}

/// Substitute rational values for λ and/or x; `None` leaves the symbol alone.
/// When both are given the result is a constant (see [`constant_value`]).
pub fn specialize(p: &XLambdaPoly, lambda_value: Option<&Rational>, x_value: Option<&Rational>) -> XLambdaPoly {
    let p = match lambda_value {
        Some(l) => p.map_coeffs(|c| LambdaPoly::constant(c.eval(l))),
        None => p.clone(),
    };
    match x_value {
        Some(v) => XLambdaPoly::constant(p.eval(&LambdaPoly::constant(v.clone()))),
        None => p,
    }
}

/// Specialize at λ = 0.
pub fn at_lambda_zero(p: &XLambdaPoly) -> XLambdaPoly {
    specialize(p, Some(&Rational::zero()), None)
}

/// The value of a constant polynomial.
pub fn constant_value(p: &XLambdaPoly) -> Option<Rational> {
    as_lambda_poly(p).and_then(|l| match l.degree() {
        None => Some(Rational::zero()),
        Some(0) => Some(l.coeff(0)),
        Some(_) => None,
    })
}

/// Substitute `x -> a x + b` with rational `a`, `b`.
pub fn substitute_affine(p: &XLambdaPoly, a: &Rational, b: &Rational) -> XLambdaPoly {
    let inner = XLambdaPoly::from_coeffs(vec![LambdaPoly::constant(b.clone()), LambdaPoly::constant(a.clone())]);
    p.compose(&inner)
}

/// Specialize every coefficient of a series at λ = 0.
pub fn series_at_lambda_zero(s: &TruncatedSeries) -> TruncatedSeries {
    s.map(at_lambda_zero)
}

/// `∏_{j=1}^{m-1} (λ - j)`, the polynomial form of `λ^{m-1} (1)_{m,1/λ}`
/// for `m ≥ 1`. There is no polynomial form at `m = 0` (it would be `1/λ`).
pub fn lambda_scaled_pochhammer(m: usize) -> Option<LambdaPoly> {
    if m == 0 {
        return None;
    }
    Some((1..m).fold(LambdaPoly::one(), |acc, j| {
        &acc * &LambdaPoly::from_coeffs(vec![Rational::from_integer((-(j as i64)).into()), Rational::one()])
    }))
}

/// `(1)_{m,λ} = ∏_{j=0}^{m-1} (1 - jλ)`.
pub fn unit_falling_deg(m: usize) -> LambdaPoly {
    (0..m).fold(LambdaPoly::one(), |acc, j| {
        &acc * &LambdaPoly::from_coeffs(vec![Rational::one(), Rational::from_integer((-(j as i64)).into())])
    })
}
