//! Polylogarithm `Li_k(u) = Σ_{m≥1} u^m / m^k` and its degenerate
//! deformation `l_{k,λ}(u) = Σ_{m≥1} ∏_{j=1}^{m-1}(j - λ) u^m / ((m-1)! m^k)`,
//! applied to an inner series without constant term. Any integer `k` is
//! accepted.

use num_traits::Zero;

use crate::rational::{int, Rational};
use crate::scalar::{factorial, Coefficient, Scalar};
use crate::series::SeriesError;
use crate::xlambda::{lambda_scaled_pochhammer, lift, rat};
use crate::{TruncatedSeries, XLambdaPoly};

/// `1 / m^k` for any integer `k`.
pub fn inv_power(m: usize, k: i64) -> Rational {
    int(m as i64).pow_int(-k)
}

/// The series `Li_k(u)` in the variable `u`, through `u^order`.
pub fn polylog_series(k: i64, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |m| {
        if m == 0 {
            XLambdaPoly::zero()
        } else {
            rat(inv_power(m, k))
        }
    })
}

/// The series `l_{k,λ}(u)` in the variable `u`, through `u^order`.
pub fn deg_polylog_series(k: i64, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |m| {
        let Some(p) = lambda_scaled_pochhammer(m) else {
            return XLambdaPoly::zero();
        };
        // (-λ)^{m-1} (1)_{m,1/λ} = (-1)^{m-1} ∏ (λ - j)
        let sign = if m % 2 == 1 { 1 } else { -1 };
        let c = int(sign) * inv_power(m, k) / Rational::from_integer(factorial(m - 1));
        lift(p.scale(&c))
    })
}

pub fn polylog_compose(k: i64, inner: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    polylog_series(k, inner.order()).try_compose(inner)
}

pub fn deg_polylog_compose(k: i64, inner: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    deg_polylog_series(k, inner.order()).try_compose(inner)
}
