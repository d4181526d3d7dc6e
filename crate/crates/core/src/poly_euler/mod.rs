//! The poly-Euler family
//!
//! ```text
//! Li_k(1 - e^{-2t}) / (t (e^t + 1)) · e^{xt} = Σ E_n^{(k)}(x) t^n / n!
//! ```
//!
//! and its degenerate counterpart with `l_{k,λ}`, `e_λ` and `e_λ^x`. Family
//! members are always read off the generating functions; the closed forms in
//! [`closed_forms`] are only ever compared against them.

pub mod closed_forms;
mod tables;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::scalar::{factorial, Scalar};
use crate::sequences::exp_log::{deg_exp, exp_series};
use crate::sequences::polylog::{deg_polylog_compose, inv_power, polylog_compose};
use crate::sequences::stirling::{StirlingKind, StirlingTable};
use crate::{TruncatedSeries, XLambdaPoly};

pub use closed_forms::{closed_form_rhs, ClosedForm};
pub use tables::{KTables, Tables};

/// `1 - e^{-2t}`
pub fn one_minus_exp_neg2t(order: usize) -> TruncatedSeries {
    &TruncatedSeries::one(order) - &exp_series(false, &int(-2), order)
}

/// `1 - e_λ(-2t)`
pub fn one_minus_deg_exp_neg2t(order: usize) -> TruncatedSeries {
    &TruncatedSeries::one(order) - &deg_exp(false, &int(-2), order)
}

/// `Li_k(1 - e^{-2t})` through `t^order`.
pub fn polylog_numerator(k: i64, order: usize) -> TruncatedSeries {
    polylog_compose(k, &one_minus_exp_neg2t(order)).expect("inner series has no constant term")
}

/// `l_{k,λ}(1 - e_λ(-2t))` through `t^order`.
pub fn deg_polylog_numerator(k: i64, order: usize) -> TruncatedSeries {
    deg_polylog_compose(k, &one_minus_deg_exp_neg2t(order)).expect("inner series has no constant term")
}

/// Generating function of `E_n^{(k)}(x)`; valid through `t^{order-1}`.
pub fn poly_euler_series(k: i64, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let den = (&exp_series(false, &int(1), order) + &one).shift_up(1);
    polylog_numerator(k, order)
        .try_div(&den)
        .map(|q| &q * &exp_series(true, &int(1), order))
        .expect("t(e^t + 1) has leading coefficient 2")
}

/// Generating function of `E_{n,λ}^{(k)}(x)`; valid through `t^{order-1}`.
pub fn deg_poly_euler_series(k: i64, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let den = (&deg_exp(false, &int(1), order) + &one).shift_up(1);
    deg_polylog_numerator(k, order)
        .try_div(&den)
        .map(|q| &q * &deg_exp(true, &int(1), order))
        .expect("t(e_λ(t) + 1) has leading coefficient 2")
}

/// `E_n^{(k)}(x)`; at `x = 0` this is the poly-Euler number.
pub fn poly_euler(n: usize, k: i64) -> XLambdaPoly {
    poly_euler_series(k, n + 1).egf_coeff(n).expect("order n + 1 covers n")
}

/// `E_{n,λ}^{(k)}(x)`.
pub fn deg_poly_euler(n: usize, k: i64) -> XLambdaPoly {
    deg_poly_euler_series(k, n + 1)
        .egf_coeff(n)
        .expect("order n + 1 covers n")
}

/// Closed form `Σ_{m=1}^{n} 2^n (-1)^{n+m} m! / m^k · S_2(n, m)` of the n-th egf
/// coefficient of `Li_k(1 - e^{-2t})`, using a prebuilt classical table.
pub fn lemma21_coeff_with(s2: &StirlingTable, n: usize, k: i64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            what: "polylog closed form (needs n >= 1)",
            n,
            k: 0,
        });
    }
    let two_n = int(2).pow_int(n as i64);
    let mut acc = Rational::from_integer(0.into());
    for m in 1..=n {
        let s = s2.get(n, m)?.coeff(0);
        let sign = if (n + m).is_multiple_of(2) { 1 } else { -1 };
        acc += &two_n * int(sign) * Rational::from_integer(factorial(m)) * inv_power(m, k) * s;
    }
    Ok(acc)
}

pub fn lemma21_coeff(n: usize, k: i64) -> Result<Rational> {
    lemma21_coeff_with(&StirlingTable::build(StirlingKind::Second, false, n), n, k)
}
