//! Falling factorials and the (degenerate) exponential and logarithm series.

use num_traits::{One, Zero};

use crate::rational::{int, Rational};
use crate::scalar::{Coefficient, Scalar};
use crate::xlambda::{lambda, lambda_scaled_pochhammer, lift, rat, unit_falling_deg, x};
use crate::{LambdaPoly, TruncatedSeries, XLambdaPoly};

/// `(x)_{n,λ} = x (x - λ) ... (x - (n-1)λ)`, with `(x)_{0,λ} = 1`.
pub fn falling_factorial_deg(n: usize) -> XLambdaPoly {
    (0..n).fold(XLambdaPoly::one(), |acc, j| {
        let factor = &x() - &lift(lambda().scale(&int(j as i64)));
        &acc * &factor
    })
}

/// Classical `(x)_n = x (x - 1) ... (x - n + 1)`.
pub fn falling_factorial(n: usize) -> XLambdaPoly {
    (0..n).fold(XLambdaPoly::one(), |acc, j| &acc * &(&x() - &rat(int(j as i64))))
}

/// `e_λ^x(c t)` (or `e_λ(c t)` when `symbolic_x` is false) through `t^order`.
pub fn deg_exp(symbolic_x: bool, scale: &Rational, order: usize) -> TruncatedSeries {
    let mut members = Vec::with_capacity(order + 1);
    if symbolic_x {
        let mut ff = XLambdaPoly::one();
        for j in 0..=order {
            members.push(ff.clone());
            ff = &ff * &(&x() - &lift(lambda().scale(&int(j as i64))));
        }
    } else {
        members.extend((0..=order).map(|n| lift(unit_falling_deg(n))));
    }
    TruncatedSeries::from_egf(order, |n| members[n].scale(&scale.pow_int(n as i64)))
}

/// `e^{x c t}` (or `e^{c t}`) through `t^order`.
pub fn exp_series(symbolic_x: bool, scale: &Rational, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_egf(order, |n| {
        let c = rat(scale.pow_int(n as i64));
        if symbolic_x {
            &c * &XLambdaPoly::monomial(LambdaPoly::one(), n)
        } else {
            c
        }
    })
}

/// `log_λ(1 + t) = Σ_{n≥1} ∏_{j=1}^{n-1}(λ - j) t^n / n!`.
pub fn deg_log(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_egf(order, |n| match lambda_scaled_pochhammer(n) {
        Some(p) => lift(p),
        None => XLambdaPoly::zero(),
    })
}

/// `log(1 + t)`.
pub fn log1p(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            XLambdaPoly::zero()
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            rat(Rational::new(sign.into(), (n as i64).into()))
        }
    })
}
