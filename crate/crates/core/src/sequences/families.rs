//! Bernoulli, Euler and poly-Bernoulli polynomial families, each read off the
//! egf coefficients of its generating function.

use crate::rational::int;
use crate::sequences::exp_log::{deg_exp, exp_series};
use crate::sequences::polylog::{deg_polylog_compose, polylog_compose};
use crate::{TruncatedSeries, XLambdaPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Bernoulli,
    Euler,
}

fn members(gf: TruncatedSeries, n_max: usize) -> Vec<XLambdaPoly> {
    let mut all = gf.egf_coeffs();
    all.truncate(n_max + 1);
    assert_eq!(all.len(), n_max + 1, "generating function truncated too early");
    all
}

/// `t/(e^t - 1) e^{xt}` or `2/(e^t + 1) e^{xt}` through `t^order`
/// (one order less for Bernoulli, which cancels a `t`).
pub fn classical_family_series(name: Family, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let e = exp_series(false, &int(1), order);
    let ext = exp_series(true, &int(1), order);
    let gf = match name {
        Family::Bernoulli => ext.shift_up(1).try_div(&(&e - &one)),
        Family::Euler => ext.scale(&int(2)).try_div(&(&e + &one)),
    };
    gf.expect("leading coefficient is a nonzero rational")
}

/// Carlitz's degenerate analogues with `e_λ` in place of `e`.
pub fn degenerate_family_series(name: Family, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let e = deg_exp(false, &int(1), order);
    let ext = deg_exp(true, &int(1), order);
    let gf = match name {
        Family::Bernoulli => ext.shift_up(1).try_div(&(&e - &one)),
        Family::Euler => ext.scale(&int(2)).try_div(&(&e + &one)),
    };
    gf.expect("leading coefficient is a nonzero rational")
}

pub fn classical_family_table(name: Family, n_max: usize) -> Vec<XLambdaPoly> {
    members(classical_family_series(name, n_max + 1), n_max)
}

pub fn degenerate_family_table(name: Family, n_max: usize) -> Vec<XLambdaPoly> {
    members(degenerate_family_series(name, n_max + 1), n_max)
}

/// `B_n(x)` or `E_n(x)`.
pub fn classical_family(name: Family, n: usize) -> XLambdaPoly {
    classical_family_table(name, n).pop().expect("nonempty")
}

/// `B_{n,λ}(x)` or `E_{n,λ}(x)`.
pub fn degenerate_family(name: Family, n: usize) -> XLambdaPoly {
    degenerate_family_table(name, n).pop().expect("nonempty")
}

/// Which poly-Bernoulli generating function to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyBernoulliForm {
    /// `Li_k(1 - e^{-t}) / (e^t - 1) · e^{xt}`
    Kaneko,
    /// `l_{k,λ}(1 - e_λ(-t)) / (1 - e_λ(-t)) · e_λ^x(-t)`
    Degenerate,
    /// The degenerate form with every ingredient at λ = 0:
    /// `Li_k(1 - e^{-t}) / (1 - e^{-t}) · e^{-xt}`
    DegenerateLimit,
}

pub fn poly_bernoulli_series(form: PolyBernoulliForm, k: i64, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let gf = match form {
        PolyBernoulliForm::Kaneko => {
            let u = &one - &exp_series(false, &int(-1), order);
            let num = polylog_compose(k, &u).expect("u(0) = 0");
            let den = &exp_series(false, &int(1), order) - &one;
            num.try_div(&den).map(|q| &q * &exp_series(true, &int(1), order))
        }
        PolyBernoulliForm::Degenerate => {
            let u = &one - &deg_exp(false, &int(-1), order);
            let num = deg_polylog_compose(k, &u).expect("u(0) = 0");
            num.try_div(&u).map(|q| &q * &deg_exp(true, &int(-1), order))
        }
        PolyBernoulliForm::DegenerateLimit => {
            let u = &one - &exp_series(false, &int(-1), order);
            let num = polylog_compose(k, &u).expect("u(0) = 0");
            num.try_div(&u).map(|q| &q * &exp_series(true, &int(-1), order))
        }
    };
    gf.expect("divisor has unit leading coefficient")
}

pub fn poly_bernoulli_table(form: PolyBernoulliForm, k: i64, n_max: usize) -> Vec<XLambdaPoly> {
    members(poly_bernoulli_series(form, k, n_max + 1), n_max)
}

/// `β_n^{(k)}(x)` (Kaneko form) or `β_{n,λ}^{(k)}(x)` when `degenerate`.
pub fn poly_bernoulli(n: usize, k: i64, degenerate: bool) -> XLambdaPoly {
    let form = if degenerate {
        PolyBernoulliForm::Degenerate
    } else {
        PolyBernoulliForm::Kaneko
    };
    poly_bernoulli_table(form, k, n).pop().expect("nonempty")
}
