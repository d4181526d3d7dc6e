//! Eagerly built, read-only tables shared by the closed forms and the
//! identity checks.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{deg_poly_euler_series, one_minus_deg_exp_neg2t, poly_euler_series, polylog_numerator};
use crate::error::{Error, Result};
use crate::rational::{frac, int};
use crate::sequences::exp_log::{deg_exp, deg_log, falling_factorial, falling_factorial_deg};
use crate::sequences::families::{
    classical_family_table, degenerate_family_table, poly_bernoulli_table, Family, PolyBernoulliForm,
};
use crate::sequences::polylog::deg_polylog_series;
use crate::sequences::stirling::{StirlingKind, StirlingTable};
use crate::xlambda::{as_lambda_poly, constant_value};
use crate::{LambdaPoly, Rational, TruncatedSeries, XLambdaPoly};

/// Per-`k` family members and series coefficients (index = n).
#[derive(Debug, Clone)]
pub struct KTables {
    pub k: i64,
    /// `E_n^{(k)}(x)`
    pub poly_euler: Vec<XLambdaPoly>,
    /// `E_{n,λ}^{(k)}(x)`
    pub deg_poly_euler: Vec<XLambdaPoly>,
    /// Kaneko-form `β_n^{(k)}(x)`
    pub poly_bernoulli: Vec<XLambdaPoly>,
    /// `β_{n,λ}^{(k)}(x)`
    pub deg_poly_bernoulli: Vec<XLambdaPoly>,
    /// `β_{n,λ}^{(k)}(x)`'s generating function rebuilt from classical parts
    pub deg_poly_bernoulli_limit: Vec<XLambdaPoly>,
    /// egf coefficients of `Li_k(1 - e^{-2t})`
    pub polylog_coeffs: Vec<Rational>,
    /// egf coefficients of `l_{k,λ}(1 - e_λ(-2t))`
    pub deg_polylog_coeffs: Vec<LambdaPoly>,
    pub substitution: SubstitutionSeries,
}

/// egf coefficients of the four series behind the two printed double-sum
/// identities for the degenerate numbers. With `u = 1 - e_λ(-2t)`,
/// `s = -½ log_λ(1 + t)` and `G(z) = Σ E_{m,λ}^{(k)} z^m / m!`:
#[derive(Debug, Clone)]
pub struct SubstitutionSeries {
    /// `u G(u)`
    pub u_times_g: Vec<LambdaPoly>,
    /// `l_{k,λ}(t) / (e_λ(u) + 1)`
    pub polylog_over_euler_u: Vec<LambdaPoly>,
    /// `s G(s)`
    pub s_times_g: Vec<LambdaPoly>,
    /// `l_{k,λ}(-t) / (e_λ(s) + 1)`
    pub polylog_over_euler_s: Vec<LambdaPoly>,
}

/// Everything the identity registry reads, built once for a truncation
/// order and a set of `k` values.
#[derive(Debug, Clone)]
pub struct Tables {
    order: usize,
    pub s1: StirlingTable,
    pub s2: StirlingTable,
    pub s1_deg: StirlingTable,
    pub s2_deg: StirlingTable,
    pub euler: Vec<XLambdaPoly>,
    pub bernoulli: Vec<XLambdaPoly>,
    pub deg_euler: Vec<XLambdaPoly>,
    pub deg_bernoulli: Vec<XLambdaPoly>,
    /// `(x)_m`
    pub falling: Vec<XLambdaPoly>,
    /// `(x)_{m,λ}`
    pub falling_deg: Vec<XLambdaPoly>,
    per_k: BTreeMap<i64, KTables>,
}

fn x_free(v: &[XLambdaPoly]) -> Vec<LambdaPoly> {
    v.iter().map(|p| as_lambda_poly(p).expect("x-free series")).collect()
}

fn egf_upto(s: &TruncatedSeries, n_max: usize) -> Vec<LambdaPoly> {
    let mut c = x_free(&s.egf_coeffs());
    c.truncate(n_max + 1);
    c
}

impl KTables {
    fn build(k: i64, order: usize) -> Self {
        let members = |s: TruncatedSeries| {
            let mut m = s.egf_coeffs();
            m.truncate(order);
            m
        };
        let poly_euler = members(poly_euler_series(k, order));
        let deg_poly_euler = members(deg_poly_euler_series(k, order));
        let n_max = order - 1;
        let polylog_coeffs = polylog_numerator(k, order)
            .egf_coeffs()
            .iter()
            .map(|c| constant_value(c).expect("rational"))
            .collect();
        let deg_polylog_coeffs = x_free(&super::deg_polylog_numerator(k, order).egf_coeffs());
        let substitution = SubstitutionSeries::build(k, order, &deg_poly_euler);
        KTables {
            k,
            poly_euler,
            deg_poly_euler,
            poly_bernoulli: poly_bernoulli_table(PolyBernoulliForm::Kaneko, k, n_max),
            deg_poly_bernoulli: poly_bernoulli_table(PolyBernoulliForm::Degenerate, k, n_max),
            deg_poly_bernoulli_limit: poly_bernoulli_table(PolyBernoulliForm::DegenerateLimit, k, n_max),
            polylog_coeffs,
            deg_polylog_coeffs,
            substitution,
        }
    }
}

impl SubstitutionSeries {
    fn build(k: i64, order: usize, deg_poly_euler: &[XLambdaPoly]) -> Self {
        let n_max = order - 1;
        let numbers: Vec<XLambdaPoly> = deg_poly_euler
            .iter()
            .map(|p| crate::xlambda::specialize(p, None, Some(&int(0))))
            .collect();
        let g = TruncatedSeries::from_egf(n_max, |m| numbers[m].clone());
        let one = TruncatedSeries::one(order);
        let e_lambda = deg_exp(false, &int(1), order);

        let u = one_minus_deg_exp_neg2t(order);
        let u_times_g = &u * &g.try_compose(&u).expect("u(0) = 0");
        let euler_den_u = &e_lambda.try_compose(&u).expect("u(0) = 0") + &one;
        let polylog_over_euler_u = deg_polylog_series(k, order)
            .try_div(&euler_den_u)
            .expect("constant term 2");

        let s = deg_log(order).scale(&frac(-1, 2));
        let s_times_g = &s * &g.try_compose(&s).expect("s(0) = 0");
        let euler_den_s = &e_lambda.try_compose(&s).expect("s(0) = 0") + &one;
        let polylog_over_euler_s = deg_polylog_series(k, order)
            .scale_t(&int(-1))
            .try_div(&euler_den_s)
            .expect("constant term 2");

        SubstitutionSeries {
            u_times_g: egf_upto(&u_times_g, n_max),
            polylog_over_euler_u: egf_upto(&polylog_over_euler_u, n_max),
            s_times_g: egf_upto(&s_times_g, n_max),
            polylog_over_euler_s: egf_upto(&polylog_over_euler_s, n_max),
        }
    }
}

impl Tables {
    /// Build all tables for truncation order `order` (members are available
    /// for `n ≤ order - 2`) and every `k` in `k_set` plus `k = 1`.
    pub fn build(order: usize, k_set: &[i64]) -> Self {
        assert!(order >= 2, "truncation order must be at least 2");
        let mut ks: Vec<i64> = k_set.to_vec();
        ks.push(1);
        ks.sort_unstable();
        ks.dedup();

        let per_k = ks
            .par_iter()
            .map(|&k| (k, KTables::build(k, order)))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();

        let n_max = order - 1;
        let stirling = |kind, deg| StirlingTable::build(kind, deg, order);
        Tables {
            order,
            s1: stirling(StirlingKind::First, false),
            s2: stirling(StirlingKind::Second, false),
            s1_deg: stirling(StirlingKind::First, true),
            s2_deg: stirling(StirlingKind::Second, true),
            euler: classical_family_table(Family::Euler, n_max),
            bernoulli: classical_family_table(Family::Bernoulli, n_max),
            deg_euler: degenerate_family_table(Family::Euler, n_max),
            deg_bernoulli: degenerate_family_table(Family::Bernoulli, n_max),
            falling: (0..=order).map(falling_factorial).collect(),
            falling_deg: (0..=order).map(falling_factorial_deg).collect(),
            per_k,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Largest `n` any identity may be checked at.
    pub fn n_cap(&self) -> usize {
        self.order - 2
    }

    pub fn k(&self, k: i64) -> Result<&KTables> {
        self.per_k.get(&k).ok_or(Error::KNotTabulated(k))
    }

    pub fn k_values(&self) -> impl Iterator<Item = i64> + '_ {
        self.per_k.keys().copied()
    }

    /// Rational Stirling number from a classical table.
    pub fn s2_value(&self, n: usize, k: usize) -> Result<Rational> {
        Ok(self.s2.get(n, k)?.coeff(0))
    }

    pub fn s1_value(&self, n: usize, k: usize) -> Result<Rational> {
        Ok(self.s1.get(n, k)?.coeff(0))
    }

    pub fn check_n(&self, n_max: usize) -> Result<()> {
        if n_max > self.n_cap() {
            return Err(Error::OrderExceeded {
                n_max,
                order: self.order,
            });
        }
        Ok(())
    }
}

impl Default for Tables {
    fn default() -> Self {
        Tables::build(crate::DEFAULT_ORDER, &[-2, -1, 0, 1, 2, 3])
    }
}
