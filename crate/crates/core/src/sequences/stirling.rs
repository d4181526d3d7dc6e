//! Stirling numbers of both kinds, classical and degenerate, read off as
//! egf coefficients of `(1/k!) f(t)^k` with
//!
//! | kind   | classical      | degenerate          |
//! |--------|----------------|---------------------|
//! | first  | `log(1 + t)`   | `log_λ(1 + t)`      |
//! | second | `e^t - 1`      | `e_λ(t) - 1`        |
//!
//! First-kind numbers are signed: `(x)_n = Σ S_1(n, l) x^l`.

use num_traits::Zero;
use rayon::prelude::*;

use super::exp_log::{deg_exp, deg_log, exp_series, log1p};
use crate::error::{Error, Result};
use crate::rational::int;
use crate::scalar::factorial;
use crate::xlambda::as_lambda_poly;
use crate::{LambdaPoly, Rational, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    First,
    Second,
}

/// Triangular table `entries[n][k]`, `0 ≤ k ≤ n ≤ n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct StirlingTable {
    kind: StirlingKind,
    degenerate: bool,
    entries: Vec<Vec<LambdaPoly>>,
}

impl StirlingTable {
    pub fn build(kind: StirlingKind, degenerate: bool, n_max: usize) -> Self {
        let base: TruncatedSeries = match (kind, degenerate) {
            (StirlingKind::First, false) => log1p(n_max),
            (StirlingKind::First, true) => deg_log(n_max),
            (StirlingKind::Second, false) => &exp_series(false, &int(1), n_max) - &TruncatedSeries::one(n_max),
            (StirlingKind::Second, true) => &deg_exp(false, &int(1), n_max) - &TruncatedSeries::one(n_max),
        };
        // column k is the egf of base^k / k!
        let columns: Vec<Vec<LambdaPoly>> = (0..=n_max)
            .into_par_iter()
            .map(|k| {
                let inv_kfact = Rational::from_integer(factorial(k)).recip();
                base.pow(k as u32)
                    .scale(&inv_kfact)
                    .egf_coeffs()
                    .iter()
                    .map(|c| as_lambda_poly(c).expect("x-free"))
                    .collect()
            })
            .collect();
        let entries = (0..=n_max)
            .map(|n| (0..=n).map(|k| columns[k][n].clone()).collect())
            .collect();
        StirlingTable {
            kind,
            degenerate,
            entries,
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn n_max(&self) -> usize {
        self.entries.len() - 1
    }

    /// Entry `(n, k)`; zero for `k > n`, an error past the table.
    pub fn get(&self, n: usize, k: usize) -> Result<LambdaPoly> {
        let row = self.entries.get(n).ok_or(Error::IndexOutOfRange {
            what: "Stirling table",
            n,
            k,
        })?;
        Ok(row.get(k).cloned().unwrap_or_else(LambdaPoly::zero))
    }

    pub fn row(&self, n: usize) -> Option<&[LambdaPoly]> {
        self.entries.get(n).map(Vec::as_slice)
    }
}

/// A single Stirling number; requires `k ≤ n`.
pub fn stirling(kind: StirlingKind, degenerate: bool, n: usize, k: usize) -> Result<LambdaPoly> {
    if k > n {
        return Err(Error::IndexOutOfRange {
            what: "Stirling number",
            n,
            k,
        });
    }
    StirlingTable::build(kind, degenerate, n).get(n, k)
}
