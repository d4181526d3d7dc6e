//! Identity registry and the exact LHS-vs-RHS checker.
//!
//! Every check compares two canonical elements of Q[λ][x] by structural
//! equality, in increasing `n` and then over the `k` grid, and stops at the
//! first mismatch.

mod registry;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly_euler::Tables;
use crate::XLambdaPoly;

pub use registry::register_builtin;

/// Signature of an identity side.
pub type Side = fn(&Tables, usize, i64) -> Result<XLambdaPoly>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariantClass {
    /// The statement exactly as printed.
    Printed,
    /// A single-site alternative reading of a printed statement.
    Variant,
    /// k = 1 or λ = 0 reductions.
    Reduction,
    /// Series-level checks that back a pair of printed sums.
    Oracle,
}

impl VariantClass {
    pub fn name(self) -> &'static str {
        match self {
            VariantClass::Printed => "printed",
            VariantClass::Variant => "variant",
            VariantClass::Reduction => "reduction",
            VariantClass::Oracle => "oracle",
        }
    }
}

/// Which `n_max` of the grid applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    Classical,
    Degenerate,
}

/// How the `k` grid is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KMode {
    /// Every `k` of the configured set.
    Each,
    /// A single fixed `k`, whatever the configured set.
    Only(i64),
    /// No `k` dependence; checked once per `n`.
    Free,
}

/// Membership in the set whose failure makes `verify` exit nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MustPass {
    No,
    Yes,
    /// Only the checks at `n ≤` this bound count.
    UpTo(usize),
}

#[derive(Debug, Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub variant: &'static str,
    pub class: VariantClass,
    pub description: &'static str,
    pub domain: Domain,
    pub n_min: usize,
    pub k_mode: KMode,
    pub must_pass: MustPass,
    pub lhs: Side,
    pub rhs: Side,
}

impl IdentitySpec {
    /// `id` or `id/variant`.
    pub fn key(&self) -> String {
        format!("{}/{}", self.id, self.variant)
    }

    fn k_values(&self, k_set: &[i64]) -> Vec<i64> {
        match self.k_mode {
            KMode::Each => k_set.to_vec(),
            KMode::Only(k) => vec![k],
            KMode::Free => vec![],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckedRange {
    pub n_min: usize,
    pub n_max: usize,
    pub k_set: Vec<i64>,
    /// True when `n_max < n_min`, i.e. nothing was compared.
    pub empty: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub n: usize,
    pub k: Option<i64>,
    /// `LHS - RHS`, never zero.
    #[serde(with = "crate::repr::nested")]
    pub difference: XLambdaPoly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub variant: String,
    pub class: VariantClass,
    pub must_pass: bool,
    pub verdict: Verdict,
    pub checked_range: CheckedRange,
    pub first_failure: Option<Failure>,
    /// Wall time of the check; kept out of the serialized report so reports
    /// are byte-stable.
    #[serde(skip)]
    pub runtime_ms: u64,
    #[serde(skip)]
    must_pass_bound: Option<usize>,
}

impl IdentityReport {
    /// `None` when the report is outside the must-pass set.
    pub fn must_pass_ok(&self) -> Option<bool> {
        if !self.must_pass {
            return None;
        }
        Some(match (&self.first_failure, self.must_pass_bound) {
            (None, _) => true,
            (Some(f), Some(bound)) => f.n > bound,
            (Some(_), None) => false,
        })
    }
}

/// Compare both sides of `spec` for `n_min ≤ n ≤ n_max` and every applicable
/// `k`, stopping at the first mismatch.
pub fn check_identity(tables: &Tables, spec: &IdentitySpec, n_max: usize, k_set: &[i64]) -> Result<IdentityReport> {
    tables.check_n(n_max)?;
    let start = Instant::now();
    let ks = spec.k_values(k_set);
    for &k in &ks {
        tables.k(k)?;
    }
    let mut first_failure = None;
    'outer: for n in spec.n_min..=n_max {
        let grid: Vec<Option<i64>> = if ks.is_empty() {
            vec![None]
        } else {
            ks.iter().copied().map(Some).collect()
        };
        for k in grid {
            let kk = k.unwrap_or(1);
            let lhs = (spec.lhs)(tables, n, kk)?;
            let rhs = (spec.rhs)(tables, n, kk)?;
            if lhs != rhs {
                first_failure = Some(Failure {
                    n,
                    k,
                    difference: &lhs - &rhs,
                });
                break 'outer;
            }
        }
    }
    let (must_pass, must_pass_bound) = match spec.must_pass {
        MustPass::No => (false, None),
        MustPass::Yes => (true, None),
        MustPass::UpTo(b) => (true, Some(b)),
    };
    Ok(IdentityReport {
        id: spec.id.to_string(),
        variant: spec.variant.to_string(),
        class: spec.class,
        must_pass,
        verdict: if first_failure.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        checked_range: CheckedRange {
            n_min: spec.n_min,
            n_max,
            k_set: ks,
            empty: n_max < spec.n_min,
        },
        first_failure,
        runtime_ms: start.elapsed().as_millis() as u64,
        must_pass_bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariantFilter {
    #[default]
    All,
    /// Drop the [`VariantClass::Variant`] alternatives.
    PrintedOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub n_max_classical: usize,
    pub n_max_degenerate: usize,
    pub k_set: Vec<i64>,
    pub variants: VariantFilter,
    /// Restrict to these ids (`id` or `id/variant`); `None` runs everything.
    pub ids: Option<Vec<String>>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max_classical: 12,
            n_max_degenerate: 10,
            k_set: vec![-2, -1, 0, 1, 2, 3],
            variants: VariantFilter::All,
            ids: None,
        }
    }
}

impl SuiteConfig {
    /// Same `n_max` for both domains.
    pub fn with_n_max(n_max: usize, k_set: &[i64], variants: VariantFilter) -> Self {
        SuiteConfig {
            n_max_classical: n_max,
            n_max_degenerate: n_max,
            k_set: k_set.to_vec(),
            variants,
            ids: None,
        }
    }

    pub fn max_n(&self) -> usize {
        self.n_max_classical.max(self.n_max_degenerate)
    }

    /// Smallest truncation order that covers the grid (at least the default).
    pub fn required_order(&self) -> usize {
        (self.max_n() + 2).max(crate::DEFAULT_ORDER)
    }

    pub fn build_tables(&self) -> Tables {
        Tables::build(self.required_order(), &self.k_set)
    }

    /// The registry entries this configuration selects, in registry order.
    pub fn select(&self) -> Result<Vec<IdentitySpec>> {
        let all = register_builtin();
        let keep_class = |s: &IdentitySpec| self.variants == VariantFilter::All || s.class != VariantClass::Variant;
        let Some(ids) = &self.ids else {
            return Ok(all.into_iter().filter(keep_class).collect());
        };
        for want in ids {
            if !all.iter().any(|s| s.id == want || s.key() == *want) {
                return Err(Error::UnknownIdentity(want.clone()));
            }
        }
        Ok(all
            .into_iter()
            .filter(|s| ids.iter().any(|w| s.id == w || s.key() == *w))
            .filter(keep_class)
            .collect())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub by_class: BTreeMap<String, ClassCount>,
    pub must_pass_ok: bool,
    pub must_pass_failures: Vec<String>,
    /// Failing reports outside the must-pass set.
    pub discrepancy_count: usize,
    /// Distinct lemma/theorem/corollary ids present.
    pub numbered_ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub reports: Vec<IdentityReport>,
    pub summary: Summary,
}

impl Summary {
    fn of(reports: &[IdentityReport]) -> Self {
        let mut by_class: BTreeMap<String, ClassCount> = BTreeMap::new();
        let mut must_pass_failures = Vec::new();
        let mut discrepancy_count = 0;
        let mut numbered_ids: Vec<String> = Vec::new();
        for r in reports {
            let c = by_class.entry(r.class.name().to_string()).or_default();
            match r.verdict {
                Verdict::Pass => c.pass += 1,
                Verdict::Fail => c.fail += 1,
            }
            match r.must_pass_ok() {
                Some(false) => must_pass_failures.push(format!("{}/{}", r.id, r.variant)),
                None if r.verdict == Verdict::Fail => discrepancy_count += 1,
                _ => {}
            }
            let numbered = r.id.starts_with(['L', 'T', 'C']) && r.id[1..].starts_with(|c: char| c.is_ascii_digit());
            if numbered && !numbered_ids.contains(&r.id) {
                numbered_ids.push(r.id.clone());
            }
        }
        let pass = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
        Summary {
            total: reports.len(),
            pass,
            fail: reports.len() - pass,
            by_class,
            must_pass_ok: must_pass_failures.is_empty(),
            must_pass_failures,
            discrepancy_count,
            numbered_ids,
        }
    }
}

/// Run every selected identity. Reports come back sorted by id, variants in
/// registration order.
pub fn run_suite(tables: &Tables, config: &SuiteConfig) -> Result<SuiteResult> {
    let specs = config.select()?;
    let mut reports = specs
        .par_iter()
        .map(|s| {
            let n_max = match s.domain {
                Domain::Classical => config.n_max_classical,
                Domain::Degenerate => config.n_max_degenerate,
            };
            check_identity(tables, s, n_max, &config.k_set)
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let summary = Summary::of(&reports);
    Ok(SuiteResult { reports, summary })
}
