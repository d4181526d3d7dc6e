//! The three subcommands and their output documents.

use std::io::Write;
use std::path::PathBuf;

use polyeuler_core::identity::{IdentityReport, Summary};
use polyeuler_core::poly_euler::{deg_poly_euler_series, poly_euler_series};
use polyeuler_core::repr::{render_lambda_monomials, render_monomials};
use polyeuler_core::sequences::families::{
    classical_family_series, degenerate_family_series, poly_bernoulli_series, Family as Seq, PolyBernoulliForm,
};
use polyeuler_core::sequences::stirling::{StirlingKind, StirlingTable};
use polyeuler_core::xlambda::specialize;
use polyeuler_core::{run_suite, LambdaPoly, SuiteConfig, Tables, TruncatedSeries, XLambdaPoly};
use serde::{Deserialize, Serialize};

use crate::config::{CliError, Family, Format, RunConfig, Value};

const DEFAULT_N_MAX: usize = 8;

/// Run metadata. `generated_at` is the only field that changes between
/// otherwise identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub generated_at: String,
}

impl Header {
    fn new(command: &str) -> Self {
        Header {
            tool: "polyeuler".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            generated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub k: Option<i64>,
    /// `[x-degree][λ-degree]` of `"p/q"`.
    #[serde(with = "polyeuler_core::repr::nested")]
    pub poly: XLambdaPoly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub header: Header,
    pub family: String,
    pub lambda: String,
    pub x: String,
    pub order: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StirlingRow {
    pub n: usize,
    pub l: usize,
    /// Coefficients in λ, lowest first.
    #[serde(with = "polyeuler_core::repr::flat")]
    pub value: LambdaPoly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StirlingDocument {
    pub header: Header,
    pub family: String,
    pub lambda: String,
    pub rows: Vec<StirlingRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyGrid {
    pub n_max_classical: usize,
    pub n_max_degenerate: usize,
    pub k_set: Vec<i64>,
    pub variants: String,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub header: Header,
    pub grid: VerifyGrid,
    pub summary: Summary,
    pub reports: Vec<IdentityReport>,
}

fn emit(dest: Option<PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    match dest {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)
                    .map_err(|e| CliError::Config(format!("invalid out: cannot create {}: {e}", dir.display())))?;
            }
            std::fs::write(&path, bytes)
                .map_err(|e| CliError::Config(format!("invalid out: cannot write {}: {e}", path.display())))
        }
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::Config(format!("cannot write to stdout: {e}"))),
    }
}

fn json_bytes<T: Serialize>(doc: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s.into_bytes()
}

fn csv_bytes(header: &[&str], rows: Vec<Vec<String>>) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

fn gf(family: Family, k: i64, order: usize) -> TruncatedSeries {
    match family {
        Family::PolyEuler => poly_euler_series(k, order),
        Family::DegPolyEuler => deg_poly_euler_series(k, order),
        Family::PolyBernoulli => poly_bernoulli_series(PolyBernoulliForm::Kaneko, k, order),
        Family::DegPolyBernoulli => poly_bernoulli_series(PolyBernoulliForm::Degenerate, k, order),
        Family::Euler => classical_family_series(Seq::Euler, order),
        Family::DegEuler => degenerate_family_series(Seq::Euler, order),
        Family::Bernoulli => classical_family_series(Seq::Bernoulli, order),
        Family::DegBernoulli => degenerate_family_series(Seq::Bernoulli, order),
        _ => unreachable!("Stirling families are handled by export-stirling"),
    }
}

/// Members `0..=n_max` of `family` for each `k`, with λ and x specialized
/// as configured.
pub fn table_rows(family: Family, n_max: usize, ks: &[i64], order: usize, lambda: &Value, x: &Value) -> Vec<TableRow> {
    let ks: Vec<Option<i64>> = if family.takes_k() {
        ks.iter().copied().map(Some).collect()
    } else {
        vec![None]
    };
    let mut rows = Vec::new();
    for k in ks {
        let members = gf(family, k.unwrap_or(1), order).egf_coeffs();
        for (n, p) in members.into_iter().take(n_max + 1).enumerate() {
            let poly = specialize(&p, lambda.as_rational(), x.as_rational());
            rows.push(TableRow { n, k, poly });
        }
    }
    rows
}

pub fn cmd_table(cfg: &RunConfig) -> Result<i32, CliError> {
    if cfg.family.is_stirling() {
        return Err(CliError::Config(format!(
            "invalid family: {} is tabulated by export-stirling",
            cfg.family.name()
        )));
    }
    let n_max = cfg.n_max.unwrap_or(DEFAULT_N_MAX);
    let order = cfg.order_for(n_max)?;
    let ks = cfg.k.clone().unwrap_or_else(|| vec![1]);
    let rows = table_rows(cfg.family, n_max, &ks, order, &cfg.lambda, &cfg.x);
    let bytes = match cfg.format {
        Format::Json => json_bytes(&TableDocument {
            header: Header::new("table"),
            family: cfg.family.name().into(),
            lambda: cfg.lambda.to_string(),
            x: cfg.x.to_string(),
            order,
            rows,
        }),
        Format::Csv => csv_bytes(
            &["n", "k", "polynomial"],
            rows.iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.k.map(|k| k.to_string()).unwrap_or_default(),
                        render_monomials(&r.poly),
                    ]
                })
                .collect(),
        ),
    };
    let name = format!("table_{}.{}", cfg.family.name(), cfg.format.extension());
    emit(cfg.destination(&name), &bytes)?;
    Ok(0)
}

pub fn stirling_rows(family: Family, n_max: usize, lambda: &Value) -> Vec<StirlingRow> {
    let (kind, degenerate) = match family {
        Family::Stirling1 => (StirlingKind::First, false),
        Family::Stirling2 => (StirlingKind::Second, false),
        Family::DegStirling1 => (StirlingKind::First, true),
        Family::DegStirling2 => (StirlingKind::Second, true),
        _ => unreachable!("checked by the caller"),
    };
    let table = StirlingTable::build(kind, degenerate, n_max);
    let mut rows = Vec::new();
    for n in 0..=n_max {
        for l in 0..=n {
            let v = table.get(n, l).expect("within table");
            let value = match lambda.as_rational() {
                Some(r) => LambdaPoly::constant(v.eval(r)),
                None => v,
            };
            rows.push(StirlingRow { n, l, value });
        }
    }
    rows
}

pub fn cmd_export_stirling(cfg: &RunConfig) -> Result<i32, CliError> {
    if !cfg.family.is_stirling() {
        return Err(CliError::Config(format!(
            "invalid family: {} is not a Stirling family (stirling1, stirling2, deg_stirling1, deg_stirling2)",
            cfg.family.name()
        )));
    }
    let n_max = cfg.n_max.unwrap_or(DEFAULT_N_MAX);
    cfg.order_for(n_max)?;
    let rows = stirling_rows(cfg.family, n_max, &cfg.lambda);
    let bytes = match cfg.format {
        Format::Json => json_bytes(&StirlingDocument {
            header: Header::new("export-stirling"),
            family: cfg.family.name().into(),
            lambda: cfg.lambda.to_string(),
            rows,
        }),
        Format::Csv => csv_bytes(
            &["n", "l", "value"],
            rows.iter()
                .map(|r| vec![r.n.to_string(), r.l.to_string(), render_lambda_monomials(&r.value)])
                .collect(),
        ),
    };
    let name = format!("stirling_{}.{}", cfg.family.name(), cfg.format.extension());
    emit(cfg.destination(&name), &bytes)?;
    Ok(0)
}

pub fn suite_config(cfg: &RunConfig) -> Result<SuiteConfig, CliError> {
    for (field, v) in [("lambda", &cfg.lambda), ("x", &cfg.x)] {
        if *v != Value::Symbolic {
            return Err(CliError::Config(format!(
                "invalid {field}: verify compares polynomials with {field} symbolic"
            )));
        }
    }
    let defaults = SuiteConfig::default();
    Ok(SuiteConfig {
        n_max_classical: cfg.n_max.or(cfg.n_max_classical).unwrap_or(defaults.n_max_classical),
        n_max_degenerate: cfg.n_max.or(cfg.n_max_degenerate).unwrap_or(defaults.n_max_degenerate),
        k_set: cfg.k.clone().unwrap_or(defaults.k_set),
        variants: cfg.variants,
        ids: cfg.ids.clone(),
    })
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<i32, CliError> {
    let suite = suite_config(cfg)?;
    suite.select().map_err(|e| CliError::Config(e.to_string()))?;
    let order = cfg.order_for(suite.max_n())?;
    let tables = Tables::build(order, &suite.k_set);
    let result = run_suite(&tables, &suite).map_err(|e| CliError::Config(e.to_string()))?;
    let s = &result.summary;
    eprintln!(
        "{} checks: {} pass, {} fail; must-pass {}; discrepancy count {}",
        s.total,
        s.pass,
        s.fail,
        if s.must_pass_ok { "ok" } else { "FAILED" },
        s.discrepancy_count
    );
    for key in &s.must_pass_failures {
        eprintln!("must-pass failure: {key}");
    }
    let code = if s.must_pass_ok { 0 } else { 1 };
    let bytes = match cfg.format {
        Format::Json => json_bytes(&VerifyDocument {
            header: Header::new("verify"),
            grid: VerifyGrid {
                n_max_classical: suite.n_max_classical,
                n_max_degenerate: suite.n_max_degenerate,
                k_set: suite.k_set.clone(),
                variants: match suite.variants {
                    polyeuler_core::VariantFilter::All => "all".into(),
                    polyeuler_core::VariantFilter::PrintedOnly => "printed-only".into(),
                },
                order,
            },
            summary: result.summary,
            reports: result.reports,
        }),
        Format::Csv => csv_bytes(
            &[
                "id",
                "variant",
                "class",
                "must_pass",
                "verdict",
                "n_min",
                "n_max",
                "k_set",
                "failure_n",
                "failure_k",
                "difference",
            ],
            result.reports.iter().map(verdict_row).collect(),
        ),
    };
    let name = format!("verify_report.{}", cfg.format.extension());
    emit(cfg.destination(&name), &bytes)?;
    Ok(code)
}

fn verdict_row(r: &IdentityReport) -> Vec<String> {
    let ks: Vec<String> = r.checked_range.k_set.iter().map(|k| k.to_string()).collect();
    let f = r.first_failure.as_ref();
    vec![
        r.id.clone(),
        r.variant.clone(),
        r.class.name().into(),
        r.must_pass.to_string(),
        serde_json::to_value(r.verdict)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default(),
        r.checked_range.n_min.to_string(),
        r.checked_range.n_max.to_string(),
        ks.join(" "),
        f.map(|f| f.n.to_string()).unwrap_or_default(),
        f.and_then(|f| f.k).map(|k| k.to_string()).unwrap_or_default(),
        f.map(|f| render_monomials(&f.difference)).unwrap_or_default(),
    ]
}
