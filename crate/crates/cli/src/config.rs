//! Run configuration: command-line flags layered over an optional TOML file
//! layered over the defaults below.
//!
//! | field        | default                         |
//! |--------------|---------------------------------|
//! | `family`     | `poly_euler` (`deg_stirling2` for `export-stirling`) |
//! | `n_max`      | 8 for `table`/`export-stirling`; 12 classical / 10 degenerate for `verify` |
//! | `k`          | `[1]` for `table`; `[-2, -1, 0, 1, 2, 3]` for `verify` |
//! | `lambda`     | `symbolic`                      |
//! | `x`          | `symbolic`                      |
//! | `order`      | `max(16, n_max + 2)`            |
//! | `format`     | `json`                          |
//! | `out`        | `$POLYEULER_OUT_DIR/<name>`, else stdout |
//! | `ids`        | every registered identity       |
//! | `variants`   | `all`                           |

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use polyeuler_core::{parse_rational, Rational, VariantFilter, DEFAULT_ORDER};
use serde::Deserialize;

/// Name of the environment variable holding the default output directory.
pub const OUT_DIR_ENV: &str = "POLYEULER_OUT_DIR";

#[derive(Debug)]
pub enum CliError {
    /// Bad flag, file or value; exit code 2.
    Config(String),
    /// Truncation order below `n_max + 2`; exit code 3.
    Order(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Order(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) | CliError::Order(m) => f.write_str(m),
        }
    }
}

fn field_error(field: &str, msg: impl fmt::Display) -> CliError {
    CliError::Config(format!("invalid {field}: {msg}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    PolyEuler,
    DegPolyEuler,
    PolyBernoulli,
    DegPolyBernoulli,
    Euler,
    DegEuler,
    Bernoulli,
    DegBernoulli,
    Stirling1,
    Stirling2,
    DegStirling1,
    DegStirling2,
}

const FAMILY_NAMES: &[(&str, Family)] = &[
    ("poly_euler", Family::PolyEuler),
    ("deg_poly_euler", Family::DegPolyEuler),
    ("poly_bernoulli", Family::PolyBernoulli),
    ("deg_poly_bernoulli", Family::DegPolyBernoulli),
    ("euler", Family::Euler),
    ("deg_euler", Family::DegEuler),
    ("bernoulli", Family::Bernoulli),
    ("deg_bernoulli", Family::DegBernoulli),
    ("stirling1", Family::Stirling1),
    ("stirling2", Family::Stirling2),
    ("deg_stirling1", Family::DegStirling1),
    ("deg_stirling2", Family::DegStirling2),
];

impl Family {
    pub fn name(self) -> &'static str {
        FAMILY_NAMES
            .iter()
            .find(|(_, f)| *f == self)
            .map(|(n, _)| *n)
            .expect("every family is named")
    }

    pub fn is_stirling(self) -> bool {
        matches!(
            self,
            Family::Stirling1 | Family::Stirling2 | Family::DegStirling1 | Family::DegStirling2
        )
    }

    /// Whether rows depend on `k`.
    pub fn takes_k(self) -> bool {
        matches!(
            self,
            Family::PolyEuler | Family::DegPolyEuler | Family::PolyBernoulli | Family::DegPolyBernoulli
        )
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        FAMILY_NAMES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|(_, f)| *f)
            .ok_or_else(|| {
                let names: Vec<_> = FAMILY_NAMES.iter().map(|(n, _)| *n).collect();
                format!("unknown family {s:?} (expected one of {})", names.join(", "))
            })
    }
}

/// `symbolic` or an exact rational value.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Value {
    #[default]
    Symbolic,
    Exact(Rational),
}

impl Value {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Value::Symbolic => None,
            Value::Exact(r) => Some(r),
        }
    }
}

impl FromStr for Value {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "symbolic" {
            return Ok(Value::Symbolic);
        }
        parse_rational(s).map(Value::Exact).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Symbolic => f.write_str("symbolic"),
            Value::Exact(r) => f.write_str(&polyeuler_core::render_rational(r)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (expected json or csv)")),
        }
    }
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

pub fn parse_variants(s: &str) -> Result<VariantFilter, String> {
    match s {
        "all" => Ok(VariantFilter::All),
        "printed-only" => Ok(VariantFilter::PrintedOnly),
        _ => Err(format!("unknown variant filter {s:?} (expected all or printed-only)")),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "polyeuler",
    version,
    about = "Exact tables of poly-Euler families and verification of their identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a polynomial family.
    Table(Flags),
    /// Run the identity suite and write the verdict report.
    Verify(Flags),
    /// Tabulate classical or degenerate Stirling numbers.
    ExportStirling(Flags),
}

impl Command {
    pub fn flags(&self) -> &Flags {
        match self {
            Command::Table(f) | Command::Verify(f) | Command::ExportStirling(f) => f,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Table(_) => "table",
            Command::Verify(_) => "verify",
            Command::ExportStirling(_) => "export-stirling",
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// TOML file with any of the fields below; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Comma-separated list, e.g. `--k=-1,2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub k: Option<Vec<i64>>,
    /// `symbolic` or `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// `symbolic` or `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long)]
    pub order: Option<usize>,
    /// `json` or `csv`.
    #[arg(long)]
    pub format: Option<String>,
    /// Output file; `-` writes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Comma-separated identity ids (`T2.7`) or keys (`T2.8/transposed`).
    #[arg(long, value_delimiter = ',')]
    pub ids: Option<Vec<String>>,
    /// `all` or `printed-only`.
    #[arg(long)]
    pub variants: Option<String>,
}

/// Fields accepted in the `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    family: Option<String>,
    n_max: Option<usize>,
    n_max_classical: Option<usize>,
    n_max_degenerate: Option<usize>,
    k: Option<Vec<i64>>,
    lambda: Option<String>,
    x: Option<String>,
    order: Option<usize>,
    format: Option<String>,
    out: Option<PathBuf>,
    ids: Option<Vec<String>>,
    variants: Option<String>,
}

/// Fully resolved settings for one command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub family: Family,
    pub n_max: Option<usize>,
    pub n_max_classical: Option<usize>,
    pub n_max_degenerate: Option<usize>,
    pub k: Option<Vec<i64>>,
    pub lambda: Value,
    pub x: Value,
    pub order: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub ids: Option<Vec<String>>,
    pub variants: VariantFilter,
}

fn parse_field<T>(
    field: &str,
    v: Option<String>,
    parse: impl Fn(&str) -> Result<T, String>,
) -> Result<Option<T>, CliError> {
    v.map(|s| parse(&s).map_err(|e| field_error(field, e))).transpose()
}

fn read_file(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read config file {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Config(format!("invalid config file {}: {e}", path.display())))
}

impl RunConfig {
    pub fn resolve(flags: &Flags, default_family: Family) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(p) => read_file(p)?,
            None => FileConfig::default(),
        };
        let f = flags.clone();
        let family = parse_field("family", f.family.or(file.family), |s| s.parse())?.unwrap_or(default_family);
        let k = f.k.or(file.k);
        if let Some(k) = &k {
            if k.is_empty() {
                return Err(field_error("k", "empty list"));
            }
        }
        Ok(RunConfig {
            family,
            n_max: f.n_max.or(file.n_max),
            n_max_classical: file.n_max_classical,
            n_max_degenerate: file.n_max_degenerate,
            k,
            lambda: parse_field("lambda", f.lambda.or(file.lambda), |s| s.parse())?.unwrap_or_default(),
            x: parse_field("x", f.x.or(file.x), |s| s.parse())?.unwrap_or_default(),
            order: f.order.or(file.order),
            format: parse_field("format", f.format.or(file.format), |s| s.parse())?.unwrap_or_default(),
            out: f.out.or(file.out),
            ids: f.ids.or(file.ids),
            variants: parse_field("variants", f.variants.or(file.variants), parse_variants)?.unwrap_or_default(),
        })
    }

    /// The truncation order for a grid reaching `n_max`; an explicit order
    /// below `n_max + 2` is rejected.
    pub fn order_for(&self, n_max: usize) -> Result<usize, CliError> {
        match self.order {
            Some(o) if o < n_max + 2 => Err(CliError::Order(format!(
                "invalid order: {o} is below n_max + 2 = {} (n_max = {n_max})",
                n_max + 2
            ))),
            Some(o) => Ok(o),
            None => Ok(DEFAULT_ORDER.max(n_max + 2)),
        }
    }

    /// Where to write: `--out`, else the default name in `$POLYEULER_OUT_DIR`,
    /// else stdout (`None`).
    pub fn destination(&self, default_name: &str) -> Option<PathBuf> {
        match &self.out {
            Some(p) if p.as_os_str() == "-" => None,
            Some(p) => Some(p.clone()),
            None => std::env::var_os(OUT_DIR_ENV).map(|d| PathBuf::from(d).join(default_name)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_and_families() {
        assert_eq!("symbolic".parse::<Value>().unwrap(), Value::Symbolic);
        assert_eq!(
            "-3/6".parse::<Value>().unwrap(),
            Value::Exact(polyeuler_core::rational::frac(-1, 2))
        );
        assert!("0.5".parse::<Value>().is_err());
        assert_eq!("deg_poly_euler".parse::<Family>().unwrap(), Family::DegPolyEuler);
        assert!("nope".parse::<Family>().is_err());
        for (name, fam) in FAMILY_NAMES {
            assert_eq!(fam.name(), *name);
        }
    }

    #[test]
    fn order_rule() {
        let flags = Flags {
            order: Some(5),
            ..Flags::default()
        };
        let cfg = RunConfig::resolve(&flags, Family::PolyEuler).unwrap();
        assert_eq!(cfg.order_for(3).unwrap(), 5);
        assert_eq!(cfg.order_for(4).unwrap_err().exit_code(), 3);
        let cfg = RunConfig::resolve(&Flags::default(), Family::PolyEuler).unwrap();
        assert_eq!(cfg.order_for(20).unwrap(), 22);
        assert_eq!(cfg.order_for(3).unwrap(), DEFAULT_ORDER);
    }

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.toml");
        std::fs::write(&path, "family = \"euler\"\nn_max = 4\nk = [2]\nlambda = \"1/2\"\n").unwrap();
        let flags = Flags {
            config: Some(path.clone()),
            n_max: Some(6),
            ..Flags::default()
        };
        let cfg = RunConfig::resolve(&flags, Family::PolyEuler).unwrap();
        assert_eq!(cfg.family, Family::Euler);
        assert_eq!(cfg.n_max, Some(6));
        assert_eq!(cfg.k, Some(vec![2]));
        assert_eq!(cfg.lambda, Value::Exact(polyeuler_core::rational::frac(1, 2)));

        std::fs::write(&path, "colour = 1\n").unwrap();
        let err = RunConfig::resolve(&flags, Family::PolyEuler).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("colour"));
    }
}
