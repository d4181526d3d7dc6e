//! Exact construction of poly-Euler and degenerate poly-Euler polynomials
//! from their generating functions, with a registry of identity checks that
//! compare both sides as canonical polynomials in Q[λ][x].
//!
//! The algebra kernel ([`poly`], [`series`]) is generic over a
//! [`scalar::Coefficient`] tower; everything above it works with the exact
//! aliases exported here.

pub mod error;
pub mod identity;
pub mod poly;
pub mod poly_euler;
pub mod rational;
pub mod repr;
pub mod scalar;
pub mod sequences;
pub mod series;
pub mod xlambda;

pub use error::{Error, Result};
pub use identity::{
    check_identity, register_builtin, run_suite, IdentityReport, IdentitySpec, SuiteConfig, SuiteResult, VariantFilter,
};
pub use poly_euler::{deg_poly_euler, lemma21_coeff, poly_euler, Tables};
pub use rational::{parse_rational, render_rational, Rational};
pub use series::SeriesError;

/// Element of Q[λ].
pub type LambdaPoly = poly::Poly<Rational>;
/// Element of Q[λ][x].
pub type XLambdaPoly = poly::Poly<LambdaPoly>;
/// Truncated series in t over Q[λ][x].
pub type TruncatedSeries = series::Series<XLambdaPoly>;

/// Floating-point instantiations of the generic kernel.
pub type PolyF64 = poly::Poly<f64>;
pub type SeriesF64 = series::Series<f64>;

/// Default truncation order for series construction.
pub const DEFAULT_ORDER: usize = 16;
