//! Background sequences: falling factorials, Stirling numbers, the
//! degenerate exponential/logarithm/polylogarithm, and the Bernoulli, Euler
//! and poly-Bernoulli families.

pub mod exp_log;
pub mod families;
pub mod polylog;
pub mod stirling;

pub use exp_log::{deg_exp, deg_log, exp_series, falling_factorial, falling_factorial_deg, log1p};
pub use families::{
    classical_family, classical_family_table, degenerate_family, degenerate_family_table, poly_bernoulli,
    poly_bernoulli_table, Family, PolyBernoulliForm,
};
pub use polylog::{deg_polylog_compose, inv_power, polylog_compose};
pub use stirling::{stirling, StirlingKind, StirlingTable};
