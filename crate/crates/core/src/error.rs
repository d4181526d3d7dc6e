use thiserror::Error;

use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("index ({n}, {k}) out of range for {what}")]
    IndexOutOfRange { what: &'static str, n: usize, k: usize },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("n_max = {n_max} needs truncation order at least {}, configured order is {order}", n_max + 2)]
    OrderExceeded { n_max: usize, order: usize },
    #[error("k = {0} was not tabulated")]
    KNotTabulated(i64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
