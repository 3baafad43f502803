use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the numerical kernels, tables and commands.
#[derive(Debug, Error)]
pub enum Error {
    #[error("pole of {function} at s = {at}")]
    Pole { function: &'static str, at: String },

    #[error("{function} overflows the floating range at s = {at}")]
    Overflow { function: &'static str, at: String },

    #[error("domain error in {function}: {reason}")]
    Domain {
        function: &'static str,
        reason: String,
    },

    #[error("{what} = {value} is out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("Bernoulli index {0} unsupported (must be even, 2..=60)")]
    UnsupportedIndex(u32),

    #[error("quadrature did not reach tolerance {tol:e} (estimate {estimate:e}) within {budget} subdivisions")]
    NonConvergence {
        tol: f64,
        estimate: f64,
        budget: usize,
    },

    #[error("prime table limit {limit} too small: tail bound {bound:e} at re(s) = {sigma}")]
    InsufficientTable { limit: u64, bound: f64, sigma: f64 },

    #[error("n_max = {n_max} too small: tail bound {bound:e} exceeds {tol:e}")]
    InsufficientTerms { n_max: usize, bound: f64, tol: f64 },

    #[error("zero finder missed zeros below t = {t_max}: found {found}, expected {expected}")]
    MissedZeros {
        t_max: f64,
        found: usize,
        expected: i64,
    },

    #[error("computed zero {ordinate} fails the residual check")]
    ZeroResidual { ordinate: f64 },

    #[error("{path}:{line}: cannot parse {content:?} as an ordinate")]
    Parse {
        path: PathBuf,
        line: usize,
        content: String,
    },

    #[error("{path}:{line}: ordinate {value} is not above the previous one")]
    Ordering {
        path: PathBuf,
        line: usize,
        value: f64,
    },

    #[error("{path}:{line}: ordinate {value} is below 13, not a nontrivial zero")]
    InvalidOrdinate {
        path: PathBuf,
        line: usize,
        value: f64,
    },

    #[error("{0}: zero table is empty")]
    EmptyFile(PathBuf),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid precision configuration: {0}")]
    Config(String),
}

impl Error {
    /// Process exit code: 3 for file and parse problems, 2 for everything
    /// else (bad arguments, domain and numerical failures).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::Ordering { .. }
            | Error::InvalidOrdinate { .. }
            | Error::EmptyFile(_)
            | Error::Io { .. } => 3,
            _ => 2,
        }
    }

    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
