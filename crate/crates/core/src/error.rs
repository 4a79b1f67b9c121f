use std::path::PathBuf;

use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("point set is empty")]
    EmptySet,

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("duplicate point at index {0}")]
    DuplicatePoint(usize),

    #[error("point {index} has norm {norm} (expected 1)")]
    NotUnit { index: usize, norm: f64 },

    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("unsupported dimension d={0} for {1}")]
    UnsupportedDimension(usize, &'static str),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("kernel truncation cannot reach tolerance {tol:e} with degree <= {max_degree}")]
    Truncation { tol: f64, max_degree: usize },

    #[error("{what} did not converge: {detail}")]
    NoConvergence { what: &'static str, detail: String },

    #[error("negative radicand {0:e} in closed-form worst-case error")]
    NegativeRadicand(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
