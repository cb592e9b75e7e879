use std::path::PathBuf;

use thiserror::Error;

use crate::symmetry::SymmetryOp;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The value is a zero divisor and has no inverse.
    #[error("value lies on the null cone (|z1^2 + z2^2| = {modulus:e})")]
    NullCone { modulus: f64 },

    #[error("exponential overflowed")]
    Overflow,

    /// A wave field vanishes in one idempotent component at a grid point,
    /// so it has no hyper-polar chart there.
    #[error("null-cone value at grid index {index} (x = {x})")]
    NullConeValue { index: usize, x: f64 },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("{component} idempotent component has zero norm")]
    ZeroNorm { component: &'static str },

    #[error("zero pivot in tridiagonal solve at row {row}")]
    SingularSystem { row: usize },

    #[error("composition of {0} and {1} is only defined inside the fundamental subgroup P0..P3")]
    UnsupportedComposition(SymmetryOp, SymmetryOp),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid solver configuration: {0}")]
    InvalidSolver(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inconsistent input: {0}")]
    Input(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn csv(path: impl Into<PathBuf>, source: csv::Error) -> Self {
        Error::Csv { path: path.into(), source }
    }

    /// True for errors caused by bad user input (config, files, grids)
    /// rather than by the numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidGrid(_)
                | Error::InvalidSolver(_)
                | Error::Config(_)
                | Error::Parse(_)
                | Error::Input(_)
                | Error::Io { .. }
                | Error::Csv { .. }
                | Error::GridMismatch(_)
        )
    }
}
