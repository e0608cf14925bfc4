use thiserror::Error;

use crate::state::SymmetryClass;

/// Failures reported by state construction, the closed forms and the channels.
///
/// Validation variants name the invariant that was violated so that callers
/// (the CLI in particular) can surface it verbatim.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("finiteness invariant violated: entry {0} is not a finite number")]
    NonFinite(&'static str),

    #[error("shape invariant violated: expected a 4x4 matrix, got {rows}x{cols}")]
    Shape { rows: usize, cols: usize },

    #[error("hermiticity invariant violated at ({row},{col}): deviation {deviation:.3e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("unit-trace invariant violated: trace = {trace}")]
    TraceNotUnit { trace: f64 },

    #[error("positivity invariant violated: smallest eigenvalue {min_eigenvalue:.3e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("Bloch range invariant violated: {component} = {value} exceeds unit magnitude")]
    BlochOutOfRange { component: &'static str, value: f64 },

    #[error("parameter {name} = {value} outside [0, 1]")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("closed forms do not cover the {0} symmetry class")]
    UnsupportedClass(SymmetryClass),

    #[error("state is not a canonical X state")]
    NotXState,

    #[error("Kraus completeness invariant violated: |sum E^dag E - 1| = {deviation:.3e}")]
    IncompleteKraus { deviation: f64 },

    #[error("negative logarithm argument {value:.3e} in {context}")]
    InvalidLogArgument { context: &'static str, value: f64 },

    #[error("invalid search configuration: {0}")]
    InvalidSearch(String),

    #[error("malformed state description: {0}")]
    Parse(String),

    #[error("sweep check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
