//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error(
        "coordinates must be strictly increasing: coords[{index}] = {prev} is not below \
         coords[{}] = {next} (duplicate or out-of-order points; `LineInstance::dedupe_then_build` \
         collapses exact duplicates)",
        index + 1
    )]
    NotStrictlyIncreasing { index: usize, prev: f64, next: f64 },

    #[error("a line instance needs at least one point")]
    EmptyInstance,

    #[error("invalid kernel: {0}")]
    InvalidKernel(String),

    #[error("{0}")]
    Domain(String),

    #[error(
        "similarity matrix is numerically singular: pivot {pivot:.3e} in column {column} \
         (duplicated or near-duplicated points, or a degenerate custom kernel)"
    )]
    SingularMatrix { pivot: f64, column: usize },

    #[error("degenerate three-point similarity triple: determinant {determinant:.3e} is below tolerance")]
    DegenerateTriple { determinant: f64 },

    #[error(
        "coordinate {coordinate} is not monotone: samples {first} and {second} move against \
         the direction established earlier in the sequence"
    )]
    NotOrdered {
        coordinate: usize,
        first: usize,
        second: usize,
    },

    #[error(
        "l1 isometry violated between samples {first} and {second}: l1 distance {l1:e} vs \
         scalar-coordinate difference {scalar:e}"
    )]
    IsometryViolation {
        first: usize,
        second: usize,
        l1: f64,
        scalar: f64,
    },

    #[error("instance too large for exhaustive enumeration: n = {n} exceeds the limit {limit}")]
    InstanceTooLarge { n: usize, limit: usize },

    #[error("parse error at row {row}, column {column}: {message}")]
    Parse {
        row: usize,
        column: usize,
        message: String,
    },

    #[error("golden mismatch in {quantity}: expected {expected}, got {actual}")]
    GoldenMismatch {
        quantity: String,
        expected: String,
        actual: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end:
    /// 2 for parse/argument problems, 3 for numerical degeneracy,
    /// 4 for a golden-value mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SingularMatrix { .. }
            | Error::DegenerateTriple { .. }
            | Error::IsometryViolation { .. } => 3,
            Error::GoldenMismatch { .. } => 4,
            _ => 2,
        }
    }
}
