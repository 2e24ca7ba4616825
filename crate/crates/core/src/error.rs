use thiserror::Error;

use crate::grid::{ConfigClass, Point};

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown configuration class `{0}`")]
    UnknownClass(String),

    #[error("point {point} lies outside the {n}x{n} grid")]
    OutOfBounds { point: Point, n: u32 },

    #[error("brute-force counting is limited to {limit} points, got {size}")]
    BruteGuardExceeded { size: usize, limit: usize },

    #[error("{what}: size {size} exceeds the guard {limit}")]
    GuardExceeded {
        what: String,
        size: usize,
        limit: usize,
    },

    #[error("node budget of {budget} exhausted (best size found {best_found})")]
    BudgetExhausted { budget: u64, best_found: usize },

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("no prime power q with q^2+q+1 <= {0}")]
    NoPrimePowerInRange(u64),

    #[error("parse error line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("verification failed: {0}")]
    Unverified(String),

    #[error("construction `{name}` produced a {class} configuration: {witness:?}")]
    VerificationFailed {
        name: String,
        class: ConfigClass,
        witness: Vec<Point>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
