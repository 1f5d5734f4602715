use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three groups that the CLI maps onto exit codes:
/// malformed or out-of-range input, resource refusals, and internal
/// invariant failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KunzError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("generators have gcd {0}, the semigroup is not cofinite")]
    NotCofinite(u64),

    #[error("point violates the Kunz inequality x_{i} + x_{j} >= x_{{{i}+{j}}}")]
    ViolatedInequality { i: u32, j: u32 },

    #[error("point has a zero coordinate at index {0}; degenerate faces are not supported")]
    ZeroCoordinate(u32),

    #[error("sum {a} + {b} = {c} is not valid modulo {m}")]
    ResidueMismatch { m: u32, a: u32, b: u32, c: u32 },

    #[error("operation is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: u32, b: u32, c: u32 },

    #[error("operation is not partly cancellative: {a} + {b} = {a} + {c}")]
    NotCancellative { a: u32, b: u32, c: u32 },

    #[error("element {0} is not nilpotent")]
    NotNilpotent(u32),

    #[error("nilsemigroup is not the Kunz nilsemigroup of any non-degenerate face: {0}")]
    NotRealizable(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("resource guard: m = {m} exceeds the limit {limit} (raise it with KUNZ_MAX_M)")]
    ResourceLimit { m: u32, limit: u32 },

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl KunzError {
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            KunzError::ResourceLimit { .. } | KunzError::Internal(_) | KunzError::ContractViolation(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, KunzError>;
