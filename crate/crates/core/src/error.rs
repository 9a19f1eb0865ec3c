use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input is structurally unusable (wrong length, wrong parity, bad entry).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two operands that must share an order do not.
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// A 1-based row or column index fell outside the matrix.
    #[error("index {index} out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },

    /// The input is well-formed but violates a documented precondition.
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),

    /// Rows 1 and 2 do not form a basis, so a two-row dependency is not unique.
    #[error("rows 1 and 2 are linearly dependent; no unique two-row dependency")]
    DependentRows,

    /// The request exceeds a documented size cap.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// Text input could not be parsed; `token` is the offending fragment.
    #[error("cannot parse token '{token}': {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
