use thiserror::Error;

/// Errors surfaced by constructors and enumeration routines.
///
/// Contract violations (passing a non-ideal where an ideal is required,
/// mixing carriers from different semirings) are programming errors and
/// panic instead; everything here is reachable from well-typed input.
#[derive(Debug, Error)]
pub enum Error {
    /// Ragged tables, out-of-range indices, carriers larger than 256.
    #[error("malformed semiring table: {0}")]
    Malformed(String),

    /// Tables that parse but violate the semiring axioms.
    #[error("semiring axioms violated: {0}")]
    Invalid(String),

    /// The operation is only defined on additively idempotent semirings.
    #[error("{op} requires an additively idempotent semiring, but {name} is not")]
    NotIdempotent { op: &'static str, name: String },

    /// An enumeration exceeded its step budget. Never a silent truncation.
    #[error("search budget exhausted in {context} (limit {limit} steps)")]
    Budget { context: &'static str, limit: u64 },

    /// Structurally valid input that trivializes the requested construction.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Out-of-range construction parameters.
    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
