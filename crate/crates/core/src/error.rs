use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by all modules.
///
/// `CapExceeded` is the only variant that signals "too big for the configured
/// limits" rather than "invalid input"; callers that map errors onto process
/// exit codes treat it separately.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {lhs_rows}x{lhs_cols} vs {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("symplectic vector length mismatch: {lhs} qubits vs {rhs} qubits")]
    SymplecticLengthMismatch { lhs: usize, rhs: usize },

    #[error("vector length mismatch: expected {expected}, got {got}")]
    VectorLength { expected: usize, got: usize },

    #[error("matrix shape overflow in {op}")]
    ShapeOverflow { op: &'static str },

    #[error("invalid Reed-Muller parameters: require 0 <= r <= m, got r={r}, m={m}")]
    InvalidRmSpec { r: u32, m: u32 },

    #[error(
        "capacity cap exceeded for {what}: requires cap >= {required}, configured cap is {cap}"
    )]
    CapExceeded {
        what: &'static str,
        required: u64,
        cap: u64,
    },

    #[error("infeasible construction: {0}")]
    Infeasible(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True when the error reports a configured size cap being exceeded, as
    /// opposed to invalid input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
