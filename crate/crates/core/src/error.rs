use alloc::string::String;

/// Errors raised by constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A degree, dimension or bound lies outside the admissible range.
    #[error("range error: {0}")]
    Range(String),
    /// An input violates a documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A multiplication or composition table fails an algebraic law.
    #[error("invalid table: {0}")]
    InvalidTable(String),
    /// A structure failed internal validation (for example `∂∘∂ ≠ 0`).
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! bail {
    ($kind:ident, $($arg:tt)*) => {
        return Err($crate::Error::$kind(alloc::format!($($arg)*)))
    };
}
pub(crate) use bail;
