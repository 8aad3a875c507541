use std::fmt;

/// A parse failure with a 1-based line and column inside `origin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub origin: String,
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(origin: &str, line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            origin: origin.to_string(),
            line,
            col,
            msg: msg.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}: {}", self.origin, self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] bwtop_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    /// `2` for unreadable or malformed input, `1` for failures inside a
    /// construction.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) => 1,
            CliError::Parse(_) | CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }
}
