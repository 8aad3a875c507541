//! File formats, the fixture corpus, verification suites and the
//! command-line driver built on `bwtop-core`.

pub mod cli;
pub mod error;
pub mod eval;
pub mod fixtures;
pub mod format;
pub mod suites;

pub use error::{CliError, ParseError};
