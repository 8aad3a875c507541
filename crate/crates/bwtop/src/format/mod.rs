//! Line-oriented text formats. Every parser reports errors with the line
//! and column of the offending token.

mod algebra;
mod chain;
mod diagram;
mod lex;
mod path;
mod wtuple;

pub use algebra::{parse_category, parse_monoid, parse_semigroup, parse_table, write_category, write_monoid, write_semigroup, Table};
pub use chain::{parse_chain, write_chain};
pub use diagram::parse_diagram;
pub use path::{parse_em, parse_path, parse_point, show_point, write_path};
pub use wtuple::{parse_wtuple, write_wtuple};
