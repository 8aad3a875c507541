//! The W̄ and W resolutions of semigroups and monoids.
//!
//! Points are [`WTuple`]s with exact rational parameters. For homology the
//! semigroup version is also available as a cube complex whose cells are
//! sequences of letter blocks ([`wbar_complex`]).

mod cells;
mod ground;
mod whisker;
mod wtuple;

pub use cells::{block_cells, components_match_products, wbar_complex, wbar_components, BlockCell};
pub use ground::{FreeMonoid, Semigroup};
pub use whisker::{WhiskerElem, WhiskerMonoid};
pub use wtuple::{Mode, WTuple};

#[cfg(test)]
mod tests;
