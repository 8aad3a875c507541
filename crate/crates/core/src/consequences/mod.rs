//! Finite shadows of the James construction, group completion and the
//! behaviour of the classifying space functor on homotopy colimits.
//!
//! `B(JX)` itself has infinite-rank chain groups and is never built; the
//! suspension comparison is split into the `J_L X` homology identity and
//! the degree shift of `ΣX`.

mod completion;
mod james;
mod preservation;

pub use completion::{grothendieck_group, h1_of_bm, CommMonoidPresentation};
pub use james::{james, james_rational_comparison, smash_power_oracle, JamesModel};
pub use preservation::{hocolim_preservation_check, PreservationReport};

#[cfg(test)]
mod tests;
