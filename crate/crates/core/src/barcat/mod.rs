//! Two-sided bar constructions over finite categories, diagrams of
//! simplicial sets, the tensor product over a category, `δ` and homotopy
//! colimits.
//!
//! Bisimplicial objects are flattened by taking the diagonal.

mod bar;
mod diagram;
mod map;
mod tensor;

pub use bar::{bar_ccc, bar_star_cc, delta, em_bar, two_sided_bar, BarKey, BarModel, DeltaComponent};
pub use diagram::Diagram;
pub use map::SimplicialMap;
pub use tensor::{bar_star_c_d, co_yoneda_check, hocolim, tensor_over_c, TensorModel};

#[cfg(test)]
mod tests;
