//! Finite monoids and categories, simplicial sets presented by generators,
//! nerves, and the product, smash and suspension constructions.

mod algebra;
mod nerve;
mod ops;
mod sset;

pub use algebra::{adjoin_unit, FinCategory, FinMonoid, FinSemigroup, Hom, Morphism};
pub use nerve::{category_nerve, nerve, semigroup_nerve};
#[allow(unused_imports)]
pub(crate) use nerve::{nondegenerate_chains, tuples};
pub use ops::{product, smash, smash_power, suspension, wedge};
pub use sset::{decreasing_subsets, normalize_word, realize, Realized, Simplex, SimplicialModel, SimplicialSet};
