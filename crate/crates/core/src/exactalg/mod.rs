//! Exact arithmetic backend: rationals, integer matrices, Smith normal form,
//! chain complexes and their homology.
//!
//! Every other module reduces its claims to computations here, so nothing in
//! this module ever rounds. Integers are arbitrary precision; the sparse
//! elimination runs on machine words first and restarts on big integers if a
//! checked operation overflows.

mod chain;
mod group;
mod homology;
mod matrix;
mod rat;
mod snf;

pub use chain::ChainComplex;
pub use group::AbelianGroup;
pub use homology::{
    euler_characteristic, homology, homology_all, rank_mod_p, reduced_homology_all,
    Coefficients, HomologyResult,
};
pub use matrix::IntMatrix;
pub use num_bigint::BigInt;
pub use rat::Rat;
pub use snf::{invariant_factors, normalize_diagonal, smith_normal_form, SmithDecomposition};
