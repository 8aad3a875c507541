//! Exact finite models of classifying spaces of monoids.
//!
//! The crate works purely with finite combinatorial data: multiplication
//! tables, simplicial sets presented by generators and face tables, integer
//! chain complexes and exact rational coordinates. Nothing here touches the
//! filesystem or uses floating point, and the crate builds without `std`
//! (an allocator is required).
//!
//! Module map:
//!
//! * [`exactalg`]: rationals, sparse integer matrices, Smith normal form,
//!   chain complexes and homology.
//! * [`simplicial`]: finite monoids and categories, simplicial sets, nerves,
//!   products, smash products and suspensions.
//! * [`barcat`]: two-sided bar constructions, diagrams, the tensor product
//!   over a category and homotopy colimits.
//! * [`wconstruct`]: the W̄/W resolutions of semigroups and monoids, both as
//!   exact points and as a cubical cell complex.
//! * [`moorezeta`]: Moore paths, the evaluation map, paths in `EM` and the
//!   explicit map ζ.
//! * [`consequences`]: the James construction, group completion and the
//!   hocolim comparison checks.
#![no_std]
#![deny(missing_debug_implementations)]

extern crate alloc;

pub mod barcat;
pub mod consequences;
mod error;
pub mod exactalg;
pub mod simplicial;
pub mod unionfind;
pub mod wconstruct;
pub mod moorezeta;

pub use error::{Error, Result};
