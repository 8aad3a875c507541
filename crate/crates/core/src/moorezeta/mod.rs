//! Moore paths with exact rational breakpoints, the evaluation map, points
//! of `|EM|` and `|BM|`, the monoid of paths in `EM` ending in `M`, and ζ.

mod em;
mod path;
mod zeta;

pub use em::{em_act, em_project, EmChart};
pub use path::{ev, ev_face_coherence, MoorePath, PathValue, RatPoint, Segment};
pub use zeta::{zeta, PemPath};

#[cfg(test)]
mod tests;
