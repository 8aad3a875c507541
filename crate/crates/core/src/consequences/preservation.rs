use alloc::vec::Vec;

use crate::barcat::{hocolim, Diagram, SimplicialMap};
use crate::error::bail;
use crate::exactalg::{reduced_homology_all, AbelianGroup};
use crate::simplicial::{nerve, FinMonoid, SimplicialSet};

/// Reduced homology of `hocolim(BG₁ ← * → BG₂)` next to
/// `H̃(BG₁) ⊕ H̃(BG₂)`, the homology of `B(G₁ * G₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationReport {
    /// `(degree, hocolim side, free product side)` for degrees `0 … maxdeg`.
    pub degrees: Vec<(usize, AbelianGroup, AbelianGroup)>,
}

impl PreservationReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|(_, l, r)| l == r)
    }
}

/// Builds the span of nerves truncated at `maxdeg + 1` and compares both
/// sides in degrees `≤ maxdeg`.
pub fn hocolim_preservation_check(g1: &FinMonoid, g2: &FinMonoid, maxdeg: usize) -> crate::Result<PreservationReport> {
    if !g1.is_group() || !g2.is_group() {
        bail!(Precondition, "the comparison is stated for groups");
    }
    let maxdim = maxdeg + 1;
    let b1 = nerve(g1, maxdim);
    let b2 = nerve(g2, maxdim);
    let pt = SimplicialSet::point(maxdim);
    let d = Diagram::span(
        SimplicialMap::constant(&pt, &b1, 0)?,
        SimplicialMap::constant(&pt, &b2, 0)?,
    )?;
    let lhs = reduced_homology_all(&hocolim(&d, maxdim)?.chains());
    let h1 = reduced_homology_all(&b1.chains());
    let h2 = reduced_homology_all(&b2.chains());
    let degrees = (0..=maxdeg)
        .map(|n| (n, lhs[n].clone(), h1[n].direct_sum(&h2[n])))
        .collect();
    Ok(PreservationReport { degrees })
}
