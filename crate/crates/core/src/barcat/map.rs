use alloc::vec::Vec;

use crate::error::bail;
use crate::simplicial::{Simplex, SimplicialSet};

/// A simplicial map, given by the image of every generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    images: Vec<Vec<Simplex>>,
}

impl SimplicialMap {
    /// Validates degrees and compatibility with every face map.
    pub fn new(source: SimplicialSet, target: SimplicialSet, images: Vec<Vec<Simplex>>) -> crate::Result<Self> {
        if target.maxdim() < source.maxdim() {
            bail!(Range, "target truncated below source");
        }
        if images.len() != source.maxdim() + 1 {
            bail!(Range, "images for {} degrees, expected {}", images.len(), source.maxdim() + 1);
        }
        for (n, row) in images.iter().enumerate() {
            if row.len() != source.count(n) {
                bail!(Range, "degree {n}: {} images for {} generators", row.len(), source.count(n));
            }
            for s in row {
                if s.dim() != n || s.gen >= target.count(s.gen_dim) {
                    bail!(Range, "degree {n}: ill-formed image {s:?}");
                }
                if target.is_semisimplicial() && s.is_degenerate() {
                    bail!(Range, "degenerate image in a semisimplicial target");
                }
            }
        }
        let map = SimplicialMap { source, target, images };
        map.validate()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: SimplicialSet, target: SimplicialSet, images: Vec<Vec<Simplex>>) -> Self {
        SimplicialMap { source, target, images }
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        let images = (0..=x.maxdim())
            .map(|n| (0..x.count(n)).map(|g| Simplex::generator(n, g)).collect())
            .collect();
        SimplicialMap::new_unchecked(x.clone(), x.clone(), images)
    }

    /// Every simplex goes to the degenerate copy of `vertex`.
    pub fn constant(source: &SimplicialSet, target: &SimplicialSet, vertex: usize) -> crate::Result<Self> {
        if vertex >= target.count(0) {
            bail!(Range, "vertex {vertex} out of range");
        }
        let images = (0..=source.maxdim())
            .map(|n| {
                let v = Simplex::with_word(0, vertex, (0..n).rev().collect());
                alloc::vec![v; source.count(n)]
            })
            .collect();
        SimplicialMap::new(source.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    pub fn images(&self) -> &[Vec<Simplex>] {
        &self.images
    }

    pub fn apply(&self, x: &Simplex) -> Simplex {
        self.images[x.gen_dim][x.gen].degenerate_by(&x.degen)
    }

    /// `f(d_i g) = d_i f(g)` on every generator `g`.
    pub fn validate(&self) -> crate::Result<()> {
        for n in 1..=self.source.maxdim() {
            for g in 0..self.source.count(n) {
                let x = Simplex::generator(n, g);
                let fx = &self.images[n][g];
                for i in 0..=n {
                    if self.apply(&self.source.face(i, &x)) != self.target.face(i, fx) {
                        bail!(Validation, "map does not commute with d_{i} on generator {n}/{g}");
                    }
                }
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SimplicialMap) -> crate::Result<SimplicialMap> {
        if first.target != self.source {
            bail!(Precondition, "maps are not composable");
        }
        let images = first
            .images
            .iter()
            .map(|row| row.iter().map(|s| self.apply(s)).collect())
            .collect();
        Ok(SimplicialMap::new_unchecked(first.source.clone(), self.target.clone(), images))
    }

    /// Induced map on path components, as vertex-class representatives.
    pub fn on_components(&self) -> Vec<(usize, usize)> {
        let sc = self.source.components();
        let tc = self.target.components();
        let mut out: Vec<(usize, usize)> = (0..self.source.count(0))
            .map(|v| (sc[v], tc[self.images[0][v].gen]))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}
