use alloc::vec::Vec;

use super::map::SimplicialMap;
use crate::error::bail;
use crate::simplicial::{FinCategory, Simplex, SimplicialSet};

/// A functor from a finite category to simplicial sets. A contravariant
/// functor on `C` is a diagram over `C.opposite()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    shape: FinCategory,
    values: Vec<SimplicialSet>,
    arrows: Vec<SimplicialMap>,
}

impl Diagram {
    /// `arrows[f]` is the map for morphism `f`, identities included.
    pub fn new(shape: FinCategory, values: Vec<SimplicialSet>, arrows: Vec<SimplicialMap>) -> crate::Result<Self> {
        if values.len() != shape.object_count() {
            bail!(Precondition, "{} values for {} objects", values.len(), shape.object_count());
        }
        if arrows.len() != shape.morphism_count() {
            bail!(Precondition, "{} maps for {} morphisms", arrows.len(), shape.morphism_count());
        }
        for (f, a) in arrows.iter().enumerate() {
            if a.source() != &values[shape.source(f)] || a.target() != &values[shape.target(f)] {
                bail!(Precondition, "map for {} has the wrong endpoints", shape.morphism(f).name);
            }
        }
        let d = Diagram { shape, values, arrows };
        d.validate()?;
        Ok(d)
    }

    /// Functoriality on every generator.
    pub fn validate(&self) -> crate::Result<()> {
        let c = &self.shape;
        for o in 0..c.object_count() {
            if self.arrows[c.identity(o)].images() != SimplicialMap::identity(&self.values[o]).images() {
                bail!(Validation, "identity of {} is not sent to the identity", c.object_name(o));
            }
        }
        for g in 0..c.morphism_count() {
            for f in 0..c.morphism_count() {
                let Some(gf) = c.compose(g, f) else { continue };
                let comp = self.arrows[g].after(&self.arrows[f])?;
                if comp.images() != self.arrows[gf].images() {
                    bail!(
                        Validation,
                        "functoriality fails for {} ∘ {}",
                        c.morphism(g).name,
                        c.morphism(f).name
                    );
                }
            }
        }
        Ok(())
    }

    /// The constant diagram at `x`.
    pub fn constant(shape: &FinCategory, x: &SimplicialSet) -> Self {
        let id = SimplicialMap::identity(x);
        Diagram {
            shape: shape.clone(),
            values: alloc::vec![x.clone(); shape.object_count()],
            arrows: alloc::vec![id; shape.morphism_count()],
        }
    }

    pub fn point(shape: &FinCategory, maxdim: usize) -> Self {
        Diagram::constant(shape, &SimplicialSet::point(maxdim))
    }

    /// A set-valued diagram viewed as discrete simplicial sets;
    /// `maps[f][i]` is the image of element `i` under morphism `f`.
    pub fn from_sets(shape: &FinCategory, sizes: &[usize], maps: &[Vec<usize>], maxdim: usize) -> crate::Result<Self> {
        if sizes.len() != shape.object_count() || maps.len() != shape.morphism_count() {
            bail!(Precondition, "set diagram does not match its shape");
        }
        let values: Vec<SimplicialSet> = sizes.iter().map(|&k| SimplicialSet::discrete(k, maxdim)).collect();
        let mut arrows = Vec::with_capacity(maps.len());
        for (f, m) in maps.iter().enumerate() {
            let (s, t) = (shape.source(f), shape.target(f));
            if m.len() != sizes[s] || m.iter().any(|&y| y >= sizes[t]) {
                bail!(Range, "map for {} is not a function between the right sets", shape.morphism(f).name);
            }
            let images = (0..=maxdim)
                .map(|n| {
                    if n == 0 {
                        m.iter().map(|&y| Simplex::generator(0, y)).collect()
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            arrows.push(SimplicialMap::new(values[s].clone(), values[t].clone(), images)?);
        }
        Diagram::new(shape.clone(), values, arrows)
    }

    /// `C(−, b)` as a diagram over `C.opposite()`; element `i` at object `o`
    /// is `c.hom(o, b)[i]`.
    pub fn representable(c: &FinCategory, b: usize, maxdim: usize) -> Self {
        let homs: Vec<Vec<usize>> = (0..c.object_count()).map(|o| c.hom(o, b)).collect();
        let sizes: Vec<usize> = homs.iter().map(|h| h.len()).collect();
        let maps: Vec<Vec<usize>> = (0..c.morphism_count())
            .map(|h| {
                let (s, t) = (c.source(h), c.target(h));
                homs[t]
                    .iter()
                    .map(|&x| {
                        let xh = c.compose(x, h).unwrap();
                        homs[s].iter().position(|&y| y == xh).unwrap()
                    })
                    .collect()
            })
            .collect();
        Diagram::from_sets(&c.opposite(), &sizes, &maps, maxdim).expect("representable functors are functors")
    }

    /// `C(a, −)` as a diagram over `C`.
    pub fn corepresentable(c: &FinCategory, a: usize, maxdim: usize) -> Self {
        let homs: Vec<Vec<usize>> = (0..c.object_count()).map(|o| c.hom(a, o)).collect();
        let sizes: Vec<usize> = homs.iter().map(|h| h.len()).collect();
        let maps: Vec<Vec<usize>> = (0..c.morphism_count())
            .map(|g| {
                let (s, t) = (c.source(g), c.target(g));
                homs[s]
                    .iter()
                    .map(|&y| {
                        let gy = c.compose(g, y).unwrap();
                        homs[t].iter().position(|&z| z == gy).unwrap()
                    })
                    .collect()
            })
            .collect();
        Diagram::from_sets(c, &sizes, &maps, maxdim).expect("corepresentable functors are functors")
    }

    /// `A ← M → B` over [`FinCategory::span`].
    pub fn span(left: SimplicialMap, right: SimplicialMap) -> crate::Result<Self> {
        if left.source() != right.source() {
            bail!(Precondition, "span legs must share a source");
        }
        let shape = FinCategory::span();
        let (m, a, b) = (left.source().clone(), left.target().clone(), right.target().clone());
        let arrows = alloc::vec![
            SimplicialMap::identity(&m),
            SimplicialMap::identity(&a),
            SimplicialMap::identity(&b),
            left,
            right,
        ];
        Diagram::new(shape, alloc::vec![m, a, b], arrows)
    }

    pub fn shape(&self) -> &FinCategory {
        &self.shape
    }

    pub fn value(&self, o: usize) -> &SimplicialSet {
        &self.values[o]
    }

    pub fn values(&self) -> &[SimplicialSet] {
        &self.values
    }

    pub fn arrow(&self, f: usize) -> &SimplicialMap {
        &self.arrows[f]
    }

    /// Smallest truncation among the values.
    pub fn maxdim(&self) -> usize {
        self.values.iter().map(|v| v.maxdim()).min().unwrap_or(0)
    }
}
