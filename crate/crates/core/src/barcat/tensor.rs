use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::bar::{bar_star_cc, two_sided_bar};
use super::diagram::Diagram;
use crate::error::bail;
use crate::simplicial::{realize, Simplex, SimplicialModel, SimplicialSet};
use crate::unionfind::UnionFind;

type Triple = (usize, Simplex, Simplex);

/// Degree-wise coequalizer presenting `X ⊗_C D`. Keys are class
/// representatives, i.e. least triple indices.
#[derive(Debug)]
pub struct TensorModel<'a> {
    x: &'a Diagram,
    d: &'a Diagram,
    maxdim: usize,
    triples: Vec<Vec<Triple>>,
    index: Vec<BTreeMap<Triple, usize>>,
    reps: Vec<Vec<usize>>,
}

impl<'a> TensorModel<'a> {
    /// `x` is a diagram over `Cᵒᵖ`, `d` over `C`.
    pub fn new(x: &'a Diagram, d: &'a Diagram, maxdim: usize) -> crate::Result<Self> {
        let c = d.shape();
        if x.shape() != &c.opposite() {
            bail!(Precondition, "tensor factors live over different categories");
        }
        if maxdim > x.maxdim().min(d.maxdim()) {
            bail!(Range, "maxdim {maxdim} exceeds the truncation of the inputs");
        }
        let mut triples = Vec::with_capacity(maxdim + 1);
        let mut index = Vec::with_capacity(maxdim + 1);
        let mut reps = Vec::with_capacity(maxdim + 1);
        for n in 0..=maxdim {
            let mut ts = Vec::new();
            for o in 0..c.object_count() {
                let ds = d.value(o).all_simplices(n);
                for xs in x.value(o).all_simplices(n) {
                    for ys in &ds {
                        ts.push((o, xs.clone(), ys.clone()));
                    }
                }
            }
            let idx: BTreeMap<Triple, usize> = ts.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
            let mut uf = UnionFind::new(ts.len());
            // (X(f)x, y) ~ (x, D(f)y) for f : s → t
            for f in 0..c.morphism_count() {
                let (s, t) = (c.source(f), c.target(f));
                let ds = d.value(s).all_simplices(n);
                for xs in x.value(t).all_simplices(n) {
                    let xf = x.arrow(f).apply(&xs);
                    for ys in &ds {
                        let left = idx[&(s, xf.clone(), ys.clone())];
                        let right = idx[&(t, xs.clone(), d.arrow(f).apply(ys))];
                        uf.union(left, right);
                    }
                }
            }
            reps.push((0..ts.len()).map(|i| uf.find(i)).collect());
            triples.push(ts);
            index.push(idx);
        }
        Ok(TensorModel {
            x,
            d,
            maxdim,
            triples,
            index,
            reps,
        })
    }

    /// Class of `(o, x, y)` in degree `n`.
    pub fn class_of(&self, n: usize, o: usize, x: &Simplex, y: &Simplex) -> Option<usize> {
        let i = *self.index.get(n)?.get(&(o, x.clone(), y.clone()))?;
        Some(self.reps[n][i])
    }

    fn rep(&self, n: usize, t: Triple) -> usize {
        self.reps[n][self.index[n][&t]]
    }
}

impl SimplicialModel for TensorModel<'_> {
    type Key = usize;

    fn maxdim(&self) -> usize {
        self.maxdim
    }

    fn simplices(&self, n: usize) -> Vec<usize> {
        let mut r: Vec<usize> = self.reps[n].clone();
        r.sort_unstable();
        r.dedup();
        r
    }

    fn face(&self, n: usize, i: usize, k: &usize) -> usize {
        let (o, x, y) = &self.triples[n][*k];
        let t = (*o, self.x.value(*o).face(i, x), self.d.value(*o).face(i, y));
        self.rep(n - 1, t)
    }

    fn degeneracy(&self, n: usize, j: usize, k: &usize) -> usize {
        let (o, x, y) = &self.triples[n][*k];
        let t = (*o, self.x.value(*o).degeneracy(j, x), self.d.value(*o).degeneracy(j, y));
        self.rep(n + 1, t)
    }
}

/// `X ⊗_C D`, the degree-wise coequalizer of `X(f) ⊗ id` and `id ⊗ D(f)`.
pub fn tensor_over_c(x: &Diagram, d: &Diagram, maxdim: usize) -> crate::Result<SimplicialSet> {
    Ok(realize(&TensorModel::new(x, d, maxdim)?).set)
}

/// Checks that `y ↦ [id_b ⊗ y]` is a bijection `D(b)_n → (C(−, b) ⊗_C D)_n`
/// in every degree, i.e. an isomorphism of simplicial sets.
pub fn co_yoneda_check(d: &Diagram, b: usize, maxdim: usize) -> crate::Result<bool> {
    let c = d.shape();
    if b >= c.object_count() {
        bail!(Range, "object {b} out of range");
    }
    let rep = Diagram::representable(c, b, maxdim);
    let model = TensorModel::new(&rep, d, maxdim)?;
    let id = c.hom(b, b).iter().position(|&f| f == c.identity(b)).unwrap();
    for n in 0..=maxdim {
        let idn = Simplex::with_word(0, id, (0..n).rev().collect());
        let mut hit: Vec<usize> = d
            .value(b)
            .all_simplices(n)
            .iter()
            .map(|y| model.class_of(n, b, &idn, y).unwrap())
            .collect();
        let total = hit.len();
        hit.sort_unstable();
        hit.dedup();
        if hit.len() != total || hit.len() != model.simplices(n).len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `hocolim D = B(*, C, C) ⊗_C D`. No cofibrant replacement is applied to
/// `D`: every simplicial set is cofibrant here.
pub fn hocolim(d: &Diagram, maxdim: usize) -> crate::Result<SimplicialSet> {
    let maxdim = maxdim.min(d.maxdim());
    let x = bar_star_cc(d.shape(), maxdim)?;
    tensor_over_c(&x, d, maxdim)
}

/// `B(*, C, D)`, which agrees with [`hocolim`] up to isomorphism.
pub fn bar_star_c_d(d: &Diagram, maxdim: usize) -> crate::Result<SimplicialSet> {
    let maxdim = maxdim.min(d.maxdim());
    let c = d.shape();
    two_sided_bar(&Diagram::point(&c.opposite(), maxdim), c, d, maxdim)
}
