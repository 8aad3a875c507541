use alloc::vec::Vec;

use crate::error::bail;
use crate::exactalg::{homology_all, reduced_homology_all, AbelianGroup, Coefficients};
use crate::simplicial::{realize, smash_power, Simplex, SimplicialModel, SimplicialSet};

/// `J_L X`: words of at most `L` letters in each degree, letters being the
/// simplices of `X` other than the basepoint; face maps act letterwise and
/// drop letters that become the basepoint.
#[derive(Debug)]
pub struct JamesModel<'a> {
    x: &'a SimplicialSet,
    letters: usize,
    maxdim: usize,
}

impl<'a> JamesModel<'a> {
    pub fn new(x: &'a SimplicialSet, letters: usize, maxdim: usize) -> crate::Result<Self> {
        if x.basepoint().is_none() {
            bail!(Precondition, "the James construction needs a basepoint");
        }
        if x.is_semisimplicial() {
            bail!(Precondition, "the James construction needs degeneracies");
        }
        if maxdim > x.maxdim() {
            bail!(Range, "maxdim {maxdim} exceeds the truncation {} of X", x.maxdim());
        }
        Ok(JamesModel { x, letters, maxdim })
    }

    fn reduce(&self, w: Vec<Simplex>) -> Vec<Simplex> {
        w.into_iter().filter(|s| !self.x.is_base(s)).collect()
    }
}

impl SimplicialModel for JamesModel<'_> {
    type Key = Vec<Simplex>;

    fn maxdim(&self) -> usize {
        self.maxdim
    }

    fn simplices(&self, n: usize) -> Vec<Vec<Simplex>> {
        let letters: Vec<Simplex> = self.x.all_simplices(n).into_iter().filter(|s| !self.x.is_base(s)).collect();
        let mut out = alloc::vec![Vec::new()];
        let mut layer = alloc::vec![Vec::new()];
        for _ in 0..self.letters {
            let mut next = Vec::new();
            for w in &layer {
                for l in &letters {
                    let mut v: Vec<Simplex> = w.clone();
                    v.push(l.clone());
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    fn face(&self, _n: usize, i: usize, w: &Vec<Simplex>) -> Vec<Simplex> {
        self.reduce(w.iter().map(|s| self.x.face(i, s)).collect())
    }

    fn degeneracy(&self, _n: usize, i: usize, w: &Vec<Simplex>) -> Vec<Simplex> {
        w.iter().map(|s| self.x.degeneracy(i, s)).collect()
    }

    fn basepoint(&self) -> Option<Vec<Simplex>> {
        Some(Vec::new())
    }
}

/// The James filtration stage `J_L X` truncated at `maxdim`; `J_0 X` is a
/// point.
pub fn james(x: &SimplicialSet, letters: usize, maxdim: usize) -> crate::Result<SimplicialSet> {
    Ok(realize(&JamesModel::new(x, letters, maxdim)?).set)
}

/// Reduced homology of `X^∧k`, computed from the iterated smash product.
pub fn smash_power_oracle(x: &SimplicialSet, k: usize, maxdim: usize) -> crate::Result<Vec<AbelianGroup>> {
    if maxdim > x.maxdim() {
        bail!(Range, "maxdim {maxdim} exceeds the truncation {} of X", x.maxdim());
    }
    Ok(reduced_homology_all(&smash_power(&x.truncate(maxdim), k)?.chains()))
}

/// Rational Betti numbers of `J_L X` next to `Σ_{k ≤ L} dim H̃(X^∧k; ℚ)`,
/// in degrees `0 … maxdim − 1`.
pub fn james_rational_comparison(x: &SimplicialSet, letters: usize, maxdim: usize) -> crate::Result<(Vec<usize>, Vec<usize>)> {
    let j = james(x, letters, maxdim)?;
    let lhs: Vec<usize> = homology_all(&j.chains(), Coefficients::Rationals)
        .iter()
        .take(maxdim)
        .map(|h| h.betti)
        .collect();
    let mut rhs = alloc::vec![0; maxdim];
    for k in 0..=letters {
        let h = smash_power_oracle(x, k, maxdim)?;
        for (n, g) in h.iter().take(maxdim).enumerate() {
            rhs[n] += g.rank;
        }
    }
    Ok((lhs, rhs))
}
