//! Products, wedges, smash products and reduced suspensions.

use alloc::vec::Vec;

use super::sset::{realize, Simplex, SimplicialModel, SimplicialSet};
use crate::error::bail;

struct Product<'a> {
    x: &'a SimplicialSet,
    y: &'a SimplicialSet,
    maxdim: usize,
}

impl SimplicialModel for Product<'_> {
    type Key = (Simplex, Simplex);

    fn maxdim(&self) -> usize {
        self.maxdim
    }

    fn simplices(&self, n: usize) -> Vec<Self::Key> {
        let ys = self.y.all_simplices(n);
        let mut out = Vec::new();
        for a in self.x.all_simplices(n) {
            for b in &ys {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    fn face(&self, _n: usize, i: usize, (a, b): &Self::Key) -> Self::Key {
        (self.x.face(i, a), self.y.face(i, b))
    }

    fn degeneracy(&self, _n: usize, i: usize, (a, b): &Self::Key) -> Self::Key {
        (self.x.degeneracy(i, a), self.y.degeneracy(i, b))
    }

    fn basepoint(&self) -> Option<Self::Key> {
        Some((self.x.base_simplex(0)?, self.y.base_simplex(0)?))
    }
}

fn simplicial_only(x: &SimplicialSet) -> crate::Result<()> {
    if x.is_semisimplicial() {
        bail!(Precondition, "operation needs degeneracies; got a semisimplicial set");
    }
    Ok(())
}

fn based(x: &SimplicialSet) -> crate::Result<()> {
    if x.basepoint().is_none() {
        bail!(Precondition, "operation needs a based simplicial set");
    }
    Ok(())
}

/// `X × Y`, truncated at the smaller of the two dimensions.
pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> crate::Result<SimplicialSet> {
    simplicial_only(x)?;
    simplicial_only(y)?;
    let model = Product {
        x,
        y,
        maxdim: x.maxdim().min(y.maxdim()),
    };
    Ok(realize(&model).set)
}

/// `X ∧ Y = X × Y / X ∨ Y`. In the key, `None` is the collapsed basepoint.
struct Smash<'a>(Product<'a>);

impl Smash<'_> {
    fn collapse(&self, k: (Simplex, Simplex)) -> Option<(Simplex, Simplex)> {
        if self.0.x.is_base(&k.0) || self.0.y.is_base(&k.1) {
            None
        } else {
            Some(k)
        }
    }
}

impl SimplicialModel for Smash<'_> {
    type Key = Option<(Simplex, Simplex)>;

    fn maxdim(&self) -> usize {
        self.0.maxdim
    }

    fn simplices(&self, n: usize) -> Vec<Self::Key> {
        let mut out = Vec::from([None]);
        out.extend(self.0.simplices(n).into_iter().filter_map(|k| self.collapse(k).map(Some)));
        out
    }

    fn face(&self, n: usize, i: usize, k: &Self::Key) -> Self::Key {
        k.as_ref().and_then(|k| self.collapse(self.0.face(n, i, k)))
    }

    fn degeneracy(&self, n: usize, i: usize, k: &Self::Key) -> Self::Key {
        k.as_ref().map(|k| self.0.degeneracy(n, i, k))
    }

    fn basepoint(&self) -> Option<Self::Key> {
        Some(None)
    }
}

/// The smash product of two based simplicial sets.
pub fn smash(x: &SimplicialSet, y: &SimplicialSet) -> crate::Result<SimplicialSet> {
    simplicial_only(x)?;
    simplicial_only(y)?;
    based(x)?;
    based(y)?;
    let model = Smash(Product {
        x,
        y,
        maxdim: x.maxdim().min(y.maxdim()),
    });
    Ok(realize(&model).set)
}

/// `X^∧k`; `X^∧0` is `S⁰`.
pub fn smash_power(x: &SimplicialSet, k: usize) -> crate::Result<SimplicialSet> {
    based(x)?;
    if k == 0 {
        return Ok(SimplicialSet::s0(x.maxdim()));
    }
    let mut acc = x.clone();
    for _ in 1..k {
        acc = smash(&acc, x)?;
    }
    Ok(acc)
}

/// Reduced suspension `S¹ ∧ X`.
pub fn suspension(x: &SimplicialSet) -> crate::Result<SimplicialSet> {
    based(x)?;
    smash(&SimplicialSet::circle(x.maxdim()), x)
}

struct Wedge<'a> {
    x: &'a SimplicialSet,
    y: &'a SimplicialSet,
}

impl Wedge<'_> {
    /// Basepoint simplices live on the left.
    fn left(&self, s: Simplex) -> (bool, Simplex) {
        (false, s)
    }

    fn right(&self, s: Simplex) -> (bool, Simplex) {
        if self.y.is_base(&s) {
            (false, Simplex::with_word(0, self.x.basepoint().unwrap(), s.degen))
        } else {
            (true, s)
        }
    }
}

impl SimplicialModel for Wedge<'_> {
    type Key = (bool, Simplex);

    fn maxdim(&self) -> usize {
        self.x.maxdim().min(self.y.maxdim())
    }

    fn simplices(&self, n: usize) -> Vec<Self::Key> {
        let mut out: Vec<_> = self.x.all_simplices(n).into_iter().map(|s| self.left(s)).collect();
        out.extend(self.y.all_simplices(n).into_iter().filter(|s| !self.y.is_base(s)).map(|s| (true, s)));
        out
    }

    fn face(&self, _n: usize, i: usize, (side, s): &Self::Key) -> Self::Key {
        if *side {
            self.right(self.y.face(i, s))
        } else {
            self.left(self.x.face(i, s))
        }
    }

    fn degeneracy(&self, _n: usize, i: usize, (side, s): &Self::Key) -> Self::Key {
        if *side {
            (true, self.y.degeneracy(i, s))
        } else {
            (false, self.x.degeneracy(i, s))
        }
    }

    fn basepoint(&self) -> Option<Self::Key> {
        Some((false, self.x.base_simplex(0)?))
    }
}

/// `X ∨ Y`, glued at the basepoints.
pub fn wedge(x: &SimplicialSet, y: &SimplicialSet) -> crate::Result<SimplicialSet> {
    simplicial_only(x)?;
    simplicial_only(y)?;
    based(x)?;
    based(y)?;
    Ok(realize(&Wedge { x, y }).set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{reduced_homology_all, AbelianGroup};
    use crate::simplicial::{nerve, FinMonoid};

    fn reduced(x: &SimplicialSet) -> Vec<AbelianGroup> {
        reduced_homology_all(&x.chains())
    }

    #[test]
    fn torus_homology() {
        let s1 = SimplicialSet::circle(3);
        let t = product(&s1, &s1).unwrap();
        assert_eq!(t.counts()[..3], [1, 3, 2]);
        let h = reduced(&t);
        assert_eq!(h[1], AbelianGroup::free(2));
        assert_eq!(h[2], AbelianGroup::free(1));
    }

    #[test]
    fn suspensions_shift_degree() {
        let s1 = suspension(&SimplicialSet::s0(3)).unwrap();
        let h = reduced(&s1);
        assert_eq!(h[1], AbelianGroup::free(1));
        assert!(h[0].is_trivial() && h[2].is_trivial());

        let p = suspension(&SimplicialSet::point(3)).unwrap();
        assert!(reduced(&p).iter().all(|g| g.is_trivial()));

        let s2 = suspension(&SimplicialSet::circle(3)).unwrap();
        let h = reduced(&s2);
        assert_eq!(h[2], AbelianGroup::free(1));
        assert!(h[1].is_trivial());
    }

    #[test]
    fn suspension_of_bz2() {
        let x = nerve(&FinMonoid::cyclic(2), 4);
        let hx = reduced(&x);
        let hs = reduced(&suspension(&x).unwrap());
        for n in 1..4 {
            assert_eq!(hs[n], hx[n - 1], "degree {n}");
        }
    }

    #[test]
    fn smash_powers_of_circle() {
        let s1 = SimplicialSet::circle(4);
        for k in 1..=3 {
            let h = reduced(&smash_power(&s1, k).unwrap());
            for n in 0..4 {
                let expect = if n == k { AbelianGroup::free(1) } else { AbelianGroup::trivial() };
                assert_eq!(h[n], expect, "(S¹)^∧{k} in degree {n}");
            }
        }
    }

    #[test]
    fn wedge_of_circles() {
        let s1 = SimplicialSet::circle(2);
        let h = reduced(&wedge(&s1, &s1).unwrap());
        assert_eq!(h[1], AbelianGroup::free(2));
    }

    #[test]
    fn unbased_inputs_are_rejected() {
        let x = SimplicialSet::discrete(0, 2);
        assert!(suspension(&x).is_err());
    }
}
