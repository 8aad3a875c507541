use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::simplicial::{FinMonoid, FinSemigroup};

/// The ground object of a W̄/W construction.
pub trait Semigroup {
    type Elem: Clone + Eq + Ord + Debug;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The two-sided unit, when there is one.
    fn unit(&self) -> Option<Self::Elem>;
    fn show(&self, a: &Self::Elem) -> String;

    fn product(&self, xs: &[Self::Elem]) -> Option<Self::Elem> {
        let mut it = xs.iter();
        let first = it.next().cloned().or_else(|| self.unit())?;
        Some(it.fold(first, |acc, x| self.mul(&acc, x)))
    }
}

impl Semigroup for FinSemigroup {
    type Elem = usize;

    fn mul(&self, a: &usize, b: &usize) -> usize {
        FinSemigroup::mul(self, *a, *b)
    }

    fn unit(&self) -> Option<usize> {
        None
    }

    fn show(&self, a: &usize) -> String {
        self.name(*a).to_string()
    }
}

impl Semigroup for FinMonoid {
    type Elem = usize;

    fn mul(&self, a: &usize, b: &usize) -> usize {
        FinMonoid::mul(self, *a, *b)
    }

    fn unit(&self) -> Option<usize> {
        Some(FinMonoid::unit(self))
    }

    fn show(&self, a: &usize) -> String {
        self.name(*a).to_string()
    }
}

/// The free monoid on named letters; an element is a word of letter names
/// and prints as `x·y`, the empty word as `e`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FreeMonoid;

impl Semigroup for FreeMonoid {
    type Elem = Vec<String>;

    fn mul(&self, a: &Vec<String>, b: &Vec<String>) -> Vec<String> {
        let mut w = a.clone();
        w.extend_from_slice(b);
        w
    }

    fn unit(&self) -> Option<Vec<String>> {
        Some(Vec::new())
    }

    fn show(&self, a: &Vec<String>) -> String {
        if a.is_empty() {
            "e".to_string()
        } else {
            a.join("·")
        }
    }
}
