use alloc::format;
use alloc::string::{String, ToString};

use super::ground::Semigroup;
use crate::error::bail;
use crate::exactalg::Rat;
use crate::simplicial::FinMonoid;

/// An element of the whiskered monoid `VM`: a monoid element, or a point
/// `s ∈ [0, 1)` of the whisker. The whisker end `s = 1` is the unit of `M`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WhiskerElem {
    Monoid(usize),
    Whisker(Rat),
}

/// `VM = M ∪ [0, 1]` glued along `1 = e`, with unit `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiskerMonoid {
    m: FinMonoid,
}

impl WhiskerMonoid {
    pub fn new(m: FinMonoid) -> Self {
        WhiskerMonoid { m }
    }

    pub fn base(&self) -> &FinMonoid {
        &self.m
    }

    pub fn whisker(&self, s: Rat) -> crate::Result<WhiskerElem> {
        if s.is_negative() || s > Rat::one() {
            bail!(Range, "whisker coordinate {s} outside [0, 1]");
        }
        Ok(if s.is_one() {
            WhiskerElem::Monoid(self.m.unit())
        } else {
            WhiskerElem::Whisker(s)
        })
    }

    pub fn mul(&self, u: &WhiskerElem, v: &WhiskerElem) -> WhiskerElem {
        match (u, v) {
            (WhiskerElem::Monoid(x), WhiskerElem::Monoid(y)) => WhiskerElem::Monoid(self.m.mul(*x, *y)),
            (WhiskerElem::Monoid(x), WhiskerElem::Whisker(_)) => WhiskerElem::Monoid(*x),
            (WhiskerElem::Whisker(_), WhiskerElem::Monoid(y)) => WhiskerElem::Monoid(*y),
            (WhiskerElem::Whisker(s), WhiskerElem::Whisker(t)) => WhiskerElem::Whisker(s.clone().max(t.clone())),
        }
    }

    pub fn unit(&self) -> WhiskerElem {
        WhiskerElem::Whisker(Rat::zero())
    }

    /// `q : VM → M`, collapsing the whisker to `e`.
    pub fn collapse(&self, u: &WhiskerElem) -> usize {
        match u {
            WhiskerElem::Monoid(x) => *x,
            WhiskerElem::Whisker(_) => self.m.unit(),
        }
    }
}

impl Semigroup for WhiskerMonoid {
    type Elem = WhiskerElem;

    fn mul(&self, a: &WhiskerElem, b: &WhiskerElem) -> WhiskerElem {
        WhiskerMonoid::mul(self, a, b)
    }

    fn unit(&self) -> Option<WhiskerElem> {
        Some(WhiskerMonoid::unit(self))
    }

    fn show(&self, a: &WhiskerElem) -> String {
        match a {
            WhiskerElem::Monoid(x) => self.m.name(*x).to_string(),
            WhiskerElem::Whisker(s) => format!("w{s}"),
        }
    }
}
