use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::path::PathValue;
use crate::error::bail;
use crate::exactalg::Rat;
use crate::simplicial::FinMonoid;

/// A point of `|EM|` (with a leading slot) or `|BM|` (without): a simplex
/// `(x₀; x₁,…,x_n)` and barycentric coordinates `(u₀,…,u_n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EmChart {
    lead: Option<usize>,
    arrows: Vec<usize>,
    coords: Vec<Rat>,
}

impl EmChart {
    pub fn new(lead: Option<usize>, arrows: Vec<usize>, coords: Vec<Rat>, m: &FinMonoid) -> crate::Result<Self> {
        if coords.len() != arrows.len() + 1 {
            bail!(Range, "{} arrows need {} coordinates", arrows.len(), arrows.len() + 1);
        }
        if coords.iter().any(|u| u.is_negative()) || coords.iter().cloned().sum::<Rat>() != Rat::one() {
            bail!(Range, "coordinates must be nonnegative and sum to 1");
        }
        if lead.iter().chain(&arrows).any(|&x| x >= m.size()) {
            bail!(Range, "element index out of range");
        }
        Ok(EmChart { lead, arrows, coords })
    }

    /// The vertex `(x)` of `EM`.
    pub fn vertex(x: usize) -> Self {
        EmChart {
            lead: Some(x),
            arrows: Vec::new(),
            coords: vec![Rat::one()],
        }
    }

    /// The single vertex of `BM`.
    pub fn base() -> Self {
        EmChart {
            lead: None,
            arrows: Vec::new(),
            coords: vec![Rat::one()],
        }
    }

    pub fn lead(&self) -> Option<usize> {
        self.lead
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_vertex(&self, m: &FinMonoid) -> bool {
        self.canonical(m).arrows.is_empty()
    }

    /// `d_i` on the simplex.
    fn face(&mut self, i: usize, m: &FinMonoid) {
        let n = self.arrows.len();
        if i == 0 {
            let x1 = self.arrows.remove(0);
            if let Some(l) = self.lead.as_mut() {
                *l = m.mul(*l, x1);
            }
        } else if i == n {
            self.arrows.pop();
        } else {
            let y = self.arrows.remove(i);
            self.arrows[i - 1] = m.mul(self.arrows[i - 1], y);
        }
        self.coords.remove(i);
    }

    /// `em (x0;x1,…)@(u0,…)`, or `bm (x1,…)@(u0,…)` without a leading slot.
    pub fn display(&self, m: &FinMonoid) -> String {
        let names: Vec<&str> = self.arrows.iter().map(|&x| m.name(x)).collect();
        let coords: Vec<String> = self.coords.iter().map(|u| alloc::format!("{u}")).collect();
        match self.lead {
            Some(l) => alloc::format!("em ({};{})@({})", m.name(l), names.join(","), coords.join(",")),
            None => alloc::format!("bm ({})@({})", names.join(","), coords.join(",")),
        }
    }
}

impl PathValue for EmChart {
    type Ctx = FinMonoid;

    /// Removes zero coordinates through faces and unit arrows through
    /// degeneracies.
    fn canonical(&self, m: &FinMonoid) -> Self {
        let mut c = self.clone();
        loop {
            if let Some(i) = c.coords.iter().position(|u| u.is_zero()) {
                c.face(i, m);
                continue;
            }
            if let Some(k) = c.arrows.iter().position(|&x| x == m.unit()) {
                // arrow k + 1 is the identity: the simplex is s_k of a face
                c.arrows.remove(k);
                let u = c.coords.remove(k + 1);
                c.coords[k] = &c.coords[k] + &u;
                continue;
            }
            return c;
        }
    }

    fn lerp(&self, other: &Self, lambda: &Rat, _: &FinMonoid) -> crate::Result<Self> {
        if self.lead != other.lead || self.arrows != other.arrows {
            bail!(Precondition, "segment ends lie in different simplices");
        }
        Ok(EmChart {
            lead: self.lead,
            arrows: self.arrows.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + &(lambda * &(b - a)))
                .collect(),
        })
    }
}

/// `z · (x₀; x₁,…,x_n) = (z·x₀; x₁,…,x_n)`.
pub fn em_act(m: &FinMonoid, z: usize, p: &EmChart) -> crate::Result<EmChart> {
    let Some(l) = p.lead else {
        bail!(Precondition, "M acts on EM, not on BM");
    };
    Ok(EmChart {
        lead: Some(m.mul(z, l)),
        ..p.clone()
    })
}

/// `EM → BM`, forgetting the leading slot.
pub fn em_project(p: &EmChart) -> EmChart {
    EmChart {
        lead: None,
        ..p.clone()
    }
}
