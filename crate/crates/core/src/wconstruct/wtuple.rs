use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::ground::Semigroup;
use crate::error::bail;
use crate::exactalg::Rat;

/// Which relations are imposed: W̄ uses only the `t = 0` merge; W also
/// deletes unit entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Semigroup,
    Monoid,
}

/// A point `(x₀, t₁, x₁, …, t_n, x_n)` in normal form: no `tᵢ = 0` and, in
/// monoid mode, no unit entry. In monoid mode the empty tuple is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WTuple<E> {
    entries: Vec<E>,
    params: Vec<Rat>,
    mode: Mode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rewrite {
    Merge(usize),
    DropFirst,
    DropInterior(usize),
    DropLast,
    DropOnly,
}

fn applicable<G: Semigroup>(g: &G, e: &[G::Elem], t: &[Rat], mode: Mode) -> Vec<Rewrite> {
    let mut out = Vec::new();
    for (i, ti) in t.iter().enumerate() {
        if ti.is_zero() {
            out.push(Rewrite::Merge(i + 1));
        }
    }
    if mode == Mode::Monoid {
        if let Some(u) = g.unit() {
            let n = t.len();
            for (i, x) in e.iter().enumerate() {
                if *x != u {
                    continue;
                }
                out.push(if n == 0 {
                    Rewrite::DropOnly
                } else if i == 0 {
                    Rewrite::DropFirst
                } else if i == n {
                    Rewrite::DropLast
                } else {
                    Rewrite::DropInterior(i)
                });
            }
        }
    }
    out
}

fn apply<G: Semigroup>(g: &G, e: &mut Vec<G::Elem>, t: &mut Vec<Rat>, r: Rewrite) {
    match r {
        Rewrite::Merge(i) => {
            let y = e.remove(i);
            e[i - 1] = g.mul(&e[i - 1], &y);
            t.remove(i - 1);
        }
        Rewrite::DropFirst => {
            e.remove(0);
            t.remove(0);
        }
        Rewrite::DropInterior(i) => {
            e.remove(i);
            let right = t.remove(i);
            let left = core::mem::take(&mut t[i - 1]);
            t[i - 1] = left.max(right);
        }
        Rewrite::DropLast => {
            e.pop();
            t.pop();
        }
        Rewrite::DropOnly => {
            e.clear();
        }
    }
}

impl<E: Clone + Eq + Ord + core::fmt::Debug> WTuple<E> {
    /// Normal form with the leftmost applicable rewrite taken first.
    pub fn normalize<G: Semigroup<Elem = E>>(g: &G, entries: Vec<E>, params: Vec<Rat>, mode: Mode) -> crate::Result<Self> {
        Self::normalize_with(g, entries, params, mode, |_| 0)
    }

    /// Normal form where `choose(k)` picks which of the `k` currently
    /// applicable rewrites to perform.
    pub fn normalize_with<G: Semigroup<Elem = E>>(
        g: &G,
        mut entries: Vec<E>,
        mut params: Vec<Rat>,
        mode: Mode,
        mut choose: impl FnMut(usize) -> usize,
    ) -> crate::Result<Self> {
        if mode == Mode::Monoid && g.unit().is_none() {
            bail!(Precondition, "monoid mode needs a unit");
        }
        if entries.is_empty() {
            if mode == Mode::Semigroup || !params.is_empty() {
                bail!(Range, "a tuple needs at least one entry");
            }
            return Ok(WTuple { entries, params, mode });
        }
        if params.len() + 1 != entries.len() {
            bail!(Range, "{} entries need {} parameters, got {}", entries.len(), entries.len() - 1, params.len());
        }
        if let Some(t) = params.iter().find(|t| !t.in_unit_interval()) {
            bail!(Range, "parameter {t} outside [0, 1]");
        }
        loop {
            let rs = applicable(g, &entries, &params, mode);
            if rs.is_empty() {
                break;
            }
            let k = choose(rs.len()) % rs.len();
            apply(g, &mut entries, &mut params, rs[k]);
        }
        Ok(WTuple { entries, params, mode })
    }

    /// The unit `(e)` of monoid mode.
    pub fn unit() -> Self {
        WTuple {
            entries: Vec::new(),
            params: Vec::new(),
            mode: Mode::Monoid,
        }
    }

    /// `ι(x) = (x)`.
    pub fn iota<G: Semigroup<Elem = E>>(g: &G, x: E, mode: Mode) -> crate::Result<Self> {
        Self::normalize(g, vec![x], Vec::new(), mode)
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn params(&self) -> &[Rat] {
        &self.params
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_unit(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `a · b = (a, 1, b)`.
    pub fn wmul<G: Semigroup<Elem = E>>(&self, g: &G, other: &Self) -> crate::Result<Self> {
        if self.mode != other.mode {
            bail!(Precondition, "cannot multiply tuples of different modes");
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        let mut params = self.params.clone();
        params.push(Rat::one());
        params.extend_from_slice(&other.params);
        Self::normalize(g, entries, params, self.mode)
    }

    /// `ε`: the product of all entries.
    pub fn epsilon<G: Semigroup<Elem = E>>(&self, g: &G) -> E {
        g.product(&self.entries).expect("empty tuples only exist over monoids")
    }

    /// The homotopy `h_s`: every parameter scaled by `s`.
    pub fn shrink<G: Semigroup<Elem = E>>(&self, g: &G, s: &Rat) -> crate::Result<Self> {
        if !s.in_unit_interval() {
            bail!(Range, "shrink parameter {s} outside [0, 1]");
        }
        let params = self.params.iter().map(|t| t * s).collect();
        Self::normalize(g, self.entries.clone(), params, self.mode)
    }

    /// `ε′ : W̄M → WM`, imposing the unit relations.
    pub fn eps_prime<G: Semigroup<Elem = E>>(&self, g: &G) -> crate::Result<Self> {
        if self.mode != Mode::Semigroup {
            bail!(Precondition, "ε′ takes a W̄ tuple");
        }
        Self::normalize(g, self.entries.clone(), self.params.clone(), Mode::Monoid)
    }

    /// Applies a homomorphism entrywise.
    pub fn map_w<F, H: Semigroup>(&self, target: &H, f: F) -> crate::Result<WTuple<H::Elem>>
    where
        F: Fn(&E) -> H::Elem,
    {
        let entries = self.entries.iter().map(f).collect();
        WTuple::normalize(target, entries, self.params.clone(), self.mode)
    }

    /// `(x 1/2 y)`, with `(e)` for the unit.
    pub fn display<G: Semigroup<Elem = E>>(&self, g: &G) -> String {
        if self.entries.is_empty() {
            return String::from("(e)");
        }
        let mut s = String::from("(");
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                s.push(' ');
                s.push_str(&alloc::format!("{}", self.params[i - 1]));
                s.push(' ');
            }
            s.push_str(&g.show(x));
        }
        s.push(')');
        s
    }
}
