use alloc::vec::Vec;

use super::em::{em_act, em_project, EmChart};
use super::path::{MoorePath, PathValue, Segment};
use crate::error::bail;
use crate::exactalg::Rat;
use crate::simplicial::FinMonoid;
use crate::wconstruct::{Mode, WTuple};

/// A Moore path in `|EM|` from the vertex `(e)` to a vertex `(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PemPath(MoorePath<EmChart>);

impl PemPath {
    pub fn new(m: &FinMonoid, path: MoorePath<EmChart>) -> crate::Result<Self> {
        if path.start().canonical(m) != EmChart::vertex(m.unit()) {
            bail!(Precondition, "path does not start at (e)");
        }
        let end = path.end().canonical(m);
        if end.lead().is_none() || !end.arrows().is_empty() {
            bail!(Precondition, "path does not end at a vertex of EM");
        }
        Ok(PemPath(path))
    }

    /// The zero-length path at `(e)`.
    pub fn unit(m: &FinMonoid) -> Self {
        PemPath(MoorePath::constant(EmChart::vertex(m.unit())))
    }

    pub fn path(&self) -> &MoorePath<EmChart> {
        &self.0
    }

    /// `π`: the endpoint in `M`.
    pub fn endpoint(&self, m: &FinMonoid) -> usize {
        self.0.end().canonical(m).lead().expect("ends in EM")
    }

    /// `w₁ ⊕ w₂ = w₁ + x·w₂` with `x = π(w₁)`.
    pub fn oplus(&self, other: &PemPath, m: &FinMonoid) -> crate::Result<PemPath> {
        let x = self.endpoint(m);
        let moved = other.0.map_values(|v| em_act(m, x, v).expect("EM values"));
        Ok(PemPath(self.0.add(&moved, m)?))
    }

    /// `ρ′`: the image loop in `|BM|`.
    pub fn project(&self) -> MoorePath<EmChart> {
        self.0.map_values(em_project)
    }
}

/// `ζ(x₀, t₁, …, t_n, x_n) = v₀ + ⋯ + v_n` inside the simplex
/// `(e; x₀, …, x_n)`. Piece `v_k` lasts `t_{k+1}` and at time `s` has
/// coordinates `u_r = (1−s)·t_r·∏_{j=r+1}^{k}(1−t_j)` for `r ≤ k`,
/// `u_{k+1} = s`, where `t₀ = t_{n+1} = 1`.
pub fn zeta(m: &FinMonoid, a: &WTuple<usize>) -> crate::Result<PemPath> {
    if a.mode() != Mode::Semigroup {
        bail!(Precondition, "ζ is defined on W̄M");
    }
    let n = a.len() - 1;
    let mut t: Vec<Rat> = Vec::with_capacity(n + 2);
    t.push(Rat::one());
    t.extend_from_slice(a.params());
    t.push(Rat::one());
    let lead = Some(m.unit());
    let arrows = a.entries().to_vec();
    let coords_at = |k: usize, s: &Rat| -> Vec<Rat> {
        let mut u = alloc::vec![Rat::zero(); n + 2];
        let one_minus_s = &Rat::one() - s;
        for r in 0..=k {
            let mut p = &one_minus_s * &t[r];
            for tj in &t[r + 1..=k] {
                p = &p * &(&Rat::one() - tj);
            }
            u[r] = p;
        }
        u[k + 1] = s.clone();
        u
    };
    let chart = |coords: Vec<Rat>| EmChart::new(lead, arrows.clone(), coords, m);
    let start = chart(coords_at(0, &Rat::zero()))?;
    let mut segments = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let d = t[k + 1].clone();
        segments.push(Segment {
            from: chart(coords_at(k, &Rat::zero()))?,
            to: chart(coords_at(k, &d))?,
            duration: d,
        });
    }
    PemPath::new(m, MoorePath::new(start, segments, m)?)
}
