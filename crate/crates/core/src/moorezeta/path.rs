use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::error::bail;
use crate::exactalg::Rat;

/// Values a piecewise-linear Moore path can take.
pub trait PathValue: Clone + PartialEq + Debug {
    type Ctx: ?Sized;

    /// The unique representative of the point this value names.
    fn canonical(&self, ctx: &Self::Ctx) -> Self;

    /// `self + λ (other − self)`; both ends must lie in one chart.
    fn lerp(&self, other: &Self, lambda: &Rat, ctx: &Self::Ctx) -> crate::Result<Self>;
}

/// A point of `ℚ^d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatPoint(pub Vec<Rat>);

impl RatPoint {
    pub fn origin(d: usize) -> Self {
        RatPoint(vec![Rat::zero(); d])
    }
}

impl PathValue for RatPoint {
    type Ctx = ();

    fn canonical(&self, _: &()) -> Self {
        self.clone()
    }

    fn lerp(&self, other: &Self, lambda: &Rat, _: &()) -> crate::Result<Self> {
        if self.0.len() != other.0.len() {
            bail!(Precondition, "points of different dimensions");
        }
        Ok(RatPoint(
            self.0.iter().zip(&other.0).map(|(a, b)| a + &(lambda * &(b - a))).collect(),
        ))
    }
}

/// A linear piece of positive duration. `from` and `to` share a chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment<V> {
    pub duration: Rat,
    pub from: V,
    pub to: V,
}

/// A Moore path: a start value followed by linear segments; its length is
/// the total duration, and it is constant at its end value afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoorePath<V> {
    start: V,
    segments: Vec<Segment<V>>,
}

impl<V: PathValue> MoorePath<V> {
    /// Validates positive durations and continuity across segments.
    pub fn new(start: V, segments: Vec<Segment<V>>, ctx: &V::Ctx) -> crate::Result<Self> {
        let mut prev = start.canonical(ctx);
        for (k, s) in segments.iter().enumerate() {
            if !s.duration.is_positive() {
                bail!(Range, "segment {k} has non-positive duration {}", s.duration);
            }
            if s.from.canonical(ctx) != prev {
                bail!(Precondition, "path jumps at the start of segment {k}");
            }
            s.from.lerp(&s.to, &Rat::half(), ctx)?;
            prev = s.to.canonical(ctx);
        }
        Ok(MoorePath { start, segments })
    }

    /// The path `(c, 0)`.
    pub fn constant(c: V) -> Self {
        MoorePath {
            start: c,
            segments: Vec::new(),
        }
    }

    /// Builds a path from `(time, value)` breakpoints starting at time 0.
    /// Two consecutive breakpoints at the same time switch charts.
    pub fn from_breakpoints(points: Vec<(Rat, V)>, ctx: &V::Ctx) -> crate::Result<Self> {
        let mut it = points.into_iter();
        let Some((t0, v0)) = it.next() else {
            bail!(Range, "a path needs at least one breakpoint");
        };
        if !t0.is_zero() {
            bail!(Range, "paths start at time 0");
        }
        let start = v0.clone();
        let (mut t, mut cur) = (t0, v0);
        let mut segments = Vec::new();
        for (time, v) in it {
            if time < t {
                bail!(Range, "breakpoint times must not decrease");
            }
            if time > t {
                segments.push(Segment {
                    duration: &time - &t,
                    from: cur,
                    to: v.clone(),
                });
            }
            t = time;
            cur = v;
        }
        MoorePath::new(start, segments, ctx)
    }

    pub fn start(&self) -> &V {
        &self.start
    }

    pub fn segments(&self) -> &[Segment<V>] {
        &self.segments
    }

    /// `l(w)`.
    pub fn length(&self) -> Rat {
        self.segments.iter().map(|s| s.duration.clone()).sum()
    }

    pub fn end(&self) -> &V {
        self.segments.last().map_or(&self.start, |s| &s.to)
    }

    /// Breakpoint times, `0` and the length included.
    pub fn times(&self) -> Vec<Rat> {
        let mut out = vec![Rat::zero()];
        let mut t = Rat::zero();
        for s in &self.segments {
            t = &t + &s.duration;
            out.push(t.clone());
        }
        out
    }

    /// `w(t)`, canonical; `w(t) = w(l(w))` for `t ≥ l(w)` and `w(0)` for
    /// negative `t`.
    pub fn value_at(&self, t: &Rat, ctx: &V::Ctx) -> V {
        if !t.is_positive() {
            return self.start.canonical(ctx);
        }
        let mut elapsed = Rat::zero();
        for s in &self.segments {
            let next = &elapsed + &s.duration;
            if *t <= next {
                let lambda = &(t - &elapsed) / &s.duration;
                return s
                    .from
                    .lerp(&s.to, &lambda, ctx)
                    .expect("segments are validated")
                    .canonical(ctx);
            }
            elapsed = next;
        }
        self.end().canonical(ctx)
    }

    /// Path addition; an operand of length 0 is a strict unit.
    pub fn add(&self, other: &Self, ctx: &V::Ctx) -> crate::Result<Self> {
        if self.end().canonical(ctx) != other.start.canonical(ctx) {
            bail!(Precondition, "paths do not meet");
        }
        if self.segments.is_empty() {
            return Ok(other.clone());
        }
        if other.segments.is_empty() {
            return Ok(self.clone());
        }
        let mut segments = self.segments.clone();
        segments.extend_from_slice(&other.segments);
        Ok(MoorePath {
            start: self.start.clone(),
            segments,
        })
    }

    /// Applies `f` to every stored value. `f` must be affine on charts.
    pub fn map_values<W: PathValue>(&self, f: impl Fn(&V) -> W) -> MoorePath<W> {
        MoorePath {
            start: f(&self.start),
            segments: self
                .segments
                .iter()
                .map(|s| Segment {
                    duration: s.duration.clone(),
                    from: f(&s.from),
                    to: f(&s.to),
                })
                .collect(),
        }
    }

    /// Pointwise equality as maps of `[0, ∞)`, decided from the union of
    /// both breakpoint sets plus two interior points of every piece.
    pub fn same_path(&self, other: &Self, ctx: &V::Ctx) -> bool {
        if self.length() != other.length() {
            return false;
        }
        let mut times = self.times();
        times.extend(other.times());
        times.sort();
        times.dedup();
        let third = Rat::new(1, 3).unwrap();
        let two_thirds = Rat::new(2, 3).unwrap();
        let mut probes = times.clone();
        for w in times.windows(2) {
            let gap = &w[1] - &w[0];
            probes.push(&w[0] + &(&gap * &third));
            probes.push(&w[0] + &(&gap * &two_thirds));
        }
        probes.iter().all(|t| self.value_at(t, ctx) == other.value_at(t, ctx))
    }
}

/// `ev((w₁,…,w_n), (t₀,…,t_n)) = (w₁+⋯+w_n)(Σᵢ tᵢ Σ_{j≤i} l(w_j))` for loops
/// at `base`.
pub fn ev<V: PathValue>(loops: &[MoorePath<V>], t: &[Rat], base: &V, ctx: &V::Ctx) -> crate::Result<V> {
    if t.len() != loops.len() + 1 {
        bail!(Range, "{} loops need {} coordinates", loops.len(), loops.len() + 1);
    }
    if t.iter().any(|x| x.is_negative()) || t.iter().cloned().sum::<Rat>() != Rat::one() {
        bail!(Range, "coordinates must be nonnegative and sum to 1");
    }
    let canonical_base = base.canonical(ctx);
    let mut total = MoorePath::constant(base.clone());
    for (k, w) in loops.iter().enumerate() {
        if w.start.canonical(ctx) != canonical_base || w.end().canonical(ctx) != canonical_base {
            bail!(Precondition, "path {k} is not a loop at the basepoint");
        }
        total = total.add(w, ctx)?;
    }
    let mut time = Rat::zero();
    let mut prefix = Rat::zero();
    for (i, w) in loops.iter().enumerate() {
        prefix = &prefix + &w.length();
        time = &time + &(&t[i + 1] * &prefix);
    }
    Ok(total.value_at(&time, ctx))
}

/// Compares `ev` at `t` (with `tᵢ = 0`) against `ev` of the `i`-th face:
/// `d₀` drops `w₁`, `d_n` drops `w_n`, inner faces add `wᵢ + wᵢ₊₁`.
pub fn ev_face_coherence<V: PathValue>(
    loops: &[MoorePath<V>],
    t: &[Rat],
    i: usize,
    base: &V,
    ctx: &V::Ctx,
) -> crate::Result<bool> {
    let n = loops.len();
    if i > n || t.len() != n + 1 {
        bail!(Range, "face index {i} out of range");
    }
    if !t[i].is_zero() {
        bail!(Precondition, "coordinate t_{i} = {} is not zero", t[i]);
    }
    let mut face: Vec<MoorePath<V>> = Vec::with_capacity(n.saturating_sub(1));
    if i == 0 {
        face.extend_from_slice(&loops[1..]);
    } else if i == n {
        face.extend_from_slice(&loops[..n - 1]);
    } else {
        face.extend_from_slice(&loops[..i - 1]);
        face.push(loops[i - 1].add(&loops[i], ctx)?);
        face.extend_from_slice(&loops[i + 1..]);
    }
    let mut s = t.to_vec();
    s.remove(i);
    Ok(ev(loops, t, base, ctx)? == ev(&face, &s, base, ctx)?)
}
