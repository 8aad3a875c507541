use alloc::vec;
use alloc::vec::Vec;

use super::diagram::Diagram;
use super::map::SimplicialMap;
use crate::error::bail;
use crate::exactalg::{homology_all, Coefficients};
use crate::simplicial::{realize, FinCategory, Realized, Simplex, SimplicialModel, SimplicialSet};

/// An `n`-simplex of `B(X, C, Y)`: `x ∈ X(c_0)`, a chain
/// `c_0 ← c_1 ← ⋯ ← c_n` and `y ∈ Y(c_n)`, all in degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarKey {
    pub start: usize,
    pub x: Simplex,
    pub arrows: Vec<usize>,
    pub y: Simplex,
}

impl BarKey {
    /// `c_0, …, c_n`.
    pub fn objects(&self, c: &FinCategory) -> Vec<usize> {
        let mut objs = vec![self.start];
        objs.extend(self.arrows.iter().map(|&f| c.source(f)));
        objs
    }

    pub fn end(&self, c: &FinCategory) -> usize {
        self.arrows.last().map_or(self.start, |&f| c.source(f))
    }
}

/// The diagonal of the bisimplicial set `B(X, C, Y)`.
#[derive(Debug, Clone)]
pub struct BarModel<'a> {
    x: &'a Diagram,
    c: &'a FinCategory,
    y: &'a Diagram,
    maxdim: usize,
}

/// All composable `n`-chains (identities allowed) grouped by start object.
fn chains(c: &FinCategory, start: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut ends = vec![start];
    for _ in 0..n {
        let mut next = Vec::new();
        let mut next_ends = Vec::new();
        for (ch, &e) in out.iter().zip(&ends) {
            for f in 0..c.morphism_count() {
                if c.target(f) == e {
                    let mut v = ch.clone();
                    v.push(f);
                    next.push(v);
                    next_ends.push(c.source(f));
                }
            }
        }
        out = next;
        ends = next_ends;
    }
    out
}

impl<'a> BarModel<'a> {
    /// `x` is contravariant (a diagram over `c.opposite()`), `y` covariant.
    pub fn new(x: &'a Diagram, c: &'a FinCategory, y: &'a Diagram, maxdim: usize) -> crate::Result<Self> {
        if y.shape() != c || x.shape() != &c.opposite() {
            bail!(Precondition, "diagram shapes do not match the category");
        }
        if maxdim > x.maxdim().min(y.maxdim()) {
            bail!(Range, "maxdim {maxdim} exceeds the truncation of the inputs");
        }
        Ok(BarModel { x, c, y, maxdim })
    }

    pub fn category(&self) -> &FinCategory {
        self.c
    }
}

impl SimplicialModel for BarModel<'_> {
    type Key = BarKey;

    fn maxdim(&self) -> usize {
        self.maxdim
    }

    fn simplices(&self, n: usize) -> Vec<BarKey> {
        let mut out = Vec::new();
        for start in 0..self.c.object_count() {
            let xs = self.x.value(start).all_simplices(n);
            if xs.is_empty() {
                continue;
            }
            for ch in chains(self.c, start, n) {
                let end = ch.last().map_or(start, |&f| self.c.source(f));
                let ys = self.y.value(end).all_simplices(n);
                for x in &xs {
                    for y in &ys {
                        out.push(BarKey {
                            start,
                            x: x.clone(),
                            arrows: ch.clone(),
                            y: y.clone(),
                        });
                    }
                }
            }
        }
        out
    }

    fn face(&self, n: usize, i: usize, k: &BarKey) -> BarKey {
        let end = k.end(self.c);
        let xv = self.x.value(k.start);
        let yv = self.y.value(end);
        if i == 0 {
            let f1 = k.arrows[0];
            BarKey {
                start: self.c.source(f1),
                x: self.x.arrow(f1).apply(&xv.face(0, &k.x)),
                arrows: k.arrows[1..].to_vec(),
                y: yv.face(0, &k.y),
            }
        } else if i == n {
            let fname = k.arrows[n - 1];
            BarKey {
                start: k.start,
                x: xv.face(n, &k.x),
                arrows: k.arrows[..n - 1].to_vec(),
                y: self.y.arrow(fname).apply(&yv.face(n, &k.y)),
            }
        } else {
            let mut arrows = k.arrows[..i - 1].to_vec();
            arrows.push(self.c.compose(k.arrows[i - 1], k.arrows[i]).expect("composable chain"));
            arrows.extend_from_slice(&k.arrows[i + 1..]);
            BarKey {
                start: k.start,
                x: xv.face(i, &k.x),
                arrows,
                y: yv.face(i, &k.y),
            }
        }
    }

    fn degeneracy(&self, _n: usize, j: usize, k: &BarKey) -> BarKey {
        let objs = k.objects(self.c);
        let mut arrows = k.arrows.clone();
        arrows.insert(j, self.c.identity(objs[j]));
        BarKey {
            start: k.start,
            x: self.x.value(k.start).degeneracy(j, &k.x),
            arrows,
            y: self.y.value(objs[objs.len() - 1]).degeneracy(j, &k.y),
        }
    }
}

/// `B(X, C, Y)` truncated at `maxdim`.
pub fn two_sided_bar(x: &Diagram, c: &FinCategory, y: &Diagram, maxdim: usize) -> crate::Result<SimplicialSet> {
    Ok(realize(&BarModel::new(x, c, y, maxdim)?).set)
}

/// `EM = B(M, M, *)` for a one-object category.
pub fn em_bar(c: &FinCategory, maxdim: usize) -> crate::Result<SimplicialSet> {
    if c.object_count() != 1 {
        bail!(Precondition, "EM needs a one-object category");
    }
    let x = Diagram::representable(c, 0, maxdim);
    let y = Diagram::point(c, maxdim);
    two_sided_bar(&x, c, &y, maxdim)
}

/// Pushes a key-level map through two realizations.
fn induced<K: Ord + Clone>(src: &Realized<K>, tgt: &Realized<K>, f: impl Fn(&K) -> K) -> crate::Result<SimplicialMap> {
    let images = src
        .keys
        .iter()
        .enumerate()
        .map(|(n, ks)| {
            ks.iter()
                .map(|k| tgt.simplex_of(n, &f(k)).expect("induced map lands in the target"))
                .collect()
        })
        .collect();
    SimplicialMap::new(src.set.clone(), tgt.set.clone(), images)
}

fn relabel(s: &Simplex, gen: usize) -> Simplex {
    Simplex {
        gen_dim: s.gen_dim,
        gen,
        degen: s.degen.clone(),
    }
}

fn position(list: &[usize], f: usize) -> usize {
    list.iter().position(|&g| g == f).expect("morphism in hom-set")
}

/// `B(C, C, C)` as a diagram over `C × Cᵒᵖ`: the value at object
/// `b * |objects| + a` is `B(C(−, b), C, C(a, −))` and `(g, h)` acts by
/// `(f₀, …, f_{n+1}) ↦ (g∘f₀, f₁, …, f_{n+1}∘h)`.
pub fn bar_ccc(c: &FinCategory, maxdim: usize) -> crate::Result<Diagram> {
    let k = c.object_count();
    let reps: Vec<Diagram> = (0..k).map(|b| Diagram::representable(c, b, maxdim)).collect();
    let coreps: Vec<Diagram> = (0..k).map(|a| Diagram::corepresentable(c, a, maxdim)).collect();
    let mut models = Vec::with_capacity(k * k);
    for b in 0..k {
        for a in 0..k {
            models.push(BarModel::new(&reps[b], c, &coreps[a], maxdim)?);
        }
    }
    let realized: Vec<Realized<BarKey>> = models.iter().map(realize).collect();
    let shape = c.product(&c.opposite());
    let m = c.morphism_count();
    let mut arrows = Vec::with_capacity(m * m);
    for g in 0..m {
        for h in 0..m {
            let (b, b2) = (c.source(g), c.target(g));
            let (a, a2) = (c.target(h), c.source(h));
            let map = induced(&realized[b * k + a], &realized[b2 * k + a2], |key| {
                let end = key.end(c);
                let x = c.hom(key.start, b)[key.x.gen];
                let y = c.hom(a, end)[key.y.gen];
                let gx = c.compose(g, x).unwrap();
                let yh = c.compose(y, h).unwrap();
                BarKey {
                    start: key.start,
                    x: relabel(&key.x, position(&c.hom(key.start, b2), gx)),
                    arrows: key.arrows.clone(),
                    y: relabel(&key.y, position(&c.hom(a2, end), yh)),
                }
            })?;
            arrows.push(map);
        }
    }
    Diagram::new(shape, realized.into_iter().map(|r| r.set).collect(), arrows)
}

/// `B(*, C, C)` as a diagram over `Cᵒᵖ`: the value at `c` is
/// `B(*, C, C(c, −))`, and `h : c' → c` acts by precomposition.
pub fn bar_star_cc(c: &FinCategory, maxdim: usize) -> crate::Result<Diagram> {
    let k = c.object_count();
    let pt = Diagram::point(&c.opposite(), maxdim);
    let coreps: Vec<Diagram> = (0..k).map(|a| Diagram::corepresentable(c, a, maxdim)).collect();
    let models = coreps
        .iter()
        .map(|y| BarModel::new(&pt, c, y, maxdim))
        .collect::<crate::Result<Vec<_>>>()?;
    let realized: Vec<Realized<BarKey>> = models.iter().map(realize).collect();
    let mut arrows = Vec::with_capacity(c.morphism_count());
    for h in 0..c.morphism_count() {
        let (from, to) = (c.target(h), c.source(h));
        arrows.push(induced(&realized[from], &realized[to], |key| {
            let end = key.end(c);
            let y = c.hom(from, end)[key.y.gen];
            let yh = c.compose(y, h).unwrap();
            BarKey {
                start: key.start,
                x: key.x.clone(),
                arrows: key.arrows.clone(),
                y: relabel(&key.y, position(&c.hom(to, end), yh)),
            }
        })?);
    }
    Diagram::new(c.opposite(), realized.into_iter().map(|r| r.set).collect(), arrows)
}

/// One component of `δ`: `B(C, C, C)(b, a) → C(a, b)` (discrete), sending
/// a tuple to its composite.
#[derive(Debug, Clone)]
pub struct DeltaComponent {
    pub b: usize,
    pub a: usize,
    pub map: SimplicialMap,
}

impl DeltaComponent {
    /// `δ` is a bijection on path components and the source has no reduced
    /// homology below the truncation degree.
    pub fn is_equivalence(&self) -> bool {
        let pairs = self.map.on_components();
        let src: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let mut tgt: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        let mut src_dedup = src.clone();
        src_dedup.dedup();
        tgt.sort_unstable();
        tgt.dedup();
        let onto = tgt.len() == self.map.target().count(0);
        let injective = src_dedup.len() == pairs.len() && tgt.len() == pairs.len();
        let h = homology_all(&self.map.source().chains(), Coefficients::Integers);
        let top = self.map.source().maxdim();
        let acyclic = h[1..top].iter().all(|r| r.group().is_trivial());
        let h0 = h[0].group();
        onto && injective && acyclic && h0.rank == tgt.len() && h0.torsion.is_empty()
    }
}

/// `δ` at every pair of objects.
pub fn delta(c: &FinCategory, maxdim: usize) -> crate::Result<Vec<DeltaComponent>> {
    let k = c.object_count();
    let mut out = Vec::with_capacity(k * k);
    for b in 0..k {
        let rep = Diagram::representable(c, b, maxdim);
        for a in 0..k {
            let corep = Diagram::corepresentable(c, a, maxdim);
            let model = BarModel::new(&rep, c, &corep, maxdim)?;
            let r = realize(&model);
            let hom_ab = c.hom(a, b);
            let target = SimplicialSet::discrete(hom_ab.len(), maxdim);
            let images = r
                .keys
                .iter()
                .enumerate()
                .map(|(n, ks)| {
                    ks.iter()
                        .map(|key| {
                            let end = key.end(c);
                            let mut f = c.hom(key.start, b)[key.x.gen];
                            for &g in &key.arrows {
                                f = c.compose(f, g).unwrap();
                            }
                            f = c.compose(f, c.hom(a, end)[key.y.gen]).unwrap();
                            Simplex::with_word(0, position(&hom_ab, f), (0..n).rev().collect())
                        })
                        .collect()
                })
                .collect();
            out.push(DeltaComponent {
                b,
                a,
                map: SimplicialMap::new(r.set, target, images)?,
            });
        }
    }
    Ok(out)
}
