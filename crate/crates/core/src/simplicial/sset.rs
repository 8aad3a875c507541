//! Simplicial and semisimplicial sets presented by nondegenerate generators.
//!
//! Every simplex is written uniquely as `s_{i₁} ⋯ s_{i_k} y` with
//! `i₁ > ⋯ > i_k` and `y` a nondegenerate generator. Face tables are stored
//! for generators only; faces of degenerate simplices follow from the
//! simplicial identities.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::bail;
use crate::exactalg::{ChainComplex, IntMatrix};
use crate::unionfind::UnionFind;

/// A simplex in normal form: a strictly decreasing degeneracy word applied to
/// generator `gen` of degree `gen_dim`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub gen_dim: usize,
    pub gen: usize,
    pub degen: Vec<usize>,
}

impl Simplex {
    pub fn generator(gen_dim: usize, gen: usize) -> Self {
        Simplex {
            gen_dim,
            gen,
            degen: Vec::new(),
        }
    }

    /// Applies the word (leftmost operator last) and normalizes.
    pub fn with_word(gen_dim: usize, gen: usize, word: Vec<usize>) -> Self {
        Simplex {
            gen_dim,
            gen,
            degen: normalize_word(word),
        }
    }

    pub fn dim(&self) -> usize {
        self.gen_dim + self.degen.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degen.is_empty()
    }

    /// `s_{word} ∘ self`, normalized.
    pub fn degenerate_by(&self, word: &[usize]) -> Simplex {
        let mut w = word.to_vec();
        w.extend_from_slice(&self.degen);
        Simplex::with_word(self.gen_dim, self.gen, w)
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.degen {
            write!(f, "s{i}")?;
        }
        if !self.degen.is_empty() {
            write!(f, " ")?;
        }
        write!(f, "{}/{}", self.gen_dim, self.gen)
    }
}

/// Rewrites a degeneracy word into strictly decreasing form using
/// `s_i s_j = s_{j+1} s_i` for `i ≤ j`.
pub fn normalize_word(mut w: Vec<usize>) -> Vec<usize> {
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..w.len().saturating_sub(1) {
            if w[k] <= w[k + 1] {
                let (i, j) = (w[k], w[k + 1]);
                w[k] = j + 1;
                w[k + 1] = i;
                changed = true;
            }
        }
    }
    w
}

/// A finite-per-degree simplicial set truncated at `maxdim`, or a
/// semisimplicial set when `semisimplicial` is set (then no degeneracies
/// exist and face images are always generators).
///
/// Homology read off a truncated set is only meaningful in degrees
/// `≤ maxdim - 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    maxdim: usize,
    counts: Vec<usize>,
    faces: Vec<Vec<Vec<Simplex>>>,
    basepoint: Option<usize>,
    semisimplicial: bool,
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("maxdim", &self.maxdim)
            .field("counts", &self.counts)
            .field("basepoint", &self.basepoint)
            .field("semisimplicial", &self.semisimplicial)
            .finish()
    }
}

impl SimplicialSet {
    /// `faces[n][g]` lists `d_0 g, …, d_n g` for every generator `g` of
    /// degree `n ≥ 1`; `faces[0]` must be empty per generator.
    pub fn new(
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<Simplex>>>,
        basepoint: Option<usize>,
        semisimplicial: bool,
    ) -> crate::Result<Self> {
        if counts.is_empty() {
            bail!(Range, "need at least degree 0");
        }
        let maxdim = counts.len() - 1;
        if faces.len() != counts.len() {
            bail!(Range, "face table has {} degrees, expected {}", faces.len(), counts.len());
        }
        if let Some(b) = basepoint {
            if b >= counts[0] {
                bail!(Range, "basepoint {b} is not a vertex");
            }
        }
        for n in 0..=maxdim {
            if faces[n].len() != counts[n] {
                bail!(Range, "degree {n}: {} face rows for {} generators", faces[n].len(), counts[n]);
            }
            for (g, fs) in faces[n].iter().enumerate() {
                let expected = if n == 0 { 0 } else { n + 1 };
                if fs.len() != expected {
                    bail!(Range, "generator {n}/{g} has {} faces, expected {expected}", fs.len());
                }
                for s in fs {
                    if s.dim() + 1 != n || s.gen >= counts[s.gen_dim] {
                        bail!(Range, "generator {n}/{g} has an ill-formed face {s:?}");
                    }
                    if semisimplicial && s.is_degenerate() {
                        bail!(Range, "semisimplicial face {s:?} carries degeneracies");
                    }
                    if normalize_word(s.degen.clone()) != s.degen
                        || s.degen.first().is_some_and(|&i| i >= s.dim())
                    {
                        bail!(Range, "face {s:?} is not in normal form");
                    }
                }
            }
        }
        let set = SimplicialSet {
            maxdim,
            counts,
            faces,
            basepoint,
            semisimplicial,
        };
        set.validate()?;
        Ok(set)
    }

    /// `k` points, nothing above degree 0.
    pub fn discrete(k: usize, maxdim: usize) -> Self {
        let mut counts = vec![0; maxdim + 1];
        counts[0] = k;
        let faces = counts.iter().map(|&c| vec![Vec::new(); c]).collect();
        SimplicialSet {
            maxdim,
            counts,
            faces,
            basepoint: if k > 0 { Some(0) } else { None },
            semisimplicial: false,
        }
    }

    pub fn point(maxdim: usize) -> Self {
        SimplicialSet::discrete(1, maxdim)
    }

    /// `S⁰`: two vertices, based at the first.
    pub fn s0(maxdim: usize) -> Self {
        SimplicialSet::discrete(2, maxdim)
    }

    /// `Δ^n/∂Δ^n` for `n ≥ 1`: the base vertex and one `n`-cell.
    pub fn sphere(n: usize, maxdim: usize) -> Self {
        if n == 0 {
            return SimplicialSet::s0(maxdim);
        }
        let mut counts = vec![0; maxdim + 1];
        counts[0] = 1;
        let mut faces: Vec<Vec<Vec<Simplex>>> = vec![Vec::new(); maxdim + 1];
        faces[0] = vec![Vec::new()];
        if n <= maxdim {
            counts[n] = 1;
            let base = Simplex::with_word(0, 0, (0..n - 1).rev().collect());
            faces[n] = vec![vec![base; n + 1]];
        }
        SimplicialSet {
            maxdim,
            counts,
            faces,
            basepoint: Some(0),
            semisimplicial: false,
        }
    }

    /// One vertex and one edge with both faces at the vertex.
    pub fn circle(maxdim: usize) -> Self {
        SimplicialSet::sphere(1, maxdim.max(1))
    }

    pub fn maxdim(&self) -> usize {
        self.maxdim
    }

    pub fn count(&self, n: usize) -> usize {
        self.counts.get(n).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn with_basepoint(mut self, b: usize) -> crate::Result<Self> {
        if b >= self.count(0) {
            bail!(Range, "basepoint {b} is not a vertex");
        }
        self.basepoint = Some(b);
        Ok(self)
    }

    pub fn is_semisimplicial(&self) -> bool {
        self.semisimplicial
    }

    /// Faces `d_0 … d_n` of generator `g` in degree `n ≥ 1`.
    pub fn generator_faces(&self, n: usize, g: usize) -> &[Simplex] {
        &self.faces[n][g]
    }

    /// The fully degenerate basepoint in degree `n`.
    pub fn base_simplex(&self, n: usize) -> Option<Simplex> {
        self.basepoint
            .map(|b| Simplex::with_word(0, b, (0..n).rev().collect()))
    }

    pub fn is_base(&self, x: &Simplex) -> bool {
        x.gen_dim == 0 && Some(x.gen) == self.basepoint
    }

    /// `d_i x`.
    pub fn face(&self, i: usize, x: &Simplex) -> Simplex {
        let n = x.dim();
        assert!(n >= 1 && i <= n, "face d_{i} of a {n}-simplex");
        let mut prefix: Vec<usize> = Vec::new();
        let mut i = i;
        for (k, &j) in x.degen.iter().enumerate() {
            if i < j {
                prefix.push(j - 1);
            } else if i == j || i == j + 1 {
                // d_i s_i = d_{i+1} s_i = id
                prefix.extend_from_slice(&x.degen[k + 1..]);
                return Simplex::with_word(x.gen_dim, x.gen, prefix);
            } else {
                prefix.push(j);
                i -= 1;
            }
        }
        let f = &self.faces[x.gen_dim][x.gen][i];
        prefix.extend_from_slice(&f.degen);
        Simplex::with_word(f.gen_dim, f.gen, prefix)
    }

    /// `s_i x`. Panics on semisimplicial sets.
    pub fn degeneracy(&self, i: usize, x: &Simplex) -> Simplex {
        assert!(!self.semisimplicial, "semisimplicial sets have no degeneracies");
        assert!(i <= x.dim(), "s_{i} of a {}-simplex", x.dim());
        x.degenerate_by(&[i])
    }

    /// Every simplex of degree `n`, in sorted order.
    pub fn all_simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        let lowest = if self.semisimplicial { n } else { 0 };
        for m in lowest..=n.min(self.maxdim) {
            let k = n - m;
            let words = decreasing_subsets(n, k);
            for g in 0..self.count(m) {
                for w in &words {
                    out.push(Simplex {
                        gen_dim: m,
                        gen: g,
                        degen: w.clone(),
                    });
                }
            }
        }
        out.sort();
        out
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every generator.
    pub fn validate(&self) -> crate::Result<()> {
        for n in 2..=self.maxdim {
            for g in 0..self.counts[n] {
                let x = Simplex::generator(n, g);
                for j in 1..=n {
                    let dj = self.face(j, &x);
                    for i in 0..j {
                        let lhs = self.face(i, &dj);
                        let rhs = self.face(j - 1, &self.face(i, &x));
                        if lhs != rhs {
                            bail!(Validation, "d_{i} d_{j} ≠ d_{} d_{i} on generator {n}/{g}", j - 1);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Normalized chains (unnormalized for semisimplicial sets, which is the
    /// same thing since every simplex is a generator).
    pub fn chains(&self) -> ChainComplex {
        let mut boundaries = Vec::with_capacity(self.maxdim);
        for n in 1..=self.maxdim {
            let mut m = IntMatrix::zeros(self.counts[n - 1], self.counts[n]);
            for g in 0..self.counts[n] {
                for (i, f) in self.faces[n][g].iter().enumerate() {
                    if f.is_degenerate() {
                        continue;
                    }
                    let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                    m.add_to(f.gen, g, &sign);
                }
            }
            boundaries.push(m);
        }
        ChainComplex::new(self.counts.clone(), boundaries).expect("simplicial identities imply ∂∂ = 0")
    }

    /// Path component of every vertex (least vertex index labels a component).
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.count(0));
        if self.maxdim >= 1 {
            for fs in &self.faces[1] {
                uf.union(fs[0].gen, fs[1].gen);
            }
        }
        (0..self.count(0)).map(|v| uf.find(v)).collect()
    }

    /// Restriction to degrees `≤ d`.
    pub fn truncate(&self, d: usize) -> SimplicialSet {
        let d = d.min(self.maxdim);
        SimplicialSet {
            maxdim: d,
            counts: self.counts[..=d].to_vec(),
            faces: self.faces[..=d].to_vec(),
            basepoint: self.basepoint,
            semisimplicial: self.semisimplicial,
        }
    }
}

/// All strictly decreasing sequences of length `k` drawn from `0..n`.
pub fn decreasing_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(upper: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in (k - 1..upper).rev() {
            cur.push(i);
            go(i, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// A simplicial set described degree by degree through all of its
/// simplices. [`realize`] turns such a description into a [`SimplicialSet`]
/// by detecting degenerate simplices.
pub trait SimplicialModel {
    type Key: Ord + Clone;

    fn maxdim(&self) -> usize;
    /// All simplices of degree `n`, without repetition.
    fn simplices(&self, n: usize) -> Vec<Self::Key>;
    fn face(&self, n: usize, i: usize, x: &Self::Key) -> Self::Key;
    fn degeneracy(&self, n: usize, i: usize, x: &Self::Key) -> Self::Key;
    /// A degree-0 key to use as basepoint.
    fn basepoint(&self) -> Option<Self::Key> {
        None
    }
}

/// A realized model: the simplicial set plus the key of every generator.
#[derive(Debug, Clone)]
pub struct Realized<K> {
    pub set: SimplicialSet,
    pub keys: Vec<Vec<K>>,
    pub index: Vec<BTreeMap<K, usize>>,
    split: Vec<BTreeMap<K, (usize, K)>>,
}

impl<K: Ord + Clone> Realized<K> {
    pub fn generator_of(&self, n: usize, key: &K) -> Option<usize> {
        self.index[n].get(key).copied()
    }

    /// Normal form of any listed degree-`n` key.
    pub fn simplex_of(&self, n: usize, key: &K) -> Option<Simplex> {
        let mut word = Vec::new();
        let mut cur = key;
        let mut m = n;
        while let Some((j, y)) = self.split.get(m)?.get(cur) {
            word.push(*j);
            cur = y;
            m -= 1;
        }
        let gen = *self.index[m].get(cur)?;
        Some(Simplex {
            gen_dim: m,
            gen,
            degen: word,
        })
    }

    /// The key of a simplex, obtained by applying its degeneracies to its
    /// generator.
    pub fn key_of<M: SimplicialModel<Key = K>>(&self, model: &M, x: &Simplex) -> K {
        let mut k = self.keys[x.gen_dim][x.gen].clone();
        let mut n = x.gen_dim;
        for &j in x.degen.iter().rev() {
            k = model.degeneracy(n, j, &k);
            n += 1;
        }
        k
    }
}

/// Builds the generator presentation of a model. A simplex `x` of degree
/// `n` is degenerate iff `x = s_j d_j x` for some `j`; the set of such `j`
/// is exactly its degeneracy index set, which yields the normal form.
pub fn realize<M: SimplicialModel>(model: &M) -> Realized<M::Key> {
    let d = model.maxdim();
    let mut keys: Vec<Vec<M::Key>> = Vec::with_capacity(d + 1);
    let mut index: Vec<BTreeMap<M::Key, usize>> = Vec::with_capacity(d + 1);
    // degenerate keys of degree n: (largest j, d_j x)
    let mut split: Vec<BTreeMap<M::Key, (usize, M::Key)>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut gens = Vec::new();
        let mut idx = BTreeMap::new();
        let mut sp = BTreeMap::new();
        for x in model.simplices(n) {
            let mut found = None;
            if n >= 1 {
                for j in (0..n).rev() {
                    let y = model.face(n, j, &x);
                    if model.degeneracy(n - 1, j, &y) == x {
                        found = Some((j, y));
                        break;
                    }
                }
            }
            match found {
                Some(p) => {
                    sp.insert(x, p);
                }
                None => {
                    idx.insert(x.clone(), gens.len());
                    gens.push(x);
                }
            }
        }
        keys.push(gens);
        index.push(idx);
        split.push(sp);
    }
    let mut out = Realized {
        set: SimplicialSet::point(0),
        keys,
        index,
        split,
    };
    let normal = |n: usize, x: &M::Key| -> Simplex {
        out.simplex_of(n, x)
            .expect("model face maps must land in listed simplices")
    };
    let mut faces: Vec<Vec<Vec<Simplex>>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut fs = Vec::with_capacity(out.keys[n].len());
        for x in &out.keys[n] {
            if n == 0 {
                fs.push(Vec::new());
            } else {
                fs.push((0..=n).map(|i| normal(n - 1, &model.face(n, i, x))).collect());
            }
        }
        faces.push(fs);
    }
    let basepoint = model.basepoint().and_then(|b| out.index[0].get(&b).copied());
    out.set = SimplicialSet {
        maxdim: d,
        counts: out.keys.iter().map(|k| k.len()).collect(),
        faces,
        basepoint,
        semisimplicial: false,
    };
    out
}

impl SimplicialModel for SimplicialSet {
    type Key = Simplex;

    fn maxdim(&self) -> usize {
        self.maxdim
    }

    fn simplices(&self, n: usize) -> Vec<Simplex> {
        self.all_simplices(n)
    }

    fn face(&self, _n: usize, i: usize, x: &Simplex) -> Simplex {
        SimplicialSet::face(self, i, x)
    }

    fn degeneracy(&self, _n: usize, i: usize, x: &Simplex) -> Simplex {
        SimplicialSet::degeneracy(self, i, x)
    }

    fn basepoint(&self) -> Option<Simplex> {
        self.basepoint.map(|b| Simplex::generator(0, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{homology_all, Coefficients};

    #[test]
    fn word_normalization() {
        assert_eq!(normalize_word(vec![0, 0]), vec![1, 0]);
        assert_eq!(normalize_word(vec![0, 1]), vec![2, 0]);
        assert_eq!(normalize_word(vec![2, 0]), vec![2, 0]);
        assert_eq!(normalize_word(vec![0, 0, 0]), vec![2, 1, 0]);
    }

    #[test]
    fn decreasing_subset_counts() {
        assert_eq!(decreasing_subsets(4, 2).len(), 6);
        assert_eq!(decreasing_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(decreasing_subsets(2, 3).is_empty());
    }

    #[test]
    fn point_and_circle_chains() {
        let p = SimplicialSet::point(3);
        assert_eq!(p.chains().dims(), &[1, 0, 0, 0]);
        let c = SimplicialSet::circle(1);
        let ch = c.chains();
        assert_eq!(ch.dims(), &[1, 1]);
        assert!(ch.boundary(1).unwrap().is_zero());
    }

    #[test]
    fn faces_of_degenerate_simplices() {
        let s1 = SimplicialSet::circle(3);
        let a = Simplex::generator(1, 0);
        let s0a = s1.degeneracy(0, &a);
        assert_eq!(s1.face(0, &s0a), a);
        assert_eq!(s1.face(1, &s0a), a);
        assert_eq!(s1.face(2, &s0a), s1.degeneracy(0, &s1.face(1, &a)));
    }

    #[test]
    fn realize_round_trips_spheres() {
        for n in 1..=3 {
            let s = SimplicialSet::sphere(n, 4);
            let r = realize(&s);
            assert_eq!(r.set.counts(), s.counts());
            let h = homology_all(&r.set.chains(), Coefficients::Integers);
            for k in 0..4 {
                let expect = usize::from(k == 0 || k == n);
                assert_eq!(h[k].betti, expect, "H_{k}(S^{n})");
            }
        }
    }

    #[test]
    fn rejects_broken_identities() {
        let counts = vec![2, 2, 1];
        let v = |g| Simplex::generator(0, g);
        let e = |g| Simplex::generator(1, g);
        let faces = vec![
            vec![Vec::new(), Vec::new()],
            vec![vec![v(1), v(0)], vec![v(0), v(0)]],
            vec![vec![e(0), e(1), e(1)]],
        ];
        assert!(SimplicialSet::new(counts, faces, None, false).is_err());
    }
}
