//! Nerves of finite categories and monoids, and fat nerves of semigroups.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::{FinCategory, FinMonoid, FinSemigroup};
use super::sset::{Simplex, SimplicialSet};

/// The objects `c_0, …, c_n` visited by a chain `(f_1, …, f_n)` with
/// `f_i : c_i → c_{i-1}`.
fn chain_objects(c: &FinCategory, arrows: &[usize]) -> Vec<usize> {
    let mut objs = Vec::with_capacity(arrows.len() + 1);
    objs.push(c.target(arrows[0]));
    objs.extend(arrows.iter().map(|&f| c.source(f)));
    objs
}

/// All composable chains of length `n` with no identity entries, in
/// lexicographic order. For `n = 0` each object is encoded by its identity.
pub(crate) fn nondegenerate_chains(c: &FinCategory, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return (0..c.object_count()).map(|o| vec![c.identity(o)]).collect();
    }
    let arrows: Vec<usize> = (0..c.morphism_count()).filter(|&f| !c.is_identity(f)).collect();
    let mut out: Vec<Vec<usize>> = arrows.iter().map(|&f| vec![f]).collect();
    for _ in 1..n {
        let mut next = Vec::new();
        for ch in &out {
            let last = *ch.last().unwrap();
            for &g in &arrows {
                if c.target(g) == c.source(last) {
                    let mut e = ch.clone();
                    e.push(g);
                    next.push(e);
                }
            }
        }
        out = next;
    }
    out
}

/// The nerve of `c` truncated at `maxdim`. Degree-`n` generators are the
/// composable `n`-tuples without identities; `d_0` drops `f_1`, `d_n` drops
/// `f_n` and inner faces compose `f_i ∘ f_{i+1}`.
pub fn category_nerve(c: &FinCategory, maxdim: usize) -> SimplicialSet {
    let chains: Vec<Vec<Vec<usize>>> = (0..=maxdim).map(|n| nondegenerate_chains(c, n)).collect();
    let index: Vec<BTreeMap<&[usize], usize>> = chains
        .iter()
        .map(|cs| cs.iter().enumerate().map(|(i, ch)| (ch.as_slice(), i)).collect())
        .collect();
    let mut faces = Vec::with_capacity(maxdim + 1);
    faces.push(vec![Vec::new(); chains[0].len()]);
    for n in 1..=maxdim {
        let mut fs = Vec::with_capacity(chains[n].len());
        for ch in &chains[n] {
            let objs = chain_objects(c, ch);
            let mut row = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let raw: Vec<usize> = if i == 0 {
                    ch[1..].to_vec()
                } else if i == n {
                    ch[..n - 1].to_vec()
                } else {
                    let mut v = ch[..i - 1].to_vec();
                    v.push(c.compose(ch[i - 1], ch[i]).expect("chain is composable"));
                    v.extend_from_slice(&ch[i + 1..]);
                    v
                };
                row.push(if raw.is_empty() {
                    let o = if i == 0 { objs[1] } else { objs[0] };
                    Simplex::generator(0, index[0][[c.identity(o)].as_slice()])
                } else {
                    normal_form(c, &raw, &index)
                });
            }
            fs.push(row);
        }
        faces.push(fs);
    }
    let counts = chains.iter().map(|c| c.len()).collect();
    SimplicialSet::new(counts, faces, Some(0), false).expect("nerves satisfy the simplicial identities")
}

/// Identity entries at 1-based positions `p` become `s_{p-1}`.
fn normal_form(c: &FinCategory, raw: &[usize], index: &[BTreeMap<&[usize], usize>]) -> Simplex {
    let core: Vec<usize> = raw.iter().copied().filter(|&f| !c.is_identity(f)).collect();
    let word: Vec<usize> = raw
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &f)| c.is_identity(f))
        .map(|(p, _)| p)
        .collect();
    if core.is_empty() {
        let o = c.source(raw[0]);
        let word = (0..raw.len()).rev().collect();
        return Simplex::with_word(0, index[0][[c.identity(o)].as_slice()], word);
    }
    Simplex::with_word(core.len(), index[core.len()][core.as_slice()], word)
}

/// `BM`: the nerve of `m` as a one-object category.
pub fn nerve(m: &FinMonoid, maxdim: usize) -> SimplicialSet {
    category_nerve(&FinCategory::from_monoid(m), maxdim)
}

/// All `n`-tuples over `g` in lexicographic order.
pub(crate) fn tuples(size: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * size);
        for t in &out {
            for x in 0..size {
                let mut e = t.clone();
                e.push(x);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

fn tuple_index(size: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * size + x)
}

/// The fat nerve of a semigroup: every `n`-tuple is a generator and no
/// degeneracies exist.
pub fn semigroup_nerve(g: &FinSemigroup, maxdim: usize) -> SimplicialSet {
    let k = g.size();
    let mut counts = Vec::with_capacity(maxdim + 1);
    let mut faces = Vec::with_capacity(maxdim + 1);
    counts.push(1);
    faces.push(vec![Vec::new()]);
    for n in 1..=maxdim {
        let ts = tuples(k, n);
        counts.push(ts.len());
        let mut fs = Vec::with_capacity(ts.len());
        for t in &ts {
            let mut row = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let f: Vec<usize> = if i == 0 {
                    t[1..].to_vec()
                } else if i == n {
                    t[..n - 1].to_vec()
                } else {
                    let mut v = t[..i - 1].to_vec();
                    v.push(g.mul(t[i - 1], t[i]));
                    v.extend_from_slice(&t[i + 1..]);
                    v
                };
                row.push(Simplex::generator(n - 1, tuple_index(k, &f)));
            }
            fs.push(row);
        }
        faces.push(fs);
    }
    SimplicialSet::new(counts, faces, Some(0), true).expect("fat nerves satisfy the face identities")
}
