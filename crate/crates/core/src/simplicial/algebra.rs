//! Finite semigroups, monoids and categories given by explicit tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::bail;
use crate::unionfind::UnionFind;

/// A finite semigroup: named elements `0..n` and a closed associative table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinSemigroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl FinSemigroup {
    /// Validates closure and associativity over all triples.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> crate::Result<Self> {
        let n = names.len();
        if n == 0 {
            bail!(InvalidTable, "a semigroup needs at least one element");
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            bail!(InvalidTable, "table must be {n}x{n}");
        }
        for (a, row) in table.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    bail!(InvalidTable, "{}·{} = index {c} is not an element", names[a], names[b]);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        bail!(
                            InvalidTable,
                            "not associative: ({}·{})·{} ≠ {}·({}·{})",
                            names[a],
                            names[b],
                            names[c],
                            names[a],
                            names[b],
                            names[c]
                        );
                    }
                }
            }
        }
        let mut seen = BTreeMap::new();
        for (i, nm) in names.iter().enumerate() {
            if seen.insert(nm.clone(), i).is_some() {
                bail!(InvalidTable, "duplicate element name {nm:?}");
            }
        }
        Ok(FinSemigroup { names, table })
    }

    pub fn from_fn(names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> crate::Result<Self> {
        let n = names.len();
        let table = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        FinSemigroup::new(names, table)
    }

    /// `{a}` with `a·a = a`.
    pub fn singleton() -> Self {
        FinSemigroup::new(vec!["a".into()], vec![vec![0]]).unwrap()
    }

    /// `xy = x` on `k` elements.
    pub fn left_zero(k: usize) -> Self {
        FinSemigroup::from_fn(letters(k), |a, _| a).unwrap()
    }

    /// `xy = y` on `k` elements.
    pub fn right_zero(k: usize) -> Self {
        FinSemigroup::from_fn(letters(k), |_, b| b).unwrap()
    }

    /// All products equal the first element.
    pub fn null(k: usize) -> Self {
        FinSemigroup::from_fn(letters(k), |_, _| 0).unwrap()
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// The two-sided unit, if one exists.
    pub fn find_unit(&self) -> Option<usize> {
        let n = self.size();
        (0..n).find(|&e| (0..n).all(|x| self.table[e][x] == x && self.table[x][e] == x))
    }
}

fn letters(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            let c = (b'a' + (i % 26) as u8) as char;
            if i < 26 {
                c.to_string()
            } else {
                format!("{c}{}", i / 26)
            }
        })
        .collect()
}

/// A finite monoid: a [`FinSemigroup`] with a distinguished two-sided unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinMonoid {
    sg: FinSemigroup,
    unit: usize,
}

impl FinMonoid {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, unit: usize) -> crate::Result<Self> {
        let sg = FinSemigroup::new(names, table)?;
        FinMonoid::from_semigroup(sg, unit)
    }

    pub fn from_semigroup(sg: FinSemigroup, unit: usize) -> crate::Result<Self> {
        if unit >= sg.size() {
            bail!(InvalidTable, "unit index {unit} out of range");
        }
        for x in 0..sg.size() {
            if sg.mul(unit, x) != x || sg.mul(x, unit) != x {
                bail!(InvalidTable, "{} is not a two-sided unit (fails at {})", sg.name(unit), sg.name(x));
            }
        }
        Ok(FinMonoid { sg, unit })
    }

    pub fn trivial() -> Self {
        FinMonoid::cyclic(1)
    }

    /// `Z/n` with elements `e, a, a2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "a".to_string(),
                k => format!("a{k}"),
            })
            .collect();
        let sg = FinSemigroup::from_fn(names, |x, y| (x + y) % n).unwrap();
        FinMonoid { sg, unit: 0 }
    }

    /// `{e, a}` with `a·a = a`.
    pub fn idempotent() -> Self {
        FinMonoid::new(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 1]], 0).unwrap()
    }

    /// Klein four-group `{e, a, b, c}`.
    pub fn klein() -> Self {
        FinMonoid::new(
            vec!["e".into(), "a".into(), "b".into(), "c".into()],
            (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect(),
            0,
        )
        .unwrap()
    }

    /// Direct product; element names are `x.y`.
    pub fn product(&self, other: &FinMonoid) -> FinMonoid {
        let (n, m) = (self.size(), other.size());
        let names = (0..n * m)
            .map(|k| format!("{}.{}", self.name(k / m), other.name(k % m)))
            .collect();
        let sg = FinSemigroup::from_fn(names, |p, q| {
            self.mul(p / m, q / m) * m + other.mul(p % m, q % m)
        })
        .unwrap();
        FinMonoid {
            sg,
            unit: self.unit * m + other.unit,
        }
    }

    pub fn as_semigroup(&self) -> &FinSemigroup {
        &self.sg
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn size(&self) -> usize {
        self.sg.size()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.sg.mul(a, b)
    }

    pub fn name(&self, a: usize) -> &str {
        self.sg.name(a)
    }

    pub fn names(&self) -> &[String] {
        self.sg.names()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.sg.index_of(name)
    }

    pub fn product_of(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.unit, |acc, &x| self.mul(acc, x))
    }

    pub fn is_commutative(&self) -> bool {
        self.sg.is_commutative()
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    /// A finite monoid is grouplike exactly when it is a group.
    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|a| self.inverse(a).is_some())
    }

    /// The universal commutative quotient, together with the quotient map.
    pub fn abelianization(&self) -> (FinMonoid, Vec<usize>) {
        let n = self.size();
        let mut uf = UnionFind::new(n);
        for a in 0..n {
            for b in 0..n {
                uf.union(self.mul(a, b), self.mul(b, a));
            }
        }
        // close under multiplication on both sides
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in a + 1..n {
                    if uf.find(a) != uf.find(b) {
                        continue;
                    }
                    for c in 0..n {
                        changed |= uf.union(self.mul(a, c), self.mul(b, c));
                        changed |= uf.union(self.mul(c, a), self.mul(c, b));
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let classes = uf.classes();
        let mut map = vec![0; n];
        for (k, cls) in classes.iter().enumerate() {
            for &x in cls {
                map[x] = k;
            }
        }
        let names = classes.iter().map(|c| self.name(c[0]).to_string()).collect();
        let sg = FinSemigroup::from_fn(names, |p, q| map[self.mul(classes[p][0], classes[q][0])])
            .expect("quotient by a congruence is a semigroup");
        let unit = map[self.unit];
        (FinMonoid { sg, unit }, map)
    }

    /// Every monoid of order `n` up to isomorphism, unit at index 0.
    pub fn enumerate(n: usize) -> Vec<FinMonoid> {
        assert!((1..=5).contains(&n), "enumeration supports orders 1..=5");
        let k = n - 1;
        let cells = k * k;
        let mut seen = alloc::collections::BTreeSet::new();
        let mut out = Vec::new();
        let perms = permutations(k);
        let mut tables = Vec::new();
        let mut vals: Vec<Option<usize>> = vec![None; cells];
        extend_tables(n, 0, &mut vals, &mut tables);
        for vals in tables {
            let mul = |a: usize, b: usize| -> usize {
                if a == 0 {
                    b
                } else if b == 0 {
                    a
                } else {
                    vals[(a - 1) * k + (b - 1)]
                }
            };
            // canonical relabeling of the non-unit elements
            let canon = perms
                .iter()
                .map(|p| {
                    // p maps old non-unit index i (1-based) to new p[i-1]+1
                    let mut relabeled = vec![0usize; cells];
                    for a in 1..n {
                        for b in 1..n {
                            let v = mul(a, b);
                            let nv = if v == 0 { 0 } else { p[v - 1] + 1 };
                            relabeled[p[a - 1] * k + p[b - 1]] = nv;
                        }
                    }
                    relabeled
                })
                .min()
                .unwrap_or_default();
            if seen.insert(canon.clone()) {
                let names = (0..n)
                    .map(|i| if i == 0 { "e".to_string() } else { format!("m{i}") })
                    .collect();
                let sg = FinSemigroup::from_fn(names, |a, b| {
                    if a == 0 {
                        b
                    } else if b == 0 {
                        a
                    } else {
                        canon[(a - 1) * k + (b - 1)]
                    }
                })
                .expect("associative by construction");
                out.push(FinMonoid { sg, unit: 0 });
            }
        }
        out
    }
}

/// Depth-first search over the non-unit cells of a table with unit 0,
/// pruning as soon as a fully defined triple fails associativity.
fn extend_tables(n: usize, cell: usize, vals: &mut [Option<usize>], out: &mut Vec<Vec<usize>>) {
    if cell == vals.len() {
        out.push(vals.iter().map(|v| v.unwrap()).collect());
        return;
    }
    for v in 0..n {
        vals[cell] = Some(v);
        if partial_associative(n, vals) {
            extend_tables(n, cell + 1, vals, out);
        }
    }
    vals[cell] = None;
}

fn partial_associative(n: usize, vals: &[Option<usize>]) -> bool {
    let k = n - 1;
    let mul = |a: usize, b: usize| -> Option<usize> {
        if a == 0 {
            Some(b)
        } else if b == 0 {
            Some(a)
        } else {
            vals[(a - 1) * k + (b - 1)]
        }
    };
    for a in 1..n {
        for b in 1..n {
            let Some(ab) = mul(a, b) else { continue };
            for c in 1..n {
                let (Some(l), Some(bc)) = (mul(ab, c), mul(b, c)) else { continue };
                if let Some(r) = mul(a, bc) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// `G₊ = G ⊔ {*}` with `*` as two-sided unit. The new unit is appended as
/// the last element, so the indices of `G` are preserved.
pub fn adjoin_unit(g: &FinSemigroup) -> FinMonoid {
    let n = g.size();
    let mut star = String::from("*");
    while g.index_of(&star).is_some() {
        star.push('\'');
    }
    let mut names = g.names().to_vec();
    names.push(star);
    let sg = FinSemigroup::from_fn(names, |a, b| {
        if a == n {
            b
        } else if b == n {
            a
        } else {
            g.mul(a, b)
        }
    })
    .expect("adjoining a unit preserves associativity");
    FinMonoid { sg, unit: n }
}

/// A structure-preserving map between finite semigroups or monoids, stored
/// as the image of each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    map: Vec<usize>,
}

impl Hom {
    pub fn semigroup(src: &FinSemigroup, tgt: &FinSemigroup, map: Vec<usize>) -> crate::Result<Self> {
        if map.len() != src.size() || map.iter().any(|&y| y >= tgt.size()) {
            bail!(InvalidTable, "map does not send {} elements into {} elements", src.size(), tgt.size());
        }
        for a in 0..src.size() {
            for b in 0..src.size() {
                if map[src.mul(a, b)] != tgt.mul(map[a], map[b]) {
                    bail!(InvalidTable, "not multiplicative at ({}, {})", src.name(a), src.name(b));
                }
            }
        }
        Ok(Hom { map })
    }

    pub fn monoid(src: &FinMonoid, tgt: &FinMonoid, map: Vec<usize>) -> crate::Result<Self> {
        let h = Hom::semigroup(src.as_semigroup(), tgt.as_semigroup(), map)?;
        if h.map[src.unit()] != tgt.unit() {
            bail!(InvalidTable, "unit is not preserved");
        }
        Ok(h)
    }

    pub fn identity(n: usize) -> Self {
        Hom { map: (0..n).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Hom) -> Hom {
        Hom {
            map: first.map.iter().map(|&x| self.map[x]).collect(),
        }
    }
}

/// A morphism of a [`FinCategory`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite category with explicit composition table.
///
/// `compose(g, f)` is `g ∘ f` (first `f`, then `g`) and is defined when
/// `source(g) = target(f)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    comp: Vec<Vec<Option<usize>>>,
}

impl FinCategory {
    /// Full constructor: every morphism, the identity of each object, and
    /// `g ∘ f` for every composable pair. Validates identity and
    /// associativity laws on all composable triples.
    pub fn from_table(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> Option<usize>,
    ) -> crate::Result<Self> {
        let m = morphisms.len();
        if identities.len() != objects.len() {
            bail!(InvalidTable, "one identity per object required");
        }
        for f in &morphisms {
            if f.source >= objects.len() || f.target >= objects.len() {
                bail!(InvalidTable, "morphism {} has an unknown endpoint", f.name);
            }
        }
        for (o, &id) in identities.iter().enumerate() {
            if id >= m || morphisms[id].source != o || morphisms[id].target != o {
                bail!(InvalidTable, "identity of {} is not an endomorphism of it", objects[o]);
            }
        }
        let mut comp = vec![vec![None; m]; m];
        for g in 0..m {
            for f in 0..m {
                if morphisms[g].source != morphisms[f].target {
                    continue;
                }
                let Some(h) = compose(g, f) else {
                    bail!(InvalidTable, "missing composite {} ∘ {}", morphisms[g].name, morphisms[f].name);
                };
                if h >= m || morphisms[h].source != morphisms[f].source || morphisms[h].target != morphisms[g].target {
                    bail!(
                        InvalidTable,
                        "composite {} ∘ {} has the wrong endpoints",
                        morphisms[g].name,
                        morphisms[f].name
                    );
                }
                comp[g][f] = Some(h);
            }
        }
        let cat = FinCategory {
            objects,
            morphisms,
            identities,
            comp,
        };
        cat.validate()?;
        Ok(cat)
    }

    /// Builds a category from non-identity arrows `(name, source, target)`
    /// and the composites `(g, f, g∘f)` of composable non-identity pairs
    /// (indices into `arrows`). Identities `id_<object>` are added in front,
    /// so arrow `k` becomes morphism `objects.len() + k`.
    pub fn from_arrows(
        objects: Vec<String>,
        arrows: Vec<(String, usize, usize)>,
        composites: &[(usize, usize, usize)],
    ) -> crate::Result<Self> {
        let k = objects.len();
        let mut morphisms: Vec<Morphism> = objects
            .iter()
            .enumerate()
            .map(|(o, name)| Morphism {
                name: format!("id_{name}"),
                source: o,
                target: o,
            })
            .collect();
        morphisms.extend(arrows.into_iter().map(|(name, source, target)| Morphism { name, source, target }));
        let table: BTreeMap<(usize, usize), usize> =
            composites.iter().map(|&(g, f, h)| ((g + k, f + k), h + k)).collect();
        FinCategory::from_table(objects, morphisms, (0..k).collect(), |g, f| {
            if g < k {
                Some(f)
            } else if f < k {
                Some(g)
            } else {
                table.get(&(g, f)).copied()
            }
        })
    }

    fn validate(&self) -> crate::Result<()> {
        let m = self.morphisms.len();
        for f in 0..m {
            let s = self.identities[self.morphisms[f].source];
            let t = self.identities[self.morphisms[f].target];
            if self.comp[f][s] != Some(f) || self.comp[t][f] != Some(f) {
                bail!(InvalidTable, "identity law fails for {}", self.morphisms[f].name);
            }
        }
        for h in 0..m {
            for g in 0..m {
                let Some(hg) = self.comp[h][g] else { continue };
                for f in 0..m {
                    let Some(gf) = self.comp[g][f] else { continue };
                    if self.comp[hg][f] != self.comp[h][gf] {
                        bail!(
                            InvalidTable,
                            "composition not associative on ({}, {}, {})",
                            self.morphisms[h].name,
                            self.morphisms[g].name,
                            self.morphisms[f].name
                        );
                    }
                }
            }
        }
        Ok(())
    }

    /// A monoid as a one-object category; morphism `x` is element `x` and
    /// `g ∘ f = g·f`.
    pub fn from_monoid(m: &FinMonoid) -> Self {
        let morphisms = (0..m.size())
            .map(|x| Morphism {
                name: m.name(x).to_string(),
                source: 0,
                target: 0,
            })
            .collect();
        FinCategory::from_table(vec!["*".into()], morphisms, vec![m.unit()], |g, f| Some(m.mul(g, f)))
            .expect("a monoid is a category")
    }

    pub fn terminal() -> Self {
        FinCategory::from_arrows(vec!["*".into()], Vec::new(), &[]).unwrap()
    }

    pub fn discrete(k: usize) -> Self {
        FinCategory::from_arrows(letters(k), Vec::new(), &[]).unwrap()
    }

    /// `0 → 1`.
    pub fn arrow() -> Self {
        FinCategory::from_arrows(vec!["0".into(), "1".into()], vec![("f".into(), 0, 1)], &[]).unwrap()
    }

    /// `a ← m → b` (objects in order `m, a, b`).
    pub fn span() -> Self {
        FinCategory::from_arrows(
            vec!["m".into(), "a".into(), "b".into()],
            vec![("i".into(), 0, 1), ("j".into(), 0, 2)],
            &[],
        )
        .unwrap()
    }

    /// `a → m ← b`.
    pub fn cospan() -> Self {
        FinCategory::from_arrows(
            vec!["m".into(), "a".into(), "b".into()],
            vec![("i".into(), 1, 0), ("j".into(), 2, 0)],
            &[],
        )
        .unwrap()
    }

    /// `0 → 1 → 2` with the composite.
    pub fn composable_pair() -> Self {
        FinCategory::from_arrows(
            vec!["0".into(), "1".into(), "2".into()],
            vec![("f".into(), 0, 1), ("g".into(), 1, 2), ("gf".into(), 0, 2)],
            &[(1, 0, 2)],
        )
        .unwrap()
    }

    /// Two parallel arrows `0 ⇉ 1`.
    pub fn parallel_pair() -> Self {
        FinCategory::from_arrows(
            vec!["0".into(), "1".into()],
            vec![("f".into(), 0, 1), ("g".into(), 0, 1)],
            &[],
        )
        .unwrap()
    }

    /// Two objects and a pair of inverse isomorphisms.
    pub fn isomorphism() -> Self {
        let objects = vec!["0".into(), "1".into()];
        let morphisms = vec![
            Morphism { name: "id_0".into(), source: 0, target: 0 },
            Morphism { name: "id_1".into(), source: 1, target: 1 },
            Morphism { name: "f".into(), source: 0, target: 1 },
            Morphism { name: "g".into(), source: 1, target: 0 },
        ];
        FinCategory::from_table(objects, morphisms, vec![0, 1], |g, f| match (g, f) {
            (0, x) | (1, x) => Some(x),
            (x, 0) | (x, 1) => Some(x),
            (2, 3) => Some(1),
            (3, 2) => Some(0),
            _ => None,
        })
        .unwrap()
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn source(&self, f: usize) -> usize {
        self.morphisms[f].source
    }

    pub fn target(&self, f: usize) -> usize {
        self.morphisms[f].target
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].source] == f
    }

    /// `g ∘ f`, if composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g][f]
    }

    /// Morphisms `a → b` in index order.
    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&f| self.morphisms[f].source == a && self.morphisms[f].target == b)
            .collect()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// The opposite category (same indices, endpoints swapped).
    pub fn opposite(&self) -> FinCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                name: m.name.clone(),
                source: m.target,
                target: m.source,
            })
            .collect();
        FinCategory::from_table(self.objects.clone(), morphisms, self.identities.clone(), |g, f| self.comp[f][g])
            .expect("opposite of a category")
    }

    /// Product category. Object `(x, y)` has index `x * |objects(other)| + y`
    /// and morphism `(f, g)` has index `f * |morphisms(other)| + g`.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let (no, mo) = (other.object_count(), other.morphism_count());
        let objects = (0..self.object_count() * no)
            .map(|k| format!("({},{})", self.objects[k / no], other.objects[k % no]))
            .collect();
        let morphisms = (0..self.morphism_count() * mo)
            .map(|k| {
                let (f, g) = (k / mo, k % mo);
                Morphism {
                    name: format!("({},{})", self.morphisms[f].name, other.morphisms[g].name),
                    source: self.source(f) * no + other.source(g),
                    target: self.target(f) * no + other.target(g),
                }
            })
            .collect();
        let identities = (0..self.object_count() * no)
            .map(|k| self.identities[k / no] * mo + other.identities[k % no])
            .collect();
        FinCategory::from_table(objects, morphisms, identities, |p, q| {
            let a = self.comp[p / mo][q / mo]?;
            let b = other.comp[p % mo][q % mo]?;
            Some(a * mo + b)
        })
        .expect("product of categories")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative() {
        let t = vec![vec![0, 1, 0], vec![1, 1, 2], vec![0, 2, 2]];
        let err = FinSemigroup::new(letters(3), t).unwrap_err();
        assert!(matches!(err, crate::Error::InvalidTable(_)));
        assert!(FinSemigroup::new(letters(2), vec![vec![0, 5], vec![0, 0]]).is_err());
    }

    #[test]
    fn adjoin_unit_examples() {
        let g = FinSemigroup::singleton();
        let m = adjoin_unit(&g);
        assert_eq!(m.size(), 2);
        let a = m.index_of("a").unwrap();
        assert_eq!(m.mul(a, a), a);
        assert_eq!(m.mul(m.unit(), a), a);
        let z2 = adjoin_unit(FinMonoid::cyclic(2).as_semigroup());
        assert_eq!(z2.size(), 3);
        assert_eq!(z2.name(z2.unit()), "*");
    }

    #[test]
    fn abelianization_of_left_zero_monoid() {
        // {e} ∪ left-zero{a,b}: ab = a, ba = b forces a ~ b
        let m = adjoin_unit(&FinSemigroup::left_zero(2));
        let (ab, map) = m.abelianization();
        assert_eq!(ab.size(), 2);
        assert_eq!(map[0], map[1]);
        assert!(ab.is_commutative());
    }

    #[test]
    fn groups_detected() {
        assert!(FinMonoid::cyclic(4).is_group());
        assert!(FinMonoid::klein().is_group());
        assert!(!FinMonoid::idempotent().is_group());
    }

    #[test]
    fn category_laws() {
        for c in [
            FinCategory::terminal(),
            FinCategory::arrow(),
            FinCategory::span(),
            FinCategory::cospan(),
            FinCategory::composable_pair(),
            FinCategory::parallel_pair(),
            FinCategory::isomorphism(),
            FinCategory::from_monoid(&FinMonoid::cyclic(3)),
        ] {
            let op = c.opposite();
            assert_eq!(op.opposite(), c);
            let p = c.product(&op);
            assert_eq!(p.morphism_count(), c.morphism_count().pow(2));
        }
        let bad = FinCategory::from_arrows(
            vec!["0".into(), "1".into(), "2".into()],
            vec![("f".into(), 0, 1), ("g".into(), 1, 2)],
            &[],
        );
        assert!(bad.is_err(), "missing composite must be rejected");
    }

    #[test]
    fn homomorphism_validation() {
        let z4 = FinMonoid::cyclic(4);
        let z2 = FinMonoid::cyclic(2);
        assert!(Hom::monoid(&z4, &z2, vec![0, 1, 0, 1]).is_ok());
        assert!(Hom::monoid(&z4, &z2, vec![0, 1, 1, 1]).is_err());
    }

    #[test]
    fn monoid_counts_up_to_isomorphism() {
        let counts: Vec<usize> = (1..=5).map(|n| FinMonoid::enumerate(n).len()).collect();
        assert_eq!(counts, [1, 2, 7, 35, 228]);
    }

}
