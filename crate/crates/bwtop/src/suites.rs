//! Verification suites. Every check yields one `PASS|FAIL <id> <details>`
//! line; randomized checks draw from a ChaCha8 stream keyed by the seed and
//! the check id, so output is reproducible.

use std::fmt;

use bwtop_core::barcat::delta;
use bwtop_core::consequences::{grothendieck_group, h1_of_bm, hocolim_preservation_check, james, smash_power_oracle};
use bwtop_core::exactalg::{homology_all, reduced_homology_all, AbelianGroup, Coefficients, Rat};
use bwtop_core::moorezeta::{ev, ev_face_coherence, zeta, MoorePath, PemPath, RatPoint};
use bwtop_core::simplicial::{nerve, product, suspension, wedge, FinMonoid, FinSemigroup, SimplicialSet};
use bwtop_core::wconstruct::{components_match_products, wbar_complex, wbar_components, Mode, WTuple, WhiskerElem, WhiskerMonoid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fixtures;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub details: String,
}

impl Check {
    fn new(id: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            passed,
            details: details.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} {}", self.id, self.details)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    /// Overrides every randomized check's default trial count.
    pub trials: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            trials: None,
        }
    }
}

impl Config {
    fn trials(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    /// An RNG stream specific to one check.
    fn rng(&self, id: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in id.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    WLaws,
    WHomology,
    Moore,
    Zeta,
    James,
    Grpcomp,
    Hocolim,
    BarDelta,
    All,
}

impl Suite {
    pub const NAMES: &'static [&'static str] =
        &["w-laws", "w-homology", "moore", "zeta", "james", "grpcomp", "hocolim", "bar-delta", "all"];

    pub fn from_name(s: &str) -> Option<Suite> {
        Some(match s {
            "w-laws" => Suite::WLaws,
            "w-homology" => Suite::WHomology,
            "moore" => Suite::Moore,
            "zeta" => Suite::Zeta,
            "james" => Suite::James,
            "grpcomp" => Suite::Grpcomp,
            "hocolim" => Suite::Hocolim,
            "bar-delta" => Suite::BarDelta,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

pub fn run(suite: Suite, cfg: &Config) -> Vec<Check> {
    match suite {
        Suite::WLaws => [w_monoid_laws(cfg), w_identities(cfg), whiskering(cfg)].concat(),
        Suite::WHomology => w_homology(cfg),
        Suite::Moore => [moore_strictness(cfg), ev_coherence(cfg)].concat(),
        Suite::Zeta => zeta_identities(cfg),
        Suite::James => james_shadow(cfg),
        Suite::Grpcomp => group_completion(cfg),
        Suite::Hocolim => hocolim_preservation(cfg),
        Suite::BarDelta => bar_delta(cfg),
        Suite::All => [
            Suite::WLaws,
            Suite::WHomology,
            Suite::Moore,
            Suite::Zeta,
            Suite::James,
            Suite::Grpcomp,
            Suite::Hocolim,
            Suite::BarDelta,
        ]
        .iter()
        .flat_map(|&s| run(s, cfg))
        .collect(),
    }
}

fn groups(gs: &[AbelianGroup]) -> String {
    gs.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
}

/// Fixture semigroups with at most four elements, including monoid
/// fixtures with the unit forgotten.
fn small_semigroups() -> Vec<(&'static str, FinSemigroup)> {
    fixtures::semigroups().into_iter().filter(|(_, g)| g.size() <= 4).collect()
}

pub fn w_homology(_cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, g) in small_semigroups() {
        let mut bad = None;
        let mut summary = Vec::new();
        for letters in 1..=4 {
            let c = wbar_complex(&g, letters).expect("letters ≥ 1");
            let h: Vec<AbelianGroup> = homology_all(&c, Coefficients::Integers).iter().map(|r| r.group()).collect();
            let ok = h[0] == AbelianGroup::free(g.size()) && h[1..letters].iter().all(AbelianGroup::is_trivial);
            summary.push(format!("L{letters}:{}", groups(&h[..letters])));
            if !ok && bad.is_none() {
                bad = Some(letters);
            }
        }
        let classes = wbar_components(&g, 3).expect("letters ≥ 1");
        let fibers = components_match_products(&g, &classes);
        out.push(Check::new(
            format!("w-homology/{name}"),
            bad.is_none(),
            format!("|G|={} {}", g.size(), summary.join(" ")),
        ));
        out.push(Check::new(
            format!("w-components/{name}"),
            fibers,
            format!("L=3 classes={}", classes.len()),
        ));
    }
    out
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    match rng.gen_range(0..8) {
        0 => Rat::zero(),
        1 => Rat::one(),
        _ => {
            let d = rng.gen_range(2..=7);
            Rat::new(rng.gen_range(1..d), d).unwrap()
        }
    }
}

fn random_raw(rng: &mut ChaCha8Rng, size: usize, max_len: usize) -> (Vec<usize>, Vec<Rat>) {
    let len = rng.gen_range(1..=max_len);
    let entries = (0..len).map(|_| rng.gen_range(0..size)).collect();
    let params = (1..len).map(|_| random_rat(rng)).collect();
    (entries, params)
}

fn random_tuple(rng: &mut ChaCha8Rng, m: &FinMonoid, mode: Mode) -> WTuple<usize> {
    let (e, p) = random_raw(rng, m.size(), 4);
    WTuple::normalize(m, e, p, mode).unwrap()
}

pub fn w_monoid_laws(cfg: &Config) -> Vec<Check> {
    let n = cfg.trials(10_000);
    let mut out = Vec::new();
    for (name, m) in fixtures::monoids() {
        for mode in [Mode::Semigroup, Mode::Monoid] {
            let tag = if mode == Mode::Semigroup { "wbar" } else { "w" };
            let id = format!("w-assoc/{tag}/{name}");
            let mut rng = cfg.rng(&id);
            let mut failure = None;
            for k in 0..n {
                let [a, b, c] = [(); 3].map(|_| random_tuple(&mut rng, &m, mode));
                let l = a.wmul(&m, &b).unwrap().wmul(&m, &c).unwrap();
                let r = a.wmul(&m, &b.wmul(&m, &c).unwrap()).unwrap();
                let unital = mode == Mode::Semigroup
                    || (WTuple::unit().wmul(&m, &a).unwrap() == a && a.wmul(&m, &WTuple::unit()).unwrap() == a);
                if l != r || !unital {
                    failure = Some(format!("trial {k}: a={} b={} c={}", a.display(&m), b.display(&m), c.display(&m)));
                    break;
                }
            }
            out.push(Check::new(&id, failure.is_none(), failure.unwrap_or(format!("triples={n}"))));

            let id = format!("w-confluence/{tag}/{name}");
            let mut rng = cfg.rng(&id);
            let mut failure = None;
            for k in 0..n {
                let (e, p) = random_raw(&mut rng, m.size(), 6);
                let left = WTuple::normalize(&m, e.clone(), p.clone(), mode).unwrap();
                let random = WTuple::normalize_with(&m, e, p, mode, |k| rng.gen_range(0..k)).unwrap();
                if left != random {
                    failure = Some(format!("trial {k}: {} vs {}", left.display(&m), random.display(&m)));
                    break;
                }
            }
            out.push(Check::new(&id, failure.is_none(), failure.unwrap_or(format!("orders={n}"))));
        }

        let id = format!("w-free/{name}");
        let mut rng = cfg.rng(&id);
        let mut failure = None;
        for k in 0..n {
            let unfrozen = |rng: &mut ChaCha8Rng| {
                let len = rng.gen_range(1..=4);
                let e: Vec<usize> = (0..len).map(|_| rng.gen_range(0..m.size())).collect();
                let p: Vec<Rat> = (1..len)
                    .map(|_| {
                        let d = rng.gen_range(2..=7);
                        Rat::new(rng.gen_range(1..d), d).unwrap()
                    })
                    .collect();
                WTuple::normalize(&m, e, p, Mode::Semigroup).unwrap()
            };
            let (a, b) = (unfrozen(&mut rng), unfrozen(&mut rng));
            if a.wmul(&m, &b).unwrap().len() != a.len() + b.len() {
                failure = Some(format!("trial {k}: {} · {}", a.display(&m), b.display(&m)));
                break;
            }
        }
        out.push(Check::new(&id, failure.is_none(), failure.unwrap_or(format!("pairs={n}"))));
    }
    out
}

pub fn w_identities(cfg: &Config) -> Vec<Check> {
    let n = cfg.trials(10_000);
    let mut out = Vec::new();
    for (name, m) in fixtures::monoids() {
        let id = format!("w-epsilon/{name}");
        let mut rng = cfg.rng(&id);
        let mut failure = None;
        for k in 0..n {
            let x = rng.gen_range(0..m.size());
            let iota_bar = WTuple::iota(&m, x, Mode::Semigroup).unwrap();
            let iota = WTuple::iota(&m, x, Mode::Monoid).unwrap();
            let a = random_tuple(&mut rng, &m, Mode::Semigroup);
            let b = random_tuple(&mut rng, &m, Mode::Monoid);
            let s = random_rat(&mut rng);
            let checks = [
                ("epsilon∘iota", iota_bar.epsilon(&m) == x && iota.epsilon(&m) == x),
                ("ε̄=ε∘ε′", a.eps_prime(&m).unwrap().epsilon(&m) == a.epsilon(&m)),
                ("ε′∘ῑ=ι", iota_bar.eps_prime(&m).unwrap() == iota),
                (
                    "epsilon∘shrink",
                    a.shrink(&m, &s).unwrap().epsilon(&m) == a.epsilon(&m)
                        && b.shrink(&m, &s).unwrap().epsilon(&m) == b.epsilon(&m),
                ),
                (
                    "shrink ends",
                    a.shrink(&m, &Rat::one()).unwrap() == a
                        && a.shrink(&m, &Rat::zero()).unwrap() == WTuple::iota(&m, a.epsilon(&m), Mode::Semigroup).unwrap(),
                ),
            ];
            if let Some((law, _)) = checks.iter().find(|(_, ok)| !ok) {
                failure = Some(format!("trial {k}: {law} fails at x={} a={} s={s}", m.name(x), a.display(&m)));
                break;
            }
        }
        out.push(Check::new(&id, failure.is_none(), failure.unwrap_or(format!("samples={n}"))));
    }
    out
}

pub fn whiskering(cfg: &Config) -> Vec<Check> {
    let n = cfg.trials(10_000);
    let mut out = Vec::new();
    for (name, m) in fixtures::monoids() {
        let id = format!("whisker/{name}");
        let mut rng = cfg.rng(&id);
        let v = WhiskerMonoid::new(m.clone());
        let draw = |rng: &mut ChaCha8Rng| {
            if rng.gen_bool(0.5) {
                WhiskerElem::Monoid(rng.gen_range(0..m.size()))
            } else {
                let d = rng.gen_range(1..=7);
                v.whisker(Rat::new(rng.gen_range(0..=d), d).unwrap()).unwrap()
            }
        };
        let mut failure = None;
        for k in 0..n {
            let [a, b, c] = [(); 3].map(|_| draw(&mut rng));
            let assoc = v.mul(&v.mul(&a, &b), &c) == v.mul(&a, &v.mul(&b, &c));
            let unit = v.mul(&v.unit(), &a) == a && v.mul(&a, &v.unit()) == a;
            let hom = v.collapse(&v.mul(&a, &b)) == m.mul(v.collapse(&a), v.collapse(&b));
            if !(assoc && unit && hom) {
                failure = Some(format!("trial {k}: {a:?} {b:?} {c:?}"));
                break;
            }
        }
        out.push(Check::new(&id, failure.is_none(), failure.unwrap_or(format!("samples={n}"))));
    }
    out
}

/// A random PL loop at the origin of `ℚ²`.
fn random_loop(rng: &mut ChaCha8Rng) -> MoorePath<RatPoint> {
    let pieces = rng.gen_range(0..=4);
    let mut t = Rat::zero();
    let mut bps = vec![(Rat::zero(), RatPoint::origin(2))];
    let coord = |rng: &mut ChaCha8Rng| Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=4)).unwrap();
    for _ in 0..pieces {
        t = &t + &Rat::new(rng.gen_range(1..=5), rng.gen_range(1..=3)).unwrap();
        let p = RatPoint(vec![coord(rng), coord(rng)]);
        bps.push((t.clone(), p));
    }
    if pieces > 0 {
        t = &t + &Rat::new(rng.gen_range(1..=5), rng.gen_range(1..=3)).unwrap();
        bps.push((t, RatPoint::origin(2)));
    }
    MoorePath::from_breakpoints(bps, &()).unwrap()
}

pub fn moore_strictness(cfg: &Config) -> Vec<Check> {
    let n = cfg.trials(1_000);
    let id = "moore-strict";
    let mut rng = cfg.rng(id);
    let unit = MoorePath::constant(RatPoint::origin(2));
    let mut failure = None;
    for k in 0..n {
        let [a, b, c] = [(); 3].map(|_| random_loop(&mut rng));
        let l = a.add(&b, &()).unwrap().add(&c, &()).unwrap();
        let r = a.add(&b.add(&c, &()).unwrap(), &()).unwrap();
        let lengths = l.length() == &(&a.length() + &b.length()) + &c.length();
        let unital = unit.add(&a, &()).unwrap() == a && a.add(&unit, &()).unwrap() == a;
        if l != r || l.times() != r.times() || !lengths || !unital {
            failure = Some(format!("trial {k}"));
            break;
        }
    }
    vec![Check::new(id, failure.is_none(), failure.unwrap_or(format!("loops={n}")))]
}

pub fn ev_coherence(cfg: &Config) -> Vec<Check> {
    let n = cfg.trials(1_000);
    let origin = RatPoint::origin(2);
    let id = "ev-faces";
    let mut rng = cfg.rng(id);
    let mut failure = None;
    for k in 0..n {
        let count = rng.gen_range(1..=3);
        let loops: Vec<_> = (0..count).map(|_| random_loop(&mut rng)).collect();
        let i = rng.gen_range(0..=count);
        let mut w: Vec<i64> = (0..=count).map(|_| rng.gen_range(0..=5)).collect();
        w[i] = 0;
        if w.iter().all(|&x| x == 0) {
            w[if i == 0 { 1 } else { 0 }] = 1;
        }
        let total: i64 = w.iter().sum();
        let t: Vec<Rat> = w.iter().map(|&x| Rat::new(x, total).unwrap()).collect();
        if !ev_face_coherence(&loops, &t, i, &origin, &()).unwrap() {
            failure = Some(format!("trial {k}: face {i} of {count} loops"));
            break;
        }
    }
    let mut out = vec![Check::new(id, failure.is_none(), failure.unwrap_or(format!("configurations={n}")))];

    let id = "ev-endpoints";
    let mut rng = cfg.rng(id);
    let mut failure = None;
    for k in 0..n {
        let count = rng.gen_range(1..=3);
        let loops: Vec<_> = (0..count).map(|_| random_loop(&mut rng)).collect();
        for j in [0, count] {
            let mut t = vec![Rat::zero(); count + 1];
            t[j] = Rat::one();
            if ev(&loops, &t, &origin, &()).unwrap() != origin {
                failure = Some(format!("trial {k}: vertex {j}"));
            }
        }
        if failure.is_some() {
            break;
        }
    }
    out.push(Check::new(id, failure.is_none(), failure.unwrap_or(format!("configurations={n}"))));
    out
}

fn words(size: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..size).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn param_grids(len: usize, grid: &[Rat]) -> Vec<Vec<Rat>> {
    let mut out = vec![Vec::new()];
    for _ in 1..len {
        out = out
            .iter()
            .flat_map(|p| {
                grid.iter().map(move |t| {
                    let mut v: Vec<Rat> = p.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn sample_times(rng: &mut ChaCha8Rng, length: &Rat, count: usize) -> Vec<Rat> {
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=60);
            &Rat::new(rng.gen_range(0..=d), d).unwrap() * length
        })
        .collect()
}

pub fn zeta_identities(cfg: &Config) -> Vec<Check> {
    let pairs = cfg.trials(100);
    let grid: Vec<Rat> = [(1, 4), (1, 3), (1, 2), (2, 3), (1, 1)].iter().map(|&(a, b)| Rat::new(a, b).unwrap()).collect();
    let mut out = Vec::new();
    for (name, m) in fixtures::monoids().into_iter().filter(|(_, m)| m.size() <= 3) {
        let mut count = 0;
        let mut failure = None;
        'all: for w in words(m.size(), 3) {
            for p in param_grids(w.len(), &grid) {
                let a = WTuple::normalize(&m, w.clone(), p, Mode::Semigroup).unwrap();
                let z = zeta(&m, &a).unwrap();
                count += 1;
                if z.endpoint(&m) != a.epsilon(&m) {
                    failure = Some(format!("π∘ζ ≠ ε̄ at {}", a.display(&m)));
                    break 'all;
                }
            }
        }
        out.push(Check::new(
            format!("zeta-augmentation/{name}"),
            failure.is_none(),
            failure.unwrap_or(format!("tuples={count}")),
        ));

        let id = format!("zeta-oplus/{name}");
        let mut rng = cfg.rng(&id);
        let mut failure = None;
        for k in 0..pairs {
            let a = random_tuple(&mut rng, &m, Mode::Semigroup);
            let b = random_tuple(&mut rng, &m, Mode::Semigroup);
            let (za, zb) = (zeta(&m, &a).unwrap(), zeta(&m, &b).unwrap());
            let lhs = zeta(&m, &a.wmul(&m, &b).unwrap()).unwrap();
            let rhs = za.oplus(&zb, &m).unwrap();
            let lhs_loop = lhs.project();
            let rhs_loop = za.project().add(&zb.project(), &m).unwrap();
            let times = sample_times(&mut rng, &lhs.path().length(), 100);
            let same = lhs.path().length() == rhs.path().length()
                && lhs_loop.length() == rhs_loop.length()
                && times.iter().all(|t| {
                    lhs.path().value_at(t, &m) == rhs.path().value_at(t, &m) && lhs_loop.value_at(t, &m) == rhs_loop.value_at(t, &m)
                });
            let pi = lhs.endpoint(&m) == m.mul(za.endpoint(&m), zb.endpoint(&m));
            let unit = PemPath::unit(&m).oplus(&za, &m).unwrap() == za && za.oplus(&PemPath::unit(&m), &m).unwrap() == za;
            if !(same && pi && unit) {
                failure = Some(format!("pair {k}: a={} b={}", a.display(&m), b.display(&m)));
                break;
            }
        }
        out.push(Check::new(&id, failure.is_none(), failure.unwrap_or(format!("pairs={pairs} times=100"))));
    }

    let id = "zeta-length";
    let mut rng = cfg.rng(id);
    let m = FinMonoid::cyclic(3);
    let mut failure = None;
    for k in 0..pairs {
        let pos = |rng: &mut ChaCha8Rng| {
            let d = rng.gen_range(1..=9);
            Rat::new(rng.gen_range(1..=d), d).unwrap()
        };
        let (t1, t2) = (pos(&mut rng), pos(&mut rng));
        let x: Vec<usize> = (0..3).map(|_| rng.gen_range(0..3)).collect();
        let a = WTuple::normalize(&m, x, vec![t1.clone(), t2.clone()], Mode::Semigroup).unwrap();
        let z = zeta(&m, &a).unwrap();
        let durations: Vec<Rat> = z.path().segments().iter().map(|s| s.duration.clone()).collect();
        let expected = &(&t1 + &t2) + &Rat::one();
        if durations != [t1.clone(), t2.clone(), Rat::one()] || z.path().length() != expected {
            failure = Some(format!("trial {k}: t1={t1} t2={t2}"));
            break;
        }
    }
    out.push(Check::new(id, failure.is_none(), failure.unwrap_or(format!("samples={pairs} pieces=(t1,t2,1)"))));
    out
}

pub fn bar_delta(_cfg: &Config) -> Vec<Check> {
    let maxdim = 4;
    let mut out = Vec::new();
    for (name, c) in fixtures::categories() {
        let comps = delta(&c, maxdim).expect("fixture categories are valid");
        let mut bad = Vec::new();
        for comp in &comps {
            let h: Vec<AbelianGroup> = homology_all(&comp.map.source().chains(), Coefficients::Integers)
                .iter()
                .map(|r| r.group())
                .collect();
            let homs = c.hom(comp.a, comp.b).len();
            let ok = h[0] == AbelianGroup::free(homs) && h[1..maxdim].iter().all(AbelianGroup::is_trivial) && comp.is_equivalence();
            if !ok {
                bad.push(format!("({},{})", c.object_name(comp.b), c.object_name(comp.a)));
            }
        }
        let details = if bad.is_empty() {
            format!("pairs={} maxdim={maxdim}", comps.len())
        } else {
            format!("failing pairs {}", bad.join(" "))
        };
        out.push(Check::new(format!("bar-delta/{name}"), bad.is_empty(), details));
    }
    out
}

pub fn hocolim_preservation(_cfg: &Config) -> Vec<Check> {
    let gs: Vec<(&str, FinMonoid)> = fixtures::monoids().into_iter().filter(|(_, m)| m.is_group() && m.size() <= 4).collect();
    let mut out = Vec::new();
    for (i, (n1, g1)) in gs.iter().enumerate() {
        for (n2, g2) in &gs[i..] {
            let r = hocolim_preservation_check(g1, g2, 3).expect("groups");
            let lhs: Vec<AbelianGroup> = r.degrees.iter().map(|d| d.1.clone()).collect();
            let rhs: Vec<AbelianGroup> = r.degrees.iter().map(|d| d.2.clone()).collect();
            out.push(Check::new(
                format!("hocolim/{n1}+{n2}"),
                r.passed(),
                format!("hocolim={} sum={}", groups(&lhs), groups(&rhs)),
            ));
        }
    }
    out
}

pub fn james_shadow(_cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    for letters in 1..=4 {
        let maxdim = letters + 1;
        let s1 = SimplicialSet::circle(maxdim);
        let j = james(&s1, letters, maxdim).expect("the circle is based");
        let h: Vec<AbelianGroup> = homology_all(&j.chains(), Coefficients::Integers).iter().map(|r| r.group()).collect();
        let integral = h[..=letters].iter().all(|g| *g == AbelianGroup::free(1));
        let reduced = reduced_homology_all(&j.chains());
        let mut oracle = vec![AbelianGroup::trivial(); maxdim];
        for k in 1..=letters {
            let sp = smash_power_oracle(&s1, k, maxdim).expect("the circle is based");
            for (n, g) in oracle.iter_mut().enumerate() {
                *g = g.direct_sum(&sp[n]);
            }
        }
        let matches = reduced[..maxdim] == oracle[..];
        out.push(Check::new(
            format!("james/S1/L{letters}"),
            integral && matches,
            format!("H={} oracle={}", groups(&h[..=letters]), groups(&oracle)),
        ));
    }
    let maxdim = 5;
    let circle = SimplicialSet::circle(maxdim);
    let spaces: Vec<(&str, SimplicialSet)> = vec![
        ("s0", SimplicialSet::s0(maxdim)),
        ("circle", circle.clone()),
        ("sphere2", SimplicialSet::sphere(2, maxdim)),
        ("torus", product(&circle, &circle).unwrap().with_basepoint(0).unwrap()),
        ("wedge-s1-s1", wedge(&circle, &circle).unwrap()),
        ("bz2", nerve(&FinMonoid::cyclic(2), maxdim)),
    ];
    for (name, x) in spaces {
        let hx = reduced_homology_all(&x.chains());
        let hs = reduced_homology_all(&suspension(&x).unwrap().chains());
        let ok = hs[0].is_trivial() && (1..maxdim).all(|n| hs[n] == hx[n - 1]);
        out.push(Check::new(
            format!("suspension/{name}"),
            ok,
            format!("H̃(ΣX)={} H̃(X)={}", groups(&hs[..maxdim]), groups(&hx[..maxdim - 1])),
        ));
    }
    out
}

pub fn group_completion(_cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    for size in 1..=4 {
        for (k, m) in FinMonoid::enumerate(size).iter().enumerate() {
            let (ab, _) = m.abelianization();
            let h1 = h1_of_bm(m);
            let gr = grothendieck_group(&ab).expect("abelianizations are commutative");
            out.push(Check::new(
                format!("grpcomp/n{size}#{k}"),
                h1 == gr,
                format!("H1(BM)={h1} K(Mab)={gr}"),
            ));
        }
    }
    out
}
