use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::bail;

use super::{invariant_factors, AbelianGroup, ChainComplex, IntMatrix};

/// Coefficient ring for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Rationals,
    /// `F_p`; `p` must be prime.
    Prime(u64),
}

impl Coefficients {
    pub fn prime(p: u64) -> crate::Result<Self> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            bail!(Precondition, "{p} is not prime");
        }
        Ok(Coefficients::Prime(p))
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Rationals => write!(f, "Q"),
            Coefficients::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// Homology in one degree. Over a field `torsion` is empty and `betti` is
/// the dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyResult {
    pub fn group(&self) -> AbelianGroup {
        AbelianGroup {
            rank: self.betti,
            torsion: self.torsion.clone(),
        }
    }
}

/// Rank of a matrix over `F_p` by sparse Gaussian elimination.
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let reduce = |v: &BigInt| -> u64 { v.mod_floor(&pb).to_u64().unwrap() };
    let mul = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % p as u128) as u64 };
    let inv = |a: u64| -> u64 {
        // Fermat
        let (mut base, mut e, mut r) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        r
    };
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for row in a.sparse_rows() {
        let mut cur: BTreeMap<usize, u64> = row
            .iter()
            .map(|(j, v)| (*j, reduce(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some((&lead, &lv)) = cur.iter().next() {
            match pivots.get(&lead) {
                Some(prow) => {
                    // prow is normalized with leading coefficient 1
                    for &(j, pv) in prow {
                        let e = cur.entry(j).or_insert(0);
                        *e = (*e + p - mul(lv, pv)) % p;
                        if *e == 0 {
                            cur.remove(&j);
                        }
                    }
                }
                None => {
                    let s = inv(lv);
                    let norm = cur.iter().map(|(&j, &v)| (j, mul(v, s))).collect();
                    pivots.insert(lead, norm);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn check_degree(c: &ChainComplex, n: usize) -> crate::Result<()> {
    if n > c.top_degree() {
        bail!(Range, "degree {n} exceeds top degree {}", c.top_degree());
    }
    Ok(())
}

/// Homology of `c` in degree `n`. The boundary out of the top degree is
/// taken to be zero, so callers working with truncated complexes should only
/// trust degrees below the truncation.
pub fn homology(c: &ChainComplex, n: usize, coeffs: Coefficients) -> crate::Result<HomologyResult> {
    check_degree(c, n)?;
    let out = c.boundary(n);
    let inc = c.boundary(n + 1);
    Ok(match coeffs {
        Coefficients::Integers | Coefficients::Rationals => {
            let r_out = out.map_or(0, |m| invariant_factors(m).len());
            let f_in = inc.map(invariant_factors).unwrap_or_default();
            let torsion = if coeffs == Coefficients::Integers {
                f_in.iter().filter(|d| !d.is_one()).cloned().collect()
            } else {
                Vec::new()
            };
            HomologyResult {
                degree: n,
                betti: c.rank(n) - r_out - f_in.len(),
                torsion,
            }
        }
        Coefficients::Prime(p) => {
            let r_out = out.map_or(0, |m| rank_mod_p(m, p));
            let r_in = inc.map_or(0, |m| rank_mod_p(m, p));
            HomologyResult {
                degree: n,
                betti: c.rank(n) - r_out - r_in,
                torsion: Vec::new(),
            }
        }
    })
}

/// Homology in every degree `0..=D`, reusing each boundary's reduction.
pub fn homology_all(c: &ChainComplex, coeffs: Coefficients) -> Vec<HomologyResult> {
    let top = c.top_degree();
    // ranks[n] and factors[n] describe ∂_n for n in 1..=top
    let mut ranks = alloc::vec![0usize; top + 2];
    let mut factors: Vec<Vec<BigInt>> = alloc::vec![Vec::new(); top + 2];
    for n in 1..=top {
        let m = c.boundary(n).unwrap();
        match coeffs {
            Coefficients::Prime(p) => ranks[n] = rank_mod_p(m, p),
            _ => {
                let f = invariant_factors(m);
                ranks[n] = f.len();
                factors[n] = f;
            }
        }
    }
    (0..=top)
        .map(|n| HomologyResult {
            degree: n,
            betti: c.rank(n) - ranks[n] - ranks[n + 1],
            torsion: if coeffs == Coefficients::Integers {
                factors[n + 1].iter().filter(|d| !d.is_one()).cloned().collect()
            } else {
                Vec::new()
            },
        })
        .collect()
}

/// Reduced integral homology groups `H̃_0 … H̃_D` (the degree-0 rank drops by
/// one when the complex is nonempty).
pub fn reduced_homology_all(c: &ChainComplex) -> Vec<AbelianGroup> {
    homology_all(c, Coefficients::Integers)
        .iter()
        .map(|h| {
            let mut g = h.group();
            if h.degree == 0 && g.rank > 0 {
                g.rank -= 1;
            }
            g
        })
        .collect()
}

/// `Σ (-1)^n rank C_n`.
pub fn euler_characteristic(c: &ChainComplex) -> i64 {
    c.dims()
        .iter()
        .enumerate()
        .map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}
