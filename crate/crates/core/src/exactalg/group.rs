use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::normalize_diagonal;

/// A finitely generated abelian group `Z^rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` in
/// invariant-factor form (`1 < d₁ | d₂ | …`). Equality is isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        AbelianGroup::new(0, &[BigInt::from(order)])
    }

    /// Builds the group from any list of cyclic orders; zeros and units are
    /// dropped and the rest is brought to invariant-factor form.
    pub fn new(rank: usize, orders: &[BigInt]) -> Self {
        let torsion = normalize_diagonal(orders)
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        AbelianGroup { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        AbelianGroup::new(self.rank + other.rank, &orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let r = if first { Ok(()) } else { write!(f, " + ") };
            first = false;
            r
        };
        match self.rank {
            0 => {}
            1 => {
                sep(f)?;
                write!(f, "Z")?;
            }
            r => {
                sep(f)?;
                write!(f, "Z^{r}")?;
            }
        }
        for d in &self.torsion {
            sep(f)?;
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn chinese_remainder_merges() {
        let g = AbelianGroup::cyclic(2).direct_sum(&AbelianGroup::cyclic(3));
        assert_eq!(g, AbelianGroup::cyclic(6));
        assert_eq!(g.to_string(), "Z/6");
        let k = AbelianGroup::cyclic(2).direct_sum(&AbelianGroup::cyclic(2));
        assert_eq!(k.to_string(), "Z/2 + Z/2");
        assert_eq!(AbelianGroup::free(2).direct_sum(&k).to_string(), "Z^2 + Z/2 + Z/2");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert!(AbelianGroup::new(0, &[BigInt::from(1)]).is_trivial());
    }
}
