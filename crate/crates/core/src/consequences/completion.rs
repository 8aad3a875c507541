use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::bail;
use crate::exactalg::{homology, invariant_factors, AbelianGroup, Coefficients, IntMatrix};
use crate::simplicial::{nerve, FinMonoid};

/// Generators with relations `x + y − z` for known products `x·y = z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommMonoidPresentation {
    generators: Vec<String>,
    relations: IntMatrix,
}

impl CommMonoidPresentation {
    /// A presentation from a possibly partial product table.
    pub fn new(generators: Vec<String>, products: &[(usize, usize, usize)]) -> crate::Result<Self> {
        let k = generators.len();
        let mut relations = IntMatrix::zeros(products.len(), k);
        for (row, &(x, y, z)) in products.iter().enumerate() {
            if x >= k || y >= k || z >= k {
                bail!(Range, "relation {row} mentions an unknown generator");
            }
            relations.add_to(row, x, &BigInt::from(1));
            relations.add_to(row, y, &BigInt::from(1));
            relations.add_to(row, z, &BigInt::from(-1));
        }
        Ok(CommMonoidPresentation { generators, relations })
    }

    /// All relations of a commutative monoid's table.
    pub fn from_monoid(m: &FinMonoid) -> crate::Result<Self> {
        if !m.is_commutative() {
            bail!(Precondition, "monoid is not commutative; abelianize it first");
        }
        let products: Vec<(usize, usize, usize)> = (0..m.size())
            .flat_map(|x| (0..m.size()).map(move |y| (x, y)))
            .map(|(x, y)| (x, y, m.mul(x, y)))
            .collect();
        CommMonoidPresentation::new(m.names().to_vec(), &products)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// `ℤ^generators / relations`.
    pub fn group(&self) -> AbelianGroup {
        let factors = invariant_factors(&self.relations);
        let torsion: Vec<BigInt> = factors.iter().filter(|d| *d != &BigInt::from(1)).cloned().collect();
        AbelianGroup::new(self.generators.len() - factors.len(), &torsion)
    }
}

/// The Grothendieck group of a commutative monoid.
pub fn grothendieck_group(m: &FinMonoid) -> crate::Result<AbelianGroup> {
    Ok(CommMonoidPresentation::from_monoid(m)?.group())
}

/// `H₁(BM)`, read off the nerve truncated at degree 3.
pub fn h1_of_bm(m: &FinMonoid) -> AbelianGroup {
    homology(&nerve(m, 3).chains(), 1, Coefficients::Integers)
        .expect("degree 1 is in range")
        .group()
}
