use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::bail;
use crate::exactalg::{ChainComplex, IntMatrix};
use crate::simplicial::FinSemigroup;
use crate::unionfind::UnionFind;

/// A cube of W̄G: consecutive blocks are separated by a wall at `t = 1` and
/// the letters inside a block are joined by free parameters in `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockCell {
    pub blocks: Vec<Vec<usize>>,
}

impl BlockCell {
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.len() - 1).sum()
    }

    pub fn letters(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// The `(t = 0, t = 1)` faces of free slot `j`.
    fn slot_faces(&self, g: &FinSemigroup, j: usize) -> (BlockCell, BlockCell) {
        let mut j = j;
        for (bi, b) in self.blocks.iter().enumerate() {
            if j < b.len() - 1 {
                let mut merged = self.blocks.clone();
                let x = g.mul(b[j], b[j + 1]);
                merged[bi].splice(j..j + 2, [x]);
                let mut split = self.blocks.clone();
                let tail = split[bi].split_off(j + 1);
                split.insert(bi + 1, tail);
                return (BlockCell { blocks: merged }, BlockCell { blocks: split });
            }
            j -= b.len() - 1;
        }
        unreachable!("slot index beyond the cell dimension")
    }
}

fn compositions(k: usize) -> Vec<Vec<usize>> {
    // bit i set: a wall after letter i
    (0..1usize << (k - 1))
        .map(|mask| {
            let mut sizes = Vec::new();
            let mut run = 1;
            for i in 0..k - 1 {
                if mask >> i & 1 == 1 {
                    sizes.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            sizes.push(run);
            sizes
        })
        .collect()
}

/// All cells with at most `letters` letters, grouped by dimension.
pub fn block_cells(g: &FinSemigroup, letters: usize) -> crate::Result<Vec<Vec<BlockCell>>> {
    if letters == 0 {
        bail!(Range, "letter bound must be at least 1");
    }
    let mut by_dim: Vec<Vec<BlockCell>> = vec![Vec::new(); letters];
    for k in 1..=letters {
        let words = crate::simplicial::tuples(g.size(), k);
        for sizes in compositions(k) {
            for w in &words {
                let mut blocks = Vec::with_capacity(sizes.len());
                let mut at = 0;
                for &s in &sizes {
                    blocks.push(w[at..at + s].to_vec());
                    at += s;
                }
                let cell = BlockCell { blocks };
                by_dim[cell.dim()].push(cell);
            }
        }
    }
    for cells in &mut by_dim {
        cells.sort();
    }
    Ok(by_dim)
}

/// Cellular chains of the W̄G cube complex truncated at `letters` letters:
/// `∂ = Σⱼ (−1)ʲ (merge_j − split_j)` over the free slots `j`.
pub fn wbar_complex(g: &FinSemigroup, letters: usize) -> crate::Result<ChainComplex> {
    let cells = block_cells(g, letters)?;
    let index: Vec<BTreeMap<&BlockCell, usize>> = cells
        .iter()
        .map(|cs| cs.iter().enumerate().map(|(i, c)| (c, i)).collect())
        .collect();
    let mut boundaries = Vec::with_capacity(letters - 1);
    for d in 1..letters {
        let mut m = IntMatrix::zeros(cells[d - 1].len(), cells[d].len());
        for (col, cell) in cells[d].iter().enumerate() {
            for j in 0..d {
                let (merge, split) = cell.slot_faces(g, j);
                let sign = if j % 2 == 0 { 1 } else { -1 };
                m.add_to(index[d - 1][&merge], col, &BigInt::from(sign));
                m.add_to(index[d - 1][&split], col, &BigInt::from(-sign));
            }
        }
        boundaries.push(m);
    }
    let dims = cells.iter().map(|c| c.len()).collect();
    ChainComplex::new(dims, boundaries)
}

/// Path components of the 0-cells (all words with at most `letters`
/// letters), as classes of words in sorted order.
pub fn wbar_components(g: &FinSemigroup, letters: usize) -> crate::Result<Vec<Vec<Vec<usize>>>> {
    let cells = block_cells(g, letters)?;
    let words: Vec<Vec<usize>> = cells[0].iter().map(|c| c.blocks.concat()).collect();
    let index: BTreeMap<&BlockCell, usize> = cells[0].iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut uf = UnionFind::new(words.len());
    if letters > 1 {
        for cell in &cells[1] {
            let (merge, split) = cell.slot_faces(g, 0);
            uf.union(index[&merge], index[&split]);
        }
    }
    Ok(uf
        .classes()
        .into_iter()
        .map(|cls| cls.into_iter().map(|i| words[i].clone()).collect())
        .collect())
}

/// Whether the components are exactly the fibers of `word ↦ product`.
pub fn components_match_products(g: &FinSemigroup, classes: &[Vec<Vec<usize>>]) -> bool {
    let product = |w: &Vec<usize>| w[1..].iter().fold(w[0], |acc, &x| g.mul(acc, x));
    let mut seen = Vec::new();
    for cls in classes {
        let p = product(&cls[0]);
        if cls.iter().any(|w| product(w) != p) || seen.contains(&p) {
            return false;
        }
        seen.push(p);
    }
    true
}
