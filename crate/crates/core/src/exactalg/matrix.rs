use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::bail;

/// Sparse integer matrix. Only nonzero entries are stored, keyed by
/// `(row, col)` so iteration is in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::one());
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> crate::Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                bail!(Range, "ragged matrix: row {i} has {} entries, expected {cols}", row.len());
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        Ok(m)
    }

    pub fn from_dense(rows: usize, cols: usize, data: Vec<Vec<BigInt>>) -> Self {
        let mut m = IntMatrix::zeros(rows, cols);
        for (i, row) in data.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Sets an entry. Panics if the index is out of bounds.
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, v: &BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        let slot = self.entries.entry((i, j)).or_default();
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            t.entries.insert((j, i), v.clone());
        }
        t
    }

    /// Rows as sparse `(col, value)` lists.
    pub fn sparse_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            out[i].push((j, v.clone()));
        }
        out
    }

    pub fn mul(&self, rhs: &IntMatrix) -> crate::Result<IntMatrix> {
        if self.cols != rhs.rows {
            bail!(
                Range,
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                rhs.rows,
                rhs.cols
            );
        }
        let rhs_rows = rhs.sparse_rows();
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (j, b) in &rhs_rows[k] {
                *acc.entry((i, *j)).or_default() += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(IntMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: acc,
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> crate::Result<BigInt> {
        if self.rows != self.cols {
            bail!(Range, "determinant of a non-square {}x{} matrix", self.rows, self.cols);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_dense();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                write!(f, " ")?;
                for v in row {
                    write!(f, " {v}")?;
                }
                writeln!(f)?;
            }
        } else {
            writeln!(f, "  {} nonzeros", self.entries.len())?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(&[[1, 2], [3, 4]]).unwrap();
        let b = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, IntMatrix::from_rows(&[[2, 1], [4, 3]]).unwrap());
        assert_eq!(a.transpose().get(0, 1), BigInt::from(3));
        assert!(a.mul(&IntMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn determinants() {
        let a = IntMatrix::from_rows(&[[2, 4], [0, 6]]).unwrap();
        assert_eq!(a.determinant().unwrap(), BigInt::from(12));
        let p = IntMatrix::from_rows(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]).unwrap();
        assert_eq!(p.determinant().unwrap(), BigInt::one());
        let s = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(s.determinant().unwrap(), BigInt::from(-1));
        assert!(s.is_unimodular());
        assert!(!a.is_unimodular());
    }
}
