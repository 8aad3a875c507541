use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::bail;

use super::IntMatrix;

/// A finite free chain complex `C_0 ← C_1 ← … ← C_D`.
///
/// `boundary(n)` is the matrix of `∂_n : C_n → C_{n-1}` with `dim(n-1)` rows
/// and `dim(n)` columns (generators of `C_n` are columns). Construction
/// checks shapes and that every composite `∂_{n-1} ∘ ∂_n` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<IntMatrix>,
    labels: Option<Vec<Vec<String>>>,
}

impl ChainComplex {
    /// `boundaries[k]` is `∂_{k+1}`; `dims` must be nonempty.
    pub fn new(dims: Vec<usize>, boundaries: Vec<IntMatrix>) -> crate::Result<Self> {
        if dims.is_empty() {
            bail!(Range, "chain complex needs at least degree 0");
        }
        if boundaries.len() + 1 != dims.len() {
            bail!(
                Range,
                "{} boundary matrices for top degree {}",
                boundaries.len(),
                dims.len() - 1
            );
        }
        for (k, b) in boundaries.iter().enumerate() {
            let n = k + 1;
            if b.rows() != dims[n - 1] || b.cols() != dims[n] {
                bail!(
                    Range,
                    "boundary {n} is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    dims[n - 1],
                    dims[n]
                );
            }
        }
        for k in 1..boundaries.len() {
            let comp = boundaries[k - 1].mul(&boundaries[k])?;
            if !comp.is_zero() {
                bail!(Validation, "boundary {} composed with boundary {} is nonzero", k, k + 1);
            }
        }
        Ok(ChainComplex {
            dims,
            boundaries,
            labels: None,
        })
    }

    /// A complex concentrated in degree 0.
    pub fn point() -> Self {
        ChainComplex::new(alloc::vec![1], Vec::new()).expect("point complex")
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> crate::Result<Self> {
        if labels.len() != self.dims.len() || labels.iter().zip(&self.dims).any(|(l, &d)| l.len() != d) {
            bail!(Range, "label counts do not match ranks");
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    /// `∂_n` for `1 ≤ n ≤ D`.
    pub fn boundary(&self, n: usize) -> Option<&IntMatrix> {
        if n == 0 {
            None
        } else {
            self.boundaries.get(n - 1)
        }
    }

    pub fn labels(&self) -> Option<&[Vec<String>]> {
        self.labels.as_deref()
    }

    pub fn label(&self, n: usize, i: usize) -> String {
        match &self.labels {
            Some(l) => l[n][i].clone(),
            None => format!("g{n}_{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonzero_square() {
        let d1 = IntMatrix::from_rows(&[[1]]).unwrap();
        let d2 = IntMatrix::from_rows(&[[1]]).unwrap();
        let err = ChainComplex::new(alloc::vec![1, 1, 1], alloc::vec![d1, d2]).unwrap_err();
        assert!(matches!(err, crate::Error::Validation(_)));
    }

    #[test]
    fn rejects_bad_shape() {
        let d1 = IntMatrix::zeros(2, 1);
        assert!(ChainComplex::new(alloc::vec![1, 1], alloc::vec![d1]).is_err());
    }
}
