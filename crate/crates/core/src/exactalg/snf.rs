//! Smith normal form.
//!
//! [`smith_normal_form`] is the dense reference algorithm that also returns
//! the unimodular transforms. [`invariant_factors`] is the sparse path used
//! for homology; it only tracks the diagonal.
//!
//! Pivoting rule (both paths): the nonzero entry of least absolute value,
//! ties broken by `(row, col)` order.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `left · A · right = diagonal`, with `left` and `right` unimodular and the
/// diagonal entries nonnegative, each dividing the next, zeros trailing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries in order.
    pub fn factors(&self) -> Vec<BigInt> {
        let k = self.diagonal.rows().min(self.diagonal.cols());
        (0..k)
            .map(|i| self.diagonal.get(i, i))
            .filter(|d| !d.is_zero())
            .collect()
    }
}

fn euclid(a: &BigInt, p: &BigInt) -> BigInt {
    // quotient with remainder in [0, |p|)
    let r = a.mod_floor(&p.abs());
    (a - r) / p
}

fn less_abs(a: &BigInt, b: &BigInt) -> bool {
    a.magnitude() < b.magnitude()
}

/// Dense Smith normal form with transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut d = a.to_dense();
    let mut u = IntMatrix::identity(m).to_dense();
    let mut v = IntMatrix::identity(n).to_dense();

    fn row_axpy(mat: &mut [Vec<BigInt>], dst: usize, q: &BigInt, src: usize) {
        // row[dst] -= q * row[src]
        let (s, t) = if dst < src {
            let (lo, hi) = mat.split_at_mut(src);
            (&hi[0], &mut lo[dst])
        } else {
            let (lo, hi) = mat.split_at_mut(dst);
            (&lo[src], &mut hi[0])
        };
        for (x, y) in t.iter_mut().zip(s.iter()) {
            if !y.is_zero() {
                *x -= q * y;
            }
        }
    }
    fn col_axpy(mat: &mut [Vec<BigInt>], dst: usize, q: &BigInt, src: usize) {
        for row in mat.iter_mut() {
            if !row[src].is_zero() {
                let t = q * &row[src];
                row[dst] -= t;
            }
        }
    }
    fn swap_cols(mat: &mut [Vec<BigInt>], a: usize, b: usize) {
        for row in mat.iter_mut() {
            row.swap(a, b);
        }
    }

    let mut t = 0;
    while t < m.min(n) {
        // global pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j].is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if !less_abs(&d[i][j], &d[bi][bj]) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            for i in t + 1..m {
                if !d[i][t].is_zero() {
                    let q = euclid(&d[i][t], &d[t][t]);
                    row_axpy(&mut d, i, &q, t);
                    row_axpy(&mut u, i, &q, t);
                }
            }
            for j in t + 1..n {
                if !d[t][j].is_zero() {
                    let q = euclid(&d[t][j], &d[t][t]);
                    col_axpy(&mut d, j, &q, t);
                    col_axpy(&mut v, j, &q, t);
                }
            }
            // leftover remainders: move the smallest into the pivot slot
            let mut best: Option<(usize, usize)> = None;
            for i in t + 1..m {
                if !d[i][t].is_zero() && best.is_none_or(|(bi, bj)| less_abs(&d[i][t], &d[bi][bj])) {
                    best = Some((i, t));
                }
            }
            for j in t + 1..n {
                if !d[t][j].is_zero() && best.is_none_or(|(bi, bj)| less_abs(&d[t][j], &d[bi][bj])) {
                    best = Some((t, j));
                }
            }
            if let Some((bi, bj)) = best {
                if bi != t {
                    d.swap(t, bi);
                    u.swap(t, bi);
                } else {
                    swap_cols(&mut d, t, bj);
                    swap_cols(&mut v, t, bj);
                }
                continue;
            }
            // divisibility of the trailing block
            let p = d[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, &minus_one, i);
                    row_axpy(&mut u, t, &minus_one, i);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -core::mem::take(x);
            }
            for x in u[t].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
        t += 1;
    }

    SmithDecomposition {
        diagonal: IntMatrix::from_dense(m, n, d),
        left: IntMatrix::from_dense(m, m, u),
        right: IntMatrix::from_dense(n, n, v),
    }
}

/// Turns an arbitrary list of nonzero diagonal entries into invariant-factor
/// form: absolute values, each dividing the next.
pub fn normalize_diagonal(entries: &[BigInt]) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = entries.iter().filter(|x| !x.is_zero()).map(|x| x.abs()).collect();
    let k = d.len();
    for i in 0..k {
        for j in i + 1..k {
            if !d[j].is_multiple_of(&d[i]) {
                let g = d[i].gcd(&d[j]);
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

trait Scalar: Clone + Debug + Sized {
    fn nil() -> Self;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn vanishes(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn quot(&self, p: &Self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn nil() -> i64 {
        0
    }
    fn from_big(b: &BigInt) -> Option<i64> {
        i64::try_from(b).ok().filter(|&x| x != i64::MIN)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn cmp_abs(&self, other: &i64) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn quot(&self, p: &i64) -> Option<i64> {
        self.checked_div_euclid(*p)
    }
    fn sub_mul(&self, q: &i64, b: &i64) -> Option<i64> {
        q.checked_mul(*b)
            .and_then(|x| self.checked_sub(x))
            .filter(|&x| x != i64::MIN)
    }
}

impl Scalar for BigInt {
    fn nil() -> BigInt {
        Zero::zero()
    }
    fn from_big(b: &BigInt) -> Option<BigInt> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cmp_abs(&self, other: &BigInt) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn quot(&self, p: &BigInt) -> Option<BigInt> {
        Some(euclid(self, p))
    }
    fn sub_mul(&self, q: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(self - q * b)
    }
}

struct Overflow;

struct SparseElim<T> {
    rows: Vec<Vec<(usize, T)>>,
    cols: Vec<BTreeSet<usize>>,
}

impl<T: Scalar> SparseElim<T> {
    fn new(a: &IntMatrix) -> Result<Self, Overflow> {
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); a.rows()];
        let mut cols = vec![BTreeSet::new(); a.cols()];
        for (i, j, v) in a.entries() {
            rows[i].push((j, T::from_big(v).ok_or(Overflow)?));
            cols[j].insert(i);
        }
        Ok(SparseElim { rows, cols })
    }

    fn entry(&self, i: usize, j: usize) -> Option<&T> {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |e| e.0).ok().map(|k| &row[k].1)
    }

    /// row[dst] -= q * row[src]
    fn row_op(&mut self, dst: usize, q: &T, src: usize) -> Result<(), Overflow> {
        let src_row = core::mem::take(&mut self.rows[src]);
        let dst_row = core::mem::take(&mut self.rows[dst]);
        let mut out = Vec::with_capacity(dst_row.len() + src_row.len());
        let mut a = dst_row.into_iter().peekable();
        let mut b = src_row.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    let (j, v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let nv = v.sub_mul(q, w).ok_or(Overflow)?;
                    if nv.vanishes() {
                        self.cols[j].remove(&dst);
                    } else {
                        out.push((j, nv));
                    }
                }
                (Some(x), Some(y)) if x.0 < y.0 => out.push(a.next().unwrap()),
                (Some(_), None) => out.push(a.next().unwrap()),
                (_, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    let nv = T::nil().sub_mul(q, w).ok_or(Overflow)?;
                    if !nv.vanishes() {
                        self.cols[*j].insert(dst);
                        out.push((*j, nv));
                    }
                }
                (None, None) => break,
            }
        }
        self.rows[src] = src_row;
        self.rows[dst] = out;
        Ok(())
    }

    fn remove_row(&mut self, r: usize) {
        for (j, _) in core::mem::take(&mut self.rows[r]) {
            self.cols[j].remove(&r);
        }
    }

    fn global_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &T)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                let better = match best {
                    None => true,
                    Some((bi, bj, bv)) => match v.cmp_abs(bv) {
                        Ordering::Less => true,
                        Ordering::Equal => (i, *j) < (bi, bj),
                        Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((i, *j, v));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(mut self) -> Result<Vec<BigInt>, Overflow> {
        let mut diag = Vec::new();
        while let Some((mut r, mut c)) = self.global_pivot() {
            loop {
                let p = self.entry(r, c).unwrap().clone();
                let others: Vec<usize> = self.cols[c].iter().copied().filter(|&i| i != r).collect();
                for i in others {
                    let a = self.entry(i, c).unwrap().clone();
                    let q = a.quot(&p).ok_or(Overflow)?;
                    self.row_op(i, &q, r)?;
                }
                // smallest remainder left in the column becomes the new pivot
                let mut best: Option<usize> = None;
                for &i in self.cols[c].iter().filter(|&&i| i != r) {
                    let v = self.entry(i, c).unwrap();
                    if best.is_none_or(|b| v.cmp_abs(self.entry(b, c).unwrap()) == Ordering::Less) {
                        best = Some(i);
                    }
                }
                if let Some(i) = best {
                    r = i;
                    continue;
                }
                // column c is clear; column ops reduce row r modulo p
                let mut row = core::mem::take(&mut self.rows[r]);
                let mut kept = Vec::with_capacity(row.len());
                for (j, v) in row.drain(..) {
                    if j == c {
                        kept.push((j, v));
                        continue;
                    }
                    let q = v.quot(&p).ok_or(Overflow)?;
                    let rem = v.sub_mul(&q, &p).ok_or(Overflow)?;
                    if rem.vanishes() {
                        self.cols[j].remove(&r);
                    } else {
                        kept.push((j, rem));
                    }
                }
                self.rows[r] = kept;
                let mut best: Option<(usize, T)> = None;
                for (j, v) in &self.rows[r] {
                    if *j != c && best.as_ref().is_none_or(|(_, b)| v.cmp_abs(b) == Ordering::Less) {
                        best = Some((*j, v.clone()));
                    }
                }
                match best {
                    Some((j, _)) => {
                        c = j;
                        continue;
                    }
                    None => {
                        diag.push(p.to_big());
                        self.remove_row(r);
                        break;
                    }
                }
            }
        }
        Ok(diag)
    }
}

/// Nonzero invariant factors of `a` (each dividing the next), computed by
/// sparse elimination. Their count is the rank of `a`.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let small = SparseElim::<i64>::new(a).and_then(|e| e.run());
    let diag = match small {
        Ok(d) => d,
        Err(Overflow) => match SparseElim::<BigInt>::new(a).and_then(|e| e.run()) {
            Ok(d) => d,
            Err(Overflow) => unreachable!("big integer elimination cannot overflow"),
        },
    };
    normalize_diagonal(&diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(s.left.mul(a).unwrap().mul(&s.right).unwrap(), s.diagonal);
        assert!(s.left.is_unimodular());
        assert!(s.right.is_unimodular());
        for (i, j, _) in s.diagonal.entries() {
            assert_eq!(i, j, "off-diagonal entry");
        }
        let f = s.factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert_eq!(f, invariant_factors(a));
        s
    }

    #[test]
    fn two_by_two_example() {
        // hand reduction: gcd(2,4,6) = 2, det = 12
        let a = IntMatrix::from_rows(&[[2, 4], [0, 6]]).unwrap();
        let s = check(&a);
        assert_eq!(s.factors(), vec![BigInt::from(2), BigInt::from(6)]);
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMatrix::identity(3);
        let s = check(&a);
        assert_eq!(s.diagonal, a);
        assert_eq!(s.left, IntMatrix::identity(3));
        assert_eq!(s.right, IntMatrix::identity(3));
    }

    #[test]
    fn zero_matrix() {
        let a = IntMatrix::zeros(2, 3);
        let s = check(&a);
        assert!(s.diagonal.is_zero());
        assert!(invariant_factors(&a).is_empty());
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2,3) is not in normal form; SNF is diag(1,6)
        let a = IntMatrix::from_rows(&[[2, 0], [0, 3]]).unwrap();
        let s = check(&a);
        assert_eq!(s.factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let a = IntMatrix::from_rows(&[[big, big - 1], [big - 7, big + 5]]).unwrap();
        let det = a.determinant().unwrap();
        let f = invariant_factors(&a);
        let prod: BigInt = f.iter().product();
        assert_eq!(prod, det.abs());
        check(&a);
    }

    #[test]
    fn normalize_diagonal_gcd_lcm() {
        let d = normalize_diagonal(&[BigInt::from(4), BigInt::from(-6), BigInt::from(0), BigInt::from(2)]);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(12)]);
    }
}
