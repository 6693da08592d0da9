use super::ring::{ExactDiv, Ring};
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| R::from_i64(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &Matrix<R>) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, o.cols, |i, j| {
            let mut s = R::zero();
            for k in 0..self.cols {
                s = s + self.get(i, k).clone() * o.get(k, j).clone();
            }
            s
        })
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// `[self | o]`.
    pub fn hcat(&self, o: &Matrix<R>) -> Self {
        assert_eq!(self.rows, o.rows);
        Matrix::from_fn(
            self.rows,
            self.cols + o.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    o.get(i, j - self.cols).clone()
                }
            },
        )
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix<R>, b: &Matrix<R>, c: &Matrix<R>, d: &Matrix<R>) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let (r, k) = (a.rows, a.cols);
        Matrix::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| match (i < r, j < k) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - k).clone(),
            (false, true) => c.get(i - r, j).clone(),
            (false, false) => d.get(i - r, j - k).clone(),
        })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i).clone()))
    }

    /// Skew-symmetric completion of the strict upper triangle.
    pub fn skew_from_upper(&self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            if i < j {
                self.get(i, j).clone()
            } else if i > j {
                -self.get(j, i).clone()
            } else {
                R::zero()
            }
        })
    }

    /// Division-free determinant by expansion over column subsets, memoised
    /// (O(2^n n)); works over any commutative ring.
    pub fn det_expand(&self) -> R {
        assert!(self.is_square(), "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        // f[mask] = det of rows 0..popcount(mask) on columns in mask
        let mut f: HashMap<u64, R> = HashMap::new();
        f.insert(0, R::one());
        let mut layer: Vec<u64> = vec![0];
        for i in 0..n {
            let mut next: HashMap<u64, R> = HashMap::new();
            for &mask in &layer {
                let base = f[&mask].clone();
                if base.is_zero() {
                    continue;
                }
                for j in 0..n {
                    if mask >> j & 1 == 1 || self.get(i, j).is_zero() {
                        continue;
                    }
                    // sign: number of chosen columns greater than j
                    let above = (mask >> (j + 1)).count_ones();
                    let mut t = base.clone() * self.get(i, j).clone();
                    if above % 2 == 1 {
                        t = -t;
                    }
                    let e = next.entry(mask | 1 << j).or_insert_with(R::zero);
                    *e = e.clone() + t;
                }
            }
            layer = next.keys().copied().collect();
            f = next;
        }
        f.remove(&((1u64 << n) - 1)).unwrap_or_else(R::zero)
    }

    /// Pfaffian of the skew matrix determined by the strict upper triangle,
    /// by memoised expansion along the first remaining index. Any ring.
    pub fn pfaffian(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::Precondition("pfaffian of non-square matrix".into()));
        }
        let n = self.rows;
        if n % 2 == 1 {
            return Err(Error::Precondition(format!("pfaffian needs even dimension, got {}", n)));
        }
        if n > 60 {
            return Err(Error::Unsupported("pfaffian dimension above 60".into()));
        }
        let mut memo = HashMap::new();
        Ok(self.pf_rec((1u64 << n) - 1, &mut memo))
    }

    fn pf_rec(&self, mask: u64, memo: &mut HashMap<u64, R>) -> R {
        if mask == 0 {
            return R::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << i);
        let mut acc = R::zero();
        let mut sign_neg = false;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = self.get(i, j);
            if !a.is_zero() {
                let sub = self.pf_rec(rest & !(1u64 << j), memo);
                let t = a.clone() * sub;
                acc = if sign_neg { acc - t } else { acc + t };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

impl<R: ExactDiv> Matrix<R> {
    /// Fraction-free (Bareiss) determinant with row pivoting.
    pub fn det(&self) -> R {
        assert!(self.is_square(), "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        let mut a: Vec<Vec<R>> = (0..n).map(|i| self.data[i * n..(i + 1) * n].to_vec()).collect();
        let mut prev = R::one();
        let mut neg = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        neg = !neg;
                    }
                    None => return R::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division must be exact");
                }
                a[i][k] = R::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if neg {
            -d
        } else {
            d
        }
    }
}

impl Matrix<BigRational> {
    /// Pfaffian by skew-symmetric Gaussian elimination over the rationals.
    pub fn pfaffian_field(&self) -> Result<BigRational> {
        let n = self.rows;
        if !self.is_square() || n % 2 == 1 {
            return Err(Error::Precondition(format!("pfaffian needs even square dimension, got {}", n)));
        }
        let mut a = self.skew_from_upper();
        let mut pf = BigRational::one();
        let mut k = 0;
        while k < n {
            // bring a nonzero entry into position (k, k+1)
            let piv = (k + 1..n).find(|&j| !a.get(k, j).is_zero());
            let j = match piv {
                Some(j) => j,
                None => return Ok(BigRational::zero()),
            };
            if j != k + 1 {
                swap_sym(&mut a, j, k + 1);
                pf = -pf;
            }
            let p = a.get(k, k + 1).clone();
            pf *= p.clone();
            // eliminate rows/cols i > k+1 against the 2x2 pivot block
            for i in k + 2..n {
                let f1 = a.get(k, i).clone() / p.clone();
                let f0 = -a.get(k + 1, i).clone() / p.clone();
                // row/col i -= f1*(row/col k+1) + f0*(row/col k)
                for t in 0..n {
                    let v = a.get(i, t).clone() - f1.clone() * a.get(k + 1, t).clone() - f0.clone() * a.get(k, t).clone();
                    a.set(i, t, v);
                }
                for t in 0..n {
                    let v = a.get(t, i).clone() - f1.clone() * a.get(t, k + 1).clone() - f0.clone() * a.get(t, k).clone();
                    a.set(t, i, v);
                }
            }
            k += 2;
        }
        Ok(pf)
    }
}

fn swap_sym<R: Ring>(a: &mut Matrix<R>, x: usize, y: usize) {
    let n = a.rows;
    for t in 0..n {
        let u = a.get(x, t).clone();
        let v = a.get(y, t).clone();
        a.set(x, t, v);
        a.set(y, t, u);
    }
    for t in 0..n {
        let u = a.get(t, x).clone();
        let v = a.get(t, y).clone();
        a.set(t, x, v);
        a.set(t, y, u);
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = (0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]).collect();
        write!(f, "Matrix{:?}", rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::MPoly;
    use crate::algebra::ring::int;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    #[test]
    fn small_determinants() {
        assert_eq!(M::identity(3).det(), int(1));
        assert_eq!(M::from_i64(&[vec![6, 4], vec![4, 6]]).det(), int(20));
        assert_eq!(M::from_i64(&[vec![7]]).det(), int(7));
        assert_eq!(M::from_i64(&[vec![0, 1], vec![1, 0]]).det(), int(-1));
    }

    #[test]
    fn expansion_agrees_with_bareiss() {
        let m = M::from_i64(&[vec![2, -1, 0, 3], vec![1, 0, 4, 1], vec![0, 5, -2, 2], vec![3, 1, 1, 0]]);
        assert_eq!(m.det(), m.det_expand());
    }

    #[test]
    fn pfaffian_basics() {
        let mut m = M::zeros(2, 2);
        m.set(0, 1, int(9));
        assert_eq!(m.pfaffian().unwrap(), int(9));
        let ones = M::from_fn(4, 4, |i, j| if i < j { int(1) } else { int(0) });
        assert_eq!(ones.pfaffian().unwrap(), int(1));
        assert!(M::zeros(3, 3).pfaffian().is_err());
    }

    #[test]
    fn symbolic_pfaffian_of_four() {
        // Pf = a01 a23 - a02 a13 + a03 a12
        let m = Matrix::from_fn(4, 4, |i, j| if i < j { MPoly::var(i * 4 + j) } else { MPoly::zero() });
        let v = |i: usize, j: usize| MPoly::var(i * 4 + j);
        let want = v(0, 1) * v(2, 3) - v(0, 2) * v(1, 3) + v(0, 3) * v(1, 2);
        assert_eq!(m.pfaffian().unwrap(), want);
    }

    #[test]
    fn field_pfaffian_agrees() {
        let m = Matrix::from_fn(6, 6, |i, j| {
            if i < j {
                BigRational::from_integer(BigInt::from(((i * 7 + j * 3) % 5) as i64 - 2))
            } else {
                BigRational::zero()
            }
        });
        assert_eq!(m.pfaffian_field().unwrap(), m.pfaffian().unwrap());
    }
}
