use super::poly::Poly;
use super::ring::Ring;
use crate::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Power series known modulo `z^(order+1)`.
///
/// Binary operations on series of different orders return a series of the
/// smaller order, since nothing beyond it is known.
#[derive(Clone, PartialEq)]
pub struct Series<R> {
    c: Vec<R>,
}

impl<R: Ring> Series<R> {
    pub fn new(mut c: Vec<R>, order: usize) -> Self {
        c.resize(order + 1, R::zero());
        Series { c }
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        Series::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    pub fn constant(a: R, order: usize) -> Self {
        Series::new(vec![a], order)
    }

    /// The series variable `z`.
    pub fn var(order: usize) -> Self {
        Series::monomial(R::one(), 1, order)
    }

    pub fn monomial(a: R, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.c[k] = a;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn coeff(&self, n: usize) -> R {
        self.c.get(n).cloned().unwrap_or_else(R::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.c.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn to_poly(&self) -> Poly<R> {
        Poly::new(self.c.clone())
    }

    pub fn scale(&self, a: &R) -> Self {
        Series { c: self.c.iter().map(|x| x.clone() * a.clone()).collect() }
    }

    /// Multiply by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut c = vec![R::zero(); k.min(n + 1)];
        c.extend(self.c.iter().take((n + 1).saturating_sub(k)).cloned());
        Series { c }
    }

    /// Divide by `z^k`; the first `k` coefficients must vanish. The order
    /// drops by `k`.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.c.iter().take(k).any(|x| !x.is_zero()) {
            return Err(Error::NotInvertible(format!("series not divisible by z^{}", k)));
        }
        if k > self.order() {
            return Err(Error::NotInvertible("shift exceeds order".into()));
        }
        Ok(Series { c: self.c[k..].to_vec() })
    }

    /// Formal derivative; the order drops by one (stays 0 at order 0).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Series::zero(0);
        }
        Series::new((1..=n).map(|i| self.c[i].clone() * R::from_i64(i as i64)).collect(), n - 1)
    }

    /// `1/f`, requiring an invertible constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.c[0].inverse().ok_or_else(|| Error::NotInvertible("constant term of series is not a unit".into()))?;
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        for k in 1..=n {
            let mut s = R::zero();
            for j in 1..=k {
                if !self.c[j].is_zero() {
                    s = s + self.c[j].clone() * g[k - j].clone();
                }
            }
            g.push(-(s * inv0.clone()));
        }
        Ok(Series { c: g })
    }

    pub fn div(&self, d: &Series<R>) -> Result<Self> {
        Ok(self.clone() * d.reciprocal()?)
    }

    /// `f(a z^k)`.
    pub fn substitute_monomial(&self, a: &R, k: usize) -> Self {
        let n = self.order();
        let mut out = Series::zero(n);
        let mut ap = R::one();
        for i in 0..=n {
            if i * k > n {
                break;
            }
            out.c[i * k] = self.c[i].clone() * ap.clone();
            ap = ap * a.clone();
        }
        out
    }

    /// `f(g(z))` for `g` without constant term.
    pub fn compose(&self, g: &Series<R>) -> Result<Self> {
        if !g.c[0].is_zero() {
            return Err(Error::Precondition("compose: inner series needs zero constant term".into()));
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        let mut acc = Series::zero(n);
        for a in self.c.iter().take(n + 1).rev() {
            acc = acc * g.clone() + Series::constant(a.clone(), n);
        }
        Ok(acc)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { c: self.c.iter().map(f).collect() }
    }
}

impl<R: Ring> Add for Series<R> {
    type Output = Series<R>;
    fn add(self, o: Series<R>) -> Series<R> {
        let n = self.order().min(o.order());
        Series { c: (0..=n).map(|i| self.c[i].clone() + o.c[i].clone()).collect() }
    }
}

impl<R: Ring> Sub for Series<R> {
    type Output = Series<R>;
    fn sub(self, o: Series<R>) -> Series<R> {
        self + (-o)
    }
}

impl<R: Ring> Neg for Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series { c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl<R: Ring> Mul for Series<R> {
    type Output = Series<R>;
    fn mul(self, o: Series<R>) -> Series<R> {
        let n = self.order().min(o.order());
        let mut c = vec![R::zero(); n + 1];
        for i in 0..=n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if !o.c[j].is_zero() {
                    c[i + j] = c[i + j].clone() + self.c[i].clone() * o.c[j].clone();
                }
            }
        }
        Series { c }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        write!(f, "{} + O(z^{})", p.fmt_var("z"), self.order() + 1)
    }
}

impl<R: Ring> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series{:?}+O({})", self.c, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = Series<BigInt>;

    fn s(c: &[i64], n: usize) -> S {
        Series::new(c.iter().map(|&x| BigInt::from(x)).collect(), n)
    }

    #[test]
    fn geometric_reciprocal() {
        assert_eq!(s(&[1, -1], 3).reciprocal().unwrap(), s(&[1, 1, 1, 1], 3));
    }

    #[test]
    fn derivative_of_square() {
        assert_eq!(s(&[0, 0, 1], 3).derivative(), s(&[0, 2], 2));
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(s(&[1, 1], 4) * s(&[1, -1], 4), s(&[1, 0, -1], 4));
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert!(s(&[2, 1], 3).reciprocal().is_err());
        assert!(s(&[0, 1], 3).reciprocal().is_err());
    }

    #[test]
    fn mismatched_orders_take_minimum() {
        assert_eq!((s(&[1, 1], 5) + s(&[1], 2)).order(), 2);
    }

    #[test]
    fn compose_geometric() {
        // 1/(1-z) composed with 2z is 1/(1-2z)
        let g = s(&[1, 1, 1, 1, 1], 4);
        assert_eq!(g.compose(&s(&[0, 2], 4)).unwrap(), s(&[1, 2, 4, 8, 16], 4));
    }
}
