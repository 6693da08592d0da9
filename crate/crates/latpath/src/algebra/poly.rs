use super::ring::{ExactDiv, Ring};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial
/// has an empty coefficient list and `degree()` returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    c: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| R::from_i64(x)).collect())
    }

    pub fn constant(a: R) -> Self {
        Poly::new(vec![a])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Poly::monomial(R::one(), 1)
    }

    pub fn monomial(a: R, k: usize) -> Self {
        let mut c = vec![R::zero(); k + 1];
        c[k] = a;
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.c
    }

    pub fn coeff(&self, k: usize) -> R {
        self.c.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&R> {
        self.c.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|l| l.is_one())
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    pub fn scale(&self, a: &R) -> Self {
        Poly::new(self.c.iter().map(|x| x.clone() * a.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.c.iter().enumerate().skip(1).map(|(i, a)| a.clone() * R::from_i64(i as i64)).collect())
    }

    /// `x^n p(1/x)`: the reciprocal polynomial with respect to degree `n`.
    pub fn reciprocal(&self, n: usize) -> Self {
        assert!(self.c.len() <= n + 1, "reciprocal: degree exceeds n");
        let mut c = vec![R::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[n - i] = a.clone();
        }
        Poly::new(c)
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &Poly<R>) -> Self {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = acc * q.clone() + Poly::constant(a.clone());
        }
        acc
    }

    /// Truncate to degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Poly::new(self.c.iter().take(n).cloned().collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.c.iter().map(f).collect())
    }

    pub fn fmt_var(&self, var: &str) -> String
    where
        R: fmt::Display,
    {
        if self.c.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let coef = format!("{}", a);
            let needs_paren = coef.contains(['+', ' ']) || (coef[1..].contains('-'));
            let coef = if needs_paren { format!("({})", coef) } else { coef };
            let term = match i {
                0 => coef,
                _ => {
                    let mono = if i == 1 { var.to_string() } else { format!("{}^{}", var, i) };
                    if a.is_one() {
                        mono
                    } else if coef == "-1" {
                        format!("-{}", mono)
                    } else {
                        format!("{}*{}", coef, mono)
                    }
                }
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<R: ExactDiv> Poly<R> {
    /// Quotient and remainder; requires the leading coefficient of `d` to
    /// divide every intermediate leading term (always true over a field or
    /// for monic `d`).
    pub fn div_rem(&self, d: &Poly<R>) -> Option<(Poly<R>, Poly<R>)> {
        let dd = d.degree()?;
        let lead = d.leading()?.clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut q = vec![R::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let top = r[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let f = top.div_exact(&lead)?;
            for (j, b) in d.c.iter().enumerate() {
                r[i + j] = r[i + j].clone() - f.clone() * b.clone();
            }
            q[i] = f;
        }
        Some((Poly::new(q), Poly::new(r)))
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly { c: vec![R::one()] }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_int(n: &BigInt) -> Self {
        Poly::constant(R::from_int(n))
    }
    fn inverse(&self) -> Option<Self> {
        if self.c.len() == 1 {
            self.c[0].inverse().map(Poly::constant)
        } else {
            None
        }
    }
}

impl<R: ExactDiv> ExactDiv for Poly<R> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

fn add_vec<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.clone() + y.clone(),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

fn mul_vec<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] = c[i + j].clone() + x.clone() * y.clone();
        }
    }
    c
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: Poly<R>) -> Poly<R> {
        Poly::new(add_vec(&self.c, &o.c))
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: &Poly<R>) -> Poly<R> {
        Poly::new(add_vec(&self.c, &o.c))
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: Poly<R>) -> Poly<R> {
        self + (-o)
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: &Poly<R>) -> Poly<R> {
        self.clone() + (-o.clone())
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: Poly<R>) -> Poly<R> {
        Poly::new(mul_vec(&self.c, &o.c))
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: &Poly<R>) -> Poly<R> {
        Poly::new(mul_vec(&self.c, &o.c))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("q"))
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.c)
    }
}

/// Lagrange interpolation through `(x_i, y_i)`, exact over the rationals.
pub fn interpolate(xs: &[num_rational::BigRational], ys: &[num_rational::BigRational]) -> Poly<num_rational::BigRational> {
    use num_rational::BigRational;
    assert_eq!(xs.len(), ys.len());
    let mut acc: Poly<BigRational> = Poly::zero();
    for i in 0..xs.len() {
        let mut basis = Poly::constant(ys[i].clone());
        for j in 0..xs.len() {
            if i == j {
                continue;
            }
            let denom = xs[i].clone() - xs[j].clone();
            let lin = Poly::new(vec![-xs[j].clone(), BigRational::one()]);
            basis = basis * lin.scale(&(BigRational::one() / denom));
        }
        acc = acc + basis;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{int, rat};
    use num_rational::BigRational;

    type P = Poly<BigInt>;

    #[test]
    fn trims_trailing_zeros() {
        let p = P::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(P::from_ints(&[0, 0]).is_zero());
    }

    #[test]
    fn product_and_eval() {
        let p = P::from_ints(&[1, 1]) * P::from_ints(&[1, -1]);
        assert_eq!(p, P::from_ints(&[1, 0, -1]));
        assert_eq!(p.eval(&int(3)), int(-8));
    }

    #[test]
    fn exact_division() {
        let a = P::from_ints(&[-1, 0, 0, 1]);
        let b = P::from_ints(&[-1, 1]);
        assert_eq!(a.div_exact(&b), Some(P::from_ints(&[1, 1, 1])));
        assert_eq!(P::from_ints(&[1, 0, 1]).div_exact(&b), None);
    }

    #[test]
    fn reciprocal_reverses() {
        let p = P::from_ints(&[0, -2, 0, 1]);
        assert_eq!(p.reciprocal(3), P::from_ints(&[1, 0, -2]));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p: Poly<BigRational> = Poly::new(vec![rat(1, 2), rat(0, 1), rat(-3, 1), rat(1, 1)]);
        let xs: Vec<_> = (0..4).map(|i| rat(i, 1)).collect();
        let ys: Vec<_> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(P::from_ints(&[1, -1, 2]).to_string(), "1 - q + 2*q^2");
    }
}
