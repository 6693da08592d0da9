use super::ring::Ring;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse multivariate polynomial with integer coefficients.
///
/// Used for symbolic weights: every weight of a continued fraction or a
/// transfer matrix becomes its own indeterminate, so an identity checked
/// in this ring holds for all weight choices at once.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u16>, BigInt>,
}

fn trim(mut e: Vec<u16>) -> Vec<u16> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl MPoly {
    /// The indeterminate `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0u16; i + 1];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, BigInt::one());
        MPoly { terms }
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max()
    }

    /// Drop every monomial of total degree above `d`.
    pub fn truncate_degree(&self, d: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as u32).sum::<u32>() <= d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval<R: Ring>(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = R::from_int(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * point[i].pow(k as u32);
                }
            }
            acc = acc + t;
        }
        acc
    }

    fn insert(&mut self, e: Vec<u16>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(BigInt::one())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, o: MPoly) -> MPoly {
        for (e, c) in o.terms {
            self.insert(e, c);
        }
        self
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, o: MPoly) -> MPoly {
        self + (-o)
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    // monomials multiply by adding exponents
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let n = e1.len().max(e2.len());
                let e: Vec<u16> = (0..n).map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0)).collect();
                out.insert(e, c1 * c2);
            }
        }
        out
    }
}

impl Ring for MPoly {
    fn from_int(n: &BigInt) -> Self {
        MPoly::constant(n.clone())
    }
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.is_empty() && c.abs().is_one() {
                return Some(self.clone());
            }
        }
        None
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i) } else { format!("x{}^{}", i, k) })
                .collect();
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", mag, mono.join("*"))
            };
            if first {
                write!(f, "{}{}", sign, body)?;
            } else {
                write!(f, " {} {}", sign, body)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_square() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let s = (x.clone() + y.clone()) * (x.clone() + y.clone());
        let t = x.clone() * x.clone() + MPoly::from_i64(2) * x.clone() * y.clone() + y.clone() * y;
        assert_eq!(s, t);
        assert_eq!(s.term_count(), 3);
    }

    #[test]
    fn cancellation_empties() {
        let x = MPoly::var(2);
        assert!((x.clone() - x).is_zero());
    }

    #[test]
    fn evaluation() {
        let p = MPoly::var(0) * MPoly::var(1) + MPoly::from_i64(3);
        assert_eq!(p.eval(&[BigInt::from(2), BigInt::from(5)]), BigInt::from(13));
    }
}
