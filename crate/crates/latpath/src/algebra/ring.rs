use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Commutative ring with unit, the coefficient domain for every count.
///
/// Everything in the crate is generic over this trait; the concrete
/// instances are big integers, big rationals, univariate polynomials over
/// a ring and multivariate integer polynomials (symbolic weights).
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&BigInt::from(n))
    }

    /// Multiplicative inverse, if the element is a unit.
    fn inverse(&self) -> Option<Self>;

    fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Rings where a quotient can be checked for exactness (integral domains
/// with a division algorithm, or fields).
pub trait ExactDiv: Ring {
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }
    fn inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

impl Ring for BigRational {
    fn from_int(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self / d)
        }
    }
}

/// Integer value of a rational, or `None` if it has a denominator.
pub fn rational_to_integer(r: &BigRational) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
