//! Binomial coefficients and relatives, with the usual zero conventions.

use super::poly::Poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `n!/(k!(n-k)!)`, and 0 unless `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `binom(n, k/2)` where `k` may be odd; non-integral lower index gives 0.
pub fn binom_half(n: i64, twice_k: i64) -> BigInt {
    if twice_k.rem_euclid(2) != 0 {
        BigInt::zero()
    } else {
        binom(n, twice_k / 2)
    }
}

/// Binomial with arbitrary integer top: `n(n-1)...(n-k+1)/k!` for `k >= 0`,
/// zero for `k < 0`. Agrees with [`binom`] when `n >= 0`.
pub fn binom_ext(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// `1/m!` with `1/m! = 0` for negative `m`.
pub fn recip_factorial(m: i64) -> BigRational {
    if m < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), factorial(m as u64))
    }
}

/// `(sum k)! / prod k_i!`; zero if any part is negative.
pub fn multinomial(parts: &[i64]) -> BigInt {
    if parts.iter().any(|&k| k < 0) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    let mut total = 0;
    for &k in parts {
        total += k;
        acc *= binom(total, k);
    }
    acc
}

/// `r(r-1)...(r-k+1)/k!` for rational `r`.
pub fn gen_binom(r: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (r - BigRational::from_integer(BigInt::from(i))) / BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Gaussian polynomial `[n choose k]_q`, zero outside `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64) -> Poly<BigInt> {
    if k < 0 || n < 0 || k > n {
        return Poly::zero();
    }
    // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    let k = k as usize;
    let mut row: Vec<Poly<BigInt>> = vec![Poly::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let left = if j >= 1 { row[j - 1].clone() } else { Poly::zero() };
            let right = if j < row.len() { row[j].shift(j) } else { Poly::zero() };
            next.push(left + right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn qint(n: usize) -> Poly<BigInt> {
    Poly::new(vec![BigInt::one(); n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{int, rat};

    #[test]
    fn conventions() {
        assert_eq!(binom(5, 3), int(10));
        assert_eq!(binom(4, -1), int(0));
        assert_eq!(binom(3, 5), int(0));
        assert_eq!(binom(0, 0), int(1));
        assert_eq!(binom_half(4, 3), int(0));
        assert_eq!(binom_half(4, 4), int(6));
        assert_eq!(binom_ext(-2, 2), int(3));
    }

    #[test]
    fn generalized() {
        assert_eq!(gen_binom(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(gen_binom(&rat(5, 3), 0), rat(1, 1));
        assert_eq!(gen_binom(&rat(7, 2), 1), rat(7, 2));
    }

    #[test]
    fn gaussian() {
        assert_eq!(qbinom(3, 2), Poly::from_ints(&[1, 1, 1]));
        assert_eq!(qbinom(4, 2), Poly::from_ints(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(7, 0), Poly::one());
        assert!(qbinom(2, 3).is_zero());
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[1, 1, 1]), int(6));
        assert_eq!(multinomial(&[2, 1, 1]), int(12));
        assert_eq!(multinomial(&[2, -1]), int(0));
        assert_eq!(recip_factorial(-1), rat(0, 1));
        assert_eq!(recip_factorial(3), rat(1, 6));
    }
}
