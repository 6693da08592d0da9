//! q-Catalan numbers by area and by major index, their continued
//! fraction, and truncated Rogers-Ramanujan identities.

use crate::algebra::{int, qbinom, ExactDiv, Poly, Series};
use crate::{pre, Error, Integer, QPoly, Result};
use num_traits::{One, Zero};

/// Carlitz-Riordan q-Catalan number from
/// `C_n = sum_k q^k C_k C_(n-1-k)`.
pub fn q_catalan_cr(n: usize) -> QPoly {
    q_catalan_cr_table(n).pop().unwrap()
}

/// `C_0(q), ..., C_n(q)`.
pub fn q_catalan_cr_table(n: usize) -> Vec<QPoly> {
    let mut c: Vec<QPoly> = vec![Poly::one()];
    for m in 1..=n {
        let mut acc = QPoly::zero();
        for k in 0..m {
            acc = acc + (&c[k] * &c[m - 1 - k]).shift(k);
        }
        c.push(acc);
    }
    c
}

/// `1/(1 - z/(1 - qz/(1 - q^2 z/...)))` cut after `depth` levels, as a
/// series in `z` to order `order`.
pub fn q_catalan_cr_cf(depth: usize, order: usize) -> Result<Series<QPoly>> {
    pre(depth >= order, || format!("depth {} must be at least the order {}", depth, order))?;
    let mut f: Series<QPoly> = Series::one(order);
    for i in (0..depth).rev() {
        let qz = Series::monomial(QPoly::monomial(int(1), i), 1, order);
        f = (Series::one(order) - qz * f).reciprocal()?;
    }
    Ok(f)
}

/// Fürlinger-Hofbauer q-Catalan number
/// `(1 - q)/(1 - q^(n+1)) [2n choose n]_q`, by exact division.
pub fn q_catalan_maj(n: usize) -> Result<QPoly> {
    let num = Poly::from_ints(&[1, -1]) * qbinom(2 * n as i64, n as i64);
    let mut den = vec![0i64; n + 2];
    den[0] = 1;
    den[n + 1] = -1;
    num.div_exact(&Poly::from_ints(&den))
        .ok_or_else(|| Error::Numeric(format!("1 - q^{} does not divide (1 - q)[{} choose {}]_q", n + 1, 2 * n, n)))
}

/// `1/(q;q)_n` to order `order`.
fn inv_qpochhammer(n: usize, order: usize) -> Series<Integer> {
    let mut f = Series::one(order);
    for i in 1..=n.min(order) {
        // 1/(1 - q^i) = sum_j q^(ij)
        f = f * Series::new((0..=order).map(|j| if j % i == 0 { int(1) } else { int(0) }).collect(), order);
    }
    f
}

/// `sum_n q^(n^2 + a n)/(q;q)_n` to order `order`.
pub fn rogers_ramanujan_sum(a: usize, order: usize) -> Series<Integer> {
    let mut acc = Series::zero(order);
    let mut n = 0;
    while n * n + a * n <= order {
        acc = acc + inv_qpochhammer(n, order).shift(n * n + a * n).truncate(order);
        n += 1;
    }
    acc
}

/// `1/((q^(1+a); q^5)_inf (q^(4-a); q^5)_inf)` with factors of exponent
/// beyond `order` dropped.
pub fn rogers_ramanujan_product(a: usize, order: usize) -> Series<Integer> {
    let mut f = Series::one(order);
    for r in [1 + a, 4 - a] {
        let mut e = r;
        while e <= order {
            f = f * Series::new((0..=order).map(|j| if j % e == 0 { int(1) } else { int(0) }).collect(), order);
            e += 5;
        }
    }
    f
}

/// Both Rogers-Ramanujan identities to order `order`.
pub fn rr_truncation_check(order: usize) -> Result<(bool, bool)> {
    pre(order >= 1, || "order must be at least 1".into())?;
    let first = rogers_ramanujan_sum(0, order) == rogers_ramanujan_product(0, order);
    let second = rogers_ramanujan_sum(1, order) == rogers_ramanujan_product(1, order);
    Ok((first, second))
}

/// `1 + q/(1 + q^2/(1 + q^3/...))` cut after `depth` levels, to order
/// `order`.
pub fn ramanujan_cf(depth: usize, order: usize) -> Result<Series<Integer>> {
    let mut f: Series<Integer> = Series::one(order);
    for i in (1..=depth).rev() {
        f = Series::one(order) + Series::monomial(int(1), i, order) * f.reciprocal()?;
    }
    Ok(f)
}

/// `sum_n C_n(q) z^n` at `z = -q`, to order `order` in `q`.
pub fn q_catalan_at_minus_q(order: usize) -> Result<Series<Integer>> {
    let cf = q_catalan_cr_cf(order, order)?;
    let mut acc = Series::zero(order);
    for n in 0..=order {
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        let term = Series::from_poly(&cf.coeff(n).shift(n).scale(&sign), order);
        acc = acc + term;
    }
    Ok(acc)
}

/// The Ramanujan continued fraction, the ratio of the two
/// Rogers-Ramanujan sums and the reciprocal of the q-Catalan continued
/// fraction at `z = -q` agree to order `order`.
pub fn ramanujan_cf_check(order: usize) -> Result<bool> {
    pre(order >= 1, || "order must be at least 1".into())?;
    let cf = ramanujan_cf(order, order)?;
    let ratio = rogers_ramanujan_sum(0, order).div(&rogers_ramanujan_sum(1, order))?;
    let recip = q_catalan_at_minus_q(order)?.reciprocal()?;
    Ok(cf == ratio && cf == recip)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_carlitz_riordan() {
        assert_eq!(q_catalan_cr(0), Poly::from_ints(&[1]));
        assert_eq!(q_catalan_cr(2), Poly::from_ints(&[1, 1]));
        assert_eq!(q_catalan_cr(3), Poly::from_ints(&[1, 2, 1, 1]));
        let cf = q_catalan_cr_cf(6, 6).unwrap();
        assert_eq!(cf.coeff(2), Poly::from_ints(&[1, 1]));
        assert_eq!(cf.coeff(0), Poly::one());
    }

    #[test]
    fn small_major_index() {
        assert_eq!(q_catalan_maj(1).unwrap(), Poly::one());
        assert_eq!(q_catalan_maj(2).unwrap(), Poly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn rogers_ramanujan() {
        assert_eq!(rr_truncation_check(1).unwrap(), (true, true));
        assert_eq!(rr_truncation_check(30).unwrap(), (true, true));
        assert_eq!(ramanujan_cf(1, 1).unwrap(), Series::new(vec![int(1), int(1)], 1));
        assert!(ramanujan_cf_check(20).unwrap());
    }

    #[test]
    fn cf_depth_insensitive() {
        assert_eq!(q_catalan_cr_cf(8, 8).unwrap(), q_catalan_cr_cf(12, 8).unwrap());
        assert!(q_catalan_cr_cf(3, 5).is_err());
    }
}
