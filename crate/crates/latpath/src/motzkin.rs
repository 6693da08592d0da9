//! Motzkin, Schröder and Dyck paths: closed forms, continued fractions,
//! generating functions and counts in a horizontal strip.

use crate::algebra::{binom, binom_half, MPoly, Poly, Ring, Series};
use crate::orthopoly::poly_from_recurrence;
use crate::plane::{catalan, round_guarded};
use crate::{pre, Error, Integer, Rational, Result};
use num_traits::{One, Zero};
use std::f64::consts::PI;

/// Weights of Motzkin paths by height: a level step at height `h` has
/// weight `b_h`, a down step from `h` to `h - 1` has weight `lambda_h`,
/// up steps have weight 1. `lambda[0]` holds `lambda_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MotzkinWeighting<R> {
    pub b: Vec<R>,
    pub lambda: Vec<R>,
}

impl<R: Ring> MotzkinWeighting<R> {
    pub fn new(b: Vec<R>, lambda: Vec<R>) -> Self {
        MotzkinWeighting { b, lambda }
    }

    /// `b_h = b`, `lambda_h = l` for heights `0..=levels`.
    pub fn constant(b: R, l: R, levels: usize) -> Self {
        MotzkinWeighting { b: vec![b; levels + 1], lambda: vec![l; levels] }
    }

    /// `b_h = fb(h)` for `h <= levels`, `lambda_h = fl(h)` for `1 <= h <= levels`.
    pub fn from_fn(levels: usize, fb: impl Fn(usize) -> R, fl: impl Fn(usize) -> R) -> Self {
        MotzkinWeighting { b: (0..=levels).map(fb).collect(), lambda: (1..=levels).map(fl).collect() }
    }

    /// Largest `k` with `b_0..b_k` and `lambda_1..lambda_k` all given.
    pub fn levels(&self) -> Option<usize> {
        if self.b.is_empty() {
            None
        } else {
            Some((self.b.len() - 1).min(self.lambda.len()))
        }
    }

    pub fn b(&self, h: usize) -> &R {
        &self.b[h]
    }

    /// `lambda_h` for `h >= 1`.
    pub fn lambda(&self, h: usize) -> &R {
        &self.lambda[h - 1]
    }

    /// Fails unless `b_0..b_{nb-1}` and `lambda_1..lambda_nl` are given.
    pub fn require(&self, nb: usize, nl: usize) -> Result<()> {
        pre(self.b.len() >= nb && self.lambda.len() >= nl, || {
            format!("need {} level weights and {} down weights, have {} and {}", nb, nl, self.b.len(), self.lambda.len())
        })
    }

    /// The weights of heights shifted down by `j`: `b_h -> b_{h+j}`,
    /// `lambda_h -> lambda_{h+j}`.
    pub fn shifted(&self, j: usize) -> Self {
        MotzkinWeighting { b: self.b.iter().skip(j).cloned().collect(), lambda: self.lambda.iter().skip(j).cloned().collect() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> MotzkinWeighting<S> {
        MotzkinWeighting { b: self.b.iter().map(&f).collect(), lambda: self.lambda.iter().map(&f).collect() }
    }
}

impl MotzkinWeighting<MPoly> {
    /// Independent indeterminates: `b_h = x_h`, `lambda_h = x_{levels+h}`.
    pub fn symbolic(levels: usize) -> Self {
        MotzkinWeighting::from_fn(levels, MPoly::var, |h| MPoly::var(levels + h))
    }
}

/// Motzkin paths from `(a,b)` to `(c,d)` not passing below the x-axis.
pub fn motzkin_count(a: i64, b: i64, c: i64, d: i64) -> Result<Integer> {
    pre(b >= 0 && d >= 0, || format!("heights must be nonnegative, got b={} d={}", b, d))?;
    let n = c - a;
    Ok((0..=n.max(-1)).map(|k| binom(n, k) * (binom_half(n - k, c + d - k - a - b) - binom_half(n - k, c + d - k - a + b + 2))).sum())
}

/// Schröder paths (steps `(1,1)`, `(1,-1)`, `(2,0)`) from `(a,b)` to
/// `(c,d)` not passing below the x-axis.
pub fn schroeder_count(a: i64, b: i64, c: i64, d: i64) -> Result<Integer> {
    pre(b >= 0 && d >= 0, || format!("heights must be nonnegative, got b={} d={}", b, d))?;
    let n = c - a;
    if n < 0 {
        return Ok(Integer::zero());
    }
    Ok((0..=n / 2)
        .map(|k| binom(n - k, k) * (binom_half(n - 2 * k, c + d - 2 * k - a - b) - binom_half(n - 2 * k, c + d - 2 * k - a + b + 2)))
        .sum())
}

pub fn motzkin_number(n: u64) -> Integer {
    let n = n as i64;
    (0..=n / 2).map(|k| binom(n, 2 * k) * catalan(k)).sum()
}

/// Large Schröder number: Schröder paths from `(0,0)` to `(2n,0)`.
pub fn schroeder_number(n: u64) -> Integer {
    let n = n as i64;
    (0..=n).map(|k| binom(n + k, 2 * k) * catalan(k)).sum()
}

pub fn little_schroeder(n: u64) -> Integer {
    if n == 0 {
        Integer::one()
    } else {
        schroeder_number(n) / 2
    }
}

/// Solution of `M = 1 + z M + z^2 M^2`, coefficient by coefficient.
pub fn motzkin_gf(order: usize) -> Series<Integer> {
    let mut m: Vec<Integer> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut v = if n == 0 { Integer::one() } else { m[n - 1].clone() };
        if n >= 2 {
            for i in 0..=n - 2 {
                v += &m[i] * &m[n - 2 - i];
            }
        }
        m.push(v);
    }
    Series::new(m, order)
}

/// Solution of `S = 1 + z S + z S^2`, coefficient by coefficient.
pub fn schroeder_gf(order: usize) -> Series<Integer> {
    let mut s: Vec<Integer> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut v = if n == 0 { Integer::one() } else { s[n - 1].clone() };
        if n >= 1 {
            for i in 0..n {
                v += &s[i] * &s[n - 1 - i];
            }
        }
        s.push(v);
    }
    Series::new(s, order)
}

fn zero_constant<R: Ring>(p: &Poly<R>, what: &str) -> Result<()> {
    pre(p.coeff(0).is_zero(), || format!("{} must have zero constant term", what))
}

/// `1/(1 - b_0 - lambda_1/(1 - b_1 - ...))` with weights polynomial in
/// `z`, to order `order`. With `k = Some(k)` the fraction stops at level
/// `k`; with `None` it is cut at depth `order`, deeper levels cannot
/// affect the retained coefficients.
pub fn cf_series<R: Ring>(w: &MotzkinWeighting<Poly<R>>, k: Option<usize>, order: usize) -> Result<Series<R>> {
    let depth = k.unwrap_or(order);
    w.require(depth + 1, depth)?;
    for h in 0..=depth {
        zero_constant(w.b(h), "level weight")?;
        if h >= 1 {
            zero_constant(w.lambda(h), "down weight")?;
        }
    }
    let one = Series::one(order);
    let mut f = Series::zero(order);
    for h in (0..=depth).rev() {
        let mut den = one.clone() - Series::from_poly(w.b(h), order);
        if h < depth {
            den = den - Series::from_poly(w.lambda(h + 1), order) * f;
        }
        f = den.reciprocal()?;
    }
    Ok(f)
}

/// Dyck paths where a down step from height `h` directly after an up step
/// has weight `nu[h-1]`, and after a down step `lambda[h-1]`.
pub fn rv_peak_cf<R: Ring>(nu: &[Poly<R>], lambda: &[Poly<R>], order: usize) -> Result<Series<R>> {
    let depth = order.max(1);
    pre(nu.len() >= depth && lambda.len() >= depth, || format!("need {} weights of each kind", depth))?;
    for h in 0..depth {
        zero_constant(&nu[h], "peak weight")?;
        zero_constant(&lambda[h], "down weight")?;
    }
    let one = Series::one(order);
    let mut f = Series::zero(order);
    for h in (0..depth).rev() {
        let diff = Series::from_poly(&(nu[h].clone() - lambda[h].clone()), order);
        let den = one.clone() - diff - Series::from_poly(&lambda[h], order) * f;
        f = den.reciprocal()?;
    }
    Ok(f)
}

/// Weighted Motzkin paths from height `r` to height `s` in `n` steps,
/// staying in `0 <= y <= k`, by iterating the transfer matrix.
pub fn strip_count_transfer<R: Ring>(r: usize, s: usize, k: usize, n: usize, w: &MotzkinWeighting<R>) -> Result<R> {
    pre(r <= k && s <= k, || format!("heights r={} s={} must lie in 0..={}", r, s, k))?;
    w.require(k + 1, k)?;
    let mut v = vec![R::zero(); k + 1];
    v[r] = R::one();
    for _ in 0..n {
        let mut nv = vec![R::zero(); k + 1];
        for h in 0..=k {
            if v[h].is_zero() {
                continue;
            }
            if h < k {
                nv[h + 1] = nv[h + 1].clone() + v[h].clone();
            }
            nv[h] = nv[h].clone() + v[h].clone() * w.b(h).clone();
            if h > 0 {
                nv[h - 1] = nv[h - 1].clone() + v[h].clone() * w.lambda(h).clone();
            }
        }
        v = nv;
    }
    Ok(v[s].clone())
}

fn reciprocal_op<R: Ring>(w: &MotzkinWeighting<R>, n: usize) -> Result<Poly<R>> {
    Ok(poly_from_recurrence(w, n)?.reciprocal(n))
}

/// Generating function (variable `x` marks length) of weighted Motzkin
/// paths from height `r` to height `s` in the strip `0 <= y <= k`, as a
/// ratio of reciprocal orthogonal polynomials.
pub fn strip_gf<R: Ring>(r: usize, s: usize, k: usize, w: &MotzkinWeighting<R>, order: usize) -> Result<Series<R>> {
    pre(r <= k && s <= k, || format!("heights r={} s={} must lie in 0..={}", r, s, k))?;
    w.require(k + 1, k)?;
    let (lo, hi) = (r.min(s), r.max(s));
    let num = reciprocal_op(w, lo)? * reciprocal_op(&w.shifted(hi + 1), k - hi)?;
    let mut num = num.shift(hi - lo);
    if r > s {
        let prod = (s + 1..=r).fold(R::one(), |acc, h| acc * w.lambda(h).clone());
        num = num.scale(&prod);
    }
    let den = reciprocal_op(w, k + 1)?;
    Series::from_poly(&num, order).div(&Series::from_poly(&den, order))
}

/// Unweighted Motzkin paths in the strip via the cosine sum, rounded.
pub fn strip_count_trig(r: i64, s: i64, k: i64, n: u32) -> Result<Integer> {
    Ok(strip_count_trig_value(r, s, k, n)?.0)
}

/// Rounded value and the raw floating-point sum.
pub fn strip_count_trig_value(r: i64, s: i64, k: i64, n: u32) -> Result<(Integer, f64)> {
    pre(0 <= r && r <= k && 0 <= s && s <= k, || format!("heights r={} s={} must lie in 0..={}", r, s, k))?;
    let m = (k + 2) as f64;
    let v: f64 = (1..=k + 1)
        .map(|j| {
            let t = PI * j as f64 / m;
            (2.0 * t.cos() + 1.0).powi(n as i32) * (t * (r + 1) as f64).sin() * (t * (s + 1) as f64).sin()
        })
        .sum::<f64>()
        * 2.0
        / m;
    Ok((round_guarded(v, "strip cosine sum")?, v))
}

/// Probability that player A, starting with `a` of `total` dollars, goes
/// bankrupt exactly after round `rounds`.
pub fn gambler_ruin(a: i64, total: i64, rounds: usize, pa: &Rational, pb: &Rational) -> Result<Rational> {
    pre(0 < a && a < total, || format!("need 0 < a < R, got a={} R={}", a, total))?;
    pre(rounds >= 1, || "at least one round".into())?;
    let z = Rational::zero();
    if *pa < z || *pb < z || pa.clone() + pb.clone() > Rational::one() {
        return Err(Error::Precondition(format!("invalid probabilities pA={} pB={}", pa, pb)));
    }
    let pt = Rational::one() - pa - pb;
    let k = (total - 2) as usize;
    let w = MotzkinWeighting::constant(pt, pa * pb, k);
    // reversed path from height 0 to a-1: its down steps are A's wins, each
    // paired with one of B's wins; the a-1 unpaired B wins remain
    let paths = strip_count_transfer(0, (a - 1) as usize, k, rounds - 1, &w)?;
    Ok(Ring::pow(pb, a as u32) * paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn closed_forms() {
        assert_eq!(motzkin_count(0, 0, 4, 0).unwrap(), int(9));
        assert_eq!(schroeder_count(0, 0, 4, 0).unwrap(), int(6));
        assert_eq!(motzkin_count(0, 0, 0, 0).unwrap(), int(1));
        assert_eq!(motzkin_number(5), int(21));
        assert_eq!(schroeder_number(3), int(22));
        assert_eq!(little_schroeder(0), int(1));
        assert_eq!(little_schroeder(3), int(11));
    }

    #[test]
    fn functional_equations() {
        let m: Vec<Integer> = [1, 1, 2, 4, 9, 21].iter().map(|&x| int(x)).collect();
        assert_eq!(motzkin_gf(5).coeffs(), &m[..]);
        let s: Vec<Integer> = [1, 2, 6, 22, 90].iter().map(|&x| int(x)).collect();
        assert_eq!(schroeder_gf(4).coeffs(), &s[..]);
        assert_eq!(motzkin_gf(0).coeffs(), &[int(1)]);
    }

    #[test]
    fn continued_fractions() {
        let z = Poly::<Integer>::x();
        let w = MotzkinWeighting::constant(z.clone(), z.clone() * z.clone(), 8);
        assert_eq!(cf_series(&w, None, 5).unwrap(), motzkin_gf(5));
        let w0 = MotzkinWeighting::new(vec![z.clone()], vec![]);
        assert_eq!(cf_series(&w0, Some(0), 4).unwrap(), Series::new(vec![int(1); 5], 4));
        let zero = vec![Poly::<Integer>::zero(); 4];
        assert_eq!(rv_peak_cf(&zero, &zero, 4).unwrap(), Series::one(4));
    }

    #[test]
    fn strips() {
        let one = MotzkinWeighting::constant(int(1), int(1), 4);
        assert_eq!(strip_count_transfer(0, 0, 1, 2, &one).unwrap(), int(2));
        assert_eq!(strip_count_trig(0, 0, 1, 2).unwrap(), int(2));
        assert_eq!(strip_count_trig(0, 0, 3, 0).unwrap(), int(1));
        let g = strip_gf(0, 0, 1, &one, 6).unwrap();
        let want: Vec<Integer> = [1, 1, 2, 4, 8, 16, 32].iter().map(|&x| int(x)).collect();
        assert_eq!(g.coeffs(), &want[..]);
        let dyck = MotzkinWeighting::constant(int(0), int(1), 6);
        let g = strip_gf(0, 0, 6, &dyck, 10).unwrap();
        for n in 0..=5 {
            assert_eq!(g.coeff(2 * n), catalan(n as i64));
            assert_eq!(g.coeff(2 * n + 1), int(0));
        }
    }

    #[test]
    fn gambler() {
        assert_eq!(gambler_ruin(1, 2, 1, &rat(1, 2), &rat(1, 2)).unwrap(), rat(1, 2));
        assert!(gambler_ruin(1, 2, 1, &rat(3, 4), &rat(1, 2)).is_err());
    }
}
