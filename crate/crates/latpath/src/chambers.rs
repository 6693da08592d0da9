//! Paths in Weyl chambers and alcoves: the reflection-group signed sum,
//! determinant formulas for types A and C, and their affine versions.

#![allow(non_snake_case)]

use crate::algebra::{binom, binom_half, factorial, multinomial, recip_factorial, Matrix, Poly};
use crate::plane::round_guarded;
use crate::{pre, Error, Integer, Rational, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::f64::consts::PI;

/// Reflection group and its standard chamber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupType {
    /// `x_1 > ... > x_d`.
    A,
    /// `x_1 > ... > x_d > x_1 - N`.
    AffineA(i64),
    /// `x_1 > ... > x_d > 0`.
    C,
    /// `N > x_1 > ... > x_d > 0`.
    AffineC(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepFamily {
    /// Positive unit steps.
    S1,
    /// Positive and negative unit steps.
    S1Pm,
    /// `(+-1, ..., +-1)`.
    SdPm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChamberSpec {
    pub group: GroupType,
    pub d: usize,
    pub steps: StepFamily,
}

impl ChamberSpec {
    pub fn new(group: GroupType, d: usize, steps: StepFamily) -> Self {
        ChamberSpec { group, d, steps }
    }

    /// Strict chamber membership.
    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.d && in_chamber(self.group, x)
    }
}

fn strictly_dec(x: &[i64]) -> bool {
    x.windows(2).all(|w| w[0] > w[1])
}

fn weakly_dec(x: &[i64]) -> bool {
    x.windows(2).all(|w| w[0] >= w[1])
}

fn in_chamber(g: GroupType, x: &[i64]) -> bool {
    if !strictly_dec(x) {
        return false;
    }
    let (first, last) = match (x.first(), x.last()) {
        (Some(f), Some(l)) => (*f, *l),
        _ => return true,
    };
    match g {
        GroupType::A => true,
        GroupType::AffineA(n) => last > first - n,
        GroupType::C => last > 0,
        GroupType::AffineC(n) => last > 0 && first < n,
    }
}

fn same_len(a: &[i64], e: &[i64]) -> Result<()> {
    pre(a.len() == e.len(), || format!("start has {} coordinates, end has {}", a.len(), e.len()))
}

fn uniform_parity(x: &[i64]) -> bool {
    x.windows(2).all(|w| (w[0] - w[1]).rem_euclid(2) == 0)
}

fn check_parity(a: &[i64], e: &[i64]) -> Result<()> {
    pre(uniform_parity(a), || format!("coordinates of {:?} must share one parity", a))?;
    pre(uniform_parity(e), || format!("coordinates of {:?} must share one parity", e))
}

fn check_inside(g: GroupType, a: &[i64], e: &[i64]) -> Result<()> {
    pre(in_chamber(g, a), || format!("start {:?} is not strictly inside the {:?} chamber", a, g))?;
    pre(in_chamber(g, e), || format!("end {:?} is not strictly inside the {:?} chamber", e, g))
}

/// Simple paths `a -> e` in `Z^d`.
pub fn multinomial_count(a: &[i64], e: &[i64]) -> Result<Integer> {
    same_len(a, e)?;
    let parts: Vec<i64> = a.iter().zip(e).map(|(x, y)| y - x).collect();
    Ok(multinomial(&parts))
}

/// Paths from the origin to `c = (c_0, .., c_d)` with
/// `x_0 >= sum mu_i x_i`; `mu` has `d` entries.
pub fn hyperplane_bound(mu: &[i64], c: &[i64]) -> Result<Integer> {
    pre(c.len() == mu.len() + 1, || format!("need {} coordinates, got {}", mu.len() + 1, c.len()))?;
    pre(mu.iter().all(|&m| m >= 0), || "mu must be nonnegative".into())?;
    pre(c.iter().all(|&x| x >= 0), || "end point must be nonnegative".into())?;
    let slack = c[0] - mu.iter().zip(&c[1..]).map(|(m, x)| m * x).sum::<i64>();
    pre(slack >= 0, || format!("end point violates x_0 >= sum mu_i x_i by {}", -slack))?;
    let total: i64 = c.iter().sum();
    let mut parts = c.to_vec();
    parts[0] += 1;
    let num = BigInt::from(slack + 1) * multinomial(&parts);
    let den = BigInt::from(total + 1);
    if (&num % &den).is_zero() {
        Ok(num / den)
    } else {
        Err(Error::Numeric(format!("hyperplane count {}/{} is not an integer", num, den)))
    }
}

/// `I_alpha(2x)` as a polynomial truncated to degree `m`.
fn bessel_poly(alpha: i64, m: usize) -> Poly<Rational> {
    let a = alpha.abs();
    let mut c = vec![Rational::zero(); m + 1];
    let mut j = 0;
    while 2 * j + a <= m as i64 {
        c[(2 * j + a) as usize] = recip_factorial(j) * recip_factorial(j + a);
        j += 1;
    }
    Poly::new(c)
}

/// Unrestricted `m`-step paths from `u` to `v`.
pub fn free_count(steps: StepFamily, u: &[i64], v: &[i64], m: usize) -> Integer {
    let delta: Vec<i64> = u.iter().zip(v).map(|(x, y)| y - x).collect();
    let mi = m as i64;
    match steps {
        StepFamily::S1 => {
            if delta.iter().sum::<i64>() == mi {
                multinomial(&delta)
            } else {
                Integer::zero()
            }
        }
        StepFamily::SdPm => delta.iter().fold(Integer::one(), |acc, &dl| acc * binom_half(mi, mi + dl)),
        StepFamily::S1Pm => {
            let p = delta.iter().fold(Poly::<Rational>::one(), |acc, &dl| (acc * bessel_poly(dl, m)).truncate(m + 1));
            (p.coeff(m) * Rational::from_integer(factorial(m as u64))).to_integer()
        }
    }
}

/// Permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    crate::lgv::signed_permutations(n).into_iter().map(|(p, even)| (p, if even { 1 } else { -1 })).collect()
}

/// `sum_w sgn(w) |L_m(w(A) -> E; S)|` over the finite group.
pub fn signed_reflection_sum(spec: &ChamberSpec, a: &[i64], e: &[i64], m: usize) -> Result<Integer> {
    same_len(a, e)?;
    pre(a.len() == spec.d, || format!("points must have {} coordinates", spec.d))?;
    let signed = match spec.group {
        GroupType::A => false,
        GroupType::C => true,
        g => return Err(Error::Unsupported(format!("signed sum over the infinite group {:?}", g))),
    };
    if signed && spec.steps == StepFamily::S1 {
        return Err(Error::Precondition("positive unit steps are not invariant under sign changes".into()));
    }
    check_inside(spec.group, a, e)?;
    if spec.steps == StepFamily::SdPm {
        check_parity(a, e)?;
    }
    let d = spec.d;
    let sign_sets: Vec<Vec<i64>> = if signed {
        (0..1u32 << d).map(|mask| (0..d).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect()).collect()
    } else {
        vec![vec![1; d]]
    };
    let mut acc = Integer::zero();
    for (perm, ps) in permutations(d) {
        for signs in &sign_sets {
            let wa: Vec<i64> = (0..d).map(|i| signs[i] * a[perm[i]]).collect();
            let s = ps * signs.iter().product::<i64>();
            let c = free_count(spec.steps, &wa, e, m);
            if s > 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
    }
    Ok(acc)
}

/// Simple paths in `x_1 >= ... >= x_d`.
pub fn typeA_det(a: &[i64], e: &[i64]) -> Result<Integer> {
    same_len(a, e)?;
    pre(weakly_dec(a) && weakly_dec(e), || format!("{:?} and {:?} must be weakly decreasing", a, e))?;
    let total: i64 = a.iter().zip(e).map(|(x, y)| y - x).sum();
    if total < 0 {
        return Ok(Integer::zero());
    }
    let d = a.len();
    let m = Matrix::from_fn(d, d, |i, j| recip_factorial(e[i] - a[j] - i as i64 + j as i64));
    Ok((m.det() * Rational::from_integer(factorial(total as u64))).to_integer())
}

/// Standard Young tableaux of shape `lambda`.
pub fn hook_formula(lambda: &[i64]) -> Result<Integer> {
    pre(weakly_dec(lambda) && lambda.iter().all(|&x| x >= 0), || format!("{:?} is not a partition", lambda))?;
    let n: i64 = lambda.iter().sum();
    let mut den = Integer::one();
    for (i, &l) in lambda.iter().enumerate() {
        for j in 0..l {
            let leg = lambda[i + 1..].iter().filter(|&&x| x > j).count() as i64;
            den *= l - j + leg;
        }
    }
    let num = factorial(n as u64);
    if (&num % &den).is_zero() {
        Ok(num / den)
    } else {
        Err(Error::Numeric(format!("hook product does not divide {}!", n)))
    }
}

fn check_strict(a: &[i64], e: &[i64]) -> Result<()> {
    pre(strictly_dec(a) && strictly_dec(e), || format!("{:?} and {:?} must be strictly decreasing", a, e))
}

/// `m` steps from `(+-1, .., +-1)` in `x_1 > ... > x_d`.
pub fn lock_step_det(a: &[i64], e: &[i64], m: usize) -> Result<Integer> {
    same_len(a, e)?;
    check_strict(a, e)?;
    check_parity(a, e)?;
    let mi = m as i64;
    let d = a.len();
    Ok(Matrix::from_fn(d, d, |i, j| binom_half(mi, mi + e[i] - a[j])).det())
}

/// `m` steps from `(+-1, .., +-1)` in `x_1 > ... > x_d > 0`.
pub fn typeC_det(a: &[i64], e: &[i64], m: usize) -> Result<Integer> {
    same_len(a, e)?;
    check_strict(a, e)?;
    check_parity(a, e)?;
    pre(a.iter().chain(e).all(|&x| x > 0), || "coordinates must be positive".into())?;
    let mi = m as i64;
    let d = a.len();
    Ok(Matrix::from_fn(d, d, |i, j| binom_half(mi, mi + e[i] - a[j]) - binom_half(mi, mi + e[i] + a[j])).det())
}

/// Integer vectors with `lo_i <= k_i <= hi_i` summing to zero.
fn zero_sum_vectors(windows: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn rec(w: &[(i64, i64)], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i == w.len() {
            if cur.iter().sum::<i64>() == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // remaining coordinates must be able to cancel the partial sum
        let s: i64 = cur.iter().sum();
        let (rest_lo, rest_hi) = w[i + 1..].iter().fold((0, 0), |(l, h), &(a, b)| (l + a, h + b));
        for k in w[i].0..=w[i].1 {
            if s + k + rest_lo <= 0 && s + k + rest_hi >= 0 {
                cur.push(k);
                rec(w, cur, out);
                cur.pop();
            }
        }
    }
    rec(windows, &mut Vec::new(), &mut out);
    out
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

fn check_affine_a(a: &[i64], e: &[i64], n: i64) -> Result<()> {
    same_len(a, e)?;
    pre(n >= 1, || format!("period N must be positive, got {}", n))?;
    check_inside(GroupType::AffineA(n), a, e)
}

/// Simple paths in `x_1 > ... > x_d > x_1 - N`.
pub fn affineA_count(a: &[i64], e: &[i64], n: i64) -> Result<Integer> {
    check_affine_a(a, e, n)?;
    let d = a.len();
    let total: i64 = a.iter().zip(e).map(|(x, y)| y - x).sum();
    if total < 0 {
        return Ok(Integer::zero());
    }
    let (amin, amax) = (*a.iter().min().unwrap(), *a.iter().max().unwrap());
    // row i needs some 0 <= e_i - a_j + k_i N <= total
    let windows: Vec<(i64, i64)> = (0..d).map(|i| (div_ceil(amin - e[i], n), div_floor(total + amax - e[i], n))).collect();
    let mut acc = Rational::zero();
    for k in zero_sum_vectors(&windows) {
        let m = Matrix::from_fn(d, d, |i, j| recip_factorial(e[i] - a[j] + k[i] * n));
        acc += m.det();
    }
    Ok((acc * Rational::from_integer(factorial(total as u64))).to_integer())
}

/// `m` steps from `S_1^+-` in `x_1 > ... > x_d > x_1 - N`, via the
/// truncated Bessel determinant.
pub fn affineA_pm_egf(a: &[i64], e: &[i64], n: i64, m: usize) -> Result<Integer> {
    check_affine_a(a, e, n)?;
    let d = a.len();
    let mi = m as i64;
    let (emin, emax) = (*e.iter().min().unwrap(), *e.iter().max().unwrap());
    // row i needs some |e_j - a_i + k_i N| <= m
    let windows: Vec<(i64, i64)> = (0..d).map(|i| (div_ceil(-mi - emax + a[i], n), div_floor(mi - emin + a[i], n))).collect();
    let mut acc = Rational::zero();
    for k in zero_sum_vectors(&windows) {
        let mat = Matrix::from_fn(d, d, |i, j| bessel_poly(e[j] - a[i] + n * k[i], m));
        acc += mat.det_expand().coeff(m);
    }
    let v = acc * Rational::from_integer(factorial(m as u64));
    pre(v.is_integer(), || format!("Bessel determinant gave the non-integer {}", v))?;
    Ok(v.to_integer())
}

/// `m` steps from `S_d^+-` in `x_1 > ... > x_d > x_1 - N`. Differences
/// stay even, so an odd `N` counts the same as `N + 1`.
pub fn affineA_lockstep(a: &[i64], e: &[i64], n: i64, m: usize) -> Result<Integer> {
    check_affine_a(a, e, n)?;
    check_parity(a, e)?;
    let d = a.len();
    let mi = m as i64;
    let (emin, emax) = (*e.iter().min().unwrap(), *e.iter().max().unwrap());
    // x_1 - x_d stays even, so the walls sit at the even period 2h
    let h = (n + 1) / 2;
    // column j needs some 0 <= (m + e_i - a_j)/2 + h k_j <= m
    let windows: Vec<(i64, i64)> = (0..d).map(|j| (div_ceil(-mi - emax + a[j], 2 * h), div_floor(mi - emin + a[j], 2 * h))).collect();
    let mut acc = Integer::zero();
    for k in zero_sum_vectors(&windows) {
        let mat = Matrix::from_fn(d, d, |i, j| {
            let twice = mi + e[i] - a[j];
            if twice.rem_euclid(2) != 0 {
                Integer::zero()
            } else {
                binom(mi, twice / 2 + h * k[j])
            }
        });
        acc += mat.det();
    }
    Ok(acc)
}

fn check_affine_c(a: &[i64], e: &[i64], n: i64) -> Result<()> {
    same_len(a, e)?;
    pre(n >= 2, || format!("N must be at least 2, got {}", n))?;
    check_inside(GroupType::AffineC(n), a, e)
}

fn sin_pair(r: usize, x: i64, y: i64, n: i64) -> f64 {
    let t = PI * r as f64 / n as f64;
    (t * x as f64).sin() * (t * y as f64).sin()
}

/// Determinant of a small matrix of floats by Laplace expansion over
/// permutations.
fn det_f64(m: &[Vec<f64>]) -> f64 {
    permutations(m.len()).iter().map(|(p, s)| *s as f64 * p.iter().enumerate().map(|(i, &j)| m[i][j]).product::<f64>()).sum()
}

/// `m` steps from `S_1^+-` in `N > x_1 > ... > x_d > 0`: the coefficient
/// of `x^m/m!` in the sine-kernel determinant. Returns the rounded value
/// and the raw floating-point value.
pub fn affineC_pm_value(a: &[i64], e: &[i64], n: i64, m: usize) -> Result<(Integer, f64)> {
    check_affine_c(a, e, n)?;
    let d = a.len();
    // entry (i,j) as a series in x up to x^m
    let entry = |i: usize, j: usize| -> Vec<f64> {
        let mut c = vec![0.0; m + 1];
        for r in 0..(2 * n) as usize {
            let s = sin_pair(r, e[i], a[j], n) / n as f64;
            let z = 2.0 * (PI * r as f64 / n as f64).cos();
            let mut term = s;
            for (k, ck) in c.iter_mut().enumerate() {
                if k > 0 {
                    term *= z / k as f64;
                }
                *ck += term;
            }
        }
        c
    };
    let entries: Vec<Vec<Vec<f64>>> = (0..d).map(|i| (0..d).map(|j| entry(i, j)).collect()).collect();
    let mut coeff = 0.0;
    for (p, s) in permutations(d) {
        // coefficient of x^m in the product of the row series
        let mut prod = vec![0.0; m + 1];
        prod[0] = 1.0;
        for (i, &j) in p.iter().enumerate() {
            let f = &entries[i][j];
            let mut next = vec![0.0; m + 1];
            for (u, pu) in prod.iter().enumerate() {
                for (v, fv) in f.iter().enumerate().take(m + 1 - u) {
                    next[u + v] += pu * fv;
                }
            }
            prod = next;
        }
        coeff += s as f64 * prod[m];
    }
    let fact: f64 = (1..=m).map(|k| k as f64).product();
    let v = coeff * fact;
    Ok((round_guarded(v, "affine C determinant")?, v))
}

pub fn affineC_pm(a: &[i64], e: &[i64], n: i64, m: usize) -> Result<Integer> {
    Ok(affineC_pm_value(a, e, n, m)?.0)
}

/// `m` steps from `S_d^+-` in `N > x_1 > ... > x_d > 0`, as a determinant
/// of cosine sums. Returns the rounded and raw values.
pub fn affineC_lockstep_value(a: &[i64], e: &[i64], n: i64, m: usize) -> Result<(Integer, f64)> {
    check_affine_c(a, e, n)?;
    check_parity(a, e)?;
    let d = a.len();
    let scale = 2f64.powi(m as i32 - 1) / n as f64;
    let mat: Vec<Vec<f64>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let s: f64 =
                        (0..(4 * n) as usize).map(|r| sin_pair(r, e[i], a[j], n) * (PI * r as f64 / n as f64).cos().powi(m as i32)).sum();
                    scale * s
                })
                .collect()
        })
        .collect();
    let v = det_f64(&mat);
    Ok((round_guarded(v, "affine C lock-step determinant")?, v))
}

pub fn affineC_lockstep(a: &[i64], e: &[i64], n: i64, m: usize) -> Result<Integer> {
    Ok(affineC_lockstep_value(a, e, n, m)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn counts() {
        assert_eq!(multinomial_count(&[0, 0, 0], &[1, 1, 1]).unwrap(), int(6));
        assert_eq!(multinomial_count(&[0, 0, 0], &[2, 1, 1]).unwrap(), int(12));
        assert_eq!(hyperplane_bound(&[1], &[1, 1]).unwrap(), int(1));
        assert_eq!(hyperplane_bound(&[1], &[3, 3]).unwrap(), int(5));
        assert_eq!(hyperplane_bound(&[0, 0], &[1, 1, 1]).unwrap(), int(6));
        assert!(hyperplane_bound(&[2], &[1, 1]).is_err());
    }

    #[test]
    fn type_a() {
        assert_eq!(typeA_det(&[0, 0], &[2, 1]).unwrap(), int(2));
        assert_eq!(typeA_det(&[0, 0], &[3, 2]).unwrap(), int(5));
        assert_eq!(typeA_det(&[2, 1], &[2, 1]).unwrap(), int(1));
        assert_eq!(hook_formula(&[2, 1]).unwrap(), int(2));
        assert_eq!(hook_formula(&[5]).unwrap(), int(1));
        assert_eq!(hook_formula(&[2, 2]).unwrap(), int(2));
        let spec = ChamberSpec::new(GroupType::A, 2, StepFamily::S1);
        assert_eq!(signed_reflection_sum(&spec, &[1, 0], &[3, 1], 3).unwrap(), int(2));
    }

    #[test]
    fn lock_step_and_c() {
        assert_eq!(lock_step_det(&[2, 0], &[2, 0], 2).unwrap(), int(3));
        assert_eq!(lock_step_det(&[2, 0], &[2, 0], 0).unwrap(), int(1));
        assert_eq!(lock_step_det(&[2, 0], &[2, 0], 1).unwrap(), int(0));
        assert!(lock_step_det(&[2, 1], &[2, 0], 1).is_err());
        assert_eq!(typeC_det(&[1], &[1], 2).unwrap(), int(1));
        assert_eq!(typeC_det(&[1], &[3], 2).unwrap(), int(1));
        let spec = ChamberSpec::new(GroupType::C, 1, StepFamily::S1Pm);
        assert_eq!(signed_reflection_sum(&spec, &[1], &[1], 2).unwrap(), int(1));
        let spec = ChamberSpec::new(GroupType::C, 1, StepFamily::S1);
        assert!(signed_reflection_sum(&spec, &[1], &[1], 2).is_err());
    }

    #[test]
    fn affine() {
        assert_eq!(affineA_count(&[1, 0], &[2, 1], 3).unwrap(), int(1));
        assert_eq!(affineA_count(&[3, 1, 0], &[3, 1, 0], 5).unwrap(), int(1));
        assert_eq!(affineA_pm_egf(&[1, 0], &[1, 0], 3, 0).unwrap(), int(1));
        assert_eq!(affineA_pm_egf(&[1, 0], &[1, 0], 3, 1).unwrap(), int(0));
        assert_eq!(affineA_lockstep(&[2, 0], &[2, 0], 4, 0).unwrap(), int(1));
        assert_eq!(affineC_pm(&[2, 1], &[2, 1], 4, 0).unwrap(), int(1));
        assert_eq!(affineC_lockstep(&[3, 1], &[3, 1], 4, 0).unwrap(), int(1));
        // one walker in 0 < x < 4: from 1 only 1,2,1; from 2 both neighbours
        assert_eq!(affineC_pm(&[1], &[1], 4, 2).unwrap(), int(1));
        assert_eq!(affineC_lockstep(&[2], &[2], 4, 2).unwrap(), int(2));
    }
}
