//! Directed walks with arbitrary height jumps: characteristic polynomial,
//! small branches of the kernel and generating functions for unrestricted
//! and nonnegative walks.

use crate::algebra::{ExactDiv, Poly, Ring, Series};
use crate::{pre, Error, Integer, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Steps `(1, b_j)` with weights `w_j`. Repeated jumps add their weights.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedStepSet<R> {
    steps: BTreeMap<i64, R>,
}

impl<R: Ring> WeightedStepSet<R> {
    pub fn new(steps: impl IntoIterator<Item = (i64, R)>) -> Result<Self> {
        let mut m: BTreeMap<i64, R> = BTreeMap::new();
        for (b, w) in steps {
            let e = m.entry(b).or_insert_with(R::zero);
            *e = e.clone() + w;
        }
        m.retain(|_, w| !w.is_zero());
        pre(!m.is_empty(), || "step set is empty".into())?;
        Ok(WeightedStepSet { steps: m })
    }

    /// All weights 1.
    pub fn unit(jumps: &[i64]) -> Result<Self> {
        Self::new(jumps.iter().map(|&b| (b, R::one())))
    }

    pub fn steps(&self) -> impl Iterator<Item = (i64, &R)> {
        self.steps.iter().map(|(b, w)| (*b, w))
    }

    /// Largest downward jump, `-min b_j` (may be negative).
    pub fn c(&self) -> i64 {
        -*self.steps.keys().next().unwrap()
    }

    /// Largest upward jump, `max b_j`.
    pub fn d(&self) -> i64 {
        *self.steps.keys().next_back().unwrap()
    }

    /// Total weight of jump `j`.
    pub fn p(&self, j: i64) -> R {
        self.steps.get(&j).cloned().unwrap_or_else(R::zero)
    }

    fn require_kernel(&self) -> Result<()> {
        pre(self.c() >= 1, || format!("need a negative jump, smallest jump is {}", -self.c()))?;
        pre(self.d() >= 1, || format!("need a positive jump, largest jump is {}", self.d()))
    }
}

/// `u^low * poly(u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<R: Ring> {
    pub low: i64,
    pub poly: Poly<R>,
}

impl<R: Ring> Laurent<R> {
    pub fn coeff(&self, e: i64) -> R {
        if e < self.low {
            R::zero()
        } else {
            self.poly.coeff((e - self.low) as usize)
        }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*u^{}", c, i as i64 + self.low))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `P_S(u) = sum_j w_j u^(b_j)`.
pub fn char_poly<R: Ring>(s: &WeightedStepSet<R>) -> Laurent<R> {
    let low = -s.c();
    let mut c = vec![R::zero(); (s.d() - low) as usize + 1];
    for (b, w) in s.steps() {
        c[(b - low) as usize] = w.clone();
    }
    Laurent { low, poly: Poly::new(c) }
}

/// Weight of walks of length `0..=order` from height 0 by final height,
/// optionally never going below 0.
fn height_dp<R: Ring>(s: &WeightedStepSet<R>, order: usize, nonneg: bool) -> Vec<BTreeMap<i64, R>> {
    let mut cur: BTreeMap<i64, R> = BTreeMap::new();
    cur.insert(0, R::one());
    let mut out = vec![cur.clone()];
    for _ in 0..order {
        let mut next: BTreeMap<i64, R> = BTreeMap::new();
        for (h, v) in &cur {
            for (b, w) in s.steps() {
                let t = h + b;
                if nonneg && t < 0 {
                    continue;
                }
                let e = next.entry(t).or_insert_with(R::zero);
                *e = e.clone() + v.clone() * w.clone();
            }
        }
        next.retain(|_, v| !v.is_zero());
        out.push(next.clone());
        cur = next;
    }
    out
}

fn at_height<R: Ring>(dp: &[BTreeMap<i64, R>], k: i64, order: usize) -> Series<R> {
    Series::new(dp.iter().map(|m| m.get(&k).cloned().unwrap_or_else(R::zero)).collect(), order)
}

/// Walks from height 0 ending at height `k`, by length, to order `order`.
pub fn walk_gf_by_height<R: Ring>(s: &WeightedStepSet<R>, k: i64, order: usize) -> Series<R> {
    at_height(&height_dp(s, order, false), k, order)
}

/// Walks from height 0 never going below 0 and ending at height `k`, by
/// direct dynamic programming.
pub fn nonneg_walk_dp<R: Ring>(s: &WeightedStepSet<R>, k: i64, order: usize) -> Series<R> {
    at_height(&height_dp(s, order, true), k, order)
}

/// `u^c (1 - z P_S(u))` as a polynomial in `u` with series coefficients.
fn kernel_times_uc<R: Ring>(s: &WeightedStepSet<R>, order: usize) -> Vec<Series<R>> {
    let p = char_poly(s);
    let c = s.c();
    let mut k: Vec<Series<R>> = (0..=(s.d() + c) as usize).map(|_| Series::zero(order)).collect();
    k[c as usize] = Series::one(order);
    for (i, a) in p.poly.coeffs().iter().enumerate() {
        k[i] = k[i].clone() - Series::monomial(a.clone(), 1, order);
    }
    k
}

fn eval_poly_series<R: Ring>(coeffs: &[Series<R>], u: &Series<R>) -> Series<R> {
    let order = u.order();
    let mut acc = Series::zero(order);
    for c in coeffs.iter().rev() {
        acc = acc * u.clone() + c.truncate(order);
    }
    acc
}

/// The small branch `u_1(z)` of `1 - z P_S(u) = 0` with `u_1(0) = 0`, for
/// step sets whose only downward jump is `-1`, by Newton iteration.
pub fn small_branch<R: Ring>(s: &WeightedStepSet<R>, order: usize) -> Result<Series<R>> {
    s.require_kernel()?;
    if s.c() != 1 {
        return Err(Error::Unsupported(format!("small branch needs largest down jump 1, got {}", s.c())));
    }
    // u = z Phi(u), Phi(u) = u P(u)
    let kernel = kernel_times_uc(s, order);
    let dk: Vec<Series<R>> = kernel.iter().enumerate().skip(1).map(|(i, c)| c.scale(&R::from_i64(i as i64))).collect();
    let mut u = Series::zero(order);
    let mut prec = 1;
    while prec <= order {
        prec = (2 * prec).min(order + 1);
        let f = eval_poly_series(&kernel, &u);
        let df = eval_poly_series(&dk, &u);
        u = u - f * df.reciprocal()?;
        if prec > order {
            break;
        }
    }
    Ok(u)
}

/// `1 - z P_S(u)` at `u`, for step sets whose only downward jump is `-1`.
/// `u` must have zero constant term and an invertible coefficient of `z`;
/// the result has the order of `u` minus one.
pub fn kernel_residual<R: Ring>(s: &WeightedStepSet<R>, u: &Series<R>) -> Result<Series<R>> {
    pre(s.c() <= 1, || format!("kernel residual needs down jumps of at most 1, got {}", s.c()))?;
    let z_over_u = u.unshift(1)?.reciprocal()?;
    let order = z_over_u.order();
    let u = u.truncate(order);
    let mut acc = Series::one(order);
    for (b, w) in s.steps() {
        let term = if b < 0 { z_over_u.clone() } else { (0..b).fold(Series::var(order), |t, _| t * u.clone()) };
        acc = acc - term.scale(w);
    }
    Ok(acc)
}

/// Generating function of nonnegative walks returning to height 0.
///
/// With a single down jump this is `u_1(z)/(p_{-1} z)`. In general the
/// product of the small branches `U(z)` satisfies `z U'/U = W_0(z)`, the
/// unrestricted height-0 series, and the answer is `U(z)` up to the factor
/// `(-1)^(c-1) p_{-c} z`, so `n F_n = sum_k W_0[k] F_(n-k)`.
pub fn nonneg_walk_gf<R: ExactDiv>(s: &WeightedStepSet<R>, order: usize) -> Result<Series<R>> {
    s.require_kernel()?;
    if s.c() == 1 {
        let u = small_branch(s, order + 1)?;
        let p = s.p(-1);
        let f = u.unshift(1)?;
        let c: Option<Vec<R>> = f.coeffs().iter().map(|x| x.div_exact(&p)).collect();
        let c = c.ok_or_else(|| Error::Numeric(format!("small branch is not divisible by p_-1 = {:?}", p)))?;
        return Ok(Series::new(c, order));
    }
    excursions_from_unrestricted(s, order)
}

fn excursions_from_unrestricted<R: ExactDiv>(s: &WeightedStepSet<R>, order: usize) -> Result<Series<R>> {
    let w0 = walk_gf_by_height(s, 0, order);
    let mut f: Vec<R> = vec![R::one()];
    for n in 1..=order {
        let mut acc = R::zero();
        for k in 1..=n {
            acc = acc + w0.coeff(k) * f[n - k].clone();
        }
        let v = acc
            .div_exact(&R::from_i64(n as i64))
            .ok_or_else(|| Error::Numeric(format!("coefficient {} of the branch product is not divisible by {}", n, n)))?;
        f.push(v);
    }
    Ok(Series::new(f, order))
}

/// Nonnegative walks ending at height `k`, for a single down jump `-1`:
/// the kernel equation gives `F_k = W_k - u_1 W_(k+1)`.
pub fn nonneg_end_height_gf<R: Ring>(s: &WeightedStepSet<R>, k: i64, order: usize) -> Result<Series<R>> {
    s.require_kernel()?;
    pre(k >= 0, || format!("end height must be nonnegative, got {}", k))?;
    if s.c() != 1 {
        return Err(Error::Unsupported(format!("end-height series needs largest down jump 1, got {}", s.c())));
    }
    let dp = height_dp(s, order, false);
    let u = small_branch(s, order)?;
    Ok(at_height(&dp, k, order) - u * at_height(&dp, k + 1, order))
}

/// `u^c - z sum_k u^c r_k(u) F_k(z)` with `r_k(u) = sum_{j=-c}^{-k-1} p_j
/// u^(j+k)` and `F_k` from the nonnegative dynamic program, as a
/// polynomial in `u` of degree `c` with series coefficients.
pub fn kernel_factor_poly<R: Ring>(s: &WeightedStepSet<R>, order: usize) -> Result<Vec<Series<R>>> {
    s.require_kernel()?;
    let c = s.c();
    let dp = height_dp(s, order, true);
    let mut poly: Vec<Series<R>> = (0..=c).map(|_| Series::zero(order)).collect();
    poly[c as usize] = Series::one(order);
    for k in 0..c {
        let fk = at_height(&dp, k, order).shift(1).truncate(order);
        for j in -c..=(-k - 1) {
            // u^c * p_j u^(j+k)
            let e = (c + j + k) as usize;
            poly[e] = poly[e].clone() - fk.scale(&s.p(j));
        }
    }
    Ok(poly)
}

/// Evaluate a polynomial in `u` with series coefficients at a series.
pub fn eval_at<R: Ring>(poly: &[Series<R>], u: &Series<R>) -> Series<R> {
    eval_poly_series(poly, u)
}

/// Łukasiewicz paths of length `n` (steps `-1, 0, 1, 2, ...`, nonnegative,
/// returning to 0), from the kernel `1 - z/(u(1-u))`: its root satisfies
/// `u = z + u^2` and `F_0 = u/z`.
pub fn lukasiewicz_count(n: usize) -> Integer {
    let order = n + 1;
    let mut u: Series<Integer> = Series::zero(order);
    for _ in 0..=order {
        u = Series::var(order) + u.clone() * u;
    }
    u.coeff(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn ints(s: &Series<Integer>) -> Vec<i64> {
        s.coeffs().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn characteristic_polynomials() {
        let m = WeightedStepSet::<Integer>::unit(&[-1, 0, 1]).unwrap();
        let p = char_poly(&m);
        assert_eq!((p.low, p.coeff(-1), p.coeff(0), p.coeff(1)), (-1, int(1), int(1), int(1)));
        let w = WeightedStepSet::new([(1, int(1)), (-2, int(5))]).unwrap();
        assert_eq!(char_poly(&w).coeff(-2), int(5));
        assert_eq!(char_poly(&w).coeff(-1), int(0));
    }

    #[test]
    fn unrestricted_heights() {
        let m = WeightedStepSet::<Integer>::unit(&[-1, 0, 1]).unwrap();
        assert_eq!(ints(&walk_gf_by_height(&m, 0, 4)), vec![1, 1, 3, 7, 19]);
        let d = WeightedStepSet::<Integer>::unit(&[-1, 1]).unwrap();
        assert_eq!(ints(&walk_gf_by_height(&d, 0, 5)), vec![1, 0, 2, 0, 6, 0]);
    }

    #[test]
    fn dyck_branch() {
        let d = WeightedStepSet::<Integer>::unit(&[-1, 1]).unwrap();
        let u = small_branch(&d, 7).unwrap();
        assert_eq!(ints(&u), vec![0, 1, 0, 1, 0, 2, 0, 5]);
        let r = eval_at(&kernel_times_uc(&d, 7), &u);
        assert!(r.coeffs().iter().all(|x| x == &int(0)));
    }

    #[test]
    fn excursions() {
        let m = WeightedStepSet::<Integer>::unit(&[-1, 0, 1]).unwrap();
        assert_eq!(ints(&nonneg_walk_gf(&m, 4).unwrap()), vec![1, 1, 2, 4, 9]);
        let d = WeightedStepSet::<Integer>::unit(&[-1, 1]).unwrap();
        assert_eq!(ints(&nonneg_walk_gf(&d, 6).unwrap()), vec![1, 0, 1, 0, 2, 0, 5]);
        let two = WeightedStepSet::<Integer>::unit(&[-2, 1]).unwrap();
        assert_eq!(nonneg_walk_gf(&two, 9).unwrap(), nonneg_walk_dp(&two, 0, 9));
    }

    #[test]
    fn no_down_jump() {
        let up = WeightedStepSet::<Integer>::unit(&[0, 1]).unwrap();
        assert!(matches!(nonneg_walk_gf(&up, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn lukasiewicz() {
        let v: Vec<Integer> = (0..=4).map(lukasiewicz_count).collect();
        assert_eq!(v, vec![int(1), int(1), int(2), int(5), int(14)]);
    }
}
