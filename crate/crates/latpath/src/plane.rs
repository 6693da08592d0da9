//! Closed forms for simple lattice paths in the plane.

use crate::algebra::{binom, binom_half, gen_binom, interpolate, multinomial, qbinom, rational_to_integer, Poly};
use crate::{pre, Error, Integer, Rational, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

fn ri(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn to_int(r: Rational, what: &str) -> Result<Integer> {
    rational_to_integer(&r).ok_or_else(|| Error::Numeric(format!("{} is not an integer: {}", what, r)))
}

/// `x/n * binom(n, k)`, with the removable `0/0` at `n = 0, k = 0, x = n`
/// taken as 1.
fn ballot_term(x: i64, n: i64, k: i64) -> Result<Rational> {
    let b = binom(n, k);
    if b.is_zero() {
        return Ok(Rational::zero());
    }
    if n == 0 {
        return if x == 0 { Ok(Rational::one()) } else { Err(Error::Numeric("ballot term with zero denominator".into())) };
    }
    Ok(Rational::new(BigInt::from(x) * b, BigInt::from(n)))
}

/// Paths from `(a,b)` to `(c,d)` with unit east and north steps.
pub fn count_simple(a: i64, b: i64, c: i64, d: i64) -> Integer {
    if c < a || d < b {
        return Integer::zero();
    }
    binom(c + d - a - b, c - a)
}

/// `n`-step paths from `(a,b)` to `(c,d)` with steps `(±1,0), (0,±1)`.
pub fn count_pm(n: i64, a: i64, b: i64, c: i64, d: i64) -> Result<Integer> {
    pre(n >= 0, || format!("n = {} must be >= 0", n))?;
    Ok(binom_half(n, n + c + d - a - b) * binom_half(n, n + c - d - a + b))
}

/// Paths with steps east, north and diagonal north-east.
pub fn delannoy(a: i64, b: i64, c: i64, d: i64) -> Integer {
    let (x, y) = (c - a, d - b);
    if x < 0 || y < 0 {
        return Integer::zero();
    }
    (0..=x.min(y)).map(|k| multinomial(&[k, x - k, y - k])).sum()
}

/// Generating polynomial of simple paths by area (sum of the heights of
/// the horizontal steps).
pub fn area_gf(a: i64, b: i64, c: i64, d: i64) -> Result<Poly<Integer>> {
    if c < a || d < b {
        return Ok(Poly::zero());
    }
    pre(b >= 0 || c == a, || format!("start height b = {} must be >= 0 for a polynomial area", b))?;
    let shift = if c == a { 0 } else { (b * (c - a)) as usize };
    Ok(qbinom(c + d - a - b, c - a).shift(shift))
}

/// Paths from `(a,b)` to `(c,d)` staying weakly below `y = x` (`x >= y`).
pub fn below_diagonal(a: i64, b: i64, c: i64, d: i64) -> Result<Integer> {
    pre(a >= b, || format!("start must satisfy a >= b ({} < {})", a, b))?;
    pre(c >= d, || format!("end must satisfy c >= d ({} < {})", c, d))?;
    Ok(count_simple(a, b, c, d) - if c < a || d < b { Integer::zero() } else { binom(c + d - a - b, c - b + 1) })
}

pub fn catalan(n: i64) -> Integer {
    if n < 0 {
        return Integer::zero();
    }
    binom(2 * n, n) / BigInt::from(n + 1)
}

/// Ballot number: paths `(0,0) -> (c,d)` with `x >= y`.
pub fn ballot(c: i64, d: i64) -> Result<Integer> {
    pre(c >= d && d >= 0, || format!("need c >= d >= 0, got c = {}, d = {}", c, d))?;
    to_int(ballot_term(c + 1 - d, c + d + 1, d)?, "ballot number")
}

fn check_band(a: i64, b: i64, c: i64, d: i64, s: i64, t: i64) -> Result<()> {
    pre(a + t >= b && b >= a + s, || format!("start must satisfy a+t >= b >= a+s, got a={} b={} s={} t={}", a, b, s, t))?;
    pre(c + t >= d && d >= c + s, || format!("end must satisfy c+t >= d >= c+s, got c={} d={} s={} t={}", c, d, s, t))
}

/// Paths between the diagonals `y = x + s` and `y = x + t` (weakly).
pub fn between_diagonals(a: i64, b: i64, c: i64, d: i64, s: i64, t: i64) -> Result<Integer> {
    check_band(a, b, c, d, s, t)?;
    let n = c + d - a - b;
    if c < a || d < b {
        return Ok(Integer::zero());
    }
    let w = t - s + 2;
    let reach = (n + (c - a).abs() + (c - b + t + 1).abs()) / w + 2;
    let mut acc = Integer::zero();
    for k in -reach..=reach {
        acc += binom(n, c - a - k * w);
        acc -= binom(n, c - b - k * w + t + 1);
    }
    Ok(acc)
}

/// Largest magnitude below which every integer is an exact `f64`.
pub const EXACT_F64: f64 = 9007199254740992.0;

/// Round `v` to an integer, failing if it is further than `1e-6` away or
/// too large for its rounding to be meaningful.
pub fn round_guarded(v: f64, what: &str) -> Result<Integer> {
    if !v.is_finite() {
        return Err(Error::Numeric(format!("{}: non-finite value {}", what, v)));
    }
    if v.abs() >= EXACT_F64 {
        return Err(Error::Numeric(format!("{}: value {:e} is beyond exact floating-point integers", what, v)));
    }
    let r = v.round();
    if (v - r).abs() > 1e-6 {
        return Err(Error::Numeric(format!("{}: value {} is {:.3e} from an integer", what, v, (v - r).abs())));
    }
    Ok(BigInt::from(r as i128))
}

/// Trigonometric form of [`between_diagonals`], evaluated in floating
/// point and rounded.
pub fn between_diagonals_trig(a: i64, b: i64, c: i64, d: i64, s: i64, t: i64) -> Result<Integer> {
    Ok(between_diagonals_trig_value(a, b, c, d, s, t)?.0)
}

/// Rounded value and the raw floating-point sum.
pub fn between_diagonals_trig_value(a: i64, b: i64, c: i64, d: i64, s: i64, t: i64) -> Result<(Integer, f64)> {
    check_band(a, b, c, d, s, t)?;
    if c < a || d < b {
        return Ok((Integer::zero(), 0.0));
    }
    let n = (c + d - a - b) as i32;
    let w = (t - s + 2) as f64;
    let pi = std::f64::consts::PI;
    // Sum over all k = 1..w-1; terms k and w-k coincide, and the middle term
    // (even w) only survives for the empty path.
    let mut v = 0.0;
    for k in 1..(t - s + 2) {
        let k = k as f64;
        v += 2.0 / w
            * (2.0 * (pi * k / w).cos()).powi(n)
            * (pi * k * (a - b + t + 1) as f64 / w).sin()
            * (pi * k * (c - d + t + 1) as f64 / w).sin();
    }
    Ok((round_guarded(v, "two-diagonal cosine sum")?, v))
}

/// Rational Catalan number: paths `(0,0) -> (r,s)` with `s x >= r y`.
pub fn rational_catalan(r: i64, s: i64) -> Result<Integer> {
    pre(r >= 1 && s >= 1, || format!("need r, s >= 1, got ({}, {})", r, s))?;
    pre(r.gcd(&s) == 1, || format!("gcd({}, {}) = {} must be 1", r, s, r.gcd(&s)))?;
    Ok(binom(r + s, r) / BigInt::from(r + s))
}

/// Paths `(0,0) -> (c,d)` with `x >= mu y`.
pub fn below_slope_mu(c: i64, d: i64, mu: i64) -> Result<Integer> {
    pre(mu >= 0, || format!("mu = {} must be >= 0", mu))?;
    pre(d >= 0 && c >= mu * d, || format!("end must satisfy c >= mu d, got c={} d={} mu={}", c, d, mu))?;
    to_int(ballot_term(c - mu * d + 1, c + d + 1, d)?, "slope-mu count")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeVariant {
    /// Subtract paths by their last touch of `x = mu y - 1`.
    LastTouch,
    /// Alternating sum over the start height.
    InclusionExclusion,
}

/// Paths `(a,b) -> (c,d)` with `x >= mu y`.
pub fn below_slope_mu_general(a: i64, b: i64, c: i64, d: i64, mu: i64, variant: SlopeVariant) -> Result<Integer> {
    pre(mu >= 0, || format!("mu = {} must be >= 0", mu))?;
    pre(a >= mu * b, || format!("start must satisfy a >= mu b, got a={} b={} mu={}", a, b, mu))?;
    pre(c >= mu * d, || format!("end must satisfy c >= mu d, got c={} d={} mu={}", c, d, mu))?;
    if c < a || d < b {
        return Ok(Integer::zero());
    }
    if mu == 0 {
        return Ok(count_simple(a, b, c, d));
    }
    let mut acc = Rational::zero();
    match variant {
        SlopeVariant::LastTouch => {
            acc += Rational::from_integer(count_simple(a, b, c, d));
            for i in (a.div_euclid(mu) + 1)..=d {
                let m = c + d - i * (mu + 1);
                acc -= Rational::from_integer(binom(i * (mu + 1) - a - b - 1, i - b)) * ballot_term(c - mu * d + 1, m + 1, d - i)?;
            }
        }
        SlopeVariant::InclusionExclusion => {
            for i in 0..=(a.div_euclid(mu) - b) {
                let m = c + d - (mu + 1) * (b + i);
                let t = Rational::from_integer(binom(a - mu * (b + i), i)) * ballot_term(c - mu * d + 1, m + 1, d - b - i)?;
                if i % 2 == 0 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
        }
    }
    to_int(acc, "slope-mu count")
}

/// One linear piece of a boundary: `x >= mu y + nu` for heights in
/// `(previous top, top]` (the first piece includes height 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub mu: i64,
    pub nu: i64,
    pub top: i64,
}

impl Segment {
    pub fn new(mu: i64, nu: i64, top: i64) -> Self {
        Segment { mu, nu, top }
    }
}

/// Is `(x,y)` weakly right of the piecewise boundary?
pub fn piecewise_admits(segs: &[Segment], x: i64, y: i64) -> bool {
    if y < 0 {
        return false;
    }
    match segs.iter().find(|s| y <= s.top) {
        Some(s) => x >= s.mu * y + s.nu,
        None => false,
    }
}

fn check_segments(segs: &[Segment], d: i64) -> Result<()> {
    pre(!segs.is_empty(), || "need at least one segment".into())?;
    let mut prev = 0;
    for (j, s) in segs.iter().enumerate() {
        pre(s.mu >= 0, || format!("segment {}: mu = {} must be >= 0", j + 1, s.mu))?;
        pre(s.top > prev || (j == 0 && s.top >= 0), || format!("segment tops must increase strictly from 0 (segment {})", j + 1))?;
        prev = s.top;
    }
    pre(prev == d, || format!("last segment top {} must equal d = {}", prev, d))?;
    pre(segs[0].nu <= 0, || format!("the origin must satisfy x >= nu_1, got nu_1 = {}", segs[0].nu))
}

/// Paths `(0,0) -> (c,d)` weakly right of a piecewise linear boundary, by
/// iterating the last-crossing recursion. Intermediate counts are treated
/// as polynomials in the abscissa and evaluated, possibly outside the
/// region where they count paths, by interpolation.
pub fn piecewise_boundary(segs: &[Segment], c: i64, d: i64) -> Result<Integer> {
    check_segments(segs, d)?;
    if !piecewise_admits(segs, c, d) {
        return Ok(Integer::zero());
    }
    let ctx = Piecewise::new(segs);
    let j = ctx.segment_of(d);
    to_int(ctx.count(j, c, d)?, "piecewise count")
}

struct Piecewise<'a> {
    segs: &'a [Segment],
    /// Abscissa beyond which every count is a polynomial in it.
    far: i64,
}

impl<'a> Piecewise<'a> {
    fn new(segs: &'a [Segment]) -> Self {
        let far = segs.iter().map(|s| s.mu * s.top + s.nu.max(0)).max().unwrap_or(0) + 1;
        Piecewise { segs, far }
    }

    fn segment_of(&self, y: i64) -> usize {
        self.segs.iter().position(|s| y <= s.top).unwrap()
    }

    /// Count formula for endpoint `(c,d)` with `d` in segment `j` (0-based).
    fn count(&self, j: usize, c: i64, d: i64) -> Result<Rational> {
        let s = self.segs[j];
        if j == 0 {
            if s.mu == 0 {
                return Ok(Rational::from_integer(count_simple(0, 0, c, d)));
            }
            // shift so the line passes through the origin: start (-nu, 0)
            let (a, mu) = (-s.nu, s.mu);
            let cc = c - s.nu;
            let mut acc = Rational::zero();
            for i in 0..=a.div_euclid(mu) {
                let m = cc + d - (mu + 1) * i;
                let t = Rational::from_integer(binom(a - mu * i, i)) * ballot_term(cc - mu * d + 1, m + 1, d - i)?;
                if i % 2 == 0 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            return Ok(acc);
        }
        let below = self.segs[j - 1].top;
        let mut acc = Rational::zero();
        for i in 0..=below {
            let p = self.polynomial(i)?;
            let at = p.eval(&ri(s.mu * i + s.nu - 1));
            if at.is_zero() {
                continue;
            }
            let m = c + d - i * (s.mu + 1) - s.nu;
            acc += at * ballot_term(c - s.mu * d - s.nu + 1, m + 1, d - i)?;
        }
        Ok(acc)
    }

    /// The count to `(x, i)` as a polynomial in `x`.
    fn polynomial(&self, i: i64) -> Result<Poly<Rational>> {
        let j = self.segment_of(i);
        let xs: Vec<Rational> = (0..=i).map(|t| ri(self.far + t)).collect();
        let ys = (0..=i).map(|t| self.count(j, self.far + t, i)).collect::<Result<Vec<_>>>()?;
        Ok(interpolate(&xs, &ys))
    }
}

/// `1/(1+5n) * binom(1/2 + 5n/2, n)`.
fn sato_a(n: i64) -> Rational {
    let r = Rational::new(BigInt::from(1 + 5 * n), BigInt::from(2));
    gen_binom(&r, n as u64) / ri(1 + 5 * n)
}

/// Paths below `2x >= 3y` to `(3n/2, n)` for even `n`, and below
/// `2x >= 3y - 1` to `((3n-1)/2, n)` for odd `n`.
pub fn sato_example_23(n: i64) -> Result<Integer> {
    pre(n >= 0, || format!("n = {} must be >= 0", n))?;
    let v = if n % 2 == 0 {
        let mut acc = Rational::zero();
        for l in 0..=n {
            let t = sato_a(l) * sato_a(n - l);
            if l % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        acc
    } else {
        ri(2) * sato_a(n)
    };
    to_int(v, "slope 3/2 count")
}

/// End point of the paths counted by [`sato_example_23`] and the offset
/// `k` of the boundary `2x >= 3y - k`.
pub fn sato_example_23_target(n: i64) -> (i64, i64, i64) {
    if n % 2 == 0 {
        (3 * n / 2, n, 0)
    } else {
        ((3 * n - 1) / 2, n, 1)
    }
}

fn fact(n: i64) -> Rational {
    Rational::from_integer(crate::algebra::factorial(n as u64))
}

/// Three-dimensional simple paths from the origin to `(e1,e2,e3)` with
/// `x1 >= max(x2, x3)`.
pub fn kreweras(e1: i64, e2: i64, e3: i64) -> Result<Integer> {
    pre(e2 >= 0 && e3 >= 0 && e1 >= e2.max(e3), || format!("need e1 >= max(e2, e3) >= 0, got ({}, {}, {})", e1, e2, e3))?;
    let tot = e1 + e2 + e3;
    let m = Rational::from_integer(multinomial(&[e1, e2, e3]));
    let mut acc = m.clone() - ri(e2 + e3) / ri(1 + e1) * m;
    for i in 1..=e3 {
        for j in 1..=e2 {
            let num = fact(tot) * fact(2 * i + 2 * j - 2) * fact(i + j - 2);
            let den = fact(i) * fact(e3 - i) * fact(j) * fact(e2 - j) * fact(2 * i - 1) * fact(2 * j - 1) * fact(i + j + e1);
            let t = num / den;
            if (i + j) % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
    }
    to_int(acc, "Kreweras double sum")
}

/// Product form of [`kreweras`] when `e1 = e2`.
pub fn kreweras_product(e1: i64, e3: i64) -> Result<Integer> {
    pre(e3 >= 0 && e1 >= e3, || format!("need e1 >= e3 >= 0, got ({}, {})", e1, e3))?;
    let num = ri(2).pow((2 * e3 + 1) as i32) * fact(2 * e1 + e3) * fact(2 * e1 - 2 * e3 + 1);
    let den = fact(2 * e1 + 2) * fact(e3) * fact(e1 - e3) * fact(e1 - e3);
    to_int(num / den, "Kreweras product")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn rounding_guard() {
        assert_eq!(round_guarded(41.9999999999, "x").unwrap(), int(42));
        assert!(matches!(round_guarded(41.9, "x"), Err(Error::Numeric(_))));
        assert!(matches!(round_guarded(f64::NAN, "x"), Err(Error::Numeric(_))));
        assert!(matches!(round_guarded(EXACT_F64, "x"), Err(Error::Numeric(_))));
        assert_eq!(round_guarded(EXACT_F64 - 1.0, "x").unwrap(), int(9007199254740991));
    }

    #[test]
    fn unrestricted_families() {
        assert_eq!(count_simple(0, 0, 3, 2), int(10));
        assert_eq!(count_simple(2, 5, 2, 5), int(1));
        assert_eq!(count_simple(0, 0, -1, 0), int(0));
        assert_eq!(count_pm(2, 0, 0, 0, 0).unwrap(), int(4));
        assert_eq!(count_pm(1, 0, 0, 1, 0).unwrap(), int(1));
        assert_eq!(count_pm(1, 0, 0, 2, 0).unwrap(), int(0));
        assert_eq!(delannoy(0, 0, 3, 3), int(63));
        assert_eq!(delannoy(0, 0, 1, 1), int(3));
        assert_eq!(delannoy(0, 0, 4, 0), int(1));
    }

    #[test]
    fn area() {
        assert_eq!(area_gf(0, 0, 2, 1).unwrap(), Poly::from_ints(&[1, 1, 1]));
        assert_eq!(area_gf(0, 1, 2, 1).unwrap(), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(area_gf(3, 0, 3, 4).unwrap(), Poly::one());
    }

    #[test]
    fn diagonal_counts() {
        assert_eq!(below_diagonal(0, 0, 3, 3).unwrap(), int(5));
        assert_eq!(below_diagonal(0, 0, 3, 2).unwrap(), int(5));
        assert_eq!(ballot(3, 2).unwrap(), int(5));
        assert_eq!(catalan(3), int(5));
        assert_eq!(catalan(0), int(1));
        assert!(below_diagonal(0, 1, 3, 3).is_err());
    }

    #[test]
    fn band_counts() {
        assert_eq!(between_diagonals(0, 0, 1, 1, -1, 1).unwrap(), int(2));
        assert_eq!(between_diagonals(0, 0, 2, 2, 0, 0).unwrap(), int(0));
        assert_eq!(between_diagonals_trig(0, 0, 1, 1, -1, 1).unwrap(), int(2));
        assert_eq!(between_diagonals_trig(0, 0, 0, 0, 0, 0).unwrap(), int(1));
        assert_eq!(between_diagonals_trig(0, 0, 0, 0, -1, 1).unwrap(), int(1));
        assert_eq!(between_diagonals_trig(0, 0, 3, 3, -2, 2).unwrap(), between_diagonals(0, 0, 3, 3, -2, 2).unwrap());
        assert!(between_diagonals(0, 0, 3, 0, -1, 1).is_err());
    }

    #[test]
    fn slope_counts() {
        assert_eq!(rational_catalan(3, 2).unwrap(), int(2));
        assert_eq!(rational_catalan(2, 1).unwrap(), int(1));
        assert_eq!(rational_catalan(4, 3).unwrap(), int(5));
        assert!(rational_catalan(4, 2).is_err());
        assert_eq!(below_slope_mu(4, 2, 2).unwrap(), int(3));
        for v in [SlopeVariant::LastTouch, SlopeVariant::InclusionExclusion] {
            assert_eq!(below_slope_mu_general(2, 0, 4, 2, 2, v).unwrap(), int(3));
        }
    }

    #[test]
    fn sato_values() {
        assert_eq!(sato_example_23(0).unwrap(), int(1));
        assert_eq!(sato_example_23(1).unwrap(), int(1));
        assert_eq!(sato_example_23(2).unwrap(), int(2));
    }

    #[test]
    fn kreweras_values() {
        assert_eq!(kreweras(1, 1, 1).unwrap(), int(2));
        assert_eq!(kreweras(3, 0, 0).unwrap(), int(1));
        assert_eq!(kreweras_product(1, 1).unwrap(), int(2));
    }
}
