//! Paths counted by turns and runs, single and non-intersecting.

use crate::algebra::{binom, Matrix, Poly};
use crate::path::{TurnArray, TurnKind};
use crate::{pre, Error, Integer, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn check_turns(l: i64) -> Result<()> {
    pre(l >= 0, || format!("number of turns must be nonnegative, got {}", l))
}

/// Paths `(a,b) -> (c,d)` with exactly `l` turns of the given kind.
pub fn turns_unrestricted(a: i64, b: i64, c: i64, d: i64, l: i64, _kind: TurnKind) -> Result<Integer> {
    check_turns(l)?;
    Ok(binom(c - a, l) * binom(d - b, l))
}

/// Paths staying weakly below `x = y`, i.e. `x >= y`, with `l` turns.
pub fn turns_below_diagonal(a: i64, b: i64, c: i64, d: i64, l: i64, kind: TurnKind) -> Result<Integer> {
    check_turns(l)?;
    pre(a >= b, || format!("start must satisfy a >= b ({} < {})", a, b))?;
    pre(c >= d, || format!("end must satisfy c >= d ({} < {})", c, d))?;
    let all = binom(c - a, l) * binom(d - b, l);
    Ok(match kind {
        TurnKind::Ne => all - binom(c - b - 1, l - 1) * binom(d - a + 1, l + 1),
        TurnKind::En => all - binom(c - b + 1, l) * binom(d - a - 1, l),
    })
}

/// Paths with `x + s <= y <= x + t` and `l` NE-turns.
pub fn turns_two_boundaries(a: i64, b: i64, c: i64, d: i64, s: i64, t: i64, l: i64) -> Result<Integer> {
    check_turns(l)?;
    pre(s < t, || format!("need s < t, got s={} t={}", s, t))?;
    pre(a + t >= b && b >= a + s, || format!("start must satisfy a+t >= b >= a+s, got a={} b={} s={} t={}", a, b, s, t))?;
    pre(c + t >= d && d >= c + s, || format!("end must satisfy c+t >= d >= c+s, got c={} d={} s={} t={}", c, d, s, t))?;
    let w = t - s;
    let mut acc = Integer::zero();
    // every term vanishes unless |k| <= l
    for k in -l..=l {
        acc += binom(c - a - k * w, l + k) * binom(d - b + k * w, l - k);
        acc -= binom(c - b - k * w + s - 1, l + k) * binom(d - a + k * w - s + 1, l - k);
    }
    Ok(acc)
}

fn check_slope(c: i64, d: i64, mu: i64, l: i64) -> Result<()> {
    check_turns(l)?;
    pre(mu >= 1, || format!("slope mu must be positive, got {}", mu))?;
    pre(d >= 0 && c >= mu * d, || format!("need d >= 0 and c >= mu d, got c={} d={} mu={}", c, d, mu))
}

/// Paths `(0,0) -> (c,d)` with `x >= mu y` and `l` turns.
pub fn turns_slope_mu(c: i64, d: i64, mu: i64, l: i64, kind: TurnKind) -> Result<Integer> {
    check_slope(c, d, mu, l)?;
    if d == 0 {
        return Ok(Integer::from((l == 0) as i64));
    }
    let m = BigInt::from(mu);
    Ok(match kind {
        TurnKind::Ne => binom(c, l) * binom(d, l) - m * binom(c - 1, l - 1) * binom(d + 1, l + 1),
        TurnKind::En => binom(c + 1, l) * binom(d - 1, l - 1) - m * binom(c, l - 1) * binom(d, l),
    })
}

/// The product form `(c - mu d + 1)/(c + 1) binom(c+1,l) binom(d-1,l-1)`
/// of the EN count.
pub fn turns_slope_mu_en_product(c: i64, d: i64, mu: i64, l: i64) -> Result<Integer> {
    check_slope(c, d, mu, l)?;
    if d == 0 {
        return Ok(Integer::from((l == 0) as i64));
    }
    let num = BigInt::from(c - mu * d + 1) * binom(c + 1, l) * binom(d - 1, l - 1);
    Ok(num / BigInt::from(c + 1))
}

/// Regions for which NE-turn generating functions are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TurnRegion {
    Unrestricted,
    /// `x >= y`.
    BelowDiagonal,
    /// `x + s <= y <= x + t`.
    Band {
        s: i64,
        t: i64,
    },
}

impl TurnRegion {
    pub fn admits(&self, x: i64, y: i64) -> bool {
        match *self {
            TurnRegion::Unrestricted => true,
            TurnRegion::BelowDiagonal => x >= y,
            TurnRegion::Band { s, t } => x + s <= y && y <= x + t,
        }
    }
}

/// `sum_P x^NE(P)` over paths `(a,b) -> (c,d)` in the region; zero when
/// an endpoint lies outside it.
pub fn ne_turn_gf(a: i64, b: i64, c: i64, d: i64, region: TurnRegion) -> Result<Poly<Integer>> {
    if c < a || d < b || !region.admits(a, b) || !region.admits(c, d) {
        return Ok(Poly::zero());
    }
    let top = (c - a).min(d - b);
    let coeffs = (0..=top)
        .map(|l| match region {
            TurnRegion::Unrestricted => turns_unrestricted(a, b, c, d, l, TurnKind::Ne),
            TurnRegion::BelowDiagonal => turns_below_diagonal(a, b, c, d, l, TurnKind::Ne),
            TurnRegion::Band { s, t } => turns_two_boundaries(a, b, c, d, s, t, l),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// Substitute `x -> x^2`.
fn square_arg(p: &Poly<Integer>) -> Poly<Integer> {
    let mut c = vec![Integer::zero(); 2 * p.coeffs().len()];
    for (i, v) in p.coeffs().iter().enumerate() {
        c[2 * i] = v.clone();
    }
    Poly::new(c)
}

/// `sum_P x^run(P)`, assembled from NE-turn generating functions of the
/// four paths obtained by shifting the endpoints.
pub fn run_gf(a: i64, b: i64, c: i64, d: i64, region: TurnRegion) -> Result<Poly<Integer>> {
    if c < a || d < b || !region.admits(a, b) || !region.admits(c, d) {
        return Ok(Poly::zero());
    }
    if (a, b) == (c, d) {
        return Ok(Poly::one());
    }
    let f = ne_turn_gf(a, b, c, d, region)?;
    let f1 = ne_turn_gf(a + 1, b, c, d, region)?;
    let f2 = ne_turn_gf(a, b, c, d - 1, region)?;
    let f12 = ne_turn_gf(a + 1, b, c, d - 1, region)?;
    let hh = f1.clone() - f12.clone();
    let hv = f12.clone();
    let vh = f + f12.clone() - f1 - f2.clone();
    let vv = f2 - f12;
    let x = Poly::<Integer>::x();
    Ok(x.clone() * square_arg(&hh) + (x.clone() * x.clone()) * square_arg(&hv) + square_arg(&vh) + x * square_arg(&vv))
}

/// Bijection from NE-turn arrays `a <= p < c`, `b < q <= d` with some
/// `p_i < q_i` to arrays with top row of length `l - 1` in `b+1..=c-1` and
/// bottom row of length `l + 1` in `a..=d`.
pub fn reflect_turn_array(t: &TurnArray) -> Result<TurnArray> {
    let l = t.p.len();
    pre(t.q.len() == l, || "rows must have equal length".into())?;
    let i = (0..l).rev().find(|&i| t.p[i] < t.q[i]).ok_or_else(|| Error::Precondition("array satisfies p_i >= q_i everywhere".into()))?;
    let mut top: Vec<i64> = t.q[..i].to_vec();
    top.extend_from_slice(&t.p[i + 1..]);
    let mut bottom: Vec<i64> = t.p[..=i].to_vec();
    bottom.extend_from_slice(&t.q[i..]);
    Ok(TurnArray::new(top, bottom))
}

/// Inverse of [`reflect_turn_array`]. The top row is `pbar_2..pbar_l`, the
/// bottom row `qbar_0..qbar_l`.
pub fn unreflect_turn_array(t: &TurnArray) -> Result<TurnArray> {
    pre(t.q.len() == t.p.len() + 2, || "bottom row must be two longer than the top row".into())?;
    let l = t.p.len() + 1;
    let pbar = |k: usize| t.p[k - 2];
    let qbar = |k: usize| t.q[k];
    let ib = (2..=l).rev().find(|&k| pbar(k) < qbar(k)).unwrap_or(1);
    let mut top: Vec<i64> = (0..ib).map(qbar).collect();
    top.extend((ib + 1..=l).map(pbar));
    let mut bottom: Vec<i64> = (2..=ib).map(pbar).collect();
    bottom.extend((ib..=l).map(qbar));
    Ok(TurnArray::new(top, bottom))
}

/// Lower boundary for the non-intersecting turn counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TurnBoundary {
    None,
    /// All paths stay in `x >= y`.
    BelowDiagonal,
}

fn weakly_inc(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn strictly_inc(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn weakly_dec(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn strictly_dec(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

/// Compositions of `l` into `n` nonnegative parts.
pub fn compositions(l: i64, n: usize) -> Vec<Vec<i64>> {
    if n == 0 {
        return if l == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=l {
        for mut rest in compositions(l - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Non-intersecting families `A_i -> E_i` with `l` turns in total.
pub fn nonint_turns(a: &[(i64, i64)], e: &[(i64, i64)], l: i64, boundary: TurnBoundary, kind: TurnKind) -> Result<Integer> {
    check_turns(l)?;
    let n = a.len();
    pre(e.len() == n, || format!("{} starts but {} ends", n, e.len()))?;
    if boundary == TurnBoundary::None && kind == TurnKind::En {
        // a half turn swaps EN and NE turns and reverses the family
        let ra: Vec<(i64, i64)> = e.iter().rev().map(|&(x, y)| (-x, -y)).collect();
        let re: Vec<(i64, i64)> = a.iter().rev().map(|&(x, y)| (-x, -y)).collect();
        return nonint_turns(&ra, &re, l, boundary, TurnKind::Ne).map_err(|err| Error::Precondition(format!("after a half turn: {}", err)));
    }
    let a1: Vec<i64> = a.iter().map(|p| p.0).collect();
    let a2: Vec<i64> = a.iter().map(|p| p.1).collect();
    let e1: Vec<i64> = e.iter().map(|p| p.0).collect();
    let e2: Vec<i64> = e.iter().map(|p| p.1).collect();
    let order_ok = match kind {
        TurnKind::Ne => weakly_inc(&a1) && strictly_dec(&a2) && strictly_inc(&e1) && weakly_dec(&e2),
        TurnKind::En => strictly_inc(&a1) && weakly_dec(&a2) && weakly_inc(&e1) && strictly_dec(&e2),
    };
    pre(order_ok, || format!("start and end points {:?} -> {:?} are not ordered as required for {:?} turns", a, e, kind))?;
    if boundary == TurnBoundary::BelowDiagonal {
        pre(a.iter().chain(e).all(|&(x, y)| x >= y), || "all endpoints must satisfy x >= y".into())?;
    }
    let mut acc = Integer::zero();
    for ls in compositions(l, n) {
        let m = Matrix::from_fn(n, n, |i0, j0| {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            let li = ls[i0];
            let (a1, a2, e1, e2) = (a[i0].0, a[i0].1, e[j0].0, e[j0].1);
            let main = binom(e1 - a1 + i - j, li + i - j) * binom(e2 - a2 - i + j, li);
            match (boundary, kind) {
                (TurnBoundary::None, _) => main,
                (TurnBoundary::BelowDiagonal, TurnKind::Ne) => {
                    main - binom(e1 - a2 - i - j + 1, li - j) * binom(e2 - a1 + i + j - 1, li + i)
                }
                (TurnBoundary::BelowDiagonal, TurnKind::En) => {
                    main - binom(e1 - a2 - i - j + 3, li - j + 1) * binom(e2 - a1 + i + j - 3, li + i - 1)
                }
            }
        });
        acc += m.det();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::path::{ne_turns, Path, Statistic};

    #[test]
    fn single_path_counts() {
        assert_eq!(turns_unrestricted(0, 0, 2, 2, 1, TurnKind::Ne).unwrap(), int(4));
        assert_eq!(turns_unrestricted(0, 0, 3, 1, 0, TurnKind::En).unwrap(), int(1));
        assert_eq!(turns_below_diagonal(0, 0, 3, 3, 1, TurnKind::Ne).unwrap(), int(3));
        assert_eq!(turns_below_diagonal(0, 0, 3, 3, 5, TurnKind::Ne).unwrap(), int(0));
        assert_eq!(turns_two_boundaries(0, 0, 2, 2, -1, 1, 1).unwrap(), int(3));
        assert_eq!(turns_slope_mu(3, 3, 1, 1, TurnKind::Ne).unwrap(), int(3));
        assert_eq!(turns_slope_mu(5, 0, 2, 0, TurnKind::Ne).unwrap(), int(1));
        assert!(turns_below_diagonal(0, 1, 3, 3, 1, TurnKind::Ne).is_err());
    }

    #[test]
    fn runs() {
        assert_eq!(run_gf(0, 0, 1, 1, TurnRegion::Unrestricted).unwrap(), Poly::from_ints(&[0, 0, 2]));
        assert_eq!(run_gf(0, 0, 4, 0, TurnRegion::Unrestricted).unwrap(), Poly::from_ints(&[0, 1]));
        let p0 = Path::from_word((1, -1), "NNENNEEENENN");
        assert_eq!(Statistic::Runs.eval(&p0), 7);
    }

    #[test]
    fn reflection_pair() {
        let t = TurnArray::new(vec![0, 1], vec![1, 2]);
        let r = reflect_turn_array(&t).unwrap();
        assert_eq!(r, TurnArray::new(vec![1], vec![0, 1, 2]));
        assert_eq!(unreflect_turn_array(&r).unwrap(), t);
        let t = ne_turns(&Path::from_word((0, 0), "ENNEEN")).unwrap();
        assert_eq!(unreflect_turn_array(&reflect_turn_array(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn family_specialises() {
        for l in 0..3 {
            assert_eq!(
                nonint_turns(&[(0, 0)], &[(3, 2)], l, TurnBoundary::None, TurnKind::Ne).unwrap(),
                turns_unrestricted(0, 0, 3, 2, l, TurnKind::Ne).unwrap()
            );
            assert_eq!(
                nonint_turns(&[(1, 0)], &[(4, 3)], l, TurnBoundary::BelowDiagonal, TurnKind::Ne).unwrap(),
                turns_below_diagonal(1, 0, 4, 3, l, TurnKind::Ne).unwrap()
            );
        }
        assert!(nonint_turns(&[(0, 0), (0, 1)], &[(2, 2), (3, 2)], 1, TurnBoundary::None, TurnKind::Ne).is_err());
    }
}
