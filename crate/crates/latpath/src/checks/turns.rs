use super::Report;
use crate::algebra::Poly;
use crate::path::{for_each_path, oracle_gf, PathQuery, Restriction, Statistic, TurnArray, TurnKind};
use crate::plane::below_diagonal;
use crate::turns::*;
use crate::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::time::Instant;

fn stat(kind: TurnKind) -> Statistic {
    match kind {
        TurnKind::Ne => Statistic::NeTurns,
        TurnKind::En => Statistic::EnTurns,
    }
}

fn gf(q: PathQuery, s: &Statistic) -> Poly<Integer> {
    oracle_gf(&q, s).expect("oracle query must be finite")
}

const KINDS: [TurnKind; 2] = [TurnKind::Ne, TurnKind::En];

/// Single-path turn formulas and run generating functions against the
/// oracle for coordinates in `0..=max` and up to `max_l` turns.
pub fn turn_formula_suite(max: i64, max_l: i64) -> Report {
    let t = Instant::now();
    let mut r = Report::new("turn formulas");
    for a in 0..=max {
        for b in 0..=max {
            for c in a..=max {
                for d in b..=max {
                    for kind in KINDS {
                        let all = gf(PathQuery::simple(a, b, c, d), &stat(kind));
                        for l in 0..=max_l {
                            r.eq(turns_unrestricted(a, b, c, d, l, kind).unwrap(), all.coeff(l as usize), || {
                                format!("turns_unrestricted {:?} ({},{})->({},{}) l={}", kind, a, b, c, d, l)
                            });
                        }
                        if a >= b && c >= d {
                            let below = gf(PathQuery::simple(a, b, c, d).restrict(Restriction::below_diagonal()), &stat(kind));
                            let mut sum = Integer::zero();
                            for l in 0..=(c - a).min(d - b).max(max_l) {
                                let v = turns_below_diagonal(a, b, c, d, l, kind).unwrap();
                                sum += &v;
                                r.eq(v, below.coeff(l as usize), || {
                                    format!("turns_below_diagonal {:?} ({},{})->({},{}) l={}", kind, a, b, c, d, l)
                                });
                            }
                            r.eq(sum, below_diagonal(a, b, c, d).unwrap(), || format!("sum over l ({},{})->({},{})", a, b, c, d));
                        }
                    }
                    for region in regions(a, b, c, d) {
                        let q = PathQuery::simple(a, b, c, d).restrict(restriction(region));
                        r.eq(run_gf(a, b, c, d, region).unwrap(), gf(q, &Statistic::Runs), || {
                            format!("run_gf {:?} ({},{})->({},{})", region, a, b, c, d)
                        });
                    }
                }
            }
        }
    }
    // bands
    for s in -3..=0 {
        for tt in (s + 1)..=3 {
            for a in 0..=max {
                for b in 0..=max {
                    for c in a..=max {
                        for d in b..=max {
                            if !(a + tt >= b && b >= a + s && c + tt >= d && d >= c + s) {
                                continue;
                            }
                            let q = PathQuery::simple(a, b, c, d).restrict(Restriction::diagonal_band(s, tt));
                            let o = gf(q, &Statistic::NeTurns);
                            for l in 0..=max_l {
                                r.eq(turns_two_boundaries(a, b, c, d, s, tt, l).unwrap(), o.coeff(l as usize), || {
                                    format!("turns_two_boundaries ({},{})->({},{}) s={} t={} l={}", a, b, c, d, s, tt, l)
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    // a wide band reproduces the one-sided count
    for a in 0..=max {
        for b in 0..=a {
            for c in a..=max {
                for d in b..=c {
                    for l in 0..=max_l {
                        r.eq(
                            turns_two_boundaries(a, b, c, d, -(b - a).abs() - 20, 0, l).unwrap(),
                            turns_below_diagonal(a, b, c, d, l, TurnKind::Ne).unwrap(),
                            || format!("wide band ({},{})->({},{}) l={}", a, b, c, d, l),
                        );
                    }
                }
            }
        }
    }
    // slope mu from the origin
    for mu in 1..=3 {
        for d in 0..=max {
            for c in mu * d..=(mu * d + max).min(2 * max + mu * 2) {
                let q = || PathQuery::simple(0, 0, c, d).restrict(Restriction::halfspace(vec![1, -mu], 0));
                for kind in KINDS {
                    let o = gf(q(), &stat(kind));
                    for l in 0..=max_l {
                        r.eq(turns_slope_mu(c, d, mu, l, kind).unwrap(), o.coeff(l as usize), || {
                            format!("turns_slope_mu {:?} c={} d={} mu={} l={}", kind, c, d, mu, l)
                        });
                    }
                }
                for l in 0..=max_l {
                    r.eq(turns_slope_mu_en_product(c, d, mu, l).unwrap(), turns_slope_mu(c, d, mu, l, TurnKind::En).unwrap(), || {
                        format!("EN forms c={} d={} mu={} l={}", c, d, mu, l)
                    });
                }
            }
        }
    }
    r.timed(t)
}

fn regions(a: i64, b: i64, c: i64, d: i64) -> Vec<TurnRegion> {
    let mut v = vec![TurnRegion::Unrestricted];
    if a >= b && c >= d {
        v.push(TurnRegion::BelowDiagonal);
    }
    for (s, t) in [(-1, 1), (-2, 0), (0, 2), (-1, 0)] {
        let reg = TurnRegion::Band { s, t };
        if reg.admits(a, b) && reg.admits(c, d) {
            v.push(reg);
        }
    }
    v
}

fn restriction(region: TurnRegion) -> Restriction {
    match region {
        TurnRegion::Unrestricted => Restriction::None,
        TurnRegion::BelowDiagonal => Restriction::below_diagonal(),
        TurnRegion::Band { s, t } => Restriction::diagonal_band(s, t),
    }
}

/// Strictly increasing sequences of length `l` in `lo..=hi`.
fn strict_seqs(l: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if l == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in strict_seqs(l - 1, first + 1, hi) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn in_range(v: &[i64], lo: i64, hi: i64) -> bool {
    v.iter().all(|&x| lo <= x && x <= hi) && v.windows(2).all(|w| w[0] < w[1])
}

/// The two-rowed-array reflection and its inverse are mutually inverse
/// bijections between violating NE arrays and the reflected arrays, for
/// all bounds in `0..=max` and `1 <= l <= max_l`.
pub fn turn_involution_suite(max: i64, max_l: usize) -> Report {
    let t = Instant::now();
    let mut r = Report::new("turn array reflection");
    for a in 0..=max {
        for b in 0..=a {
            for c in a..=max {
                for d in b..=c {
                    for l in 1..=max_l {
                        let mut images = HashSet::new();
                        for p in strict_seqs(l, a, c - 1) {
                            for q in strict_seqs(l, b + 1, d) {
                                if p.iter().zip(&q).all(|(x, y)| x >= y) {
                                    continue;
                                }
                                let arr = TurnArray::new(p.clone(), q.clone());
                                let img = reflect_turn_array(&arr).unwrap();
                                r.check(in_range(&img.p, b + 1, c - 1) && in_range(&img.q, a, d), || {
                                    format!("image {:?} of {:?} out of range", img, arr)
                                });
                                r.eq(unreflect_turn_array(&img).unwrap(), arr, || format!("round trip bounds ({},{},{},{})", a, b, c, d));
                                images.insert(img);
                            }
                        }
                        let mut targets = 0usize;
                        for p in strict_seqs(l - 1, b + 1, c - 1) {
                            for q in strict_seqs(l + 1, a, d) {
                                targets += 1;
                                let arr = TurnArray::new(p.clone(), q.clone());
                                let back = unreflect_turn_array(&arr).unwrap();
                                let violating = back.p.iter().zip(&back.q).any(|(x, y)| x < y);
                                r.check(violating && in_range(&back.p, a, c - 1) && in_range(&back.q, b + 1, d), || {
                                    format!("preimage {:?} of {:?} is not a violating array", back, arr)
                                });
                                r.eq(reflect_turn_array(&back).unwrap(), arr, || format!("inverse round trip ({},{},{},{})", a, b, c, d));
                            }
                        }
                        r.eq(images.len(), targets, || format!("class sizes ({},{},{},{}) l={}", a, b, c, d, l));
                    }
                }
            }
        }
    }
    r.timed(t)
}

/// Point set and turn count of one path.
type Traced = (HashSet<(i64, i64)>, usize);

/// Distribution of the total turn count over non-intersecting families.
pub fn nonint_turn_oracle(a: &[(i64, i64)], e: &[(i64, i64)], res: &Restriction, kind: TurnKind) -> Vec<Integer> {
    let s = stat(kind);
    let lists: Vec<Vec<Traced>> = a
        .iter()
        .zip(e)
        .map(|(&(a1, a2), &(e1, e2))| {
            let mut v = Vec::new();
            let q = PathQuery::simple(a1, a2, e1, e2).restrict(res.clone());
            for_each_path(&q, |p| {
                let pts = p.points().into_iter().map(|x| (x[0], x[1])).collect();
                v.push((pts, s.eval(p) as usize));
            })
            .expect("oracle query must be finite");
            v
        })
        .collect();
    let mut dist = Vec::new();
    fn rec<'a>(lists: &'a [Vec<Traced>], i: usize, used: &mut Vec<&'a HashSet<(i64, i64)>>, turns: usize, dist: &mut Vec<Integer>) {
        if i == lists.len() {
            if dist.len() <= turns {
                dist.resize(turns + 1, Integer::zero());
            }
            dist[turns] += 1;
            return;
        }
        for (pts, k) in &lists[i] {
            if used.iter().any(|u| !u.is_disjoint(pts)) {
                continue;
            }
            used.push(pts);
            rec(lists, i + 1, used, turns + k, dist);
            used.pop();
        }
    }
    rec(&lists, 0, &mut Vec::new(), 0, &mut dist);
    dist
}

fn ordered(a: &[(i64, i64)], e: &[(i64, i64)], kind: TurnKind) -> bool {
    let ok = |v: &[(i64, i64)], first: fn(i64, i64) -> bool, second: fn(i64, i64) -> bool| {
        v.windows(2).all(|w| first(w[0].0, w[1].0) && second(w[0].1, w[1].1))
    };
    let weak_inc = |x: i64, y: i64| x <= y;
    let strict_inc = |x: i64, y: i64| x < y;
    let weak_dec = |x: i64, y: i64| x >= y;
    let strict_dec = |x: i64, y: i64| x > y;
    match kind {
        TurnKind::Ne => ok(a, weak_inc, strict_dec) && ok(e, strict_inc, weak_dec),
        TurnKind::En => ok(a, strict_inc, weak_dec) && ok(e, weak_inc, strict_dec),
    }
}

/// Non-intersecting turn determinants against exhaustive enumeration:
/// all admissible pairs of paths with coordinates in `0..=max`, plus
/// `triples` random three-path instances.
pub fn nonint_turn_suite(max: i64, triples: usize, seed: u64) -> Report {
    let t = Instant::now();
    let mut r = Report::new("non-intersecting turns");
    let pts: Vec<(i64, i64)> = (0..=max).flat_map(|x| (0..=max).map(move |y| (x, y))).collect();
    let cases = [
        (TurnBoundary::None, TurnKind::Ne),
        (TurnBoundary::None, TurnKind::En),
        (TurnBoundary::BelowDiagonal, TurnKind::Ne),
        (TurnBoundary::BelowDiagonal, TurnKind::En),
    ];
    let run = |r: &mut Report, a: &[(i64, i64)], e: &[(i64, i64)]| {
        for (bd, kind) in cases {
            if !ordered(a, e, kind) {
                continue;
            }
            let res = match bd {
                TurnBoundary::None => Restriction::None,
                TurnBoundary::BelowDiagonal => {
                    if a.iter().chain(e).any(|&(x, y)| x < y) {
                        continue;
                    }
                    Restriction::below_diagonal()
                }
            };
            let dist = nonint_turn_oracle(a, e, &res, kind);
            let top = 2 * max as usize + 1;
            for l in 0..=top {
                let want = dist.get(l).cloned().unwrap_or_default();
                r.eq(nonint_turns(a, e, l as i64, bd, kind).unwrap(), want, || {
                    format!("nonint_turns {:?} {:?} {:?} -> {:?} l={}", bd, kind, a, e, l)
                });
            }
        }
    };
    for &a1 in &pts {
        for &a2 in &pts {
            for &e1 in &pts {
                for &e2 in &pts {
                    let (a, e) = ([a1, a2], [e1, e2]);
                    if ordered(&a, &e, TurnKind::Ne) || ordered(&a, &e, TurnKind::En) {
                        run(&mut r, &a, &e);
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let big = max + 1;
    while done < triples {
        let mut draw = || (rng.gen_range(0..=big), rng.gen_range(0..=big));
        let a = [draw(), draw(), draw()];
        let e = [draw(), draw(), draw()];
        if ordered(&a, &e, TurnKind::Ne) || ordered(&a, &e, TurnKind::En) {
            run(&mut r, &a, &e);
            done += 1;
        }
    }
    r.timed(t)
}
