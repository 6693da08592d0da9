use super::Report;
use crate::algebra::{binom, Poly};
use crate::path::{oracle_count, oracle_gf, PathQuery, Restriction, Statistic, StepSet};
use crate::plane::*;
use crate::Integer;
use num_traits::Zero;
use std::time::Instant;

fn oc(q: &PathQuery) -> Integer {
    oracle_count(q).expect("oracle query must be finite")
}

/// `below_diagonal`, `ballot`, `catalan` and `between_diagonals` against
/// the oracle, coordinates `0..=max`, band widths `t - s <= 5`.
pub fn reflection_suite(max: i64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("reflection and ballot counts vs oracle");
    for a in 0..=max {
        for b in 0..=a {
            for c in 0..=max {
                for d in 0..=c {
                    let q = PathQuery::simple(a, b, c, d).restrict(Restriction::below_diagonal());
                    r.eq(below_diagonal(a, b, c, d).unwrap(), oc(&q), || format!("below_diagonal({},{},{},{})", a, b, c, d));
                }
            }
        }
    }
    for c in 0..=max {
        for d in 0..=c {
            r.eq(ballot(c, d).unwrap(), below_diagonal(0, 0, c, d).unwrap(), || format!("ballot({},{})", c, d));
        }
        let q = PathQuery::simple(0, 0, c, c).restrict(Restriction::below_diagonal());
        r.eq(catalan(c), oc(&q), || format!("catalan({})", c));
    }
    for_band(max, |a, b, c, d, s, t| {
        let q = PathQuery::simple(a, b, c, d).restrict(Restriction::diagonal_band(s, t));
        r.eq(between_diagonals(a, b, c, d, s, t).unwrap(), oc(&q), || {
            format!("between_diagonals({},{},{},{},s={},t={})", a, b, c, d, s, t)
        });
    });
    r.timed(t0)
}

fn for_band(max: i64, mut f: impl FnMut(i64, i64, i64, i64, i64, i64)) {
    for s in -max..=max {
        for t in s..=(s + 5).min(max) {
            for a in 0..=max {
                for b in 0..=max {
                    if !(a + t >= b && b >= a + s) {
                        continue;
                    }
                    for c in a..=max {
                        for d in b..=max {
                            if c + t >= d && d >= c + s {
                                f(a, b, c, d, s, t);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// The cosine form of the two-diagonal count against the binomial sum.
pub fn band_trig_sweep(max: i64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("two-diagonal cosine form vs binomial sum");
    for_band(max, |a, b, c, d, s, t| {
        let exact = between_diagonals(a, b, c, d, s, t).unwrap();
        match between_diagonals_trig_value(a, b, c, d, s, t) {
            Ok((v, raw)) => {
                r.residual((raw - raw.round()).abs());
                r.eq(v, exact, || format!("trig({},{},{},{},s={},t={})", a, b, c, d, s, t));
            }
            Err(e) => r.check(false, || format!("trig({},{},{},{},s={},t={}): {}", a, b, c, d, s, t, e)),
        }
    });
    r.timed(t0)
}

/// Rational Catalan numbers (`r + s <= rs_max`) and the slope-`mu`
/// formulas (`mu <= 3`, coordinates `<= max`), both variants.
pub fn cycle_lemma_suite(rs_max: i64, max: i64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("cycle lemma counts vs oracle");
    for rr in 1..rs_max {
        for ss in 1..=(rs_max - rr) {
            if num_integer::gcd(rr, ss) != 1 {
                continue;
            }
            let q = PathQuery::simple(0, 0, rr, ss).restrict(Restriction::halfspace(vec![ss, -rr], 0));
            r.eq(rational_catalan(rr, ss).unwrap(), oc(&q), || format!("rational_catalan({},{})", rr, ss));
        }
    }
    for mu in 0..=3 {
        for c in 0..=max {
            for d in 0..=max {
                if c < mu * d {
                    continue;
                }
                let q = PathQuery::simple(0, 0, c, d).restrict(Restriction::halfspace(vec![1, -mu], 0));
                r.eq(below_slope_mu(c, d, mu).unwrap(), oc(&q), || format!("below_slope_mu({},{},mu={})", c, d, mu));
            }
        }
        for a in 0..=max {
            for b in 0..=max {
                if a < mu * b {
                    continue;
                }
                for c in a..=max {
                    for d in b..=max {
                        if c < mu * d {
                            continue;
                        }
                        let q = PathQuery::simple(a, b, c, d).restrict(Restriction::halfspace(vec![1, -mu], 0));
                        let want = oc(&q);
                        let v1 = below_slope_mu_general(a, b, c, d, mu, SlopeVariant::LastTouch).unwrap();
                        let v2 = below_slope_mu_general(a, b, c, d, mu, SlopeVariant::InclusionExclusion).unwrap();
                        r.eq(v1, want.clone(), || format!("last-touch({},{},{},{},mu={})", a, b, c, d, mu));
                        r.eq(v2, want, || format!("inclusion-exclusion({},{},{},{},mu={})", a, b, c, d, mu));
                    }
                }
            }
        }
    }
    r.timed(t0)
}

/// Unrestricted families, area polynomial, the slope-3/2 example and the
/// piecewise boundary recursion.
pub fn plane_misc_suite(max: i64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("plane closed forms vs oracle");
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=max {
                for d in 0..=max {
                    let q = PathQuery::simple(a, b, c, d);
                    r.eq(count_simple(a, b, c, d), oc(&q), || format!("count_simple({},{},{},{})", a, b, c, d));
                    let q = PathQuery::new(vec![a, b], vec![c, d], StepSet::delannoy());
                    r.eq(delannoy(a, b, c, d), oc(&q), || format!("delannoy({},{},{},{})", a, b, c, d));
                    let q = PathQuery::simple(a, b, c, d);
                    let gf = oracle_gf(&q, &Statistic::Area).unwrap();
                    let f = area_gf(a, b, c, d).unwrap();
                    r.eq(f.eval(&Integer::from(1)), count_simple(a, b, c, d), || format!("area_gf at 1 ({},{},{},{})", a, b, c, d));
                    r.eq(f, gf, || format!("area_gf({},{},{},{})", a, b, c, d));
                }
            }
        }
    }
    for n in 0..=6usize {
        for c in -3..=3 {
            for d in -3..=3 {
                let q = PathQuery::new(vec![0, 0], vec![c, d], StepSet::pm_unit(2)).length(n);
                r.eq(count_pm(n as i64, 0, 0, c, d).unwrap(), oc(&q), || format!("count_pm(n={},{},{})", n, c, d));
            }
        }
    }
    for n in 0..=7 {
        let (c, d, k) = sato_example_23_target(n);
        let q = PathQuery::simple(0, 0, c, d).restrict(Restriction::halfspace(vec![2, -3], -k));
        r.eq(sato_example_23(n).unwrap(), oc(&q), || format!("sato_example_23({})", n));
    }
    for (segs, c, d) in piecewise_instances() {
        let s2 = segs.clone();
        let q = PathQuery::simple(0, 0, c, d).restrict(Restriction::region(move |p| piecewise_admits(&s2, p[0], p[1])));
        let got = piecewise_boundary(&segs, c, d);
        let want = oc(&q);
        r.check(got.as_ref().is_ok_and(|g| *g == want), || {
            format!("piecewise_boundary({:?}, {}, {}): got {:?}, expected {}", segs, c, d, got, want)
        });
    }
    // single segment through the origin reduces to the slope formula
    for mu in 0..=3 {
        for d in 0..=4 {
            for c in mu * d..=mu * d + 4 {
                r.eq(piecewise_boundary(&[Segment::new(mu, 0, d)], c, d).unwrap(), below_slope_mu(c, d, mu).unwrap(), || {
                    format!("single segment mu={} ({},{})", mu, c, d)
                });
            }
        }
    }
    r.timed(t0)
}

/// Small convex and non-convex boundaries with their end points.
pub fn piecewise_instances() -> Vec<(Vec<Segment>, i64, i64)> {
    let shapes: Vec<Vec<(i64, i64, i64)>> = vec![
        vec![(0, 0, 1), (1, 0, 2)],
        vec![(0, -1, 1), (2, -1, 3)],
        vec![(1, 0, 2), (0, 2, 4)],
        vec![(2, 0, 1), (1, 1, 3)],
        vec![(2, -2, 2), (0, 2, 3)],
        vec![(1, 0, 1), (3, -2, 2), (1, 1, 4)],
        vec![(0, 0, 1), (2, -1, 2), (0, 3, 3)],
        vec![(3, -3, 2), (1, 1, 3)],
        vec![(1, -1, 1), (0, 1, 2), (2, -3, 4)],
    ];
    let mut out = Vec::new();
    for sh in shapes {
        let segs: Vec<Segment> = sh.iter().map(|&(m, n, y)| Segment::new(m, n, y)).collect();
        let d = segs.last().unwrap().top;
        let s = segs.last().unwrap();
        let base = s.mu * d + s.nu;
        for c in base.max(0)..=base.max(0) + 4 {
            out.push((segs.clone(), c, d));
        }
    }
    out
}

/// The three-dimensional `x1 >= max(x2, x3)` count against the oracle
/// (`e1 <= max`) and against its product form when `e1 = e2`.
pub fn kreweras_suite(max: i64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("Kreweras counts vs oracle");
    r.eq(kreweras(1, 1, 1).unwrap(), Integer::from(2), || "kreweras(1,1,1)".into());
    for e1 in 0..=max {
        for e2 in 0..=e1 {
            for e3 in 0..=e1 {
                let q = PathQuery::new(vec![0, 0, 0], vec![e1, e2, e3], StepSet::simple(3))
                    .restrict(Restriction::All(vec![Restriction::halfspace(vec![1, -1, 0], 0), Restriction::halfspace(vec![1, 0, -1], 0)]));
                let v = kreweras(e1, e2, e3).unwrap();
                r.eq(v.clone(), oc(&q), || format!("kreweras({},{},{})", e1, e2, e3));
                if e1 == e2 {
                    r.eq(kreweras_product(e1, e3).unwrap(), v, || format!("product form ({},{},{})", e1, e1, e3));
                }
            }
        }
    }
    r.timed(t0)
}

/// Binomial and q-binomial identities.
pub fn binomial_identities(max: i64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("binomial identities");
    for n in 0..=max {
        for k in 0..=n {
            r.eq(binom(n, k), binom(n, n - k), || format!("symmetry ({},{})", n, k));
            if n > 0 {
                r.eq(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k), || format!("pascal ({},{})", n, k));
            }
            if n <= 12 {
                let qb = crate::algebra::qbinom(n, k);
                r.eq(qb.eval(&Integer::from(1)), binom(n, k), || format!("qbinom at 1 ({},{})", n, k));
                r.eq(qb.degree(), Some((k * (n - k)) as usize), || format!("qbinom degree ({},{})", n, k));
            }
        }
    }
    r.check(Poly::<Integer>::zero().is_zero(), || "zero poly".into());
    r.timed(t0)
}
