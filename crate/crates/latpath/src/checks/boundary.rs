use super::Report;
use crate::boundary::*;
use crate::path::{oracle_count, PathQuery, Restriction, StepSet};
use crate::plane::count_simple;
use crate::Integer;
use std::time::Instant;

fn oc(q: &PathQuery) -> Integer {
    oracle_count(q).expect("oracle query must be finite")
}

/// Nondecreasing sequences of length `n` with entries in `0..=max`.
fn monotone_seqs(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let lo = v.last().copied().unwrap_or(0);
                (lo..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Monotone functions on the box `[0, n]` with values in `0..=max`.
pub fn monotone_box_fns(n: &[i64], max: i64) -> Vec<Vec<i64>> {
    let pts = box_points(n);
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for (k, p) in pts.iter().enumerate() {
        // predecessors in the product order differ in one coordinate by 1
        let preds: Vec<usize> = (0..k)
            .filter(|&j| {
                let q = &pts[j];
                q.iter().zip(p).map(|(x, y)| y - x).filter(|&d| d != 0).count() == 1
                    && q.iter().zip(p).all(|(x, y)| y - x == 0 || y - x == 1)
            })
            .collect();
        out = out
            .into_iter()
            .flat_map(|v| {
                let lo = preds.iter().map(|&j| v[j]).max().unwrap_or(0);
                (lo..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn ladder_case(r: &mut Report, l: &LadderBounds) {
    let q = PathQuery::new(l.start(), l.end(), StepSet::simple(2)).restrict(l.restriction());
    r.eq(ladder_count(l).unwrap(), oc(&q), || format!("ladder_count(a={:?}, b={:?})", l.a, l.b));
    let n = l.n() as i64;
    let mut av: Vec<i64> = l.a.clone();
    av.push(*l.a.last().unwrap());
    let mut bv = vec![l.b[0]];
    bv.extend(&l.b);
    let bb = BoxBoundary::new(vec![n], av, bv).unwrap();
    r.eq(box_boundary_count(&bb).unwrap(), ladder_count(l).unwrap(), || {
        format!("one-dimensional box vs ladder (a={:?}, b={:?})", l.a, l.b)
    });
}

/// Ladders (`n <= max_n`, heights `<= max_h`), point avoidance in a 4x4
/// box, and box boundaries with `d = 2`, `n_i <= 2`, values `<= max_v`.
pub fn determinant_suite(max_n: usize, max_h: i64, max_v: i64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("boundary determinants vs oracle");
    for n in 1..=max_n {
        let seqs = monotone_seqs(n, max_h);
        for a in &seqs {
            for b in &seqs {
                if let Ok(l) = LadderBounds::new(a.clone(), b.clone()) {
                    ladder_case(&mut r, &l);
                }
            }
        }
    }
    ladder_case(&mut r, &LadderBounds::new(vec![3, 5, 7, 8, 8, 8], vec![0, 1, 1, 2, 5, 5]).unwrap());

    let pts: Vec<(i64, i64)> = (0..=4).flat_map(|x| (0..=4).map(move |y| (x, y))).collect();
    let ends = [((0, 0), (4, 4)), ((0, 1), (3, 4)), ((1, 0), (4, 2))];
    for &(s, e) in &ends {
        let mut sets: Vec<Vec<(i64, i64)>> = vec![vec![]];
        for (i, &p) in pts.iter().enumerate() {
            sets.push(vec![p]);
            for &q in &pts[i + 1..] {
                sets.push(vec![p, q]);
            }
        }
        for c in sets {
            let forb = c.iter().map(|&(x, y)| vec![x, y]).collect();
            let q = PathQuery::simple(s.0, s.1, e.0, e.1).restrict(Restriction::Forbidden(forb));
            r.eq(avoid_points_count(s, e, &c).unwrap(), oc(&q), || format!("avoid_points_count({:?}, {:?}, {:?})", s, e, c));
        }
        r.eq(avoid_points_count(s, e, &[]).unwrap(), count_simple(s.0, s.1, e.0, e.1), || format!("no points {:?}", e));
    }

    for n1 in 0..=2 {
        for n2 in 0..=2 {
            let n = vec![n1, n2];
            let fns = monotone_box_fns(&n, max_v);
            for a in &fns {
                for b in &fns {
                    if a.iter().zip(b).any(|(x, y)| x < y) {
                        continue;
                    }
                    let bb = BoxBoundary::new(n.clone(), a.clone(), b.clone()).unwrap();
                    let q = PathQuery::new(bb.start(), bb.end(), StepSet::simple(3)).restrict(bb.restriction());
                    r.eq(box_boundary_count(&bb).unwrap(), oc(&q), || format!("box_boundary_count(n={:?}, a={:?}, b={:?})", n, a, b));
                }
            }
        }
    }
    r.timed(t0)
}
