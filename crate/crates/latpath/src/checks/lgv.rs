use super::Report;
use crate::algebra::{int, Matrix, Poly};
use crate::lgv::*;
use crate::path::Point;
use crate::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Lower-left boundary of the grid `0..=s` squared, from the top-left
/// corner down and then right.
fn lower_left(s: i64) -> Vec<Point> {
    let mut v: Vec<Point> = (0..=s).rev().map(|y| vec![0, y]).collect();
    v.extend((1..=s).map(|x| vec![x, 0]));
    v
}

/// Upper-right boundary, from the top-left corner right and then down.
fn upper_right(s: i64) -> Vec<Point> {
    let mut v: Vec<Point> = (0..=s).map(|x| vec![x, s]).collect();
    v.extend((0..s).rev().map(|y| vec![s, y]));
    v
}

fn pick(pts: &[Point], idx: &[usize]) -> Vec<Point> {
    idx.iter().map(|&i| pts[i].clone()).collect()
}

fn system(g: &Dag<Integer>, a: &[Point], e: &[Point]) -> DagPathSystem<Integer> {
    DagPathSystem::new(g.clone(), g.vertices(a).unwrap(), g.vertices(e).unwrap())
}

/// Determinant and Pfaffian formulas against exhaustive enumeration on the
/// grid `0..=side` squared with up to `max_paths` paths, boundary starts
/// and ends, plus random interior and weighted instances.
pub fn lgv_suite(side: i64, max_paths: usize, seed: u64) -> Report {
    let t = Instant::now();
    let mut r = Report::new("lgv");
    let g: Dag<Integer> = Dag::grid(0, 0, side, side);
    let (ll, ur) = (lower_left(side), upper_right(side));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for n in 1..=max_paths {
        for ai in subsets(ll.len(), n) {
            let a = pick(&ll, &ai);
            for ei in subsets(ur.len(), n) {
                let e = pick(&ur, &ei);
                let sys = system(&g, &a, &e);
                let brute = signed_family_sum(&sys).unwrap();
                r.eq(lgv_det(&sys).unwrap(), brute.clone(), || format!("lgv_det {:?} -> {:?}", a, e));
                r.eq(nonintersecting_gf(&g, &sys.starts, &sys.ends), brute, || format!("identity only {:?} -> {:?}", a, e));
            }
        }
    }

    // general positions and weights
    let pts: Vec<Point> = (0..=side).flat_map(|x| (0..=side).map(move |y| vec![x, y])).collect();
    for k in 0..200 {
        let n = 1 + k % max_paths;
        let weighted = k % 2 == 1;
        let gw: Dag<Integer> = if weighted {
            let w: Vec<i64> = (0..4 * pts.len()).map(|_| rng.gen_range(-2..=3)).collect();
            Dag::grid_weighted(0, 0, side, side, |p, q| int(w[(4 * (p[0] * (side + 1) + p[1]) + 2 * (q[0] - p[0])) as usize]))
        } else {
            g.clone()
        };
        let a: Vec<Point> = (0..n).map(|_| pts[rng.gen_range(0..pts.len())].clone()).collect();
        let e: Vec<Point> = (0..n).map(|_| pts[rng.gen_range(0..pts.len())].clone()).collect();
        let sys = system(&gw, &a, &e);
        r.eq(lgv_det(&sys).unwrap(), signed_family_sum(&sys).unwrap(), || format!("lgv_det {:?} -> {:?}, weighted {}", a, e, weighted));
    }

    // free ends: all boundary start sets against several end sets
    let mut end_sets: Vec<Vec<usize>> = vec![(0..ur.len()).collect(), (0..=side as usize).collect()];
    for _ in 0..3 {
        end_sets.push((0..ur.len()).filter(|_| rng.gen_bool(0.5)).collect());
    }
    for n in 1..=max_paths {
        for ai in subsets(ll.len(), n) {
            let a = pick(&ll, &ai);
            for es in &end_sets {
                let e = pick(&ur, es);
                let sys = system(&g, &a, &e);
                let pf = pf_free_endpoints(&sys, PairMode::Signed).unwrap();
                r.eq(pf.clone(), signed_family_sum(&sys).unwrap(), || format!("pf_free {:?} -> {:?}", a, e));
                let id = pf_free_endpoints(&sys, PairMode::Identity).unwrap();
                r.eq(id, pf.clone(), || format!("pf_free identity {:?} -> {:?}", a, e));
                if n >= 2 {
                    let mut swapped = sys.clone();
                    swapped.starts.swap(0, 1);
                    let ps = pf_free_endpoints(&swapped, PairMode::Signed).unwrap();
                    r.eq(ps.clone(), -pf, || format!("pf_free swap {:?}", a));
                    r.eq(ps, signed_family_sum(&swapped).unwrap(), || format!("pf_free swapped sum {:?}", a));
                }
            }
        }
    }

    // mixed: m fixed ends, the rest free among the remaining boundary
    for (n, m) in [(1usize, 1usize), (2, 0), (2, 2), (3, 1), (3, 3)] {
        if n > max_paths {
            continue;
        }
        for ai in subsets(ll.len(), n) {
            let a = pick(&ll, &ai);
            for fi in subsets(ur.len(), m) {
                let rest: Vec<usize> = (0..ur.len()).filter(|i| !fi.contains(i)).collect();
                let sys = system(&g, &a, &pick(&ur, &rest)).with_fixed(g.vertices(&pick(&ur, &fi)).unwrap());
                let brute = signed_family_sum(&sys).unwrap();
                for mode in [PairMode::Signed, PairMode::Identity] {
                    r.eq(pf_mixed(&sys, mode).unwrap(), brute.clone(), || {
                        format!("pf_mixed {:?} {:?}, fixed {:?}", mode, a, pick(&ur, &fi))
                    });
                }
                if n == m {
                    r.eq(pf_mixed(&sys, PairMode::Signed).unwrap(), lgv_det(&sys.clone().with_ends(sys.fixed.clone())).unwrap(), || {
                        format!("pf_mixed vs lgv_det {:?}", a)
                    });
                }
            }
        }
    }

    // both ends free
    for n in 1..=max_paths {
        for ai in subsets(ll.len(), n) {
            let a = pick(&ll, &ai);
            for es in &end_sets {
                let e = pick(&ur, es);
                let sys = system(&g, &a, &e);
                let counts = subfamily_counts(&sys);
                let cases: &[BothFreeCase] = if n % 2 == 0 { &[BothFreeCase::A, BothFreeCase::C] } else { &[BothFreeCase::B] };
                for &c in cases {
                    let want = if c == BothFreeCase::A {
                        Poly::new(counts.iter().step_by(2).cloned().collect())
                    } else {
                        Poly::new(counts.clone())
                    };
                    r.eq(pf_both_free(&sys, c).unwrap(), want, || format!("pf_both_free {:?} {:?} -> {:?}", c, a, e));
                }
            }
        }
    }

    r.timed(t)
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Integer> {
    Matrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-3..=3)))
}

/// Minor summation on random integer instances for each `(n, m, p)`.
pub fn minor_summation_suite(tuples: &[(usize, usize, usize)], per: usize, seed: u64) -> Report {
    let t = Instant::now();
    let mut r = Report::new("minor summation");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &(n, m, p) in tuples {
        for k in 0..per {
            let mm = random_matrix(&mut rng, n, p);
            let h = random_matrix(&mut rng, n, m);
            let a = random_matrix(&mut rng, p, p).skew_from_upper();
            let ok = minor_summation_check(&mm, &h, &a).unwrap();
            r.check(ok, || format!("(n,m,p)=({},{},{}) instance {}", n, m, p, k));
        }
    }
    r.timed(t)
}

/// Partitions of `n` with at most `rows` parts, padded with zeros.
pub fn partitions(n: i64, rows: usize) -> Vec<Vec<i64>> {
    fn rec(n: i64, max: i64, rows: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            let mut v = cur.clone();
            v.resize(rows, 0);
            out.push(v);
            return;
        }
        if cur.len() == rows {
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, rows, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, rows, &mut Vec::new(), &mut out);
    out
}

fn entry_sum_gf(ts: &[Tableau]) -> Poly<Integer> {
    let mut c: Vec<Integer> = Vec::new();
    for t in ts {
        let s = t.iter().flatten().sum::<i64>() as usize;
        if c.len() <= s {
            c.resize(s + 1, Integer::zero());
        }
        c[s] += 1;
    }
    Poly::new(c)
}

/// Tableau counts: determinant, hook-content product and enumeration on
/// straight, skew and flagged shapes with at most `max_cells` cells.
pub fn ssyt_suite(max_cells: i64) -> Report {
    let t = Instant::now();
    let mut r = Report::new("ssyt");
    for cells in 0..=max_cells {
        for lambda in partitions(cells, cells.max(1) as usize) {
            let lambda: Vec<i64> = lambda.into_iter().filter(|&x| x > 0).collect();
            let rows = lambda.len() as i64;
            for a in rows.max(1)..=rows + 2 {
                let sh = Shape::straight(lambda.clone(), a).unwrap();
                let ts = enumerate_ssyt(&sh).unwrap();
                let hc = hook_content(&lambda, a).unwrap();
                r.eq(hc.clone(), Integer::from(ts.len()), || format!("hook_content {:?} a={}", lambda, a));
                r.eq(ssyt_count(&sh).unwrap(), hc, || format!("ssyt_count {:?} a={}", lambda, a));
                let gf = entry_sum_gf(&ts);
                r.eq(hook_content_gf(&lambda, a).unwrap(), gf.clone(), || format!("hook_content_gf {:?} a={}", lambda, a));
                r.eq(ssyt_gf(&sh).unwrap(), gf, || format!("ssyt_gf {:?} a={}", lambda, a));
                for tb in &ts {
                    r.eq(paths_to_ssyt(&ssyt_to_paths(&sh, tb)), tb.clone(), || format!("bijection {:?}", tb));
                }
            }
        }
    }
    // skew and flagged shapes, three rows, up to max_cells cells
    for lsum in 0..=max_cells.min(9) {
        for lambda in partitions(lsum, 3) {
            for msum in 0..=lsum {
                for mu in partitions(msum, 3) {
                    if lambda.iter().zip(&mu).any(|(l, m)| l < m) || lsum - msum > max_cells {
                        continue;
                    }
                    for (a, b) in [(vec![2, 2, 2], vec![0, 0, 0]), (vec![1, 2, 3], vec![0, 0, 1]), (vec![2, 3, 3], vec![1, 1, 2])] {
                        let sh = Shape::new(lambda.clone(), mu.clone(), a, b).unwrap();
                        let ts = enumerate_ssyt(&sh).unwrap();
                        r.eq(ssyt_count(&sh).unwrap(), Integer::from(ts.len()), || format!("ssyt_count {:?}", sh));
                        r.eq(ssyt_gf(&sh).unwrap(), entry_sum_gf(&ts), || format!("ssyt_gf {:?}", sh));
                        for tb in &ts {
                            r.eq(paths_to_ssyt(&ssyt_to_paths(&sh, tb)), tb.clone(), || format!("bijection {:?}", tb));
                        }
                    }
                }
            }
        }
    }
    r.timed(t)
}
