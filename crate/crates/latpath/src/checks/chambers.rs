use super::Report;
use crate::algebra::int;
use crate::chambers::*;
use crate::motzkin::{strip_count_transfer, MotzkinWeighting};
use crate::path::{oracle_count, PathQuery, Restriction, StepSet};
use crate::plane::between_diagonals;
use crate::Integer;
use std::time::Instant;

fn step_set(f: StepFamily, d: usize) -> StepSet {
    match f {
        StepFamily::S1 => StepSet::simple(d),
        StepFamily::S1Pm => StepSet::pm_unit(d),
        StepFamily::SdPm => StepSet::diagonal_pm(d),
    }
}

fn chamber(g: GroupType, d: usize) -> Restriction {
    let spec = ChamberSpec::new(g, d, StepFamily::S1);
    Restriction::region(move |x| spec.contains(x))
}

/// Oracle count of `m`-step paths (any length for `S1`) inside the strict
/// chamber.
fn oracle(g: GroupType, f: StepFamily, a: &[i64], e: &[i64], m: Option<usize>) -> Integer {
    let mut q = PathQuery::new(a.to_vec(), e.to_vec(), step_set(f, a.len())).restrict(chamber(g, a.len()));
    if let Some(m) = m {
        q = q.length(m);
    }
    oracle_count(&q).expect("oracle query must be finite")
}

/// Strictly decreasing vectors of length `d` with entries in `lo..=hi`.
fn strict_vectors(d: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in strict_vectors(d - 1, lo, first - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn same_parity(x: &[i64]) -> bool {
    x.windows(2).all(|w| (w[0] - w[1]).rem_euclid(2) == 0)
}

/// Shift a weakly decreasing vector into the strict chamber.
fn strictify(x: &[i64]) -> Vec<i64> {
    let d = x.len() as i64;
    x.iter().enumerate().map(|(i, v)| v + d - 1 - i as i64).collect()
}

/// Partitions of `n` as weakly decreasing vectors without zeros.
fn partitions(n: i64) -> Vec<Vec<i64>> {
    super::partitions(n, n.max(1) as usize).into_iter().map(|p| p.into_iter().filter(|&x| x > 0).collect()).collect()
}

/// Finite chamber determinants and the signed reflection sum against the
/// oracle for `d <= max_d`, coordinates in `0..=max`, `m <= max_m`, plus
/// the hook formula for partitions of at most `hook_cells` cells.
pub fn finite_chamber_suite(max_d: usize, max: i64, max_m: usize, hook_cells: i64) -> Report {
    let t = Instant::now();
    let mut r = Report::new("finite chambers");
    for n in 0..=hook_cells {
        for lambda in partitions(n) {
            let zero = vec![0; lambda.len()];
            let h = hook_formula(&lambda).unwrap();
            r.eq(typeA_det(&zero, &lambda).unwrap(), h.clone(), || format!("typeA_det from origin {:?}", lambda));
            if !lambda.is_empty() && lambda.len() <= 4 {
                let sa = strictify(&zero);
                let se = strictify(&lambda);
                r.eq(oracle(GroupType::A, StepFamily::S1, &sa, &se, None), h, || format!("hook vs oracle {:?}", lambda));
            }
        }
    }
    for d in 1..=max_d {
        // weakly decreasing points, simple steps
        let weak: Vec<Vec<i64>> = strict_vectors(d, 0, max + d as i64 - 1)
            .into_iter()
            .map(|v| v.iter().enumerate().map(|(i, x)| x - (d - 1 - i) as i64).collect())
            .collect();
        for a in &weak {
            for e in &weak {
                let det = typeA_det(a, e).unwrap();
                let (sa, se) = (strictify(a), strictify(e));
                let total: i64 = a.iter().zip(e).map(|(x, y)| y - x).sum();
                r.eq(det.clone(), oracle(GroupType::A, StepFamily::S1, &sa, &se, None), || format!("typeA_det {:?} -> {:?}", a, e));
                if total >= 0 {
                    let spec = ChamberSpec::new(GroupType::A, d, StepFamily::S1);
                    r.eq(signed_reflection_sum(&spec, &sa, &se, total as usize).unwrap(), det, || {
                        format!("signed sum A S1 {:?} -> {:?}", a, e)
                    });
                }
            }
        }
        let strict = strict_vectors(d, 0, max);
        for a in &strict {
            for e in &strict {
                let parity = same_parity(a) && same_parity(e);
                for m in 0..=max_m {
                    let o_pm = oracle(GroupType::A, StepFamily::S1Pm, a, e, Some(m));
                    let spec = ChamberSpec::new(GroupType::A, d, StepFamily::S1Pm);
                    r.eq(signed_reflection_sum(&spec, a, e, m).unwrap(), o_pm, || format!("signed sum A S1+- {:?} -> {:?} m={}", a, e, m));
                    if parity {
                        let o = oracle(GroupType::A, StepFamily::SdPm, a, e, Some(m));
                        r.eq(lock_step_det(a, e, m).unwrap(), o.clone(), || format!("lock_step_det {:?} -> {:?} m={}", a, e, m));
                        let spec = ChamberSpec::new(GroupType::A, d, StepFamily::SdPm);
                        r.eq(signed_reflection_sum(&spec, a, e, m).unwrap(), o, || format!("signed sum A Sd+- {:?} -> {:?} m={}", a, e, m));
                    }
                    if a.iter().chain(e.iter()).all(|&x| x > 0) {
                        let spec = ChamberSpec::new(GroupType::C, d, StepFamily::S1Pm);
                        r.eq(signed_reflection_sum(&spec, a, e, m).unwrap(), oracle(GroupType::C, StepFamily::S1Pm, a, e, Some(m)), || {
                            format!("signed sum C S1+- {:?} -> {:?} m={}", a, e, m)
                        });
                        if parity {
                            let o = oracle(GroupType::C, StepFamily::SdPm, a, e, Some(m));
                            r.eq(typeC_det(a, e, m).unwrap(), o.clone(), || format!("typeC_det {:?} -> {:?} m={}", a, e, m));
                            let spec = ChamberSpec::new(GroupType::C, d, StepFamily::SdPm);
                            r.eq(signed_reflection_sum(&spec, a, e, m).unwrap(), o, || {
                                format!("signed sum C Sd+- {:?} -> {:?} m={}", a, e, m)
                            });
                        }
                    }
                }
            }
        }
    }
    r.eq(lock_step_det(&[2, 0], &[2, 0], 2).unwrap(), int(3), || "lock-step anchor".into());
    r.eq(typeC_det(&[1], &[1], 2).unwrap(), int(1), || "type C anchor a=e=1".into());
    r.eq(typeC_det(&[1], &[3], 2).unwrap(), int(1), || "type C anchor 1 -> 3".into());
    for (mu, c) in [(vec![1], vec![3, 2]), (vec![1, 1], vec![2, 1, 1]), (vec![2, 1], vec![4, 1, 1]), (vec![0, 0], vec![1, 2, 1])] {
        let q = PathQuery::new(vec![0; c.len()], c.clone(), StepSet::simple(c.len()));
        let mut rr: Vec<i64> = vec![1];
        rr.extend(mu.iter().map(|m| -m));
        let o = oracle_count(&q.restrict(Restriction::halfspace(rr, 0))).unwrap();
        r.eq(hyperplane_bound(&mu, &c).unwrap(), o, || format!("hyperplane_bound mu={:?} c={:?}", mu, c));
    }
    for d in 1..=3usize {
        for mu in strict_vectors(d, -1, 2).into_iter().map(|v| v.iter().map(|x| x.abs()).collect::<Vec<i64>>()) {
            for c in strict_vectors(d + 1, -1, max).into_iter().map(|v| v.iter().map(|x| x.abs()).collect::<Vec<i64>>()) {
                let slack = c[0] - mu.iter().zip(&c[1..]).map(|(m, x)| m * x).sum::<i64>();
                if slack < 0 {
                    continue;
                }
                let mut rr: Vec<i64> = vec![1];
                rr.extend(mu.iter().map(|m| -m));
                let q = PathQuery::new(vec![0; d + 1], c.clone(), StepSet::simple(d + 1)).restrict(Restriction::halfspace(rr, 0));
                r.eq(hyperplane_bound(&mu, &c).unwrap(), oracle_count(&q).unwrap(), || format!("hyperplane_bound mu={:?} c={:?}", mu, c));
            }
        }
    }
    r.timed(t)
}

/// Affine chamber formulas against the oracle for `d <= max_d`,
/// coordinates in `0..=max`, periods up to `max + 1`, `m <= max_m`.
pub fn affine_chamber_suite(max_d: usize, max: i64, max_m: usize) -> Report {
    let t = Instant::now();
    let mut r = Report::new("affine chambers");
    for d in 2..=max_d {
        for n in 2..=max + 1 {
            let g = GroupType::AffineA(n);
            let spec = ChamberSpec::new(g, d, StepFamily::S1);
            let pts: Vec<Vec<i64>> = strict_vectors(d, 0, max).into_iter().filter(|x| spec.contains(x)).collect();
            for a in &pts {
                for e in &pts {
                    let o = oracle(g, StepFamily::S1, a, e, None);
                    r.eq(affineA_count(a, e, n).unwrap(), o.clone(), || format!("affineA_count {:?} -> {:?} N={}", a, e, n));
                    if d == 2 {
                        let bd = between_diagonals(a[0], a[1], e[0], e[1], 1 - n, -1).unwrap();
                        r.eq(bd, o, || format!("affine A vs between_diagonals {:?} -> {:?} N={}", a, e, n));
                    }
                    let parity = same_parity(a) && same_parity(e);
                    for m in 0..=max_m {
                        r.eq(affineA_pm_egf(a, e, n, m).unwrap(), oracle(g, StepFamily::S1Pm, a, e, Some(m)), || {
                            format!("affineA_pm_egf {:?} -> {:?} N={} m={}", a, e, n, m)
                        });
                        if parity {
                            r.eq(affineA_lockstep(a, e, n, m).unwrap(), oracle(g, StepFamily::SdPm, a, e, Some(m)), || {
                                format!("affineA_lockstep {:?} -> {:?} N={} m={}", a, e, n, m)
                            });
                        }
                    }
                }
            }
        }
    }
    r.eq(affineA_count(&[1, 0], &[2, 1], 3).unwrap(), int(1), || "affine A anchor".into());
    r.merge(affine_c_sweep(max_d, max, max_m));
    r.timed(t)
}

/// Affine type C trigonometric determinants against the oracle, with the
/// largest rounding residual recorded.
pub fn affine_c_sweep(max_d: usize, max: i64, max_m: usize) -> Report {
    let t = Instant::now();
    let mut r = Report::new("affine C");
    for d in 1..=max_d {
        for n in 2..=max + 1 {
            let g = GroupType::AffineC(n);
            let spec = ChamberSpec::new(g, d, StepFamily::S1Pm);
            let pts: Vec<Vec<i64>> = strict_vectors(d, 1, max).into_iter().filter(|x| spec.contains(x)).collect();
            for a in &pts {
                for e in &pts {
                    let parity = same_parity(a) && same_parity(e);
                    for m in 0..=max_m {
                        match affineC_pm_value(a, e, n, m) {
                            Ok((v, raw)) => {
                                r.residual((raw - raw.round()).abs());
                                r.eq(v, oracle(g, StepFamily::S1Pm, a, e, Some(m)), || {
                                    format!("affineC_pm {:?} -> {:?} N={} m={}", a, e, n, m)
                                });
                            }
                            Err(err) => r.check(false, || format!("affineC_pm {:?} -> {:?} N={} m={}: {}", a, e, n, m, err)),
                        }
                        if parity {
                            match affineC_lockstep_value(a, e, n, m) {
                                Ok((v, raw)) => {
                                    r.residual((raw - raw.round()).abs());
                                    r.eq(v, oracle(g, StepFamily::SdPm, a, e, Some(m)), || {
                                        format!("affineC_lockstep {:?} -> {:?} N={} m={}", a, e, n, m)
                                    });
                                }
                                Err(err) => r.check(false, || format!("affineC_lockstep {:?} -> {:?} N={} m={}: {}", a, e, n, m, err)),
                            }
                        }
                        if d == 1 && n >= 2 {
                            // one walker in 0 < x < N is a Dyck path in a strip of height N - 2
                            let w = MotzkinWeighting::constant(int(0), int(1), n as usize);
                            let s = strip_count_transfer((a[0] - 1) as usize, (e[0] - 1) as usize, (n - 2) as usize, m, &w).unwrap();
                            r.eq(affineC_lockstep(a, e, n, m).unwrap(), s, || format!("strip identity {:?} -> {:?} N={} m={}", a, e, n, m));
                        }
                    }
                }
            }
        }
    }
    r.timed(t)
}
