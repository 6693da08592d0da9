use super::Report;
use crate::algebra::{int, Series};
use crate::kernel::*;
use crate::path::{oracle_count, PathQuery, Restriction, StepSet};
use crate::plane::catalan;
use crate::{Integer, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Jump sets within `[-m, m]` with at least one negative and one positive jump.
fn jump_sets(m: i64) -> Vec<Vec<i64>> {
    let all: Vec<i64> = (-m..=m).collect();
    (0u32..1 << all.len())
        .map(|mask| all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &b)| b).collect::<Vec<i64>>())
        .filter(|s| s.iter().any(|&b| b < 0) && s.iter().any(|&b| b > 0))
        .collect()
}

fn oracle_excursions(jumps: &[i64], n: usize) -> Integer {
    let q = PathQuery::new(vec![0, 0], vec![n as i64, 0], StepSet::directed(jumps)).restrict(Restriction::halfspace(vec![0, 1], 0));
    oracle_count(&q).unwrap()
}

/// Kernel-method series against dynamic programming and the path oracle
/// for every jump set in `[-2, 2]`, unit and random weights, to `order`;
/// Łukasiewicz counts for `n <= luk`.
pub fn kernel_suite(order: usize, luk: usize, seed: u64) -> Report {
    let t = Instant::now();
    let mut r = Report::new("kernel");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for jumps in jump_sets(2) {
        let unit = WeightedStepSet::<Integer>::unit(&jumps).unwrap();
        let weighted = WeightedStepSet::new(jumps.iter().map(|&b| (b, int(rng.gen_range(1..=3))))).unwrap();
        for (label, s) in [("unit", &unit), ("weighted", &weighted)] {
            let dp = nonneg_walk_dp(s, 0, order);
            r.eq(nonneg_walk_gf(s, order).unwrap(), dp.clone(), || format!("nonneg_walk_gf {:?} {}", jumps, label));
            let total: Integer = s.steps().map(|(_, w)| w.clone()).sum();
            for n in 0..=order.min(8) {
                let span = n as i64 * 2;
                let sum: Integer = (-span..=span).map(|k| walk_gf_by_height(s, k, n).coeff(n)).sum();
                r.eq(sum, num_traits::pow(total.clone(), n), || format!("total weight {:?} {} n={}", jumps, label, n));
            }
            if s.c() == 1 {
                let rs = WeightedStepSet::<Rational>::new(s.steps().map(|(b, w)| (b, Rational::from_integer(w.clone())))).unwrap();
                let u = small_branch(&rs, order + 1).unwrap();
                let res = kernel_residual(&rs, &u).unwrap();
                r.check(res.order() >= order && res.coeffs().iter().all(Zero::is_zero), || {
                    format!("small branch residual {:?} {}: {:?}", jumps, label, res)
                });
                let ui = small_branch(s, order).unwrap();
                let f = eval_at(&kernel_factor_poly(s, order).unwrap(), &ui);
                r.check(f.coeffs().iter().all(Zero::is_zero), || format!("kernel factorization root {:?} {}", jumps, label));
                for k in 0..=3 {
                    r.eq(nonneg_end_height_gf(s, k, order).unwrap(), nonneg_walk_dp(s, k, order), || {
                        format!("nonneg_end_height_gf {:?} {} k={}", jumps, label, k)
                    });
                }
            }
        }
        let gf = nonneg_walk_gf(&unit, order).unwrap();
        for n in 0..=order.min(10) {
            r.eq(gf.coeff(n), oracle_excursions(&jumps, n), || format!("nonneg_walk_gf vs oracle {:?} n={}", jumps, n));
        }
    }
    let m = WeightedStepSet::<Integer>::unit(&[-1, 0, 1]).unwrap();
    r.eq(walk_gf_by_height(&m, 0, 4), Series::new([1, 1, 3, 7, 19].iter().map(|&x| int(x)).collect(), 4), || "Motzkin height 0".into());
    r.eq(nonneg_walk_gf(&m, 4).unwrap(), Series::new([1, 1, 2, 4, 9].iter().map(|&x| int(x)).collect(), 4), || "Motzkin numbers".into());
    for n in 0..=luk {
        let l = lukasiewicz_count(n);
        r.eq(l.clone(), catalan(n as i64), || format!("lukasiewicz_count({}) vs catalan", n));
        r.eq(l.clone(), oracle_excursions(&(-1..=n as i64).collect::<Vec<_>>(), n), || format!("lukasiewicz_count({}) vs oracle", n));
        let bounded = WeightedStepSet::<Integer>::unit(&(-1..=n.max(1) as i64).collect::<Vec<_>>()).unwrap();
        r.eq(l, nonneg_walk_gf(&bounded, n).unwrap().coeff(n), || format!("lukasiewicz_count({}) vs bounded kernel", n));
    }
    r.timed(t)
}
