use super::Report;
use crate::algebra::{int, MPoly, Poly, Ring};
use crate::motzkin::*;
use crate::path::{oracle_count, oracle_gf, PathQuery, Restriction, Statistic, StepSet};
use crate::{Integer, Rational};
use num_traits::{One, Zero};
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn upper(a: i64, b: i64, c: i64, d: i64, steps: StepSet) -> PathQuery {
    PathQuery::new(vec![a, b], vec![c, d], steps).restrict(Restriction::halfspace(vec![0, 1], 0))
}

fn oc(q: &PathQuery) -> Integer {
    oracle_count(q).expect("oracle query must be finite")
}

/// Closed forms against the oracle (`0 <= a <= c <= max`, heights
/// `<= 4`), and the Motzkin and Schröder numbers four ways up to `n_max`.
pub fn motzkin_suite(max: i64, n_max: usize) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("Motzkin and Schröder counts, four ways");
    for a in 0..=max {
        for c in a..=max {
            for b in 0..=4 {
                for d in 0..=4 {
                    let m = motzkin_count(a, b, c, d).unwrap();
                    r.eq(m, oc(&upper(a, b, c, d, StepSet::motzkin())), || format!("motzkin_count({},{},{},{})", a, b, c, d));
                    let s = schroeder_count(a, b, c, d).unwrap();
                    r.eq(s, oc(&upper(a, b, c, d, StepSet::schroeder())), || format!("schroeder_count({},{},{},{})", a, b, c, d));
                }
            }
        }
    }
    let z = Poly::<Integer>::x();
    let z2 = z.clone() * z.clone();
    let mcf = cf_series(&MotzkinWeighting::constant(z.clone(), z2.clone(), n_max), None, n_max).unwrap();
    // b = lambda = z^2 gives the Schröder series in z^2
    let scf = cf_series(&MotzkinWeighting::constant(z2.clone(), z2.clone(), 2 * n_max), None, 2 * n_max).unwrap();
    let mgf = motzkin_gf(n_max);
    let sgf = schroeder_gf(n_max);
    for n in 0..=n_max {
        let want = motzkin_number(n as u64);
        let o = oc(&upper(0, 0, n as i64, 0, StepSet::motzkin()));
        r.eq(mgf.coeff(n), want.clone(), || format!("motzkin_gf[{}]", n));
        r.eq(mcf.coeff(n), want.clone(), || format!("Motzkin continued fraction [{}]", n));
        r.eq(o, want, || format!("Motzkin oracle [{}]", n));
        let want = schroeder_number(n as u64);
        let o = oc(&upper(0, 0, 2 * n as i64, 0, StepSet::schroeder()));
        r.eq(sgf.coeff(n), want.clone(), || format!("schroeder_gf[{}]", n));
        r.eq(scf.coeff(2 * n), want.clone(), || format!("Schröder continued fraction [{}]", n));
        r.eq(o, want.clone(), || format!("Schröder oracle [{}]", n));
        if n >= 1 {
            r.eq(little_schroeder(n as u64) * 2, want, || format!("little Schröder [{}]", n));
        }
    }
    let known = [1, 1, 2, 4, 9, 21, 51];
    for (n, &m) in known.iter().enumerate() {
        r.eq(motzkin_number(n as u64), int(m), || format!("M_{}", n));
    }
    for (n, &s) in [1, 2, 6, 22, 90].iter().enumerate() {
        r.eq(schroeder_number(n as u64), int(s), || format!("S_{}", n));
    }
    // weights above depth N do not matter
    let mut w = MotzkinWeighting::constant(z.clone(), z2.clone(), n_max + 3);
    for h in n_max + 1..=n_max + 3 {
        w.b[h] = z.scale(&int(7));
        w.lambda[h - 1] = z2.scale(&int(5));
    }
    r.eq(cf_series(&w, Some(n_max + 3), n_max).unwrap(), mcf.clone(), || "continued fraction truncation".into());
    // peaks: nu = q z^2, lambda = z^2
    let q = Poly::<Integer>::x();
    let zq = Poly::<Poly<Integer>>::x();
    let zq2 = zq.clone() * zq.clone();
    let nu = vec![zq2.scale(&q); n_max];
    let la = vec![zq2.clone(); n_max];
    let f = rv_peak_cf(&nu, &la, n_max).unwrap();
    for m in 0..=n_max / 2 {
        let qq = upper(0, 0, 2 * m as i64, 0, StepSet::dyck());
        let g = oracle_gf(&qq, &Statistic::Peaks).unwrap();
        r.eq(f.coeff(2 * m), g, || format!("peak continued fraction [{}]", 2 * m));
    }
    let same = rv_peak_cf(&la, &la, n_max).unwrap();
    let dyck = cf_series(&MotzkinWeighting::from_fn(n_max, |_| Poly::zero(), |_| zq2.clone()), None, n_max).unwrap();
    r.eq(same, dyck, || "nu = lambda reduces to the Dyck fraction".into());
    r.timed(t0)
}

/// The strip theorem with independent indeterminates as weights, against
/// the transfer matrix, for all `r, s <= k <= k_max` to order `order`.
pub fn strip_symbolic_suite(k_max: usize, order: usize) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("strip generating function vs transfer matrix (symbolic weights)");
    for k in 0..=k_max {
        let w = MotzkinWeighting::symbolic(k);
        for a in 0..=k {
            for b in 0..=k {
                let g = strip_gf(a, b, k, &w, order).unwrap();
                for n in 0..=order {
                    let t = strip_count_transfer(a, b, k, n, &w).unwrap();
                    r.eq(g.coeff(n), t, || format!("strip r={} s={} k={} n={}", a, b, k, n));
                }
                if a > b {
                    let prod = (b + 1..=a).fold(MPoly::one(), |acc, h| acc * w.lambda(h).clone());
                    let t = strip_gf(b, a, k, &w, order).unwrap();
                    r.eq(g.clone(), t.map(|c| c.clone() * prod.clone()), || format!("transposed strip r={} s={} k={}", a, b, k));
                }
            }
        }
    }
    // a strip at least as high as the order is no restriction; symbolic
    // at order 6, random integer weights at the full order
    let tall = |r: &mut Report, w: &MotzkinWeighting<MPoly>, n: usize| {
        let x = Poly::<MPoly>::x();
        let cw = MotzkinWeighting::from_fn(n, |h| x.scale(w.b(h)), |h| (x.clone() * x.clone()).scale(w.lambda(h)));
        r.eq(strip_gf(0, 0, n, w, n).unwrap(), cf_series(&cw, None, n).unwrap(), || {
            format!("tall strip vs continued fraction, order {}", n)
        });
    };
    tall(&mut r, &MotzkinWeighting::symbolic(6), 6);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let w = super::random_weighting(&mut rng, order, -3, 3).map(|c| MPoly::constant(c.clone()));
        tall(&mut r, &w, order);
    }
    r.timed(t0)
}

/// The cosine form of strip counts against the transfer matrix, plus
/// random strip instances and the gambler's ruin against play enumeration.
pub fn strip_numeric_suite(k_max: i64, n_max: u32, seed: u64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("strip counts: cosine form, random instances, gambler's ruin");
    let one = MotzkinWeighting::constant(Integer::one(), Integer::one(), k_max as usize);
    for k in 0..=k_max {
        for a in 0..=k {
            for b in 0..=k {
                for n in 0..=n_max {
                    let t = strip_count_transfer(a as usize, b as usize, k as usize, n as usize, &one).unwrap();
                    match strip_count_trig_value(a, b, k, n) {
                        Ok((v, raw)) => {
                            r.residual((raw - raw.round()).abs());
                            r.eq(v, t, || format!("strip cosine r={} s={} k={} n={}", a, b, k, n));
                        }
                        Err(e) => r.check(false, || format!("strip cosine r={} s={} k={} n={}: {}", a, b, k, n, e)),
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let k = rng.gen_range(0..=4usize);
        let (a, b) = (rng.gen_range(0..=k), rng.gen_range(0..=k));
        let n = rng.gen_range(0..=8usize);
        let w = super::random_weighting(&mut rng, k, -3, 3);
        let g = strip_gf(a, b, k, &w, n).unwrap();
        r.eq(g.coeff(n), strip_count_transfer(a, b, k, n, &w).unwrap(), || {
            format!("random strip r={} s={} k={} n={} w={:?}", a, b, k, n, w)
        });
    }
    for k in 0..=2 {
        for n in 0..=4usize {
            let q = PathQuery::new(vec![0, 0], vec![n as i64, 0], StepSet::motzkin())
                .restrict(Restriction::All(vec![Restriction::halfspace(vec![0, 1], 0), Restriction::halfspace(vec![0, -1], -k)]));
            r.eq(strip_count_transfer(0, 0, k as usize, n, &one).unwrap(), oc(&q), || format!("strip oracle k={} n={}", k, n));
        }
    }
    let probs = [
        (Rational::new(1.into(), 2.into()), Rational::new(1.into(), 3.into())),
        (Rational::new(1.into(), 4.into()), Rational::new(3.into(), 4.into())),
    ];
    for (pa, pb) in &probs {
        for total in 2..=5 {
            for a in 1..total {
                let mut sum = Rational::zero();
                for rounds in 1..=8 {
                    let got = gambler_ruin(a, total, rounds, pa, pb).unwrap();
                    r.eq(got.clone(), play_enumeration(a, total, rounds, pa, pb), || {
                        format!("gambler_ruin(a={}, R={}, N={}, pA={}, pB={})", a, total, rounds, pa, pb)
                    });
                    sum += got;
                }
                r.check(sum <= Rational::one(), || format!("bankruptcy probabilities exceed 1 (a={}, R={})", a, total));
            }
        }
    }
    // the example play TATBTTAABBBB with a = 2, R = 6
    let (pa, pb) = &probs[0];
    let pt = Rational::one() - pa - pb;
    let (mut cap, mut prob, mut hist) = (2i64, Rational::one(), vec![]);
    for ch in "TATBTTAABBBB".chars() {
        let (step, p) = match ch {
            'A' => (1, pa.clone()),
            'B' => (-1, pb.clone()),
            _ => (0, pt.clone()),
        };
        cap += step;
        prob *= p;
        hist.push(cap);
    }
    let (last, before) = hist.split_last().unwrap();
    r.check(*last == 0 && before.iter().all(|&c| 0 < c && c < 6), || "example play must end in ruin at round 12".into());
    r.eq(prob, Ring::pow(&pt, 4) * Ring::pow(pa, 3) * Ring::pow(pb, 5), || "example play probability".into());
    r.timed(t0)
}

/// Probability of A's ruin exactly at round `rounds`, by propagating the
/// distribution of A's capital round by round.
fn play_enumeration(a: i64, total: i64, rounds: usize, pa: &Rational, pb: &Rational) -> Rational {
    let pt = Rational::one() - pa - pb;
    let mut dist: Vec<Rational> = vec![Rational::zero(); total as usize + 1];
    dist[a as usize] = Rational::one();
    let mut ruin = Rational::zero();
    for round in 1..=rounds {
        let mut nd = vec![Rational::zero(); total as usize + 1];
        for x in 1..total as usize {
            if dist[x].is_zero() {
                continue;
            }
            nd[x + 1] += &dist[x] * pa;
            nd[x - 1] += &dist[x] * pb;
            nd[x] += &dist[x] * &pt;
        }
        if round == rounds {
            ruin = nd[0].clone();
        }
        nd[0] = Rational::zero();
        nd[total as usize] = Rational::zero();
        dist = nd;
    }
    ruin
}
