use super::Report;
use crate::algebra::{int, Poly};
use crate::path::{oracle_gf, Path, PathQuery, Restriction, Statistic, StepSet};
use crate::plane::catalan;
use crate::qcount::*;
use crate::QPoly;
use std::sync::Arc;
use std::time::Instant;

fn dyck_query(n: usize) -> PathQuery {
    PathQuery::new(vec![0, 0], vec![2 * n as i64, 0], StepSet::dyck()).restrict(Restriction::halfspace(vec![0, 1], 0))
}

/// Sum of the positions of the peaks.
fn peak_positions(p: &Path) -> i64 {
    p.steps.windows(2).enumerate().filter(|(_, w)| w[0][1] > 0 && w[1][1] < 0).map(|(i, _)| i as i64 + 1).sum()
}

/// q-Catalan numbers and Rogers-Ramanujan truncations: area statistic for
/// `n <= area_n`, major index for `n <= maj_n`, both identities to order
/// `rr`, the Ramanujan fraction to order `ram`.
pub fn q_suite(area_n: usize, maj_n: usize, rr: usize, ram: usize) -> Report {
    let t = Instant::now();
    let mut r = Report::new("q-counting");
    let table = q_catalan_cr_table(area_n.max(10));
    let cf = q_catalan_cr_cf(10, 10).unwrap();
    for (n, c) in table.iter().enumerate() {
        r.eq(c.eval(&int(1)), catalan(n as i64), || format!("C_{}(1)", n));
        r.eq(c.degree().unwrap_or(0), n * n.saturating_sub(1) / 2, || format!("deg C_{}", n));
        if n <= 10 {
            r.eq(cf.coeff(n), c.clone(), || format!("continued fraction coefficient {}", n));
        }
        if n <= area_n {
            r.eq(oracle_gf(&dyck_query(n), &Statistic::DyckArea).unwrap(), c.clone(), || format!("C_{}(q) vs area oracle", n));
        }
    }
    r.eq(q_catalan_cr_cf(10, 10).unwrap(), q_catalan_cr_cf(16, 10).unwrap(), || "depth 16 vs 10".into());
    for n in 0..=maj_n.max(12) {
        match q_catalan_maj(n) {
            Ok(c) => {
                r.eq(c.eval(&int(1)), catalan(n as i64), || format!("c_{}(1)", n));
                if n <= maj_n {
                    let q = dyck_query(n);
                    r.eq(oracle_gf(&q, &Statistic::Maj).unwrap(), c.clone(), || format!("c_{}(q) vs descent oracle", n));
                    let peaks = oracle_gf(&q, &Statistic::Custom(Arc::new(peak_positions))).unwrap();
                    let shifted: QPoly = if n == 0 { c } else { c.shift(n) };
                    r.eq(peaks, shifted, || format!("peak-position maj is q^{} c_{}(q)", n, n));
                }
            }
            Err(e) => r.check(false, || format!("c_{}(q): {}", n, e)),
        }
    }
    let (a, b) = rr_truncation_check(rr).unwrap();
    r.check(a, || format!("first Rogers-Ramanujan identity to order {}", rr));
    r.check(b, || format!("second Rogers-Ramanujan identity to order {}", rr));
    r.check(rr_truncation_check(1).unwrap() == (true, true), || "Rogers-Ramanujan at order 1".into());
    r.check(ramanujan_cf_check(ram).unwrap(), || format!("Ramanujan continued fraction to order {}", ram));
    r.check(ramanujan_cf_check(1).unwrap(), || "Ramanujan continued fraction at order 1".into());
    r.eq(Poly::from_ints(&[1, 2, 1, 1]), q_catalan_cr(3), || "C_3(q)".into());
    r.timed(t)
}
