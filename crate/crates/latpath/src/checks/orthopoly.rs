use super::Report;
use crate::algebra::{int, MPoly, Poly};
use crate::motzkin::{strip_count_transfer, MotzkinWeighting};
use crate::orthopoly::*;
use crate::{Integer, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn to_rat(v: &[Integer]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Random integer recurrences with entries in `1..=3`: moments, recovery,
/// orthogonality and the moment determinant; symbolic Hankel and J-fraction
/// identities.
pub fn orthopoly_suite(specs: usize, levels: usize, seed: u64) -> Report {
    let t0 = Instant::now();
    let mut r = Report::new("orthogonal polynomial round trip and identities");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..specs {
        let s = super::random_weighting(&mut rng, levels + 2, 1, 3);
        let mu = moments(&s, 2 * levels + 2).unwrap();
        let back = recover_recurrence(&to_rat(&mu), levels).unwrap();
        let want = MotzkinWeighting::new(to_rat(&s.b[..=levels]), to_rat(&s.lambda[..levels]));
        r.eq(back, want, || format!("round trip {:?}", s));
        for k in 0..=5usize.min(levels) {
            for l in 0..=5usize.min(levels) {
                let got = generalized_moment(&s, 0, k, l).unwrap();
                let want = if k == l { (1..=l).fold(int(1), |acc, i| acc * s.lambda(i)) } else { int(0) };
                r.eq(got, want, || format!("L(p_{} p_{}) for {:?}", k, l, s));
            }
        }
        for n in 0..=3 {
            for (k, l) in [(0, 1), (1, 1), (2, 1), (1, 3)] {
                let lp = (1..=l).fold(int(1), |acc, i| acc * s.lambda(i));
                let want = lp * strip_count_transfer(k, l, k.max(l) + n, n, &s).unwrap();
                r.eq(generalized_moment(&s, n, k, l).unwrap(), want, || format!("L(x^{} p_{} p_{}) for {:?}", n, k, l, s));
            }
        }
        let muq = to_rat(&mu);
        for n in 0..=levels {
            let p = poly_from_recurrence(&s, n).unwrap().map(|c| Rational::from_integer(c.clone()));
            r.eq(poly_from_moments(&muq, n).unwrap(), p, || format!("moment determinant p_{} for {:?}", n, s));
            r.eq(hankel_det(&mu, n).unwrap(), lambda_product(&s, n).unwrap(), || format!("Hankel Delta_{} for {:?}", n, s));
        }
    }
    let sym = MotzkinWeighting::symbolic(6);
    let mu: Vec<MPoly> = moments(&sym, 11).unwrap();
    for n in 0..=5 {
        r.eq(hankel_det(&mu, n).unwrap(), lambda_product(&sym, n).unwrap(), || format!("symbolic Hankel Delta_{}", n));
    }
    let sym = MotzkinWeighting::symbolic(6);
    let f = moment_jfraction(&sym, 12).unwrap();
    for n in 0..=12 {
        r.eq(f.coeff(n).truncate_degree(12), moment(&sym, n).unwrap(), || format!("symbolic J-fraction [{}]", n));
    }
    let x2 = Poly::<Integer>::monomial(int(2), 1);
    for n in 1..=10 {
        let lhs = x2.clone() * chebyshev_u(n);
        r.eq(lhs, chebyshev_u(n + 1) + chebyshev_u(n - 1), || format!("Chebyshev recurrence n={}", n));
    }
    let ones = vec![Rational::from_integer(int(1)); 8];
    r.check(recover_recurrence(&ones, 2).is_err(), || "constant moments must be rejected".into());
    r.timed(t0)
}
