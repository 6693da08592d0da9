use latpath::algebra::{binom, int, qbinom, Matrix, Poly, Series};
use latpath::chambers::{hook_formula, typeA_det};
use latpath::kernel::{nonneg_walk_dp, nonneg_walk_gf, walk_gf_by_height, WeightedStepSet};
use latpath::lgv::{hook_content, lgv_det, ssyt_count, Dag, DagPathSystem, Shape};
use latpath::motzkin::{strip_count_transfer, MotzkinWeighting};
use latpath::orthopoly::{moments, recover_recurrence};
use latpath::path::{oracle_count, PathQuery, Restriction, TurnArray};
use latpath::plane::{ballot, below_diagonal, between_diagonals, catalan, count_simple};
use latpath::qcount::{q_catalan_cr, q_catalan_maj};
use latpath::turns::{reflect_turn_array, unreflect_turn_array};
use latpath::{Integer, Rational};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_reciprocal_is_inverse(c in prop::collection::vec(-5i64..=5, 1..8)) {
        let mut c = c;
        c[0] = 1;
        let s = Series::new(c.iter().map(|&x| int(x)).collect(), 7);
        let prod = s.clone() * s.reciprocal().unwrap();
        prop_assert_eq!(prod, Series::one(7));
    }

    #[test]
    fn pfaffian_squares_to_determinant(n in 1usize..=3, seed in prop::collection::vec(-3i64..=3, 36)) {
        let m = Matrix::from_fn(2 * n, 2 * n, |i, j| int(seed[i * 6 + j])).skew_from_upper();
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(pf.clone() * pf, m.det());
    }

    #[test]
    fn qbinom_specializes_and_is_symmetric(n in 0i64..10, k in 0i64..10) {
        let g = qbinom(n, k);
        prop_assert_eq!(g.eval(&int(1)), binom(n, k));
        prop_assert_eq!(g, qbinom(n, n - k));
    }

    #[test]
    fn below_diagonal_matches_oracle(c in 0i64..7, d in 0i64..7, a in 0i64..4, b in 0i64..4) {
        prop_assume!(a >= b && c >= d);
        let q = PathQuery::simple(a, b, c, d).restrict(Restriction::below_diagonal());
        prop_assert_eq!(below_diagonal(a, b, c, d).unwrap(), oracle_count(&q).unwrap());
    }

    #[test]
    fn ballot_and_catalan_agree(n in 0i64..12) {
        prop_assert_eq!(ballot(n, n).unwrap(), catalan(n));
    }

    #[test]
    fn wide_band_is_unrestricted(a in 0i64..4, c in 0i64..6, d in 0i64..6) {
        // a band wider than any path can reach imposes nothing
        prop_assume!(c >= a && d >= a);
        prop_assert_eq!(between_diagonals(a, a, c, d, -20, 20).unwrap(), count_simple(a, a, c, d));
    }

    #[test]
    fn lgv_swapping_starts_flips_sign(c in prop::collection::vec(0i64..=4, 8)) {
        let g: Dag<Integer> = Dag::grid(0, 0, 4, 4);
        let starts = g.vertices(&[vec![c[0], c[1]], vec![c[2], c[3]]]).unwrap();
        let ends = g.vertices(&[vec![c[4], c[5]], vec![c[6], c[7]]]).unwrap();
        let sys = DagPathSystem::new(g.clone(), starts.clone(), ends.clone());
        let swapped = DagPathSystem::new(g, vec![starts[1], starts[0]], ends);
        prop_assert_eq!(lgv_det(&sys).unwrap(), -lgv_det(&swapped).unwrap());
    }

    #[test]
    fn hook_content_counts_tableaux(l1 in 0i64..4, l2 in 0i64..4, a in 2i64..5) {
        let lambda = vec![l1.max(l2), l1.min(l2)];
        let sh = Shape::straight(lambda.clone(), a).unwrap();
        prop_assert_eq!(ssyt_count(&sh).unwrap(), hook_content(&lambda, a).unwrap());
    }

    #[test]
    fn hook_formula_is_determinant_from_origin(l1 in 0i64..5, l2 in 0i64..5, l3 in 0i64..5) {
        let mut lambda = vec![l1, l2, l3];
        lambda.sort_unstable_by(|x, y| y.cmp(x));
        prop_assert_eq!(typeA_det(&[0, 0, 0], &lambda).unwrap(), hook_formula(&lambda).unwrap());
    }

    #[test]
    fn moments_recover_recurrence(b in prop::collection::vec(1i64..=3, 5), l in prop::collection::vec(1i64..=3, 4)) {
        let w = MotzkinWeighting::new(b.iter().map(|&x| Rational::from_integer(int(x))).collect(), l.iter().map(|&x| Rational::from_integer(int(x))).collect());
        let mu = moments(&w, 10).unwrap();
        let back = recover_recurrence(&mu, 4).unwrap();
        prop_assert_eq!(back.b, w.b.clone());
        prop_assert_eq!(back.lambda, w.lambda.clone());
    }

    #[test]
    fn strip_counts_grow_with_height(r in 0usize..3, n in 0usize..10) {
        let w = |k| MotzkinWeighting::constant(int(1), int(1), k);
        let lo = strip_count_transfer(r, r, 3, n, &w(3)).unwrap();
        let hi = strip_count_transfer(r, r, 4, n, &w(4)).unwrap();
        prop_assert!(lo <= hi);
    }

    #[test]
    fn turn_reflection_round_trips(p in prop::collection::btree_set(0i64..8, 0..4), q in prop::collection::btree_set(0i64..8, 0..4)) {
        let n = p.len().min(q.len());
        let t = TurnArray::new(p.into_iter().take(n).collect(), q.into_iter().take(n).collect());
        if let Ok(r) = reflect_turn_array(&t) {
            prop_assert_eq!(unreflect_turn_array(&r).unwrap(), t);
        }
    }

    #[test]
    fn kernel_total_weight_is_conserved(jumps in prop::collection::btree_set(-2i64..=2, 1..5), n in 0usize..7) {
        let jumps: Vec<i64> = jumps.into_iter().collect();
        let s = WeightedStepSet::<Integer>::unit(&jumps).unwrap();
        let total: Integer = (-2 * n as i64..=2 * n as i64).map(|k| walk_gf_by_height(&s, k, n).coeff(n)).sum();
        prop_assert_eq!(total, num_traits::pow(int(jumps.len() as i64), n));
    }

    #[test]
    fn kernel_excursions_match_dp(jumps in prop::collection::btree_set(-2i64..=2, 2..6), w in prop::collection::vec(1i64..=3, 5)) {
        let jumps: Vec<i64> = jumps.into_iter().collect();
        prop_assume!(jumps.iter().any(|&b| b < 0) && jumps.iter().any(|&b| b > 0));
        let s = WeightedStepSet::new(jumps.iter().map(|&b| (b, int(w[(b + 2) as usize])))).unwrap();
        prop_assert_eq!(nonneg_walk_gf(&s, 10).unwrap(), nonneg_walk_dp(&s, 0, 10));
    }

    #[test]
    fn q_catalans_specialize(n in 0usize..9) {
        prop_assert_eq!(q_catalan_cr(n).eval(&int(1)), catalan(n as i64));
        prop_assert_eq!(q_catalan_maj(n).unwrap().eval(&int(1)), catalan(n as i64));
        prop_assert_eq!(q_catalan_cr(n).degree().unwrap_or(0), n * n.saturating_sub(1) / 2);
    }
}

#[test]
fn q_catalan_maj_is_palindromic() {
    for n in 0..=12 {
        let c: Poly<Integer> = q_catalan_maj(n).unwrap();
        let v: Vec<Integer> = c.coeffs().to_vec();
        let mut r = v.clone();
        r.reverse();
        assert_eq!(v, r, "c_{}(q)", n);
    }
}
