//! Formally orthogonal polynomials: three-term recurrences, moments as
//! weighted Motzkin path counts, and Hankel determinants.

use crate::algebra::{binom, Matrix, Poly, Ring, Series};
use crate::motzkin::{strip_count_transfer, MotzkinWeighting};
use crate::{pre, Error, Integer, Rational, Result};
use num_traits::{One, Zero};

/// Coefficients of `x p_n = p_{n+1} + b_n p_n + lambda_n p_{n-1}`; the
/// same data as a Motzkin path weighting.
pub type ThreeTermSpec<R> = MotzkinWeighting<R>;

/// Nonvanishing `lambda_n`, needed for a genuinely orthogonal sequence.
pub fn check_favard<R: Ring>(s: &ThreeTermSpec<R>) -> Result<()> {
    match s.lambda.iter().position(|l| l.is_zero()) {
        Some(i) => Err(Error::Precondition(format!("lambda_{} vanishes", i + 1))),
        None => Ok(()),
    }
}

/// Monic `p_n` from `p_0 = 1`, `p_1 = x - b_0` and the recurrence.
pub fn poly_from_recurrence<R: Ring>(s: &ThreeTermSpec<R>, n: usize) -> Result<Poly<R>> {
    s.require(n, n.saturating_sub(1))?;
    let x = Poly::<R>::x();
    let mut prev = Poly::<R>::zero();
    let mut cur = Poly::<R>::one();
    for m in 0..n {
        let next = (x.clone() - Poly::constant(s.b(m).clone())) * cur.clone() - if m >= 1 { prev.scale(s.lambda(m)) } else { Poly::zero() };
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Chebyshev polynomial of the second kind.
pub fn chebyshev_u(n: usize) -> Poly<Integer> {
    let n = n as i64;
    let mut c = vec![Integer::zero(); n as usize + 1];
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { Integer::one() } else { -Integer::one() };
        c[(n - 2 * k) as usize] = sign * binom(n - k, k) * (Integer::one() << (n - 2 * k) as usize);
    }
    Poly::new(c)
}

/// `mu_n`: weighted Motzkin paths from `(0,0)` to `(n,0)`.
pub fn moment<R: Ring>(s: &ThreeTermSpec<R>, n: usize) -> Result<R> {
    let k = n / 2;
    strip_count_transfer(0, 0, k, n, s)
}

pub fn moments<R: Ring>(s: &ThreeTermSpec<R>, count: usize) -> Result<Vec<R>> {
    (0..count).map(|n| moment(s, n)).collect()
}

/// `L(x^n p_k p_l)` for the functional with moments of `s`, by expanding
/// the product in monomials.
pub fn generalized_moment<R: Ring>(s: &ThreeTermSpec<R>, n: usize, k: usize, l: usize) -> Result<R> {
    let f = poly_from_recurrence(s, k)? * poly_from_recurrence(s, l)?;
    let f = f.shift(n);
    let mu = moments(s, f.coeffs().len())?;
    Ok(f.coeffs().iter().zip(&mu).fold(R::zero(), |acc, (c, m)| acc + c.clone() * m.clone()))
}

fn hankel<R: Ring>(mu: &[R], n: usize, shift: usize) -> Result<Matrix<R>> {
    pre(mu.len() > 2 * n + shift, || format!("need {} moments, have {}", 2 * n + shift + 1, mu.len()))?;
    Ok(Matrix::from_fn(n + 1, n + 1, |i, j| mu[i + j + shift].clone()))
}

/// `det(mu_{i+j})_{0<=i,j<=n}`, division free.
pub fn hankel_det<R: Ring>(mu: &[R], n: usize) -> Result<R> {
    Ok(hankel(mu, n, 0)?.det_expand())
}

/// `lambda_1^n lambda_2^(n-1) ... lambda_n`.
pub fn lambda_product<R: Ring>(s: &ThreeTermSpec<R>, n: usize) -> Result<R> {
    s.require(0, n)?;
    Ok((1..=n).fold(R::one(), |acc, i| acc * s.lambda(i).pow((n + 1 - i) as u32)))
}

/// `Delta_n` with the last row shifted by one index.
fn chi(mu: &[Rational], n: usize) -> Result<Rational> {
    pre(mu.len() > 2 * n + 1, || format!("need {} moments, have {}", 2 * n + 2, mu.len()))?;
    Ok(Matrix::from_fn(n + 1, n + 1, |i, j| if i < n { mu[i + j].clone() } else { mu[n + 1 + j].clone() }).det())
}

/// `b_0..b_{n_max}` and `lambda_1..lambda_{n_max}` from moments
/// `mu_0..mu_{2 n_max + 1}`.
pub fn recover_recurrence(mu: &[Rational], n_max: usize) -> Result<ThreeTermSpec<Rational>> {
    pre(!mu.is_empty() && mu[0].is_one(), || "moment sequence must start with 1".into())?;
    pre(mu.len() > 2 * n_max + 1, || format!("need {} moments, have {}", 2 * n_max + 2, mu.len()))?;
    let mut delta = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let d = hankel(mu, n, 0)?.det();
        if d.is_zero() {
            return Err(Error::Precondition(format!("Hankel determinant Delta_{} vanishes; no orthogonal sequence exists", n)));
        }
        delta.push(d);
    }
    let dm = |n: i64| if n < 0 { Rational::one() } else { delta[n as usize].clone() };
    let mut b = Vec::with_capacity(n_max + 1);
    let mut prev = Rational::zero();
    for n in 0..=n_max {
        let cur = chi(mu, n)? / dm(n as i64);
        b.push(cur.clone() - prev);
        prev = cur;
    }
    let lambda = (1..=n_max as i64).map(|n| dm(n) * dm(n - 2) / (dm(n - 1) * dm(n - 1))).collect();
    Ok(MotzkinWeighting::new(b, lambda))
}

/// Monic `p_n` as a determinant of moments with last row `1, x, .., x^n`.
pub fn poly_from_moments(mu: &[Rational], n: usize) -> Result<Poly<Rational>> {
    if n == 0 {
        return Ok(Poly::one());
    }
    let d = hankel(mu, n - 1, 0)?.det();
    if d.is_zero() {
        return Err(Error::Precondition(format!("Hankel determinant Delta_{} vanishes", n - 1)));
    }
    pre(mu.len() >= 2 * n, || format!("need {} moments, have {}", 2 * n, mu.len()))?;
    let m =
        Matrix::from_fn(n + 1, n + 1, |i, j| if i < n { Poly::constant(mu[i + j].clone()) } else { Poly::monomial(Rational::one(), j) });
    Ok(m.det_expand().scale(&(Rational::one() / d)))
}

/// `1/(1 - b_0 z - lambda_1 z^2/(1 - b_1 z - ...))` to order `order`.
pub fn moment_jfraction<R: Ring>(s: &ThreeTermSpec<R>, order: usize) -> Result<Series<R>> {
    let depth = order / 2;
    s.require(depth + 1, depth)?;
    let one = Series::one(order);
    let mut f = Series::zero(order);
    for h in (0..=depth).rev() {
        let mut den = one.clone() - Series::monomial(s.b(h).clone(), 1, order);
        if h < depth {
            den = den - Series::monomial(s.lambda(h + 1).clone(), 2, order) * f;
        }
        f = den.reciprocal()?;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::motzkin::motzkin_number;

    fn cheb() -> ThreeTermSpec<Integer> {
        MotzkinWeighting::constant(int(0), int(1), 12)
    }

    fn motz() -> ThreeTermSpec<Integer> {
        MotzkinWeighting::constant(int(1), int(1), 12)
    }

    #[test]
    fn recurrence() {
        assert_eq!(poly_from_recurrence(&cheb(), 2).unwrap(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(poly_from_recurrence(&cheb(), 3).unwrap(), Poly::from_ints(&[0, -2, 0, 1]));
        assert_eq!(poly_from_recurrence(&motz(), 2).unwrap(), Poly::from_ints(&[0, -2, 1]));
    }

    #[test]
    fn chebyshev() {
        assert_eq!(chebyshev_u(0), Poly::from_ints(&[1]));
        assert_eq!(chebyshev_u(1), Poly::from_ints(&[0, 2]));
        assert_eq!(chebyshev_u(2), Poly::from_ints(&[-1, 0, 4]));
        let half = Poly::new(vec![rat(0, 1), rat(1, 2)]);
        for n in 0..=8 {
            let u = chebyshev_u(n).map(|c| Rational::from_integer(c.clone())).compose(&half);
            let p = poly_from_recurrence(&cheb(), n).unwrap().map(|c| Rational::from_integer(c.clone()));
            assert_eq!(u, p);
        }
    }

    #[test]
    fn moments_are_path_counts() {
        assert_eq!(moment(&cheb(), 4).unwrap(), int(2));
        assert_eq!(moment(&cheb(), 5).unwrap(), int(0));
        for n in 0..=10 {
            assert_eq!(moment(&motz(), n).unwrap(), motzkin_number(n as u64));
        }
        assert_eq!(generalized_moment(&cheb(), 0, 2, 2).unwrap(), int(1));
        assert_eq!(generalized_moment(&cheb(), 0, 1, 2).unwrap(), int(0));
        assert_eq!(generalized_moment(&motz(), 2, 0, 0).unwrap(), int(2));
    }

    #[test]
    fn hankel_and_recovery() {
        let mu: Vec<Integer> = moments(&motz(), 14).unwrap();
        for n in 0..=6 {
            assert_eq!(hankel_det(&mu, n).unwrap(), int(1));
        }
        let muq: Vec<Rational> = mu.iter().map(|m| Rational::from_integer(m.clone())).collect();
        let s = recover_recurrence(&muq, 5).unwrap();
        assert_eq!(s, MotzkinWeighting::constant(rat(1, 1), rat(1, 1), 5));
        assert_eq!(poly_from_moments(&muq, 2).unwrap(), Poly::new(vec![rat(0, 1), rat(-2, 1), rat(1, 1)]));
        let ones = vec![rat(1, 1); 10];
        let e = recover_recurrence(&ones, 3).unwrap_err();
        assert!(e.to_string().contains("Delta_1"), "{}", e);
    }

    #[test]
    fn jfraction() {
        let f = moment_jfraction(&motz(), 10).unwrap();
        for n in 0..=10 {
            assert_eq!(f.coeff(n), motzkin_number(n as u64));
        }
        assert_eq!(moment_jfraction(&cheb(), 0).unwrap(), Series::one(0));
    }
}
