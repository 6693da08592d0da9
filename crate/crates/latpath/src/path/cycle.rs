use crate::{Error, Rational, Result};
use num_traits::Zero;

/// Start index of the unique rotation of `a` whose prefix sums are all
/// nonnegative. Needs total sum 0 and no vanishing proper cyclic block sum.
pub fn spitzer_shift(a: &[Rational]) -> Result<usize> {
    let n = a.len();
    if n == 0 {
        return Err(Error::Precondition("empty sequence".into()));
    }
    let total: Rational = a.iter().sum();
    if !total.is_zero() {
        return Err(Error::Precondition(format!("sum is {}, not 0", total)));
    }
    for j in 0..n {
        let mut s = Rational::zero();
        for len in 1..n {
            s += &a[(j + len - 1) % n];
            if s.is_zero() {
                return Err(Error::Precondition(format!("cyclic block of length {} starting at index {} sums to 0", len, j)));
            }
        }
    }
    // The rotation starts right after the position where the prefix
    // sum attains its minimum.
    let mut s = Rational::zero();
    let mut min = Rational::zero();
    let mut arg = 0;
    for (i, x) in a.iter().enumerate() {
        s += x;
        if s < min {
            min = s.clone();
            arg = i + 1;
        }
    }
    Ok(arg % n)
}

/// 0-based rotation indices `i` such that every nonempty prefix of the
/// rotated word contains more 1s than `mu` times the number of 2s.
pub fn cycle_lemma_valid_shifts(word: &[u8], mu: i64) -> Result<Vec<usize>> {
    if word.iter().any(|&x| x != 1 && x != 2) {
        return Err(Error::Precondition("word must be over {1,2}".into()));
    }
    let n = word.len();
    Ok((0..n)
        .filter(|&i| {
            let mut bal = 0i64;
            (0..n).all(|j| {
                bal += if word[(i + j) % n] == 1 { 1 } else { -mu };
                bal > 0
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn spitzer_examples() {
        assert_eq!(spitzer_shift(&r(&[1, -2, 1])).unwrap(), 2);
        assert_eq!(spitzer_shift(&r(&[1, -1])).unwrap(), 0);
        assert_eq!(spitzer_shift(&r(&[2, -1, -1])).unwrap(), 0);
        assert!(spitzer_shift(&r(&[1, -1, 1, -1])).is_err());
        assert!(spitzer_shift(&r(&[1, 1])).is_err());
    }

    #[test]
    fn cycle_lemma_examples() {
        let w: Vec<u8> = "121111122111".bytes().map(|b| b - b'0').collect();
        assert_eq!(cycle_lemma_valid_shifts(&w, 2).unwrap().len(), 3);
        assert_eq!(cycle_lemma_valid_shifts(&[1; 5], 0).unwrap().len(), 5);
        assert!(cycle_lemma_valid_shifts(&[1, 1, 2, 2], 1).unwrap().is_empty());
    }
}
