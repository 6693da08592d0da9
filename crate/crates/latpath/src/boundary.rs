//! Determinant formulas for paths between two monotone boundaries, and
//! for paths avoiding a set of points.

use crate::algebra::{binom, multinomial, Matrix};
use crate::path::{oracle_count, PathQuery, Point, Restriction, StepSet};
use crate::plane::count_simple;
use crate::{pre, Error, Integer, Result};
use num_traits::Zero;

/// Upper bounds `a` and lower bounds `b` for the heights of the horizontal
/// steps of a path from `(0, b_1)` to `(n, a_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderBounds {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl LadderBounds {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        let l = LadderBounds { a, b };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        let (a, b) = (&self.a, &self.b);
        pre(!a.is_empty() && a.len() == b.len(), || "bounds must be nonempty and of equal length".into())?;
        pre(a.windows(2).all(|w| w[0] <= w[1]), || format!("upper bounds {:?} must be nondecreasing", a))?;
        pre(b.windows(2).all(|w| w[0] <= w[1]), || format!("lower bounds {:?} must be nondecreasing", b))?;
        pre(a.iter().zip(b).all(|(x, y)| x >= y), || format!("need a_i >= b_i, got a={:?} b={:?}", a, b))
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn start(&self) -> Point {
        vec![0, self.b[0]]
    }

    pub fn end(&self) -> Point {
        vec![self.n() as i64, *self.a.last().unwrap()]
    }

    /// The same condition as a pointwise restriction on lattice points: at
    /// abscissa `x` the height lies between `b_x` and `a_{x+1}` (clamped at
    /// both ends).
    pub fn restriction(&self) -> Restriction {
        let n = self.n();
        let lo = (0..=n).map(|x| self.b[x.max(1) - 1]).collect();
        let hi = (0..=n).map(|x| self.a[x.min(n - 1)]).collect();
        Restriction::Ladder { x0: 0, lo, hi }
    }
}

/// Number of paths with each horizontal step height between its bounds.
pub fn ladder_count(l: &LadderBounds) -> Result<Integer> {
    l.validate()?;
    let n = l.n();
    let m = Matrix::from_fn(n, n, |i, j| binom(l.a[i] - l.b[j] + 1, j as i64 - i as i64 + 1));
    Ok(m.det())
}

/// Simple paths from `a` to `e` avoiding every point in `c`.
pub fn avoid_points_count(a: (i64, i64), e: (i64, i64), c: &[(i64, i64)]) -> Result<Integer> {
    for i in 0..c.len() {
        for j in 0..i {
            pre(c[i] != c[j], || format!("forbidden points must be distinct, {:?} repeats", c[i]))?;
        }
    }
    let starts: Vec<(i64, i64)> = std::iter::once(a).chain(c.iter().copied()).collect();
    let ends: Vec<(i64, i64)> = std::iter::once(e).chain(c.iter().copied()).collect();
    let n = starts.len();
    let m = Matrix::from_fn(n, n, |i, j| count_simple(starts[j].0, starts[j].1, ends[i].0, ends[i].1));
    Ok(m.det())
}

/// Monotone functions `a >= b` on the box `[0, n]`, values listed in
/// lexicographic order of the box points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxBoundary {
    pub n: Vec<i64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl BoxBoundary {
    pub fn new(n: Vec<i64>, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        let bb = BoxBoundary { n, a, b };
        bb.validate()?;
        Ok(bb)
    }

    pub fn from_fns(n: Vec<i64>, a: impl Fn(&[i64]) -> i64, b: impl Fn(&[i64]) -> i64) -> Result<Self> {
        let pts = box_points(&n);
        let av = pts.iter().map(|p| a(p)).collect();
        let bv = pts.iter().map(|p| b(p)).collect();
        BoxBoundary::new(n, av, bv)
    }

    pub fn points(&self) -> Vec<Vec<i64>> {
        box_points(&self.n)
    }

    fn index(&self, p: &[i64]) -> Option<usize> {
        let mut idx = 0usize;
        for (x, n) in p.iter().zip(&self.n) {
            if *x < 0 || x > n {
                return None;
            }
            idx = idx * (*n as usize + 1) + *x as usize;
        }
        Some(idx)
    }

    pub fn validate(&self) -> Result<()> {
        pre(!self.n.is_empty() && self.n.iter().all(|&x| x >= 0), || format!("box sizes {:?} must be nonnegative", self.n))?;
        let pts = self.points();
        pre(self.a.len() == pts.len() && self.b.len() == pts.len(), || {
            format!("need {} values for a and b, got {} and {}", pts.len(), self.a.len(), self.b.len())
        })?;
        for (i, p) in pts.iter().enumerate() {
            pre(self.a[i] >= self.b[i], || format!("a >= b fails at {:?}", p))?;
            for k in 0..p.len() {
                let mut q = p.clone();
                q[k] += 1;
                if let Some(j) = self.index(&q) {
                    pre(self.a[i] <= self.a[j] && self.b[i] <= self.b[j], || format!("a and b must increase from {:?} to {:?}", p, q))?;
                }
            }
        }
        Ok(())
    }

    pub fn start(&self) -> Point {
        let mut p = vec![0; self.n.len()];
        p.push(self.b[0]);
        p
    }

    pub fn end(&self) -> Point {
        let mut p = self.n.clone();
        p.push(*self.a.last().unwrap());
        p
    }

    /// Region `b(i) <= y <= a(i)` for box points `i`, as a restriction on
    /// points of dimension `d + 1`.
    pub fn restriction(&self) -> Restriction {
        let bb = self.clone();
        Restriction::region(move |p| {
            let (i, y) = p.split_at(p.len() - 1);
            match bb.index(i) {
                Some(k) => bb.b[k] <= y[0] && y[0] <= bb.a[k],
                None => false,
            }
        })
    }
}

/// Box points in lexicographic order.
pub fn box_points(n: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &m in n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=m).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Readings of a binomial coefficient with scalar top and vector bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VecBinom {
    /// `N! / (k_1! ... k_d! (N - sum k)!)`.
    Multinomial,
    /// `binom(N, k_1) ... binom(N, k_d)`.
    Product,
}

impl VecBinom {
    pub fn eval(self, top: i64, k: &[i64]) -> Integer {
        if top < 0 {
            return Integer::zero();
        }
        match self {
            VecBinom::Multinomial => {
                let mut parts = k.to_vec();
                parts.push(top - k.iter().sum::<i64>());
                multinomial(&parts)
            }
            VecBinom::Product => k.iter().map(|&x| binom(top, x)).product(),
        }
    }
}

/// Paths in `Z^(d+1)` from `(0, b(0))` to `(n, a(n))` staying in the region
/// between the two boundaries.
pub fn box_boundary_count(bb: &BoxBoundary) -> Result<Integer> {
    box_boundary_count_with(bb, VecBinom::Multinomial)
}

/// The same determinant under a chosen reading of the vector binomial.
pub fn box_boundary_count_with(bb: &BoxBoundary, vb: VecBinom) -> Result<Integer> {
    bb.validate()?;
    let pts = bb.points();
    let p = pts.len() - 1;
    let m = Matrix::from_fn(p, p, |i, j| {
        let k: Vec<i64> = pts[j + 1].iter().zip(&pts[i]).map(|(x, y)| x - y).collect();
        vb.eval(bb.a[i] - bb.b[j + 1] + 1, &k)
    });
    let sum: i64 = bb.n.iter().sum();
    let det = m.det();
    Ok(if (sum + p as i64) % 2 == 0 { det } else { -det })
}

/// Candidate readings that agree with brute-force enumeration on `cases`.
/// Errors when none does.
pub fn calibrate_vec_binom(cases: &[BoxBoundary]) -> Result<Vec<VecBinom>> {
    let mut want = Vec::with_capacity(cases.len());
    for bb in cases {
        let q = PathQuery::new(bb.start(), bb.end(), StepSet::simple(bb.n.len() + 1)).restrict(bb.restriction());
        want.push(oracle_count(&q)?);
    }
    let mut ok = Vec::new();
    for vb in [VecBinom::Multinomial, VecBinom::Product] {
        let mut agree = true;
        for (bb, w) in cases.iter().zip(&want) {
            if box_boundary_count_with(bb, vb)? != *w {
                agree = false;
                break;
            }
        }
        if agree {
            ok.push(vb);
        }
    }
    if ok.is_empty() {
        return Err(Error::Numeric("no reading of the vector binomial matches enumeration".into()));
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn ladders() {
        assert_eq!(ladder_count(&LadderBounds::new(vec![1, 1], vec![0, 0]).unwrap()).unwrap(), int(3));
        assert_eq!(ladder_count(&LadderBounds::new(vec![4], vec![0]).unwrap()).unwrap(), int(5));
        assert!(LadderBounds::new(vec![2, 1], vec![0, 0]).is_err());
    }

    #[test]
    fn avoiding() {
        assert_eq!(avoid_points_count((0, 0), (2, 2), &[(1, 1)]).unwrap(), int(2));
        assert_eq!(avoid_points_count((0, 0), (2, 2), &[]).unwrap(), int(6));
        assert_eq!(avoid_points_count((0, 0), (2, 2), &[(5, 5)]).unwrap(), int(6));
    }

    #[test]
    fn small_box() {
        let bb = BoxBoundary::from_fns(vec![1, 1], |_| 1, |_| 0).unwrap();
        assert_eq!(box_boundary_count(&bb).unwrap(), int(6));
        let flat = BoxBoundary::from_fns(vec![2, 1], |_| 3, |_| 3).unwrap();
        // a constant a = b pins the height; the box part stays free
        assert_eq!(box_boundary_count(&flat).unwrap(), int(3));
    }

    #[test]
    fn calibration_picks_multinomial() {
        let cases =
            vec![BoxBoundary::from_fns(vec![1, 1], |_| 1, |_| 0).unwrap(), BoxBoundary::from_fns(vec![2, 1], |p| p[0], |_| 0).unwrap()];
        assert_eq!(calibrate_vec_binom(&cases).unwrap(), vec![VecBinom::Multinomial]);
    }

    #[test]
    fn one_dimensional_box_is_a_ladder() {
        let l = LadderBounds::new(vec![1, 2, 4], vec![0, 0, 2]).unwrap();
        // a(x) = a_{x+1}, b(x) = b_x, clamped at the ends
        let bb = BoxBoundary::new(vec![3], vec![1, 2, 4, 4], vec![0, 0, 0, 2]).unwrap();
        assert_eq!(box_boundary_count(&bb).unwrap(), ladder_count(&l).unwrap());
    }
}
