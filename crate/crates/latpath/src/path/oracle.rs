//! Ground-truth enumeration. Everything here is exhaustive or a plain
//! dynamic program over lattice points; no formula is used.

use super::{dot, Path, PathQuery, Point};
use crate::algebra::{Poly, Ring};
use crate::{Error, Integer, Result};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy)]
enum Mode {
    /// Exactly this many steps; prune by step-size reach.
    Fixed { max_l1: i64 },
    /// `v·x` strictly increases along every step and may not exceed `limit`.
    Progressive { limit: i64 },
}

struct Nav<'a> {
    q: &'a PathQuery,
    mode: Mode,
    v: Vec<i64>,
    reach: HashMap<(Point, usize), bool>,
}

impl<'a> Nav<'a> {
    fn new(q: &'a PathQuery) -> Result<Self> {
        let hint: Vec<i64> = q.to.iter().zip(&q.from).map(|(a, b)| a - b).collect();
        let v = q.steps.progress_vector(&hint).unwrap_or_default();
        let mode = match q.length {
            Some(_) => Mode::Fixed { max_l1: q.steps.steps().iter().map(|s| s.iter().map(|x| x.abs()).sum()).max().unwrap() },
            None if !v.is_empty() => Mode::Progressive { limit: dot(&v, &q.to) },
            None => return Err(Error::Unbounded("step set admits cycles; give a path length".into())),
        };
        Ok(Nav { q, mode, v, reach: HashMap::new() })
    }

    fn start_rem(&self) -> usize {
        self.q.length.unwrap_or(0)
    }

    /// Can the state still possibly lead anywhere? Cheap geometric prune.
    fn alive(&self, p: &[i64], rem: usize) -> bool {
        if !self.q.restriction.admits(p) {
            return false;
        }
        match self.mode {
            Mode::Fixed { max_l1 } => {
                let d: i64 = p.iter().zip(&self.q.to).map(|(a, b)| (a - b).abs()).sum();
                d <= rem as i64 * max_l1
            }
            Mode::Progressive { limit } => dot(&self.v, p) <= limit,
        }
    }

    fn done(&self, p: &[i64], rem: usize) -> bool {
        p == self.q.to.as_slice()
            && match self.mode {
                Mode::Fixed { .. } => rem == 0,
                Mode::Progressive { .. } => true,
            }
    }

    fn can_step(&self, rem: usize) -> bool {
        match self.mode {
            Mode::Fixed { .. } => rem > 0,
            Mode::Progressive { .. } => true,
        }
    }

    fn next_rem(&self, rem: usize) -> usize {
        match self.mode {
            Mode::Fixed { .. } => rem - 1,
            Mode::Progressive { .. } => 0,
        }
    }

    fn reachable(&mut self, p: &Point, rem: usize) -> bool {
        if !self.alive(p, rem) {
            return false;
        }
        if let Some(&b) = self.reach.get(&(p.clone(), rem)) {
            return b;
        }
        let mut ok = self.done(p, rem);
        if !ok && self.can_step(rem) {
            let nr = self.next_rem(rem);
            for s in self.q.steps.steps().to_vec() {
                let np = add(p, &s);
                if self.reachable(&np, nr) {
                    ok = true;
                    break;
                }
            }
        }
        self.reach.insert((p.clone(), rem), ok);
        ok
    }

    fn sum<R: Ring>(&self, p: &Point, rem: usize, w: &dyn Fn(&[i64], &[i64]) -> R, memo: &mut HashMap<(Point, usize), R>) -> R {
        if !self.alive(p, rem) {
            return R::zero();
        }
        if let Some(v) = memo.get(&(p.clone(), rem)) {
            return v.clone();
        }
        let mut acc = if self.done(p, rem) { R::one() } else { R::zero() };
        if self.can_step(rem) {
            let nr = self.next_rem(rem);
            for s in self.q.steps.steps() {
                let sub = self.sum(&add(p, s), nr, w, memo);
                if !sub.is_zero() {
                    acc = acc + w(p, s) * sub;
                }
            }
        }
        memo.insert((p.clone(), rem), acc.clone());
        acc
    }
}

fn add(p: &[i64], s: &[i64]) -> Point {
    p.iter().zip(s).map(|(a, b)| a + b).collect()
}

/// Number of admissible paths.
pub fn oracle_count(q: &PathQuery) -> Result<Integer> {
    oracle_sum(q, |_, _| Integer::one())
}

/// Sum over admissible paths of the product of step weights; the weight of
/// a step depends on the point it leaves and the step vector.
pub fn oracle_sum<R: Ring>(q: &PathQuery, w: impl Fn(&[i64], &[i64]) -> R) -> Result<R> {
    let nav = Nav::new(q)?;
    let mut memo = HashMap::new();
    Ok(nav.sum(&q.from, nav.start_rem(), &w, &mut memo))
}

/// Visit every admissible path.
pub fn for_each_path(q: &PathQuery, mut f: impl FnMut(&Path)) -> Result<()> {
    let mut nav = Nav::new(q)?;
    let rem = nav.start_rem();
    if !nav.reachable(&q.from, rem) {
        return Ok(());
    }
    let mut steps = Vec::new();
    dfs(&mut nav, q.from.clone(), rem, &mut steps, &mut f);
    Ok(())
}

fn dfs(nav: &mut Nav, p: Point, rem: usize, steps: &mut Vec<Vec<i64>>, f: &mut dyn FnMut(&Path)) {
    if nav.done(&p, rem) {
        f(&Path::new(nav.q.from.clone(), steps.clone()));
    }
    if !nav.can_step(rem) {
        return;
    }
    let nr = nav.next_rem(rem);
    for s in nav.q.steps.steps().to_vec() {
        let np = add(&p, &s);
        if nav.reachable(&np, nr) {
            steps.push(s);
            dfs(nav, np, nr, steps, f);
            steps.pop();
        }
    }
}

/// Sum of an arbitrary path functional over all admissible paths.
pub fn oracle_path_sum<R: Ring>(q: &PathQuery, f: impl Fn(&Path) -> R) -> Result<R> {
    let mut acc = R::zero();
    for_each_path(q, |p| acc = acc.clone() + f(p))?;
    Ok(acc)
}

/// Integer path statistics.
#[derive(Clone)]
pub enum Statistic {
    /// Sum of the heights of the horizontal steps.
    Area,
    /// Number of north steps immediately followed by an east step.
    NeTurns,
    /// Number of east steps immediately followed by a north step.
    EnTurns,
    /// Number of maximal runs of equal steps.
    Runs,
    /// For paths with `(1,±1)` steps from height 0: half the area between
    /// the path and the zig-zag path of the same length.
    DyckArea,
    /// Major index of the up/down word with up = 0, down = 1.
    Maj,
    /// Number of up steps immediately followed by a down step.
    Peaks,
    Custom(Arc<dyn Fn(&Path) -> i64 + Send + Sync>),
}

impl fmt::Debug for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Statistic::Area => "Area",
            Statistic::NeTurns => "NeTurns",
            Statistic::EnTurns => "EnTurns",
            Statistic::Runs => "Runs",
            Statistic::DyckArea => "DyckArea",
            Statistic::Maj => "Maj",
            Statistic::Peaks => "Peaks",
            Statistic::Custom(_) => "Custom",
        };
        write!(f, "{}", s)
    }
}

const E: [i64; 2] = [1, 0];
const N: [i64; 2] = [0, 1];

fn pairs(p: &Path, a: &[i64], b: &[i64]) -> i64 {
    p.steps.windows(2).filter(|w| w[0] == a && w[1] == b).count() as i64
}

impl Statistic {
    pub fn eval(&self, p: &Path) -> i64 {
        match self {
            Statistic::Area => {
                let pts = p.points();
                p.steps.iter().zip(&pts).filter(|(s, _)| s.as_slice() == E).map(|(_, q)| q[1]).sum()
            }
            Statistic::NeTurns => pairs(p, &N, &E),
            Statistic::EnTurns => pairs(p, &E, &N),
            Statistic::Runs => (0..p.steps.len()).filter(|&i| i == 0 || p.steps[i] != p.steps[i - 1]).count() as i64,
            Statistic::DyckArea => {
                let ys: Vec<i64> = p.points().iter().map(|q| q[1]).collect();
                let twice: i64 = ys.windows(2).map(|w| w[0] + w[1]).sum();
                let n = p.steps.len() as i64 / 2;
                (twice - 2 * n) / 4
            }
            Statistic::Maj => {
                let w: Vec<bool> = p.steps.iter().map(|s| s[1] < 0).collect();
                (0..w.len().saturating_sub(1)).filter(|&i| w[i] && !w[i + 1]).map(|i| i as i64 + 1).sum()
            }
            Statistic::Peaks => p.steps.windows(2).filter(|w| w[0][1] > 0 && w[1][1] < 0).count() as i64,
            Statistic::Custom(f) => f(p),
        }
    }
}

/// Generating polynomial `sum_P q^stat(P)` over admissible paths.
pub fn oracle_gf(q: &PathQuery, stat: &Statistic) -> Result<Poly<Integer>> {
    let mut coeffs: Vec<Integer> = Vec::new();
    let mut negative = None;
    for_each_path(q, |p| {
        let k = stat.eval(p);
        if k < 0 {
            negative = Some(k);
            return;
        }
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Integer::zero());
        }
        coeffs[k] += 1;
    })?;
    if let Some(k) = negative {
        return Err(Error::Precondition(format!("statistic {:?} took negative value {}", stat, k)));
    }
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::path::{Restriction, StepSet};

    #[test]
    fn unrestricted_simple() {
        assert_eq!(oracle_count(&PathQuery::simple(0, 0, 2, 1)).unwrap(), int(3));
    }

    #[test]
    fn catalan_three() {
        let q = PathQuery::simple(0, 0, 3, 3).restrict(Restriction::below_diagonal());
        assert_eq!(oracle_count(&q).unwrap(), int(5));
    }

    #[test]
    fn loops_avoiding_origin() {
        let q = PathQuery::new(vec![1, 0], vec![1, 0], StepSet::pm_unit(2)).length(2).restrict(Restriction::Forbidden(vec![vec![0, 0]]));
        assert_eq!(oracle_count(&q).unwrap(), int(3));
    }

    #[test]
    fn cycles_need_length() {
        let q = PathQuery::new(vec![0, 0], vec![0, 0], StepSet::pm_unit(2));
        assert!(matches!(oracle_count(&q), Err(Error::Unbounded(_))));
    }

    #[test]
    fn area_and_turn_polynomials() {
        assert_eq!(oracle_gf(&PathQuery::simple(0, 0, 2, 1), &Statistic::Area).unwrap(), Poly::from_ints(&[1, 1, 1]));
        assert_eq!(oracle_gf(&PathQuery::simple(0, 0, 2, 2), &Statistic::NeTurns).unwrap(), Poly::from_ints(&[1, 4, 1]));
        assert!(oracle_gf(&PathQuery::simple(0, 0, -1, 0), &Statistic::Area).unwrap().is_zero());
    }

    #[test]
    fn dyck_statistics() {
        let q = PathQuery::new(vec![0, 0], vec![4, 0], StepSet::dyck()).restrict(Restriction::halfspace(vec![0, 1], 0));
        assert_eq!(oracle_gf(&q, &Statistic::DyckArea).unwrap(), Poly::from_ints(&[1, 1]));
        assert_eq!(oracle_gf(&q, &Statistic::Maj).unwrap(), Poly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn runs_of_paper_path() {
        // NE-turns (1,1),(2,3),(5,4) from (1,-1) to (6,6)
        let p = Path::from_word((1, -1), "NNENNEEENENN");
        assert_eq!(Statistic::Runs.eval(&p), 7);
        assert_eq!(Statistic::NeTurns.eval(&p), 3);
    }
}
