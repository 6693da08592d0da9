//! Lattice paths: points, step sets, restrictions and the brute-force oracle.

mod cycle;
mod oracle;
mod turn;

pub use cycle::{cycle_lemma_valid_shifts, spitzer_shift};
pub use oracle::{for_each_path, oracle_count, oracle_gf, oracle_path_sum, oracle_sum, Statistic};
pub use turn::{en_turns, ne_turns, turns_to_path, TurnArray, TurnKind};

use std::fmt;
use std::sync::Arc;

pub type Point = Vec<i64>;

/// Finite set of step vectors, all of one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSet {
    steps: Vec<Vec<i64>>,
}

impl StepSet {
    pub fn new(steps: Vec<Vec<i64>>) -> Self {
        assert!(!steps.is_empty(), "empty step set");
        let d = steps[0].len();
        assert!(d > 0 && steps.iter().all(|s| s.len() == d), "steps of mixed dimension");
        StepSet { steps }
    }

    /// Positive unit steps `e_1, ..., e_d`.
    pub fn simple(d: usize) -> Self {
        StepSet::new((0..d).map(|i| unit(d, i, 1)).collect())
    }

    /// `±e_i`.
    pub fn pm_unit(d: usize) -> Self {
        let mut s = Vec::new();
        for i in 0..d {
            s.push(unit(d, i, 1));
            s.push(unit(d, i, -1));
        }
        StepSet::new(s)
    }

    /// All `2^d` vectors with entries `±1`.
    pub fn diagonal_pm(d: usize) -> Self {
        let s = (0..1u32 << d).map(|m| (0..d).map(|i| if m >> i & 1 == 1 { 1 } else { -1 }).collect()).collect();
        StepSet::new(s)
    }

    /// East, north and diagonal north-east.
    pub fn delannoy() -> Self {
        StepSet::new(vec![vec![1, 0], vec![0, 1], vec![1, 1]])
    }

    pub fn dyck() -> Self {
        StepSet::new(vec![vec![1, 1], vec![1, -1]])
    }

    pub fn motzkin() -> Self {
        StepSet::new(vec![vec![1, 1], vec![1, 0], vec![1, -1]])
    }

    /// Up, down and the double level step `(2,0)`.
    pub fn schroeder() -> Self {
        StepSet::new(vec![vec![1, 1], vec![2, 0], vec![1, -1]])
    }

    /// Steps `(1, h)` for each height jump `h`.
    pub fn directed(jumps: &[i64]) -> Self {
        StepSet::new(jumps.iter().map(|&h| vec![1, h]).collect())
    }

    /// Łukasiewicz steps `(1,-1), (1,0), ..., (1,max_jump)`.
    pub fn lukasiewicz(max_jump: i64) -> Self {
        StepSet::directed(&(-1..=max_jump).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.steps[0].len()
    }

    pub fn steps(&self) -> &[Vec<i64>] {
        &self.steps
    }

    pub fn is_simple(&self) -> bool {
        let d = self.dim();
        self.steps.len() == d && (0..d).all(|i| self.steps.contains(&unit(d, i, 1)))
    }

    /// A vector with positive inner product against every step, if one of
    /// the coordinate vectors, the all-ones vector or `hint` qualifies.
    pub(crate) fn progress_vector(&self, hint: &[i64]) -> Option<Vec<i64>> {
        let d = self.dim();
        let mut cands: Vec<Vec<i64>> = (0..d).map(|i| unit(d, i, 1)).collect();
        cands.push(vec![1; d]);
        cands.push(hint.to_vec());
        cands.into_iter().find(|v| self.steps.iter().all(|s| dot(v, s) > 0))
    }
}

fn unit(d: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = sign;
    v
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub type RegionFn = Arc<dyn Fn(&[i64]) -> bool + Send + Sync>;

/// Pointwise admissibility condition, checked at every vertex of a path
/// including both endpoints.
#[derive(Clone)]
pub enum Restriction {
    None,
    /// `r·x >= c`, or `r·x > c` when `strict`.
    Halfspace {
        r: Vec<i64>,
        c: i64,
        strict: bool,
    },
    /// 2D: at abscissa `x`, the height must lie in `lo[x-x0]..=hi[x-x0]`;
    /// abscissae outside the listed columns are not admissible.
    Ladder {
        x0: i64,
        lo: Vec<i64>,
        hi: Vec<i64>,
    },
    Forbidden(Vec<Point>),
    Region(RegionFn),
    All(Vec<Restriction>),
}

impl Restriction {
    pub fn halfspace(r: Vec<i64>, c: i64) -> Self {
        Restriction::Halfspace { r, c, strict: false }
    }

    pub fn strict_halfspace(r: Vec<i64>, c: i64) -> Self {
        Restriction::Halfspace { r, c, strict: true }
    }

    /// 2D band `x + s <= y <= x + t`.
    pub fn diagonal_band(s: i64, t: i64) -> Self {
        Restriction::All(vec![Restriction::halfspace(vec![-1, 1], s), Restriction::halfspace(vec![1, -1], -t)])
    }

    /// 2D `x >= y`.
    pub fn below_diagonal() -> Self {
        Restriction::halfspace(vec![1, -1], 0)
    }

    pub fn region(f: impl Fn(&[i64]) -> bool + Send + Sync + 'static) -> Self {
        Restriction::Region(Arc::new(f))
    }

    pub fn admits(&self, p: &[i64]) -> bool {
        match self {
            Restriction::None => true,
            Restriction::Halfspace { r, c, strict } => {
                let v = dot(r, p);
                if *strict {
                    v > *c
                } else {
                    v >= *c
                }
            }
            Restriction::Ladder { x0, lo, hi } => {
                let i = p[0] - x0;
                i >= 0 && (i as usize) < lo.len() && lo[i as usize] <= p[1] && p[1] <= hi[i as usize]
            }
            Restriction::Forbidden(pts) => !pts.iter().any(|q| q.as_slice() == p),
            Restriction::Region(f) => f(p),
            Restriction::All(rs) => rs.iter().all(|r| r.admits(p)),
        }
    }
}

impl fmt::Debug for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Restriction::None => write!(f, "None"),
            Restriction::Halfspace { r, c, strict } => {
                write!(f, "{:?}·x {} {}", r, if *strict { ">" } else { ">=" }, c)
            }
            Restriction::Ladder { x0, lo, hi } => write!(f, "Ladder(x0={}, lo={:?}, hi={:?})", x0, lo, hi),
            Restriction::Forbidden(p) => write!(f, "Forbidden{:?}", p),
            Restriction::Region(_) => write!(f, "Region(<fn>)"),
            Restriction::All(rs) => f.debug_list().entries(rs).finish(),
        }
    }
}

/// A counting problem: paths from `from` to `to` with steps from `steps`,
/// every vertex admissible, optionally of a fixed number of steps.
#[derive(Clone, Debug)]
pub struct PathQuery {
    pub from: Point,
    pub to: Point,
    pub steps: StepSet,
    pub restriction: Restriction,
    pub length: Option<usize>,
}

impl PathQuery {
    pub fn new(from: Point, to: Point, steps: StepSet) -> Self {
        assert_eq!(from.len(), steps.dim(), "start point dimension");
        assert_eq!(to.len(), steps.dim(), "end point dimension");
        PathQuery { from, to, steps, restriction: Restriction::None, length: None }
    }

    /// Simple steps in the plane.
    pub fn simple(a: i64, b: i64, c: i64, d: i64) -> Self {
        PathQuery::new(vec![a, b], vec![c, d], StepSet::simple(2))
    }

    pub fn restrict(mut self, r: Restriction) -> Self {
        self.restriction = match self.restriction {
            Restriction::None => r,
            old => Restriction::All(vec![old, r]),
        };
        self
    }

    pub fn length(mut self, n: usize) -> Self {
        self.length = Some(n);
        self
    }
}

/// A path: start point and its sequence of steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: Point,
    pub steps: Vec<Vec<i64>>,
}

impl Path {
    pub fn new(start: Point, steps: Vec<Vec<i64>>) -> Self {
        Path { start, steps }
    }

    /// Planar simple path from a word over `E`/`N`.
    pub fn from_word(start: (i64, i64), word: &str) -> Self {
        let steps = word
            .chars()
            .map(|ch| match ch {
                'E' | 'e' => vec![1, 0],
                'N' | 'n' => vec![0, 1],
                _ => panic!("bad step letter {:?}", ch),
            })
            .collect();
        Path::new(vec![start.0, start.1], steps)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All vertices `P_0, ..., P_l`.
    pub fn points(&self) -> Vec<Point> {
        let mut p = self.start.clone();
        let mut out = vec![p.clone()];
        for s in &self.steps {
            for (x, d) in p.iter_mut().zip(s) {
                *x += d;
            }
            out.push(p.clone());
        }
        out
    }

    pub fn end(&self) -> Point {
        self.points().pop().unwrap()
    }

    /// Word over `E`/`N` for planar simple paths.
    pub fn word(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s.as_slice() {
                [1, 0] => 'E',
                [0, 1] => 'N',
                _ => '?',
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restriction_checks() {
        let r = Restriction::diagonal_band(-1, 1);
        assert!(r.admits(&[0, 0]) && r.admits(&[1, 0]) && r.admits(&[0, 1]));
        assert!(!r.admits(&[2, 0]));
        let l = Restriction::Ladder { x0: 0, lo: vec![0, 1], hi: vec![1, 2] };
        assert!(l.admits(&[1, 2]) && !l.admits(&[1, 0]) && !l.admits(&[2, 1]));
    }

    #[test]
    fn progress_vectors() {
        assert!(StepSet::simple(3).progress_vector(&[0, 0, 0]).is_some());
        assert!(StepSet::motzkin().progress_vector(&[0, 0]).is_some());
        assert!(StepSet::pm_unit(2).progress_vector(&[1, 1]).is_none());
    }

    #[test]
    fn path_points() {
        let p = Path::from_word((1, -1), "NEN");
        assert_eq!(p.end(), vec![2, 1]);
        assert_eq!(p.word(), "NEN");
    }
}
