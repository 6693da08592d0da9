//! Non-intersecting path families on acyclic graphs: the
//! Lindström-Gessel-Viennot determinant, Okada-Stembridge Pfaffians, the
//! minor summation formula and semistandard tableaux.

use crate::algebra::{binom, qbinom, Matrix, Poly, Ring};
use crate::path::Point;
use crate::{pre, Error, Integer, Result};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Directed acyclic graph with weighted edges, vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Dag<R> {
    out: Vec<Vec<(usize, R)>>,
    labels: Vec<Point>,
    index: HashMap<Point, usize>,
}

impl<R: Ring> Dag<R> {
    /// Fails if the edges contain a directed cycle.
    pub fn new(n: usize, edges: Vec<(usize, usize, R)>) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        for (u, v, w) in edges {
            pre(u < n && v < n, || format!("edge ({}, {}) outside 0..{}", u, v, n))?;
            out[u].push((v, w));
        }
        let labels: Vec<Point> = (0..n).map(|i| vec![i as i64]).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let g = Dag { out, labels, index };
        g.check_acyclic()?;
        Ok(g)
    }

    /// Grid `x0..=x1` by `y0..=y1` with east and north edges weighted by
    /// `w(from, to)`; vertices are labelled by their coordinates.
    pub fn grid_weighted(x0: i64, y0: i64, x1: i64, y1: i64, w: impl Fn(&[i64], &[i64]) -> R) -> Self {
        let mut labels = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                labels.push(vec![x, y]);
            }
        }
        let index: HashMap<Point, usize> = labels.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut out = vec![Vec::new(); labels.len()];
        for (i, p) in labels.iter().enumerate() {
            for q in [vec![p[0] + 1, p[1]], vec![p[0], p[1] + 1]] {
                if let Some(&j) = index.get(&q) {
                    out[i].push((j, w(p, &q)));
                }
            }
        }
        Dag { out, labels, index }
    }

    pub fn grid(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        Dag::grid_weighted(x0, y0, x1, y1, |_, _| R::one())
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    pub fn vertex(&self, p: &[i64]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn label(&self, v: usize) -> &Point {
        &self.labels[v]
    }

    /// Vertex ids of labelled points; fails on unknown points.
    pub fn vertices(&self, pts: &[Point]) -> Result<Vec<usize>> {
        pts.iter().map(|p| self.vertex(p).ok_or_else(|| Error::Precondition(format!("{:?} is not a vertex", p)))).collect()
    }

    fn check_acyclic(&self) -> Result<()> {
        // 0 unvisited, 1 on stack, 2 done
        let mut state = vec![0u8; self.len()];
        for s in 0..self.len() {
            if state[s] != 0 {
                continue;
            }
            let mut stack = vec![(s, 0usize)];
            state[s] = 1;
            while let Some((v, i)) = stack.pop() {
                if i < self.out[v].len() {
                    stack.push((v, i + 1));
                    let u = self.out[v][i].0;
                    match state[u] {
                        1 => return Err(Error::Precondition(format!("graph has a cycle through vertex {}", u))),
                        0 => {
                            state[u] = 1;
                            stack.push((u, 0));
                        }
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                }
            }
        }
        Ok(())
    }

    /// Vertices that can reach `e`.
    fn reaching(&self, e: usize) -> Vec<bool> {
        let mut r = vec![false; self.len()];
        r[e] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..self.len() {
                if !r[v] && self.out[v].iter().any(|(u, _)| r[*u]) {
                    r[v] = true;
                    changed = true;
                }
            }
        }
        r
    }

    /// Generating function of all paths from `a` to `e`.
    pub fn path_gf(&self, a: usize, e: usize) -> R {
        let mut memo: Vec<Option<R>> = vec![None; self.len()];
        self.gf_from(a, e, &mut memo)
    }

    fn gf_from(&self, v: usize, e: usize, memo: &mut Vec<Option<R>>) -> R {
        if v == e {
            return R::one();
        }
        if let Some(x) = &memo[v] {
            return x.clone();
        }
        let mut acc = R::zero();
        for (u, w) in &self.out[v] {
            let g = self.gf_from(*u, e, memo);
            if !g.is_zero() {
                acc = acc + w.clone() * g;
            }
        }
        memo[v] = Some(acc.clone());
        acc
    }

    /// All paths from `a` to `e` as vertex lists with their weights.
    pub fn paths(&self, a: usize, e: usize) -> Vec<(Vec<usize>, R)> {
        let reach = self.reaching(e);
        let mut out = Vec::new();
        if reach[a] {
            let mut cur = vec![a];
            self.walk(e, &reach, &mut cur, R::one(), &mut out);
        }
        out
    }

    fn walk(&self, e: usize, reach: &[bool], cur: &mut Vec<usize>, w: R, out: &mut Vec<(Vec<usize>, R)>) {
        let v = *cur.last().unwrap();
        if v == e {
            out.push((cur.clone(), w));
            return;
        }
        for (u, x) in &self.out[v] {
            if reach[*u] {
                cur.push(*u);
                self.walk(e, reach, cur, w.clone() * x.clone(), out);
                cur.pop();
            }
        }
    }
}

/// Starting vertices, an ordered list of end vertices and, for the mixed
/// case, fixed end vertices matched to the first starts.
#[derive(Clone, Debug)]
pub struct DagPathSystem<R> {
    pub dag: Dag<R>,
    pub starts: Vec<usize>,
    pub ends: Vec<usize>,
    pub fixed: Vec<usize>,
}

impl<R: Ring> DagPathSystem<R> {
    pub fn new(dag: Dag<R>, starts: Vec<usize>, ends: Vec<usize>) -> Self {
        DagPathSystem { dag, starts, ends, fixed: Vec::new() }
    }

    pub fn with_ends(mut self, ends: Vec<usize>) -> Self {
        self.ends = ends;
        self
    }

    pub fn with_fixed(mut self, fixed: Vec<usize>) -> Self {
        self.fixed = fixed;
        self
    }

    fn check_vertices(&self) -> Result<()> {
        let n = self.dag.len();
        let all = self.starts.iter().chain(&self.ends).chain(&self.fixed);
        for &v in all {
            pre(v < n, || format!("vertex {} outside the graph", v))?;
        }
        Ok(())
    }
}

/// `det(GF(A_j -> E_i))` with `E` the list of ends.
pub fn lgv_det<R: Ring>(sys: &DagPathSystem<R>) -> Result<R> {
    sys.check_vertices()?;
    let n = sys.starts.len();
    pre(sys.ends.len() == n, || format!("{} starts but {} ends", n, sys.ends.len()))?;
    let m = Matrix::from_fn(n, n, |i, j| sys.dag.path_gf(sys.starts[j], sys.ends[i]));
    Ok(m.det_expand())
}

/// Weighted count of vertex-disjoint families with path `i` from
/// `starts[i]` to `ends[i]`, by backtracking.
pub fn nonintersecting_gf<R: Ring>(dag: &Dag<R>, starts: &[usize], ends: &[usize]) -> R {
    let lists: Vec<Vec<(Vec<usize>, R)>> = starts.iter().zip(ends).map(|(&a, &e)| dag.paths(a, e)).collect();
    let mut used = vec![false; dag.len()];
    families(&lists, 0, &mut used)
}

fn families<R: Ring>(lists: &[Vec<(Vec<usize>, R)>], i: usize, used: &mut Vec<bool>) -> R {
    if i == lists.len() {
        return R::one();
    }
    let mut acc = R::zero();
    for (p, w) in &lists[i] {
        if p.iter().any(|&v| used[v]) {
            continue;
        }
        for &v in p {
            used[v] = true;
        }
        let rest = families(lists, i + 1, used);
        if !rest.is_zero() {
            acc = acc + w.clone() * rest;
        }
        for &v in p {
            used[v] = false;
        }
    }
    acc
}

/// Permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            let mut inv = 0;
            for i in 0..cur.len() {
                for j in i + 1..cur.len() {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), inv % 2 == 0));
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            rec(cur, rest, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Increasing `k`-element index subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `sum_sigma sgn(sigma) GF(A_sigma -> E | non-intersecting)` where the
/// first `fixed.len()` paths end at the fixed vertices and the rest at
/// increasing positions of `ends`. Exhaustive.
pub fn signed_family_sum<R: Ring>(sys: &DagPathSystem<R>) -> Result<R> {
    sys.check_vertices()?;
    let n = sys.starts.len();
    let m = sys.fixed.len();
    pre(m <= n, || format!("{} fixed ends for {} paths", m, n))?;
    let mut acc = R::zero();
    for k in subsets(sys.ends.len(), n - m) {
        let mut e = sys.fixed.clone();
        e.extend(k.iter().map(|&i| sys.ends[i]));
        for (sigma, even) in signed_permutations(n) {
            let a: Vec<usize> = sigma.iter().map(|&i| sys.starts[i]).collect();
            let g = nonintersecting_gf(&sys.dag, &a, &e);
            acc = if even { acc + g } else { acc - g };
        }
    }
    Ok(acc)
}

/// Reading of the pair counts `Q_G(i,j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// Only pairs with `A_i` at the earlier end; the Pfaffian then counts
    /// identity-matched families when starts and ends are compatible.
    Identity,
    /// Crossed pairs subtracted; antisymmetric in `i, j`, and the Pfaffian
    /// equals the signed family sum on any graph.
    Signed,
}

/// `Q_G(i,j)`: pairs of non-intersecting paths from `A_i` to `E_k` and
/// from `A_j` to `E_l` with `k < l`, by exhaustive enumeration.
pub fn q_pair<R: Ring>(sys: &DagPathSystem<R>, i: usize, j: usize, mode: PairMode) -> R {
    let (a, b) = (sys.starts[i], sys.starts[j]);
    let mut acc = R::zero();
    for k in 0..sys.ends.len() {
        for l in k + 1..sys.ends.len() {
            let (ek, el) = (sys.ends[k], sys.ends[l]);
            acc = acc + nonintersecting_gf(&sys.dag, &[a, b], &[ek, el]);
            if mode == PairMode::Signed {
                acc = acc - nonintersecting_gf(&sys.dag, &[a, b], &[el, ek]);
            }
        }
    }
    acc
}

fn q_matrix<R: Ring>(sys: &DagPathSystem<R>, mode: PairMode) -> Matrix<R> {
    let n = sys.starts.len();
    let mut q = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = q_pair(sys, i, j, mode);
            q.set(j, i, -v.clone());
            q.set(i, j, v);
        }
    }
    q
}

/// Paths from `A_i` to any vertex of `ends`.
fn to_any_end<R: Ring>(sys: &DagPathSystem<R>, i: usize) -> R {
    sys.ends.iter().fold(R::zero(), |acc, &e| acc + sys.dag.path_gf(sys.starts[i], e))
}

/// `Pf(Q_G(i,j))`, with a phantom vertex appended when the number of
/// starts is odd.
pub fn pf_free_endpoints<R: Ring>(sys: &DagPathSystem<R>, mode: PairMode) -> Result<R> {
    sys.check_vertices()?;
    let n = sys.starts.len();
    let q = q_matrix(sys, mode);
    if n.is_multiple_of(2) {
        return q.pfaffian();
    }
    let mut big = Matrix::zeros(n + 1, n + 1);
    for i in 0..n {
        for j in 0..n {
            big.set(i, j, q.get(i, j).clone());
        }
        let v = to_any_end(sys, i);
        big.set(n, i, -v.clone());
        big.set(i, n, v);
    }
    big.pfaffian()
}

/// `(-1)^binom(m,2) Pf(Q H; -H^t 0)` with `m` fixed ends.
pub fn pf_mixed<R: Ring>(sys: &DagPathSystem<R>, mode: PairMode) -> Result<R> {
    sys.check_vertices()?;
    let n = sys.starts.len();
    let m = sys.fixed.len();
    pre(m <= n && (m + n).is_multiple_of(2), || format!("need m <= n and m + n even, got m={} n={}", m, n))?;
    let q = q_matrix(sys, mode);
    let h = Matrix::from_fn(n, m, |i, j| sys.dag.path_gf(sys.starts[i], sys.fixed[j]));
    let neg_ht = h.transpose().map(|x| -x.clone());
    let pf = Matrix::block(&q, &h, &neg_ht, &Matrix::zeros(m, m)).pfaffian()?;
    Ok(if (m * m.saturating_sub(1) / 2).is_multiple_of(2) { pf } else { -pf })
}

/// Parity cases of the both-ends-free Pfaffian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BothFreeCase {
    /// `n` even, size `n`, families of even size only.
    A,
    /// `n` odd, size `n + 1`.
    B,
    /// `n` even, size `n + 2`.
    C,
}

fn sign_entry<R: Ring>(i: usize, j: usize) -> Poly<R> {
    // 1-based (-1)^(i+j-1) with 0-based indices
    let s = if (i + j + 1).is_multiple_of(2) { R::one() } else { -R::one() };
    Poly::constant(s)
}

/// The Pfaffian as a polynomial in `t`. In case A the coefficient of
/// `t^s` counts families of `2s` paths; in cases B and C the coefficient
/// of `t^s` counts families of `s` paths.
/// Assumes starts and ends are compatible: every non-intersecting family
/// between subsequences matches them in order.
pub fn pf_both_free<R: Ring>(sys: &DagPathSystem<R>, case: BothFreeCase) -> Result<Poly<R>> {
    sys.check_vertices()?;
    let n = sys.starts.len();
    let want_even = case != BothFreeCase::B;
    pre(n.is_multiple_of(2) == want_even, || format!("case {:?} does not apply to {} starts", case, n))?;
    let q = q_matrix(sys, PairMode::Identity);
    let size = match case {
        BothFreeCase::A => n,
        BothFreeCase::B => n + 1,
        BothFreeCase::C => n + 2,
    };
    let tq = |v: &R, k: usize| Poly::monomial(v.clone(), k);
    let mut m: Matrix<Poly<R>> = Matrix::zeros(size, size);
    for i in 0..size {
        for j in i + 1..size {
            let mut e = sign_entry::<R>(i, j);
            if j < n {
                let k = if case == BothFreeCase::A { 1 } else { 2 };
                e = e + tq(q.get(i, j), k);
            } else if j == n && i < n {
                e = e + tq(&to_any_end(sys, i), 1);
            }
            m.set(j, i, -e.clone());
            m.set(i, j, e);
        }
    }
    m.pfaffian()
}

/// Families from subsequences `A'` of the starts to subsequences `E'` of
/// the ends, identity matching, by size; exhaustive.
pub fn subfamily_counts<R: Ring>(sys: &DagPathSystem<R>) -> Vec<R> {
    let n = sys.starts.len();
    (0..=n)
        .map(|s| {
            let mut acc = R::zero();
            for a in subsets(n, s) {
                let av: Vec<usize> = a.iter().map(|&i| sys.starts[i]).collect();
                for e in subsets(sys.ends.len(), s) {
                    let ev: Vec<usize> = e.iter().map(|&i| sys.ends[i]).collect();
                    acc = acc + nonintersecting_gf(&sys.dag, &av, &ev);
                }
            }
            acc
        })
        .collect()
}

/// Both sides of the minor summation formula, compared exactly.
pub fn minor_summation_check<R: Ring>(m: &Matrix<R>, h: &Matrix<R>, a: &Matrix<R>) -> Result<bool> {
    let (n, p) = (m.rows(), m.cols());
    let k = h.cols();
    pre(h.rows() == n || (k == 0 && h.rows() == 0), || "M and H need the same number of rows".into())?;
    pre(a.rows() == p && a.cols() == p && a.is_skew(), || "A must be a skew-symmetric p x p matrix".into())?;
    pre((n + k).is_multiple_of(2) && k <= n && n - k <= p, || format!("need n+m even and 0 <= n-m <= p, got n={} m={} p={}", n, k, p))?;
    let h = if h.rows() == n { h.clone() } else { Matrix::zeros(n, 0) };
    let rows: Vec<usize> = (0..n).collect();
    let mut lhs = R::zero();
    for ks in subsets(p, n - k) {
        let pf = a.select(&ks, &ks).pfaffian()?;
        if pf.is_zero() {
            continue;
        }
        let d = m.select(&rows, &ks).hcat(&h).det_expand();
        lhs = lhs + pf * d;
    }
    let mam = m.mul(a).mul(&m.transpose());
    let neg_ht = h.transpose().map(|x| -x.clone());
    let mut rhs = Matrix::block(&mam, &h, &neg_ht, &Matrix::zeros(k, k)).pfaffian()?;
    if (k * k.saturating_sub(1) / 2) % 2 == 1 {
        rhs = -rhs;
    }
    Ok(lhs == rhs)
}

/// Skew shape `lambda/mu` with entries of row `i` in `b_i..=a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Shape {
    pub fn new(lambda: Vec<i64>, mu: Vec<i64>, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        let s = Shape { lambda, mu, a, b };
        s.validate()?;
        Ok(s)
    }

    /// Straight shape with entries in `1..=a`.
    pub fn straight(lambda: Vec<i64>, a: i64) -> Result<Self> {
        let n = lambda.len();
        Shape::new(lambda, vec![0; n], vec![a; n], vec![1; n])
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.lambda.len();
        pre(self.mu.len() == n && self.a.len() == n && self.b.len() == n, || "shape vectors must have equal length".into())?;
        pre(self.lambda.windows(2).all(|w| w[0] >= w[1]), || format!("lambda {:?} must be weakly decreasing", self.lambda))?;
        pre(self.mu.windows(2).all(|w| w[0] >= w[1]), || format!("mu {:?} must be weakly decreasing", self.mu))?;
        pre(self.lambda.iter().zip(&self.mu).all(|(l, m)| l >= m), || "need lambda_i >= mu_i".into())?;
        pre(self.a.windows(2).all(|w| w[0] <= w[1]), || format!("upper bounds {:?} must be weakly increasing", self.a))?;
        pre(self.b.windows(2).all(|w| w[0] <= w[1]), || format!("lower bounds {:?} must be weakly increasing", self.b))?;
        pre(self.a.iter().zip(&self.b).all(|(a, b)| a >= b), || "need a_i >= b_i".into())
    }

    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    pub fn cells(&self) -> i64 {
        self.lambda.iter().zip(&self.mu).map(|(l, m)| l - m).sum()
    }
}

fn shape_index(sh: &Shape, i: usize, j: usize) -> i64 {
    sh.lambda[i] - sh.mu[j] - i as i64 + j as i64
}

/// Semistandard tableaux of the shape, as a determinant of binomials.
pub fn ssyt_count(sh: &Shape) -> Result<Integer> {
    sh.validate()?;
    let n = sh.rows();
    let m = Matrix::from_fn(n, n, |i, j| {
        let k = shape_index(sh, i, j);
        binom(sh.a[i] - sh.b[j] + k, k)
    });
    Ok(m.det())
}

/// Generating function by entry sum; needs nonnegative lower bounds.
pub fn ssyt_gf(sh: &Shape) -> Result<Poly<Integer>> {
    sh.validate()?;
    pre(sh.b.iter().all(|&b| b >= 0), || "entry-sum polynomial needs nonnegative lower bounds".into())?;
    let n = sh.rows();
    let m = Matrix::from_fn(n, n, |i, j| {
        let k = shape_index(sh, i, j);
        if k < 0 {
            return Poly::zero();
        }
        qbinom(sh.a[i] - sh.b[j] + k, k).shift((sh.b[j] * k) as usize)
    });
    Ok(m.det())
}

/// Contents and hook lengths of the cells of a partition.
fn cells(lambda: &[i64]) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for (i, &l) in lambda.iter().enumerate() {
        for j in 0..l {
            let arm = l - j - 1;
            let leg = lambda[i + 1..].iter().filter(|&&x| x > j).count() as i64;
            out.push((j - i as i64, arm + leg + 1));
        }
    }
    out
}

fn check_partition(lambda: &[i64], a: i64) -> Result<()> {
    pre(lambda.windows(2).all(|w| w[0] >= w[1]) && lambda.iter().all(|&x| x >= 0), || format!("{:?} is not a partition", lambda))?;
    let rows = lambda.iter().filter(|&&x| x > 0).count() as i64;
    pre(a >= rows, || format!("bound {} is smaller than the number of rows {}", a, rows))
}

/// Hook-content product for tableaux of shape `lambda` with entries in
/// `1..=a`.
pub fn hook_content(lambda: &[i64], a: i64) -> Result<Integer> {
    check_partition(lambda, a)?;
    let (mut num, mut den) = (Integer::one(), Integer::one());
    for (c, h) in cells(lambda) {
        num *= a + c;
        den *= h;
    }
    if (&num % &den).is_zero() {
        Ok(num / den)
    } else {
        Err(Error::Numeric(format!("hook-content product {}/{} is not an integer", num, den)))
    }
}

/// `q^(sum i lambda_i) prod (1 - q^(a + c)) / (1 - q^h)`.
pub fn hook_content_gf(lambda: &[i64], a: i64) -> Result<Poly<Integer>> {
    check_partition(lambda, a)?;
    let one_minus = |k: i64| Poly::<Integer>::one() - Poly::monomial(Integer::one(), k as usize);
    let mut num = Poly::<Integer>::one();
    let mut den = Poly::<Integer>::one();
    for (c, h) in cells(lambda) {
        num = num * one_minus(a + c);
        den = den * one_minus(h);
    }
    let (q, r) = num.div_rem(&den).ok_or_else(|| Error::Numeric("hook-content quotient is not integral".into()))?;
    if !r.is_zero() {
        return Err(Error::Numeric("hook-content quotient leaves a remainder".into()));
    }
    let shift: i64 = lambda.iter().enumerate().map(|(i, &l)| (i as i64 + 1) * l).sum();
    Ok(q.shift(shift as usize))
}

/// Rows of a tableau; row `i` holds columns `mu_i+1..=lambda_i`.
pub type Tableau = Vec<Vec<i64>>;

/// All semistandard tableaux of the shape, by filling cells in order.
pub fn enumerate_ssyt(sh: &Shape) -> Result<Vec<Tableau>> {
    sh.validate()?;
    let n = sh.rows();
    let mut t: Tableau = (0..n).map(|i| vec![0; (sh.lambda[i] - sh.mu[i]) as usize]).collect();
    let cellv: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..t[i].len()).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fill(sh, &cellv, 0, &mut t, &mut out);
    Ok(out)
}

fn fill(sh: &Shape, cellv: &[(usize, usize)], k: usize, t: &mut Tableau, out: &mut Vec<Tableau>) {
    if k == cellv.len() {
        out.push(t.clone());
        return;
    }
    let (i, j) = cellv[k];
    let mut lo = sh.b[i];
    if j > 0 {
        lo = lo.max(t[i][j - 1]);
    }
    // cell above in the same column
    let col = sh.mu[i] + j as i64;
    if i > 0 && col >= sh.mu[i - 1] && col < sh.lambda[i - 1] {
        lo = lo.max(t[i - 1][(col - sh.mu[i - 1]) as usize] + 1);
    }
    for v in lo..=sh.a[i] {
        t[i][j] = v;
        fill(sh, cellv, k + 1, t, out);
    }
}

/// Row `i` becomes the path from `(mu_i - i, b_i)` to `(lambda_i - i, a_i)`
/// whose horizontal steps lie at the heights of the entries.
pub fn ssyt_to_paths(sh: &Shape, t: &Tableau) -> Vec<Vec<Point>> {
    (0..sh.rows())
        .map(|i| {
            let r = i as i64 + 1;
            let (mut x, mut y) = (sh.mu[i] - r, sh.b[i]);
            let mut pts = vec![vec![x, y]];
            for &v in &t[i] {
                while y < v {
                    y += 1;
                    pts.push(vec![x, y]);
                }
                x += 1;
                pts.push(vec![x, y]);
            }
            while y < sh.a[i] {
                y += 1;
                pts.push(vec![x, y]);
            }
            pts
        })
        .collect()
}

/// Inverse of [`ssyt_to_paths`]: heights of the horizontal steps.
pub fn paths_to_ssyt(paths: &[Vec<Point>]) -> Tableau {
    paths.iter().map(|p| p.windows(2).filter(|w| w[1][0] > w[0][0]).map(|w| w[0][1]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn grid() -> Dag<Integer> {
        Dag::grid(0, 0, 4, 4)
    }

    fn v(g: &Dag<Integer>, pts: &[(i64, i64)]) -> Vec<usize> {
        pts.iter().map(|&(x, y)| g.vertex(&[x, y]).unwrap()).collect()
    }

    #[test]
    fn lgv_example() {
        let g = grid();
        let sys = DagPathSystem::new(g.clone(), v(&g, &[(0, 1), (1, 0)]), v(&g, &[(2, 3), (3, 2)]));
        assert_eq!(lgv_det(&sys).unwrap(), int(20));
        assert_eq!(signed_family_sum(&sys).unwrap(), int(20));
        assert_eq!(nonintersecting_gf(&g, &sys.starts, &sys.ends), int(20));
    }

    #[test]
    fn crossing_forced() {
        let g = grid();
        // lower start must reach the upper end, so only the transposition survives
        let sys = DagPathSystem::new(g.clone(), v(&g, &[(0, 0), (0, 2)]), v(&g, &[(0, 4), (4, 2)]));
        assert_eq!(nonintersecting_gf(&g, &sys.starts, &sys.ends), int(0));
        let swapped = nonintersecting_gf(&g, &[sys.starts[1], sys.starts[0]], &sys.ends);
        assert!(swapped > int(0));
        assert_eq!(lgv_det(&sys).unwrap(), -swapped);
    }

    #[test]
    fn cycles_rejected() {
        assert!(Dag::new(2, vec![(0, 1, int(1)), (1, 0, int(1))]).is_err());
        assert!(Dag::new(3, vec![(0, 1, int(1)), (1, 2, int(1))]).is_ok());
    }

    #[test]
    fn single_path_phantom() {
        let g = grid();
        let ends = v(&g, &[(0, 4), (2, 4), (4, 4)]);
        let sys = DagPathSystem::new(g.clone(), v(&g, &[(0, 0)]), ends.clone());
        let want = ends.iter().fold(int(0), |acc, &e| acc + g.path_gf(sys.starts[0], e));
        assert_eq!(pf_free_endpoints(&sys, PairMode::Signed).unwrap(), want);
    }

    #[test]
    fn tableaux() {
        let sh = Shape::new(vec![2, 1], vec![0, 0], vec![3, 3], vec![1, 1]).unwrap();
        assert_eq!(ssyt_count(&sh).unwrap(), int(8));
        assert_eq!(enumerate_ssyt(&sh).unwrap().len(), 8);
        assert_eq!(hook_content(&[2, 1], 3).unwrap(), int(8));
        assert_eq!(hook_content(&[1], 5).unwrap(), int(5));
        assert_eq!(hook_content(&[2, 2], 2).unwrap(), int(1));
        assert_eq!(hook_content_gf(&[1], 3).unwrap(), Poly::from_ints(&[0, 1, 1, 1]));
        assert_eq!(ssyt_gf(&sh).unwrap(), hook_content_gf(&[2, 1], 3).unwrap());
        for t in enumerate_ssyt(&sh).unwrap() {
            assert_eq!(paths_to_ssyt(&ssyt_to_paths(&sh, &t)), t);
        }
    }

    #[test]
    fn minor_summation_all_ones() {
        let a = Matrix::from_fn(4, 4, |i, j| int((j > i) as i64 - (i > j) as i64));
        let m = Matrix::from_i64(&[vec![1, 2, 0, 1], vec![0, 1, 3, 1]]);
        let h = Matrix::zeros(2, 0);
        assert!(minor_summation_check(&m, &h, &a).unwrap());
    }
}
