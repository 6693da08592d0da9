//! Named counting families: parameters, formula, brute-force oracle and
//! the sweep grid used by `verify`.

use latpath::boundary::{avoid_points_count, box_boundary_count, ladder_count, BoxBoundary, LadderBounds};
use latpath::chambers::*;
use latpath::kernel::{lukasiewicz_count, nonneg_walk_gf, small_branch, walk_gf_by_height, WeightedStepSet};
use latpath::lgv::{enumerate_ssyt, hook_content, hook_content_gf, ssyt_count, ssyt_gf, Shape};
use latpath::motzkin::*;
use latpath::orthopoly::chebyshev_u;
use latpath::path::{oracle_count, oracle_gf, PathQuery, Restriction, Statistic, StepSet, TurnKind};
use latpath::plane::*;
use latpath::qcount::*;
use latpath::turns::*;
use latpath::{Error, Integer, Poly, Rational, Result, Series};
use num_traits::{One, Zero};
use serde_json::{json, Value as Json};
use std::fmt;

#[derive(Clone, Copy, Debug)]
pub enum Kind {
    Int,
    /// Comma-separated integers.
    Ints,
    /// `p/q` or an integer.
    Rat,
    Word(&'static [&'static str]),
}

#[derive(Clone, Copy, Debug)]
pub struct Param {
    pub name: &'static str,
    pub kind: Kind,
}

const fn int(name: &'static str) -> Param {
    Param { name, kind: Kind::Int }
}

const fn ints(name: &'static str) -> Param {
    Param { name, kind: Kind::Ints }
}

const fn rat(name: &'static str) -> Param {
    Param { name, kind: Kind::Rat }
}

const KINDS: &[&str] = &["ne", "en"];
const REGIONS: &[&str] = &["unrestricted", "below-diagonal"];
const VARIANTS: &[&str] = &["last-touch", "inclusion-exclusion"];

const fn word(name: &'static str, w: &'static [&'static str]) -> Param {
    Param { name, kind: Kind::Word(w) }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Arg {
    Int(i64),
    Ints(Vec<i64>),
    Rat(Rational),
    Word(String),
}

fn parse_int(s: &str) -> std::result::Result<i64, String> {
    s.trim().parse().map_err(|_| format!("expected an integer, got {:?}", s))
}

impl Arg {
    pub fn parse(kind: Kind, s: &str) -> std::result::Result<Arg, String> {
        match kind {
            Kind::Int => parse_int(s).map(Arg::Int),
            Kind::Ints if s.trim().is_empty() => Ok(Arg::Ints(vec![])),
            Kind::Ints => s.split(',').map(parse_int).collect::<std::result::Result<_, _>>().map(Arg::Ints),
            Kind::Rat => {
                let (p, q) = s.split_once('/').unwrap_or((s, "1"));
                let (p, q) = (parse_int(p)?, parse_int(q)?);
                if q == 0 {
                    return Err(format!("zero denominator in {:?}", s));
                }
                Ok(Arg::Rat(Rational::new(p.into(), q.into())))
            }
            Kind::Word(ws) => {
                if ws.contains(&s) {
                    Ok(Arg::Word(s.to_string()))
                } else {
                    Err(format!("expected one of {}, got {:?}", ws.join("|"), s))
                }
            }
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Arg::Int(x) => json!(x),
            Arg::Ints(v) => json!(v),
            Arg::Rat(r) => json!(r.to_string()),
            Arg::Word(w) => json!(w),
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Int(x) => write!(f, "{}", x),
            Arg::Ints(v) => write!(f, "{}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
            Arg::Rat(r) => write!(f, "{}", r),
            Arg::Word(w) => write!(f, "{}", w),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Args(pub Vec<(&'static str, Arg)>);

impl Args {
    pub fn new(params: &[Param], vals: Vec<Arg>) -> Self {
        Args(params.iter().map(|p| p.name).zip(vals).collect())
    }

    fn i(&self, k: usize) -> i64 {
        match &self.0[k].1 {
            Arg::Int(x) => *x,
            a => panic!("parameter {} is {:?}, not an integer", self.0[k].0, a),
        }
    }

    fn v(&self, k: usize) -> &[i64] {
        match &self.0[k].1 {
            Arg::Ints(x) => x,
            a => panic!("parameter {} is {:?}, not a vector", self.0[k].0, a),
        }
    }

    fn r(&self, k: usize) -> &Rational {
        match &self.0[k].1 {
            Arg::Rat(x) => x,
            a => panic!("parameter {} is {:?}, not a rational", self.0[k].0, a),
        }
    }

    fn w(&self, k: usize) -> &str {
        match &self.0[k].1 {
            Arg::Word(x) => x,
            a => panic!("parameter {} is {:?}, not a word", self.0[k].0, a),
        }
    }

    /// Nonnegative integer parameter.
    fn n(&self, k: usize) -> Result<usize> {
        let x = self.i(k);
        if x < 0 {
            return Err(Error::Precondition(format!("{} = {} must be >= 0", self.0[k].0, x)));
        }
        Ok(x as usize)
    }

    fn kind(&self, k: usize) -> TurnKind {
        if self.w(k) == "ne" {
            TurnKind::Ne
        } else {
            TurnKind::En
        }
    }

    fn pairs(&self, k: usize) -> Result<Vec<(i64, i64)>> {
        let v = self.v(k);
        if !v.len().is_multiple_of(2) {
            return Err(Error::Precondition(format!("{} needs an even number of coordinates, got {}", self.0[k].0, v.len())));
        }
        Ok(v.chunks(2).map(|c| (c[0], c[1])).collect())
    }

    fn point(&self, k: usize) -> Result<(i64, i64)> {
        let p = self.pairs(k)?;
        if p.len() != 1 {
            return Err(Error::Precondition(format!("{} must be a point x,y", self.0[k].0)));
        }
        Ok(p[0])
    }

    pub fn to_json(&self) -> Json {
        let mut m = serde_json::Map::new();
        for (k, v) in &self.0 {
            m.insert(k.to_string(), v.to_json());
        }
        Json::Object(m)
    }
}

impl fmt::Display for Args {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(none)");
        }
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(Integer),
    Rat(Rational),
    /// Coefficients, lowest degree first.
    Poly(Vec<Integer>),
    Series {
        order: usize,
        coeffs: Vec<Integer>,
    },
    /// Series whose coefficients are polynomials in `q`.
    PolySeries {
        order: usize,
        coeffs: Vec<Vec<Integer>>,
    },
}

fn strs(v: &[Integer]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl Value {
    pub fn poly(p: &Poly<Integer>) -> Self {
        Value::Poly(p.coeffs().to_vec())
    }

    pub fn series(s: &Series<Integer>) -> Self {
        Value::Series { order: s.order(), coeffs: s.coeffs().to_vec() }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Int(x) => json!(x.to_string()),
            Value::Rat(x) => json!(x.to_string()),
            Value::Poly(c) => json!(strs(c)),
            Value::Series { order, coeffs } => json!({ "order": order, "coefficients": strs(coeffs) }),
            Value::PolySeries { order, coeffs } => {
                json!({ "order": order, "coefficients": coeffs.iter().map(|c| strs(c)).collect::<Vec<_>>() })
            }
        }
    }

    /// Text rendering, one line per row.
    pub fn lines(&self) -> Vec<String> {
        match self {
            Value::Int(x) => vec![x.to_string()],
            Value::Rat(x) => vec![x.to_string()],
            Value::Poly(c) if c.is_empty() => vec!["0".into()],
            Value::Poly(c) | Value::Series { coeffs: c, .. } => vec![strs(c).join(" ")],
            Value::PolySeries { coeffs, .. } => {
                let w = coeffs.len().saturating_sub(1).to_string().len();
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| format!("[{:>w$}] {}", n, if c.is_empty() { "0".into() } else { strs(c).join(" ") }, w = w))
                    .collect()
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines().join("; "))
    }
}

type Eval = fn(&Args) -> Result<Value>;
type Grid = fn(i64) -> Vec<Vec<Arg>>;

pub struct Family {
    pub name: &'static str,
    pub about: &'static str,
    pub params: &'static [Param],
    pub formula: Eval,
    pub oracle: Option<Eval>,
    pub grid: Option<Grid>,
}

pub struct SeriesFamily {
    pub name: &'static str,
    pub about: &'static str,
    pub params: &'static [Param],
    pub run: fn(&Args, usize) -> Result<Value>,
}

fn iv(x: Result<Integer>) -> Result<Value> {
    x.map(Value::Int)
}

fn oc(q: PathQuery) -> Result<Value> {
    oracle_count(&q).map(Value::Int)
}

fn ogf(q: PathQuery, s: Statistic) -> Result<Value> {
    oracle_gf(&q, &s).map(|p| Value::poly(&p))
}

fn ocoef(q: PathQuery, s: Statistic, l: i64) -> Result<Value> {
    let p = oracle_gf(&q, &s)?;
    Ok(Value::Int(if l < 0 { Integer::zero() } else { p.coeff(l as usize) }))
}

fn stat(k: TurnKind) -> Statistic {
    match k {
        TurnKind::Ne => Statistic::NeTurns,
        TurnKind::En => Statistic::EnTurns,
    }
}

fn upper(a: i64, b: i64, c: i64, d: i64, steps: StepSet) -> PathQuery {
    PathQuery::new(vec![a, b], vec![c, d], steps).restrict(Restriction::halfspace(vec![0, 1], 0))
}

fn dyck(n: usize) -> PathQuery {
    upper(0, 0, 2 * n as i64, 0, StepSet::dyck())
}

fn strip_query(r: i64, s: i64, k: i64, n: i64) -> PathQuery {
    PathQuery::new(vec![0, r], vec![n, s], StepSet::motzkin())
        .restrict(Restriction::All(vec![Restriction::halfspace(vec![0, 1], 0), Restriction::halfspace(vec![0, -1], -k)]))
}

fn unit_weights(k: usize) -> MotzkinWeighting<Integer> {
    MotzkinWeighting::constant(Integer::one(), Integer::one(), k)
}

fn weak_chamber() -> Restriction {
    Restriction::region(|x: &[i64]| x.windows(2).all(|w| w[0] >= w[1]))
}

fn chamber_query(g: GroupType, f: StepFamily, a: &[i64], e: &[i64], m: Option<usize>) -> Result<PathQuery> {
    if a.len() != e.len() || a.is_empty() {
        return Err(Error::Precondition(format!("start {:?} and end {:?} need the same positive dimension", a, e)));
    }
    let d = a.len();
    let steps = match f {
        StepFamily::S1 => StepSet::simple(d),
        StepFamily::S1Pm => StepSet::pm_unit(d),
        StepFamily::SdPm => StepSet::diagonal_pm(d),
    };
    let spec = ChamberSpec::new(g, d, StepFamily::S1);
    let mut q = PathQuery::new(a.to_vec(), e.to_vec(), steps).restrict(Restriction::region(move |x: &[i64]| spec.contains(x)));
    if let Some(m) = m {
        q = q.length(m);
    }
    Ok(q)
}

fn chamber_oracle(g: GroupType, f: StepFamily, a: &[i64], e: &[i64], m: Option<usize>) -> Result<Value> {
    oc(chamber_query(g, f, a, e, m)?)
}

fn ssyt_oracle(sh: &Shape) -> Result<Value> {
    Ok(Value::Int(Integer::from(enumerate_ssyt(sh)?.len())))
}

// grids

fn cart(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &(lo, hi) in ranges {
        out = out.into_iter().flat_map(|p| (lo..=hi).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

fn ints_grid(ranges: &[(i64, i64)]) -> Vec<Vec<Arg>> {
    cart(ranges).into_iter().map(|p| p.into_iter().map(Arg::Int).collect()).collect()
}

fn strict_vectors(d: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    cart(&vec![(lo, hi); d]).into_iter().filter(|v| v.windows(2).all(|w| w[0] > w[1])).collect()
}

fn weak_vectors(d: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    cart(&vec![(lo, hi); d]).into_iter().filter(|v| v.windows(2).all(|w| w[0] >= w[1])).collect()
}

fn nondecreasing(n: usize, hi: i64) -> Vec<Vec<i64>> {
    cart(&vec![(0, hi); n]).into_iter().filter(|v| v.windows(2).all(|w| w[0] <= w[1])).collect()
}

/// Lock-step paths need one parity across each point and `m` steps
/// between them.
fn parity_ok(a: &[i64], e: &[i64], m: i64) -> bool {
    let one = |p: &[i64]| p.iter().all(|x| (x - p[0]).rem_euclid(2) == 0);
    one(a) && one(e) && a.iter().zip(e).all(|(x, y)| (y - x - m).rem_euclid(2) == 0)
}

fn chamber_grid(g: fn(i64) -> GroupType, ns: (i64, i64), lo: i64, hi: i64, ms: Option<i64>, lockstep: bool) -> Vec<Vec<Arg>> {
    let mut out = Vec::new();
    for d in 1..=2usize {
        for n in ns.0..=ns.1 {
            let spec = ChamberSpec::new(g(n), d, StepFamily::S1);
            let pts: Vec<Vec<i64>> = strict_vectors(d, lo, hi).into_iter().filter(|p| spec.contains(p)).collect();
            for a in &pts {
                for e in &pts {
                    for m in 0..=ms.unwrap_or(0) {
                        if lockstep && !parity_ok(a, e, m) {
                            continue;
                        }
                        let mut row = vec![Arg::Ints(a.clone()), Arg::Ints(e.clone())];
                        if ns != (0, 0) {
                            row.push(Arg::Int(n));
                        }
                        if ms.is_some() {
                            row.push(Arg::Int(m));
                        }
                        out.push(row);
                    }
                }
            }
        }
    }
    out
}

fn band_grid(k: i64, with_l: bool) -> Vec<Vec<Arg>> {
    let mut out = Vec::new();
    for s in -2..=0i64 {
        for t in (s + 1)..=2 {
            for p in cart(&[(0, k), (0, k), (0, k), (0, k)]) {
                let (a, b, c, d) = (p[0], p[1], p[2], p[3]);
                if !(a + s <= b && b <= a + t && c + s <= d && d <= c + t) {
                    continue;
                }
                let mut row: Vec<Arg> = [a, b, c, d, s, t].iter().map(|&x| Arg::Int(x)).collect();
                if with_l {
                    for l in 0..=3 {
                        let mut r = row.clone();
                        r.push(Arg::Int(l));
                        out.push(r);
                    }
                } else {
                    out.push(std::mem::take(&mut row));
                }
            }
        }
    }
    out
}

fn small_partitions(rows: usize, hi: i64) -> Vec<Vec<i64>> {
    weak_vectors(rows, 0, hi)
}

const ABCD: &[Param] = &[int("a"), int("b"), int("c"), int("d")];
const N: &[Param] = &[int("n")];

pub fn families() -> Vec<Family> {
    vec![
        Family {
            name: "catalan",
            about: "Dyck paths of semilength n",
            params: N,
            formula: |a| Ok(Value::Int(catalan(a.n(0)? as i64))),
            oracle: Some(|a| oc(dyck(a.n(0)?))),
            grid: Some(|k| ints_grid(&[(0, k)])),
        },
        Family {
            name: "ballot",
            about: "simple paths from the origin to (c,d) with x >= y",
            params: const { &[int("c"), int("d")] },
            formula: |a| iv(ballot(a.i(0), a.i(1))),
            oracle: Some(|a| oc(PathQuery::simple(0, 0, a.i(0), a.i(1)).restrict(Restriction::below_diagonal()))),
            grid: Some(|k| {
                ints_grid(&[(0, k), (0, k)])
                    .into_iter()
                    .filter(|r| matches!((&r[0], &r[1]), (Arg::Int(c), Arg::Int(d)) if c >= d))
                    .collect()
            }),
        },
        Family {
            name: "simple",
            about: "east/north paths from (a,b) to (c,d)",
            params: ABCD,
            formula: |a| Ok(Value::Int(count_simple(a.i(0), a.i(1), a.i(2), a.i(3)))),
            oracle: Some(|a| oc(PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)))),
            grid: Some(|k| ints_grid(&[(0, k.min(4)), (0, k.min(4)), (0, k), (0, k)])),
        },
        Family {
            name: "pm",
            about: "n-step paths from (a,b) to (c,d) with steps (+-1,0), (0,+-1)",
            params: const { &[int("n"), int("a"), int("b"), int("c"), int("d")] },
            formula: |a| iv(count_pm(a.i(0), a.i(1), a.i(2), a.i(3), a.i(4))),
            oracle: Some(|a| oc(PathQuery::new(vec![a.i(1), a.i(2)], vec![a.i(3), a.i(4)], StepSet::pm_unit(2)).length(a.n(0)?))),
            grid: Some(|k| {
                let n = k.min(6);
                ints_grid(&[(0, n), (0, 0), (0, 0), (-n, n), (-n, n)])
            }),
        },
        Family {
            name: "delannoy",
            about: "paths from (a,b) to (c,d) with steps east, north, north-east",
            params: ABCD,
            formula: |a| Ok(Value::Int(delannoy(a.i(0), a.i(1), a.i(2), a.i(3)))),
            oracle: Some(|a| oc(PathQuery::new(vec![a.i(0), a.i(1)], vec![a.i(2), a.i(3)], StepSet::delannoy()))),
            grid: Some(|k| ints_grid(&[(0, 1), (0, 1), (0, k), (0, k)])),
        },
        Family {
            name: "area",
            about: "area generating polynomial of simple paths from (a,b) to (c,d)",
            params: ABCD,
            formula: |a| area_gf(a.i(0), a.i(1), a.i(2), a.i(3)).map(|p| Value::poly(&p)),
            oracle: Some(|a| ogf(PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)), Statistic::Area)),
            grid: Some(|k| ints_grid(&[(0, 1), (0, 1), (1, k), (1, k)])),
        },
        Family {
            name: "below-diagonal",
            about: "simple paths from (a,b) to (c,d) with x >= y",
            params: ABCD,
            formula: |a| iv(below_diagonal(a.i(0), a.i(1), a.i(2), a.i(3))),
            oracle: Some(|a| oc(PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)).restrict(Restriction::below_diagonal()))),
            grid: Some(|k| {
                ints_grid(&[(0, k), (0, k), (0, k), (0, k)])
                    .into_iter()
                    .filter(|r| match r.as_slice() {
                        [Arg::Int(a), Arg::Int(b), Arg::Int(c), Arg::Int(d)] => a >= b && c >= d,
                        _ => false,
                    })
                    .collect()
            }),
        },
        Family {
            name: "between-diagonals",
            about: "simple paths from (a,b) to (c,d) with x + s <= y <= x + t",
            params: const { &[int("a"), int("b"), int("c"), int("d"), int("s"), int("t")] },
            formula: |a| iv(between_diagonals(a.i(0), a.i(1), a.i(2), a.i(3), a.i(4), a.i(5))),
            oracle: Some(|a| oc(PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)).restrict(Restriction::diagonal_band(a.i(4), a.i(5))))),
            grid: Some(|k| band_grid(k, false)),
        },
        Family {
            name: "between-diagonals-trig",
            about: "between-diagonals by the cosine sum, rounded",
            params: const { &[int("a"), int("b"), int("c"), int("d"), int("s"), int("t")] },
            formula: |a| iv(between_diagonals_trig(a.i(0), a.i(1), a.i(2), a.i(3), a.i(4), a.i(5))),
            oracle: Some(|a| oc(PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)).restrict(Restriction::diagonal_band(a.i(4), a.i(5))))),
            grid: Some(|k| band_grid(k, false)),
        },
        Family {
            name: "rational-catalan",
            about: "simple paths from the origin to (r,s) with s x >= r y, gcd(r,s) = 1",
            params: const { &[int("r"), int("s")] },
            formula: |a| iv(rational_catalan(a.i(0), a.i(1))),
            oracle: Some(|a| oc(PathQuery::simple(0, 0, a.i(0), a.i(1)).restrict(Restriction::halfspace(vec![a.i(1), -a.i(0)], 0)))),
            grid: Some(|k| {
                ints_grid(&[(1, k), (1, k)])
                    .into_iter()
                    .filter(|r| match r.as_slice() {
                        [Arg::Int(x), Arg::Int(y)] => num_integer::gcd(*x, *y) == 1,
                        _ => false,
                    })
                    .collect()
            }),
        },
        Family {
            name: "below-slope",
            about: "simple paths from the origin to (c,d) with x >= mu y",
            params: const { &[int("c"), int("d"), int("mu")] },
            formula: |a| iv(below_slope_mu(a.i(0), a.i(1), a.i(2))),
            oracle: Some(|a| oc(PathQuery::simple(0, 0, a.i(0), a.i(1)).restrict(Restriction::halfspace(vec![1, -a.i(2)], 0)))),
            grid: Some(|k| {
                cart(&[(0, k), (0, k), (0, 3)])
                    .into_iter()
                    .filter(|p| p[0] >= p[2] * p[1])
                    .map(|p| p.into_iter().map(Arg::Int).collect())
                    .collect()
            }),
        },
        Family {
            name: "below-slope-general",
            about: "simple paths from (a,b) to (c,d) with x >= mu y",
            params: const { &[int("a"), int("b"), int("c"), int("d"), int("mu"), word("variant", VARIANTS)] },
            formula: |a| {
                let v = if a.w(5) == "last-touch" { SlopeVariant::LastTouch } else { SlopeVariant::InclusionExclusion };
                iv(below_slope_mu_general(a.i(0), a.i(1), a.i(2), a.i(3), a.i(4), v))
            },
            oracle: Some(|a| oc(PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)).restrict(Restriction::halfspace(vec![1, -a.i(4)], 0)))),
            grid: Some(|k| {
                let mut out = Vec::new();
                for p in cart(&[(0, 3), (0, 1), (0, k), (0, k), (0, 2)]) {
                    let (a, b, c, d, mu) = (p[0], p[1], p[2], p[3], p[4]);
                    if a >= mu * b && c >= mu * d && c >= a && d >= b {
                        for v in VARIANTS {
                            let mut row: Vec<Arg> = p.iter().map(|&x| Arg::Int(x)).collect();
                            row.push(Arg::Word(v.to_string()));
                            out.push(row);
                        }
                    }
                }
                out
            }),
        },
        Family {
            name: "kreweras",
            about: "3-d simple paths from the origin to (e1,e2,e3) with x1 >= max(x2, x3)",
            params: const { &[int("e1"), int("e2"), int("e3")] },
            formula: |a| iv(kreweras(a.i(0), a.i(1), a.i(2))),
            oracle: Some(|a| {
                oc(PathQuery::new(vec![0, 0, 0], vec![a.i(0), a.i(1), a.i(2)], StepSet::simple(3))
                    .restrict(Restriction::All(vec![Restriction::halfspace(vec![1, -1, 0], 0), Restriction::halfspace(vec![1, 0, -1], 0)])))
            }),
            grid: Some(|k| {
                cart(&[(0, k.min(4)), (0, k.min(4)), (0, k.min(4))])
                    .into_iter()
                    .filter(|p| p[0] >= p[1].max(p[2]))
                    .map(|p| p.into_iter().map(Arg::Int).collect())
                    .collect()
            }),
        },
        Family {
            name: "motzkin",
            about: "Motzkin paths of length n",
            params: N,
            formula: |a| Ok(Value::Int(motzkin_number(a.n(0)? as u64))),
            oracle: Some(|a| oc(upper(0, 0, a.i(0), 0, StepSet::motzkin()))),
            grid: Some(|k| ints_grid(&[(0, k)])),
        },
        Family {
            name: "motzkin-path",
            about: "Motzkin paths from (a,b) to (c,d) staying weakly above the x-axis",
            params: ABCD,
            formula: |a| iv(motzkin_count(a.i(0), a.i(1), a.i(2), a.i(3))),
            oracle: Some(|a| oc(upper(a.i(0), a.i(1), a.i(2), a.i(3), StepSet::motzkin()))),
            grid: Some(|k| ints_grid(&[(0, 0), (0, 3), (0, k), (0, 3)])),
        },
        Family {
            name: "schroeder",
            about: "large Schroeder paths from (0,0) to (2n,0)",
            params: N,
            formula: |a| Ok(Value::Int(schroeder_number(a.n(0)? as u64))),
            oracle: Some(|a| oc(upper(0, 0, 2 * a.i(0), 0, StepSet::schroeder()))),
            grid: Some(|k| ints_grid(&[(0, k.min(6))])),
        },
        Family {
            name: "schroeder-path",
            about: "Schroeder paths from (a,b) to (c,d) staying weakly above the x-axis",
            params: ABCD,
            formula: |a| iv(schroeder_count(a.i(0), a.i(1), a.i(2), a.i(3))),
            oracle: Some(|a| oc(upper(a.i(0), a.i(1), a.i(2), a.i(3), StepSet::schroeder()))),
            grid: Some(|k| ints_grid(&[(0, 0), (0, 3), (0, k), (0, 3)])),
        },
        Family {
            name: "little-schroeder",
            about: "little Schroeder number",
            params: N,
            formula: |a| Ok(Value::Int(little_schroeder(a.n(0)? as u64))),
            oracle: None,
            grid: None,
        },
        Family {
            name: "strip",
            about: "Motzkin paths of length n from height r to height s inside 0 <= y <= k",
            params: const { &[int("r"), int("s"), int("k"), int("n")] },
            formula: |a| {
                let k = a.n(2)?;
                iv(strip_count_transfer(a.n(0)?, a.n(1)?, k, a.n(3)?, &unit_weights(k)))
            },
            oracle: Some(|a| oc(strip_query(a.i(0), a.i(1), a.i(2), a.n(3)? as i64))),
            grid: Some(strip_grid),
        },
        Family {
            name: "strip-trig",
            about: "strip count by the cosine sum, rounded",
            params: const { &[int("r"), int("s"), int("k"), int("n")] },
            formula: |a| iv(strip_count_trig(a.i(0), a.i(1), a.i(2), a.n(3)? as u32)),
            oracle: Some(|a| oc(strip_query(a.i(0), a.i(1), a.i(2), a.n(3)? as i64))),
            grid: Some(strip_grid),
        },
        Family {
            name: "gambler-ruin",
            about: "probability that player A, starting with a of total, is ruined within the given rounds",
            params: const { &[int("a"), int("total"), int("rounds"), rat("pa"), rat("pb")] },
            formula: |a| gambler_ruin(a.i(0), a.i(1), a.n(2)?, a.r(3), a.r(4)).map(Value::Rat),
            oracle: None,
            grid: None,
        },
        Family {
            name: "ladder",
            about: "paths whose horizontal steps lie between lower bounds b and upper bounds a",
            params: const { &[ints("a"), ints("b")] },
            formula: |a| iv(ladder_count(&LadderBounds::new(a.v(0).to_vec(), a.v(1).to_vec())?)),
            oracle: Some(|a| {
                let l = LadderBounds::new(a.v(0).to_vec(), a.v(1).to_vec())?;
                oc(PathQuery::new(l.start(), l.end(), StepSet::simple(2)).restrict(l.restriction()))
            }),
            grid: Some(|k| {
                let mut out = Vec::new();
                for n in 1..=3 {
                    let seqs = nondecreasing(n, k.min(3));
                    for a in &seqs {
                        for b in &seqs {
                            if a.iter().zip(b).all(|(x, y)| x >= y) {
                                out.push(vec![Arg::Ints(a.clone()), Arg::Ints(b.clone())]);
                            }
                        }
                    }
                }
                out
            }),
        },
        Family {
            name: "avoid-points",
            about: "simple paths from start to end avoiding the listed points x1,y1,x2,y2,...",
            params: const { &[ints("start"), ints("end"), ints("points")] },
            formula: |a| iv(avoid_points_count(a.point(0)?, a.point(1)?, &a.pairs(2)?)),
            oracle: Some(|a| {
                let (s, e) = (a.point(0)?, a.point(1)?);
                let forb = a.pairs(2)?.into_iter().map(|(x, y)| vec![x, y]).collect();
                oc(PathQuery::simple(s.0, s.1, e.0, e.1).restrict(Restriction::Forbidden(forb)))
            }),
            grid: Some(|k| {
                let h = k.min(4);
                let mut out = Vec::new();
                for e in cart(&[(0, h), (0, h)]) {
                    for p in cart(&[(0, h), (0, h)]) {
                        out.push(vec![Arg::Ints(vec![0, 0]), Arg::Ints(e.clone()), Arg::Ints(p)]);
                    }
                }
                out
            }),
        },
        Family {
            name: "box-boundary",
            about: "paths in a box with lower and upper boundary values a, b at the box points",
            params: const { &[ints("n"), ints("a"), ints("b")] },
            formula: |a| iv(box_boundary_count(&BoxBoundary::new(a.v(0).to_vec(), a.v(1).to_vec(), a.v(2).to_vec())?)),
            oracle: Some(|a| {
                let bb = BoxBoundary::new(a.v(0).to_vec(), a.v(1).to_vec(), a.v(2).to_vec())?;
                oc(PathQuery::new(bb.start(), bb.end(), StepSet::simple(bb.n.len() + 1)).restrict(bb.restriction()))
            }),
            grid: None,
        },
        Family {
            name: "turns",
            about: "simple paths from (a,b) to (c,d) with l turns of the given kind",
            params: const { &[int("a"), int("b"), int("c"), int("d"), int("l"), word("kind", KINDS)] },
            formula: |a| iv(turns_unrestricted(a.i(0), a.i(1), a.i(2), a.i(3), a.i(4), a.kind(5))),
            oracle: Some(|a| ocoef(PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)), stat(a.kind(5)), a.i(4))),
            grid: Some(|k| turn_grid(k, |a, b, c, d| c >= a && d >= b)),
        },
        Family {
            name: "turns-below-diagonal",
            about: "paths from (a,b) to (c,d) with x >= y and l turns of the given kind",
            params: const { &[int("a"), int("b"), int("c"), int("d"), int("l"), word("kind", KINDS)] },
            formula: |a| iv(turns_below_diagonal(a.i(0), a.i(1), a.i(2), a.i(3), a.i(4), a.kind(5))),
            oracle: Some(|a| {
                ocoef(PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)).restrict(Restriction::below_diagonal()), stat(a.kind(5)), a.i(4))
            }),
            grid: Some(|k| turn_grid(k, |a, b, c, d| a >= b && c >= d && c >= a && d >= b)),
        },
        Family {
            name: "turns-band",
            about: "paths from (a,b) to (c,d) with x + s <= y <= x + t and l north-east turns",
            params: const { &[int("a"), int("b"), int("c"), int("d"), int("s"), int("t"), int("l")] },
            formula: |a| iv(turns_two_boundaries(a.i(0), a.i(1), a.i(2), a.i(3), a.i(4), a.i(5), a.i(6))),
            oracle: Some(|a| {
                let q = PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3)).restrict(Restriction::diagonal_band(a.i(4), a.i(5)));
                ocoef(q, Statistic::NeTurns, a.i(6))
            }),
            grid: Some(|k| band_grid(k.min(4), true)),
        },
        Family {
            name: "turns-slope",
            about: "paths from the origin to (c,d) with x >= mu y and l turns of the given kind",
            params: const { &[int("c"), int("d"), int("mu"), int("l"), word("kind", KINDS)] },
            formula: |a| iv(turns_slope_mu(a.i(0), a.i(1), a.i(2), a.i(3), a.kind(4))),
            oracle: Some(|a| {
                let q = PathQuery::simple(0, 0, a.i(0), a.i(1)).restrict(Restriction::halfspace(vec![1, -a.i(2)], 0));
                ocoef(q, stat(a.kind(4)), a.i(3))
            }),
            grid: Some(|k| {
                let mut out = Vec::new();
                for p in cart(&[(0, k), (0, k.min(3)), (1, 2), (0, 3)]) {
                    if p[0] >= p[2] * p[1] {
                        for w in KINDS {
                            let mut row: Vec<Arg> = p.iter().map(|&x| Arg::Int(x)).collect();
                            row.push(Arg::Word(w.to_string()));
                            out.push(row);
                        }
                    }
                }
                out
            }),
        },
        Family {
            name: "runs",
            about: "run generating polynomial of paths from (a,b) to (c,d) in the region",
            params: const { &[int("a"), int("b"), int("c"), int("d"), word("region", REGIONS)] },
            formula: |a| {
                let region = if a.w(4) == "unrestricted" { TurnRegion::Unrestricted } else { TurnRegion::BelowDiagonal };
                run_gf(a.i(0), a.i(1), a.i(2), a.i(3), region).map(|p| Value::poly(&p))
            },
            oracle: Some(|a| {
                let mut q = PathQuery::simple(a.i(0), a.i(1), a.i(2), a.i(3));
                if a.w(4) == "below-diagonal" {
                    q = q.restrict(Restriction::below_diagonal());
                }
                ogf(q, Statistic::Runs)
            }),
            grid: Some(|k| {
                let mut out = Vec::new();
                for p in cart(&[(0, 1), (0, 1), (1, k), (0, k)]) {
                    for w in REGIONS {
                        if *w == "below-diagonal" && !(p[0] >= p[1] && p[2] >= p[3]) {
                            continue;
                        }
                        let mut row: Vec<Arg> = p.iter().map(|&x| Arg::Int(x)).collect();
                        row.push(Arg::Word(w.to_string()));
                        out.push(row);
                    }
                }
                out
            }),
        },
        Family {
            name: "multinomial",
            about: "simple paths from a to e in d dimensions",
            params: const { &[ints("a"), ints("e")] },
            formula: |a| iv(multinomial_count(a.v(0), a.v(1))),
            oracle: Some(|a| {
                let d = a.v(0).len();
                oc(PathQuery::new(a.v(0).to_vec(), a.v(1).to_vec(), StepSet::simple(d)))
            }),
            grid: Some(|k| {
                cart(&[(0, k.min(3)), (0, k.min(3)), (0, k.min(3))])
                    .into_iter()
                    .map(|e| vec![Arg::Ints(vec![0, 0, 0]), Arg::Ints(e)])
                    .collect()
            }),
        },
        Family {
            name: "type-a",
            about: "simple paths from a to e with x_1 >= ... >= x_d",
            params: const { &[ints("a"), ints("e")] },
            formula: |a| iv(typeA_det(a.v(0), a.v(1))),
            oracle: Some(|a| {
                let d = a.v(0).len();
                oc(PathQuery::new(a.v(0).to_vec(), a.v(1).to_vec(), StepSet::simple(d)).restrict(weak_chamber()))
            }),
            grid: Some(|k| {
                let mut out = Vec::new();
                for (d, h) in [(2, k.min(4)), (3, k.min(2))] {
                    let pts = weak_vectors(d, 0, h);
                    for a in &pts {
                        for e in &pts {
                            out.push(vec![Arg::Ints(a.clone()), Arg::Ints(e.clone())]);
                        }
                    }
                }
                out
            }),
        },
        Family {
            name: "hook",
            about: "standard Young tableaux of shape lambda",
            params: const { &[ints("lambda")] },
            formula: |a| iv(hook_formula(a.v(0))),
            oracle: Some(|a| {
                let l = a.v(0);
                if l.is_empty() {
                    return Ok(Value::Int(Integer::one()));
                }
                oc(PathQuery::new(vec![0; l.len()], l.to_vec(), StepSet::simple(l.len())).restrict(weak_chamber()))
            }),
            grid: Some(|k| small_partitions(3, k.min(4)).into_iter().map(|l| vec![Arg::Ints(l)]).collect()),
        },
        Family {
            name: "lock-step",
            about: "m steps (+-1, ..., +-1) from a to e in x_1 > ... > x_d",
            params: const { &[ints("a"), ints("e"), int("m")] },
            formula: |a| iv(lock_step_det(a.v(0), a.v(1), a.n(2)?)),
            oracle: Some(|a| chamber_oracle(GroupType::A, StepFamily::SdPm, a.v(0), a.v(1), Some(a.n(2)?))),
            grid: Some(|k| chamber_grid(|_| GroupType::A, (0, 0), -2, 3, Some(k.min(6)), true)),
        },
        Family {
            name: "type-c",
            about: "m steps (+-1, ..., +-1) from a to e in x_1 > ... > x_d > 0",
            params: const { &[ints("a"), ints("e"), int("m")] },
            formula: |a| iv(typeC_det(a.v(0), a.v(1), a.n(2)?)),
            oracle: Some(|a| chamber_oracle(GroupType::C, StepFamily::SdPm, a.v(0), a.v(1), Some(a.n(2)?))),
            grid: Some(|k| chamber_grid(|_| GroupType::C, (0, 0), 1, 4, Some(k.min(6)), true)),
        },
        Family {
            name: "affine-a",
            about: "simple paths from a to e in x_1 > ... > x_d > x_1 - N",
            params: const { &[ints("a"), ints("e"), int("N")] },
            formula: |a| iv(affineA_count(a.v(0), a.v(1), a.i(2))),
            oracle: Some(|a| chamber_oracle(GroupType::AffineA(a.i(2)), StepFamily::S1, a.v(0), a.v(1), None)),
            grid: Some(|k| chamber_grid(GroupType::AffineA, (1, 4), 0, k.min(4), None, false)),
        },
        Family {
            name: "affine-a-pm",
            about: "m steps (+-1 in one coordinate) from a to e in x_1 > ... > x_d > x_1 - N",
            params: const { &[ints("a"), ints("e"), int("N"), int("m")] },
            formula: |a| iv(affineA_pm_egf(a.v(0), a.v(1), a.i(2), a.n(3)?)),
            oracle: Some(|a| chamber_oracle(GroupType::AffineA(a.i(2)), StepFamily::S1Pm, a.v(0), a.v(1), Some(a.n(3)?))),
            grid: Some(|k| chamber_grid(GroupType::AffineA, (1, 4), 0, 3, Some(k.min(5)), false)),
        },
        Family {
            name: "affine-a-lockstep",
            about: "m steps (+-1, ..., +-1) from a to e in x_1 > ... > x_d > x_1 - N",
            params: const { &[ints("a"), ints("e"), int("N"), int("m")] },
            formula: |a| iv(affineA_lockstep(a.v(0), a.v(1), a.i(2), a.n(3)?)),
            oracle: Some(|a| chamber_oracle(GroupType::AffineA(a.i(2)), StepFamily::SdPm, a.v(0), a.v(1), Some(a.n(3)?))),
            grid: Some(|k| chamber_grid(GroupType::AffineA, (1, 4), 0, 3, Some(k.min(6)), true)),
        },
        Family {
            name: "affine-c-pm",
            about: "m steps (+-1 in one coordinate) from a to e in N > x_1 > ... > x_d > 0",
            params: const { &[ints("a"), ints("e"), int("N"), int("m")] },
            formula: |a| iv(affineC_pm(a.v(0), a.v(1), a.i(2), a.n(3)?)),
            oracle: Some(|a| chamber_oracle(GroupType::AffineC(a.i(2)), StepFamily::S1Pm, a.v(0), a.v(1), Some(a.n(3)?))),
            grid: Some(|k| chamber_grid(GroupType::AffineC, (2, 5), 1, 4, Some(k.min(6)), false)),
        },
        Family {
            name: "affine-c-lockstep",
            about: "m steps (+-1, ..., +-1) from a to e in N > x_1 > ... > x_d > 0",
            params: const { &[ints("a"), ints("e"), int("N"), int("m")] },
            formula: |a| iv(affineC_lockstep(a.v(0), a.v(1), a.i(2), a.n(3)?)),
            oracle: Some(|a| chamber_oracle(GroupType::AffineC(a.i(2)), StepFamily::SdPm, a.v(0), a.v(1), Some(a.n(3)?))),
            grid: Some(|k| chamber_grid(GroupType::AffineC, (2, 5), 1, 4, Some(k.min(6)), true)),
        },
        Family {
            name: "hyperplane",
            about: "simple paths from the origin to c with x_0 >= sum mu_i x_i",
            params: const { &[ints("mu"), ints("c")] },
            formula: |a| iv(hyperplane_bound(a.v(0), a.v(1))),
            oracle: Some(|a| {
                let (mu, c) = (a.v(0), a.v(1));
                if c.len() != mu.len() + 1 {
                    return Err(Error::Precondition(format!("need {} coordinates, got {}", mu.len() + 1, c.len())));
                }
                let r: Vec<i64> = std::iter::once(1).chain(mu.iter().map(|m| -m)).collect();
                oc(PathQuery::new(vec![0; c.len()], c.to_vec(), StepSet::simple(c.len())).restrict(Restriction::halfspace(r, 0)))
            }),
            grid: Some(|k| {
                let mut out = Vec::new();
                for mu in 0..=2 {
                    for c in cart(&[(0, k), (0, k.min(3))]) {
                        if c[0] >= mu * c[1] {
                            out.push(vec![Arg::Ints(vec![mu]), Arg::Ints(c)]);
                        }
                    }
                }
                out
            }),
        },
        Family {
            name: "ssyt",
            about: "semistandard tableaux of shape lambda/mu with row i entries in b_i..=a_i",
            params: const { &[ints("lambda"), ints("mu"), ints("a"), ints("b")] },
            formula: |a| iv(ssyt_count(&Shape::new(a.v(0).to_vec(), a.v(1).to_vec(), a.v(2).to_vec(), a.v(3).to_vec())?)),
            oracle: Some(|a| ssyt_oracle(&Shape::new(a.v(0).to_vec(), a.v(1).to_vec(), a.v(2).to_vec(), a.v(3).to_vec())?)),
            grid: None,
        },
        Family {
            name: "ssyt-gf",
            about: "generating polynomial of ssyt by the sum of entries",
            params: const { &[ints("lambda"), ints("mu"), ints("a"), ints("b")] },
            formula: |a| ssyt_gf(&Shape::new(a.v(0).to_vec(), a.v(1).to_vec(), a.v(2).to_vec(), a.v(3).to_vec())?).map(|p| Value::poly(&p)),
            oracle: None,
            grid: None,
        },
        Family {
            name: "hook-content",
            about: "semistandard tableaux of shape lambda with entries in 1..=a",
            params: const { &[ints("lambda"), int("a")] },
            formula: |a| iv(hook_content(a.v(0), a.i(1))),
            oracle: Some(|a| ssyt_oracle(&Shape::straight(a.v(0).to_vec(), a.i(1))?)),
            grid: Some(|k| {
                let mut out = Vec::new();
                for l in small_partitions(3, k.min(3)) {
                    for m in 3..=4 {
                        out.push(vec![Arg::Ints(l.clone()), Arg::Int(m)]);
                    }
                }
                out
            }),
        },
        Family {
            name: "hook-content-gf",
            about: "generating polynomial of semistandard tableaux of shape lambda, entries in 1..=a",
            params: const { &[ints("lambda"), int("a")] },
            formula: |a| hook_content_gf(a.v(0), a.i(1)).map(|p| Value::poly(&p)),
            oracle: None,
            grid: None,
        },
        Family {
            name: "chebyshev-u",
            about: "Chebyshev polynomial of the second kind",
            params: N,
            formula: |a| Ok(Value::poly(&chebyshev_u(a.n(0)?))),
            oracle: None,
            grid: None,
        },
        Family {
            name: "q-catalan",
            about: "Carlitz-Riordan q-Catalan polynomial (area of Dyck paths)",
            params: N,
            formula: |a| Ok(Value::poly(&q_catalan_cr(a.n(0)?))),
            oracle: Some(|a| ogf(dyck(a.n(0)?), Statistic::DyckArea)),
            grid: Some(|k| ints_grid(&[(0, k.min(8))])),
        },
        Family {
            name: "q-catalan-maj",
            about: "major-index q-Catalan polynomial",
            params: N,
            formula: |a| q_catalan_maj(a.n(0)?).map(|p| Value::poly(&p)),
            oracle: Some(|a| ogf(dyck(a.n(0)?), Statistic::Maj)),
            grid: Some(|k| ints_grid(&[(0, k.min(8))])),
        },
        Family {
            name: "lukasiewicz",
            about: "Lukasiewicz paths of length n",
            params: N,
            formula: |a| Ok(Value::Int(lukasiewicz_count(a.n(0)?))),
            oracle: Some(|a| {
                let n = a.n(0)? as i64;
                oc(upper(0, 0, n, 0, StepSet::directed(&(-1..=n.max(1)).collect::<Vec<_>>())))
            }),
            grid: Some(|k| ints_grid(&[(0, k.min(9))])),
        },
    ]
}

fn strip_grid(k: i64) -> Vec<Vec<Arg>> {
    let mut out = Vec::new();
    for h in 0..=3 {
        for p in cart(&[(0, h), (0, h), (0, k)]) {
            out.push(vec![Arg::Int(p[0]), Arg::Int(p[1]), Arg::Int(h), Arg::Int(p[2])]);
        }
    }
    out
}

fn turn_grid(k: i64, keep: fn(i64, i64, i64, i64) -> bool) -> Vec<Vec<Arg>> {
    let mut out = Vec::new();
    let h = k.min(5);
    for p in cart(&[(0, 1), (0, 1), (0, h), (0, h), (0, 3)]) {
        if keep(p[0], p[1], p[2], p[3]) {
            for w in KINDS {
                let mut row: Vec<Arg> = p.iter().map(|&x| Arg::Int(x)).collect();
                row.push(Arg::Word(w.to_string()));
                out.push(row);
            }
        }
    }
    out
}

fn jumps_steps(a: &Args, k: usize) -> Result<WeightedStepSet<Integer>> {
    WeightedStepSet::unit(a.v(k))
}

fn int_series(coeffs: Vec<Integer>, order: usize) -> Value {
    Value::Series { order, coeffs }
}

pub fn series_families() -> Vec<SeriesFamily> {
    vec![
        SeriesFamily {
            name: "catalan",
            about: "Catalan numbers",
            params: &[],
            run: |_, o| Ok(int_series((0..=o as i64).map(catalan).collect(), o)),
        },
        SeriesFamily {
            name: "motzkin",
            about: "Motzkin numbers, from M = 1 + z M + z^2 M^2",
            params: &[],
            run: |_, o| Ok(Value::series(&motzkin_gf(o))),
        },
        SeriesFamily { name: "schroeder", about: "large Schroeder numbers", params: &[], run: |_, o| Ok(Value::series(&schroeder_gf(o))) },
        SeriesFamily {
            name: "lukasiewicz",
            about: "Lukasiewicz path counts",
            params: &[],
            run: |_, o| Ok(int_series((0..=o).map(lukasiewicz_count).collect(), o)),
        },
        SeriesFamily {
            name: "strip",
            about: "Motzkin paths from height r to s in 0 <= y <= k, by length",
            params: const { &[int("r"), int("s"), int("k")] },
            run: |a, o| {
                let k = a.n(2)?;
                strip_gf(a.n(0)?, a.n(1)?, k, &unit_weights(k), o).map(|s| Value::series(&s))
            },
        },
        SeriesFamily {
            name: "walks",
            about: "walks with the given jumps staying at height >= 0 and ending at 0 (kernel method)",
            params: const { &[ints("jumps")] },
            run: |a, o| nonneg_walk_gf(&jumps_steps(a, 0)?, o).map(|s| Value::series(&s)),
        },
        SeriesFamily {
            name: "walks-height",
            about: "unrestricted walks with the given jumps ending at height k",
            params: const { &[ints("jumps"), int("k")] },
            run: |a, o| Ok(Value::series(&walk_gf_by_height(&jumps_steps(a, 0)?, a.i(1), o))),
        },
        SeriesFamily {
            name: "small-branch",
            about: "small root u(z) of the kernel for jumps with smallest jump -1",
            params: const { &[ints("jumps")] },
            run: |a, o| small_branch(&jumps_steps(a, 0)?, o).map(|s| Value::series(&s)),
        },
        SeriesFamily {
            name: "q-catalan",
            about: "sum_n C_n(q) z^n from the continued fraction",
            params: &[],
            run: |_, o| {
                let s = q_catalan_cr_cf(o, o)?;
                Ok(Value::PolySeries { order: o, coeffs: s.coeffs().iter().map(|p| p.coeffs().to_vec()).collect() })
            },
        },
        SeriesFamily {
            name: "rogers-ramanujan",
            about: "sum_n q^(n^2 + a n)/(q;q)_n for a in {0, 1}",
            params: const { &[int("a")] },
            run: |a, o| Ok(Value::series(&rogers_ramanujan_sum(rr_index(a)?, o))),
        },
        SeriesFamily {
            name: "rogers-ramanujan-product",
            about: "1/((q^(1+a); q^5) (q^(4-a); q^5)) for a in {0, 1}",
            params: const { &[int("a")] },
            run: |a, o| Ok(Value::series(&rogers_ramanujan_product(rr_index(a)?, o))),
        },
        SeriesFamily {
            name: "ramanujan-cf",
            about: "1 + q/(1 + q^2/(1 + q^3/...))",
            params: &[],
            run: |_, o| ramanujan_cf(o, o).map(|s| Value::series(&s)),
        },
    ]
}

fn rr_index(a: &Args) -> Result<usize> {
    match a.i(0) {
        0 => Ok(0),
        1 => Ok(1),
        x => Err(Error::Precondition(format!("a = {} must be 0 or 1", x))),
    }
}

/// Parses positional strings against a parameter list.
pub fn parse_args(params: &'static [Param], raw: &[String]) -> std::result::Result<Args, String> {
    if raw.len() != params.len() {
        return Err(format!("expected {} parameter(s) <{}>, got {}", params.len(), signature(params), raw.len()));
    }
    let vals = params
        .iter()
        .zip(raw)
        .map(|(p, s)| Arg::parse(p.kind, s).map_err(|e| format!("parameter {}: {}", p.name, e)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Args::new(params, vals))
}

pub fn signature(params: &[Param]) -> String {
    params
        .iter()
        .map(|p| match p.kind {
            Kind::Int => p.name.to_string(),
            Kind::Ints => format!("{},..", p.name),
            Kind::Rat => format!("{}(p/q)", p.name),
            Kind::Word(w) => w.join("|"),
        })
        .collect::<Vec<_>>()
        .join("> <")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let f = families();
        for (i, x) in f.iter().enumerate() {
            assert!(f[i + 1..].iter().all(|y| y.name != x.name), "{}", x.name);
        }
        let s = series_families();
        for (i, x) in s.iter().enumerate() {
            assert!(s[i + 1..].iter().all(|y| y.name != x.name), "{}", x.name);
        }
    }

    #[test]
    fn grids_fit_their_parameters() {
        for f in families() {
            if let Some(g) = f.grid {
                let rows = g(3);
                assert!(!rows.is_empty(), "{}", f.name);
                for row in rows {
                    assert_eq!(row.len(), f.params.len(), "{}", f.name);
                }
            }
        }
    }

    #[test]
    fn args_parse() {
        let p: &'static [Param] = const { &[int("n"), ints("v"), rat("r"), word("k", KINDS)] };
        let a = parse_args(p, &["-3".into(), "1,-2".into(), "2/4".into(), "en".into()]).unwrap();
        assert_eq!(a.i(0), -3);
        assert_eq!(a.v(1), &[1, -2]);
        assert_eq!(a.r(2), &Rational::new(1.into(), 2.into()));
        assert!(parse_args(p, &["x".into(), "1".into(), "1".into(), "ne".into()]).is_err());
        assert!(parse_args(p, &["1".into(), "1".into(), "1".into(), "up".into()]).is_err());
    }
}
