mod families;

use clap::{Parser, Subcommand};
use families::{families, parse_args, series_families, signature, Args, Family, Value};
use latpath::checks::{kernel_suite, minor_summation_suite, nonint_turn_suite, orthopoly_suite, q_suite, run_acceptance, Report};
use serde_json::{json, Value as Json};
use std::io::Write;
use std::process::ExitCode;
use std::thread;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "latpath", version, about = "Exact lattice path enumeration")]
struct Cli {
    /// Print one JSON document instead of aligned text
    #[arg(long, global = true)]
    json: bool,
    /// Truncation order for `series`
    #[arg(long, global = true, value_name = "N")]
    order: Option<usize>,
    /// Sweep size for `verify`
    #[arg(long, global = true, value_name = "K")]
    max: Option<i64>,
    /// Seed for randomized checks
    #[arg(long, global = true, value_name = "S")]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a closed formula
    Count {
        family: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Count the same family by brute-force enumeration
    Oracle {
        family: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Sweep a family up to --max and compare formula with oracle
    Verify { family: String },
    /// Generating function coefficients up to --order
    Series {
        family: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Run every acceptance criterion
    Selftest,
    /// List the available families
    List,
}

enum Fail {
    Usage(String),
    Lib(latpath::Error),
    Mismatch,
}

impl From<latpath::Error> for Fail {
    fn from(e: latpath::Error) -> Self {
        Fail::Lib(e)
    }
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Usage(_) => 2,
            Fail::Lib(latpath::Error::Numeric(_)) => 3,
            Fail::Lib(_) | Fail::Mismatch => 1,
        }
    }
}

const DEFAULT_MAX: i64 = 6;
const DEFAULT_ORDER: usize = 10;

/// Ordered output fields: key, JSON value, text rendering.
struct Doc(Vec<(&'static str, Json, Vec<String>)>);

impl Doc {
    fn new() -> Self {
        Doc(Vec::new())
    }

    fn field(mut self, key: &'static str, j: Json, text: impl Into<String>) -> Self {
        self.0.push((key, j, vec![text.into()]));
        self
    }

    fn lines(mut self, key: &'static str, j: Json, text: Vec<String>) -> Self {
        self.0.push((key, j, text));
        self
    }

    fn elapsed(self, t: Instant) -> Self {
        let s = t.elapsed().as_secs_f64();
        self.field("elapsed_seconds", json!(s), format!("{:.6}s", s))
    }

    fn print(&self, as_json: bool) {
        let mut out = std::io::stdout().lock();
        if as_json {
            let mut m = serde_json::Map::new();
            for (k, j, _) in &self.0 {
                m.insert(k.to_string(), j.clone());
            }
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&Json::Object(m)).unwrap());
            return;
        }
        let w = self.0.iter().map(|(k, _, _)| k.len()).max().unwrap_or(0);
        for (k, _, text) in &self.0 {
            for (i, line) in text.iter().enumerate() {
                let key = if i == 0 { *k } else { "" };
                if writeln!(out, "{:<w$}  {}", key, line, w = w).is_err() {
                    return;
                }
            }
        }
    }
}

fn find_family(name: &str) -> Result<Family, Fail> {
    families().into_iter().find(|f| f.name == name).ok_or_else(|| {
        let names: Vec<&str> = families().iter().map(|f| f.name).collect();
        Fail::Usage(format!("unknown family {:?}; known: {}", name, names.join(", ")))
    })
}

fn parse(f: &Family, raw: &[String]) -> Result<Args, Fail> {
    parse_args(f.params, raw).map_err(|e| Fail::Usage(format!("{}: {}", f.name, e)))
}

fn value_doc(command: &str, name: &str, args: &Args, v: &Value, provenance: &str, t: Instant) -> Doc {
    let mut d = Doc::new().field("command", json!(command), command).field("name", json!(name), name);
    d = d.field("parameters", args.to_json(), args.to_string());
    if let Value::Series { order, .. } | Value::PolySeries { order, .. } = v {
        d = d.field("order", json!(order), order.to_string());
    }
    d.lines("value", v.to_json(), v.lines()).field("provenance", json!(provenance), provenance).elapsed(t)
}

fn count(name: &str, raw: &[String], oracle: bool) -> Result<Doc, Fail> {
    let t = Instant::now();
    let f = find_family(name)?;
    let args = parse(&f, raw)?;
    let (v, provenance) = if oracle {
        let o = f.oracle.ok_or_else(|| Fail::Usage(format!("family {} has no oracle", f.name)))?;
        (o(&args)?, "oracle")
    } else {
        ((f.formula)(&args)?, "formula")
    };
    Ok(value_doc(if oracle { "oracle" } else { "count" }, f.name, &args, &v, provenance, t))
}

fn series(name: &str, raw: &[String], order: usize) -> Result<Doc, Fail> {
    let t = Instant::now();
    let f = series_families().into_iter().find(|f| f.name == name).ok_or_else(|| {
        let names: Vec<&str> = series_families().iter().map(|f| f.name).collect();
        Fail::Usage(format!("unknown series {:?}; known: {}", name, names.join(", ")))
    })?;
    let args = parse_args(f.params, raw).map_err(|e| Fail::Usage(format!("{}: {}", f.name, e)))?;
    let v = (f.run)(&args, order)?;
    Ok(value_doc("series", f.name, &args, &v, "formula", t))
}

struct Case {
    args: Args,
    formula: latpath::Result<Value>,
    oracle: latpath::Result<Value>,
}

impl Case {
    fn ok(&self) -> bool {
        matches!((&self.formula, &self.oracle), (Ok(a), Ok(b)) if a == b)
    }
}

fn show(r: &latpath::Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {}", e),
    }
}

/// Formula against oracle on every grid point, fanned out over threads
/// and collected in grid order.
fn sweep(f: &Family, max: i64) -> Vec<Case> {
    let (grid, oracle) = (f.grid.unwrap(), f.oracle.unwrap());
    let rows: Vec<Args> = grid(max).into_iter().map(|r| Args::new(f.params, r)).collect();
    let workers = thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(rows.len().max(1));
    let chunk = rows.len().div_ceil(workers).max(1);
    let formula = f.formula;
    thread::scope(|s| {
        let handles: Vec<_> = rows
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || part.iter().map(|a| Case { args: a.clone(), formula: formula(a), oracle: oracle(a) }).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    })
}

fn verify_family(f: &Family, max: i64) -> (Doc, bool) {
    let t = Instant::now();
    let cases = sweep(f, max);
    let n = cases.len();
    let bad = cases.iter().position(|c| !c.ok());
    let mut d = Doc::new()
        .field("command", json!("verify"), "verify")
        .field("name", json!(f.name), f.name)
        .field("parameters", json!({ "max": max }), format!("max={}", max))
        .field("cases", json!(n), n.to_string());
    match bad {
        None => {
            d = d.field("status", json!("OK"), format!("OK {} cases", n));
        }
        Some(i) => {
            let c = &cases[i];
            let argv: Vec<String> = c.args.0.iter().map(|(_, a)| a.to_string()).collect();
            let failed = cases.iter().filter(|c| !c.ok()).count();
            d = d.field("status", json!("MISMATCH"), format!("MISMATCH in {} of {} cases", failed, n)).field(
                "mismatch",
                json!({
                    "index": i,
                    "parameters": c.args.to_json(),
                    "formula": c.formula.as_ref().map(|v| v.to_json()).unwrap_or_else(|e| json!({ "error": e.to_string() })),
                    "oracle": c.oracle.as_ref().map(|v| v.to_json()).unwrap_or_else(|e| json!({ "error": e.to_string() })),
                    "reproduce": format!("latpath count {} {}", f.name, argv.join(" ")),
                }),
                format!("{} {}: formula {} vs oracle {}", f.name, c.args, show(&c.formula), show(&c.oracle)),
            );
            d = d.field("reproduce", json!(argv), format!("latpath count {} {}", f.name, argv.join(" ")));
        }
    }
    (d.field("provenance", json!(["formula", "oracle"]), "formula vs oracle").elapsed(t), bad.is_none())
}

fn report_doc(name: &str, params: Json, ptext: String, r: &Report, t: Instant) -> Doc {
    let lines: Vec<String> = r.to_string().lines().map(str::to_string).collect();
    Doc::new()
        .field("command", json!("verify"), "verify")
        .field("name", json!(name), name)
        .field("parameters", params, ptext)
        .field("cases", json!(r.cases), r.cases.to_string())
        .lines(
            "status",
            json!(if r.ok() { "OK" } else { "MISMATCH" }),
            if r.ok() { vec![format!("OK {} cases", r.cases)] } else { lines.clone() },
        )
        .field("mismatches", json!(r.mismatches), r.mismatches.len().to_string())
        .field("provenance", json!(["formula", "oracle"]), "formula vs oracle")
        .elapsed(t)
}

const SUITES: &[&str] = &["kernel", "minor-summation", "nonint-turns", "orthopoly", "q-counting"];

fn verify_suite(name: &str, max: Option<i64>, seed: u64) -> Result<(Doc, bool), Fail> {
    let t = Instant::now();
    let m = |d: i64| max.unwrap_or(d).max(0);
    let (r, k) = match name {
        "kernel" => (kernel_suite(m(12) as usize, m(12).min(8) as usize, seed), m(12)),
        "minor-summation" => (minor_summation_suite(&[(2, 0, 2), (2, 0, 3), (3, 1, 4), (4, 2, 4)], m(50) as usize, seed), m(50)),
        "nonint-turns" => (nonint_turn_suite(m(3), 100, seed), m(3)),
        "orthopoly" => (orthopoly_suite(25, m(5) as usize, seed), m(5)),
        "q-counting" => (q_suite(m(8) as usize, m(6) as usize, 30, 20), m(8)),
        _ => {
            let names: Vec<&str> = families().into_iter().filter(|f| f.grid.is_some()).map(|f| f.name).collect();
            return Err(Fail::Usage(format!("cannot verify {:?}; known: {}, {}", name, names.join(", "), SUITES.join(", "))));
        }
    };
    let ok = r.ok();
    Ok((report_doc(name, json!({ "max": k, "seed": seed }), format!("max={} seed={}", k, seed), &r, t), ok))
}

fn verify(name: &str, max: Option<i64>, seed: u64) -> Result<(Doc, bool), Fail> {
    if let Some(mx) = max {
        if mx < 0 {
            return Err(Fail::Usage(format!("--max must be >= 0, got {}", mx)));
        }
    }
    match families().into_iter().find(|f| f.name == name && f.grid.is_some()) {
        Some(f) => Ok(verify_family(&f, max.unwrap_or(DEFAULT_MAX))),
        None => verify_suite(name, max, seed),
    }
}

fn selftest() -> (Doc, bool) {
    let t = Instant::now();
    let outcomes = run_acceptance();
    let passed = outcomes.iter().filter(|o| o.ok()).count();
    let crit: Vec<Json> = outcomes
        .iter()
        .map(|o| json!({ "id": o.id, "title": o.title, "ok": o.ok(), "cases": o.cases(), "max_residual": o.residual }))
        .collect();
    let text: Vec<String> = outcomes.iter().flat_map(|o| o.to_string().lines().map(str::to_string).collect::<Vec<_>>()).collect();
    let all = passed == outcomes.len();
    let d = Doc::new()
        .field("command", json!("selftest"), "selftest")
        .lines("criteria", json!(crit), text)
        .field("passed", json!(passed), format!("{} of {}", passed, outcomes.len()))
        .field("status", json!(if all { "OK" } else { "FAILED" }), if all { "OK" } else { "FAILED" })
        .elapsed(t);
    (d, all)
}

fn list() -> Doc {
    let fs = families();
    let w = fs.iter().map(|f| f.name.len()).max().unwrap_or(0);
    let mut text = Vec::new();
    let mut j = Vec::new();
    for f in &fs {
        let tag = if f.grid.is_some() {
            "verify"
        } else if f.oracle.is_some() {
            "oracle"
        } else {
            ""
        };
        text.push(format!(
            "{:<w$}  <{}>  {} {}",
            f.name,
            signature(f.params),
            f.about,
            if tag.is_empty() { String::new() } else { format!("[{}]", tag) },
            w = w
        ));
        j.push(json!({ "name": f.name, "parameters": f.params.iter().map(|p| p.name).collect::<Vec<_>>(), "about": f.about, "oracle": f.oracle.is_some(), "verify": f.grid.is_some() }));
    }
    let ss = series_families();
    let mut stext = Vec::new();
    let mut sj = Vec::new();
    for f in &ss {
        stext.push(format!("{:<w$}  <{}>  {}", f.name, signature(f.params), f.about, w = w));
        sj.push(json!({ "name": f.name, "parameters": f.params.iter().map(|p| p.name).collect::<Vec<_>>(), "about": f.about }));
    }
    Doc::new().lines("count", json!(j), text).lines("series", json!(sj), stext).field("suites", json!(SUITES), SUITES.join(" "))
}

fn run(cli: &Cli) -> Result<(Doc, bool), Fail> {
    match &cli.cmd {
        Cmd::Count { family, params } => Ok((count(family, params, false)?, true)),
        Cmd::Oracle { family, params } => Ok((count(family, params, true)?, true)),
        Cmd::Series { family, params } => Ok((series(family, params, cli.order.unwrap_or(DEFAULT_ORDER))?, true)),
        Cmd::Verify { family } => verify(family, cli.max, cli.seed.unwrap_or(1)),
        Cmd::Selftest => Ok(selftest()),
        Cmd::List => Ok((list(), true)),
    }
}

/// Parameters accept leading hyphens (negative numbers and vectors), so
/// global flags written after them arrive as parameters; move them back.
fn lift_flags(cli: &mut Cli) -> Result<(), Fail> {
    let params = match &mut cli.cmd {
        Cmd::Count { params, .. } | Cmd::Oracle { params, .. } | Cmd::Series { params, .. } => std::mem::take(params),
        _ => return Ok(()),
    };
    let mut kept = Vec::new();
    let mut it = params.into_iter();
    while let Some(p) = it.next() {
        let (flag, inline) = match p.split_once('=') {
            Some((f, v)) if f.starts_with("--") => (f.to_string(), Some(v.to_string())),
            _ => (p.clone(), None),
        };
        let mut value = |name: &str| -> Result<String, Fail> {
            inline.clone().or_else(|| it.next()).ok_or_else(|| Fail::Usage(format!("{} needs a value", name)))
        };
        let bad = |name: &str, v: &str| Fail::Usage(format!("invalid value {:?} for {}", v, name));
        match flag.as_str() {
            "--json" if inline.is_none() => cli.json = true,
            "--order" => {
                let v = value("--order")?;
                cli.order = Some(v.parse().map_err(|_| bad("--order", &v))?);
            }
            "--max" => {
                let v = value("--max")?;
                cli.max = Some(v.parse().map_err(|_| bad("--max", &v))?);
            }
            "--seed" => {
                let v = value("--seed")?;
                cli.seed = Some(v.parse().map_err(|_| bad("--seed", &v))?);
            }
            _ if p.starts_with("--") => return Err(Fail::Usage(format!("unexpected argument {:?}", p))),
            _ => kept.push(p),
        }
    }
    if let Cmd::Count { params, .. } | Cmd::Oracle { params, .. } | Cmd::Series { params, .. } = &mut cli.cmd {
        *params = kept;
    }
    Ok(())
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    let lifted = lift_flags(&mut cli);
    match lifted.and_then(|_| run(&cli)) {
        Ok((doc, ok)) => {
            doc.print(cli.json);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(Fail::Mismatch.code())
            }
        }
        Err(e) => {
            let (kind, msg) = match &e {
                Fail::Usage(m) => ("usage", m.clone()),
                Fail::Lib(err) => (
                    match err {
                        latpath::Error::Numeric(_) => "numeric",
                        latpath::Error::Precondition(_) => "precondition",
                        latpath::Error::Unsupported(_) => "unsupported",
                        latpath::Error::Unbounded(_) => "unbounded",
                        latpath::Error::NotInvertible(_) => "not-invertible",
                    },
                    err.to_string(),
                ),
                Fail::Mismatch => ("mismatch", String::new()),
            };
            if cli.json {
                let doc = json!({ "error": kind, "message": msg, "exit_code": e.code() });
                let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            eprintln!("error: {}", msg);
            if let Fail::Usage(_) = e {
                eprintln!("run `latpath list` for families, `latpath --help` for usage");
            }
            ExitCode::from(e.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use families::{Arg, Param};

    const N: &[Param] = &[Param { name: "n", kind: families::Kind::Int }];

    fn fake(formula: fn(&Args) -> latpath::Result<Value>) -> Family {
        Family {
            name: "fake",
            about: "",
            params: N,
            formula,
            oracle: Some(|a| Ok(Value::Int(a.0[0].1.to_string().parse::<i64>().unwrap().into()))),
            grid: Some(|k| (0..=k).map(|n| vec![Arg::Int(n)]).collect()),
        }
    }

    fn field<'a>(d: &'a Doc, key: &str) -> &'a Json {
        &d.0.iter().find(|(k, _, _)| *k == key).unwrap().1
    }

    #[test]
    fn verify_reports_first_mismatch() {
        let f = fake(|a| {
            let n = a.0[0].1.to_string().parse::<i64>().unwrap();
            Ok(Value::Int(if n == 4 { 99.into() } else { n.into() }))
        });
        let (d, ok) = verify_family(&f, 6);
        assert!(!ok);
        let m = field(&d, "mismatch");
        assert_eq!(m["parameters"]["n"], 4);
        assert_eq!(m["formula"], "99");
        assert_eq!(m["oracle"], "4");
        assert_eq!(m["reproduce"], "latpath count fake 4");
    }

    #[test]
    fn verify_passes_when_all_agree() {
        let f = fake(|a| Ok(Value::Int(a.0[0].1.to_string().parse::<i64>().unwrap().into())));
        let (d, ok) = verify_family(&f, 6);
        assert!(ok);
        assert_eq!(field(&d, "cases"), 7);
    }

    #[test]
    fn formula_errors_count_as_mismatches() {
        let f = fake(|_| Err(latpath::Error::Numeric("boom".into())));
        let (d, ok) = verify_family(&f, 2);
        assert!(!ok);
        assert_eq!(field(&d, "mismatch")["formula"]["error"], "numeric guard failed: boom");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Fail::Usage(String::new()).code(), 2);
        assert_eq!(Fail::Lib(latpath::Error::Precondition(String::new())).code(), 1);
        assert_eq!(Fail::Lib(latpath::Error::Numeric(String::new())).code(), 3);
        assert_eq!(Fail::Mismatch.code(), 1);
    }
}
