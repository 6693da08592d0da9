use serde_json::Value;
use std::process::{Command, Output};

fn latpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latpath")).args(args).output().expect("run latpath")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut v: Vec<&str> = args.to_vec();
    v.push("--json");
    let o = latpath(&v);
    assert!(o.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("one JSON document")
}

/// The text line for `key`, without the key.
fn line(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(key).filter(|r| r.starts_with(' ')).map(|r| r.trim().to_string()))
        .unwrap_or_else(|| panic!("no {} line in\n{}", key, out))
}

#[test]
fn catalan_three() {
    let o = latpath(&["count", "catalan", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(line(&stdout(&o), "value"), "5");
    let j = json(&["count", "catalan", "3"]);
    assert_eq!(j["value"], "5");
    assert_eq!(j["provenance"], "formula");
    assert_eq!(j["parameters"]["n"], 3);
    assert!(j["elapsed_seconds"].is_number());
}

#[test]
fn motzkin_series() {
    let o = latpath(&["series", "motzkin", "--order", "5"]);
    assert_eq!(line(&stdout(&o), "value"), "1 1 2 4 9 21");
    let j = json(&["series", "motzkin", "--order", "5"]);
    assert_eq!(j["value"]["order"], 5);
    assert_eq!(j["value"]["coefficients"], serde_json::json!(["1", "1", "2", "4", "9", "21"]));
}

#[test]
fn verify_below_diagonal() {
    let o = latpath(&["verify", "below-diagonal", "--max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(line(&stdout(&o), "status"), "OK 784 cases");
    let j = json(&["verify", "below-diagonal", "--max", "6"]);
    assert_eq!(j["status"], "OK");
    assert_eq!(j["cases"], 784);
}

#[test]
fn verify_every_family_with_a_grid() {
    let list = json(&["list"]);
    for f in list["count"].as_array().unwrap() {
        if f["verify"] == true {
            let name = f["name"].as_str().unwrap();
            let o = latpath(&["verify", name, "--max", "3"]);
            assert_eq!(o.status.code(), Some(0), "{}: {}", name, stdout(&o));
        }
    }
}

#[test]
fn verify_suites_take_a_seed() {
    for seed in ["1", "2"] {
        let j = json(&["verify", "minor-summation", "--max", "10", "--seed", seed]);
        assert_eq!(j["status"], "OK");
        assert_eq!(j["parameters"]["seed"], seed.parse::<u64>().unwrap());
    }
}

#[test]
fn oracle_agrees_with_formula() {
    let cases: &[&[&str]] = &[
        &["below-diagonal", "1", "0", "5", "3"],
        &["between-diagonals", "0", "0", "4", "3", "-1", "2"],
        &["kreweras", "3", "2", "2"],
        &["type-a", "2,1,0", "4,2,1"],
        &["affine-c-lockstep", "3,1", "3,1", "6", "4"],
        &["q-catalan", "5"],
        &["turns", "0", "0", "4", "3", "2", "en"],
        &["ssyt", "2,1", "1,0", "3,3", "1,1"],
        &["ladder", "1,2,3", "0,0,1"],
    ];
    for c in cases {
        let f = json(&[&["count"], *c].concat());
        let o = json(&[&["oracle"], *c].concat());
        assert_eq!(f["value"], o["value"], "{:?}", c);
        assert_eq!(o["provenance"], "oracle");
    }
}

/// Rebuilds the command line from a JSON document.
fn argv_of(doc: &Value, params: &[&str]) -> Vec<String> {
    let mut v = vec![doc["command"].as_str().unwrap().to_string(), doc["name"].as_str().unwrap().to_string()];
    for p in params {
        let x = &doc["parameters"][*p];
        v.push(match x {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.clone(),
            Value::Array(xs) => xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
            _ => panic!("parameter {} is {:?}", p, x),
        });
    }
    if let Some(o) = doc["value"].get("order") {
        v.push("--order".into());
        v.push(o.to_string());
    }
    v
}

#[test]
fn json_round_trips() {
    let cases: &[(&[&str], &[&str])] = &[
        (&["count", "catalan", "12"], &["n"]),
        (&["count", "area", "0", "0", "3", "2"], &["a", "b", "c", "d"]),
        (&["count", "gambler-ruin", "2", "5", "8", "1/2", "1/3"], &["a", "total", "rounds", "pa", "pb"]),
        (&["count", "below-slope-general", "2", "1", "6", "3", "2", "last-touch"], &["a", "b", "c", "d", "mu", "variant"]),
        (&["count", "affine-a", "2,0", "4,2", "3"], &["a", "e", "N"]),
        (&["oracle", "strip", "1", "2", "3", "7"], &["r", "s", "k", "n"]),
        (&["series", "walks", "-2,-1,1,2", "--order", "9"], &["jumps"]),
        (&["series", "q-catalan", "--order", "5"], &[]),
        (&["series", "rogers-ramanujan", "1", "--order", "15"], &["a"]),
    ];
    for (args, params) in cases {
        let first = json(args);
        let argv = argv_of(&first, params);
        let refs: Vec<&str> = argv.iter().map(String::as_str).collect();
        let second = json(&refs);
        assert_eq!(first["value"], second["value"], "{:?} -> {:?}", args, argv);
        assert_eq!(first["parameters"], second["parameters"]);
    }
}

#[test]
fn big_integers_are_strings() {
    let j = json(&["count", "catalan", "60"]);
    assert_eq!(j["value"], "1583850964596120042686772779038896");
}

#[test]
fn exit_codes() {
    assert_eq!(latpath(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(latpath(&[]).status.code(), Some(2));
    assert_eq!(latpath(&["count", "no-such-family", "1"]).status.code(), Some(2));
    assert_eq!(latpath(&["count", "catalan"]).status.code(), Some(2));
    assert_eq!(latpath(&["count", "catalan", "x"]).status.code(), Some(2));
    assert_eq!(latpath(&["count", "turns", "0", "0", "2", "2", "1", "sideways"]).status.code(), Some(2));
    assert_eq!(latpath(&["verify", "no-such-family"]).status.code(), Some(2));

    let o = latpath(&["count", "ballot", "2", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("c >= d"));
    assert_eq!(latpath(&["count", "catalan", "-1"]).status.code(), Some(1));

    let o = latpath(&["count", "strip-trig", "0", "0", "3", "2000"]);
    assert_eq!(o.status.code(), Some(3));
    let o = latpath(&["count", "strip-trig", "0", "0", "3", "60", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["error"], "numeric");
    assert_eq!(j["exit_code"], 3);
}

#[test]
fn flags_after_negative_parameters() {
    let o = latpath(&["count", "between-diagonals", "0", "0", "4", "3", "-1", "2", "--json"]);
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["value"], "13");
    assert_eq!(j["parameters"]["s"], -1);
    let j = json(&["series", "walks", "--order=6", "-1,0,1"]);
    assert_eq!(j["value"]["coefficients"], serde_json::json!(["1", "1", "2", "4", "9", "21", "51"]));
}

#[test]
fn text_output_is_aligned() {
    let out = stdout(&latpath(&["series", "q-catalan", "--order", "3"]));
    let col = out.lines().next().unwrap().find("series").unwrap();
    for l in out.lines() {
        assert!(l.len() > col && l[..col].ends_with("  ") && !l[col..].starts_with(' '), "{:?}", l);
    }
}

#[test]
fn selftest_passes() {
    let o = latpath(&["selftest", "--json"]);
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    let crit = j["criteria"].as_array().unwrap();
    assert_eq!(crit.len(), 13);
    for c in crit {
        assert_eq!(c["ok"], true, "{}", c);
    }
    assert_eq!(o.status.code(), Some(0));
}
