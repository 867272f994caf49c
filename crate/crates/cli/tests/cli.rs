use std::f64::consts::{PI, SQRT_2};
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use num_complex::Complex64;
use serde_json::{json, Value};

fn metacover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metacover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    metacover(args).status.code().expect("exited normally")
}

fn schema() -> JSONSchema {
    let schema = json!({
        "type": "object",
        "required": ["schema_version", "command", "inputs", "results", "diagnostics"],
        "additionalProperties": false,
        "properties": {
            "schema_version": { "const": 1 },
            "command": { "enum": ["rootsys", "mgroup", "cfun", "cfactor", "verify", "table"] },
            "inputs": { "type": "object" },
            "results": { "type": "object" },
            "diagnostics": { "type": "array", "items": { "type": "string" } }
        }
    });
    JSONSchema::compile(&schema).expect("schema compiles")
}

fn cvalue_schema() -> JSONSchema {
    let s = json!({
        "type": "object",
        "required": ["kind"],
        "properties": {
            "kind": { "enum": ["finite", "pole", "indeterminate"] },
            "re": { "type": "number" },
            "im": { "type": "number" }
        },
        "if": { "properties": { "kind": { "const": "finite" } } },
        "then": { "required": ["re", "im"] },
        "else": { "not": { "anyOf": [{ "required": ["re"] }, { "required": ["im"] }] } }
    });
    JSONSchema::compile(&s).expect("schema compiles")
}

/// Run with `--json`, check exit 0 and the record schema, return the record.
fn record(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = metacover(&full);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let schema = schema();
    if let Err(errors) = schema.validate(&v) {
        panic!("{args:?}: {:?}", errors.map(|e| e.to_string()).collect::<Vec<_>>());
    }
    // round trip: re-serializing the parsed record gives the same value
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    assert_eq!(v["command"], json!(args[0]));
    v
}

fn finite(v: &Value) -> (f64, f64) {
    assert!(cvalue_schema().is_valid(v), "{v}");
    assert_eq!(v["kind"], "finite", "{v}");
    (v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

#[test]
fn rootsys_records() {
    let a2 = record(&["rootsys", "A2"]);
    let r = &a2["results"];
    assert_eq!(r["root_count"], 6);
    assert_eq!(r["n_phi"], 1);
    assert_eq!(r["all_metaplectic"], true);
    assert_eq!(r["weyl_order"], 6);
    assert_eq!(r["cartan"], json!([[2, -1], [-1, 2]]));

    let g2 = record(&["rootsys", "G2"]);
    assert_eq!(g2["results"]["root_count"], 12);
    assert_eq!(g2["results"]["all_metaplectic"], true);

    let b2 = record(&["rootsys", "B2"]);
    let roots = b2["results"]["roots"].as_array().unwrap();
    assert!(roots.iter().all(|x| x["metaplectic"] == x["long"]));
    assert_eq!(b2["results"]["all_metaplectic"], false);
}

#[test]
fn mgroup_records() {
    let a1 = record(&["mgroup", "A1"]);
    let r = &a1["results"];
    assert_eq!(r["order"], 4);
    assert_eq!(r["pseudospherical_dim"], 1);
    assert_eq!(r["genuine_character_count"], 2);
    assert_eq!(r["pseudospherical_count"], 2);
    let a2 = record(&["mgroup", "A2"]);
    assert_eq!(a2["results"]["order"], 8);
    assert_eq!(a2["results"]["pseudospherical_dim"], 2);
    let b2 = record(&["mgroup", "B2"]);
    assert_eq!(b2["results"]["order"], 8);
    assert_eq!(b2["results"]["abelian"], true);
    assert_eq!(b2["results"]["pseudospherical_dim"], 1);
}

#[test]
fn cfun_records() {
    let v = record(&["cfun", "--n", "0", "--s", "1"]);
    let (re, im) = finite(&v["results"]["value"]);
    assert!((re - PI).abs() < 1e-12 && im.abs() < 1e-12);

    let v = record(&["cfun", "--n", "1", "--s", "1", "--oracle"]);
    let (re, _) = finite(&v["results"]["value"]);
    assert!((re - 2.0 * SQRT_2).abs() < 1e-12);
    assert!(v["results"]["rel_diff"].as_f64().unwrap() < 1e-8);

    // Γ((s+1)/2 + n/4) has a pole at n = 2, s = 0, but so does the
    // numerator Γ(s/2): they cancel and the value is π
    let v = record(&["cfun", "--n", "2", "--s", "0"]);
    let (re, _) = finite(&v["results"]["value"]);
    assert!((re - PI).abs() < 1e-9);

    let v = record(&["cfun", "--n", "0", "--s", "0"]);
    assert_eq!(v["results"]["value"], json!({ "kind": "pole" }));

    let v = record(&["cfun", "--n", "-3", "--s", "0.5-1.5i"]);
    assert_eq!(v["inputs"]["s"], json!({ "re": 0.5, "im": -1.5 }));
}

#[test]
fn cfactor_records() {
    let v = record(&["cfactor", "--type", "A2", "--word", "1", "--s", "1,2"]);
    let (re, _) = finite(&v["results"]["value"]);
    assert!((re - 2.0 * SQRT_2).abs() < 1e-12);

    let a = record(&["cfactor", "--type", "B2", "--word", "1 2 1 2", "--s", "0.7,1.3"]);
    let b = record(&["cfactor", "--type", "B2", "--word", "2 1 2 1", "--s", "0.7,1.3"]);
    let (x, _) = finite(&a["results"]["value"]);
    let (y, _) = finite(&b["results"]["value"]);
    assert!((x - y).abs() <= 1e-10 * x.abs());

    let all = record(&["cfactor", "--type", "B2", "--word", "1 2 1 2", "--s", "0.7,1.3", "--all-words"]);
    assert_eq!(all["results"]["all_words"].as_array().unwrap().len(), 2);
    assert!(all["results"]["max_deviation"].as_f64().unwrap() < 1e-10);

    // G2 word "1 2": two factors, each a c_half of the transported coordinate
    let g = record(&["cfactor", "--type", "G2", "--word", "1 2", "--s", "0.9+0.2i,1.4"]);
    let trace = g["results"]["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 2);
    let mut prod = Complex64::new(1.0, 0.0);
    for t in trace {
        let (re, im) = finite(&t["value"]);
        let arg = Complex64::new(t["argument"]["re"].as_f64().unwrap(), t["argument"]["im"].as_f64().unwrap());
        let half = cfun_half(arg);
        assert!((Complex64::new(re, im) - half).norm() < 1e-10 * half.norm());
        prod *= half;
    }
    let (re, im) = finite(&g["results"]["value"]);
    assert!((Complex64::new(re, im) - prod).norm() < 1e-10 * prod.norm());
}

/// c_half via the CLI's own `cfun --n 1`, an independent code path from the
/// trace.
fn cfun_half(s: Complex64) -> Complex64 {
    let arg = format!("{}{:+}i", s.re, s.im);
    let v = record(&["cfun", "--n", "1", "--s", &arg]);
    let (re, im) = finite(&v["results"]["value"]);
    Complex64::new(re, im)
}

#[test]
fn verify_exit_codes() {
    let v = record(&["verify", "kubota"]);
    assert_eq!(v["results"]["passed"], true);
    assert_eq!(v["inputs"]["seed"], 20_240_917);
    let v = record(&["verify", "intertwine", "--seed", "7"]);
    assert_eq!(v["results"]["passed"], true);
    assert_eq!(code(&["verify", "nosuch"]), 2);
}

#[test]
fn tables() {
    let out = metacover(&["table", "--type", "A1", "--re", "0.1:3:30"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s1_re,s1_im,value_re,value_im,pole"));
    let values: Vec<f64> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f.len(), 5);
            assert_eq!(f[4], "0");
            f[2].parse().unwrap()
        })
        .collect();
    assert_eq!(values.len(), 30);
    // c(s) decreases along the positive real axis
    assert!(values.windows(2).all(|w| w[1] < w[0]));

    let out = metacover(&["table", "--type", "B2", "--re", "0.5:2:5,0.5:2:5"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 26);

    let v = record(&["table", "--type", "B2", "--word", "longest", "--re", "0.5:2:5,0.5:2:5"]);
    assert_eq!(v["results"]["row_count"], 25);
    assert_eq!(v["inputs"]["word"].as_array().unwrap().len(), 4);

    let v = record(&["table", "--type", "A2", "--word", "1", "--re", "1:1:1,0.5:1:2", "--im", "0:1:3,0:0:1"]);
    assert_eq!(v["results"]["row_count"], 6);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["rootsys", "Z9"]), 2);
    assert_eq!(code(&["rootsys", "G3"]), 2);
    assert_eq!(code(&["table", "--type", "A1", "--re", "1:0:5"]), 2);
    assert_eq!(code(&["table", "--type", "A1", "--re", "0:1:0"]), 2);
    assert_eq!(code(&["table", "--type", "A1", "--re", "0:1"]), 2);
    assert_eq!(code(&["table", "--type", "B2", "--re", "0:1:3"]), 2);
    assert_eq!(code(&["table", "--type", "A2", "--re", "0:1:1000,0:1:1001"]), 2);
    assert_eq!(code(&["cfactor", "--type", "B2", "--word", "1 1", "--s", "1,1"]), 2);
    assert_eq!(code(&["cfactor", "--type", "B2", "--word", "1 3", "--s", "1,1"]), 2);
    assert_eq!(code(&["cfactor", "--type", "B2", "--word", "1", "--s", "1"]), 2);
    assert_eq!(code(&["cfun", "--n", "1", "--s", "abc"]), 2);
    assert_eq!(code(&["cfun", "--n", "1", "--s", "-1", "--oracle"]), 2);
    assert_eq!(code(&["nosuch"]), 2);
    assert_eq!(code(&["cfun", "--s", "1"]), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "cfun", "--json"],
        vec!["table", "--type", "G2", "--re", "0.3:2:4,0.3:2:4", "--im", "0:1:2,0:0:1"],
        vec!["mgroup", "D4"],
        vec!["rootsys", "F4", "--json"],
    ] {
        let a = metacover(&args);
        let b = metacover(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn every_command_accepts_json() {
    for args in [
        vec!["rootsys", "E6"],
        vec!["mgroup", "C3"],
        vec!["cfun", "--n", "3", "--s", "2+i", "--oracle"],
        vec!["cfactor", "--type", "A3", "--word", "longest", "--s", "1,2,3"],
        vec!["verify", "rootsys"],
        vec!["table", "--type", "A1", "--re", "1:2:3"],
    ] {
        let v = record(&args);
        assert_eq!(v["schema_version"], 1);
    }
}
