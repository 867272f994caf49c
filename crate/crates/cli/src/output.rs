//! Output records and their deterministic JSON, text and CSV renderings.

use std::io;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};
use serde_json::{json, Value};

use metacover::cfunction::CValue;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug)]
pub struct OutputRecord {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub diagnostics: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &'static str, inputs: Value, results: Value) -> Self {
        Self {
            command,
            inputs,
            results,
            diagnostics: Vec::new(),
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "diagnostics": self.diagnostics,
        })
    }

    pub fn to_json(&self) -> String {
        to_json_string(&self.to_value())
    }

    /// `path = value` lines, one per leaf.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        flatten(&mut out, self.command, &self.results);
        for d in &self.diagnostics {
            out.push_str(&format!("warning: {d}\n"));
        }
        out
    }
}

/// Floats with 17 significant digits so every run prints the same bytes.
struct FixedFloats(PrettyFormatter<'static>);

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(float(value).as_bytes())
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Pretty JSON with sorted keys (serde_json's default map is ordered).
pub fn to_json_string(v: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = Serializer::with_formatter(&mut buf, FixedFloats(PrettyFormatter::new()));
    v.serialize(&mut ser).expect("writing to a Vec cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

pub fn float(x: f64) -> String {
    if x == 0.0 {
        // no "-0" in output
        return format!("{:.16e}", 0.0);
    }
    format!("{x:.16e}")
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn cvalue(v: &CValue<f64>) -> Value {
    match v {
        CValue::Finite(z) => json!({ "kind": "finite", "re": z.re, "im": z.im }),
        CValue::Pole => json!({ "kind": "pole" }),
        CValue::Indeterminate => json!({ "kind": "indeterminate" }),
    }
}

fn flatten(out: &mut String, path: &str, v: &Value) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(out, &format!("{path}.{k}"), x);
            }
        }
        Value::Array(a) if !a.is_empty() && a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(out, &format!("{path}[{i}]"), x);
            }
        }
        _ => out.push_str(&format!("{path} = {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => float(x),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            format!("[{}]", items.join(", "))
        }
        Value::Object(m) if m.is_empty() => "{}".into(),
        other => other.to_string(),
    }
}

/// CSV with a header row; floats in the same fixed format as JSON.
pub struct Csv {
    out: String,
}

impl Csv {
    pub fn new(header: &[String]) -> Self {
        Self {
            out: format!("{}\n", header.join(",")),
        }
    }

    pub fn row(&mut self, fields: &[String]) {
        self.out.push_str(&fields.join(","));
        self.out.push('\n');
    }

    pub fn finish(self) -> String {
        self.out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(float(std::f64::consts::PI), "3.1415926535897931e0");
        assert_eq!(float(-0.0), "0.0000000000000000e0");
        let s = to_json_string(&json!({"b": 1.5, "a": [1, 0.25]}));
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert!(s.contains("1.5000000000000000e0"));
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["a"][1], json!(0.25));
    }
}
