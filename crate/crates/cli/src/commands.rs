//! One function per subcommand, each producing an [`OutputRecord`].

use num_complex::Complex64;
use serde_json::{json, Value};

use metacover::cfunction::{c_n_over_2, quad_oracle, CValue, QuadratureSpec};
use metacover::cover_torus::{MElement, MGroup};
use metacover::intertwine::{c_factor, SpectralParam};
use metacover::rootsys::{RootSystem, DEFAULT_REDUCED_WORD_BOUND};
use metacover::verify::{run_suite, Suite};
use metacover::Error;

use crate::output::{self, Csv, OutputRecord};
use crate::parse::{self, Axis};

/// Characters beyond this count are summarized rather than listed.
const CHARACTER_LIST_LIMIT: usize = 1024;
/// Largest table the `table` command will evaluate.
pub const TABLE_ROW_LIMIT: u64 = 1_000_000;

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or inputs outside a precondition: exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

type CmdResult<T> = Result<T, Failure>;

fn root_system(name: &str) -> CmdResult<RootSystem> {
    Ok(RootSystem::from_type(name)?)
}

fn param(rs: &RootSystem, s: &str) -> CmdResult<SpectralParam<Complex64>> {
    let coords = parse::complex_vector(s)?;
    if coords.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            got: coords.len(),
            rank: rs.rank(),
        }
        .into());
    }
    Ok(SpectralParam::new(coords))
}

fn param_json(s: &SpectralParam<Complex64>) -> Value {
    Value::Array(s.coords().iter().map(|z| output::complex(*z)).collect())
}

fn melement(m: &MElement, rank: usize) -> Value {
    json!({
        "exponents": m.exponents(rank),
        "sign": if m.sign().is_minus() { "-" } else { "+" },
    })
}

pub fn rootsys(name: &str) -> CmdResult<OutputRecord> {
    let rs = root_system(name)?;
    let spec = rs.spec();
    let mut roots = Vec::with_capacity(rs.roots().len());
    let mut all_metaplectic = true;
    for r in rs.roots() {
        let metaplectic = rs.is_metaplectic(r)?;
        all_metaplectic &= metaplectic;
        roots.push(json!({
            "coords": r.coords(),
            "positive": r.is_positive(),
            "long": rs.is_long(r)?,
            "metaplectic": metaplectic,
        }));
    }
    let results = json!({
        "type": spec.to_string(),
        "rank": rs.rank(),
        "cartan": rs.cartan(),
        "n_phi": rs.n_phi(),
        "weyl_order": spec.weyl_order(),
        "root_count": rs.roots().len(),
        "positive_root_count": rs.positive_roots().len(),
        "all_metaplectic": all_metaplectic,
        "roots": roots,
    });
    Ok(OutputRecord::new("rootsys", json!({ "type": name }), results))
}

pub fn mgroup(name: &str) -> CmdResult<OutputRecord> {
    let rs = root_system(name)?;
    let m = MGroup::new(&rs)?;
    let dim = m.pseudospherical_dim()?;
    let chars = m.genuine_central_characters();
    let rank = rs.rank();
    let flags: Vec<bool> = chars.iter().map(|c| m.is_pseudospherical(c)).collect();
    let mut results = json!({
        "type": rs.spec().to_string(),
        "order": m.order(),
        "center_order": m.center().order(),
        "abelian": m.is_abelian(),
        "genuine_character_count": chars.len(),
        "pseudospherical_dim": dim,
        "pseudospherical_count": flags.iter().filter(|f| **f).count(),
        "center_generators": chars
            .first()
            .map(|c| c.generators().iter().map(|g| melement(g, rank)).collect::<Vec<_>>())
            .unwrap_or_default(),
    });
    let mut record = OutputRecord::new("mgroup", json!({ "type": name }), Value::Null);
    if chars.len() <= CHARACTER_LIST_LIMIT {
        results["characters"] = chars
            .iter()
            .zip(&flags)
            .map(|(c, f)| {
                json!({
                    "generator_values": c.generator_values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "pseudospherical": f,
                })
            })
            .collect();
    } else {
        record
            .diagnostics
            .push(format!("{} characters; listing omitted above {CHARACTER_LIST_LIMIT}", chars.len()));
    }
    record.results = results;
    Ok(record)
}

pub fn cfun(n: i64, s: &str, oracle: bool) -> CmdResult<OutputRecord> {
    let s_val = parse::complex(s)?;
    let value = c_n_over_2(n, s_val);
    let mut results = json!({ "value": output::cvalue(&value) });
    let mut diagnostics = Vec::new();
    if oracle {
        match quad_oracle(n, s_val, &QuadratureSpec::default()) {
            Ok(q) => {
                results["oracle"] = output::complex(q);
                if let CValue::Finite(v) = value {
                    let scale = v.norm().max(q.norm());
                    let diff = if scale == 0.0 { 0.0 } else { (v - q).norm() / scale };
                    results["rel_diff"] = json!(diff);
                }
            }
            Err(e @ Error::QuadraturePrecondition(_)) => return Err(e.into()),
            Err(e) => diagnostics.push(format!("oracle failed: {e}")),
        }
    }
    let inputs = json!({ "n": n, "s": output::complex(s_val), "oracle": oracle });
    let mut record = OutputRecord::new("cfun", inputs, results);
    record.diagnostics = diagnostics;
    Ok(record)
}

fn rel_deviation(a: &CValue<f64>, b: &CValue<f64>) -> Option<f64> {
    match (a, b) {
        (CValue::Finite(x), CValue::Finite(y)) => {
            let scale = x.norm().max(y.norm());
            Some(if scale == 0.0 { 0.0 } else { (x - y).norm() / scale })
        }
        _ if a == b => Some(0.0),
        _ => None,
    }
}

pub fn cfactor(name: &str, word: &str, s: &str, all_words: bool) -> CmdResult<OutputRecord> {
    let rs = root_system(name)?;
    let w = parse::word(&rs, word)?;
    let sp = param(&rs, s)?;
    let res = c_factor(&rs, &w, &sp)?;
    let trace: Vec<Value> = res
        .trace
        .iter()
        .map(|t| {
            json!({
                "index": t.index + 1,
                "argument": output::complex(t.argument),
                "value": output::cvalue(&t.value),
            })
        })
        .collect();
    let mut results = json!({
        "word": w.one_based(),
        "value": output::cvalue(&res.value),
        "trace": trace,
    });
    let mut diagnostics = Vec::new();
    if all_words {
        let elem = rs.element(&w)?;
        let words = rs.all_reduced_words(&elem, DEFAULT_REDUCED_WORD_BOUND)?;
        let mut values = Vec::with_capacity(words.len());
        let mut listed = Vec::with_capacity(words.len());
        for other in &words {
            let v = c_factor(&rs, other, &sp)?.value;
            listed.push(json!({ "word": other.one_based(), "value": output::cvalue(&v) }));
            values.push(v);
        }
        let mut max_dev = Some(0.0f64);
        for (i, a) in values.iter().enumerate() {
            for b in &values[i + 1..] {
                max_dev = match (max_dev, rel_deviation(a, b)) {
                    (Some(m), Some(d)) => Some(m.max(d)),
                    _ => None,
                };
            }
        }
        if max_dev.is_none() {
            diagnostics.push("reduced words disagree on the kind of value".to_string());
        }
        results["all_words"] = Value::Array(listed);
        results["max_deviation"] = json!(max_dev);
    }
    let inputs = json!({
        "type": name,
        "word": word,
        "s": param_json(&sp),
        "all_words": all_words,
    });
    let mut record = OutputRecord::new("cfactor", inputs, results);
    record.diagnostics = diagnostics;
    Ok(record)
}

/// Returns the record and whether every check passed.
pub fn verify(suite: &str, seed: u64) -> CmdResult<(OutputRecord, bool)> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>()?]
    };
    let mut all_passed = true;
    let mut reports = Vec::new();
    for s in suites {
        let report = run_suite(s, seed);
        all_passed &= report.passed();
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "passed": c.passed,
                    "cases": c.cases,
                    "max_error": c.max_error,
                    "tolerance": c.tolerance,
                    "detail": c.detail,
                })
            })
            .collect();
        reports.push(json!({ "suite": s.name(), "passed": report.passed(), "checks": checks }));
    }
    let results = json!({ "passed": all_passed, "suites": reports });
    let inputs = json!({ "suite": suite, "seed": seed });
    Ok((OutputRecord::new("verify", inputs, results), all_passed))
}

pub enum TableOutput {
    Csv(String),
    Record(OutputRecord),
}

pub struct TableArgs<'a> {
    pub type_name: &'a str,
    pub word: &'a str,
    pub re: &'a str,
    pub im: Option<&'a str>,
    pub json: bool,
}

fn cartesian(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    axes.iter().fold(vec![Vec::new()], |acc, points| {
        acc.iter()
            .flat_map(|prefix| {
                points.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(*p);
                    v
                })
            })
            .collect()
    })
}

pub fn table(args: &TableArgs) -> CmdResult<TableOutput> {
    let rs = root_system(args.type_name)?;
    let w = parse::word(&rs, args.word)?;
    if !rs.is_reduced(&w)? {
        return Err(Error::NotReduced(w.to_string()).into());
    }
    let rank = rs.rank();
    let re = parse::axes(args.re)?;
    let im = match args.im {
        Some(g) => parse::axes(g)?,
        None => vec![Axis { start: 0.0, stop: 0.0, count: 1 }; rank],
    };
    for (label, axes) in [("--re", &re), ("--im", &im)] {
        if axes.len() != rank {
            return Err(Failure::Usage(format!(
                "{label} has {} axes, expected one per coordinate ({rank})",
                axes.len()
            )));
        }
    }
    let rows: u64 = re.iter().chain(&im).map(|a| a.count as u64).try_fold(1u64, |acc, c| acc.checked_mul(c))
        .unwrap_or(u64::MAX);
    if rows > TABLE_ROW_LIMIT {
        return Err(Error::TableTooLarge(rows).into());
    }
    // coordinates ordered s1_re, s1_im, s2_re, ...
    let interleaved: Vec<Vec<f64>> = re.iter().zip(&im).flat_map(|(r, i)| [r.points(), i.points()]).collect();
    let mut header: Vec<String> = (1..=rank).flat_map(|k| [format!("s{k}_re"), format!("s{k}_im")]).collect();
    header.extend(["value_re", "value_im", "pole"].map(String::from));

    let mut csv = Csv::new(&header);
    let mut json_rows = Vec::new();
    for point in cartesian(&interleaved) {
        let coords: Vec<Complex64> = point.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect();
        let value = c_factor(&rs, &w, &SpectralParam::new(coords))?.value;
        if args.json {
            json_rows.push(json!({ "s": point, "value": output::cvalue(&value) }));
        } else {
            let mut fields: Vec<String> = point.iter().map(|x| output::float(*x)).collect();
            match value {
                CValue::Finite(z) => fields.extend([output::float(z.re), output::float(z.im), "0".into()]),
                CValue::Pole => fields.extend([String::new(), String::new(), "1".into()]),
                CValue::Indeterminate => fields.extend([String::new(), String::new(), "0".into()]),
            }
            csv.row(&fields);
        }
    }
    if !args.json {
        return Ok(TableOutput::Csv(csv.finish()));
    }
    let axis_json = |a: &[Axis]| -> Vec<Value> {
        a.iter().map(|x| json!({ "start": x.start, "stop": x.stop, "count": x.count })).collect()
    };
    let inputs = json!({
        "type": args.type_name,
        "word": w.one_based(),
        "re": axis_json(&re),
        "im": axis_json(&im),
    });
    let results = json!({ "columns": header, "row_count": json_rows.len(), "rows": json_rows });
    Ok(TableOutput::Record(OutputRecord::new("table", inputs, results)))
}

