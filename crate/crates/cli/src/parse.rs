//! Argument parsers for complex numbers, parameter vectors, Weyl words and grids.

use num_complex::Complex64;

use metacover::rootsys::{RootSystem, WeylWord};

/// Parse `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`; whitespace is ignored.
pub fn complex(input: &str) -> Result<Complex64, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || format!("cannot parse complex number {input:?}");
    if s.is_empty() {
        return Err(err());
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return real(&s).map(|re| Complex64::new(re, 0.0)).ok_or_else(err);
    };
    // split at the last sign that is not the sign of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (real(&body[..k]).ok_or_else(err)?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => real(x).ok_or_else(err)?,
    };
    Ok(Complex64::new(re, im))
}

fn real(s: &str) -> Option<f64> {
    // reject "inf", "nan" and friends
    if !s.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | '+' | '-' | 'e' | 'E')) {
        return None;
    }
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Comma-separated complex coordinates.
pub fn complex_vector(input: &str) -> Result<Vec<Complex64>, String> {
    input.split(',').map(complex).collect()
}

/// A one-based word like `"1 2 1"` or `"1,2,1"`, `"e"` for the identity, or
/// `"longest"`.
pub fn word(rs: &RootSystem, input: &str) -> Result<WeylWord, String> {
    let trimmed = input.trim();
    match trimmed {
        "e" | "" => return Ok(WeylWord::identity()),
        "longest" | "w0" => return Ok(rs.longest_element().canonical_word().clone()),
        _ => {}
    }
    let letters = trimmed
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad letter {t:?} in word {input:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let w = WeylWord::from_one_based(&letters).map_err(|e| e.to_string())?;
    rs.check_word(&w).map_err(|e| e.to_string())?;
    Ok(w)
}

/// One axis `start:stop:count`, sampled at `count` equally spaced points
/// including both ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|k| if k + 1 == self.count { self.stop } else { self.start + step * k as f64 })
            .collect()
    }
}

pub fn axis(input: &str) -> Result<Axis, String> {
    let err = |why: &str| format!("malformed grid {input:?}: {why}");
    let parts: Vec<&str> = input.trim().split(':').collect();
    let [start, stop, count] = parts[..] else {
        return Err(err("expected start:stop:count"));
    };
    let start = real(start.trim()).ok_or_else(|| err("bad start"))?;
    let stop = real(stop.trim()).ok_or_else(|| err("bad stop"))?;
    let count: usize = count.trim().parse().map_err(|_| err("bad count"))?;
    if count == 0 {
        return Err(err("count must be positive"));
    }
    if start > stop {
        return Err(err("start exceeds stop"));
    }
    Ok(Axis { start, stop, count })
}

/// Comma-separated axes, one per coordinate.
pub fn axes(input: &str) -> Result<Vec<Axis>, String> {
    input.split(',').map(axis).collect()
}
