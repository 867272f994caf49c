//! Harish-Chandra c-functions on the genuine K-types of the cover of SL(2,R),
//! in closed form and by two independent quadratures.

mod gamma;
mod quadrature;

use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{Real, Sign};
use crate::sl2cover::{gen_y, iwasawa, sigma_char, CoverElement};

pub use gamma::{log_gamma, nonpositive_integer};
pub use quadrature::{integrate, QuadratureSpec};

/// Distance within which a Gamma argument counts as sitting on a pole.
pub const POLE_TOL: f64 = 1e-9;

/// The value of a c-function: finite, a pole, or an undetermined product of
/// a pole and a zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CValue<R> {
    Finite(Complex<R>),
    Pole,
    Indeterminate,
}

impl<R: Real> CValue<R> {
    pub fn finite(&self) -> Option<Complex<R>> {
        match self {
            CValue::Finite(z) => Some(*z),
            _ => None,
        }
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, CValue::Pole)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CValue::Finite(z) if z.re == R::zero() && z.im == R::zero())
    }

    /// Product of two values; a pole times zero is indeterminate.
    pub fn mul(&self, o: &CValue<R>) -> CValue<R> {
        match (self, o) {
            (CValue::Indeterminate, _) | (_, CValue::Indeterminate) => CValue::Indeterminate,
            (CValue::Pole, x) | (x, CValue::Pole) => {
                if x.is_zero() {
                    CValue::Indeterminate
                } else {
                    CValue::Pole
                }
            }
            (CValue::Finite(a), CValue::Finite(b)) => CValue::Finite(a * b),
        }
    }
}

impl<R: Real + fmt::Display> fmt::Display for CValue<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CValue::Finite(z) => write!(f, "{z}"),
            CValue::Pole => f.write_str("pole"),
            CValue::Indeterminate => f.write_str("indeterminate"),
        }
    }
}

/// √π · Π Γ(s/2 + p_i) / Π Γ(s/2 + q_j).
///
/// Every argument has the same slope in s, so at a parameter where poles
/// collide, equal numbers of numerator and denominator poles cancel to the
/// ratio of residues (−1)^k/k!.
#[derive(Clone, Debug)]
struct GammaRatio {
    num: Vec<f64>,
    den: Vec<f64>,
}

impl GammaRatio {
    fn eval<R: Real>(&self, s: Complex<R>) -> CValue<R> {
        let half = s / R::lit(2.0);
        let tol = R::lit(POLE_TOL);
        let mut log_value = Complex::new(R::lit(0.5) * R::PI().ln(), R::zero());
        let mut residue = R::one();
        let mut balance = 0i64;
        for (shifts, sign) in [(&self.num, 1i64), (&self.den, -1i64)] {
            for p in shifts {
                let z = half + R::lit(*p);
                match nonpositive_integer(z, tol) {
                    Some(k) => {
                        balance += sign;
                        let r = residue_at(k);
                        residue = if sign > 0 { residue * r } else { residue / r };
                    }
                    None => {
                        let lg = log_gamma(z).expect("argument is off the poles");
                        log_value = if sign > 0 { log_value + lg } else { log_value - lg };
                    }
                }
            }
        }
        match balance {
            b if b > 0 => CValue::Pole,
            b if b < 0 => CValue::Finite(Complex::new(R::zero(), R::zero())),
            _ => CValue::Finite(log_value.exp() * residue),
        }
    }
}

/// Residue of Γ at −k.
fn residue_at<R: Real>(k: i64) -> R {
    let mut r = R::one();
    for j in 1..=k {
        r = r / R::from_i64(j).expect("small integer");
    }
    if k % 2 == 1 {
        -r
    } else {
        r
    }
}

/// c_{n/2}(s) = √π Γ(s/2)Γ((s+1)/2) / (Γ((s+1)/2 + n/4) Γ((s+1)/2 − n/4)).
pub fn c_n_over_2<R: Real>(n: i64, s: Complex<R>) -> CValue<R> {
    let q = n as f64 / 4.0;
    GammaRatio {
        num: vec![0.0, 0.5],
        den: vec![0.5 + q, 0.5 - q],
    }
    .eval(s)
}

/// The linear-group c-function √π Γ(s/2)Γ((s+1)/2) / (Γ((s+n+1)/2) Γ((s−n+1)/2)).
pub fn c_linear<R: Real>(n: i64, s: Complex<R>) -> CValue<R> {
    let q = n as f64 / 2.0;
    GammaRatio {
        num: vec![0.0, 0.5],
        den: vec![0.5 + q, 0.5 - q],
    }
    .eval(s)
}

/// c₀(ν) = √π Γ(ν/2) / Γ((ν+1)/2).
pub fn c0<R: Real>(nu: Complex<R>) -> CValue<R> {
    GammaRatio {
        num: vec![0.0],
        den: vec![0.5],
    }
    .eval(nu)
}

/// c_{1/2}(ν) = √π Γ(ν/2)Γ((ν+1)/2) / (Γ(ν/2 + 3/4) Γ(ν/2 + 1/4)).
pub fn c_half<R: Real>(nu: Complex<R>) -> CValue<R> {
    GammaRatio {
        num: vec![0.0, 0.5],
        den: vec![0.75, 0.25],
    }
    .eval(nu)
}

/// ∫_{−π/2}^{π/2} cos^{s−1}θ e^{inθ/2} dθ, the defining integral of c_{n/2}(s)
/// after t = tan θ.
///
/// For Re s < 1 the endpoint singularity is removed by θ = (π/2) tanh u,
/// with the integrand assembled in log space.
pub fn quad_oracle<R: Real>(n: i64, s: Complex<R>, spec: &QuadratureSpec) -> Result<Complex<R>> {
    if !(s.re > R::zero()) {
        return Err(Error::QuadraturePrecondition("Re(s) must be positive"));
    }
    let half_n = R::from_i64(n).expect("small integer") / R::lit(2.0);
    let phase = |theta: R| Complex::new(R::zero(), half_n * theta).exp();
    let half_pi = R::FRAC_PI_2();
    let one = R::one();
    if s.re >= one {
        let f = |theta: R| {
            let c = theta.cos();
            if c <= R::zero() {
                return Complex::new(R::zero(), R::zero());
            }
            ((s - one) * c.ln()).exp() * phase(theta)
        };
        return integrate(f, -half_pi, half_pi, spec).map(|(v, _)| v);
    }
    let sigma = s.re;
    let tail = R::lit(1e-3 * spec.abs_tol);
    let cutoff = (R::PI().powf(sigma) / (sigma * tail)).ln() / (R::lit(2.0) * sigma);
    let two = R::lit(2.0);
    let f = |u: R| {
        let au = u.abs();
        let decay = (-two * au).exp();
        let log1p_decay = decay.ln_1p();
        // δ = π/2 − |θ| = π/(e^{2|u|} + 1)
        let log_delta = R::PI().ln() - two * au - log1p_decay;
        let delta = log_delta.exp();
        let log_sin_delta = if delta < R::lit(1e-4) {
            log_delta - delta * delta / R::lit(6.0)
        } else {
            delta.sin().ln()
        };
        // dθ/du = (π/2) sech²u = 2π e^{−2|u|} / (1 + e^{−2|u|})²
        let log_jac = (two * R::PI()).ln() - two * au - two * log1p_decay;
        let theta = half_pi * u.tanh();
        ((s - one) * log_sin_delta + log_jac).exp() * phase(theta)
    };
    integrate(f, -cutoff, cutoff, spec).map(|(v, _)| v)
}

/// The standard intertwining integral ∫_R f_s^{n/2}(ȳ(t)) dt, with
/// f(x(n)h(a)k) = a^{s+1}σ_{n/2}(k) evaluated through the Iwasawa
/// decomposition of the cover.
///
/// Integrated in t = sinh u.
pub fn intertwine_sl2_numeric(n: i64, s: Complex<f64>, spec: &QuadratureSpec) -> Result<Complex<f64>> {
    if !(s.re > 0.0) {
        return Err(Error::QuadraturePrecondition("Re(s) must be positive"));
    }
    let sigma = s.re;
    let tail = 1e-3 * spec.abs_tol;
    // |integrand| ≤ 2^σ e^{−σ|u|}
    let cutoff = (2f64.powf(sigma) / (sigma * tail)).ln() / sigma;
    let f = |u: f64| -> Complex<f64> {
        let t = u.sinh();
        let g: CoverElement<f64> = gen_y(t);
        debug_assert_eq!(g.sign, Sign::Plus);
        let data = match iwasawa(&g) {
            Ok(d) => d,
            Err(_) => return Complex::new(f64::NAN, 0.0),
        };
        let chi = match sigma_char(n, &data.k) {
            Ok(c) => c,
            Err(_) => return Complex::new(f64::NAN, 0.0),
        };
        (data.a_param.ln() * (s + 1.0)).exp() * chi * u.cosh()
    };
    integrate(f, -cutoff, cutoff, spec).map(|(v, _)| v)
}
