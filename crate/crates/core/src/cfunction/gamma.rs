//! Complex log-Gamma by the Lanczos approximation with reflection.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

// Lanczos g = 7, n = 9 (the coefficient set popularized by Numerical Recipes
// and Godfrey); relative error in Γ below 1e-15 on Re z ≥ 1/2.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// The non-positive integer −k that z sits on, if any, within `tol`.
pub fn nonpositive_integer<R: Real>(z: Complex<R>, tol: R) -> Option<i64> {
    let k = z.re.round();
    if z.im.abs() <= tol && (z.re - k).abs() <= tol && k <= R::zero() {
        k.to_i64().map(|k| -k)
    } else {
        None
    }
}

/// log Γ(z), exact modulo 2πi.
///
/// On the positive real axis the value is real and matches the usual lgamma.
pub fn log_gamma<R: Real>(z: Complex<R>) -> Result<Complex<R>> {
    if nonpositive_integer(z, R::zero()).is_some() {
        return Err(Error::GammaPole(z.re.to_f64().unwrap_or(f64::NAN)));
    }
    let half = R::lit(0.5);
    if z.re < half {
        // Γ(z)Γ(1 − z) = π / sin(πz)
        let pi = R::PI();
        let one = Complex::new(R::one(), R::zero());
        return Ok(Complex::new(pi.ln(), R::zero()) - log_sin_pi(z) - log_gamma_lanczos(one - z));
    }
    Ok(log_gamma_lanczos(z))
}

fn log_gamma_lanczos<R: Real>(z: Complex<R>) -> Complex<R> {
    let one = R::one();
    let z = z - one;
    let mut x = Complex::new(R::lit(LANCZOS[0]), R::zero());
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x = x + Complex::new(R::lit(*c), R::zero()) / (z + R::from_usize(i).expect("small index"));
    }
    let t = z + R::lit(LANCZOS_G + 0.5);
    let half_log_two_pi = R::lit(0.5) * (R::lit(2.0) * R::PI()).ln();
    (z + R::lit(0.5)) * t.ln() - t + half_log_two_pi + x.ln()
}

/// log sin(πz) without overflow for large |Im z|.
fn log_sin_pi<R: Real>(z: Complex<R>) -> Complex<R> {
    if z.im < R::zero() {
        return log_sin_pi(z.conj()).conj();
    }
    // sin(πz) = e^{−iπz}(e^{2iπz} − 1)/(2i), and |e^{2iπz}| ≤ 1 here
    let i = Complex::new(R::zero(), R::one());
    let pi = R::PI();
    let e = (i * z * (pi + pi)).exp();
    -(i * z * pi) + (e - R::one()).ln() - Complex::new(R::lit(2.0), R::zero()).ln() - i * (pi / R::lit(2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    type C = Complex<f64>;

    // Bernoulli numbers B_2 … B_16
    const BERNOULLI: [f64; 8] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];

    /// Stirling series after shifting z to |z| ≥ 20 with Γ(z+1) = zΓ(z).
    fn stirling(mut z: C) -> C {
        let mut shift = C::new(0.0, 0.0);
        while z.norm() < 20.0 || z.re < 1.0 {
            shift += z.ln();
            z += 1.0;
        }
        let mut series = (z - 0.5) * z.ln() - z + 0.5 * TAU.ln();
        for (k, b) in BERNOULLI.iter().enumerate() {
            let m = 2.0 * (k as f64 + 1.0);
            series += b / (m * (m - 1.0)) / z.powf(m - 1.0);
        }
        series - shift
    }

    fn assert_close_mod_2pi_i(got: C, want: C, tol: f64) {
        let mut d = got - want;
        d.im -= (d.im / TAU).round() * TAU;
        assert!(
            d.norm() <= tol * want.norm().max(1.0),
            "got {got}, want {want} (diff {})",
            d.norm()
        );
    }

    #[test]
    fn spot_values() {
        let lg = |x: f64| log_gamma(C::new(x, 0.0)).unwrap();
        assert!(lg(1.0).norm() < 1e-15);
        assert!((lg(0.5).re - PI.sqrt().ln()).abs() < 1e-14);
        assert!((lg(5.0).re - 24f64.ln()).abs() < 1e-14);
        assert!(lg(2.0).norm() < 1e-15);
        assert!(lg(0.5).im.abs() < 1e-15);
    }

    #[test]
    fn real_branch_matches_lgamma() {
        // Γ(−1/2) = −2√π, so log|Γ| = ln(2√π) and the imaginary part is an odd multiple of π
        let v = log_gamma(C::new(-0.5, 0.0)).unwrap();
        assert!((v.re - (2.0 * PI.sqrt()).ln()).abs() < 1e-14);
        assert!(((v.im / PI).round() as i64) % 2 != 0);
    }

    #[test]
    fn poles() {
        for k in 0..5 {
            assert!(log_gamma(C::new(-(k as f64), 0.0)).is_err());
        }
        assert!(log_gamma(C::new(-1.0, 1e-3)).is_ok());
    }

    #[test]
    fn matches_stirling_oracle() {
        let mut pts = Vec::new();
        for re in [-7.3, -2.5, -0.7, 0.1, 0.5, 1.0, 1.5, 2.7, 9.9, 40.0, 333.3] {
            for im in [-90.0, -3.0, -0.25, 0.0, 0.6, 4.0, 25.0, 700.0] {
                pts.push(C::new(re, im));
            }
        }
        for z in pts {
            let tol = if z.re < 0.0 && z.im.abs() < 1.0 { 1e-11 } else { 1e-12 };
            assert_close_mod_2pi_i(log_gamma(z).unwrap(), stirling(z), tol);
        }
    }

    #[test]
    fn duplication_formula() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let s = C::new(rng.gen_range(0.05..20.0), rng.gen_range(-20.0..20.0));
            let lhs = log_gamma(s).unwrap();
            let rhs = -0.5 * PI.ln() + (s - 1.0) * 2f64.ln() + log_gamma(s / 2.0).unwrap()
                + log_gamma((s + 1.0) / 2.0).unwrap();
            assert_close_mod_2pi_i(lhs, rhs, 1e-11);
        }
    }

    #[test]
    fn conjugation() {
        let z = C::new(0.3, 2.0);
        let a = log_gamma(z).unwrap();
        let b = log_gamma(z.conj()).unwrap();
        assert!((a.conj() - b).norm() < 1e-14);
    }

    #[test]
    fn single_precision() {
        let v = log_gamma(Complex::new(5.0f32, 0.0)).unwrap();
        assert!((v.re - 24f32.ln()).abs() < 1e-5);
    }
}
