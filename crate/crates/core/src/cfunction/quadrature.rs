//! Globally adaptive Gauss–Kronrod (10/21 point) quadrature of complex-valued
//! integrands.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

// Nodes and weights of the 21-point Kronrod rule and its embedded 10-point
// Gauss rule, as tabulated in QUADPACK (qk21).
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], …, XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Tolerances and work limit for adaptive quadrature.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let spec = Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::QuadraturePrecondition("tolerances must be positive"));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::QuadraturePrecondition("max_subdivisions must be positive"));
        }
        Ok(())
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-11,
            max_subdivisions: 2000,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Segment<R> {
    a: R,
    b: R,
    value: Complex<R>,
    error: R,
}

fn kronrod<R: Real, F: Fn(R) -> Complex<R>>(f: &F, a: R, b: R) -> Segment<R> {
    let two = R::lit(2.0);
    let center = (a + b) / two;
    let half = (b - a) / two;
    let fc = f(center);
    let mut resk = fc * R::lit(WGK[10]);
    let mut resg = Complex::new(R::zero(), R::zero());
    let mut resabs = fc.norm() * R::lit(WGK[10]);
    let mut values = [(Complex::new(R::zero(), R::zero()), Complex::new(R::zero(), R::zero())); 10];
    for (j, x) in XGK.iter().take(10).enumerate() {
        let dx = half * R::lit(*x);
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        values[j] = (f1, f2);
        let w = R::lit(WGK[j]);
        resk = resk + (f1 + f2) * w;
        resabs = resabs + (f1.norm() + f2.norm()) * w;
        if j % 2 == 1 {
            resg = resg + (f1 + f2) * R::lit(WG[j / 2]);
        }
    }
    let mean = resk / two;
    let mut resasc = (fc - mean).norm() * R::lit(WGK[10]);
    for (j, (f1, f2)) in values.iter().enumerate() {
        resasc = resasc + ((*f1 - mean).norm() + (*f2 - mean).norm()) * R::lit(WGK[j]);
    }
    let h = half.abs();
    let resabs = resabs * h;
    let resasc = resasc * h;
    let mut error = ((resk - resg) * half).norm();
    if resasc > R::zero() && error > R::zero() {
        let scaled = (R::lit(200.0) * error / resasc).powf(R::lit(1.5));
        error = resasc * scaled.min(R::one());
    }
    let floor = R::lit(50.0) * R::epsilon() * resabs;
    if resabs > R::min_positive_value() / (R::lit(50.0) * R::epsilon()) {
        error = error.max(floor);
    }
    Segment {
        a,
        b,
        value: resk * half,
        error,
    }
}

/// ∫_a^b f, returning the value and the error estimate.
///
/// Partial results are summed in order of left endpoint, so the output does
/// not depend on the order intervals were refined.
pub fn integrate<R, F>(f: F, a: R, b: R, spec: &QuadratureSpec) -> Result<(Complex<R>, R)>
where
    R: Real,
    F: Fn(R) -> Complex<R>,
{
    spec.validate()?;
    if !(a < b) {
        return Err(Error::QuadraturePrecondition("interval must satisfy a < b"));
    }
    let abs_tol = R::lit(spec.abs_tol);
    let rel_tol = R::lit(spec.rel_tol);
    let mut segments = vec![kronrod(&f, a, b)];
    loop {
        segments.sort_by(|x, y| x.a.partial_cmp(&y.a).expect("finite endpoints"));
        let total = segments
            .iter()
            .fold(Complex::new(R::zero(), R::zero()), |acc, s| acc + s.value);
        let error = segments.iter().fold(R::zero(), |acc, s| acc + s.error);
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(Error::NoConvergence {
                subdivisions: segments.len(),
                error_estimate: f64::INFINITY,
            });
        }
        if error <= abs_tol.max(rel_tol * total.norm()) {
            return Ok((total, error));
        }
        if segments.len() >= spec.max_subdivisions {
            return Err(Error::NoConvergence {
                subdivisions: segments.len(),
                error_estimate: error.to_f64().unwrap_or(f64::NAN),
            });
        }
        let (worst, _) = segments
            .iter()
            .enumerate()
            .fold((0, R::neg_infinity()), |best, (i, s)| {
                if s.error > best.1 {
                    (i, s.error)
                } else {
                    best
                }
            });
        let s = segments.swap_remove(worst);
        let mid = (s.a + s.b) / R::lit(2.0);
        if !(s.a < mid && mid < s.b) {
            return Err(Error::NoConvergence {
                subdivisions: segments.len() + 1,
                error_estimate: error.to_f64().unwrap_or(f64::NAN),
            });
        }
        segments.push(kronrod(&f, s.a, mid));
        segments.push(kronrod(&f, mid, s.b));
    }
}
