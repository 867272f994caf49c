//! Property suites run by `metacover verify`, plus the seeded samplers they
//! share with the test suites.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cfunction::{
    c0, c_half, c_linear, c_n_over_2, intertwine_sl2_numeric, log_gamma, quad_oracle, CValue,
    QuadratureSpec,
};
use crate::cover_torus::{hilbert, CoverTorus, MElement, MGroup, TorusElement, Unit4};
use crate::error::Result;
use crate::intertwine::{
    act_on_param, c_factor, cocycle_check, cvalues_agree, delta_w_identity, SpectralParam,
};
use crate::rootsys::{Family, RootSystem, RootSystemSpec};
use crate::scalar::Sign;
use crate::sl2cover::{exp_rotation, gen_h, gen_w, gen_x, gen_y, iwasawa, kubota, Angle, CoverElement, Mat2};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Rootsys,
    Torus,
    Kubota,
    Cfun,
    Intertwine,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Rootsys,
        Suite::Torus,
        Suite::Kubota,
        Suite::Cfun,
        Suite::Intertwine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rootsys => "rootsys",
            Suite::Torus => "torus",
            Suite::Kubota => "kubota",
            Suite::Cfun => "cfun",
            Suite::Intertwine => "intertwine",
        }
    }

    fn salt(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Outcome of one property check.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    /// Largest observed error; zero for exact checks.
    pub max_error: f64,
    pub tolerance: f64,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn exact(&mut self, name: &str, outcome: Result<(u64, Option<String>)>) {
        let check = match outcome {
            Ok((cases, failure)) => Check {
                name: name.into(),
                passed: failure.is_none(),
                cases,
                max_error: 0.0,
                tolerance: 0.0,
                detail: failure,
            },
            Err(e) => Check {
                name: name.into(),
                passed: false,
                cases: 0,
                max_error: f64::NAN,
                tolerance: 0.0,
                detail: Some(e.to_string()),
            },
        };
        self.checks.push(check);
    }

    fn measured(&mut self, name: &str, tolerance: f64, outcome: Result<(u64, f64)>) {
        let check = match outcome {
            Ok((cases, err)) => Check {
                name: name.into(),
                passed: err <= tolerance,
                cases,
                max_error: err,
                tolerance,
                detail: None,
            },
            Err(e) => Check {
                name: name.into(),
                passed: false,
                cases: 0,
                max_error: f64::NAN,
                tolerance,
                detail: Some(e.to_string()),
            },
        };
        self.checks.push(check);
    }
}

/// Count cases, stopping at the first failure description.
struct Tally {
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self) -> Result<(u64, Option<String>)> {
        Ok((self.cases, self.failure))
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9).wrapping_add(suite.salt()));
    let mut rec = Recorder::default();
    match suite {
        Suite::Rootsys => rootsys_suite(&mut rec),
        Suite::Torus => torus_suite(&mut rec, &mut rng),
        Suite::Kubota => kubota_suite(&mut rec, &mut rng),
        Suite::Cfun => cfun_suite(&mut rec, &mut rng),
        Suite::Intertwine => intertwine_suite(&mut rec, &mut rng),
    }
    SuiteReport {
        suite,
        checks: rec.checks,
    }
}

pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|s| run_suite(*s, seed)).collect()
}

// ---------------------------------------------------------------- samplers

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A nonzero rational p/q with |p| ≤ height, 1 ≤ q ≤ height.
pub fn random_nonzero_rational<R: Rng>(rng: &mut R, height: i64) -> BigRational {
    let p = rng.gen_range(1..=height) * if rng.gen_bool(0.5) { 1 } else { -1 };
    rational(p, rng.gen_range(1..=height))
}

/// A product of at most 12 unipotent generators x(t), y(t) with nonzero
/// rational parameters.
pub fn random_sl2_word<R: Rng>(rng: &mut R) -> CoverElement<BigRational> {
    let len = rng.gen_range(0..=12);
    (0..len).fold(CoverElement::identity(), |g, _| {
        let t = random_nonzero_rational(rng, 6);
        let step = if rng.gen_bool(0.5) { gen_x(t) } else { gen_y(t) };
        g.mul(&step)
    })
}

/// Elements with c = 0: the Borel subgroup on both sheets.
pub fn boundary_elements() -> Vec<CoverElement<BigRational>> {
    let mut out = Vec::new();
    for t in [rational(1, 1), rational(-1, 1), rational(3, 2), rational(-2, 5)] {
        for b in [rational(0, 1), rational(2, 1), rational(-1, 3)] {
            let g = gen_h(t.clone()).expect("nonzero").mul(&gen_x(b));
            out.push(g.clone());
            out.push(g.mul(&CoverElement::central()));
        }
    }
    out
}

/// A cover element: a random word, or a boundary element about one time in five.
pub fn random_cover_element<R: Rng>(rng: &mut R, boundary: &[CoverElement<BigRational>]) -> CoverElement<BigRational> {
    if rng.gen_bool(0.2) {
        boundary[rng.gen_range(0..boundary.len())].clone()
    } else {
        let g = random_sl2_word(rng);
        if rng.gen_bool(0.5) {
            g
        } else {
            g.mul(&gen_h(random_nonzero_rational(rng, 5)).expect("nonzero"))
        }
    }
}

/// A torus element with nonzero rational parameters and a random sign.
pub fn random_torus_element<R: Rng>(rng: &mut R, rank: usize) -> TorusElement<BigRational> {
    let params = (0..rank).map(|_| random_nonzero_rational(rng, 7)).collect();
    let sign = Sign::from_negative(rng.gen_bool(0.5));
    TorusElement::new(params, sign).expect("nonzero parameters")
}

/// The oracle grid n ∈ {0, ±1, ±2, ±3}, Re s ∈ {0.5, 1, 1.7, 3}, Im s ∈ {0, 0.5}.
pub fn oracle_grid() -> Vec<(i64, Complex<f64>)> {
    let mut out = Vec::new();
    for n in -3..=3 {
        for re in [0.5, 1.0, 1.7, 3.0] {
            for im in [0.0, 0.5] {
                out.push((n, Complex::new(re, im)));
            }
        }
    }
    out
}

/// Error of `got` against `want`: relative, or absolute when `want` is zero.
pub fn rel_error(got: Complex<f64>, want: Complex<f64>) -> f64 {
    let d = (got - want).norm();
    if want.norm() == 0.0 {
        d
    } else {
        d / want.norm()
    }
}

// ---------------------------------------------------------------- suites

fn rootsys_suite(rec: &mut Recorder) {
    let specs = RootSystemSpec::all_up_to_rank(4);
    let systems: Vec<RootSystem> = specs.iter().map(|s| RootSystem::new(*s)).collect();

    rec.exact("root counts match the classification (rank <= 8)", {
        let mut t = Tally::new();
        for spec in RootSystemSpec::all_up_to_rank(8) {
            let rs = RootSystem::new(spec);
            t.check(rs.roots().len() == spec.expected_root_count(), || spec.to_string());
        }
        t.finish()
    });

    rec.exact("root system is closed under simple reflections", (|| {
        let mut t = Tally::new();
        for rs in &systems {
            for i in 0..rs.rank() {
                let s = rs.simple_reflection(i)?;
                for r in rs.roots() {
                    t.check(rs.contains(&s.apply(r.coords())), || format!("{} s{} {}", rs.spec(), i + 1, r));
                }
            }
        }
        t.finish()
    })());

    rec.exact("Cartan integers: <a,a> = 2 and <a,b><b,a> in 0..=3", (|| {
        let mut t = Tally::new();
        for rs in &systems {
            for a in rs.roots() {
                for b in rs.roots() {
                    let ab = rs.cartan_int(a, b)?;
                    let ba = rs.cartan_int(b, a)?;
                    let ok = if a == b { ab == 2 } else { (0..=3).contains(&(ab * ba)) || a == &b.negated() };
                    t.check(ok, || format!("{} {a} {b}", rs.spec()));
                }
            }
        }
        t.finish()
    })());

    rec.exact("coroots match 2a/(a,a) in simple coroots", (|| {
        let mut t = Tally::new();
        for rs in &systems {
            for r in rs.roots() {
                let len = rs.lengthsq(r)?;
                let expect: Vec<i64> = (0..rs.rank())
                    .map(|i| r.coords()[i] * rs.gram()[i][i] / len)
                    .collect();
                t.check(rs.coroot_coords(r)? == expect.as_slice(), || format!("{} {r}", rs.spec()));
            }
        }
        t.finish()
    })());

    rec.exact("inversion count equals length (rank <= 3)", (|| {
        let mut t = Tally::new();
        for rs in systems.iter().filter(|r| r.rank() <= 3) {
            for w in rs.weyl_enumerate(100_000)? {
                t.check(rs.inversion_set(&w).len() == w.length(), || {
                    format!("{} {}", rs.spec(), w.canonical_word())
                });
            }
        }
        t.finish()
    })());

    rec.exact("reduced words of an element share its matrix (rank 2)", (|| {
        let mut t = Tally::new();
        for name in ["A2", "B2", "G2"] {
            let rs = RootSystem::from_type(name)?;
            for w in rs.weyl_enumerate(1000)? {
                for word in rs.all_reduced_words(&w, 16)? {
                    t.check(rs.element(&word)?.matrix() == w.matrix(), || format!("{name} {word}"));
                }
            }
        }
        t.finish()
    })());

    rec.exact("metaplectic roots: long roots in B/C/F, all roots otherwise", (|| {
        let mut t = Tally::new();
        for rs in &systems {
            let max = rs.roots().iter().map(|r| rs.lengthsq(r)).collect::<Result<Vec<_>>>()?;
            let max = max.into_iter().max().unwrap_or(2);
            for r in rs.roots() {
                let long = rs.lengthsq(r)? == max;
                let expect = match rs.spec().family() {
                    Family::B | Family::C | Family::F => long,
                    _ => true,
                };
                t.check(rs.is_metaplectic(r)? == expect, || format!("{} {r}", rs.spec()));
            }
        }
        t.finish()
    })());
}

fn torus_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let small: Vec<RootSystem> = RootSystemSpec::all_up_to_rank(3)
        .into_iter()
        .map(RootSystem::new)
        .collect();

    rec.exact("M multiplication agrees with the torus law at parameters +-1 (rank <= 3)", (|| {
        let mut t = Tally::new();
        for rs in &small {
            let m = MGroup::new(rs)?;
            let torus = CoverTorus::new(rs);
            let lift = |x: &MElement| {
                let params = x
                    .exponents(rs.rank())
                    .iter()
                    .map(|b| if *b == 1 { rational(-1, 1) } else { rational(1, 1) })
                    .collect();
                TorusElement::new(params, x.sign())
            };
            for x in m.elements() {
                for y in m.elements() {
                    let want = torus.mul(&lift(&x)?, &lift(&y)?)?;
                    t.check(lift(&m.mul(&x, &y))? == want, || format!("{}", rs.spec()));
                }
            }
        }
        t.finish()
    })());

    rec.exact("M is associative (exhaustive, rank <= 3)", (|| {
        let mut t = Tally::new();
        for rs in &small {
            let m = MGroup::new(rs)?;
            let elems: Vec<MElement> = m.elements().collect();
            for x in &elems {
                for y in &elems {
                    let xy = m.mul(x, y);
                    for z in &elems {
                        t.check(m.mul(&xy, z) == m.mul(x, &m.mul(y, z)), || rs.spec().to_string());
                    }
                }
            }
        }
        t.finish()
    })());

    rec.exact("covered torus: associativity, central z, projection (10^4 triples)", (|| {
        let mut t = Tally::new();
        let types: Vec<RootSystem> = ["A2", "B3", "C3", "G2", "D4", "F4"]
            .iter()
            .map(|n| RootSystem::from_type(n))
            .collect::<Result<_>>()?;
        for k in 0..10_000 {
            let rs = &types[k % types.len()];
            let torus = CoverTorus::new(rs);
            let l = rs.rank();
            let (x, y, z) = (
                random_torus_element(rng, l),
                random_torus_element(rng, l),
                random_torus_element(rng, l),
            );
            let lhs = torus.mul(&torus.mul(&x, &y)?, &z)?;
            let rhs = torus.mul(&x, &torus.mul(&y, &z)?)?;
            t.check(lhs == rhs, || format!("{} associativity", rs.spec()));
            let central = TorusElement::central(l);
            t.check(torus.mul(&central, &x)? == torus.mul(&x, &central)?, || "z central".into());
            let xy = torus.mul(&x, &y)?;
            let proj = xy
                .params()
                .iter()
                .zip(x.params().iter().zip(y.params()))
                .all(|(p, (a, b))| p == &(a * b));
            t.check(proj, || "projection".into());
        }
        t.finish()
    })());

    rec.exact("h_i(t) h_i(u) = (t,u)^e h_i(tu) on simple roots", (|| {
        let mut t = Tally::new();
        for rs in &small {
            let torus = CoverTorus::new(rs);
            for i in 0..rs.rank() {
                for _ in 0..50 {
                    let a = random_nonzero_rational(rng, 9);
                    let b = random_nonzero_rational(rng, 9);
                    let l = rs.rank();
                    let lhs = torus.mul(&TorusElement::simple(l, i, a.clone())?, &TorusElement::simple(l, i, b.clone())?)?;
                    let sign = hilbert(&a, &b)?.pow(torus.square_exponents()[i]);
                    let mut rhs = TorusElement::simple(l, i, a * b)?;
                    if sign.is_minus() {
                        rhs = torus.mul(&TorusElement::central(l), &rhs)?;
                    }
                    t.check(lhs == rhs, || format!("{} i={i}", rs.spec()));
                }
            }
        }
        t.finish()
    })());

    rec.exact("M structure: |M| = 2^(l+1), square index, character count, sum of squares (rank <= 4)", (|| {
        let mut t = Tally::new();
        for spec in RootSystemSpec::all_up_to_rank(4) {
            let m = MGroup::new(&RootSystem::new(spec))?;
            let order = m.order();
            let z = m.center().order();
            let dim = m.pseudospherical_dim()?;
            let chars = m.genuine_central_characters().len() as u64;
            t.check(order == 1 << (spec.rank() + 1), || format!("{spec} |M|"));
            t.check(m.center().contains(&MElement::central()), || format!("{spec} z"));
            t.check(dim * dim == order / z, || format!("{spec} square"));
            t.check(chars == z / 2, || format!("{spec} characters"));
            t.check(chars * dim * dim == order / 2, || format!("{spec} sum of squares"));
        }
        t.finish()
    })());

    rec.exact("A1: M is cyclic of order 4, both genuine characters pseudospherical", (|| {
        let mut t = Tally::new();
        let m = MGroup::new(&RootSystem::from_type("A1")?)?;
        let g = MElement::generator(0);
        t.check(m.mul(&g, &g) == MElement::central(), || "m^2 = z".into());
        let chars = m.genuine_central_characters();
        t.check(chars.len() == 2, || "two characters".into());
        let mut values: Vec<Unit4> = chars.iter().filter_map(|c| m.evaluate(c, &g)).collect();
        values.sort();
        t.check(values == vec![Unit4::I, Unit4::MINUS_I], || "values +-i".into());
        for c in &chars {
            t.check(m.is_pseudospherical(c), || "pseudospherical".into());
        }
        t.finish()
    })());
}

fn kubota_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let boundary = boundary_elements();

    rec.exact("cocycle identity and associativity on 10^4 random triples", {
        let mut t = Tally::new();
        for _ in 0..10_000 {
            let g: Vec<_> = (0..3).map(|_| random_cover_element(rng, &boundary)).collect();
            let (a, b, c) = (&g[0].mat, &g[1].mat, &g[2].mat);
            let ok = kubota(a, b) * kubota(&a.mul(b), c) == kubota(a, &b.mul(c)) * kubota(b, c);
            t.check(ok, || format!("{a} {b} {c}"));
            t.check(g[0].mul(&g[1]).mul(&g[2]) == g[0].mul(&g[1].mul(&g[2])), || "associativity".into());
        }
        t.finish()
    });

    rec.exact("cocycle identity on all boundary triples", {
        let mut t = Tally::new();
        for a in &boundary {
            for b in &boundary {
                for c in &boundary {
                    let (a, b, c) = (&a.mat, &b.mat, &c.mat);
                    let ok = kubota(a, b) * kubota(&a.mul(b), c) == kubota(a, &b.mul(c)) * kubota(b, c);
                    t.check(ok, || format!("{a} {b} {c}"));
                }
            }
        }
        t.finish()
    });

    rec.exact("h(t)h(u) = (t,u) h(tu) on 10^3 pairs", (|| {
        let mut t = Tally::new();
        for _ in 0..1000 {
            let a = random_nonzero_rational(rng, 9);
            let b = random_nonzero_rational(rng, 9);
            let lhs = gen_h(a.clone())?.mul(&gen_h(b.clone())?);
            let mut rhs = gen_h(a.clone() * b.clone())?;
            if hilbert(&a, &b)?.is_minus() {
                rhs = rhs.mul(&CoverElement::central());
            }
            t.check(lhs == rhs, || format!("t={a} u={b}"));
        }
        t.finish()
    })());

    rec.exact("e(a)e(b) = e(a+b) on the pi/12 grid", (|| {
        let mut t = Tally::new();
        for j in 0..48 {
            let a = Angle::pi_multiple(j, 12);
            let ea = exp_rotation::<f64>(a)?;
            for k in 0..48 {
                let b = Angle::pi_multiple(k, 12);
                let lhs = ea.mul(&exp_rotation::<f64>(b)?);
                let rhs = exp_rotation::<f64>(a.add(b))?;
                t.check(lhs.approx_eq(&rhs), || format!("{j}pi/12 + {k}pi/12"));
            }
        }
        let pi = exp_rotation::<BigRational>(Angle::pi_multiple(1, 1))?;
        t.check(pi == gen_h(rational(-1, 1))?, || "e(pi) = h(-1)".into());
        let two_pi = exp_rotation::<BigRational>(Angle::pi_multiple(2, 1))?;
        t.check(two_pi == CoverElement::central(), || "e(2pi) = (I,-1)".into());
        t.finish()
    })());

    rec.exact("Steinberg relations: w(t) = x(t)y(-1/t)x(t), w(t)x(u)w(-t) = y(-u/t^2)", (|| {
        let mut t = Tally::new();
        for _ in 0..500 {
            let a = random_nonzero_rational(rng, 7);
            let u = random_nonzero_rational(rng, 7);
            let w = gen_x(a.clone()).mul(&gen_y(-(BigRational::one() / a.clone()))).mul(&gen_x(a.clone()));
            t.check(w == gen_w(a.clone())?, || format!("w({a})"));
            let lhs = gen_w(a.clone())?.mul(&gen_x(u.clone())).mul(&gen_w(-a.clone())?);
            t.check(lhs == gen_y(-(u.clone() / (a.clone() * a.clone()))), || format!("t={a} u={u}"));
        }
        t.finish()
    })());

    rec.exact("Iwasawa decomposition recomposes exactly (Pythagorean rows)", (|| {
        let mut t = Tally::new();
        for (c, d) in [(3, 4), (-4, 3), (5, -12), (-8, -15), (0, 2), (0, -1), (7, 24), (20, 21)] {
            let (c, d) = (rational(c, 1), rational(d, 1));
            for _ in 0..10 {
                let (a, b) = if d.is_zero() {
                    (random_nonzero_rational(rng, 5), -(BigRational::one() / c.clone()))
                } else {
                    let b = random_nonzero_rational(rng, 5);
                    ((BigRational::one() + b.clone() * c.clone()) / d.clone(), b)
                };
                for sign in [Sign::Plus, Sign::Minus] {
                    let g = CoverElement::new(Mat2::new(a.clone(), b.clone(), c.clone(), d.clone())?, sign);
                    let data = iwasawa(&g)?;
                    let ok = data.a_param.is_positive() && data.k.mat.is_rotation() && data.recompose() == g;
                    t.check(ok, || format!("{g}"));
                }
            }
        }
        t.finish()
    })());

    rec.measured("Iwasawa decomposition recomposes in double precision", 1e-12, (|| {
        let mut worst = 0.0f64;
        let mut cases = 0;
        for _ in 0..1000 {
            let g = random_cover_element(rng, &boundary);
            let g = CoverElement::new(g.mat.map(|x| num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)), g.sign);
            let back = iwasawa(&g)?.recompose();
            let scale = [g.mat.a, g.mat.b, g.mat.c, g.mat.d].iter().fold(1.0f64, |m, x| m.max(x.abs()));
            let err = [
                back.mat.a - g.mat.a,
                back.mat.b - g.mat.b,
                back.mat.c - g.mat.c,
                back.mat.d - g.mat.d,
            ]
            .iter()
            .fold(0.0f64, |m, x| m.max(x.abs()))
                / scale;
            worst = worst.max(if back.sign == g.sign { err } else { f64::INFINITY });
            cases += 1;
        }
        Ok((cases, worst))
    })());
}

fn cfun_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let spec = QuadratureSpec::default();
    let finite = |v: CValue<f64>| v.finite().unwrap_or(Complex::new(f64::NAN, f64::NAN));

    rec.measured("spot values c0(1) = pi, c_half(1) = 2 sqrt 2, c_linear(1,1) = 2", 1e-10, (|| {
        let one = Complex::new(1.0, 0.0);
        let pi = Complex::new(std::f64::consts::PI, 0.0);
        let r2 = Complex::new(2.0 * std::f64::consts::SQRT_2, 0.0);
        let two = Complex::new(2.0, 0.0);
        let errs = [
            rel_error(finite(c0(one)), pi),
            rel_error(finite(c_half(one)), r2),
            rel_error(finite(c_linear(1, one)), two),
            rel_error(quad_oracle(0, one, &spec)?, pi),
            rel_error(quad_oracle(1, one, &spec)?, r2),
            rel_error(quad_oracle(2, one, &spec)?, two),
        ];
        Ok((errs.len() as u64, errs.iter().fold(0.0, |m: f64, e| m.max(*e))))
    })());

    rec.measured("closed form vs scalar quadrature on the oracle grid", 1e-8, (|| {
        let mut worst = 0.0f64;
        let grid = oracle_grid();
        for (n, s) in &grid {
            worst = worst.max(rel_error(quad_oracle(*n, *s, &spec)?, finite(c_n_over_2(*n, *s))));
        }
        Ok((grid.len() as u64, worst))
    })());

    rec.measured("closed form vs the group integral through Iwasawa", 1e-6, (|| {
        let mut worst = 0.0f64;
        let grid = oracle_grid();
        for (n, s) in &grid {
            worst = worst.max(rel_error(intertwine_sl2_numeric(*n, *s, &spec)?, finite(c_n_over_2(*n, *s))));
        }
        Ok((grid.len() as u64, worst))
    })());

    rec.measured("symmetry c_{n/2}(s) = c_{-n/2}(s) and conjugation (10^3 samples)", 1e-12, {
        let mut worst = 0.0f64;
        for _ in 0..1000 {
            let n = rng.gen_range(-6..=6);
            let s = Complex::new(rng.gen_range(0.05..6.0), rng.gen_range(-6.0..6.0));
            let v = finite(c_n_over_2(n, s));
            worst = worst.max(rel_error(finite(c_n_over_2(-n, s)), v));
            worst = worst.max(rel_error(finite(c_n_over_2(n, s.conj())), v.conj()));
        }
        Ok((1000, worst))
    });

    rec.measured("c(s)c(-s) is real and non-negative on the unitary axis", 1e-10, {
        let mut worst = 0.0f64;
        let mut cases = 0;
        for n in -3..=3 {
            for k in 0..100 {
                let y = -5.0 + 10.0 * (k as f64 + 0.5) / 100.0;
                let s = Complex::new(0.0, y);
                let p = finite(c_n_over_2(n, s)) * finite(c_n_over_2(n, -s));
                worst = worst.max(p.im.abs() / p.norm().max(1.0)).max(-p.re);
                cases += 1;
            }
        }
        Ok((cases, worst))
    });

    rec.measured("duplication formula for log Gamma", 1e-11, (|| {
        let mut worst = 0.0f64;
        for _ in 0..500 {
            let s = Complex::new(rng.gen_range(0.05..30.0), rng.gen_range(-30.0..30.0));
            let lhs = log_gamma(s)?;
            let rhs = -0.5 * std::f64::consts::PI.ln()
                + (s - 1.0) * std::f64::consts::LN_2
                + log_gamma(s / 2.0)?
                + log_gamma((s + 1.0) / 2.0)?;
            let mut d = lhs - rhs;
            d.im -= (d.im / std::f64::consts::TAU).round() * std::f64::consts::TAU;
            worst = worst.max(d.norm() / lhs.norm().max(1.0));
        }
        Ok((500, worst))
    })());
}

fn intertwine_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let small: Vec<RootSystem> = RootSystemSpec::all_up_to_rank(3)
        .into_iter()
        .map(RootSystem::new)
        .collect();
    let random_param = |rng: &mut ChaCha8Rng, l: usize| {
        SpectralParam::new(
            (0..l)
                .map(|_| Complex::new(rng.gen_range(0.3..3.0), rng.gen_range(-2.0..2.0)))
                .collect(),
        )
    };

    rec.exact("rho - w rho = sum of the inversion set (rank <= 3)", (|| {
        let mut t = Tally::new();
        for rs in &small {
            for w in rs.weyl_enumerate(100_000)? {
                t.check(delta_w_identity(rs, &w), || format!("{} {}", rs.spec(), w.canonical_word()));
            }
        }
        t.finish()
    })());

    rec.exact("W acts on spectral parameters (exact, rank <= 3)", (|| {
        let mut t = Tally::new();
        for rs in &small {
            let l = rs.rank();
            let s = SpectralParam::new(
                (0..l)
                    .map(|_| num_rational::Rational64::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                    .collect(),
            );
            let elems = rs.weyl_enumerate(100_000)?;
            let moved: Vec<_> = elems.iter().map(|w| act_on_param(rs, w, &s)).collect::<Result<_>>()?;
            for a in &elems {
                for (b, sb) in elems.iter().zip(&moved) {
                    let lhs = act_on_param(rs, &rs.compose(a, b), &s)?;
                    t.check(lhs == act_on_param(rs, a, sb)?, || rs.spec().to_string());
                }
            }
        }
        t.finish()
    })());

    rec.exact("reduced-word independence of c(w,s) in A2, B2, G2", (|| {
        let mut t = Tally::new();
        for name in ["A2", "B2", "G2"] {
            let rs = RootSystem::from_type(name)?;
            for w in rs.weyl_enumerate(1000)? {
                let words = rs.all_reduced_words(&w, 16)?;
                for _ in 0..5 {
                    let s = random_param(rng, 2);
                    let base = c_factor(&rs, &words[0], &s)?.value;
                    for other in &words[1..] {
                        let v = c_factor(&rs, other, &s)?.value;
                        t.check(cvalues_agree(&base, &v), || format!("{name} {other}"));
                    }
                }
            }
        }
        t.finish()
    })());

    rec.exact("cocycle law on length-additive pairs (rank 2 exhaustive, 10^3 in A3 and B3)", (|| {
        let mut t = Tally::new();
        for name in ["A2", "B2", "C2", "G2"] {
            let rs = RootSystem::from_type(name)?;
            let elems = rs.weyl_enumerate(1000)?;
            for a in &elems {
                for b in &elems {
                    if rs.compose(a, b).length() == a.length() + b.length() {
                        let s = random_param(rng, 2);
                        t.check(cocycle_check(&rs, a, b, &s)?, || format!("{name}"));
                    }
                }
            }
        }
        for name in ["A3", "B3"] {
            let rs = RootSystem::from_type(name)?;
            let elems = rs.weyl_enumerate(1000)?;
            let mut done = 0;
            while done < 1000 {
                let a = &elems[rng.gen_range(0..elems.len())];
                let b = &elems[rng.gen_range(0..elems.len())];
                if rs.compose(a, b).length() != a.length() + b.length() {
                    continue;
                }
                let s = random_param(rng, 3);
                t.check(cocycle_check(&rs, a, b, &s)?, || format!("{name}"));
                done += 1;
            }
        }
        t.finish()
    })());

    rec.measured("A1: c(s_1, s) = c_{1/2}(s_1)", 1e-12, (|| {
        let rs = RootSystem::from_type("A1")?;
        let w = rs.simple_reflection(0)?;
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let s = random_param(rng, 1);
            let v = c_factor(&rs, w.canonical_word(), &s)?.value;
            let want = c_n_over_2(1, s.coords()[0]);
            match (v.finite(), want.finite()) {
                (Some(a), Some(b)) => worst = worst.max(rel_error(a, b)),
                _ => worst = worst.max(if v == want { 0.0 } else { f64::INFINITY }),
            }
        }
        Ok((100, worst))
    })());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nosuch".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes() {
        for report in run_all(DEFAULT_SEED) {
            let failed: Vec<&Check> = report.checks.iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "{}: {failed:#?}", report.suite);
        }
    }

    #[test]
    fn samplers_are_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(1);
        let mut b = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert_eq!(random_sl2_word(&mut a), random_sl2_word(&mut b));
        }
        assert!(boundary_elements().iter().all(|g| g.mat.c.is_zero()));
    }
}
