//! The metaplectic double cover of SL(2,R) as pairs (g, ε) under the Kubota
//! cocycle.

use std::fmt;

use num_complex::Complex;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Sign, F64_ZERO_TOL};

/// [[a, b], [c, d]] with determinant one.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let m = Self::new_unchecked(a, b, c, d);
        if !m.det().approx_eq(&T::one()) {
            return Err(Error::NotUnimodular);
        }
        Ok(m)
    }

    fn new_unchecked(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new_unchecked(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        Self::new_unchecked(
            a.clone() * o.a.clone() + b.clone() * o.c.clone(),
            a.clone() * o.b.clone() + b.clone() * o.d.clone(),
            c.clone() * o.a.clone() + d.clone() * o.c.clone(),
            c.clone() * o.b.clone() + d.clone() * o.d.clone(),
        )
    }

    pub fn inverse(&self) -> Self {
        Self::new_unchecked(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn approx_eq(&self, o: &Self) -> bool {
        self.a.approx_eq(&o.a) && self.b.approx_eq(&o.b) && self.c.approx_eq(&o.c) && self.d.approx_eq(&o.d)
    }

    /// Whether the matrix is r_φ = [[cos φ, −sin φ], [sin φ, cos φ]].
    pub fn is_rotation(&self) -> bool {
        self.a.approx_eq(&self.d) && self.b.approx_eq(&-self.c.clone())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat2<U> {
        Mat2 {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// x(g) = c if c ≠ 0, else d.
pub fn x_entry<T: Scalar>(g: &Mat2<T>) -> T {
    if g.c.is_negligible() {
        g.d.clone()
    } else {
        g.c.clone()
    }
}

fn symbol<T: Scalar>(t: &T, u: &T) -> Sign {
    Sign::from_negative(t.is_negative() && u.is_negative())
}

/// c(g, h) = (x(g), x(h)) · (−x(g)x(h), x(gh)).
pub fn kubota<T: Scalar>(g: &Mat2<T>, h: &Mat2<T>) -> Sign {
    let xg = x_entry(g);
    let xh = x_entry(h);
    let xgh = x_entry(&g.mul(h));
    symbol(&xg, &xh) * symbol(&-(xg * xh), &xgh)
}

/// (g, ε) in the double cover.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverElement<T> {
    pub mat: Mat2<T>,
    pub sign: Sign,
}

impl<T: Scalar> CoverElement<T> {
    pub fn new(mat: Mat2<T>, sign: Sign) -> Self {
        Self { mat, sign }
    }

    pub fn identity() -> Self {
        Self::new(Mat2::identity(), Sign::Plus)
    }

    /// The nontrivial central element (I, −1).
    pub fn central() -> Self {
        Self::new(Mat2::identity(), Sign::Minus)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.mat.mul(&o.mat),
            self.sign * o.sign * kubota(&self.mat, &o.mat),
        )
    }

    pub fn inverse(&self) -> Self {
        let inv = self.mat.inverse();
        let sign = self.sign * kubota(&self.mat, &inv);
        Self::new(inv, sign)
    }

    pub fn approx_eq(&self, o: &Self) -> bool {
        self.sign == o.sign && self.mat.approx_eq(&o.mat)
    }
}

impl<T: fmt::Display> fmt::Display for CoverElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mat, self.sign)
    }
}

/// Product of a slice of cover elements, left to right.
pub fn product<T: Scalar>(items: &[CoverElement<T>]) -> CoverElement<T> {
    items
        .iter()
        .fold(CoverElement::identity(), |acc, g| acc.mul(g))
}

pub fn gen_x<T: Scalar>(t: T) -> CoverElement<T> {
    CoverElement::new(Mat2::new_unchecked(T::one(), t, T::zero(), T::one()), Sign::Plus)
}

pub fn gen_y<T: Scalar>(t: T) -> CoverElement<T> {
    CoverElement::new(Mat2::new_unchecked(T::one(), T::zero(), t, T::one()), Sign::Plus)
}

pub fn gen_w<T: Scalar>(t: T) -> Result<CoverElement<T>> {
    if t.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let inv = -(T::one() / t.clone());
    Ok(CoverElement::new(
        Mat2::new_unchecked(T::zero(), t, inv, T::zero()),
        Sign::Plus,
    ))
}

pub fn gen_h<T: Scalar>(t: T) -> Result<CoverElement<T>> {
    if t.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let sign = Sign::from_negative(t.is_negative());
    let inv = T::one() / t.clone();
    Ok(CoverElement::new(
        Mat2::new_unchecked(t, T::zero(), T::zero(), inv),
        sign,
    ))
}

/// An angle, kept exact when it is a rational multiple of π.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    PiMultiple(Rational64),
    Radians(f64),
}

impl Angle {
    pub fn pi_multiple(numer: i64, denom: i64) -> Self {
        Angle::PiMultiple(Rational64::new(numer, denom))
    }

    pub fn to_radians(self) -> f64 {
        match self {
            Angle::PiMultiple(q) => q.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI,
            Angle::Radians(x) => x,
        }
    }

    pub fn half(self) -> Self {
        match self {
            Angle::PiMultiple(q) => Angle::PiMultiple(q / 2),
            Angle::Radians(x) => Angle::Radians(x / 2.0),
        }
    }

    pub fn add(self, o: Angle) -> Self {
        match (self, o) {
            (Angle::PiMultiple(p), Angle::PiMultiple(q)) => Angle::PiMultiple(p + q),
            _ => Angle::Radians(self.to_radians() + o.to_radians()),
        }
    }

    /// The angle mod 2π as a multiple of π in [0, 2), if it is one of the
    /// quarter turns 0, 1/2, 1, 3/2 (exactly, or within 1e-12 radians).
    fn quarter_turn(self) -> Option<i64> {
        match self {
            Angle::PiMultiple(q) => {
                let r = reduce_mod_two(q);
                let twice = r * 2;
                twice.is_integer().then(|| twice.to_integer())
            }
            Angle::Radians(x) => {
                let r = x.rem_euclid(std::f64::consts::TAU);
                let quarter = std::f64::consts::FRAC_PI_2;
                let k = (r / quarter).round();
                ((r - k * quarter).abs() <= F64_ZERO_TOL).then(|| (k as i64) % 4)
            }
        }
    }
}

fn reduce_mod_two(q: Rational64) -> Rational64 {
    let two = Rational64::from_integer(2);
    let r = q % two;
    if r.is_negative() {
        r + two
    } else {
        r
    }
}

/// ε(θ) = sgn(sin θ sin 2θ), with ε(0) = 1, ε(π/2) = −1, ε(π) = −1, ε(3π/2) = 1.
pub fn eps(theta: Angle) -> Sign {
    if let Some(k) = theta.quarter_turn() {
        return match k {
            0 | 3 => Sign::Plus,
            _ => Sign::Minus,
        };
    }
    // sin θ sin 2θ = 2 sin²θ cos θ
    match theta {
        Angle::PiMultiple(q) => {
            let r = reduce_mod_two(q);
            let half = Rational64::new(1, 2);
            let three_halves = Rational64::new(3, 2);
            Sign::from_negative(r > half && r < three_halves)
        }
        Angle::Radians(x) => Sign::from_negative(x.cos() < 0.0),
    }
}

/// e(φ) = (r_φ, ε(φ/2)).
///
/// Exact scalar types only accept multiples of π/2, where the entries are
/// rational.
pub fn exp_rotation<T: Scalar>(phi: Angle) -> Result<CoverElement<T>> {
    let (cos, sin) = match phi.quarter_turn() {
        Some(k) => {
            let (c, s) = [(1, 0), (0, 1), (-1, 0), (0, -1)][k as usize];
            (int::<T>(c), int::<T>(s))
        }
        None if T::EXACT => return Err(Error::Inexact),
        None => {
            let x = phi.to_radians();
            (float::<T>(x.cos())?, float::<T>(x.sin())?)
        }
    };
    let mat = Mat2::new_unchecked(cos.clone(), -sin.clone(), sin, cos);
    Ok(CoverElement::new(mat, eps(phi.half())))
}

fn int<T: Scalar>(k: i64) -> T {
    T::from_i64(k).expect("small integers are representable")
}

fn float<T: Scalar>(x: f64) -> Result<T> {
    T::from_f64(x).ok_or(Error::Inexact)
}

/// The rotation angle of r_φ in [0, 2π), as a float.
pub fn rotation_angle<T: Scalar>(m: &Mat2<T>) -> Result<f64> {
    if !m.is_rotation() || !m.det().approx_eq(&T::one()) {
        return Err(Error::NotRotation);
    }
    let (c, a) = (to_f64(&m.c), to_f64(&m.a));
    if m.c.is_negligible() {
        return Ok(if m.a.is_positive() { 0.0 } else { std::f64::consts::PI });
    }
    Ok(c.atan2(a).rem_euclid(std::f64::consts::TAU))
}

fn to_f64<T: Scalar>(x: &T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// σ_{n/2}: (r_φ, ε(φ/2)) ↦ e^{inφ/2}, extended to the other sheet by (−1)^n.
pub fn sigma_char<T: Scalar>(n: i64, k: &CoverElement<T>) -> Result<Complex<f64>> {
    let phi = rotation_angle(&k.mat)?;
    // For φ ∈ [0, 2π), ε(φ/2) = +1 exactly when φ ∈ [0, π), i.e. sin φ > 0 or φ = 0.
    let on_sheet = if k.mat.c.is_negligible() {
        k.mat.a.is_positive()
    } else {
        k.mat.c.is_positive()
    };
    let base = Complex::from_polar(1.0, n as f64 * phi / 2.0);
    if k.sign == Sign::from_negative(!on_sheet) || n % 2 == 0 {
        Ok(base)
    } else {
        Ok(-base)
    }
}

/// g = x(n)·h(a)·k with a > 0 and k over a rotation.
#[derive(Clone, Debug, PartialEq)]
pub struct IwasawaData<T> {
    pub n_param: T,
    pub a_param: T,
    pub k: CoverElement<T>,
}

impl<T: Scalar> IwasawaData<T> {
    pub fn recompose(&self) -> CoverElement<T> {
        let a = gen_h(self.a_param.clone()).expect("a_param is positive");
        gen_x(self.n_param.clone()).mul(&a.mul(&self.k))
    }
}

/// Iwasawa decomposition in the cover.
///
/// Exact types fail with [`Error::Inexact`] unless c² + d² is a rational square.
pub fn iwasawa<T: Scalar>(g: &CoverElement<T>) -> Result<IwasawaData<T>> {
    let Mat2 { a, b, c, d } = g.mat.clone();
    let r2 = c.clone() * c.clone() + d.clone() * d.clone();
    let r = r2.sqrt_checked().ok_or(Error::Inexact)?;
    let n_param = (a * c.clone() + b * d.clone()) / r2;
    let a_param = T::one() / r.clone();
    let kmat = Mat2::new_unchecked(
        d.clone() / r.clone(),
        -(c.clone() / r.clone()),
        c / r.clone(),
        d / r,
    );
    let partial = gen_x(n_param.clone())
        .mul(&gen_h(a_param.clone())?.mul(&CoverElement::new(kmat.clone(), Sign::Plus)));
    let k = CoverElement::new(kmat, g.sign * partial.sign);
    Ok(IwasawaData { n_param, a_param, k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        BigRational::new(n.into(), d.into())
    }

    fn random_word(rng: &mut ChaCha8Rng) -> CoverElement<Q> {
        let len = rng.gen_range(0..=12);
        let mut g = CoverElement::identity();
        for _ in 0..len {
            let t = q(rng.gen_range(-6..=6), rng.gen_range(1..=4));
            let step = if rng.gen_bool(0.5) { gen_x(t) } else { gen_y(t) };
            g = g.mul(&step);
        }
        if rng.gen_bool(0.3) {
            g = g.mul(&gen_h(q(rng.gen_range(1..=5), rng.gen_range(1..=5)) * q(-1, 1)).unwrap());
        }
        g
    }

    #[test]
    fn x_entry_examples() {
        assert_eq!(x_entry(&Mat2::<Q>::identity()), q(1, 1));
        assert_eq!(x_entry(&gen_w(q(1, 1)).unwrap().mat), q(-1, 1));
        assert_eq!(x_entry(&gen_x(q(5, 3)).mat), q(1, 1));
    }

    #[test]
    fn kubota_examples() {
        let h = gen_h(q(-1, 1)).unwrap().mat;
        assert_eq!(kubota(&h, &h), Sign::Minus);
        let w = gen_w(q(1, 1)).unwrap().mat;
        assert_eq!(kubota(&w, &w), Sign::Plus);
        assert_eq!(kubota(&Mat2::identity(), &w), Sign::Plus);
    }

    #[test]
    fn mul_examples() {
        let h = gen_h(q(-1, 1)).unwrap();
        assert_eq!(h.mul(&h), CoverElement::central());
        assert_eq!(h.sign, Sign::Minus);
        assert_eq!(h.mat, Mat2::new(q(-1, 1), q(0, 1), q(0, 1), q(-1, 1)).unwrap());
        let w = gen_w(q(1, 1)).unwrap().mul(&gen_w(q(-1, 1)).unwrap());
        assert_eq!(w, CoverElement::identity());
        assert_eq!(gen_x(q(0, 1)), CoverElement::identity());
    }

    #[test]
    fn w_from_unipotents() {
        for t in [q(1, 1), q(-1, 1), q(2, 1), q(-2, 1), q(1, 3)] {
            let lhs = gen_w(t.clone()).unwrap();
            let rhs = product(&[gen_x(t.clone()), gen_y(-(q(1, 1) / t.clone())), gen_x(t)]);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn h_is_w_times_w() {
        for t in [q(3, 1), q(-3, 2), q(1, 7), q(-1, 1)] {
            let lhs = gen_h(t.clone()).unwrap();
            let rhs = gen_w(t).unwrap().mul(&gen_w(q(-1, 1)).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn steinberg_relation() {
        let ts = [q(1, 1), q(-2, 1), q(3, 2), q(-1, 5)];
        let us = [q(1, 1), q(-3, 1), q(2, 7), q(0, 1)];
        for t in &ts {
            for u in &us {
                let lhs = product(&[
                    gen_w(t.clone()).unwrap(),
                    gen_x(u.clone()),
                    gen_w(-t.clone()).unwrap(),
                ]);
                let rhs = gen_y(-(u.clone() / (t.clone() * t.clone())));
                assert_eq!(lhs, rhs, "t={t} u={u}");
            }
        }
    }

    #[test]
    fn cocycle_and_associativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let boundary = [
            gen_x(q(2, 1)),
            gen_h(q(-3, 1)).unwrap(),
            gen_h(q(1, 2)).unwrap(),
            CoverElement::central(),
        ];
        for i in 0..2000 {
            let mut g: Vec<CoverElement<Q>> = (0..3).map(|_| random_word(&mut rng)).collect();
            if i % 10 == 0 {
                g[i / 10 % 3] = boundary[i / 30 % boundary.len()].clone();
            }
            let (a, b, c) = (&g[0].mat, &g[1].mat, &g[2].mat);
            assert_eq!(
                kubota(a, b) * kubota(&a.mul(b), c),
                kubota(a, &b.mul(c)) * kubota(b, c)
            );
            assert_eq!(g[0].mul(&g[1]).mul(&g[2]), g[0].mul(&g[1].mul(&g[2])));
        }
    }

    #[test]
    fn inverse_is_two_sided() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let g = random_word(&mut rng);
            let inv = g.inverse();
            assert_eq!(g.mul(&inv), CoverElement::identity());
            assert_eq!(inv.mul(&g), CoverElement::identity());
        }
    }

    #[test]
    fn eps_values() {
        assert_eq!(eps(Angle::pi_multiple(0, 1)), Sign::Plus);
        assert_eq!(eps(Angle::pi_multiple(1, 2)), Sign::Minus);
        assert_eq!(eps(Angle::pi_multiple(1, 1)), Sign::Minus);
        assert_eq!(eps(Angle::pi_multiple(3, 2)), Sign::Plus);
        assert_eq!(eps(Angle::pi_multiple(1, 6)), Sign::Plus);
        assert_eq!(eps(Angle::pi_multiple(2, 3)), Sign::Minus);
        assert_eq!(eps(Angle::pi_multiple(-1, 6)), Sign::Plus);
        assert_eq!(eps(Angle::Radians(std::f64::consts::FRAC_PI_2)), Sign::Minus);
        assert_eq!(eps(Angle::Radians(std::f64::consts::PI * 1.5)), Sign::Plus);
        assert_eq!(eps(Angle::Radians(std::f64::consts::TAU - 1e-14)), Sign::Plus);
    }

    #[test]
    fn eps_matches_formula_off_exceptional_angles() {
        for k in 0..96 {
            if k % 12 == 0 {
                continue;
            }
            let theta = k as f64 * std::f64::consts::PI / 24.0;
            let s = theta.sin() * (2.0 * theta).sin();
            assert_eq!(eps(Angle::pi_multiple(k, 24)), Sign::from_negative(s < 0.0), "k={k}");
        }
    }

    #[test]
    fn exp_rotation_examples() {
        let e0 = exp_rotation::<Q>(Angle::pi_multiple(0, 1)).unwrap();
        assert_eq!(e0, CoverElement::identity());
        let epi = exp_rotation::<Q>(Angle::pi_multiple(1, 1)).unwrap();
        assert_eq!(epi, gen_h(q(-1, 1)).unwrap());
        let e2pi = exp_rotation::<Q>(Angle::pi_multiple(2, 1)).unwrap();
        assert_eq!(e2pi, CoverElement::central());
        assert_eq!(
            exp_rotation::<Q>(Angle::pi_multiple(1, 3)),
            Err(Error::Inexact)
        );
    }

    #[test]
    fn exp_rotation_is_a_homomorphism() {
        for j in 0..48 {
            for k in 0..48 {
                let a = Angle::pi_multiple(j, 12);
                let b = Angle::pi_multiple(k, 12);
                let lhs = exp_rotation::<f64>(a)
                    .unwrap()
                    .mul(&exp_rotation::<f64>(b).unwrap());
                let rhs = exp_rotation::<f64>(a.add(b)).unwrap();
                assert!(lhs.approx_eq(&rhs), "j={j} k={k}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let m = exp_rotation::<Q>(Angle::pi_multiple(1, 1)).unwrap();
        let v = sigma_char(1, &m).unwrap();
        assert!((v - Complex::new(0.0, 1.0)).norm() < 1e-15);
        for n in -3..=3 {
            let one = sigma_char(n, &CoverElement::<Q>::identity()).unwrap();
            assert!((one - Complex::new(1.0, 0.0)).norm() < 1e-15);
            let z = sigma_char(n, &CoverElement::<Q>::central()).unwrap();
            let expect = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((z - Complex::new(expect, 0.0)).norm() < 1e-15);
        }
        assert_eq!(sigma_char(1, &gen_x(q(1, 1))), Err(Error::NotRotation));
    }

    #[test]
    fn sigma_is_multiplicative() {
        let elems: Vec<CoverElement<f64>> = (0..24)
            .flat_map(|k| {
                let e = exp_rotation::<f64>(Angle::pi_multiple(k, 6)).unwrap();
                [e.clone(), e.mul(&CoverElement::central())]
            })
            .collect();
        for n in -3..=3 {
            for x in &elems {
                for y in &elems {
                    let lhs = sigma_char(n, &x.mul(y)).unwrap();
                    let rhs = sigma_char(n, x).unwrap() * sigma_char(n, y).unwrap();
                    assert!((lhs - rhs).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn projection_of_exp_rotation_is_linear_rotation() {
        for k in 0..48 {
            let phi = k as f64 * std::f64::consts::PI / 12.0;
            let e = exp_rotation::<f64>(Angle::Radians(phi)).unwrap();
            assert!((e.mat.a - phi.cos()).abs() < 1e-14, "k={k} {} {}", e.mat.a, phi.cos());
            assert!((e.mat.c - phi.sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn iwasawa_examples() {
        let id = iwasawa(&CoverElement::<Q>::identity()).unwrap();
        assert_eq!(id.n_param, q(0, 1));
        assert_eq!(id.a_param, q(1, 1));
        assert_eq!(id.k, CoverElement::identity());

        let ybar = iwasawa(&gen_y(1.0_f64)).unwrap();
        assert!((ybar.a_param - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((rotation_angle(&ybar.k.mat).unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert_eq!(ybar.k.sign, Sign::Plus);

        let h = iwasawa(&gen_h(q(-1, 1)).unwrap()).unwrap();
        assert_eq!(h.n_param, q(0, 1));
        assert_eq!(h.a_param, q(1, 1));
        assert_eq!(h.k, exp_rotation(Angle::pi_multiple(1, 1)).unwrap());
        assert_eq!(h.k.sign, Sign::Minus);

        assert_eq!(iwasawa(&gen_y(q(1, 1))), Err(Error::Inexact));
    }

    #[test]
    fn iwasawa_recomposes() {
        // c, d from Pythagorean triples keep the rational path exact
        let triples = [(3, 4), (4, 3), (-3, 4), (5, 12), (-12, -5), (0, 1), (0, -2), (8, -15)];
        for (c, d) in triples {
            for (a_num, b) in [(1, 0), (2, 1), (-3, 7)] {
                let (c, d) = (q(c, 1), q(d, 1));
                // pick a, b with ad − bc = 1
                let (a, b) = if d != q(0, 1) {
                    let b = q(b, 1);
                    ((q(1, 1) + b.clone() * c.clone()) / d.clone(), b)
                } else {
                    (q(a_num, 1), -(q(1, 1) / c.clone()))
                };
                for sign in [Sign::Plus, Sign::Minus] {
                    let g = CoverElement::new(Mat2::new(a.clone(), b.clone(), c.clone(), d.clone()).unwrap(), sign);
                    let data = iwasawa(&g).unwrap();
                    assert!(data.a_param > q(0, 1));
                    assert!(data.k.mat.is_rotation());
                    assert_eq!(data.recompose(), g);
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let g = random_word(&mut rng).mat.map(|x| x.to_f64().unwrap());
            for sign in [Sign::Plus, Sign::Minus] {
                let g = CoverElement::new(g.clone(), sign);
                let data = iwasawa(&g).unwrap();
                assert!(data.recompose().approx_eq(&g));
            }
        }
    }

    #[test]
    fn rejects_zero_parameters() {
        assert_eq!(gen_w(q(0, 1)), Err(Error::ZeroParameter));
        assert_eq!(gen_h(0.0), Err(Error::ZeroParameter));
        assert_eq!(Mat2::new(1.0, 1.0, 1.0, 1.0), Err(Error::NotUnimodular));
    }
}
