//! Scalar traits shared by the exact and floating-point code paths.
//!
//! Group-law code ([`crate::sl2cover`], [`crate::cover_torus`]) is generic over
//! [`Scalar`], which is implemented for `f32`, `f64` and the exact rational
//! types. Special-function code ([`crate::cfunction`], [`crate::intertwine`])
//! is generic over [`Real`], i.e. `f32` or `f64`.

use std::fmt::Debug;
use std::ops::{Mul, MulAssign, Neg};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::{BigRational, Rational64};
use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// A field element whose sign can be read off exactly (or up to a documented
/// tolerance for floating point).
pub trait Scalar:
    Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive
{
    /// Whether the value counts as zero in sign-sensitive code.
    ///
    /// Exact types answer `is_zero()`. Floats use an absolute threshold so that
    /// products like `cos(π/12)cos(5π/12) - sin(π/12)sin(5π/12)` land on zero.
    fn is_negligible(&self) -> bool;

    /// True for the rational types, where arithmetic never rounds.
    const EXACT: bool = false;

    /// Square root when it exists in the type. Exact types only return perfect
    /// squares; floats return `None` for negative input.
    fn sqrt_checked(&self) -> Option<Self>;

    /// Approximate equality used when comparing recomposed matrices.
    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_negligible()
    }
}

/// Absolute threshold below which an `f64` is treated as zero by sign logic.
pub const F64_ZERO_TOL: f64 = 1e-12;
const F32_ZERO_TOL: f32 = 1e-5;

impl Scalar for f64 {
    fn is_negligible(&self) -> bool {
        self.abs() <= F64_ZERO_TOL
    }

    fn sqrt_checked(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= F64_ZERO_TOL * self.abs().max(other.abs()).max(1.0)
    }
}

impl Scalar for f32 {
    fn is_negligible(&self) -> bool {
        self.abs() <= F32_ZERO_TOL
    }

    fn sqrt_checked(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= F32_ZERO_TOL * self.abs().max(other.abs()).max(1.0)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn sqrt_checked(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt_big(self.numer())?;
        let d = exact_isqrt_big(self.denom())?;
        Some(BigRational::new(n, d))
    }
}

impl Scalar for Rational64 {
    const EXACT: bool = true;

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn sqrt_checked(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt_i64(*self.numer())?;
        let d = exact_isqrt_i64(*self.denom())?;
        Some(Rational64::new(n, d))
    }
}

fn exact_isqrt_big(x: &BigInt) -> Option<BigInt> {
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

fn exact_isqrt_i64(x: i64) -> Option<i64> {
    let r = x.sqrt();
    (r * r == x).then_some(r)
}

/// Floating-point type for the special-function and quadrature code.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Send + Sync + 'static {
    /// Lossless-enough conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// An element of μ₂ = {±1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `Minus` iff `negative`.
    pub fn from_negative(negative: bool) -> Self {
        if negative {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// The sign of an odd/even exponent applied to −1.
    pub fn from_parity(odd: bool) -> Self {
        Self::from_negative(odd)
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `self` raised to an integer power; only the parity of `e` matters.
    pub fn pow(self, e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            self
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_negative(self != rhs)
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}
