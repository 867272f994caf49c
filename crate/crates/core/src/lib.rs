//! Exact arithmetic in the metaplectic double cover of split real Chevalley
//! groups, and the Harish-Chandra c-functions of its pseudospherical
//! principal series.
//!
//! Group-law code is generic over [`Scalar`], so the same routines run on
//! `f64` and on exact rationals. Special functions are generic over [`Real`].

pub mod cfunction;
pub mod cover_torus;
pub mod error;
pub mod intertwine;
pub mod rootsys;
pub mod scalar;
pub mod sl2cover;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Real, Scalar, Sign};

use num_complex::Complex;

/// Exact rationals of arbitrary size.
pub type Rational = num_rational::BigRational;
/// Double-precision complex numbers.
pub type C64 = Complex<f64>;

pub type ExactCover = sl2cover::CoverElement<Rational>;
pub type FloatCover = sl2cover::CoverElement<f64>;
pub type ExactMat2 = sl2cover::Mat2<Rational>;
pub type ExactTorusElement = cover_torus::TorusElement<Rational>;
pub type CValue64 = cfunction::CValue<f64>;
pub type SpectralParam64 = intertwine::SpectralParam<C64>;
pub type CFactor64 = intertwine::CFactorResult<f64>;
