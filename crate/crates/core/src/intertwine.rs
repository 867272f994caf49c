//! Scalar shadows of the standard intertwining operators on the
//! pseudospherical K-type: the W-action on spectral parameters, the
//! per-reflection c-factors and their products along reduced words.

use num_complex::Complex;
use num_traits::{FromPrimitive, Num};

use crate::cfunction::{c0, c_half, CValue};
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, WeylElement, WeylWord};
use crate::scalar::Real;

/// Relative tolerance for comparing c-factor products.
pub const COCYCLE_TOL: f64 = 1e-10;

/// s = (s_1, …, s_l), the character h_1(t_1)⋯h_l(t_l) ↦ t_1^{s_1}⋯t_l^{s_l}.
///
/// Identified with the weight λ having λ(H_i) = s_i.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralParam<T> {
    coords: Vec<T>,
}

impl<T: Clone> SpectralParam<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

fn check_rank<T>(rs: &RootSystem, s: &SpectralParam<T>) -> Result<()> {
    if s.coords.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            got: s.coords.len(),
            rank: rs.rank(),
        });
    }
    Ok(())
}

fn int<T: FromPrimitive>(k: i64) -> T {
    T::from_i64(k).expect("small integer")
}

/// (ws)_i = λ(H_{w⁻¹α_i}).
pub fn act_on_param<T>(rs: &RootSystem, w: &WeylElement, s: &SpectralParam<T>) -> Result<SpectralParam<T>>
where
    T: Clone + Num + FromPrimitive,
{
    check_rank(rs, s)?;
    let l = rs.rank();
    let coords = (0..l)
        .map(|i| {
            let mut unit = vec![0; l];
            unit[i] = 1;
            let root = Root::new(w.apply_inverse(&unit));
            let h = rs.coroot_coords(&root)?;
            Ok(h.iter()
                .zip(&s.coords)
                .fold(T::zero(), |acc, (c, x)| acc + int::<T>(*c) * x.clone()))
        })
        .collect::<Result<Vec<T>>>()?;
    Ok(SpectralParam { coords })
}

/// s_i acting on s: (s_i s)_j = s_j − ⟨α_i, α_j^∨⟩ s_i.
fn simple_act<T>(rs: &RootSystem, i: usize, s: &SpectralParam<T>) -> SpectralParam<T>
where
    T: Clone + Num + FromPrimitive,
{
    let a = rs.cartan();
    let si = s.coords[i].clone();
    let coords = s
        .coords
        .iter()
        .enumerate()
        .map(|(j, x)| x.clone() - int::<T>(a[i][j]) * si.clone())
        .collect();
    SpectralParam { coords }
}

/// c(w_i, s): c_{1/2}(s_i) for a metaplectic α_i, c₀(s_i) otherwise.
pub fn simple_factor<R: Real>(rs: &RootSystem, i: usize, s: &SpectralParam<Complex<R>>) -> Result<CValue<R>> {
    rs.check_index(i)?;
    check_rank(rs, s)?;
    let si = s.coords[i];
    Ok(if rs.is_simple_metaplectic(i) {
        c_half(si)
    } else {
        c0(si)
    })
}

/// One factor of a c-factor product.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceEntry<R> {
    /// Zero-based simple root index.
    pub index: usize,
    /// The coordinate s_i of the transported parameter.
    pub argument: Complex<R>,
    pub value: CValue<R>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CFactorResult<R> {
    pub value: CValue<R>,
    /// Factors in the order they are applied, rightmost letter first.
    pub trace: Vec<TraceEntry<R>>,
}

/// c(w, s) = c(w_1, w_2⋯w_n s) c(w_2, w_3⋯w_n s) ⋯ c(w_n, s) along a reduced word.
pub fn c_factor<R: Real>(
    rs: &RootSystem,
    word: &WeylWord,
    s: &SpectralParam<Complex<R>>,
) -> Result<CFactorResult<R>> {
    check_rank(rs, s)?;
    if !rs.is_reduced(word)? {
        return Err(Error::NotReduced(word.to_string()));
    }
    let mut param = s.clone();
    let mut value = CValue::Finite(Complex::new(R::one(), R::zero()));
    let mut trace = Vec::with_capacity(word.len());
    for &i in word.letters().iter().rev() {
        let f = simple_factor(rs, i, &param)?;
        value = value.mul(&f);
        trace.push(TraceEntry {
            index: i,
            argument: param.coords[i],
            value: f,
        });
        param = simple_act(rs, i, &param);
    }
    Ok(CFactorResult { value, trace })
}

/// Whether two c-values agree: finite values to relative [`COCYCLE_TOL`],
/// otherwise by kind.
pub fn cvalues_agree<R: Real>(a: &CValue<R>, b: &CValue<R>) -> bool {
    match (a, b) {
        (CValue::Finite(x), CValue::Finite(y)) => {
            let scale = x.norm().max(y.norm());
            scale == R::zero() || (*x - *y).norm() <= R::lit(COCYCLE_TOL) * scale
        }
        _ => a == b,
    }
}

/// c(w₁w₂, s) = c(w₁, w₂s) · c(w₂, s) for a length-additive pair.
pub fn cocycle_check<R: Real>(
    rs: &RootSystem,
    w1: &WeylElement,
    w2: &WeylElement,
    s: &SpectralParam<Complex<R>>,
) -> Result<bool> {
    let w = rs.compose(w1, w2);
    let sum = w1.length() + w2.length();
    if w.length() != sum {
        return Err(Error::NotLengthAdditive {
            product: w.length(),
            sum,
        });
    }
    let whole = c_factor(rs, w.canonical_word(), s)?.value;
    let moved = act_on_param(rs, w2, s)?;
    let left = c_factor(rs, w1.canonical_word(), &moved)?.value;
    let right = c_factor(rs, w2.canonical_word(), s)?.value;
    Ok(cvalues_agree(&whole, &left.mul(&right)))
}

/// ρ − wρ = Σ_{α ∈ Φ⁺, w⁻¹α < 0} α, checked on doubled (integral) vectors.
pub fn delta_w_identity(rs: &RootSystem, w: &WeylElement) -> bool {
    let two_rho = rs.two_rho();
    let moved = w.apply(&two_rho);
    let mut inversions = vec![0i64; rs.rank()];
    for r in rs.inversion_set(w) {
        for (acc, c) in inversions.iter_mut().zip(r.coords()) {
            *acc += 2 * c;
        }
    }
    two_rho
        .iter()
        .zip(&moved)
        .zip(&inversions)
        .all(|((a, b), c)| a - b == *c)
}

/// The normalized operator's scalar, which is 1 wherever c(w, s) is finite
/// and nonzero.
pub fn normalized_factor<R: Real>(
    rs: &RootSystem,
    word: &WeylWord,
    s: &SpectralParam<Complex<R>>,
) -> Result<CValue<R>> {
    match c_factor(rs, word, s)?.value {
        CValue::Pole => Err(Error::Pole),
        CValue::Indeterminate => Err(Error::Indeterminate),
        v if v.is_zero() => Err(Error::Zero),
        _ => Ok(CValue::Finite(Complex::new(R::one(), R::zero()))),
    }
}

/// Whether no factor of c(w, s) sits on a pole or zero (within the pole
/// tolerance of the Gamma evaluation).
pub fn is_generic<R: Real>(rs: &RootSystem, word: &WeylWord, s: &SpectralParam<Complex<R>>) -> Result<bool> {
    Ok(c_factor(rs, word, s)?
        .trace
        .iter()
        .all(|t| matches!(t.value, CValue::Finite(_)) && !t.value.is_zero()))
}
