//! The torus of the double cover, in the normal form ε·h_1(t_1)⋯h_l(t_l).
//!
//! Multiplication uses the real Hilbert symbol as the cocycle: squares of a
//! simple h_i pick up `(t,u)^{square_exponent(i)}` and commuting h_j past h_i
//! costs `(t,u)^{comm_exponent(i,j)}`.

mod mgroup;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::scalar::{Scalar, Sign};

pub use mgroup::{Center, GenuineCentralCharacter, MElement, MGroup, Unit4, M_RANK_BOUND};

/// The real Hilbert symbol: −1 iff both arguments are negative.
pub fn hilbert<T: Scalar>(t: &T, u: &T) -> Result<Sign> {
    if t.is_zero() || u.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok(Sign::from_negative(t.is_negative() && u.is_negative()))
}

/// Exponent in h_i(t)h_i(u) = (t,u)^e h_i(tu): 1 for long α_i, n_Φ for short.
pub fn square_exponent(rs: &RootSystem, i: usize) -> Result<i64> {
    rs.check_index(i)?;
    Ok(if rs.is_simple_long(i) { 1 } else { rs.n_phi() })
}

/// Exponent in the commutator (h_i(t), h_j(u)) = (t,u)^e, by the four
/// long/short cases.
pub fn comm_exponent(rs: &RootSystem, i: usize, j: usize) -> Result<i64> {
    rs.check_index(i)?;
    rs.check_index(j)?;
    if i == j {
        return Err(Error::SameIndex(i));
    }
    let a = rs.cartan();
    Ok(match (rs.is_simple_long(i), rs.is_simple_long(j)) {
        (true, _) => a[i][j],
        (false, true) => a[j][i],
        (false, false) => rs.n_phi() * a[i][j],
    })
}

/// ε·h_1(t_1)⋯h_l(t_l).
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement<T> {
    params: Vec<T>,
    sign: Sign,
}

impl<T: Scalar> TorusElement<T> {
    pub fn new(params: Vec<T>, sign: Sign) -> Result<Self> {
        if params.iter().any(|t| t.is_zero()) {
            return Err(Error::ZeroParameter);
        }
        Ok(Self { params, sign })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            params: vec![T::one(); rank],
            sign: Sign::Plus,
        }
    }

    /// The nontrivial central element z = (1,…,1; −1).
    pub fn central(rank: usize) -> Self {
        Self {
            params: vec![T::one(); rank],
            sign: Sign::Minus,
        }
    }

    /// h_i(t) for a simple root α_i.
    pub fn simple(rank: usize, i: usize, t: T) -> Result<Self> {
        if i >= rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        let mut params = vec![T::one(); rank];
        params[i] = t;
        Self::new(params, Sign::Plus)
    }

    pub fn params(&self) -> &[T] {
        &self.params
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn rank(&self) -> usize {
        self.params.len()
    }
}

/// Multiplication context for the covered torus of one root system.
#[derive(Clone, Debug)]
pub struct CoverTorus {
    rank: usize,
    square: Vec<i64>,
    /// comm[i][j] for i ≠ j; zero on the diagonal.
    comm: Vec<Vec<i64>>,
}

impl CoverTorus {
    pub fn new(rs: &RootSystem) -> Self {
        let rank = rs.rank();
        let square = (0..rank)
            .map(|i| square_exponent(rs, i).expect("index in range"))
            .collect();
        let comm = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            0
                        } else {
                            comm_exponent(rs, i, j).expect("index in range")
                        }
                    })
                    .collect()
            })
            .collect();
        Self { rank, square, comm }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn square_exponents(&self) -> &[i64] {
        &self.square
    }

    pub fn comm_exponents(&self) -> &[Vec<i64>] {
        &self.comm
    }

    fn check<T>(&self, x: &TorusElement<T>) -> Result<()> {
        if x.params.len() != self.rank {
            return Err(Error::DimensionMismatch {
                got: x.params.len(),
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// Normal form of x·y.
    ///
    /// Each h_j(u_j) moves left past h_i(t_i) for i > j, then merges with
    /// h_j(t_j).
    pub fn mul<T: Scalar>(&self, x: &TorusElement<T>, y: &TorusElement<T>) -> Result<TorusElement<T>> {
        self.check(x)?;
        self.check(y)?;
        let mut sign = x.sign * y.sign;
        for j in 0..self.rank {
            for i in j + 1..self.rank {
                sign *= hilbert(&x.params[i], &y.params[j])?.pow(self.comm[i][j]);
            }
            sign *= hilbert(&x.params[j], &y.params[j])?.pow(self.square[j]);
        }
        let params = x
            .params
            .iter()
            .zip(&y.params)
            .map(|(t, u)| t.clone() * u.clone())
            .collect();
        Ok(TorusElement { params, sign })
    }

    pub fn inverse<T: Scalar>(&self, x: &TorusElement<T>) -> Result<TorusElement<T>> {
        self.check(x)?;
        let candidate = TorusElement {
            params: x.params.iter().map(|t| T::one() / t.clone()).collect(),
            sign: Sign::Plus,
        };
        let residue = self.mul(x, &candidate)?;
        Ok(TorusElement {
            sign: residue.sign,
            ..candidate
        })
    }
}
