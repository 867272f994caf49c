//! The finite group M generated by m_i = h_i(−1), a central extension of
//! (Z/2)^l by μ₂.
//!
//! Elements are stored as a bitmask of exponents plus a sign. Products are
//! computed from the mod-2 structure constants instead of a materialized
//! table, so ranks up to 16 stay cheap.

use num_complex::Complex;

use super::CoverTorus;
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::scalar::Sign;

/// Largest rank accepted by [`MGroup::new`].
pub const M_RANK_BOUND: usize = 16;
const TABLE_ORDER_BOUND: u64 = 1 << 12;

/// sign·m_1^{b_1}⋯m_l^{b_l}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MElement {
    bits: u32,
    sign: Sign,
}

impl MElement {
    pub fn new(bits: u32, sign: Sign) -> Self {
        Self { bits, sign }
    }

    pub fn identity() -> Self {
        Self::new(0, Sign::Plus)
    }

    pub fn central() -> Self {
        Self::new(0, Sign::Minus)
    }

    pub fn generator(i: usize) -> Self {
        Self::new(1 << i, Sign::Plus)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Exponent vector (b_1, …, b_l).
    pub fn exponents(&self, rank: usize) -> Vec<u8> {
        (0..rank).map(|i| ((self.bits >> i) & 1) as u8).collect()
    }

    pub fn negated(self) -> Self {
        Self::new(self.bits, -self.sign)
    }
}

/// A fourth root of unity i^k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unit4(u8);

impl Unit4 {
    pub const ONE: Unit4 = Unit4(0);
    pub const I: Unit4 = Unit4(1);
    pub const MINUS_ONE: Unit4 = Unit4(2);
    pub const MINUS_I: Unit4 = Unit4(3);

    pub fn from_exponent(k: i64) -> Self {
        Unit4(k.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn mul(self, other: Unit4) -> Unit4 {
        Unit4((self.0 + other.0) % 4)
    }

    pub fn from_sign(s: Sign) -> Unit4 {
        match s {
            Sign::Plus => Unit4::ONE,
            Sign::Minus => Unit4::MINUS_ONE,
        }
    }

    pub fn to_complex(self) -> Complex<f64> {
        match self.0 {
            0 => Complex::new(1.0, 0.0),
            1 => Complex::new(0.0, 1.0),
            2 => Complex::new(-1.0, 0.0),
            _ => Complex::new(0.0, -1.0),
        }
    }
}

impl std::fmt::Display for Unit4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(["1", "i", "-1", "-i"][self.0 as usize])
    }
}

/// Z(M) = {±m^b : b ∈ K}, K the radical of the commutator form over F₂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Center {
    /// Basis of K in reduced echelon form; `pivots[r]` is a bit set only in `basis[r]`.
    basis: Vec<u32>,
    pivots: Vec<u32>,
}

impl Center {
    pub fn order(&self) -> u64 {
        1u64 << (self.basis.len() + 1)
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    /// Coefficients of `bits` in the basis, if it lies in K.
    fn coordinates(&self, bits: u32) -> Option<Vec<bool>> {
        let mut rest = bits;
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for (b, p) in self.basis.iter().zip(&self.pivots) {
            let c = bits & p != 0;
            if c {
                rest ^= b;
            }
            coeffs.push(c);
        }
        (rest == 0).then_some(coeffs)
    }

    pub fn contains(&self, m: &MElement) -> bool {
        self.coordinates(m.bits).is_some()
    }

    /// All elements of Z(M), with `+` before `−` for each exponent vector.
    pub fn elements(&self) -> impl Iterator<Item = MElement> + '_ {
        (0u64..1 << self.basis.len()).flat_map(move |mask| {
            let bits = self
                .basis
                .iter()
                .enumerate()
                .filter(|(r, _)| mask >> r & 1 == 1)
                .fold(0u32, |acc, (_, b)| acc ^ b);
            [MElement::new(bits, Sign::Plus), MElement::new(bits, Sign::Minus)]
        })
    }
}

/// A character of Z(M) with χ(z) = −1, stored by its values on the
/// generators m^{b_r} (b_r the center basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenuineCentralCharacter {
    generators: Vec<MElement>,
    values: Vec<Unit4>,
}

impl GenuineCentralCharacter {
    pub fn generators(&self) -> &[MElement] {
        &self.generators
    }

    pub fn generator_values(&self) -> &[Unit4] {
        &self.values
    }
}

/// The group M of one root system.
#[derive(Clone, Debug)]
pub struct MGroup {
    rank: usize,
    /// comm_rows[i] has bit j set iff comm_exponent(i, j) is odd.
    comm_rows: Vec<u32>,
    /// bit i set iff square_exponent(i) is odd.
    square_mask: u32,
    metaplectic: Vec<bool>,
    center: Center,
}

impl MGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let rank = rs.rank();
        if rank > M_RANK_BOUND {
            return Err(Error::RankBoundExceeded {
                rank,
                bound: M_RANK_BOUND,
            });
        }
        let torus = CoverTorus::new(rs);
        let comm_rows: Vec<u32> = torus
            .comm_exponents()
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, e)| e.rem_euclid(2) == 1)
                    .fold(0u32, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        let square_mask = torus
            .square_exponents()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.rem_euclid(2) == 1)
            .fold(0u32, |acc, (i, _)| acc | 1 << i);
        let center = radical(&comm_rows, rank);
        Ok(Self {
            rank,
            comm_rows,
            square_mask,
            metaplectic: (0..rank).map(|i| rs.is_simple_metaplectic(i)).collect(),
            center,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> u64 {
        1u64 << (self.rank + 1)
    }

    /// The specialization of the torus product to parameters ±1.
    pub fn mul(&self, x: &MElement, y: &MElement) -> MElement {
        let mut odd = (x.bits & y.bits & self.square_mask).count_ones();
        for i in 0..self.rank {
            if x.bits >> i & 1 == 1 {
                let lower = (1u32 << i) - 1;
                odd += (y.bits & lower & self.comm_rows[i]).count_ones();
            }
        }
        MElement::new(
            x.bits ^ y.bits,
            x.sign * y.sign * Sign::from_parity(odd % 2 == 1),
        )
    }

    pub fn inverse(&self, x: &MElement) -> MElement {
        let sq = self.mul(x, &MElement::new(x.bits, Sign::Plus));
        MElement::new(x.bits, sq.sign)
    }

    pub fn commutes(&self, x: &MElement, y: &MElement) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn elements(&self) -> impl Iterator<Item = MElement> {
        let rank = self.rank;
        (0u64..1 << rank).flat_map(|b| {
            [
                MElement::new(b as u32, Sign::Plus),
                MElement::new(b as u32, Sign::Minus),
            ]
        })
    }

    /// Index of an element in [`MGroup::cayley_table`].
    pub fn element_index(&self, x: &MElement) -> usize {
        x.bits as usize | (x.sign.is_minus() as usize) << self.rank
    }

    /// Full multiplication table, for groups of order at most 4096.
    pub fn cayley_table(&self) -> Result<Vec<Vec<usize>>> {
        if self.order() > TABLE_ORDER_BOUND {
            return Err(Error::TableTooLarge(self.order()));
        }
        let n = self.order() as usize;
        let elem = |k: usize| {
            MElement::new(
                (k & ((1 << self.rank) - 1)) as u32,
                Sign::from_negative(k >> self.rank == 1),
            )
        };
        Ok((0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.element_index(&self.mul(&elem(a), &elem(b))))
                    .collect()
            })
            .collect())
    }

    pub fn is_abelian(&self) -> bool {
        self.center.dimension() == self.rank
    }

    pub fn center(&self) -> &Center {
        &self.center
    }

    /// Every character of Z(M) sending z to −1; |Z(M)|/2 of them.
    pub fn genuine_central_characters(&self) -> Vec<GenuineCentralCharacter> {
        let generators: Vec<MElement> = self
            .center
            .basis
            .iter()
            .map(|&b| MElement::new(b, Sign::Plus))
            .collect();
        // χ(g)² = χ(g²) = χ(z)^q, so χ(g) ∈ {±1} or {±i}.
        let base: Vec<Unit4> = generators
            .iter()
            .map(|g| {
                if self.mul(g, g).sign.is_minus() {
                    Unit4::I
                } else {
                    Unit4::ONE
                }
            })
            .collect();
        let k = generators.len();
        (0u64..1 << k)
            .map(|choice| GenuineCentralCharacter {
                generators: generators.clone(),
                values: base
                    .iter()
                    .enumerate()
                    .map(|(r, v)| {
                        if choice >> r & 1 == 1 {
                            v.mul(Unit4::MINUS_ONE)
                        } else {
                            *v
                        }
                    })
                    .collect(),
            })
            .collect()
    }

    /// χ(g) for g ∈ Z(M); `None` when g is not central.
    pub fn evaluate(&self, chi: &GenuineCentralCharacter, g: &MElement) -> Option<Unit4> {
        let coeffs = self.center.coordinates(g.bits)?;
        let mut acc = MElement::identity();
        let mut value = Unit4::ONE;
        for ((c, gen), v) in coeffs.iter().zip(&chi.generators).zip(&chi.values) {
            if *c {
                acc = self.mul(&acc, gen);
                value = value.mul(*v);
            }
        }
        debug_assert_eq!(acc.bits, g.bits);
        // g = (g.sign · acc.sign) · acc, and χ(z) = −1
        Some(value.mul(Unit4::from_sign(g.sign * acc.sign)))
    }

    /// |M/Z(M)|^{1/2}, the common dimension of the genuine irreducibles.
    pub fn pseudospherical_dim(&self) -> Result<u64> {
        let index = self.order() / self.center.order();
        let root = (index as f64).sqrt().round() as u64;
        if root * root != index {
            return Err(Error::NonSquareIndex(index));
        }
        Ok(root)
    }

    /// Pseudospherical test at the simple roots: a non-metaplectic m_i must be
    /// central with χ(m_i) = 1; a central metaplectic m_i must have χ(m_i) = ±i.
    /// Non-central m_i act with trace zero, so both ±i occur automatically.
    pub fn is_pseudospherical(&self, chi: &GenuineCentralCharacter) -> bool {
        (0..self.rank).all(|i| {
            let m = MElement::generator(i);
            match (self.metaplectic[i], self.evaluate(chi, &m)) {
                (false, None) => false,
                (false, Some(v)) => v == Unit4::ONE,
                (true, None) => true,
                (true, Some(v)) => {
                    debug_assert!(v == Unit4::I || v == Unit4::MINUS_I);
                    v == Unit4::I || v == Unit4::MINUS_I
                }
            }
        })
    }
}

/// Radical {b : Σ_{i} b_i c_ij ≡ 0 for all j} of a symmetric F₂ form, as a
/// reduced echelon basis.
fn radical(rows: &[u32], rank: usize) -> Center {
    // Row-reduce the form (rows are also columns by symmetry).
    let mut mat: Vec<u32> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..rank {
        if let Some(p) = (r..rank).find(|&k| mat[k] >> col & 1 == 1) {
            mat.swap(r, p);
            for k in 0..rank {
                if k != r && mat[k] >> col & 1 == 1 {
                    mat[k] ^= mat[r];
                }
            }
            pivot_cols.push(col);
            r += 1;
        }
    }
    let free: Vec<usize> = (0..rank).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = 1u32 << f;
        for (row, &pc) in pivot_cols.iter().enumerate() {
            if mat[row] >> f & 1 == 1 {
                v |= 1 << pc;
            }
        }
        basis.push(v);
    }
    // Each free column appears in exactly one basis vector.
    let pivots = free.iter().map(|&f| 1u32 << f).collect();
    Center { basis, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystemSpec;

    fn m(name: &str) -> MGroup {
        MGroup::new(&RootSystem::from_type(name).unwrap()).unwrap()
    }

    fn element_order(g: &MGroup, x: &MElement) -> usize {
        let mut acc = *x;
        let mut k = 1;
        while acc != MElement::identity() {
            acc = g.mul(&acc, x);
            k += 1;
        }
        k
    }

    #[test]
    fn a1_is_cyclic_of_order_four() {
        let g = m("A1");
        assert_eq!(g.order(), 4);
        let gen = MElement::generator(0);
        assert_eq!(g.mul(&gen, &gen), MElement::central());
        assert_eq!(element_order(&g, &gen), 4);
        assert_eq!(g.center().order(), 4);
        assert_eq!(g.pseudospherical_dim().unwrap(), 1);
    }

    #[test]
    fn a2_is_quaternion_type() {
        let g = m("A2");
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        assert_eq!(element_order(&g, &MElement::generator(0)), 4);
        assert_eq!(element_order(&g, &MElement::generator(1)), 4);
        assert_eq!(g.center().order(), 2);
        assert_eq!(g.genuine_central_characters().len(), 1);
        assert_eq!(g.pseudospherical_dim().unwrap(), 2);
        // every non-identity, non-z element of Q8 has order 4
        for x in g.elements() {
            if x != MElement::identity() && x != MElement::central() {
                assert_eq!(element_order(&g, &x), 4);
            }
        }
    }

    #[test]
    fn b2_is_abelian() {
        let g = m("B2");
        assert!(g.is_abelian());
        assert_eq!(g.center().order(), 8);
        assert_eq!(g.genuine_central_characters().len(), 4);
        assert_eq!(g.pseudospherical_dim().unwrap(), 1);
    }

    #[test]
    fn center_matches_brute_force() {
        for spec in RootSystemSpec::all_up_to_rank(5) {
            let g = MGroup::new(&RootSystem::new(spec)).unwrap();
            let brute: Vec<MElement> = g
                .elements()
                .filter(|x| g.elements().all(|y| g.commutes(x, &y)))
                .collect();
            let mut fast: Vec<MElement> = g.center().elements().collect();
            fast.sort();
            let mut brute = brute;
            brute.sort();
            assert_eq!(fast, brute, "{spec}");
        }
    }

    #[test]
    fn characters_are_multiplicative() {
        for name in ["A1", "B2", "C3", "D4", "G2", "B3"] {
            let g = m(name);
            let center: Vec<MElement> = g.center().elements().collect();
            for chi in g.genuine_central_characters() {
                assert_eq!(g.evaluate(&chi, &MElement::central()), Some(Unit4::MINUS_ONE));
                for x in &center {
                    for y in &center {
                        let lhs = g.evaluate(&chi, &g.mul(x, y)).unwrap();
                        let rhs = g.evaluate(&chi, x).unwrap().mul(g.evaluate(&chi, y).unwrap());
                        assert_eq!(lhs, rhs, "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn characters_are_distinct() {
        let g = m("C3");
        let chars = g.genuine_central_characters();
        let center: Vec<MElement> = g.center().elements().collect();
        for (a, x) in chars.iter().enumerate() {
            for y in &chars[a + 1..] {
                assert!(center.iter().any(|c| g.evaluate(x, c) != g.evaluate(y, c)));
            }
        }
    }

    #[test]
    fn pseudospherical_examples() {
        let a1 = m("A1");
        let chars = a1.genuine_central_characters();
        assert_eq!(chars.len(), 2);
        let mut values: Vec<Unit4> = chars
            .iter()
            .map(|c| a1.evaluate(c, &MElement::generator(0)).unwrap())
            .collect();
        values.sort();
        assert_eq!(values, vec![Unit4::I, Unit4::MINUS_I]);
        assert!(chars.iter().all(|c| a1.is_pseudospherical(c)));

        let a2 = m("A2");
        assert!(a2.is_pseudospherical(&a2.genuine_central_characters()[0]));

        let b2 = m("B2");
        let short = MElement::generator(1);
        for chi in b2.genuine_central_characters() {
            let v = b2.evaluate(&chi, &short).unwrap();
            assert_eq!(b2.is_pseudospherical(&chi), v == Unit4::ONE);
        }
        assert_eq!(
            b2.genuine_central_characters()
                .iter()
                .filter(|c| b2.is_pseudospherical(c))
                .count(),
            2
        );
    }

    #[test]
    fn cayley_table_is_a_group_table() {
        let g = m("A3");
        let t = g.cayley_table().unwrap();
        let n = t.len();
        assert_eq!(n, 16);
        for row in &t {
            let mut r = row.clone();
            r.sort();
            assert_eq!(r, (0..n).collect::<Vec<_>>());
        }
        assert!(m("A12").cayley_table().is_err());
    }

    #[test]
    fn rank_bound() {
        let rs = RootSystem::from_type("A17").unwrap();
        assert!(MGroup::new(&rs).is_err());
        assert!(MGroup::new(&RootSystem::from_type("C16").unwrap()).is_ok());
    }

    #[test]
    fn inverse_works() {
        let g = m("G2");
        for x in g.elements() {
            assert_eq!(g.mul(&x, &g.inverse(&x)), MElement::identity());
        }
    }
}
