//! Irreducible reduced root systems of types A–G and their Weyl groups.
//!
//! Roots are integer vectors in the basis of simple roots (Bourbaki numbering).
//! Squared lengths are normalized so that short roots have length² 2 and long
//! roots have length² 2·n_Φ; every identity below is then exact integer
//! arithmetic.

mod weyl;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::{Error, Result};

pub use weyl::{WeylElement, WeylWord, DEFAULT_REDUCED_WORD_BOUND, DEFAULT_WEYL_BOUND};

/// Cartan–Killing family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A validated (family, rank) pair such as `B2` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reason = match family {
            Family::A if rank < 1 => Some("type A needs rank >= 1"),
            Family::B | Family::C if rank < 2 => Some("types B and C need rank >= 2"),
            Family::D if rank < 3 => Some("type D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("type E exists in ranks 6, 7, 8"),
            Family::F if rank != 4 => Some("type F exists only in rank 4"),
            Family::G if rank != 2 => Some("type G exists only in rank 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidRootSystem {
                family: family.letter(),
                rank,
                reason,
            }),
            None => Ok(Self { family, rank }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type with rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<Self> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        let mut out = Vec::new();
        for family in families {
            for rank in 1..=max_rank {
                if let Ok(spec) = Self::new(family, rank) {
                    out.push(spec);
                }
            }
        }
        out
    }

    /// Number of roots of the type (classification).
    pub fn expected_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::B, _) | (Family::C, _) => 2 * n * n,
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, 8) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
            _ => unreachable!("validated in RootSystemSpec::new"),
        }
    }

    /// Order of the Weyl group (classification).
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match (self.family, n) {
            (Family::A, _) => fact(n + 1),
            (Family::B, _) | (Family::C, _) => (1 << n) * fact(n),
            (Family::D, _) => (1 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, 8) => 696_729_600,
            (Family::F, _) => 1152,
            (Family::G, _) => 12,
            _ => unreachable!("validated in RootSystemSpec::new"),
        }
    }

    /// Cartan matrix `a[i][j] = ⟨α_i, α_j⟩ = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        // (i, j, a_ij, a_ji), zero-based
        let mut edges: Vec<(usize, usize, i64, i64)> = Vec::new();
        match self.family {
            Family::A => edges.extend((0..n - 1).map(|i| (i, i + 1, -1, -1))),
            Family::B => {
                edges.extend((0..n - 2).map(|i| (i, i + 1, -1, -1)));
                edges.push((n - 2, n - 1, -2, -1));
            }
            Family::C => {
                edges.extend((0..n - 2).map(|i| (i, i + 1, -1, -1)));
                edges.push((n - 2, n - 1, -1, -2));
            }
            Family::D => {
                edges.extend((0..n - 2).map(|i| (i, i + 1, -1, -1)));
                edges.push((n - 3, n - 1, -1, -1));
            }
            Family::E => {
                edges.push((0, 2, -1, -1));
                edges.push((1, 3, -1, -1));
                edges.extend((2..n - 1).map(|i| (i, i + 1, -1, -1)));
            }
            Family::F => {
                edges.push((0, 1, -1, -1));
                edges.push((1, 2, -2, -1));
                edges.push((2, 3, -1, -1));
            }
            Family::G => edges.push((0, 1, -1, -3)),
        }
        for (i, j, aij, aji) in edges {
            a[i][j] = aij;
            a[j][i] = aji;
        }
        a
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseRootSystem(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseRootSystem(s.to_string()))?;
        Self::new(family, rank)
    }
}

/// A root, as integer coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A root system with its positive system fixed by the Bourbaki simple roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    /// Symmetric form (α_i, α_j) on simple roots.
    gram: Vec<Vec<i64>>,
    /// Positive roots first (by height, then lexicographically), then their negatives.
    roots: Vec<Root>,
    lengthsq: Vec<i64>,
    coroots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    num_positive: usize,
    n_phi: i64,
}

impl RootSystem {
    /// Generate Φ by closing the simple roots under simple reflections.
    pub fn new(spec: RootSystemSpec) -> Self {
        let rank = spec.rank();
        let cartan = spec.cartan_matrix();
        let simple_lengthsq = symmetrize(&cartan);
        let gram: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| cartan[i][j] * simple_lengthsq[j] / 2)
                    .collect()
            })
            .collect();

        // Closure under simple reflections, carrying coroots along through the
        // dual action s_j(H) = H - α_j(H) H_j, α_j(H_k) = a[j][k].
        let mut found: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let e = unit(rank, i);
            found.insert(e.clone(), e.clone());
            queue.push_back(e);
        }
        while let Some(root) = queue.pop_front() {
            let coroot = found[&root].clone();
            for j in 0..rank {
                let pairing: i64 = (0..rank).map(|k| root[k] * cartan[k][j]).sum();
                let mut image = root.clone();
                image[j] -= pairing;
                if found.contains_key(&image) {
                    continue;
                }
                let dual: i64 = (0..rank).map(|k| cartan[j][k] * coroot[k]).sum();
                let mut coroot_image = coroot.clone();
                coroot_image[j] -= dual;
                found.insert(image.clone(), coroot_image);
                queue.push_back(image);
            }
        }

        let mut positive: Vec<Vec<i64>> = found
            .keys()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .cloned()
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let num_positive = positive.len();
        let mut ordered = positive.clone();
        ordered.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));

        let quad = |v: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..rank {
                for j in 0..rank {
                    s += v[i] * v[j] * gram[i][j];
                }
            }
            s
        };
        let lengthsq: Vec<i64> = ordered.iter().map(|r| quad(r)).collect();
        let max_len = *lengthsq.iter().max().expect("nonempty");
        let min_len = *lengthsq.iter().min().expect("nonempty");
        let coroots = ordered.iter().map(|r| found[r].clone()).collect();
        let index = ordered
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();

        RootSystem {
            spec,
            cartan,
            gram,
            roots: ordered.into_iter().map(Root).collect(),
            lengthsq,
            coroots,
            index,
            num_positive,
            n_phi: max_len / min_len,
        }
    }

    pub fn from_type(name: &str) -> Result<Self> {
        Ok(Self::new(name.parse()?))
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// (α_i, α_j) on simple roots, in the short-root-length-2 normalization.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive]
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        Ok(Root(unit(self.rank(), i)))
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    fn position(&self, coords: &[i64]) -> Result<usize> {
        self.index
            .get(coords)
            .copied()
            .ok_or_else(|| Error::NotARoot(coords.to_vec()))
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    /// Squared length (α, α) of a root.
    pub fn lengthsq(&self, a: &Root) -> Result<i64> {
        Ok(self.lengthsq[self.position(a.coords())?])
    }

    /// Symmetric form on arbitrary integer vectors in the simple-root basis.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s += a[i] * b[j] * self.gram[i][j];
            }
        }
        s
    }

    /// The Cartan integer ⟨a, b⟩ = 2(a, b)/(b, b).
    pub fn cartan_int(&self, a: &Root, b: &Root) -> Result<i64> {
        self.position(a.coords())?;
        let bb = self.lengthsq(b)?;
        let ab = self.inner(a.coords(), b.coords());
        debug_assert_eq!((2 * ab) % bb, 0);
        Ok(2 * ab / bb)
    }

    /// Ratio of long to short squared lengths: 1 (ADE), 2 (BCF), 3 (G).
    pub fn n_phi(&self) -> i64 {
        self.n_phi
    }

    pub fn is_long(&self, a: &Root) -> Result<bool> {
        Ok(self.lengthsq(a)? == 2 * self.n_phi)
    }

    /// Long roots are metaplectic; in type G2 every root is.
    pub fn is_metaplectic(&self, a: &Root) -> Result<bool> {
        let long = self.is_long(a)?;
        Ok(long || self.spec.family() == Family::G)
    }

    pub fn is_simple_long(&self, i: usize) -> bool {
        self.lengthsq[self.position(&unit(self.rank(), i)).expect("simple root")] == 2 * self.n_phi
    }

    pub fn is_simple_metaplectic(&self, i: usize) -> bool {
        self.is_simple_long(i) || self.spec.family() == Family::G
    }

    /// Coordinates of the coroot H_a in the basis of simple coroots H_1..H_l.
    pub fn coroot_coords(&self, a: &Root) -> Result<&[i64]> {
        Ok(&self.coroots[self.position(a.coords())?])
    }

    /// `⟨v, α_i⟩` for an arbitrary vector v in the simple-root basis.
    pub(crate) fn pairing_with_simple<T>(&self, v: &[T], i: usize) -> T
    where
        T: Clone + num_traits::Num + num_traits::FromPrimitive,
    {
        v.iter()
            .enumerate()
            .fold(T::zero(), |acc, (k, x)| {
                acc + x.clone() * T::from_i64(self.cartan[k][i]).expect("small integer")
            })
    }

    /// Half the sum of the positive roots, doubled to stay integral.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut acc = vec![0; self.rank()];
        for r in self.positive_roots() {
            for (a, c) in acc.iter_mut().zip(r.coords()) {
                *a += c;
            }
        }
        acc
    }
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// Squared lengths of the simple roots from the Cartan matrix, via
/// a_ij (α_j, α_j) = a_ji (α_i, α_i), scaled so the shortest is 2.
fn symmetrize(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::from_integer(1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let di = d[i].expect("visited");
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(di * Rational64::new(cartan[j][i], cartan[i][j]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = *d.iter().min().expect("nonempty");
    d.iter()
        .map(|x| {
            let v = *x / min * Rational64::from_integer(2);
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect()
}
