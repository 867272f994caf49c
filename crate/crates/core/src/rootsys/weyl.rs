use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{Root, RootSystem};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default cap on |W| for [`RootSystem::weyl_enumerate`].
pub const DEFAULT_WEYL_BOUND: usize = 1_000_000;
/// Default cap on ℓ(w) for [`RootSystem::all_reduced_words`].
pub const DEFAULT_REDUCED_WORD_BOUND: usize = 16;

/// A word in the simple reflections, stored with zero-based letters.
///
/// The word `[i, j, k]` denotes s_i s_j s_k, acting right to left. Display and
/// parsing use the one-based convention `1 2 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    /// Build from one-based letters; `0` is rejected.
    pub fn from_one_based(letters: &[usize]) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                l.checked_sub(1)
                    .ok_or(Error::IndexOutOfRange { index: 0, rank: 0 })
            })
            .collect::<Result<Vec<_>>>()
            .map(WeylWord)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &WeylWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|l| l + 1).collect()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l + 1)?;
        }
        Ok(())
    }
}

/// An element of W: its integer action on the simple-root basis plus the
/// lexicographically least reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// Row-major rank×rank matrix; column j is the image of α_j.
    matrix: Vec<i64>,
    inverse: Vec<i64>,
    word: WeylWord,
}

impl WeylElement {
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    /// Matrix of w⁻¹.
    pub fn inverse_matrix(&self) -> &[i64] {
        &self.inverse
    }

    pub fn canonical_word(&self) -> &WeylWord {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Apply to an integer vector in the simple-root basis.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.matrix, v)
    }

    pub fn apply_inverse(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.inverse, v)
    }
}

fn mat_vec(m: &[i64], v: &[i64]) -> Vec<i64> {
    let n = v.len();
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
        .collect()
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

impl RootSystem {
    /// Matrix of s_i: s_i(α_j) = α_j - ⟨α_j, α_i⟩ α_i.
    pub fn reflection_matrix(&self, i: usize) -> Vec<i64> {
        let n = self.rank();
        let mut m = identity_matrix(n);
        for j in 0..n {
            m[i * n + j] -= self.cartan[j][i];
        }
        m
    }

    /// Error unless every letter is a valid simple root index.
    pub fn check_word(&self, w: &WeylWord) -> Result<()> {
        w.letters().iter().try_for_each(|&l| self.check_index(l))
    }

    /// Matrix of the product of a word (letters act right to left).
    fn word_matrix(&self, letters: &[usize]) -> Vec<i64> {
        let n = self.rank();
        letters.iter().fold(identity_matrix(n), |acc, &l| {
            mat_mul(&acc, &self.reflection_matrix(l), n)
        })
    }

    /// The element represented by a (not necessarily reduced) word.
    pub fn element(&self, w: &WeylWord) -> Result<WeylElement> {
        self.check_word(w)?;
        let matrix = self.word_matrix(w.letters());
        let inverse = self.word_matrix(w.reversed().letters());
        let word = self.lex_least_word(&matrix, &inverse);
        Ok(WeylElement {
            matrix,
            inverse,
            word,
        })
    }

    pub fn identity_element(&self) -> WeylElement {
        let m = identity_matrix(self.rank());
        WeylElement {
            matrix: m.clone(),
            inverse: m,
            word: WeylWord::identity(),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.element(&WeylWord::new(vec![i]))
    }

    /// Longest element w₀ (sends Φ⁺ to Φ⁻).
    pub fn longest_element(&self) -> WeylElement {
        // Repeatedly multiply by a simple reflection that increases length.
        let n = self.rank();
        let mut letters = Vec::new();
        let mut m = identity_matrix(n);
        loop {
            // right ascent: w(α_i) > 0
            let ascent = (0..n).find(|&i| (0..n).all(|r| m[r * n + i] >= 0));
            match ascent {
                Some(i) => {
                    letters.push(i);
                    m = mat_mul(&m, &self.reflection_matrix(i), n);
                }
                None => break,
            }
        }
        self.element(&WeylWord::new(letters)).expect("valid letters")
    }

    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.element(&a.word.concat(&b.word)).expect("valid letters")
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        WeylElement {
            matrix: w.inverse.clone(),
            inverse: w.matrix.clone(),
            word: self.lex_least_word(&w.inverse, &w.matrix),
        }
    }

    /// Greedy lexicographically least reduced word: the first letter is the
    /// smallest left descent i (w⁻¹α_i < 0), then recurse on s_i w.
    fn lex_least_word(&self, matrix: &[i64], inverse: &[i64]) -> WeylWord {
        let n = self.rank();
        let mut m = matrix.to_vec();
        let mut minv = inverse.to_vec();
        let mut letters = Vec::new();
        loop {
            let descent = (0..n).find(|&i| (0..n).any(|r| minv[r * n + i] < 0));
            match descent {
                Some(i) => {
                    letters.push(i);
                    let s = self.reflection_matrix(i);
                    m = mat_mul(&s, &m, n);
                    minv = mat_mul(&minv, &s, n);
                }
                None => break,
            }
        }
        debug_assert_eq!(m, identity_matrix(n));
        WeylWord(letters)
    }

    /// Apply a word to a vector in the simple-root basis, right to left, with
    /// s_i(v) = v - ⟨v, α_i⟩ α_i.
    pub fn weyl_act<T>(&self, w: &WeylWord, v: &[T]) -> Result<Vec<T>>
    where
        T: Scalar,
    {
        self.check_word(w)?;
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                got: v.len(),
                rank: self.rank(),
            });
        }
        let mut out = v.to_vec();
        for &l in w.letters().iter().rev() {
            let p = self.pairing_with_simple(&out, l);
            out[l] = out[l].clone() - p;
        }
        Ok(out)
    }

    /// {α ∈ Φ⁺ : w⁻¹α ∈ Φ⁻}.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<Root> {
        self.positive_roots()
            .iter()
            .filter(|r| !Root::new(w.apply_inverse(r.coords())).is_positive())
            .cloned()
            .collect()
    }

    /// Whether a word is reduced: its length equals the length of its element.
    pub fn is_reduced(&self, w: &WeylWord) -> Result<bool> {
        Ok(self.element(w)?.length() == w.len())
    }

    /// All of W, each element once, ordered by length then canonical word.
    pub fn weyl_enumerate(&self, bound: usize) -> Result<Vec<WeylElement>> {
        let n = self.rank();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let id = self.identity_element();
        seen.insert(id.matrix.clone(), ());
        let mut all = vec![id];
        let mut level_start = 0;
        let reflections: Vec<Vec<i64>> = (0..n).map(|i| self.reflection_matrix(i)).collect();
        loop {
            let level_end = all.len();
            // Level elements are sorted by canonical word; appending letters in
            // increasing order finds each new element first via its lex-least word.
            for k in level_start..level_end {
                for (i, s) in reflections.iter().enumerate() {
                    let m = mat_mul(&all[k].matrix, s, n);
                    if seen.contains_key(&m) {
                        continue;
                    }
                    if seen.len() >= bound {
                        return Err(Error::WeylBoundExceeded { bound });
                    }
                    seen.insert(m.clone(), ());
                    let mut letters = all[k].word.0.clone();
                    letters.push(i);
                    let inverse = mat_mul(s, &all[k].inverse, n);
                    all.push(WeylElement {
                        matrix: m,
                        inverse,
                        word: WeylWord(letters),
                    });
                }
            }
            if all.len() == level_end {
                break;
            }
            level_start = level_end;
        }
        Ok(all)
    }

    /// Every reduced word of w, deduplicated, in lexicographic order.
    pub fn all_reduced_words(&self, w: &WeylElement, bound: usize) -> Result<Vec<WeylWord>> {
        if w.length() > bound {
            return Err(Error::WordLengthBoundExceeded {
                length: w.length(),
                bound,
            });
        }
        let mut memo: HashMap<Vec<i64>, Vec<Vec<usize>>> = HashMap::new();
        let words = self.reduced_words_rec(&w.matrix, &w.inverse, &mut memo);
        let set: BTreeSet<Vec<usize>> = words.into_iter().collect();
        Ok(set.into_iter().map(WeylWord).collect())
    }

    fn reduced_words_rec(
        &self,
        matrix: &[i64],
        inverse: &[i64],
        memo: &mut HashMap<Vec<i64>, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(hit) = memo.get(matrix) {
            return hit.clone();
        }
        let n = self.rank();
        let mut out = Vec::new();
        let mut any = false;
        for i in 0..n {
            if (0..n).any(|r| inverse[r * n + i] < 0) {
                any = true;
                let s = self.reflection_matrix(i);
                let m = mat_mul(&s, matrix, n);
                let minv = mat_mul(inverse, &s, n);
                for tail in self.reduced_words_rec(&m, &minv, memo) {
                    let mut word = Vec::with_capacity(tail.len() + 1);
                    word.push(i);
                    word.extend(tail);
                    out.push(word);
                }
            }
        }
        if !any {
            out.push(Vec::new());
        }
        memo.insert(matrix.to_vec(), out.clone());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystemSpec;
    use num_rational::Rational64;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_type(name).unwrap()
    }

    fn w(letters: &[usize]) -> WeylWord {
        WeylWord::from_one_based(letters).unwrap()
    }

    #[test]
    fn weyl_group_orders() {
        let order = |n: &str| rs(n).weyl_enumerate(DEFAULT_WEYL_BOUND).unwrap().len();
        assert_eq!(order("A1"), 2);
        assert_eq!(order("A2"), 6);
        assert_eq!(order("B2"), 8);
        assert_eq!(order("G2"), 12);
        assert_eq!(order("A3"), 24);
        assert_eq!(order("B3"), 48);
        assert_eq!(order("D4"), 192);
        assert_eq!(order("F4"), 1152);
        for spec in RootSystemSpec::all_up_to_rank(4) {
            let n = RootSystem::new(spec).weyl_enumerate(DEFAULT_WEYL_BOUND).unwrap().len();
            assert_eq!(n as u64, spec.weyl_order(), "{spec}");
        }
    }

    #[test]
    fn weyl_bound_enforced() {
        let err = rs("E7").weyl_enumerate(DEFAULT_WEYL_BOUND).unwrap_err();
        assert_eq!(err, Error::WeylBoundExceeded { bound: 1_000_000 });
        assert!(rs("A3").weyl_enumerate(10).is_err());
    }

    #[test]
    fn enumeration_uses_lex_least_words() {
        let sys = rs("A2");
        let words: Vec<String> = sys
            .weyl_enumerate(100)
            .unwrap()
            .iter()
            .map(|e| e.canonical_word().to_string())
            .collect();
        assert_eq!(words, vec!["e", "1", "2", "1 2", "2 1", "1 2 1"]);
        for spec in RootSystemSpec::all_up_to_rank(3) {
            let sys = RootSystem::new(spec);
            for e in sys.weyl_enumerate(DEFAULT_WEYL_BOUND).unwrap() {
                let again = sys.element(e.canonical_word()).unwrap();
                assert_eq!(again, e, "{spec}");
            }
        }
    }

    #[test]
    fn weyl_act_examples() {
        let a2 = rs("A2");
        let q = |x: i64| Rational64::from_integer(x);
        let v = vec![q(3), q(-1)];
        assert_eq!(a2.weyl_act(&WeylWord::identity(), &v).unwrap(), v);
        assert_eq!(a2.weyl_act(&w(&[1]), &[q(1), q(0)]).unwrap(), vec![q(-1), q(0)]);
        assert_eq!(a2.weyl_act(&w(&[1, 2]), &[q(1), q(0)]).unwrap(), vec![q(0), q(1)]);
        assert!(a2.weyl_act(&w(&[3]), &v).is_err());
        assert!(a2.weyl_act(&w(&[1]), &[q(1)]).is_err());
    }

    #[test]
    fn weyl_act_matches_matrix() {
        let sys = rs("B3");
        for e in sys.weyl_enumerate(DEFAULT_WEYL_BOUND).unwrap() {
            for r in sys.roots() {
                let v: Vec<f64> = r.coords().iter().map(|&c| c as f64).collect();
                let acted = sys.weyl_act(e.canonical_word(), &v).unwrap();
                let expected: Vec<f64> = e.apply(r.coords()).iter().map(|&c| c as f64).collect();
                assert_eq!(acted, expected);
            }
        }
    }

    #[test]
    fn inversion_sets() {
        let sys = rs("A2");
        assert!(sys.inversion_set(&sys.identity_element()).is_empty());
        for i in 0..2 {
            let s = sys.simple_reflection(i).unwrap();
            assert_eq!(sys.inversion_set(&s), vec![sys.simple_root(i).unwrap()]);
        }
        for name in ["A2", "B2", "G2", "A3", "C3"] {
            let sys = rs(name);
            let w0 = sys.longest_element();
            assert_eq!(sys.inversion_set(&w0).len(), sys.positive_roots().len());
        }
    }

    #[test]
    fn inversion_count_is_length() {
        for spec in RootSystemSpec::all_up_to_rank(3) {
            let sys = RootSystem::new(spec);
            for e in sys.weyl_enumerate(DEFAULT_WEYL_BOUND).unwrap() {
                assert_eq!(sys.inversion_set(&e).len(), e.length(), "{spec}");
            }
        }
    }

    #[test]
    fn reduced_words_examples() {
        let a2 = rs("A2");
        let id = a2.identity_element();
        assert_eq!(a2.all_reduced_words(&id, 16).unwrap(), vec![WeylWord::identity()]);
        let words = a2.all_reduced_words(&a2.longest_element(), 16).unwrap();
        assert_eq!(words, vec![w(&[1, 2, 1]), w(&[2, 1, 2])]);
        let b2 = rs("B2");
        let words = b2.all_reduced_words(&b2.longest_element(), 16).unwrap();
        assert_eq!(words, vec![w(&[1, 2, 1, 2]), w(&[2, 1, 2, 1])]);
        // known counts of reduced words of w0
        assert_eq!(rs("A3").all_reduced_words(&rs("A3").longest_element(), 16).unwrap().len(), 16);
        assert_eq!(rs("B3").all_reduced_words(&rs("B3").longest_element(), 16).unwrap().len(), 42);
        assert!(rs("E6").all_reduced_words(&rs("E6").longest_element(), 16).is_err());
    }

    #[test]
    fn reduced_words_share_matrix() {
        for spec in RootSystemSpec::all_up_to_rank(3) {
            let sys = RootSystem::new(spec);
            for e in sys.weyl_enumerate(DEFAULT_WEYL_BOUND).unwrap() {
                for word in sys.all_reduced_words(&e, 16).unwrap() {
                    assert_eq!(word.len(), e.length());
                    assert_eq!(sys.element(&word).unwrap().matrix(), e.matrix());
                }
            }
        }
    }

    #[test]
    fn non_reduced_words_detected() {
        let a2 = rs("A2");
        assert!(!a2.is_reduced(&w(&[1, 1])).unwrap());
        assert!(a2.is_reduced(&w(&[1, 2, 1])).unwrap());
        assert!(!a2.is_reduced(&w(&[1, 2, 1, 2])).unwrap());
        assert!(a2.element(&w(&[1, 1])).unwrap().is_identity());
    }
}
