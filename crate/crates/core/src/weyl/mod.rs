//! The Weyl group `W̃_{n+1}` of type `D_{n+1}` as signed permutations of
//! `{1, …, n+1}`, its nilCoxeter algebra, k-Grassmannian elements and skew
//! elements.
//!
//! Products compose as functions, `(uv)(j) = u(v(j))`, so right
//! multiplication by `s_i` acts on positions and left multiplication acts
//! on values.

mod grassmannian;
mod nilcoxeter;
mod skew;

pub use grassmannian::{
    cached_table, fits, grassmannian_element, grassmannian_table, minimal_rank, GrassmannianTable,
};
pub use nilcoxeter::{
    d_product, schubert_ds, schubert_ds_with_budget, stanley_e, stanley_e_with_budget, NilCoxeterElement,
};
pub use skew::{
    compatible_pair, iota, is_skew, parse_word, skew_element, tableau_to_word, word_to_tableau, SkewWitness,
};

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A word in the simple reflections `s_0, …, s_n`.
pub type Word = Vec<u8>;

/// An element of `W̃_{n+1}` in one-line notation; a negative image is a
/// barred entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(images: impl Into<Vec<i32>>) -> Result<Self> {
        let images = images.into();
        let size = images.len();
        let mut seen = vec![false; size + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > size || seen[a] {
                return Err(Error::BadPermutation(images));
            }
            seen[a] = true;
        }
        if images.len() < 2 {
            return Err(Error::BadPermutation(images));
        }
        if images.iter().filter(|&&v| v < 0).count() % 2 == 1 {
            return Err(Error::NotTypeD);
        }
        Ok(SignedPermutation(images))
    }

    /// The identity of `W̃_{n+1}`.
    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=(n as i32 + 1)).collect())
    }

    /// The simple reflection `s_i` of `W̃_{n+1}`.
    pub fn simple(i: u8, n: usize) -> Result<Self> {
        Self::identity(n).times_simple(i)
    }

    pub fn images(&self) -> &[i32] {
        &self.0
    }

    /// The rank `n`, so that `self ∈ W̃_{n+1}`.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// The same element viewed in `W̃_{n+1}` for a larger `n`.
    pub fn embed(&self, n: usize) -> SignedPermutation {
        assert!(n >= self.n(), "cannot shrink a permutation by embedding");
        let mut v = self.0.clone();
        v.extend((self.0.len() as i32 + 1)..=(n as i32 + 1));
        SignedPermutation(v)
    }

    /// Drops trailing fixed points, keeping at least two entries.
    pub fn trimmed(&self) -> SignedPermutation {
        let mut v = self.0.clone();
        while v.len() > 2 && *v.last().unwrap() == v.len() as i32 {
            v.pop();
        }
        SignedPermutation(v)
    }

    fn apply(&self, j: i32) -> i32 {
        let v = self.0[j.unsigned_abs() as usize - 1];
        if j < 0 {
            -v
        } else {
            v
        }
    }

    /// `self · other`; both must lie in the same group.
    pub fn mul(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.0.len(), other.0.len(), "rank mismatch");
        SignedPermutation(other.0.iter().map(|&j| self.apply(j)).collect())
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            let pos = i as i32 + 1;
            inv[v.unsigned_abs() as usize - 1] = if v < 0 { -pos } else { pos };
        }
        SignedPermutation(inv)
    }

    fn check_letter(&self, i: u8) -> Result<()> {
        if i as usize > self.n() {
            return Err(Error::LetterOutOfRange { letter: i, n: self.n() });
        }
        Ok(())
    }

    /// `self · s_i`.
    pub fn times_simple(&self, i: u8) -> Result<SignedPermutation> {
        self.check_letter(i)?;
        let mut v = self.0.clone();
        if i == 0 {
            let (a, b) = (v[0], v[1]);
            v[0] = -b;
            v[1] = -a;
        } else {
            v.swap(i as usize - 1, i as usize);
        }
        Ok(SignedPermutation(v))
    }

    /// `s_i · self`.
    pub fn simple_times(&self, i: u8) -> Result<SignedPermutation> {
        self.check_letter(i)?;
        let map = |v: i32| -> i32 {
            let s = v.signum();
            let a = v.abs();
            if i == 0 {
                match a {
                    1 => -2 * s,
                    2 => -s,
                    _ => v,
                }
            } else if a == i as i32 {
                s * (a + 1)
            } else if a == i as i32 + 1 {
                s * (a - 1)
            } else {
                v
            }
        };
        Ok(SignedPermutation(self.0.iter().map(|&v| map(v)).collect()))
    }

    /// The product `s_{a_1} ⋯ s_{a_r}` in `W̃_{n+1}`.
    pub fn from_word(word: &[u8], n: usize) -> Result<SignedPermutation> {
        let mut w = Self::identity(n);
        for &a in word {
            w = w.times_simple(a)?;
        }
        Ok(w)
    }

    /// Type D length: inversions plus pairs with negative sum.
    pub fn length(&self) -> u32 {
        let v = &self.0;
        let mut len = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    len += 1;
                }
                if v[i] + v[j] < 0 {
                    len += 1;
                }
            }
        }
        len
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: u8) -> bool {
        let v = &self.0;
        if i == 0 {
            v[0] + v[1] < 0
        } else {
            v[i as usize - 1] > v[i as usize]
        }
    }

    pub fn right_descents(&self) -> Vec<u8> {
        (0..=self.n() as u8).filter(|&i| self.is_right_descent(i)).collect()
    }

    /// Whether `ℓ(w s_i) = ℓ(w) + 1` for all `i ≠ k` (all `i ≥ 2` when `k = 1`).
    pub fn is_k_grassmannian(&self, k: u32) -> bool {
        self.right_descents().into_iter().all(|i| i as u32 == k || (k == 1 && i == 0))
    }

    /// Whether `w = u · v` with `ℓ(w) = ℓ(u) + ℓ(v)`, given `u`.
    pub fn has_prefix(&self, u: &SignedPermutation) -> bool {
        let rest = u.inverse().mul(self);
        u.length() + rest.length() == self.length()
    }

    /// All reduced words, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Word> {
        let mut memo = HashMap::new();
        let mut words = reduced_words_memo(self, &mut memo);
        words.sort();
        words
    }

    /// Number of reduced words, without listing them.
    pub fn reduced_word_count(&self) -> u128 {
        fn go(w: &SignedPermutation, memo: &mut HashMap<SignedPermutation, u128>) -> u128 {
            if w.is_identity() {
                return 1;
            }
            if let Some(&c) = memo.get(w) {
                return c;
            }
            let c = w
                .right_descents()
                .into_iter()
                .map(|i| go(&w.times_simple(i).expect("letter in range"), memo))
                .sum();
            memo.insert(w.clone(), c);
            c
        }
        go(self, &mut HashMap::new())
    }

    /// Whether `word` is a reduced word for `self`.
    pub fn is_reduced_word(&self, word: &[u8]) -> bool {
        word.len() as u32 == self.length()
            && Self::from_word(word, self.n()).map(|w| &w == self).unwrap_or(false)
    }

    /// All prefixes `u` of reduced factorizations `self = u · v`.
    pub fn prefixes(&self) -> Vec<SignedPermutation> {
        let n = self.n();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([Self::identity(n)]);
        seen.insert(Self::identity(n));
        while let Some(u) = queue.pop_front() {
            let rest = u.inverse().mul(self);
            for i in rest.left_descents() {
                let next = u.times_simple(i).expect("letter in range");
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        out
    }

    /// Letters `i` with `ℓ(s_i w) < ℓ(w)`.
    pub fn left_descents(&self) -> Vec<u8> {
        self.inverse().right_descents()
    }

    /// The same element with entries `±1, ±2` rewritten by the diagram
    /// automorphism exchanging `s_0` and `s_1`.
    pub fn swap_zero_one(&self) -> SignedPermutation {
        // conjugation by the sign change of the entry 1
        let c = |v: i32| if v.abs() == 1 { -v } else { v };
        let mut images: Vec<i32> = self.0.iter().map(|&v| c(v)).collect();
        images[0] = -images[0];
        SignedPermutation(images)
    }
}

fn reduced_words_memo(w: &SignedPermutation, memo: &mut HashMap<SignedPermutation, Vec<Word>>) -> Vec<Word> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    if let Some(words) = memo.get(w) {
        return words.clone();
    }
    let mut out = Vec::new();
    for i in w.right_descents() {
        for mut word in reduced_words_memo(&w.times_simple(i).expect("letter in range"), memo) {
            word.push(i);
            out.push(word);
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// Every element of `W̃_{n+1}`, sorted by length and then lexicographically.
pub fn all_elements(n: usize) -> Vec<SignedPermutation> {
    let size = n + 1;
    let mut perms: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..size {
        let mut next = Vec::new();
        for p in &perms {
            for a in 1..=size as i32 {
                if p.iter().any(|&v| v.abs() == a) {
                    continue;
                }
                for v in [a, -a] {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    let mut out: Vec<_> = perms
        .into_iter()
        .filter(|p| p.iter().filter(|&&v| v < 0).count() % 2 == 0)
        .map(SignedPermutation)
        .collect();
    out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    out
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "signed permutation", input: s.to_string() };
        let images = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn word(s: &str) -> Word {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn simple_reflections_act_as_stated() {
        let u = w("3,-4,-2,1");
        assert_eq!(u.times_simple(0).unwrap(), w("4,-3,-2,1"));
        assert_eq!(u.times_simple(2).unwrap(), w("3,-2,-4,1"));
        assert_eq!(SignedPermutation::simple(0, 3).unwrap(), w("-2,-1,3,4"));
        for i in 0..=3u8 {
            let s = SignedPermutation::simple(i, 3).unwrap();
            assert_eq!(s.length(), 1);
            assert_eq!(u.simple_times(i).unwrap(), s.mul(&u));
            assert_eq!(u.times_simple(i).unwrap(), u.mul(&s));
        }
    }

    #[test]
    fn identity_has_one_empty_word() {
        let e = SignedPermutation::identity(3);
        assert_eq!(e.length(), 0);
        assert_eq!(e.reduced_words(), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn nine_words_of_the_four_two_one_element() {
        let expected: Vec<Word> = [
            "1320321", "1323021", "1232021", "1230201", "1230210", "1203201", "1203210", "3120321", "3123021",
        ]
        .iter()
        .map(|s| word(s))
        .collect();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        let u = w("3,-4,-2,1");
        assert_eq!(u.length(), 7);
        assert_eq!(u.reduced_words(), expected_sorted);
        assert_eq!(u.reduced_word_count(), 9);
        assert!(expected.iter().all(|x| u.is_reduced_word(x)));
    }

    #[test]
    fn group_laws_on_small_group() {
        let all = all_elements(3);
        assert_eq!(all.len(), 192);
        for u in &all {
            assert_eq!(u.inverse().length(), u.length());
            assert!(u.mul(&u.inverse()).is_identity());
            for i in 0..=3u8 {
                let l = u.times_simple(i).unwrap().length() as i64;
                assert_eq!((l - u.length() as i64).abs(), 1);
                assert_eq!(u.is_right_descent(i), (l as u32) < u.length());
            }
        }
    }

    #[test]
    fn parse_rejects_odd_bars_and_repeats() {
        assert_eq!("2,-1,3".parse::<SignedPermutation>(), Err(Error::NotTypeD));
        assert!(matches!("1,1".parse::<SignedPermutation>(), Err(Error::BadPermutation(_))));
        assert!(matches!("1,x".parse::<SignedPermutation>(), Err(Error::Parse { .. })));
        assert_eq!(w("3,-4,-2,1").to_string(), "3,-4,-2,1");
    }

    #[test]
    fn prefixes_are_left_factors() {
        let u = w("3,-4,-2,1");
        let pre = u.prefixes();
        assert!(pre.first().unwrap().is_identity());
        assert_eq!(pre.last().unwrap(), &u);
        for p in &pre {
            assert!(u.has_prefix(p));
        }
        let brute = all_elements(3).into_iter().filter(|p| u.has_prefix(p)).count();
        assert_eq!(pre.len(), brute);
    }

    #[test]
    fn swapping_zero_and_one_conjugates_generators() {
        let s0 = SignedPermutation::simple(0, 3).unwrap();
        let s1 = SignedPermutation::simple(1, 3).unwrap();
        assert_eq!(s0.swap_zero_one(), s1);
        assert_eq!(s1.swap_zero_one(), s0);
        let u = w("3,-4,-2,1");
        for x in u.reduced_words() {
            let y = iota(&x);
            assert_eq!(SignedPermutation::from_word(&y, 3).unwrap(), u.swap_zero_one());
        }
    }

    #[test]
    fn embedding_and_trimming() {
        let u = w("2,1");
        assert_eq!(u.embed(3), w("2,1,3,4"));
        assert_eq!(u.embed(3).trimmed(), u);
        assert_eq!(u.embed(3).length(), 1);
    }
}
