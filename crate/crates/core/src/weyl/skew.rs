//! Skew elements, compatible pairs, and the bijection between reduced words
//! of `w_λ w_μ⁻¹` and standard typed k'-tableaux on `λ/μ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::TypedPartition;
use crate::tableaux::TypedTableau;

use super::{cached_table, grassmannian_element, minimal_rank, SignedPermutation, Word};

/// A reduced factorization `w_λ = w · w_μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewWitness {
    pub k: u32,
    pub lambda: TypedPartition,
    pub mu: TypedPartition,
}

/// Parses `"1 3 2 0"` or `"1,3,2,0"`; a single unseparated run of digits
/// such as `"1320321"` is read one letter per digit.
pub fn parse_word(s: &str) -> Result<Word> {
    let err = || Error::Parse { what: "word", input: s.to_string() };
    let tokens: Vec<&str> =
        s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
    if tokens.len() == 1 && tokens[0].len() > 1 {
        return tokens[0].chars().map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(err)).collect();
    }
    tokens.iter().map(|t| t.parse::<u8>().map_err(|_| err())).collect()
}

/// Interchanges the letters 0 and 1.
pub fn iota(word: &[u8]) -> Word {
    word.iter()
        .map(|&a| match a {
            0 => 1,
            1 => 0,
            a => a,
        })
        .collect()
}

/// A witness that `w` is skew, searching `k = 1..n` and `λ ∈ P̃(k, n)` in
/// order of size.
pub fn is_skew(w: &SignedPermutation, n: usize) -> Result<Option<SkewWitness>> {
    let n = n.max(w.n());
    let w = w.embed(n);
    let len = w.length();
    for k in 1..=n as u32 {
        let table = cached_table(k, n)?;
        for lambda in table.partitions().iter().filter(|l| l.size() >= len) {
            let wl = table.element(lambda)?;
            if !wl.has_prefix(&w) {
                continue;
            }
            let rest = w.inverse().mul(&wl);
            let mu = table.lookup(&rest).expect("right factors of w_λ are k-Grassmannian");
            return Ok(Some(SkewWitness { k, lambda: lambda.clone(), mu: mu.clone() }));
        }
    }
    Ok(None)
}

fn check_nested(lambda: &TypedPartition, mu: &TypedPartition) -> Result<()> {
    if lambda.k() != mu.k() {
        return Err(Error::KMismatch(lambda.k(), mu.k()));
    }
    if !lambda.partition().contains(mu.partition()) {
        return Err(Error::NotContained);
    }
    Ok(())
}

/// `w_λ w_μ⁻¹` in `W̃_{n+1}`.
pub fn skew_element(lambda: &TypedPartition, mu: &TypedPartition, n: usize) -> Result<SignedPermutation> {
    check_nested(lambda, mu)?;
    let wl = grassmannian_element(lambda, n)?;
    let wm = grassmannian_element(mu, n)?;
    Ok(wl.mul(&wm.inverse()))
}

/// Whether `ℓ(w_λ w_μ⁻¹) = |λ| − |μ|`.
pub fn compatible_pair(lambda: &TypedPartition, mu: &TypedPartition, n: usize) -> Result<bool> {
    let z = skew_element(lambda, mu, n)?;
    Ok(z.length() == lambda.size() - mu.size())
}

/// The standard tableau on `λ/μ` whose chain is `w_{λ^i} = s_{a_{r−i+1}} w_{λ^{i−1}}`.
pub fn word_to_tableau(word: &[u8], lambda: &TypedPartition, mu: &TypedPartition) -> Result<TypedTableau> {
    check_nested(lambda, mu)?;
    let k = lambda.k();
    let max_letter = word.iter().copied().max().unwrap_or(0) as usize;
    let n = minimal_rank(lambda).max(max_letter).max(1);
    let z = SignedPermutation::from_word(word, n)?;
    if z.length() as usize != word.len() {
        return Err(Error::NotReduced(word.to_vec()));
    }
    let table = cached_table(k, n)?;
    let mut cur = grassmannian_element(mu, n)?;
    let mut chain = vec![mu.clone()];
    for &a in word.iter().rev() {
        let next = cur.simple_times(a)?;
        if next.length() != cur.length() + 1 {
            return Err(Error::NotChainCompatible(word.to_vec()));
        }
        let Some(nu) = table.lookup(&next) else {
            return Err(Error::NotChainCompatible(word.to_vec()));
        };
        chain.push(nu.clone());
        cur = next;
    }
    if chain.last() != Some(lambda) {
        return Err(Error::NotChainCompatible(word.to_vec()));
    }
    let t = TypedTableau::from_chain(chain)?;
    debug_assert_eq!(tableau_to_word(&t).as_deref(), Ok(word));
    Ok(t)
}

/// The reduced word read back from a standard tableau's chain.
pub fn tableau_to_word(t: &TypedTableau) -> Result<Word> {
    let n = minimal_rank(t.outer()).max(1);
    let chain = t.chain();
    let mut word = Vec::with_capacity(chain.len().saturating_sub(1));
    for step in chain.windows(2) {
        let lower = grassmannian_element(&step[0], n)?;
        let upper = grassmannian_element(&step[1], n)?;
        let s = upper.mul(&lower.inverse());
        let letter = (0..=n as u8)
            .find(|&a| SignedPermutation::simple(a, n).map(|x| x == s).unwrap_or(false))
            .ok_or_else(|| Error::NotChainCompatible(word.clone()))?;
        word.push(letter);
    }
    word.reverse();
    Ok(word)
}
