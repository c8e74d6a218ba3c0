//! Raising-operator series acting on compositions.
//!
//! An operator is a product of factors `(1 - R_ij)` and
//! `(1 - R_ij)/(1 + R_ij) = 1 + 2 Σ_{m≥1} (-1)^m R_ij^m`, where `R_ij` adds one
//! to position `i` and subtracts one from position `j > i`. Operators only
//! exist through their action on integer sequences: expanding one against a
//! starting sequence yields a finite signed sum of compositions, since a term
//! with a negative entry is zero (`c_r = 0` for `r < 0`).
//!
//! Pairs are processed grouped by target column `j` in descending order. Once
//! group `j` is done, position `j` never changes again: raises into `j` come
//! only from pairs `(j, j')` with `j' > j`, which were handled earlier. A
//! negative entry at that point kills the term, which bounds the geometric
//! series of every inverted factor.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{c_set, c_set_strict, Partition, TypedPartition};

/// Default cap on composition visits during one expansion.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

static BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_BUDGET);

/// Sets the visit cap used by [`expand`] and [`expand_star`].
pub fn set_expansion_budget(budget: u64) {
    BUDGET.store(budget, Ordering::Relaxed);
}

pub fn expansion_budget() -> u64 {
    BUDGET.load(Ordering::Relaxed)
}

/// An integer sequence, identified with its prefix up to the last non-zero
/// entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<i64>);

impl Composition {
    pub fn new(mut entries: Vec<i64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Composition(entries)
    }

    pub fn from_parts(parts: &[u32]) -> Self {
        Self::new(parts.iter().map(|&p| p as i64).collect())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `ℓ(α)`: position of the last non-zero entry.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|α|`.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `#α`: number of non-zero entries.
    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&v| v != 0).count()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    /// Entries sorted into a partition; only meaningful when non-negative.
    pub fn sorted(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition::new(v)
    }

    /// Removes the entry at 0-based position `pos`.
    pub fn without(&self, pos: usize) -> Composition {
        let mut v = self.0.clone();
        if pos < v.len() {
            v.remove(pos);
        }
        Composition::new(v)
    }

    pub fn to_parts(&self) -> Option<Vec<u32>> {
        self.0.iter().map(|&v| u32::try_from(v).ok()).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which factors an operator carries, indexed by 1-based pairs `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSpec {
    nrows: usize,
    inverse_pairs: BTreeSet<(usize, usize)>,
    plain_pairs: BTreeSet<(usize, usize)>,
}

impl OperatorSpec {
    pub fn new(
        nrows: usize,
        inverse_pairs: BTreeSet<(usize, usize)>,
        plain_pairs: BTreeSet<(usize, usize)>,
    ) -> Result<Self> {
        for &(i, j) in inverse_pairs.iter().chain(&plain_pairs) {
            if !(1 <= i && i < j && j <= nrows) {
                return Err(Error::BadPair(i, j, nrows));
            }
        }
        if let Some(&(i, j)) = inverse_pairs.intersection(&plain_pairs).next() {
            return Err(Error::BadPair(i, j, nrows));
        }
        Ok(OperatorSpec { nrows, inverse_pairs, plain_pairs })
    }

    /// `R^D` on `nrows` positions: every pair gets `(1 - R_ij)`, pairs in `D`
    /// additionally get `(1 + R_ij)^{-1}`.
    pub fn valid_set(nrows: usize, d: &BTreeSet<(usize, usize)>) -> Self {
        let plain = all_pairs(nrows).filter(|p| !d.contains(p)).collect();
        let inverse = d.iter().copied().filter(|&(_, j)| j <= nrows).collect();
        OperatorSpec { nrows, inverse_pairs: inverse, plain_pairs: plain }
    }

    /// `R^λ = R^{C(λ)}` on `ℓ(λ)` positions.
    pub fn giambelli(lambda: &Partition, k: u32) -> Self {
        Self::valid_set(lambda.len(), &c_set(lambda, k))
    }

    /// `R^{C(λ)}` acting on sequences of length `nrows ≥ ℓ(λ)`.
    pub fn giambelli_on(lambda: &Partition, k: u32, nrows: usize) -> Self {
        Self::valid_set(nrows.max(lambda.len()), &c_set(lambda, k))
    }

    /// The theta operator `R̃^λ` (strict inequality in the pair condition).
    pub fn theta(lambda: &Partition, k: u32) -> Self {
        Self::valid_set(lambda.len(), &c_set_strict(lambda, k))
    }

    /// `∏_{i<j} (1 - R_ij)/(1 + R_ij)` on `nrows` positions (Schur Q).
    pub fn schur_q(nrows: usize) -> Self {
        OperatorSpec { nrows, inverse_pairs: all_pairs(nrows).collect(), plain_pairs: BTreeSet::new() }
    }

    /// `R^λ_d`: plain factors only for `i < j ≤ d`.
    pub fn truncated(lambda: &Partition, k: u32, d: usize) -> Self {
        let nrows = d.max(lambda.len());
        let c = c_set(lambda, k);
        let plain = all_pairs(d).filter(|p| !c.contains(p)).collect();
        OperatorSpec { nrows, inverse_pairs: c, plain_pairs: plain }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn inverse_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.inverse_pairs
    }

    pub fn plain_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.plain_pairs
    }

    /// Pairs by descending target column, then descending source row.
    fn ordered_pairs(&self) -> Vec<(usize, usize, bool)> {
        let mut pairs: Vec<(usize, usize, bool)> = self
            .inverse_pairs
            .iter()
            .map(|&(i, j)| (i, j, true))
            .chain(self.plain_pairs.iter().map(|&(i, j)| (i, j, false)))
            .collect();
        pairs.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        pairs
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// A finite signed sum of non-negative compositions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorExpansion {
    terms: BTreeMap<Composition, BigInt>,
}

impl OperatorExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(c: Composition) -> Self {
        let mut e = Self::new();
        e.add(c, BigInt::one());
        e
    }

    pub fn add(&mut self, c: Composition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(c.clone()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&c);
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &OperatorExpansion, factor: &BigInt) {
        for (c, v) in &other.terms {
            self.add(c.clone(), v * factor);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Composition, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, c: &Composition) -> BigInt {
        self.terms.get(c).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Merges compositions with the same multiset of entries; `c_α` is a
    /// commutative product so these name the same monomial.
    pub fn symmetrized(&self) -> OperatorExpansion {
        let mut out = Self::new();
        for (c, v) in &self.terms {
            out.add(c.sorted(), v.clone());
        }
        out
    }

    pub fn to_json(&self) -> Vec<ExpansionTermJson> {
        self.terms
            .iter()
            .map(|(c, v)| ExpansionTermJson { composition: c.0.clone(), coefficient: v.to_string() })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTermJson {
    pub composition: Vec<i64>,
    pub coefficient: String,
}

/// State key during expansion: the running sequence and whether some factor
/// touched the tracked position.
type State = (Vec<i64>, bool);

fn expand_tracked(
    spec: &OperatorSpec,
    alpha: &Composition,
    track: Option<usize>,
    budget: u64,
) -> Result<HashMap<State, BigInt>> {
    expand_from(spec, &[(alpha.clone(), BigInt::one())], track, budget)
}

fn expand_from(
    spec: &OperatorSpec,
    starts: &[(Composition, BigInt)],
    track: Option<usize>,
    budget: u64,
) -> Result<HashMap<State, BigInt>> {
    let mut states: HashMap<State, BigInt> = HashMap::new();
    for (alpha, c) in starts {
        if alpha.len() > spec.nrows {
            return Err(Error::CompositionTooLong { len: alpha.len(), nrows: spec.nrows });
        }
        let mut start = alpha.0.clone();
        start.resize(spec.nrows, 0);
        *states.entry((start, false)).or_insert_with(BigInt::zero) += c;
    }
    states.retain(|_, v| !v.is_zero());
    let mut visits: u64 = 0;
    let pairs = spec.ordered_pairs();
    let mut idx = 0;
    let two = BigInt::from(2);

    for j in (1..=spec.nrows).rev() {
        while idx < pairs.len() && pairs[idx].1 == j {
            let (i, _, inverse) = pairs[idx];
            idx += 1;
            let touches = track.is_some_and(|t| t == i || t == j);
            let mut next: HashMap<State, BigInt> = HashMap::with_capacity(states.len() * 2);
            for ((seq, flag), coeff) in states {
                let room = seq[j - 1];
                if room < 0 {
                    continue;
                }
                let max_power = if inverse { room } else { room.min(1) };
                for power in 0..=max_power {
                    let factor = match (inverse, power) {
                        (_, 0) => BigInt::one(),
                        (false, _) => -BigInt::one(),
                        (true, p) if p % 2 == 1 => -two.clone(),
                        (true, _) => two.clone(),
                    };
                    let mut s = seq.clone();
                    s[i - 1] += power;
                    s[j - 1] -= power;
                    let f = flag || (touches && power > 0);
                    visits += 1;
                    if visits > budget {
                        return Err(Error::ExpansionBudgetExceeded(budget));
                    }
                    *next.entry((s, f)).or_insert_with(BigInt::zero) += &coeff * &factor;
                }
            }
            next.retain(|_, v| !v.is_zero());
            states = next;
        }
        // position j is final from here on
        states.retain(|(seq, _), _| seq[j - 1] >= 0);
    }
    Ok(states)
}

/// Expands the operator `spec` against `alpha`.
pub fn expand(spec: &OperatorSpec, alpha: &Composition) -> Result<OperatorExpansion> {
    expand_with_budget(spec, alpha, expansion_budget())
}

pub fn expand_with_budget(
    spec: &OperatorSpec,
    alpha: &Composition,
    budget: u64,
) -> Result<OperatorExpansion> {
    let states = expand_tracked(spec, alpha, None, budget)?;
    let mut out = OperatorExpansion::new();
    for ((seq, _), v) in states {
        out.add(Composition::new(seq), v);
    }
    Ok(out)
}

/// Expands `spec` against the formal sum `Σ c · α`.
pub fn expand_sum(spec: &OperatorSpec, starts: &[(Composition, BigInt)]) -> Result<OperatorExpansion> {
    let states = expand_from(spec, starts, None, expansion_budget())?;
    let mut out = OperatorExpansion::new();
    for ((seq, _), v) in states {
        out.add(Composition::new(seq), v);
    }
    Ok(out)
}

/// The expansion of `R^λ ϑ_λ` split for the star action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSplit {
    /// 1-based index `m = ℓ_k(λ) + 1` of the first part equal to `k`.
    pub m: usize,
    /// Monomials with no factor `R_ij` touching `m`, recorded with position
    /// `m` deleted.
    pub plain_part: OperatorExpansion,
    /// Monomials involving index `m`, on the full composition.
    pub m_involved_part: OperatorExpansion,
}

pub fn expand_star(lambda: &TypedPartition) -> Result<StarSplit> {
    expand_star_with_budget(lambda, expansion_budget())
}

pub fn expand_star_with_budget(lambda: &TypedPartition, budget: u64) -> Result<StarSplit> {
    if !lambda.has_positive_type() {
        return Err(Error::NoPartEqualK);
    }
    let m = lambda.k_length() + 1;
    debug_assert_eq!(lambda.parts()[m - 1], lambda.k());
    let spec = OperatorSpec::giambelli(lambda.partition(), lambda.k());
    let states = expand_tracked(&spec, &Composition::from_parts(lambda.parts()), Some(m), budget)?;
    let mut plain_part = OperatorExpansion::new();
    let mut m_involved_part = OperatorExpansion::new();
    for ((seq, touched), v) in states {
        if touched {
            m_involved_part.add(Composition::new(seq), v);
        } else {
            debug_assert_eq!(seq[m - 1], lambda.k() as i64);
            plain_part.add(Composition::new(seq).without(m - 1), v);
        }
    }
    Ok(StarSplit { m, plain_part, m_involved_part })
}
