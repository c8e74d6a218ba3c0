//! Partitions, k-strict and typed k-strict partitions, and box geometry.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Self::trimmed(parts))
    }

    /// Builds a partition from parts that are already weakly decreasing.
    pub(crate) fn trimmed(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part in row `row` (1-based); zero past the end, and for row 0 by the
    /// convention that row zero is infinitely long.
    pub fn row(&self, row: u32) -> u32 {
        match row {
            0 => u32::MAX,
            r => self.0.get(r as usize - 1).copied().unwrap_or(0),
        }
    }

    /// Number of boxes in column `col` (1-based).
    pub fn column(&self, col: u32) -> u32 {
        self.0.iter().take_while(|&&p| p >= col).count() as u32
    }

    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = (1..=self.first()).map(|c| self.column(c)).collect();
        Partition(cols)
    }

    /// Diagram containment `other ⊂ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_box(&self, b: BoxPos) -> bool {
        b.col >= 1 && b.col <= self.row(b.row)
    }

    pub fn is_k_strict(&self, k: u32) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1] || w[0] <= k)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Number of parts strictly greater than `k`.
    pub fn k_length(&self, k: u32) -> usize {
        self.0.iter().take_while(|&&p| p > k).count()
    }

    pub fn has_part(&self, value: u32) -> bool {
        self.0.contains(&value)
    }

    /// Boxes of `self / inner`, row by row.
    pub fn skew_boxes(&self, inner: &Partition) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            let row = i as u32 + 1;
            for col in inner.row(row) + 1..=p {
                out.push(BoxPos::new(row, col));
            }
        }
        out
    }

    /// `self` with one part equal to `value` removed.
    pub fn remove_part(&self, value: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == value)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    pub fn fits_rectangle(&self, rows: u32, cols: u32) -> bool {
        self.len() as u32 <= rows && self.first() <= cols
    }

    /// All partitions `ν ⊂ self`, in lexicographic order of parts.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[u32], bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            match outer.split_first() {
                None => out.push(Partition::trimmed(cur.clone())),
                Some((&first, rest)) => {
                    for v in 0..=first.min(bound) {
                        cur.push(v);
                        rec(rest, v, cur, out);
                        cur.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        rec(&self.0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "()" {
            return Ok(Partition::empty());
        }
        let s = s.trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "partition", input: s.to_string() })?;
        Partition::new(parts)
    }
}

/// All partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order.
pub fn partitions_of(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn rec(n: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All k-strict partitions of `n`.
pub fn k_strict_partitions(n: u32, k: u32) -> Vec<Partition> {
    partitions_of(n, n, n as usize).into_iter().filter(|p| p.is_k_strict(k)).collect()
}

/// A k-strict partition together with a type marker in {0, 1, 2}.
///
/// The type is positive exactly when some part equals `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypedPartition {
    parts: Partition,
    k: u32,
    #[serde(rename = "type")]
    ty: u8,
}

impl TypedPartition {
    /// Checks k-strictness and the type rule.
    pub fn validate(parts: Partition, k: u32, ty: u8) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if let Some(w) = parts.0.windows(2).find(|w| w[0] == w[1] && w[0] > k) {
            return Err(Error::NotKStrict(parts.0.clone(), w[0], k));
        }
        let positive = parts.has_part(k);
        if ty > 2 || positive != (ty > 0) {
            return Err(Error::BadType { parts: parts.0.clone(), k, ty });
        }
        Ok(TypedPartition { parts, k, ty })
    }

    pub fn new(parts: impl Into<Vec<u32>>, k: u32, ty: u8) -> Result<Self> {
        Self::validate(Partition::new(parts)?, k, ty)
    }

    pub fn empty(k: u32) -> Self {
        TypedPartition { parts: Partition::empty(), k, ty: 0 }
    }

    /// Every typed version of a k-strict partition: type 0 when no part
    /// equals `k`, otherwise types 1 and 2.
    pub fn typings(parts: &Partition, k: u32) -> Vec<TypedPartition> {
        debug_assert!(parts.is_k_strict(k));
        if parts.has_part(k) {
            vec![
                TypedPartition { parts: parts.clone(), k, ty: 1 },
                TypedPartition { parts: parts.clone(), k, ty: 2 },
            ]
        } else {
            vec![TypedPartition { parts: parts.clone(), k, ty: 0 }]
        }
    }

    /// All typed k-strict partitions of `n`.
    pub fn all_of_size(n: u32, k: u32) -> Vec<TypedPartition> {
        k_strict_partitions(n, k).iter().flat_map(|p| Self::typings(p, k)).collect()
    }

    /// All typed k-strict partitions of size at most `max_size`, by size.
    pub fn all_up_to(max_size: u32, k: u32) -> Vec<TypedPartition> {
        (0..=max_size).flat_map(|n| Self::all_of_size(n, k)).collect()
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    pub fn parts(&self) -> &[u32] {
        self.parts.parts()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ty(&self) -> u8 {
        self.ty
    }

    pub fn size(&self) -> u32 {
        self.parts.size()
    }

    pub fn k_length(&self) -> usize {
        self.parts.k_length(self.k)
    }

    pub fn has_positive_type(&self) -> bool {
        self.ty > 0
    }

    /// The type-swapping involution: exchanges types 1 and 2.
    pub fn swap_type(&self) -> TypedPartition {
        let ty = match self.ty {
            1 => 2,
            2 => 1,
            t => t,
        };
        TypedPartition { ty, ..self.clone() }
    }
}

impl fmt::Display for TypedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:k={}:type={}", self.parts, self.k, self.ty)
    }
}

/// Parses `"8,4,3,2:k=3:type=1"`. `k` may be omitted when `default_k` is
/// given; a missing type means type 0.
pub fn parse_typed(s: &str, default_k: Option<u32>) -> Result<TypedPartition> {
    let bad = || Error::Parse { what: "typed partition", input: s.to_string() };
    let mut fields = s.split(':');
    let parts: Partition = fields.next().unwrap_or("").parse()?;
    let mut k = default_k;
    let mut ty = 0u8;
    for field in fields {
        let (key, value) = field.split_once('=').ok_or_else(bad)?;
        match key.trim() {
            "k" => k = Some(value.trim().parse().map_err(|_| bad())?),
            "type" | "t" => ty = value.trim().parse().map_err(|_| bad())?,
            _ => return Err(bad()),
        }
    }
    TypedPartition::validate(parts, k.ok_or_else(bad)?, ty)
}

impl FromStr for TypedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_typed(s, None)
    }
}

/// Box `[row, col]` of a Young diagram; row 0 is the fictitious infinite row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxPos {
    pub row: u32,
    pub col: u32,
}

impl BoxPos {
    pub fn new(row: u32, col: u32) -> Self {
        BoxPos { row, col }
    }

    /// Boxes sharing at least a vertex.
    pub fn touches(self, other: BoxPos) -> bool {
        self != other && self.row.abs_diff(other.row) <= 1 && self.col.abs_diff(other.col) <= 1
    }
}

/// k'-relation between a left box (column ≤ k) and a right box (column > k):
/// `c + c' = 2k + 1 + r - r'`.
pub fn is_k_prime_related(b1: BoxPos, b2: BoxPos, k: u32) -> Result<bool> {
    let (left, right) = if b1.col <= k && b2.col > k {
        (b1, b2)
    } else if b2.col <= k && b1.col > k {
        (b2, b1)
    } else {
        return Err(Error::BoxSides((b1.row, b1.col), (b2.row, b2.col), k));
    };
    Ok(left_right_related(left, right, k))
}

#[inline]
pub(crate) fn left_right_related(left: BoxPos, right: BoxPos, k: u32) -> bool {
    (left.col + right.col + right.row) as i64 == (2 * k + 1 + left.row) as i64
}

/// Diagonal index `|c - k| + r` used by the k''-relation.
#[inline]
pub(crate) fn k_dblprime_index(b: BoxPos, k: u32) -> u32 {
    b.col.abs_diff(k) + b.row
}

/// k''-relation: `|c - k| + r = |c' - k| + r'`.
pub fn is_k_dblprime_related(b1: BoxPos, b2: BoxPos, k: u32) -> bool {
    k_dblprime_index(b1, k) == k_dblprime_index(b2, k)
}

/// The valid set of pairs `C(λ) = {(i,j) : i < j ≤ ℓ(λ), λ_i + λ_j ≥ 2k + j - i}`
/// with 1-based indices.
pub fn c_set(lambda: &Partition, k: u32) -> BTreeSet<(usize, usize)> {
    let set = pair_set(lambda, |i, j, li, lj| li + lj >= 2 * k as i64 + (j - i) as i64);
    assert!(is_order_ideal(&set), "C({lambda}) is not an order ideal");
    set
}

/// Pairs with `λ_i + λ_j > 2k + j - i`, used by the theta polynomial operator.
pub fn c_set_strict(lambda: &Partition, k: u32) -> BTreeSet<(usize, usize)> {
    let set = pair_set(lambda, |i, j, li, lj| li + lj > 2 * k as i64 + (j - i) as i64);
    assert!(is_order_ideal(&set));
    set
}

fn pair_set(lambda: &Partition, keep: impl Fn(usize, usize, i64, i64) -> bool) -> BTreeSet<(usize, usize)> {
    let l = lambda.len();
    let mut set = BTreeSet::new();
    for j in 2..=l {
        for i in 1..j {
            if keep(i, j, lambda.row(i as u32) as i64, lambda.row(j as u32) as i64) {
                set.insert((i, j));
            }
        }
    }
    set
}

/// Order-ideal test in `Δ° = {(i,j) : 1 ≤ i < j}`.
pub fn is_order_ideal(set: &BTreeSet<(usize, usize)>) -> bool {
    set.iter().all(|&(i, j)| (1..=i).all(|a| (a + 1..=j).all(|b| set.contains(&(a, b)))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(TypedPartition::new(vec![3, 1], 1, 1).is_ok());
        assert!(TypedPartition::new(vec![], 2, 0).is_ok());
        assert!(matches!(TypedPartition::new(vec![5, 5, 1], 2, 0), Err(Error::NotKStrict(..))));
        assert!(matches!(TypedPartition::new(vec![3, 2], 2, 0), Err(Error::BadType { .. })));
        assert!(matches!(TypedPartition::new(vec![3, 1], 2, 1), Err(Error::BadType { .. })));
        assert!(matches!(TypedPartition::new(vec![2], 2, 3), Err(Error::BadType { .. })));
        // repeated parts ≤ k are fine
        assert!(TypedPartition::new(vec![3, 2, 2], 2, 2).is_ok());
    }

    #[test]
    fn k_length_examples() {
        assert_eq!(p(&[8, 4, 3, 2]).k_length(3), 2);
        assert_eq!(p(&[3, 2, 2]).k_length(2), 1);
        assert_eq!(Partition::empty().k_length(5), 0);
    }

    #[test]
    fn c_set_examples() {
        let c: Vec<_> = c_set(&p(&[3, 2, 2]), 2).into_iter().collect();
        assert_eq!(c, vec![(1, 2)]);
        let c: Vec<_> = c_set(&p(&[3, 1]), 1).into_iter().collect();
        assert_eq!(c, vec![(1, 2)]);
        assert!(c_set(&Partition::empty(), 3).is_empty());
    }

    #[test]
    fn related_boxes() {
        let b = BoxPos::new;
        assert!(is_k_prime_related(b(1, 1), b(1, 4), 2).unwrap());
        assert!(!is_k_prime_related(b(1, 1), b(2, 4), 2).unwrap());
        assert!(is_k_prime_related(b(0, 2), b(0, 3), 2).unwrap());
        assert!(is_k_prime_related(b(1, 4), b(1, 1), 2).unwrap());
        assert!(is_k_prime_related(b(1, 1), b(1, 2), 2).is_err());
        assert!(is_k_prime_related(b(1, 3), b(1, 4), 2).is_err());

        assert!(is_k_dblprime_related(b(1, 3), b(1, 3), 3));
        assert!(is_k_dblprime_related(b(2, 1), b(1, 4), 2));
        assert!(!is_k_dblprime_related(b(1, 1), b(1, 4), 2));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn literals() {
        let t: TypedPartition = "8,4,3,2:k=3:type=1".parse().unwrap();
        assert_eq!(t.parts(), &[8, 4, 3, 2]);
        assert_eq!((t.k(), t.ty()), (3, 1));
        assert_eq!(t.to_string(), "8,4,3,2:k=3:type=1");
        let e: TypedPartition = "0:k=2".parse().unwrap();
        assert!(e.partition().is_empty());
        assert_eq!(parse_typed("3,1", Some(2)).unwrap().k(), 2);
        assert!("3,1".parse::<TypedPartition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
    }

    #[test]
    fn typed_counts_match_filter() {
        for k in 1..=3 {
            for n in 0..=8 {
                let all = partitions_of(n, n, n as usize);
                let strict: Vec<_> = all.iter().filter(|p| p.is_k_strict(k)).collect();
                assert_eq!(strict.len(), k_strict_partitions(n, k).len());
                let with_k = strict.iter().filter(|p| p.has_part(k)).count();
                assert_eq!(TypedPartition::all_of_size(n, k).len(), strict.len() + with_k);
            }
        }
    }

    #[test]
    fn subpartition_count() {
        // subdiagrams of a 2x2 square: 0, 1, 2, 11, 21, 22
        assert_eq!(p(&[2, 2]).subpartitions().len(), 6);
        assert!(p(&[3, 1]).subpartitions().iter().all(|s| p(&[3, 1]).contains(s)));
    }

    proptest::proptest! {
        #[test]
        fn conjugation_is_involution(mut parts in proptest::collection::vec(0u32..8, 0..7)) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts).unwrap();
            proptest::prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }

        #[test]
        fn c_set_is_order_ideal(n in 0u32..12, k in 1u32..4, idx in 0usize..64) {
            let parts = k_strict_partitions(n, k);
            let lam = &parts[idx % parts.len()];
            proptest::prop_assert!(is_order_ideal(&c_set(lam, k)));
        }

        #[test]
        fn k_prime_relation_shift_invariant(r in 0u32..6, c in 1u32..4, r2 in 0u32..6, c2 in 4u32..10) {
            let k = 3;
            let a = is_k_prime_related(BoxPos::new(r, c), BoxPos::new(r2, c2), k).unwrap();
            let b = is_k_prime_related(BoxPos::new(r + 1, c), BoxPos::new(r2 + 1, c2), k).unwrap();
            proptest::prop_assert_eq!(a, b);
        }
    }
}
