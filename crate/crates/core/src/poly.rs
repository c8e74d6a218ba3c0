//! Exact sparse polynomials in `x_1..x_m` and `y_1..y_ky` with rational
//! coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// Exponent vector: `m` x-exponents followed by `ky` y-exponents.
///
/// Ordered graded-lexicographically: total degree first, then lexicographic
/// with `x_1` most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Optional x-truncation used by polynomial-valued computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub m: usize,
    pub max_degree: Option<u32>,
}

impl Truncation {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "truncation needs at least one x variable");
        Truncation { m, max_degree: None }
    }

    pub fn with_max_degree(self, d: u32) -> Self {
        Truncation { max_degree: Some(d), ..self }
    }
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation::new(3)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    m: usize,
    ky: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl SparsePoly {
    pub fn zero(m: usize, ky: usize) -> Self {
        SparsePoly { m, ky, terms: BTreeMap::new() }
    }

    pub fn one(m: usize, ky: usize) -> Self {
        Self::constant(m, ky, Coeff::one())
    }

    pub fn constant(m: usize, ky: usize, c: Coeff) -> Self {
        let mut p = Self::zero(m, ky);
        p.add_term(vec![0; m + ky], c);
        p
    }

    pub fn x(i: usize, m: usize, ky: usize) -> Self {
        assert!(i >= 1 && i <= m);
        let mut e = vec![0; m + ky];
        e[i - 1] = 1;
        Self::from_terms(m, ky, [(e, Coeff::one())])
    }

    pub fn y(j: usize, m: usize, ky: usize) -> Self {
        assert!(j >= 1 && j <= ky);
        let mut e = vec![0; m + ky];
        e[m + j - 1] = 1;
        Self::from_terms(m, ky, [(e, Coeff::one())])
    }

    pub fn from_terms(m: usize, ky: usize, terms: impl IntoIterator<Item = (Vec<u32>, Coeff)>) -> Self {
        let mut p = Self::zero(m, ky);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(m: usize, ky: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            m,
            ky,
            terms.iter().map(|(e, c)| (e.to_vec(), Coeff::from_integer(BigInt::from(*c)))),
        )
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ky(&self) -> usize {
        self.ky
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.ky)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Coeff {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Coeff) {
        assert_eq!(exps.len(), self.m + self.ky, "exponent vector has the wrong length");
        if c.is_zero() {
            return;
        }
        let key = Monomial(exps);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(self.m, self.ky, other.m, other.ky));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.0.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.mul_truncated(other, None)
    }

    /// Product with all terms of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Self, max_degree: Option<u32>) -> Result<Self> {
        self.check_shape(other)?;
        let mut acc: HashMap<Vec<u32>, Coeff> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                if let Some(d) = max_degree {
                    if e1.degree() + e2.degree() > d {
                        continue;
                    }
                }
                let e: Vec<u32> = e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Coeff::zero) += c1 * c2;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (Monomial(e), c));
        Ok(SparsePoly { m: self.m, ky: self.ky, terms: terms.collect() })
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.m, self.ky);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        SparsePoly { m: self.m, ky: self.ky, terms }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Coeff::from_integer(BigInt::from(c)))
    }

    /// Multiplication by `2^e` (`e` may be negative).
    pub fn scale_pow2(&self, e: i64) -> Self {
        let two = BigInt::from(2);
        let factor = if e >= 0 {
            Coeff::from_integer(two.pow(e as u32))
        } else {
            Coeff::new(BigInt::one(), two.pow((-e) as u32))
        };
        self.scale(&factor)
    }

    /// Multiplication by a monomial given as an exponent vector.
    pub fn mul_monomial(&self, exps: &[u32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (Monomial(e.0.iter().zip(exps).map(|(a, b)| a + b).collect()), c.clone()))
            .collect();
        SparsePoly { m: self.m, ky: self.ky, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.m, self.ky);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Returns `self` after asserting every coefficient is an integer.
    pub fn into_integral(self, what: &str) -> Result<Self> {
        if self.is_integral() {
            Ok(self)
        } else {
            Err(Error::NonIntegralDivision(what.to_string()))
        }
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    pub fn is_x_only(&self) -> bool {
        self.terms.keys().all(|e| e.0[self.m..].iter().all(|&v| v == 0))
    }

    /// Sets `x_i = 0` for every `i` and drops the x variables.
    pub fn x_to_zero(&self) -> SparsePoly {
        self.restrict_x(0)
    }

    /// Sets `x_i = 0` for `i > m_new` and keeps `x_1..x_{m_new}`.
    pub fn restrict_x(&self, m_new: usize) -> SparsePoly {
        assert!(m_new <= self.m);
        let mut out = SparsePoly::zero(m_new, self.ky);
        for (e, c) in &self.terms {
            if e.0[m_new..self.m].iter().all(|&v| v == 0) {
                let mut ne = e.0[..m_new].to_vec();
                ne.extend_from_slice(&e.0[self.m..]);
                out.terms.insert(Monomial(ne), c.clone());
            }
        }
        out
    }

    /// Sets `y_j = 0` for `j > ky_new`.
    pub fn restrict_y(&self, ky_new: usize) -> SparsePoly {
        assert!(ky_new <= self.ky);
        let mut out = SparsePoly::zero(self.m, ky_new);
        for (e, c) in &self.terms {
            if e.0[self.m + ky_new..].iter().all(|&v| v == 0) {
                out.terms.insert(Monomial(e.0[..self.m + ky_new].to_vec()), c.clone());
            }
        }
        out
    }

    /// Re-embeds into a ring with `m_new` x and `ky_new` y variables, sending
    /// `x_i ↦ x_{i + x_offset}` and `y_j ↦ y_j`.
    pub fn embed(&self, m_new: usize, ky_new: usize, x_offset: usize) -> SparsePoly {
        assert!(self.m + x_offset <= m_new && self.ky <= ky_new);
        let mut out = SparsePoly::zero(m_new, ky_new);
        for (e, c) in &self.terms {
            let mut ne = vec![0; m_new + ky_new];
            ne[x_offset..x_offset + self.m].copy_from_slice(&e.0[..self.m]);
            ne[m_new..m_new + self.ky].copy_from_slice(&e.0[self.m..]);
            out.terms.insert(Monomial(ne), c.clone());
        }
        out
    }

    /// Exchanges `x_i` and `x_j` (1-based).
    pub fn swap_x(&self, i: usize, j: usize) -> SparsePoly {
        self.swap_positions(i - 1, j - 1)
    }

    /// Exchanges `y_i` and `y_j` (1-based).
    pub fn swap_y(&self, i: usize, j: usize) -> SparsePoly {
        self.swap_positions(self.m + i - 1, self.m + j - 1)
    }

    fn swap_positions(&self, a: usize, b: usize) -> SparsePoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.0.clone();
                ne.swap(a, b);
                (Monomial(ne), c.clone())
            })
            .collect();
        SparsePoly { m: self.m, ky: self.ky, terms }
    }

    /// Invariance under every adjacent transposition of the x variables.
    pub fn is_symmetric_in_x(&self) -> bool {
        (1..self.m).all(|i| self.swap_x(i, i + 1) == *self)
    }

    pub fn is_symmetric_in_y(&self) -> bool {
        (1..self.ky).all(|i| self.swap_y(i, i + 1) == *self)
    }

    /// Collects `self` as a polynomial in `x_1` with coefficients in the
    /// remaining variables `x_2..x_m` (renumbered from 1).
    pub fn split_first_x(&self) -> BTreeMap<u32, SparsePoly> {
        assert!(self.m >= 1);
        let mut out: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let entry = out.entry(e.0[0]).or_insert_with(|| SparsePoly::zero(self.m - 1, self.ky));
            entry.terms.insert(Monomial(e.0[1..].to_vec()), c.clone());
        }
        out
    }

    /// Homogeneous component of total degree `d`.
    pub fn component(&self, d: u32) -> SparsePoly {
        let terms = self.terms.iter().filter(|(e, _)| e.degree() == d);
        SparsePoly { m: self.m, ky: self.ky, terms: terms.map(|(e, c)| (e.clone(), c.clone())).collect() }
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            m: self.m,
            ky: self.ky,
            terms: self
                .terms()
                .map(|(e, c)| TermJson {
                    c: c.to_string(),
                    x: e.0[..self.m].to_vec(),
                    y: e.0[self.m..].to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<SparsePoly> {
        let mut p = SparsePoly::zero(json.m, json.ky);
        for t in &json.terms {
            let bad = || Error::Parse { what: "polynomial term", input: t.c.clone() };
            if t.x.len() != json.m || t.y.len() != json.ky {
                return Err(bad());
            }
            let c: Coeff = t.c.parse().map_err(|_| bad())?;
            let mut e = t.x.clone();
            e.extend_from_slice(&t.y);
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Wire form of a polynomial: terms in descending graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub m: usize,
    pub ky: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

impl Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PolyJson::deserialize(d)?;
        SparsePoly::from_json(&json).map_err(serde::de::Error::custom)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[u32], m: usize) -> fmt::Result {
    let mut first = true;
    for (i, &v) in e.iter().enumerate() {
        if v == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        let (name, idx) = if i < m { ("x", i + 1) } else { ("y", i - m + 1) };
        write!(f, "{name}{idx}")?;
        if v > 1 {
            write!(f, "^{v}")?;
        }
    }
    Ok(())
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = e.degree() == 0;
            if constant {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &e.0, self.m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly(m={}, ky={}: {})", self.m, self.ky, self)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_add(rhs).expect("polynomial shape mismatch")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_sub(rhs).expect("polynomial shape mismatch")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_mul(rhs).expect("polynomial shape mismatch")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale_int(-1)
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        self.check_shape(rhs).expect("polynomial shape mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.0.clone(), c.clone());
        }
    }
}

/// Sum of polynomials of a common shape.
pub fn sum<'a>(m: usize, ky: usize, items: impl IntoIterator<Item = &'a SparsePoly>) -> SparsePoly {
    let mut acc = SparsePoly::zero(m, ky);
    for p in items {
        acc += p;
    }
    acc
}

pub fn int(c: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let x1 = SparsePoly::x(1, 2, 1);
        let x2 = SparsePoly::x(2, 2, 1);
        let y1 = SparsePoly::y(1, 2, 1);
        let s = &(&x1 + &x2) * &(&x1 + &x2);
        assert_eq!(s.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        let t = &(&s * &y1) - &SparsePoly::one(2, 1);
        assert_eq!(t.to_string(), "x1^2*y1 + 2*x1*x2*y1 + x2^2*y1 - 1");
        assert!((&t - &t).is_zero());
        assert_eq!(t.scale_pow2(-1).coeff(&[1, 1, 1]), int(1));
    }

    #[test]
    fn shape_mismatch_is_error() {
        let a = SparsePoly::one(2, 1);
        let b = SparsePoly::one(3, 1);
        assert!(matches!(a.checked_add(&b), Err(Error::ShapeMismatch(..))));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn restrict_and_embed() {
        let p = &SparsePoly::x(1, 3, 1) + &SparsePoly::x(3, 3, 1);
        assert_eq!(p.restrict_x(2), SparsePoly::x(1, 2, 1));
        let q = SparsePoly::x(1, 2, 1).embed(3, 2, 1);
        assert_eq!(q, SparsePoly::x(2, 3, 2));
        let parts = (&p * &SparsePoly::x(1, 3, 1)).split_first_x();
        assert_eq!(parts.len(), 2);
    }

    #[test]
    fn json_roundtrip() {
        let mut p = SparsePoly::from_int_terms(2, 1, &[(&[1, 2, 0], 3), (&[0, 0, 1], -1)]);
        p.add_term(vec![0, 0, 0], Coeff::new(BigInt::from(1), BigInt::from(2)));
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with(r#"{"m":2,"ky":1,"terms":[{"c":"3","x":[1,2],"y":[0]}"#));
        let back: SparsePoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    proptest::proptest! {
        #[test]
        fn ring_axioms(a in proptest::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..5),
                       b in proptest::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..5)) {
            let mk = |v: &[(u32, u32, i64)]| SparsePoly::from_terms(2, 0, v.iter().map(|&(i, j, c)| (vec![i, j], int(c))));
            let (p, q) = (mk(&a), mk(&b));
            proptest::prop_assert_eq!(&p * &q, &q * &p);
            proptest::prop_assert_eq!(&(&p + &q) - &q, p.clone());
            let back = SparsePoly::from_json(&p.to_json()).unwrap();
            proptest::prop_assert_eq!(back, p);
        }
    }
}
