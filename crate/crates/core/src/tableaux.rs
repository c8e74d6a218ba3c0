//! Typed k'-tableaux and k'-bitableaux, the skew functions `E_{λ/μ}`, and
//! the tableau formula for eta polynomials.
//!
//! A tableau is stored as its chain `μ = λ⁰ ⊂ λ¹ ⊂ ⋯ ⊂ λʳ = λ` of typed
//! partitions; the box filling is derived from the chain.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, TypedPartition};
use crate::pieri::typed_strip_weight;
use crate::poly::{Coeff, SparsePoly, Truncation};

/// One filled box of a typed tableau: `value` or `value°`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub value: u32,
    pub circled: bool,
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.circled {
            write!(f, "{}o", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypedTableau {
    chain: Vec<TypedPartition>,
    weights: Vec<u32>,
}

impl TypedTableau {
    /// Builds a tableau from a chain, checking every step.
    pub fn from_chain(chain: Vec<TypedPartition>) -> Result<Self> {
        assert!(!chain.is_empty(), "a chain needs at least its inner shape");
        let mut weights = Vec::with_capacity(chain.len() - 1);
        for w in chain.windows(2) {
            if w[0].k() != w[1].k() {
                return Err(Error::KMismatch(w[0].k(), w[1].k()));
            }
            match typed_strip_weight(&w[1], &w[0])? {
                Some(n) => weights.push(n),
                None => {
                    return Err(Error::NotAStrip { lambda: w[1].parts().to_vec(), mu: w[0].parts().to_vec() })
                }
            }
        }
        Ok(TypedTableau { chain, weights })
    }

    pub fn chain(&self) -> &[TypedPartition] {
        &self.chain
    }

    pub fn inner(&self) -> &TypedPartition {
        &self.chain[0]
    }

    pub fn outer(&self) -> &TypedPartition {
        self.chain.last().expect("non-empty chain")
    }

    /// Largest entry value `r`.
    pub fn max_entry(&self) -> usize {
        self.chain.len() - 1
    }

    /// Per-step weights `n(λⁱ/λⁱ⁻¹)`.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// `n(T)`.
    pub fn n(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// `m_i`: how many boxes carry entry `i`.
    pub fn content(&self) -> Vec<u32> {
        self.chain.windows(2).map(|w| w[1].size() - w[0].size()).collect()
    }

    /// Box rows of the outer shape; `None` marks boxes of the inner shape.
    pub fn grid(&self) -> Vec<Vec<Option<Entry>>> {
        let outer = self.outer().partition();
        let mut grid: Vec<Vec<Option<Entry>>> =
            outer.parts().iter().map(|&l| vec![None; l as usize]).collect();
        for (i, w) in self.chain.windows(2).enumerate() {
            let entry = Entry { value: i as u32 + 1, circled: w[1].ty() == 2 };
            for b in w[1].partition().skew_boxes(w[0].partition()) {
                grid[b.row as usize - 1][b.col as usize - 1] = Some(entry);
            }
        }
        grid
    }

    /// Applies the type-swapping involution to every partition of the chain.
    pub fn j(&self) -> TypedTableau {
        TypedTableau {
            chain: self.chain.iter().map(TypedPartition::swap_type).collect(),
            weights: self.weights.clone(),
        }
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            chain: self.chain.iter().map(ToString::to_string).collect(),
            grid: render_rows(&self.grid(), &[]),
            n: self.n(),
        }
    }
}

impl fmt::Display for TypedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &render_rows(&self.grid(), &[]))
    }
}

fn render_rows(grid: &[Vec<Option<Entry>>], marked: &[Vec<u32>]) -> Vec<Vec<String>> {
    grid.iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, e)| match e {
                    Some(e) => e.to_string(),
                    None => marked
                        .get(r)
                        .and_then(|m| m.get(c))
                        .map_or_else(|| ".".to_string(), |v| format!("{v}'")),
                })
                .collect()
        })
        .collect()
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<String>]) -> fmt::Result {
    if rows.is_empty() {
        return write!(f, "(empty)");
    }
    let lines: Vec<String> = rows.iter().map(|r| r.join(" ")).collect();
    write!(f, "{}", lines.join("\n"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauJson {
    pub chain: Vec<String>,
    pub grid: Vec<Vec<String>>,
    pub n: u32,
}

/// Strip relations among the typed partitions between two fixed shapes.
struct StripGraph {
    /// `above[ν]`: every `(ν', n(ν'/ν))` with `ν ⊂ ν' ⊂ λ`.
    above: HashMap<TypedPartition, Vec<(TypedPartition, u32)>>,
}

impl StripGraph {
    fn new(lambda: &TypedPartition, mu: &TypedPartition) -> Result<Self> {
        let k = lambda.k();
        let nodes: Vec<TypedPartition> = lambda
            .partition()
            .subpartitions()
            .into_iter()
            .filter(|p| p.contains(mu.partition()) && p.is_k_strict(k))
            .flat_map(|p| TypedPartition::typings(&p, k))
            .filter(|t| t.partition() != lambda.partition() || t == lambda)
            .filter(|t| t.partition() != mu.partition() || t == mu)
            .collect();
        let mut above: HashMap<TypedPartition, Vec<(TypedPartition, u32)>> = HashMap::new();
        for lo in &nodes {
            let mut ups = Vec::new();
            for hi in &nodes {
                if hi.partition().contains(lo.partition()) {
                    if let Some(n) = typed_strip_weight(hi, lo)? {
                        ups.push((hi.clone(), n));
                    }
                }
            }
            ups.sort();
            above.insert(lo.clone(), ups);
        }
        Ok(StripGraph { above })
    }

    fn ups(&self, nu: &TypedPartition) -> &[(TypedPartition, u32)] {
        self.above.get(nu).map_or(&[], Vec::as_slice)
    }
}

fn check_pair(lambda: &TypedPartition, mu: &TypedPartition) -> Result<()> {
    if lambda.k() != mu.k() {
        return Err(Error::KMismatch(lambda.k(), mu.k()));
    }
    if !lambda.partition().contains(mu.partition()) {
        return Err(Error::NotContained);
    }
    Ok(())
}

/// All typed k'-tableaux of shape `λ/μ` with entries at most `max_entry`,
/// in lexicographic order of their chains.
pub fn enumerate_typed_tableaux(
    lambda: &TypedPartition,
    mu: &TypedPartition,
    max_entry: usize,
) -> Result<Vec<TypedTableau>> {
    check_pair(lambda, mu)?;
    let graph = StripGraph::new(lambda, mu)?;
    let mut out = Vec::new();
    let mut chain = vec![mu.clone()];
    let mut weights = Vec::new();
    extend_chains(&graph, lambda, max_entry, &mut chain, &mut weights, false, &mut out);
    Ok(out)
}

/// All standard typed k'-tableaux of shape `λ/μ`.
pub fn enumerate_standard(lambda: &TypedPartition, mu: &TypedPartition) -> Result<Vec<TypedTableau>> {
    check_pair(lambda, mu)?;
    let graph = StripGraph::new(lambda, mu)?;
    let steps = (lambda.size() - mu.size()) as usize;
    let mut out = Vec::new();
    let mut chain = vec![mu.clone()];
    let mut weights = Vec::new();
    extend_chains(&graph, lambda, steps, &mut chain, &mut weights, true, &mut out);
    Ok(out)
}

fn extend_chains(
    graph: &StripGraph,
    lambda: &TypedPartition,
    steps: usize,
    chain: &mut Vec<TypedPartition>,
    weights: &mut Vec<u32>,
    single_boxes: bool,
    out: &mut Vec<TypedTableau>,
) {
    let cur = chain.last().expect("non-empty chain").clone();
    let remaining = steps + 1 - chain.len();
    if remaining == 0 {
        if &cur == lambda {
            out.push(TypedTableau { chain: chain.clone(), weights: weights.clone() });
        }
        return;
    }
    for (next, n) in graph.ups(&cur) {
        let grow = next.size() - cur.size();
        if single_boxes && grow != 1 {
            continue;
        }
        // the final step must land on λ exactly
        if remaining == 1 && next != lambda {
            continue;
        }
        chain.push(next.clone());
        weights.push(*n);
        extend_chains(graph, lambda, steps, chain, weights, single_boxes, out);
        chain.pop();
        weights.pop();
    }
}

/// `E_{λ/μ}(x_1..x_m)`, by summing over the last strip.
pub fn e_skew_in(lambda: &TypedPartition, mu: &TypedPartition, m: usize) -> Result<SparsePoly> {
    check_pair(lambda, mu)?;
    let graph = StripGraph::new(lambda, mu)?;
    // below[ν]: strips ending at ν
    let mut below: HashMap<TypedPartition, Vec<(TypedPartition, u32)>> = HashMap::new();
    for (lo, ups) in &graph.above {
        for (hi, n) in ups {
            below.entry(hi.clone()).or_default().push((lo.clone(), *n));
        }
    }
    let mut memo: HashMap<(TypedPartition, usize), SparsePoly> = HashMap::new();
    let out = e_rec(lambda, mu, m, &below, &mut memo);
    debug_assert!(out.is_symmetric_in_x());
    Ok(out)
}

fn e_rec(
    top: &TypedPartition,
    mu: &TypedPartition,
    m: usize,
    below: &HashMap<TypedPartition, Vec<(TypedPartition, u32)>>,
    memo: &mut HashMap<(TypedPartition, usize), SparsePoly>,
) -> SparsePoly {
    if m == 0 {
        return if top == mu { SparsePoly::one(0, 0) } else { SparsePoly::zero(0, 0) };
    }
    if let Some(p) = memo.get(&(top.clone(), m)) {
        return p.clone();
    }
    let mut out = SparsePoly::zero(m, 0);
    for (nu, n) in below.get(top).map_or(&[][..], Vec::as_slice) {
        let inner = e_rec(nu, mu, m - 1, below, memo);
        if inner.is_zero() {
            continue;
        }
        let mut xm = vec![0u32; m];
        xm[m - 1] = top.size() - nu.size();
        out += &inner.embed(m, 0, 0).mul_monomial(&xm).scale_pow2(*n as i64);
    }
    memo.insert((top.clone(), m), out.clone());
    out
}

pub fn e_skew(lambda: &TypedPartition, mu: &TypedPartition, trunc: &Truncation) -> Result<SparsePoly> {
    e_skew_in(lambda, mu, trunc.m)
}

/// `E_{λ/μ}` summed tableau by tableau; slower, used as a cross-check.
pub fn e_skew_by_enumeration(lambda: &TypedPartition, mu: &TypedPartition, m: usize) -> Result<SparsePoly> {
    let mut out = SparsePoly::zero(m, 0);
    for t in enumerate_typed_tableaux(lambda, mu, m)? {
        out.add_term(t.content(), Coeff::from_integer(num_bigint::BigInt::from(1u8) << t.n()));
    }
    Ok(out)
}

/// A typed k'-bitableau: a marked filling of `μ` and a typed tableau on `λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TypedBitableau {
    /// Rows of `μ` with marked values `j` standing for `j'`.
    pub marked: Vec<Vec<u32>>,
    pub outer: TypedTableau,
}

impl TypedBitableau {
    pub fn n(&self) -> u32 {
        self.outer.n()
    }

    /// Exponent vector of `(xy)^U` over `m` x- and `ky` y-variables.
    pub fn exponents(&self, m: usize, ky: usize) -> Vec<u32> {
        let mut e = vec![0u32; m + ky];
        for (i, c) in self.outer.content().into_iter().enumerate() {
            e[i] += c;
        }
        for row in &self.marked {
            for &v in row {
                e[m + v as usize - 1] += 1;
            }
        }
        e
    }

    pub fn rows(&self) -> Vec<Vec<String>> {
        render_rows(&self.outer.grid(), &self.marked)
    }

    pub fn to_json(&self) -> BitableauJson {
        BitableauJson {
            inner: self.outer.inner().to_string(),
            chain: self.outer.chain.iter().map(ToString::to_string).collect(),
            grid: self.rows(),
            n: self.n(),
        }
    }
}

impl fmt::Display for TypedBitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BitableauJson {
    pub inner: String,
    pub chain: Vec<String>,
    pub grid: Vec<Vec<String>>,
    pub n: u32,
}

/// Fillings of `shape` with values `1..=ky`, strictly increasing along rows
/// and weakly increasing down columns.
pub fn marked_fillings(shape: &Partition, ky: usize) -> Vec<Vec<Vec<u32>>> {
    let rows: Vec<usize> = shape.parts().iter().map(|&l| l as usize).collect();
    let mut grid: Vec<Vec<u32>> = rows.iter().map(|&l| vec![0; l]).collect();
    let cells: Vec<(usize, usize)> =
        rows.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    let mut out = Vec::new();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        ky: u32,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if idx == cells.len() {
            out.push(grid.clone());
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] + 1 } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] } else { 1 };
        for v in lo_row.max(lo_col)..=ky {
            grid[r][c] = v;
            go(idx + 1, cells, grid, ky, out);
        }
        grid[r][c] = 0;
    }
    go(0, &cells, &mut grid, ky as u32, &mut out);
    out
}

/// All typed k'-bitableaux of shape `λ` with unmarked entries at most
/// `max_unmarked` and marked entries among `1'..ky'`.
pub fn enumerate_bitableaux(
    lambda: &TypedPartition,
    max_unmarked: usize,
    ky: usize,
) -> Result<Vec<TypedBitableau>> {
    let k = lambda.k();
    let mut out = Vec::new();
    for mu in lambda.partition().subpartitions() {
        if mu.first() > k {
            continue;
        }
        let typed = TypedPartition::typings(&mu, k).into_iter().find(|t| t.ty() != 2).expect("type 0 or 1");
        let fillings = marked_fillings(&mu, ky);
        if fillings.is_empty() {
            continue;
        }
        let tableaux = enumerate_typed_tableaux(lambda, &typed, max_unmarked)?;
        for marked in &fillings {
            for t in &tableaux {
                out.push(TypedBitableau { marked: marked.clone(), outer: t.clone() });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `Σ_U 2^{n(U)} (xy)^U` over explicitly enumerated bitableaux.
pub fn eta_via_tableaux_in(lambda: &TypedPartition, m: usize, ky: usize) -> Result<SparsePoly> {
    let mut out = SparsePoly::zero(m, ky);
    for u in enumerate_bitableaux(lambda, m, ky)? {
        out.add_term(u.exponents(m, ky), Coeff::from_integer(num_bigint::BigInt::from(1u8) << u.n()));
    }
    Ok(out)
}

pub fn eta_via_tableaux(lambda: &TypedPartition, trunc: &Truncation, ky: usize) -> Result<SparsePoly> {
    eta_via_tableaux_in(lambda, trunc.m, ky)
}

/// The type-swapping involution on typed partitions.
pub fn j_involution(lambda: &TypedPartition) -> TypedPartition {
    lambda.swap_type()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eta::eta_in;

    fn typed(parts: &[u32], k: u32, ty: u8) -> TypedPartition {
        TypedPartition::new(parts.to_vec(), k, ty).unwrap()
    }

    #[test]
    fn bitableau_counts_31() {
        // three with n(U) = 1 and ten with n(U) = 0
        let all = enumerate_bitableaux(&typed(&[3, 1], 1, 1), 2, 1).unwrap();
        assert_eq!(all.len(), 13);
        assert_eq!(all.iter().filter(|u| u.n() == 1).count(), 3);
        let all = enumerate_bitableaux(&typed(&[3, 1], 1, 2), 2, 1).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|u| u.n() == 0));
        let empty = enumerate_bitableaux(&TypedPartition::empty(1), 2, 1).unwrap();
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn weighted_bitableaux_31() {
        let rendered: Vec<String> = enumerate_bitableaux(&typed(&[3, 1], 1, 1), 2, 1)
            .unwrap()
            .into_iter()
            .filter(|u| u.n() == 1)
            .map(|u| u.to_string())
            .collect();
        let mut rendered = rendered;
        rendered.sort();
        assert_eq!(rendered, vec!["1' 1 2\n1", "1' 1 2\n1'", "1' 2 2\n1"]);
    }

    #[test]
    fn tableau_formula_matches_eta_31() {
        for ty in [1, 2] {
            let lam = typed(&[3, 1], 1, ty);
            assert_eq!(eta_via_tableaux_in(&lam, 2, 1).unwrap(), eta_in(&lam, 2, 1).unwrap());
        }
    }

    #[test]
    fn empty_shapes() {
        let lam = typed(&[3, 1], 1, 1);
        let ts = enumerate_typed_tableaux(&lam, &lam, 3).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].n(), 0);
        assert_eq!(enumerate_standard(&lam, &lam).unwrap().len(), 1);
        assert_eq!(e_skew_in(&lam, &lam, 3).unwrap(), SparsePoly::one(3, 0));
    }

    #[test]
    fn standard_421() {
        let lam = typed(&[4, 2, 1], 1, 1);
        assert_eq!(enumerate_standard(&lam, &TypedPartition::empty(1)).unwrap().len(), 9);
    }

    #[test]
    fn j_is_an_involution_and_preserves_e() {
        for k in 1..=2 {
            for lam in TypedPartition::all_up_to(5, k) {
                for t in enumerate_standard(&lam, &TypedPartition::empty(k)).unwrap() {
                    assert_eq!(t.j().j(), t);
                }
                for mu in TypedPartition::all_up_to(lam.size(), k) {
                    if !lam.partition().contains(mu.partition()) {
                        continue;
                    }
                    let e = e_skew_in(&lam, &mu, 2).unwrap();
                    assert_eq!(e, e_skew_in(&lam.swap_type(), &mu.swap_type(), 2).unwrap());
                }
            }
        }
    }

    #[test]
    fn e_skew_agrees_with_enumeration() {
        for k in 1..=2 {
            for lam in TypedPartition::all_up_to(5, k) {
                for mu in TypedPartition::all_up_to(lam.size(), k) {
                    if lam.partition().contains(mu.partition()) {
                        let a = e_skew_in(&lam, &mu, 3).unwrap();
                        assert_eq!(a, e_skew_by_enumeration(&lam, &mu, 3).unwrap());
                        assert!(a.is_symmetric_in_x());
                    }
                }
            }
        }
    }

    #[test]
    fn marked_fillings_count() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        // transposes of semistandard tableaux of shape (2,1) in two letters
        assert_eq!(marked_fillings(&mu, 2).len(), 2);
        assert!(marked_fillings(&Partition::new(vec![2]).unwrap(), 1).is_empty());
    }
}
