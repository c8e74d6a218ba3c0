//! Classical families realized as exact polynomials: `q_r`, `e_r`, Schur
//! `Q`/`P`, Schur `s`, `ϑ_r`, `η_r`, `η'_k`, and expansion in the Schur `P`
//! basis.
//!
//! Products `c_α = c_{α_1} c_{α_2} ⋯` of a family are commutative, so they are
//! cached under the sorted composition.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{Coeff, SparsePoly, Truncation};
use crate::raising::{expand, Composition, OperatorExpansion, OperatorSpec};

/// A one-parameter family `r ↦ c_r` with `c_0 = 1` and `c_r = 0` for `r < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `q_r(x)`.
    Q,
    /// `ϑ_r(x; y)`.
    Theta,
    /// `η_r(x; y)` for the given `k`.
    Eta(u32),
}

type CacheKey = (Family, usize, usize, Vec<i64>);

fn cache() -> &'static Mutex<HashMap<CacheKey, SparsePoly>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, SparsePoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(key: CacheKey, compute: impl FnOnce() -> SparsePoly) -> SparsePoly {
    if let Some(p) = cache().lock().expect("poisoned cache").get(&key) {
        return p.clone();
    }
    let p = compute();
    cache().lock().expect("poisoned cache").insert(key, p.clone());
    p
}

/// `q_r` in `m` x-variables, inside the ring with `ky` y-variables.
pub fn q_in(r: i64, m: usize, ky: usize) -> SparsePoly {
    if r < 0 {
        return SparsePoly::zero(m, ky);
    }
    if r == 0 {
        return SparsePoly::one(m, ky);
    }
    cached((Family::Q, m, ky, vec![r]), || {
        // coefficient of x^a is 2^{#nonzero(a)}
        let mut out = SparsePoly::zero(m, ky);
        let mut exps = vec![0u32; m + ky];
        fill_q(&mut out, &mut exps, 0, m, r as u32, 0);
        out
    })
}

fn fill_q(out: &mut SparsePoly, exps: &mut Vec<u32>, i: usize, m: usize, left: u32, nz: u32) {
    if i + 1 == m {
        exps[i] = left;
        let nz = nz + u32::from(left > 0);
        out.add_term(exps.clone(), Coeff::from_integer(BigInt::one() << nz));
        exps[i] = 0;
        return;
    }
    if m == 0 {
        return;
    }
    for a in 0..=left {
        exps[i] = a;
        fill_q(out, exps, i + 1, m, left - a, nz + u32::from(a > 0));
    }
    exps[i] = 0;
}

/// `q_r(x_1..x_m)`: the coefficient of `t^r` in `∏ (1 + x_i t)/(1 - x_i t)`.
pub fn q_poly(r: i64, trunc: &Truncation) -> SparsePoly {
    q_in(r, trunc.m, 0)
}

/// `P_r = q_r / 2` for `r > 0`, with `P_0 = 1`.
pub fn p_single(r: i64, m: usize, ky: usize) -> SparsePoly {
    if r == 0 {
        SparsePoly::one(m, ky)
    } else {
        q_in(r, m, ky).scale_pow2(-1)
    }
}

/// Elementary symmetric polynomial `e_r(y_1..y_ky)`, in a ring with `m`
/// x-variables.
pub fn e_in(r: i64, m: usize, ky: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(m, ky);
    if r < 0 || r as usize > ky {
        return out;
    }
    let r = r as usize;
    for subset in subsets(ky, r) {
        let mut exps = vec![0u32; m + ky];
        for j in subset {
            exps[m + j] = 1;
        }
        out.add_term(exps, Coeff::one());
    }
    out
}

/// `e_r(y)` as a polynomial in `y` alone.
pub fn e_poly(r: i64, ky: usize) -> SparsePoly {
    e_in(r, 0, ky)
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// `ϑ_r = Σ_{i=0}^{r} q_{r-i}(x) e_i(y)`.
pub fn theta_in(r: i64, m: usize, ky: usize) -> SparsePoly {
    if r < 0 {
        return SparsePoly::zero(m, ky);
    }
    cached((Family::Theta, m, ky, vec![r]), || {
        let mut out = SparsePoly::zero(m, ky);
        for i in 0..=r.min(ky as i64) {
            out += &(&q_in(r - i, m, ky) * &e_in(i, m, ky));
        }
        out
    })
}

pub fn theta_r(r: i64, trunc: &Truncation, ky: usize) -> SparsePoly {
    theta_in(r, trunc.m, ky)
}

/// `η_r`: equal to `ϑ_r` for `r < k`, and `Σ_{i=0}^{r} P_{r-i} e_i` for `r ≥ k`.
pub fn eta_in(r: i64, k: u32, m: usize, ky: usize) -> SparsePoly {
    if r < 0 {
        return SparsePoly::zero(m, ky);
    }
    if r < k as i64 {
        return theta_in(r, m, ky);
    }
    cached((Family::Eta(k), m, ky, vec![r]), || {
        let mut out = SparsePoly::zero(m, ky);
        for i in 0..=r.min(ky as i64) {
            out += &(&p_single(r - i, m, ky) * &e_in(i, m, ky));
        }
        out
    })
}

pub fn eta_r(r: i64, k: u32, trunc: &Truncation, ky: usize) -> SparsePoly {
    eta_in(r, k, trunc.m, ky)
}

/// `η'_k = Σ_{i=0}^{k-1} P_{k-i} e_i`.
pub fn eta_prime_in(k: u32, m: usize, ky: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(m, ky);
    for i in 0..(k as i64).min(ky as i64 + 1) {
        out += &(&p_single(k as i64 - i, m, ky) * &e_in(i, m, ky));
    }
    out
}

pub fn eta_k_prime(k: u32, trunc: &Truncation, ky: usize) -> SparsePoly {
    eta_prime_in(k, trunc.m, ky)
}

fn single(family: Family, r: i64, m: usize, ky: usize) -> SparsePoly {
    match family {
        Family::Q => q_in(r, m, ky),
        Family::Theta => theta_in(r, m, ky),
        Family::Eta(k) => eta_in(r, k, m, ky),
    }
}

/// `c_α` for a composition `α` with non-negative entries.
pub fn family_product(family: Family, alpha: &Composition, m: usize, ky: usize) -> SparsePoly {
    let sorted = alpha.sorted();
    let parts = sorted.entries().to_vec();
    if parts.is_empty() {
        return SparsePoly::one(m, ky);
    }
    if parts.len() == 1 {
        return single(family, parts[0], m, ky);
    }
    cached((family, m, ky, parts.clone()), || {
        let rest = Composition::new(parts[1..].to_vec());
        &single(family, parts[0], m, ky) * &family_product(family, &rest, m, ky)
    })
}

/// `Σ_α c(α) · f_α` over an operator expansion.
pub fn apply_expansion(expansion: &OperatorExpansion, family: Family, m: usize, ky: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(m, ky);
    for (alpha, c) in expansion.terms() {
        let term = family_product(family, alpha, m, ky);
        out += &term.scale(&Coeff::from_integer(c.clone()));
    }
    out
}

fn check_strict(lambda: &Partition) -> Result<()> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.parts().to_vec()));
    }
    Ok(())
}

/// Schur `Q_λ = ∏_{i<j} (1 - R_ij)/(1 + R_ij) q_λ`.
pub fn schur_q(lambda: &Partition, trunc: &Truncation) -> Result<SparsePoly> {
    schur_q_in(lambda, trunc.m, 0)
}

pub fn schur_q_in(lambda: &Partition, m: usize, ky: usize) -> Result<SparsePoly> {
    check_strict(lambda)?;
    let spec = OperatorSpec::schur_q(lambda.len());
    let e = expand(&spec, &Composition::from_parts(lambda.parts()))?;
    Ok(apply_expansion(&e, Family::Q, m, ky))
}

/// Schur `P_λ = 2^{-ℓ(λ)} Q_λ`.
pub fn schur_p(lambda: &Partition, trunc: &Truncation) -> Result<SparsePoly> {
    schur_p_in(lambda, trunc.m, 0)
}

pub fn schur_p_in(lambda: &Partition, m: usize, ky: usize) -> Result<SparsePoly> {
    schur_q_in(lambda, m, ky)?.scale_pow2(-(lambda.len() as i64)).into_integral("Schur P normalization")
}

/// `s_{μ'}(y_1..y_ky)` summed over semistandard tableaux of shape `μ'`.
pub fn schur_s_conjugate(mu: &Partition, ky: usize) -> SparsePoly {
    schur_s_in(&mu.conjugate(), 0, ky, true)
}

/// `s_λ` over the y-variables (`in_y`) or the x-variables of a ring of shape
/// `(m, ky)`.
pub fn schur_s_in(lambda: &Partition, m: usize, ky: usize, in_y: bool) -> SparsePoly {
    let nvars = if in_y { ky } else { m };
    let offset = if in_y { m } else { 0 };
    let mut out = SparsePoly::zero(m, ky);
    let shape = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        nvars: usize,
        offset: usize,
        out: &mut SparsePoly,
        width: usize,
    ) {
        if idx == cells.len() {
            let mut exps = vec![0u32; width];
            for row in grid.iter() {
                for &v in row {
                    exps[offset + v as usize - 1] += 1;
                }
            }
            out.add_term(exps, Coeff::one());
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=nvars as u32 {
            grid[r][c] = v;
            go(idx + 1, cells, grid, nvars, offset, out, width);
        }
        grid[r][c] = 0;
    }
    go(0, &cells, &mut grid, nvars, offset, &mut out, m + ky);
    out
}

/// `det(q_{λ_i - μ_j + j - i})` over `ℓ(λ)` rows.
pub fn skew_q_determinant(lambda: &Partition, mu: &Partition, trunc: &Truncation) -> Result<SparsePoly> {
    skew_q_determinant_in(lambda, mu, trunc.m, 0)
}

pub fn skew_q_determinant_in(lambda: &Partition, mu: &Partition, m: usize, ky: usize) -> Result<SparsePoly> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained);
    }
    let n = lambda.len();
    let entry = |i: usize, j: usize| -> i64 {
        lambda.row(i as u32 + 1) as i64 - mu.row(j as u32 + 1) as i64 + j as i64 - i as i64
    };
    // mu.row(r) for r > ℓ(μ) is 0; row 0 is never requested here
    let mut memo: HashMap<(usize, u64), SparsePoly> = HashMap::new();
    fn minor(
        row: usize,
        used: u64,
        n: usize,
        entry: &dyn Fn(usize, usize) -> i64,
        m: usize,
        ky: usize,
        memo: &mut HashMap<(usize, u64), SparsePoly>,
    ) -> SparsePoly {
        if row == n {
            return SparsePoly::one(m, ky);
        }
        if let Some(p) = memo.get(&(row, used)) {
            return p.clone();
        }
        let mut out = SparsePoly::zero(m, ky);
        let mut sign = 1i64;
        for j in 0..n {
            if used & (1 << j) != 0 {
                continue;
            }
            let q = q_in(entry(row, j), m, ky);
            if !q.is_zero() {
                let rest = minor(row + 1, used | (1 << j), n, entry, m, ky, memo);
                out += &(&q * &rest).scale_int(sign);
            }
            sign = -sign;
        }
        memo.insert((row, used), out.clone());
        out
    }
    Ok(minor(0, 0, n, &entry, m, ky, &mut memo))
}

/// Writes `f` as `Σ c_λ P_λ` over strict partitions by repeatedly removing
/// the leading monomial.
pub fn expand_in_schur_p(f: &SparsePoly) -> Result<BTreeMap<Partition, Coeff>> {
    if !f.is_x_only() {
        return Err(Error::NotXOnly);
    }
    let m = f.m();
    let mut rest = f.restrict_y(0);
    if let Some(d) = rest.degree() {
        if d as usize > m {
            return Err(Error::InsufficientVariables { degree: d, m });
        }
    }
    if !rest.is_symmetric_in_x() {
        return Err(Error::NotSymmetric);
    }
    let mut out = BTreeMap::new();
    loop {
        let Some((exps, c)) = rest.terms().next().map(|(e, c)| (e.exponents().to_vec(), c.clone())) else {
            break;
        };
        if exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonZeroResidual);
        }
        let lambda = Partition::new(exps)?;
        if !lambda.is_strict() {
            return Err(Error::NonZeroResidual);
        }
        let p = schur_p_in(&lambda, m, 0)?;
        debug_assert_eq!(p.coeff(lambda_exps(&lambda, m).as_slice()), Coeff::one());
        rest = &rest - &p.scale(&c);
        out.insert(lambda, c);
    }
    if !rest.is_zero() {
        return Err(Error::NonZeroResidual);
    }
    Ok(out)
}

fn lambda_exps(lambda: &Partition, m: usize) -> Vec<u32> {
    let mut v = lambda.parts().to_vec();
    v.resize(m, 0);
    v
}

/// Coefficients of an expansion as integers, failing on fractions.
pub fn integral_coefficients(map: &BTreeMap<Partition, Coeff>) -> Option<BTreeMap<Partition, BigInt>> {
    map.iter().map(|(k, v)| v.is_integer().then(|| (k.clone(), v.to_integer()))).collect()
}

/// True if all coefficients are zero or positive.
pub fn is_nonnegative(map: &BTreeMap<Partition, Coeff>) -> bool {
    map.values().all(|v| *v >= Coeff::zero())
}
