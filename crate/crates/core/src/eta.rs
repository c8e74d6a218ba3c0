//! Theta and eta polynomials from raising operators.
//!
//! `Θ_λ = R̃^λ ϑ_λ`, `Θ̂_λ = R^λ ϑ_λ`, `Ĥ_λ = 2^{-ℓ_k(λ)} Θ̂_λ`,
//! `H̃_λ = 2^{-ℓ_k(λ)} e_k(y) Θ_{λ-k}`. The eta polynomial `H_λ` of a typed
//! partition is `Ĥ_λ`, `(Ĥ_λ + H̃_λ)/2` or `(Ĥ_λ - H̃_λ)/2` by type; the
//! star-action formula gives the same polynomial and is kept as an
//! independent route.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, TypedPartition};
use crate::pieri::{typed_strips_below, untyped_strip_stats};
use crate::poly::{SparsePoly, Truncation};
use crate::raising::{expand, expand_star, expand_sum, Composition, OperatorSpec};
use crate::symfunc::{
    apply_expansion, e_in, eta_in as eta_r_in, eta_prime_in, family_product, schur_s_conjugate, Family,
};

fn check_k_strict(lambda: &Partition, k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if let Some(w) = lambda.parts().windows(2).find(|w| w[0] == w[1] && w[0] > k) {
        return Err(Error::NotKStrict(lambda.parts().to_vec(), w[0], k));
    }
    Ok(())
}

fn check_ky(k: u32, ky: usize) -> Result<()> {
    if ky > k as usize {
        return Err(Error::TooManyYVariables { ky, k });
    }
    Ok(())
}

/// `Θ_λ` with `m` x-variables and `ky ≤ k` y-variables.
pub fn theta_in(lambda: &Partition, k: u32, m: usize, ky: usize) -> Result<SparsePoly> {
    check_k_strict(lambda, k)?;
    check_ky(k, ky)?;
    let e = expand(&OperatorSpec::theta(lambda, k), &Composition::from_parts(lambda.parts()))?;
    Ok(apply_expansion(&e, Family::Theta, m, ky))
}

pub fn theta(lambda: &Partition, k: u32, trunc: &Truncation, ky: usize) -> Result<SparsePoly> {
    theta_in(lambda, k, trunc.m, ky)
}

/// `Θ̂_λ = R^λ ϑ_λ`.
pub fn theta_hat_in(lambda: &Partition, k: u32, m: usize, ky: usize) -> Result<SparsePoly> {
    check_k_strict(lambda, k)?;
    check_ky(k, ky)?;
    let e = expand(&OperatorSpec::giambelli(lambda, k), &Composition::from_parts(lambda.parts()))?;
    Ok(apply_expansion(&e, Family::Theta, m, ky))
}

pub fn theta_hat(lambda: &Partition, k: u32, trunc: &Truncation, ky: usize) -> Result<SparsePoly> {
    theta_hat_in(lambda, k, trunc.m, ky)
}

/// `Ĥ_λ = 2^{-ℓ_k(λ)} Θ̂_λ`; may have half-integer coefficients.
pub fn eta_hat_in(lambda: &Partition, k: u32, m: usize, ky: usize) -> Result<SparsePoly> {
    Ok(theta_hat_in(lambda, k, m, ky)?.scale_pow2(-(lambda.k_length(k) as i64)))
}

pub fn eta_hat(lambda: &Partition, k: u32, trunc: &Truncation, ky: usize) -> Result<SparsePoly> {
    eta_hat_in(lambda, k, trunc.m, ky)
}

/// `H̃_λ = 2^{-ℓ_k(λ)} e_k(y) Θ_{λ-k}`, zero when no part equals `k`.
pub fn eta_tilde_in(lambda: &Partition, k: u32, m: usize, ky: usize) -> Result<SparsePoly> {
    check_k_strict(lambda, k)?;
    check_ky(k, ky)?;
    let Some(reduced) = lambda.remove_part(k) else {
        return Ok(SparsePoly::zero(m, ky));
    };
    let t = theta_in(&reduced, k, m, ky)?;
    Ok((&e_in(k as i64, m, ky) * &t).scale_pow2(-(lambda.k_length(k) as i64)))
}

pub fn eta_tilde(lambda: &Partition, k: u32, trunc: &Truncation, ky: usize) -> Result<SparsePoly> {
    eta_tilde_in(lambda, k, trunc.m, ky)
}

type EtaKey = (TypedPartition, usize, usize);

fn eta_cache() -> &'static Mutex<HashMap<EtaKey, SparsePoly>> {
    static CACHE: OnceLock<Mutex<HashMap<EtaKey, SparsePoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `H_λ` from `Ĥ_λ` and `H̃_λ`; coefficients are checked to be integers.
pub fn eta_in(lambda: &TypedPartition, m: usize, ky: usize) -> Result<SparsePoly> {
    let key = (lambda.clone(), m, ky);
    if let Some(p) = eta_cache().lock().expect("poisoned cache").get(&key) {
        return Ok(p.clone());
    }
    let k = lambda.k();
    let hat = eta_hat_in(lambda.partition(), k, m, ky)?;
    let out = match lambda.ty() {
        0 => hat,
        ty => {
            let tilde = eta_tilde_in(lambda.partition(), k, m, ky)?;
            let combined = if ty == 1 { &hat + &tilde } else { &hat - &tilde };
            combined.scale_pow2(-1)
        }
    }
    .into_integral("eta polynomial assembly")?;
    eta_cache().lock().expect("poisoned cache").insert(key, out.clone());
    Ok(out)
}

pub fn eta(lambda: &TypedPartition, trunc: &Truncation, ky: usize) -> Result<SparsePoly> {
    eta_in(lambda, trunc.m, ky)
}

/// `H_λ = 2^{-ℓ_k(λ)} R^λ ⋆ ϑ_λ`, term by term.
pub fn eta_via_star_in(lambda: &TypedPartition, m: usize, ky: usize) -> Result<SparsePoly> {
    let k = lambda.k();
    check_ky(k, ky)?;
    if !lambda.has_positive_type() {
        return eta_hat_in(lambda.partition(), k, m, ky)?.into_integral("eta polynomial assembly");
    }
    let split = expand_star(lambda)?;
    let factor = if lambda.ty() == 1 { eta_r_in(k as i64, k, m, ky) } else { eta_prime_in(k, m, ky) };
    let plain = &factor * &apply_expansion(&split.plain_part, Family::Theta, m, ky);
    let involved = apply_expansion(&split.m_involved_part, Family::Theta, m, ky).scale_pow2(-1);
    (&plain + &involved).scale_pow2(-(lambda.k_length() as i64)).into_integral("star-action eta assembly")
}

pub fn eta_via_star(lambda: &TypedPartition, trunc: &Truncation, ky: usize) -> Result<SparsePoly> {
    eta_via_star_in(lambda, trunc.m, ky)
}

/// Which polynomial an [`EtaRequest`] asks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EtaVariant {
    Theta,
    ThetaHat,
    EtaHat,
    EtaTilde,
    EtaViaTypes,
    EtaViaStar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaRequest {
    pub lambda: TypedPartition,
    pub trunc: Truncation,
    pub ky: usize,
    pub variant: EtaVariant,
}

pub fn compute(req: &EtaRequest) -> Result<SparsePoly> {
    let (p, k, m, ky) = (req.lambda.partition(), req.lambda.k(), req.trunc.m, req.ky);
    match req.variant {
        EtaVariant::Theta => theta_in(p, k, m, ky),
        EtaVariant::ThetaHat => theta_hat_in(p, k, m, ky),
        EtaVariant::EtaHat => eta_hat_in(p, k, m, ky),
        EtaVariant::EtaTilde => eta_tilde_in(p, k, m, ky),
        EtaVariant::EtaViaTypes => eta_in(&req.lambda, m, ky),
        EtaVariant::EtaViaStar => eta_via_star_in(&req.lambda, m, ky),
    }
}

/// The value of `H_λ(0; y)` by cases on `λ_1` and the type.
pub fn eta_zero_case(lambda: &TypedPartition, ky: usize) -> SparsePoly {
    let k = lambda.k();
    let first = lambda.partition().first();
    if first > k || (first == k && lambda.ty() == 2) {
        SparsePoly::zero(0, ky)
    } else {
        schur_s_conjugate(lambda.partition(), ky)
    }
}

/// [`eta_zero_case`], checked against `H_λ` with every `x_i = 0`.
pub fn eta_zero_spec(lambda: &TypedPartition, ky: usize) -> Result<SparsePoly> {
    let case = eta_zero_case(lambda, ky);
    let direct = eta_in(lambda, 1, ky)?.x_to_zero();
    assert_eq!(case, direct, "zero specialization of {lambda} disagrees with its case value");
    Ok(case)
}

/// One term `x_1^p 2^weight H_μ(x_2, ...)` of a first-variable reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTerm<P> {
    pub p: u32,
    pub mu: P,
    pub weight: u32,
}

/// The typed reduction data: all typed strips `λ/μ` with weights `n(λ/μ)`.
pub fn reduce_first_variable(lambda: &TypedPartition) -> Result<Vec<ReductionTerm<TypedPartition>>> {
    let mut out: Vec<_> = typed_strips_below(lambda)?
        .into_iter()
        .map(|(mu, n)| ReductionTerm { p: lambda.size() - mu.size(), mu, weight: n })
        .collect();
    out.sort_by(|a, b| a.p.cmp(&b.p).then_with(|| a.mu.cmp(&b.mu)));
    Ok(out)
}

/// Untyped reduction data with weights `n̂(λ/μ)`; `positive_only` keeps the
/// `μ` having a part equal to `k`.
pub fn reduce_first_variable_untyped(
    lambda: &Partition,
    k: u32,
    positive_only: bool,
) -> Result<Vec<ReductionTerm<Partition>>> {
    let mut out = Vec::new();
    for mu in lambda.subpartitions() {
        if !mu.is_k_strict(k) || (positive_only && !mu.has_part(k)) {
            continue;
        }
        if let Some((_, n_hat)) = untyped_strip_stats(lambda, &mu, k)? {
            let weight = u32::try_from(n_hat).expect("negative strip exponent");
            out.push(ReductionTerm { p: lambda.size() - mu.size(), mu, weight });
        }
    }
    Ok(out)
}

/// `Σ x_1^p 2^weight f(μ)` where `f` is evaluated in `m - 1` x-variables.
pub fn assemble_reduction<P>(
    terms: &[ReductionTerm<P>],
    m: usize,
    ky: usize,
    mut f: impl FnMut(&P, usize) -> Result<SparsePoly>,
) -> Result<SparsePoly> {
    assert!(m >= 1);
    let mut out = SparsePoly::zero(m, ky);
    for t in terms {
        let inner = f(&t.mu, m - 1)?.embed(m, ky, 1);
        let mut x1 = vec![0u32; m + ky];
        x1[0] = t.p;
        out += &inner.mul_monomial(&x1).scale_pow2(t.weight as i64);
    }
    Ok(out)
}

/// `Σ_α 2^{#α} W^{C(λ)}_{λ-α}` as a polynomial: the operator `R^λ` applied
/// to every lowering of `λ`, realized with `ϑ`.
pub fn mirror_left(lambda: &Partition, k: u32, m: usize, ky: usize) -> Result<SparsePoly> {
    let spec = OperatorSpec::giambelli(lambda, k);
    let starts: Vec<(Composition, BigInt)> = lowerings(lambda.parts())
        .into_iter()
        .map(|alpha| {
            let count = alpha.iter().filter(|&&a| a > 0).count() as u32;
            let start = lambda.parts().iter().zip(&alpha).map(|(&l, &a)| l as i64 - a as i64);
            (Composition::new(start.collect()), BigInt::from(1u8) << count)
        })
        .collect();
    Ok(apply_expansion(&expand_sum(&spec, &starts)?, Family::Theta, m, ky))
}

/// Compositions `α` of length `ℓ(λ)` with `|α| ≤ |λ|`; a term with
/// `|α| > |λ|` has negative degree and vanishes. Entries may exceed the
/// matching part of `λ`, since raising can lift a negative entry back up.
fn lowerings(parts: &[u32]) -> Vec<Vec<u32>> {
    let total: u32 = parts.iter().sum();
    (0..=total).flat_map(|s| compositions_of(s, parts.len())).collect()
}

/// `Σ_{ν ∈ N(λ,p)} W^{C(λ)}_ν`: the operator `R^λ_{ℓ+1}` on every `ν ≥ (λ, 0)`
/// with `|ν| = |λ| + p`.
pub fn pieri_left(lambda: &Partition, k: u32, p: u32, m: usize, ky: usize) -> Result<SparsePoly> {
    let l = lambda.len();
    let spec = OperatorSpec::truncated(lambda, k, l + 1);
    let starts: Vec<(Composition, BigInt)> = compositions_of(p, l + 1)
        .into_iter()
        .map(|extra| {
            let mut nu: Vec<i64> = lambda.parts().iter().map(|&v| v as i64).collect();
            nu.push(0);
            for (slot, e) in nu.iter_mut().zip(&extra) {
                *slot += *e as i64;
            }
            (Composition::new(nu), BigInt::from(1u8))
        })
        .collect();
    Ok(apply_expansion(&expand_sum(&spec, &starts)?, Family::Theta, m, ky))
}

fn compositions_of(total: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions_of(total - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `ϑ_p · Θ̂_λ`, the left side of the Pieri rule computed by multiplication.
pub fn pieri_product(lambda: &Partition, k: u32, p: u32, m: usize, ky: usize) -> Result<SparsePoly> {
    let w = family_product(Family::Theta, &Composition::new(vec![p as i64]), m, ky);
    Ok(&w * &theta_hat_in(lambda, k, m, ky)?)
}
