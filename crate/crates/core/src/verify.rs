//! Verification suites: each one sweeps a family of inputs and checks an
//! identity between two independently computed sides.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::eta::{
    assemble_reduction, eta_hat_in, eta_in, eta_tilde_in, eta_via_star_in, eta_zero_case, mirror_left,
    pieri_left, pieri_product, reduce_first_variable, reduce_first_variable_untyped, theta_hat_in,
};
use crate::partition::{k_strict_partitions, Partition, TypedPartition};
use crate::pieri::{pieri_steps, untyped_strip_stats};
use crate::poly::{SparsePoly, Truncation};
use crate::symfunc::{expand_in_schur_p, integral_coefficients, schur_s_conjugate};
use crate::tableaux::{e_skew_in, enumerate_standard, eta_via_tableaux_in, j_involution};
use crate::weyl::{
    all_elements, cached_table, d_product, iota, is_skew, schubert_ds, skew_element, stanley_e,
    tableau_to_word, word_to_tableau, NilCoxeterElement, SignedPermutation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Mirror,
    Pieri,
    TableauVsOperator,
    Reduction,
    Tseq,
    Stdcor,
    Coproduct,
    Positivity,
    Zerolem,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Mirror,
        Suite::Pieri,
        Suite::TableauVsOperator,
        Suite::Reduction,
        Suite::Tseq,
        Suite::Stdcor,
        Suite::Coproduct,
        Suite::Positivity,
        Suite::Zerolem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Mirror => "mirror",
            Suite::Pieri => "pieri",
            Suite::TableauVsOperator => "tableau-vs-operator",
            Suite::Reduction => "reduction",
            Suite::Tseq => "tseq",
            Suite::Stdcor => "stdcor",
            Suite::Coproduct => "coproduct",
            Suite::Positivity => "positivity",
            Suite::Zerolem => "zerolem",
        }
    }

    /// The sweep bounds each suite runs with unless overridden.
    pub fn default_config(self) -> VerifyConfig {
        let base = VerifyConfig::default();
        match self {
            Suite::Mirror => VerifyConfig { max_size: 6, max_k: 2, m: 3, ..base },
            Suite::Pieri => VerifyConfig { max_size: 6, max_k: 2, max_p: 3, m: 4, ..base },
            Suite::TableauVsOperator => VerifyConfig { max_size: 7, max_k: 3, m: 3, ..base },
            Suite::Reduction => VerifyConfig { max_size: 6, max_k: 2, m: 3, ..base },
            Suite::Tseq => VerifyConfig { max_size: 6, max_k: 2, m: 3, n: 4, ..base },
            Suite::Stdcor => VerifyConfig { max_size: 6, max_k: 3, n: 3, ..base },
            Suite::Coproduct => VerifyConfig { max_size: 5, max_k: 2, m: 3, n: 3, max_length: 5, ..base },
            Suite::Positivity => VerifyConfig { n: 3, max_length: 5, ..base },
            Suite::Zerolem => VerifyConfig { max_size: 7, max_k: 3, ..base },
        }
    }

    pub fn run(self, config: &VerifyConfig) -> Result<SuiteReport> {
        match self {
            Suite::Mirror => mirror(config),
            Suite::Pieri => pieri(config),
            Suite::TableauVsOperator => tableau_vs_operator(config),
            Suite::Reduction => reduction(config),
            Suite::Tseq => tseq(config),
            Suite::Stdcor => stdcor(config),
            Suite::Coproduct => coproduct(config),
            Suite::Positivity => positivity(config),
            Suite::Zerolem => zerolem(config),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse { what: "suite name", input: s.to_string() })
    }
}

/// Sweep bounds. `max_k` bounds `k` from above (all of `1..=max_k` run).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub max_size: u32,
    pub max_k: u32,
    pub m: usize,
    pub n: usize,
    pub max_p: u32,
    pub max_length: u32,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_size: 5, max_k: 2, m: 3, n: 3, max_p: 3, max_length: 5, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub case: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub cases: Vec<CaseOutcome>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.cases.iter().filter(|c| !c.ok)
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!(
            "{}: {} cases, {} failed: {}",
            self.suite,
            self.cases.len(),
            failed,
            if failed == 0 { "PASS" } else { "FAIL" }
        )
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            match &c.detail {
                None => writeln!(f, "{} {}", if c.ok { "ok" } else { "FAIL" }, c.case)?,
                Some(d) => writeln!(f, "{} {}: {}", if c.ok { "ok" } else { "FAIL" }, c.case, d)?,
            }
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        write!(f, "{}", self.summary())
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(left: &SparsePoly, right: &SparsePoly, what: &str) -> Check {
    ensure(left == right, || format!("{what}: {left} != {right}"))
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn outcome(case: String, check: Check) -> CaseOutcome {
    match check {
        Ok(()) => CaseOutcome { case, ok: true, detail: None },
        Err(d) => CaseOutcome { case, ok: false, detail: Some(d) },
    }
}

/// Runs `f` over `items`, concurrently when the `parallel` feature is on;
/// the output keeps the input order.
fn run_cases<T, F>(items: &[T], f: F) -> Vec<CaseOutcome>
where
    T: Sync,
    F: Fn(&T) -> CaseOutcome + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

fn k_strict_up_to(max_size: u32, k: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| k_strict_partitions(n, k)).collect()
}

fn report(suite: Suite, config: &VerifyConfig, cases: Vec<CaseOutcome>) -> SuiteReport {
    SuiteReport { suite, config: config.clone(), cases, notes: Vec::new() }
}

fn check_k(config: &VerifyConfig) -> Result<()> {
    if config.max_k == 0 {
        return Err(Error::ZeroK);
    }
    Ok(())
}

/// `Σ_α 2^{#α} R^λ ϑ_{λ−α} = Σ_{μ ⇝ λ} 2^{m(λ/μ)} Θ̂_μ`.
fn mirror(config: &VerifyConfig) -> Result<SuiteReport> {
    check_k(config)?;
    let items: Vec<(Partition, u32)> = (1..=config.max_k)
        .flat_map(|k| k_strict_up_to(config.max_size, k).into_iter().map(move |l| (l, k)))
        .collect();
    let m = config.m;
    let cases = run_cases(&items, |(lambda, k)| {
        let check = || -> Check {
            let ky = *k as usize;
            let left = lift(mirror_left(lambda, *k, m, ky))?;
            let mut right = SparsePoly::zero(m, ky);
            for mu in lambda.subpartitions().into_iter().filter(|mu| mu.is_k_strict(*k)) {
                if let Some((mstat, _)) = lift(untyped_strip_stats(lambda, &mu, *k))? {
                    right += &lift(theta_hat_in(&mu, *k, m, ky))?.scale_pow2(mstat as i64);
                }
            }
            same(&left, &right, "mirror sides differ")
        };
        outcome(format!("lambda={lambda} k={k}"), check())
    });
    Ok(report(Suite::Mirror, config, cases))
}

/// `ϑ_p · Θ̂_λ = Σ_{λ → μ} 2^{M(λ,μ)} Θ̂_μ`, with the raising-operator form of
/// the left side as a third computation.
fn pieri(config: &VerifyConfig) -> Result<SuiteReport> {
    check_k(config)?;
    let mut items = Vec::new();
    for k in 1..=config.max_k {
        for lambda in k_strict_up_to(config.max_size, k) {
            for p in 0..=config.max_p {
                items.push((lambda.clone(), k, p));
            }
        }
    }
    let m = config.m;
    let cases = run_cases(&items, |(lambda, k, p)| {
        let check = || -> Check {
            let ky = *k as usize;
            let product = lift(pieri_product(lambda, *k, *p, m, ky))?;
            let mut rule = SparsePoly::zero(m, ky);
            for step in pieri_steps(lambda, *p, *k) {
                rule += &lift(theta_hat_in(&step.target, *k, m, ky))?.scale_pow2(step.exponent as i64);
            }
            same(&product, &rule, "product vs Pieri sum")?;
            let operator = lift(pieri_left(lambda, *k, *p, m, ky))?;
            same(&product, &operator, "product vs raising-operator form")
        };
        outcome(format!("lambda={lambda} k={k} p={p}"), check())
    });
    Ok(report(Suite::Pieri, config, cases))
}

/// The bitableau formula, the typed raising-operator definition and the
/// star-action formula give the same eta polynomial.
fn tableau_vs_operator(config: &VerifyConfig) -> Result<SuiteReport> {
    check_k(config)?;
    let items: Vec<TypedPartition> =
        (1..=config.max_k).flat_map(|k| TypedPartition::all_up_to(config.max_size, k)).collect();
    let m = config.m;
    let cases = run_cases(&items, |lambda| {
        let check = || -> Check {
            let ky = lambda.k() as usize;
            let operator = lift(eta_in(lambda, m, ky))?;
            let star = lift(eta_via_star_in(lambda, m, ky))?;
            let tableaux = lift(eta_via_tableaux_in(lambda, m, ky))?;
            same(&operator, &star, "typed operator vs star action")?;
            same(&operator, &tableaux, "operator vs bitableaux")
        };
        outcome(format!("lambda={lambda}"), check())
    });
    Ok(report(Suite::TableauVsOperator, config, cases))
}

/// First-variable reductions of `Ĥ_λ`, `H̃_λ` and `H_λ`: the `m`-variable
/// polynomial against `m − 1`-variable ones.
fn reduction(config: &VerifyConfig) -> Result<SuiteReport> {
    check_k(config)?;
    if config.m < 2 {
        return Err(Error::InsufficientVariables { degree: 1, m: config.m });
    }
    let m = config.m;
    let mut cases = Vec::new();

    let untyped: Vec<(Partition, u32)> = (1..=config.max_k)
        .flat_map(|k| k_strict_up_to(config.max_size, k).into_iter().map(move |l| (l, k)))
        .collect();
    cases.extend(run_cases(&untyped, |(lambda, k)| {
        let check = || -> Check {
            let ky = *k as usize;
            let terms = lift(reduce_first_variable_untyped(lambda, *k, false))?;
            let rebuilt = lift(assemble_reduction(&terms, m, ky, |mu, mm| eta_hat_in(mu, *k, mm, ky)))?;
            same(&lift(eta_hat_in(lambda, *k, m, ky))?, &rebuilt, "hat reduction")?;
            if lambda.has_part(*k) {
                let terms = lift(reduce_first_variable_untyped(lambda, *k, true))?;
                let rebuilt = lift(assemble_reduction(&terms, m, ky, |mu, mm| eta_tilde_in(mu, *k, mm, ky)))?;
                same(&lift(eta_tilde_in(lambda, *k, m, ky))?, &rebuilt, "tilde reduction")?;
            }
            Ok(())
        };
        outcome(format!("untyped lambda={lambda} k={k}"), check())
    }));

    let typed: Vec<TypedPartition> =
        (1..=config.max_k).flat_map(|k| TypedPartition::all_up_to(config.max_size, k)).collect();
    cases.extend(run_cases(&typed, |lambda| {
        let check = || -> Check {
            let ky = lambda.k() as usize;
            let terms = lift(reduce_first_variable(lambda))?;
            let rebuilt = lift(assemble_reduction(&terms, m, ky, |mu, mm| eta_in(mu, mm, ky)))?;
            same(&lift(eta_in(lambda, m, ky))?, &rebuilt, "typed reduction")
        };
        outcome(format!("typed lambda={lambda}"), check())
    }));
    Ok(report(Suite::Reduction, config, cases))
}

/// `H_λ = DS_{w_λ}` for `λ ∈ P̃(k, n)`.
fn tseq(config: &VerifyConfig) -> Result<SuiteReport> {
    check_k(config)?;
    let n = config.n;
    let mut items = Vec::new();
    for k in 1..=config.max_k.min(n as u32) {
        let table = cached_table(k, n)?;
        items.extend(table.partitions().iter().filter(|l| l.size() <= config.max_size).cloned());
    }
    let trunc = Truncation::new(config.m);
    let cases = run_cases(&items, |lambda| {
        let check = || -> Check {
            let k = lambda.k() as usize;
            let w = lift(crate::weyl::grassmannian_element(lambda, n))?;
            let ds = lift(schubert_ds(&w, &trunc, n))?;
            let restricted = ds.restrict_y(k);
            same(&restricted.embed(trunc.m, n, 0), &ds, "y variables beyond y_k appear")?;
            same(&lift(eta_in(lambda, trunc.m, k))?, &restricted, "eta vs Schubert")
        };
        outcome(format!("lambda={lambda} n={n}"), check())
    });
    Ok(report(Suite::Tseq, config, cases))
}

/// Compatible pairs against standard tableaux and reduced words: the
/// equivalences of compatibility, non-vanishing `E_{λ/μ}` and existence of
/// standard tableaux; the word/tableau bijection in both directions; letter
/// weights against strip weights; and `ι` against `j`.
fn stdcor(config: &VerifyConfig) -> Result<SuiteReport> {
    check_k(config)?;
    let n = config.n;
    let mut items = Vec::new();
    for k in 1..=config.max_k.min(n as u32) {
        let table = cached_table(k, n)?;
        let shapes: Vec<&TypedPartition> =
            table.partitions().iter().filter(|l| l.size() <= config.max_size).collect();
        for lambda in &shapes {
            for mu in &shapes {
                if lambda.partition().contains(mu.partition()) {
                    items.push(((*lambda).clone(), (*mu).clone()));
                }
            }
        }
    }
    let cases = run_cases(&items, |(lambda, mu)| {
        let check = || -> Check {
            let d = (lambda.size() - mu.size()) as usize;
            let z = lift(skew_element(lambda, mu, n))?;
            let compatible = z.length() as usize == d;
            let standard = lift(enumerate_standard(lambda, mu))?;
            ensure(compatible == !standard.is_empty(), || {
                format!("compatible={compatible} but {} standard tableaux", standard.len())
            })?;
            let e = lift(e_skew_in(lambda, mu, d.max(1)))?;
            ensure(compatible == !e.is_zero(), || format!("compatible={compatible} but E = {e}"))?;
            if !compatible {
                return Ok(());
            }
            same(&lift(stanley_e(&z, &Truncation::new(d.max(1))))?, &e, "E_w vs E_{λ/μ}")?;
            let words = z.reduced_words();
            ensure(words.len() == standard.len(), || {
                format!("{} reduced words vs {} standard tableaux", words.len(), standard.len())
            })?;
            let mut from_words = Vec::with_capacity(words.len());
            for word in &words {
                let t = lift(word_to_tableau(word, lambda, mu))?;
                ensure(lift(tableau_to_word(&t))? == *word, || format!("roundtrip fails on {word:?}"))?;
                let letter_weights: Vec<u32> = word.iter().rev().map(|&a| u32::from(a >= 2)).collect();
                ensure(t.weights() == letter_weights.as_slice(), || {
                    format!("strip weights {:?} vs letters {word:?}", t.weights())
                })?;
                let t_iota = lift(word_to_tableau(&iota(word), &j_involution(lambda), &j_involution(mu)))?;
                ensure(t_iota == t.j(), || format!("iota and j disagree on {word:?}"))?;
                from_words.push(t);
            }
            from_words.sort();
            let mut standard = standard;
            standard.sort();
            ensure(from_words == standard, || "words and tableaux are different sets".to_string())
        };
        outcome(format!("lambda={lambda} mu={mu}"), check())
    });
    Ok(report(Suite::Stdcor, config, cases))
}

fn split_product(left: &SparsePoly, right: &SparsePoly, m: usize, ky: usize) -> SparsePoly {
    &left.embed(m, ky, 0) * &right.embed(m, ky, 1)
}

/// Coproduct identities under the split `x = (x_1)`, `x' = (x_2, …, x_m)`.
fn coproduct(config: &VerifyConfig) -> Result<SuiteReport> {
    check_k(config)?;
    if config.m < 2 {
        return Err(Error::InsufficientVariables { degree: 1, m: config.m });
    }
    let m = config.m;
    let mut cases = Vec::new();

    let typed: Vec<TypedPartition> =
        (1..=config.max_k).flat_map(|k| TypedPartition::all_up_to(config.max_size, k)).collect();
    cases.extend(run_cases(&typed, |lambda| {
        let check = || -> Check {
            let ky = lambda.k() as usize;
            let below: Vec<TypedPartition> = lambda
                .partition()
                .subpartitions()
                .into_iter()
                .filter(|p| p.is_k_strict(lambda.k()))
                .flat_map(|p| TypedPartition::typings(&p, lambda.k()))
                .collect();
            let mut master = SparsePoly::zero(m, ky);
            let mut schur = SparsePoly::zero(m, ky);
            let mut split_sum = SparsePoly::zero(m, 0);
            for mu in &below {
                let e1 = lift(e_skew_in(lambda, mu, 1))?;
                master += &split_product(&e1, &lift(eta_in(mu, m - 1, ky))?, m, ky);
                split_sum +=
                    &split_product(&e1, &lift(e_skew_in(mu, &TypedPartition::empty(mu.k()), m - 1))?, m, 0);
                // H_μ(0; y) is s_{μ'}(y) except for type 2, where it vanishes
                if mu.ty() != 2 {
                    let em = lift(e_skew_in(lambda, mu, m))?.embed(m, ky, 0);
                    schur += &(&em * &schur_s_conjugate(mu.partition(), ky).embed(m, ky, 0));
                }
            }
            let h = lift(eta_in(lambda, m, ky))?;
            same(&h, &master, "H_λ(x,x') split")?;
            same(&h, &schur, "H_λ via E_{λ/μ} s_{μ'}")?;
            let empty = TypedPartition::empty(lambda.k());
            same(&lift(e_skew_in(lambda, &empty, m))?, &split_sum, "E_λ(x,x') split")?;
            for mu in &below {
                let mut eee = SparsePoly::zero(m, 0);
                for nu in below.iter().filter(|nu| nu.partition().contains(mu.partition())) {
                    let a = lift(e_skew_in(lambda, nu, 1))?;
                    let b = lift(e_skew_in(nu, mu, m - 1))?;
                    eee += &split_product(&a, &b, m, 0);
                }
                same(&lift(e_skew_in(lambda, mu, m))?, &eee, &format!("E_{{λ/μ}} split at mu={mu}"))?;
            }
            Ok(())
        };
        outcome(format!("lambda={lambda}"), check())
    }));

    let n = config.n;
    let elements: Vec<SignedPermutation> =
        all_elements(n).into_iter().filter(|w| w.length() <= config.max_length).collect();
    let whole = Truncation::new(m);
    let first = Truncation::new(1);
    let rest = Truncation::new(m - 1);
    cases.extend(run_cases(&elements, |w| {
        let check = || -> Check {
            let mut exx = SparsePoly::zero(m, 0);
            let mut best = SparsePoly::zero(m, n);
            for u in w.prefixes() {
                let v = u.inverse().mul(w);
                let eu = lift(stanley_e(&u, &first))?;
                exx += &split_product(&eu, &lift(stanley_e(&v, &rest))?, m, 0);
                best += &split_product(&eu, &lift(schubert_ds(&v, &rest, n))?, m, n);
            }
            same(&lift(stanley_e(w, &whole))?, &exx, "E_w(x,x') split")?;
            same(&lift(schubert_ds(w, &whole, n))?, &best, "DS_w(x,x';y) split")
        };
        outcome(format!("w={w}"), check())
    }));

    // D(s) D(t) = D(t) D(s), and u_w along two reduced words
    let d = lift(d_product(n, 2));
    cases.push(outcome(
        format!("D(x1) D(x2) symmetric n={n}"),
        d.and_then(|d| ensure(d.swap_x(1, 2) == d, || "D(x1) D(x2) != D(x2) D(x1)".to_string())),
    ));
    let mut rng = StdRng::seed_from_u64(config.seed);
    for _ in 0..8 {
        let w = elements.choose(&mut rng).expect("group is non-empty").clone();
        let words = w.reduced_words();
        let a = words.choose(&mut rng).expect("a reduced word").clone();
        let b = words.choose(&mut rng).expect("a reduced word").clone();
        let check = lift(NilCoxeterElement::from_word(&a, n)).and_then(|ea| {
            let eb = lift(NilCoxeterElement::from_word(&b, n))?;
            ensure(ea == eb && !ea.is_zero(), || format!("u along {a:?} and {b:?} differ"))
        });
        cases.push(outcome(format!("u_w well defined w={w} words {a:?} {b:?}"), check));
    }
    Ok(report(Suite::Coproduct, config, cases))
}

/// Schur P positivity of `E_w` for skew `w`, and `E_w = E_{λ/μ}` for the
/// first factorization `w_λ = w w_μ` found for each `k`.
fn positivity(config: &VerifyConfig) -> Result<SuiteReport> {
    let n = config.n;
    let elements: Vec<SignedPermutation> =
        all_elements(n).into_iter().filter(|w| w.length() <= config.max_length).collect();
    let skew: Vec<Option<bool>> = run_flags(&elements, n);
    let mut notes = Vec::new();
    let non_skew: Vec<&SignedPermutation> =
        elements.iter().zip(&skew).filter(|(_, s)| **s == Some(false)).map(|(w, _)| w).collect();
    notes.push(format!("{} of {} elements are not skew", non_skew.len(), elements.len()));
    if let Some(first) = all_elements(n).into_iter().find(|w| is_skew(w, n).ok().flatten().is_none()) {
        notes.push(format!("first non-skew element: {first} (length {})", first.length()));
    }
    let cases = run_cases(&elements, |w| {
        let check = || -> Check {
            let trunc = Truncation::new(w.length().max(1) as usize);
            let e = lift(stanley_e(w, &trunc))?;
            let mut found = false;
            for k in 1..=n as u32 {
                let Some(wit) = lift(first_witness(w, k, n))? else { continue };
                found = true;
                let skew_e = lift(e_skew_in(&wit.0, &wit.1, trunc.m))?;
                same(&e, &skew_e, &format!("E_w vs E_{{λ/μ}} for {} / {}", wit.0, wit.1))?;
            }
            if !found {
                return Ok(());
            }
            let expansion = lift(expand_in_schur_p(&e))?;
            let ints = integral_coefficients(&expansion)
                .ok_or_else(|| "non-integral Schur P coefficients".to_string())?;
            ensure(ints.values().all(|c| c.sign() != num_bigint::Sign::Minus), || {
                format!("negative Schur P coefficient in {ints:?}")
            })
        };
        outcome(format!("w={w}"), check())
    });
    let mut r = report(Suite::Positivity, config, cases);
    r.notes = notes;
    Ok(r)
}

fn run_flags(elements: &[SignedPermutation], n: usize) -> Vec<Option<bool>> {
    elements.iter().map(|w| is_skew(w, n).ok().map(|x| x.is_some())).collect()
}

fn first_witness(
    w: &SignedPermutation,
    k: u32,
    n: usize,
) -> Result<Option<(TypedPartition, TypedPartition)>> {
    let table = cached_table(k, n)?;
    for lambda in table.partitions().iter().filter(|l| l.size() >= w.length()) {
        let wl = table.element(lambda)?;
        if wl.has_prefix(w) {
            let mu = table.lookup(&w.inverse().mul(&wl)).expect("right factor is Grassmannian");
            return Ok(Some((lambda.clone(), mu.clone())));
        }
    }
    Ok(None)
}

/// `H_λ(0; y)` by cases against `H_λ` with its x-variables set to zero.
fn zerolem(config: &VerifyConfig) -> Result<SuiteReport> {
    check_k(config)?;
    let items: Vec<TypedPartition> =
        (1..=config.max_k).flat_map(|k| TypedPartition::all_up_to(config.max_size, k)).collect();
    let cases = run_cases(&items, |lambda| {
        let check = || -> Check {
            let ky = lambda.k() as usize;
            let direct = lift(eta_in(lambda, 1, ky))?.x_to_zero();
            same(&eta_zero_case(lambda, ky), &direct, "case formula vs x = 0")
        };
        outcome(format!("lambda={lambda}"), check())
    });
    Ok(report(Suite::Zerolem, config, cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let small = VerifyConfig { max_size: 3, max_k: 2, m: 2, n: 2, max_p: 1, max_length: 3, seed: 1 };
        for s in Suite::ALL {
            let r = s.run(&small).unwrap();
            assert!(r.passed(), "{r}");
            assert!(!r.cases.is_empty(), "{s}");
        }
    }
}
