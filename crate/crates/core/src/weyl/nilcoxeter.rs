//! The nilCoxeter algebra of `W̃_{n+1}` with polynomial coefficients, and
//! the Stanley functions `E_w` and Schubert polynomials `DS_w` read off
//! from products of `D(t)` and `A_i(t)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{SparsePoly, Truncation};
use crate::raising::expansion_budget;

use super::SignedPermutation;

/// `Σ_w c_w u_w` with `u_v u_i = u_{v s_i}` when the length goes up and
/// `0` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilCoxeterElement {
    n: usize,
    m: usize,
    ky: usize,
    coeffs: BTreeMap<SignedPermutation, SparsePoly>,
}

/// Restricts products to the terms that can still reach `target`, and
/// counts work against a budget.
struct Guard<'a> {
    target: Option<&'a SignedPermutation>,
    budget: u64,
    spent: u64,
}

impl Guard<'_> {
    fn unlimited() -> Self {
        Guard { target: None, budget: u64::MAX, spent: 0 }
    }

    fn admits(&mut self, v: &SignedPermutation) -> Result<bool> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(self.target.is_none_or(|t| t.has_prefix(v)))
    }
}

impl NilCoxeterElement {
    pub fn zero(n: usize, m: usize, ky: usize) -> Self {
        NilCoxeterElement { n, m, ky, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize, m: usize, ky: usize) -> Self {
        let mut e = Self::zero(n, m, ky);
        e.coeffs.insert(SignedPermutation::identity(n), SparsePoly::one(m, ky));
        e
    }

    /// `u_{a_1} ⋯ u_{a_r}`; zero when the word is not reduced.
    pub fn from_word(word: &[u8], n: usize) -> Result<Self> {
        let mut e = Self::one(n, 0, 0);
        for &a in word {
            e = e.mul_generator(a)?;
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &SignedPermutation) -> SparsePoly {
        self.coeffs.get(w).cloned().unwrap_or_else(|| SparsePoly::zero(self.m, self.ky))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPermutation, &SparsePoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self · u_i`.
    pub fn mul_generator(&self, i: u8) -> Result<Self> {
        let mut out = Self::zero(self.n, self.m, self.ky);
        for (v, c) in &self.coeffs {
            let next = v.times_simple(i)?;
            if next.length() > v.length() {
                out.coeffs.insert(next, c.clone());
            }
        }
        Ok(out)
    }

    /// `self · (1 + t u_i)` where `t` is the variable with exponent index `var`.
    fn mul_factor(&mut self, i: u8, var: usize, guard: &mut Guard<'_>) -> Result<()> {
        let mut unit = vec![0; self.m + self.ky];
        unit[var] = 1;
        let mut added: Vec<(SignedPermutation, SparsePoly)> = Vec::new();
        for (v, c) in &self.coeffs {
            if v.is_right_descent(i) {
                continue;
            }
            let next = v.times_simple(i)?;
            if guard.admits(&next)? {
                added.push((next, c.mul_monomial(&unit)));
            }
        }
        for (w, c) in added {
            match self.coeffs.get_mut(&w) {
                Some(existing) => {
                    *existing += &c;
                    if existing.is_zero() {
                        self.coeffs.remove(&w);
                    }
                }
                None => {
                    self.coeffs.insert(w, c);
                }
            }
        }
        Ok(())
    }

    /// `self · D(t)`.
    fn mul_d(&mut self, var: usize, guard: &mut Guard<'_>) -> Result<()> {
        let n = self.n as u8;
        for i in (1..=n).rev() {
            self.mul_factor(i, var, guard)?;
        }
        for i in [0].into_iter().chain(2..=n) {
            self.mul_factor(i, var, guard)?;
        }
        Ok(())
    }

    /// `self · A_i(t)`.
    fn mul_a(&mut self, i: u8, var: usize, guard: &mut Guard<'_>) -> Result<()> {
        for j in (i..=self.n as u8).rev() {
            self.mul_factor(j, var, guard)?;
        }
        Ok(())
    }

    /// Swaps the roles of `x_i` and `x_j` in every coefficient.
    pub fn swap_x(&self, i: usize, j: usize) -> Self {
        let coeffs = self.coeffs.iter().map(|(w, c)| (w.clone(), c.swap_x(i, j))).collect();
        NilCoxeterElement { n: self.n, m: self.m, ky: self.ky, coeffs }
    }
}

/// The full product `D(x_1) ⋯ D(x_m)` in `W̃_{n+1}`.
pub fn d_product(n: usize, m: usize) -> Result<NilCoxeterElement> {
    let mut e = NilCoxeterElement::one(n, m, 0);
    let mut guard = Guard::unlimited();
    for var in 0..m {
        e.mul_d(var, &mut guard)?;
    }
    Ok(e)
}

/// `E_w(x_1..x_m)`, the coefficient of `u_w` in `D(x_1) ⋯ D(x_m)`.
pub fn stanley_e(w: &SignedPermutation, trunc: &Truncation) -> Result<SparsePoly> {
    stanley_e_with_budget(w, trunc, expansion_budget())
}

pub fn stanley_e_with_budget(w: &SignedPermutation, trunc: &Truncation, budget: u64) -> Result<SparsePoly> {
    let m = trunc.m;
    let mut e = NilCoxeterElement::one(w.n(), m, 0);
    let mut guard = Guard { target: Some(w), budget, spent: 0 };
    for var in 0..m {
        e.mul_d(var, &mut guard)?;
    }
    Ok(e.coeff(w))
}

/// `DS_w(x_1..x_m; y_1..y_n)`, the coefficient of `u_w` in
/// `D(x_1) ⋯ D(x_m) A_1(y_1) ⋯ A_n(y_n)` computed in `W̃_{n+1}`.
pub fn schubert_ds(w: &SignedPermutation, trunc: &Truncation, n: usize) -> Result<SparsePoly> {
    schubert_ds_with_budget(w, trunc, n, expansion_budget())
}

pub fn schubert_ds_with_budget(
    w: &SignedPermutation,
    trunc: &Truncation,
    n: usize,
    budget: u64,
) -> Result<SparsePoly> {
    if n < w.n() {
        return Err(Error::BadPermutation(w.images().to_vec()));
    }
    let w = w.embed(n);
    let m = trunc.m;
    let mut e = NilCoxeterElement::one(n, m, n);
    let mut guard = Guard { target: Some(&w), budget, spent: 0 };
    for var in 0..m {
        e.mul_d(var, &mut guard)?;
    }
    for i in 1..=n {
        e.mul_a(i as u8, m + i - 1, &mut guard)?;
    }
    Ok(e.coeff(&w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eta::eta_in;
    use crate::partition::TypedPartition;
    use crate::weyl::{all_elements, grassmannian_element};

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn single_generators() {
        let t = Truncation::new(1);
        let x1 = SparsePoly::x(1, 1, 0);
        for i in 0..=3u8 {
            let s = SignedPermutation::simple(i, 3).unwrap();
            let expected = if i <= 1 { x1.clone() } else { x1.scale_int(2) };
            assert_eq!(stanley_e(&s, &t).unwrap(), expected, "s_{i}");
        }
        let e = SignedPermutation::identity(3);
        assert_eq!(stanley_e(&e, &t).unwrap(), SparsePoly::one(1, 0));
    }

    #[test]
    fn d_commutes_with_itself() {
        for n in 1..=3 {
            let d = d_product(n, 2).unwrap();
            assert_eq!(d.swap_x(1, 2), d, "n={n}");
        }
    }

    #[test]
    fn pruned_products_match_the_full_product() {
        let full = d_product(3, 2).unwrap();
        let t = Truncation::new(2);
        for u in all_elements(3).iter().filter(|u| u.length() <= 4) {
            assert_eq!(stanley_e(u, &t).unwrap(), full.coeff(u), "{u}");
        }
    }

    #[test]
    fn generator_words_agree_with_basis_elements() {
        let u = w("3,-4,-2,1");
        for word in u.reduced_words() {
            let e = NilCoxeterElement::from_word(&word, 3).unwrap();
            let terms: Vec<_> = e.terms().collect();
            assert_eq!(terms.len(), 1);
            assert_eq!(terms[0].0, &u);
        }
        assert!(NilCoxeterElement::from_word(&[2, 2], 3).unwrap().is_zero());
        assert!(NilCoxeterElement::from_word(&[0, 2, 0, 2, 0, 2], 3).unwrap().is_zero());
    }

    #[test]
    fn schubert_matches_eta_for_three_one() {
        for ty in [1, 2] {
            let l = TypedPartition::new(vec![3, 1], 1, ty).unwrap();
            let wl = grassmannian_element(&l, 3).unwrap();
            let ds = schubert_ds(&wl, &Truncation::new(2), 3).unwrap();
            assert_eq!(ds.restrict_y(1).embed(2, 3, 0), ds, "only y_1 appears");
            assert_eq!(ds.restrict_y(1), eta_in(&l, 2, 1).unwrap(), "type {ty}");
        }
    }

    #[test]
    fn stability_under_embedding() {
        let u = w("2,-1,-3");
        let t = Truncation::new(2);
        assert_eq!(stanley_e(&u, &t).unwrap(), stanley_e(&u.embed(4), &t).unwrap());
        assert_eq!(schubert_ds(&u, &t, 2).unwrap().embed(2, 4, 0), schubert_ds(&u, &t, 4).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let u = w("3,-4,-2,1");
        let r = stanley_e_with_budget(&u, &Truncation::new(3), 5);
        assert_eq!(r, Err(Error::BudgetExceeded(5)));
    }
}
