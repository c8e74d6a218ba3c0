//! The k-Grassmannian element `w_λ` of a typed k-strict partition, built
//! from the diagonals of the staircase boxes outside `λ`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, TypedPartition};

use super::SignedPermutation;

/// Whether `λ` fits the `(n+1−k) × (n+k)` rectangle.
pub fn fits(lambda: &TypedPartition, n: usize) -> bool {
    let k = lambda.k() as usize;
    k <= n && lambda.partition().len() + k <= n + 1 && lambda.partition().first() as usize <= n + k
}

/// The smallest `n` with `λ` in `P̃(k, n)`.
pub fn minimal_rank(lambda: &TypedPartition) -> usize {
    let k = lambda.k() as usize;
    let len = lambda.partition().len();
    let first = lambda.partition().first() as usize;
    k.max(1).max((len + k).saturating_sub(1)).max(first.saturating_sub(k))
}

/// Number of staircase boxes outside `λ` on diagonal `d` (row + column
/// offset past the first `k` columns).
fn diagonal_length(lambda1: &[u32], d: usize) -> u32 {
    (1..d).filter(|&r| (d - r) as u32 > lambda1.get(r - 1).copied().unwrap_or(0)).count() as u32
}

/// `w_λ ∈ W̃_{n+1}`.
pub fn grassmannian_element(lambda: &TypedPartition, n: usize) -> Result<SignedPermutation> {
    let k = lambda.k() as usize;
    if !fits(lambda, n) {
        return Err(Error::DoesNotFit {
            parts: lambda.parts().to_vec(),
            rows: (n + 1).saturating_sub(k) as u32,
            cols: (n + k) as u32,
        });
    }
    let parts = lambda.parts();
    let r = lambda.k_length();
    let lambda1: Vec<u32> = parts[..r].iter().map(|&p| p - k as u32).collect();
    let conj = lambda.partition().conjugate();
    let col = |c: usize| conj.parts().get(c - 1).copied().unwrap_or(0) as usize;

    // the diagonal k'-related to the bottom box of column c (row 0 if empty)
    let related: Vec<usize> = (1..=k).map(|c| k + 1 + col(c) - c).collect();
    let mut u: Vec<u32> =
        related.iter().map(|&d| if d < 2 { 0 } else { diagonal_length(&lambda1, d) }).collect();
    u.sort_unstable();
    let v: Vec<u32> = (2..=n + 1)
        .filter(|d| !related.contains(d))
        .map(|d| diagonal_length(&lambda1, d))
        .filter(|&len| len > 0)
        .collect();

    let barred = lambda1.iter().map(|&p| -(p as i32 + 1));
    let mut images: Vec<i32> = Vec::with_capacity(n + 1);
    match lambda.ty() {
        0 => {
            debug_assert_eq!(u[0], 0, "type 0 needs an empty related diagonal");
            images.push(1);
            images.extend(u[1..].iter().map(|&x| x as i32 + 1));
            images.extend(barred);
            images.extend(v.iter().map(|&x| x as i32 + 1));
        }
        ty => {
            images.extend(u.iter().map(|&x| x as i32 + 1));
            if ty == 2 {
                images[0] = -images[0];
            }
            images.extend(barred);
            images.push(1);
            images.extend(v.iter().map(|&x| x as i32 + 1));
        }
    }
    // the entry ±1 takes whichever sign makes the number of bars even
    if images.iter().filter(|&&x| x < 0).count() % 2 == 1 {
        let one = images.iter_mut().find(|x| x.abs() == 1).expect("1 is an image");
        *one = -*one;
    }
    let w = SignedPermutation::new(images)?;
    assert_eq!(w.length(), lambda.size(), "w_λ for {lambda} has the wrong length");
    assert!(w.is_k_grassmannian(k as u32), "w_λ for {lambda} is not {k}-Grassmannian");
    Ok(w)
}

/// `w_λ ↦ λ` over all typed k-strict partitions in the `(n+1−k) × (n+k)`
/// rectangle.
#[derive(Clone, Debug)]
pub struct GrassmannianTable {
    k: u32,
    n: usize,
    by_element: HashMap<SignedPermutation, TypedPartition>,
    partitions: Vec<TypedPartition>,
}

impl GrassmannianTable {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions sorted by size, then parts, then type.
    pub fn partitions(&self) -> &[TypedPartition] {
        &self.partitions
    }

    pub fn lookup(&self, w: &SignedPermutation) -> Option<&TypedPartition> {
        self.by_element.get(w)
    }

    pub fn element(&self, lambda: &TypedPartition) -> Result<SignedPermutation> {
        grassmannian_element(lambda, self.n)
    }
}

/// Builds the table for `P̃(k, n)`.
pub fn grassmannian_table(k: u32, n: usize) -> Result<GrassmannianTable> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let rows = (n + 1).saturating_sub(k as usize);
    let cols = (n + k as usize) as u32;
    let max_size = rows as u32 * k + (n * (n + 1) / 2) as u32;
    let mut partitions: Vec<TypedPartition> = (0..=max_size)
        .flat_map(|size| partitions_of(size, cols, rows))
        .filter(|p| p.is_k_strict(k))
        .flat_map(|p| TypedPartition::typings(&p, k))
        .collect();
    partitions.sort_by(|a, b| {
        a.size().cmp(&b.size()).then_with(|| a.parts().cmp(b.parts())).then(a.ty().cmp(&b.ty()))
    });
    let mut by_element = HashMap::new();
    for lambda in &partitions {
        let w = grassmannian_element(lambda, n)?;
        let previous = by_element.insert(w, lambda.clone());
        assert!(previous.is_none(), "two partitions share the element of {lambda}");
    }
    Ok(GrassmannianTable { k, n, by_element, partitions })
}

type TableCache = Mutex<HashMap<(u32, usize), Arc<GrassmannianTable>>>;

/// [`grassmannian_table`], built once per `(k, n)`.
pub fn cached_table(k: u32, n: usize) -> Result<Arc<GrassmannianTable>> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("table cache poisoned").get(&(k, n)) {
        return Ok(t.clone());
    }
    let table = Arc::new(grassmannian_table(k, n)?);
    cache.lock().expect("table cache poisoned").insert((k, n), table.clone());
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::all_elements;

    fn tp(parts: &[u32], k: u32, ty: u8) -> TypedPartition {
        TypedPartition::new(parts.to_vec(), k, ty).unwrap()
    }

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn golden_elements() {
        assert_eq!(grassmannian_element(&tp(&[8, 4, 3, 2], 3, 1), 7).unwrap(), w("3,5,7,-6,-2,1,4,8"));
        assert_eq!(grassmannian_element(&tp(&[7, 6, 5, 2], 2, 1), 5).unwrap(), w("2,3,-6,-5,-4,-1"));
        assert_eq!(grassmannian_element(&tp(&[7, 6, 5, 2], 2, 2), 5).unwrap(), w("-2,3,-6,-5,-4,1"));
        assert_eq!(grassmannian_element(&tp(&[4, 2, 1], 1, 1), 3).unwrap(), w("3,-4,-2,1"));
        assert_eq!(grassmannian_element(&tp(&[1], 2, 0), 2).unwrap(), w("1,3,2"));
        assert!(grassmannian_element(&TypedPartition::empty(2), 3).unwrap().is_identity());
    }

    #[test]
    fn element_is_stable_in_n() {
        let l = tp(&[4, 2, 1], 1, 1);
        for n in 3..7 {
            assert_eq!(grassmannian_element(&l, n).unwrap().trimmed(), w("3,-4,-2,1"));
        }
    }

    #[test]
    fn minimal_rank_is_minimal() {
        for k in 1..=3 {
            for l in TypedPartition::all_up_to(7, k) {
                let n = minimal_rank(&l);
                assert!(fits(&l, n), "{l}");
                assert!(n == 1 || !fits(&l, n - 1), "{l}");
            }
        }
    }

    #[test]
    fn too_large_shapes_are_rejected() {
        let r = grassmannian_element(&tp(&[8, 4, 3, 2], 3, 1), 5);
        assert!(matches!(r, Err(Error::DoesNotFit { .. })));
    }

    #[test]
    fn tables_biject_onto_grassmannian_elements() {
        for n in 2..=4usize {
            let all = all_elements(n);
            for k in 1..=n as u32 {
                let table = grassmannian_table(k, n).unwrap();
                let count = all.iter().filter(|x| x.is_k_grassmannian(k)).count();
                assert_eq!(table.partitions().len(), count, "k={k} n={n}");
            }
        }
    }
}
