mod oracle;

use eta_forge::eta::eta_in;
use eta_forge::partition::k_strict_partitions;
use eta_forge::symfunc::schur_q_in;
use eta_forge::tableaux::{enumerate_standard, eta_via_tableaux_in};
use eta_forge::weyl::{
    all_elements, cached_table, grassmannian_element, minimal_rank, stanley_e, word_to_tableau,
};
use eta_forge::{Partition, SparsePoly, Truncation, TypedPartition};
use proptest::prelude::*;

#[test]
fn lengths_match_breadth_first_search() {
    for n in 1..=4 {
        let lengths = oracle::bfs_lengths(n);
        let elements = all_elements(n);
        assert_eq!(elements.len(), lengths.len());
        for w in &elements {
            assert_eq!(w.length(), lengths[w.images()], "{w}");
        }
    }
}

#[test]
fn reduced_word_counts_match_brute_force() {
    let lengths = oracle::bfs_lengths(3);
    for w in all_elements(3) {
        let brute = oracle::reduced_words(w.images(), &lengths, 3);
        assert_eq!(w.reduced_words(), brute, "{w}");
        assert_eq!(w.reduced_word_count(), brute.len() as u128, "{w}");
    }
}

#[test]
fn schur_q_matches_shifted_tableaux() {
    for size in 0..=6 {
        for lam in k_strict_partitions(size, 0) {
            let got = schur_q_in(&lam, 3, 0).unwrap();
            assert_eq!(got, oracle::schur_q(lam.parts(), 3), "{lam:?}");
        }
    }
}

#[test]
fn stanley_functions_match_factor_embeddings() {
    let lengths = oracle::bfs_lengths(3);
    let t = Truncation::new(2);
    for w in all_elements(3).iter().filter(|w| w.length() <= 6) {
        assert_eq!(stanley_e(w, &t).unwrap(), oracle::stanley_e(w.images(), 3, 2, &lengths), "{w}");
    }
}

fn typed_strategy() -> impl Strategy<Value = TypedPartition> {
    (1u32..=3, 0u32..=6, any::<prop::sample::Index>()).prop_filter_map(
        "no typed partitions",
        |(k, size, idx)| {
            let all = TypedPartition::all_of_size(size, k);
            (!all.is_empty()).then(|| all[idx.index(all.len())].clone())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tableau_formula_agrees_with_operators(lam in typed_strategy(), m in 1usize..=3) {
        let ky = lam.k() as usize;
        prop_assert_eq!(eta_via_tableaux_in(&lam, m, ky).unwrap(), eta_in(&lam, m, ky).unwrap());
    }

    #[test]
    fn grassmannian_elements_have_the_right_length(lam in typed_strategy()) {
        let n = minimal_rank(&lam);
        let w = grassmannian_element(&lam, n).unwrap();
        prop_assert_eq!(w.length(), lam.size());
        prop_assert!(w.is_k_grassmannian(lam.k()));
        let table = cached_table(lam.k(), n).unwrap();
        prop_assert_eq!(table.lookup(&w), Some(&lam));
    }

    #[test]
    fn reduced_words_give_standard_tableaux(lam in typed_strategy(), pick in any::<prop::sample::Index>()) {
        let n = minimal_rank(&lam);
        let w = grassmannian_element(&lam, n).unwrap();
        let words = w.reduced_words();
        let word = &words[pick.index(words.len())];
        let empty = TypedPartition::empty(lam.k());
        let t = word_to_tableau(word, &lam, &empty).unwrap();
        prop_assert!(enumerate_standard(&lam, &empty).unwrap().contains(&t));
    }

    #[test]
    fn polynomial_json_roundtrips(terms in prop::collection::vec((0u32..4, 0u32..4, 0u32..3, -9i64..10), 0..8)) {
        let terms: Vec<(Vec<u32>, i64)> = terms.into_iter().map(|(a, b, c, v)| (vec![a, b, c], v)).collect();
        let refs: Vec<(&[u32], i64)> = terms.iter().map(|(e, v)| (e.as_slice(), *v)).collect();
        let p = SparsePoly::from_int_terms(2, 1, &refs);
        let json = serde_json::to_string(&p.to_json()).unwrap();
        let back = SparsePoly::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn subpartitions_are_contained(parts in prop::collection::vec(0u32..5, 0..4)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        for mu in lam.subpartitions() {
            prop_assert!(lam.contains(&mu));
        }
    }
}
