//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the library's algorithms; only its polynomial and
//! partition containers are reused to hold results.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use eta_forge::{Partition, SparsePoly};

/// `w · s_i` on a signed permutation of `n + 1` entries.
pub fn right_simple(w: &[i32], i: u8) -> Vec<i32> {
    let mut v = w.to_vec();
    if i == 0 {
        let (a, b) = (v[0], v[1]);
        v[0] = -b;
        v[1] = -a;
    } else {
        v.swap(i as usize - 1, i as usize);
    }
    v
}

/// Word lengths of every element of `W̃_{n+1}`, by breadth-first search
/// from the identity.
pub fn bfs_lengths(n: usize) -> HashMap<Vec<i32>, u32> {
    let id: Vec<i32> = (1..=n as i32 + 1).collect();
    let mut dist = HashMap::from([(id.clone(), 0u32)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in 0..=n as u8 {
            let v = right_simple(&w, i);
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All reduced words of `w`, peeling off the last letter while the BFS
/// length drops.
pub fn reduced_words(w: &[i32], lengths: &HashMap<Vec<i32>, u32>, n: usize) -> Vec<Vec<u8>> {
    let len = lengths[w];
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..=n as u8 {
        let v = right_simple(w, i);
        if lengths[&v] + 1 == len {
            for mut word in reduced_words(&v, lengths, n) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out.sort();
    out
}

/// The product `s_{a_1} ⋯ s_{a_r}` as a list of images.
pub fn word_product(word: &[u8], n: usize) -> Vec<i32> {
    let mut w: Vec<i32> = (1..=n as i32 + 1).collect();
    for &a in word {
        w = right_simple(&w, a);
    }
    w
}

/// The letter sequence of `D(t) = (1+tu_n)⋯(1+tu_1)(1+tu_0)(1+tu_2)⋯(1+tu_n)`.
pub fn d_sequence(n: usize) -> Vec<u8> {
    let mut s: Vec<u8> = (1..=n as u8).rev().collect();
    s.push(0);
    s.extend(2..=n as u8);
    s
}

/// The letter sequence of `A_i(t) = (1+tu_n)⋯(1+tu_i)`.
pub fn a_sequence(i: usize, n: usize) -> Vec<u8> {
    (i as u8..=n as u8).rev().collect()
}

/// Number of ways to find `piece` as a subsequence of `seq`.
pub fn embeddings(piece: &[u8], seq: &[u8]) -> u64 {
    let mut ways = vec![0u64; piece.len() + 1];
    ways[0] = 1;
    for &s in seq {
        for j in (0..piece.len()).rev() {
            if piece[j] == s {
                ways[j + 1] += ways[j];
            }
        }
    }
    ways[piece.len()]
}

/// `Σ_a Σ_{a = a^1 ⋯ a^f} Π_j emb(a^j, S_j) t_j^{|a^j|}` over reduced words
/// `a` of `w`, for factor sequences `S_1..S_f` paired with exponent slots.
fn factored_count(words: &[Vec<u8>], factors: &[(Vec<u8>, usize)], nvars: usize) -> HashMap<Vec<u32>, i64> {
    fn go(
        word: &[u8],
        factors: &[(Vec<u8>, usize)],
        exps: &mut Vec<u32>,
        weight: u64,
        out: &mut HashMap<Vec<u32>, i64>,
    ) {
        let Some(((seq, slot), rest)) = factors.split_first() else {
            if word.is_empty() {
                *out.entry(exps.clone()).or_insert(0) += weight as i64;
            }
            return;
        };
        for cut in 0..=word.len().min(seq.len()) {
            let e = embeddings(&word[..cut], seq);
            if e == 0 {
                continue;
            }
            exps[*slot] += cut as u32;
            go(&word[cut..], rest, exps, weight * e, out);
            exps[*slot] -= cut as u32;
        }
    }
    let mut out = HashMap::new();
    for word in words {
        go(word, factors, &mut vec![0; nvars], 1, &mut out);
    }
    out.retain(|_, v| *v != 0);
    out
}

fn to_poly(m: usize, ky: usize, map: &HashMap<Vec<u32>, i64>) -> SparsePoly {
    let terms: Vec<(&[u32], i64)> = map.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
    SparsePoly::from_int_terms(m, ky, &terms)
}

/// `E_w(x_1..x_m)` from reduced words and factor embeddings.
pub fn stanley_e(w: &[i32], n: usize, m: usize, lengths: &HashMap<Vec<i32>, u32>) -> SparsePoly {
    let words = reduced_words(w, lengths, n);
    let factors: Vec<(Vec<u8>, usize)> = (0..m).map(|j| (d_sequence(n), j)).collect();
    to_poly(m, 0, &factored_count(&words, &factors, m))
}

/// `DS_w(x_1..x_m; y_1..y_n)` from reduced words and factor embeddings.
pub fn schubert_ds(w: &[i32], n: usize, m: usize, lengths: &HashMap<Vec<i32>, u32>) -> SparsePoly {
    let words = reduced_words(w, lengths, n);
    let mut factors: Vec<(Vec<u8>, usize)> = (0..m).map(|j| (d_sequence(n), j)).collect();
    factors.extend((1..=n).map(|i| (a_sequence(i, n), m + i - 1)));
    to_poly(m, n, &factored_count(&words, &factors, m + n))
}

/// `Q_λ(x_1..x_m)` summed over marked shifted tableaux. Letters are coded
/// `2i − 1` for `i'` and `2i` for `i`.
pub fn schur_q(lambda: &[u32], m: usize) -> SparsePoly {
    let cells: Vec<(usize, usize)> =
        lambda.iter().enumerate().flat_map(|(r, &len)| (r..r + len as usize).map(move |c| (r, c))).collect();
    let width = cells.iter().map(|&(_, c)| c + 1).max().unwrap_or(0);
    let mut grid = vec![vec![0u32; width]; lambda.len()];
    let mut out = HashMap::new();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        m: usize,
        out: &mut HashMap<Vec<u32>, i64>,
    ) {
        if idx == cells.len() {
            let mut exps = vec![0u32; m];
            for &(r, c) in cells {
                exps[(grid[r][c] as usize - 1) / 2] += 1;
            }
            *out.entry(exps).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=2 * m as u32 {
            let primed = v % 2 == 1;
            if c > r {
                let left = grid[r][c - 1];
                if left > v || (left == v && primed) {
                    continue;
                }
            }
            if r > 0 && c >= r {
                let up = grid[r - 1][c];
                if up > v || (up == v && !primed) {
                    continue;
                }
            }
            grid[r][c] = v;
            go(idx + 1, cells, grid, m, out);
        }
        grid[r][c] = 0;
    }
    go(0, &cells, &mut grid, m, &mut out);
    to_poly(m, 0, &out)
}

/// `P_λ = 2^{−ℓ(λ)} Q_λ`.
pub fn schur_p(lambda: &[u32], m: usize) -> SparsePoly {
    schur_q(lambda, m).scale_pow2(-(lambda.len() as i64))
}

/// `Σ c_ν P_ν(x_1..x_m)`.
pub fn p_combination<'a>(
    terms: impl IntoIterator<Item = (&'a Partition, &'a eta_forge::poly::Coeff)>,
    m: usize,
) -> SparsePoly {
    let mut out = SparsePoly::zero(m, 0);
    for (nu, c) in terms {
        out += &schur_p(nu.parts(), m).scale(c);
    }
    out
}

#[test]
fn oracle_self_checks() {
    // W̃_4 has 2^3 · 4! elements and longest length n(n+1) = 12.
    let lengths = bfs_lengths(3);
    assert_eq!(lengths.len(), 192);
    assert_eq!(lengths.values().max(), Some(&12));
    assert_eq!(embeddings(&[2, 1, 2], &d_sequence(3)), 1);
    assert_eq!(embeddings(&[2], &d_sequence(3)), 2);
    // Q_1 = 2 p_1 and Q_2 = 2 Σ x_i^2 + 4 Σ x_i x_j.
    let q1 = schur_q(&[1], 2);
    assert_eq!(q1, SparsePoly::from_int_terms(2, 0, &[(&[1, 0], 2), (&[0, 1], 2)]));
    let q2 = schur_q(&[2], 2);
    assert_eq!(q2, SparsePoly::from_int_terms(2, 0, &[(&[2, 0], 2), (&[1, 1], 4), (&[0, 2], 2)]));
}
