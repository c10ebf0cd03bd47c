//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's own shuffle, counting or crystal code.

#![allow(dead_code)]

use std::collections::HashMap;

pub type Char = HashMap<Vec<u8>, u64>;

/// Every interleaving of `words`, with multiplicity, by direct recursion.
pub fn shuffle_all(words: &[Vec<u8>]) -> Char {
    let mut out = Char::new();
    let mut pos = vec![0; words.len()];
    let mut cur = Vec::new();
    fn go(words: &[Vec<u8>], pos: &mut [usize], cur: &mut Vec<u8>, out: &mut Char) {
        let mut done = true;
        for k in 0..words.len() {
            if pos[k] < words[k].len() {
                done = false;
                cur.push(words[k][pos[k]]);
                pos[k] += 1;
                go(words, pos, cur, out);
                pos[k] -= 1;
                cur.pop();
            }
        }
        if done {
            *out.entry(cur.clone()).or_default() += 1;
        }
    }
    go(words, &mut pos, &mut cur, &mut out);
    out
}

/// The number of ways `target` arises as an interleaving of `words`.
pub fn shuffle_count(words: &[Vec<u8>], target: &[u8]) -> u64 {
    fn go(words: &[Vec<u8>], pos: &mut [usize], target: &[u8], memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        let used: usize = pos.iter().sum();
        if used == target.len() {
            return 1;
        }
        if let Some(&v) = memo.get(pos) {
            return v;
        }
        let mut total = 0;
        for k in 0..words.len() {
            if pos[k] < words[k].len() && words[k][pos[k]] == target[used] {
                pos[k] += 1;
                total += go(words, pos, target, memo);
                pos[k] -= 1;
            }
        }
        memo.insert(pos.to_vec(), total);
        total
    }
    if words.iter().map(Vec::len).sum::<usize>() != target.len() {
        return 0;
    }
    go(words, &mut vec![0; words.len()], target, &mut HashMap::new())
}

/// Words of the segments `(start, len)`.
pub fn segment_words(segments: &[(usize, usize)]) -> Vec<Vec<u8>> {
    segments
        .iter()
        .map(|&(a, l)| (a..a + l).map(|x| x as u8).collect())
        .collect()
}

/// Serre relations at `q = 1`, checked on every word of the support and
/// every adjacent pair; returns the first offending word.
pub fn serre_violation(ch: &Char) -> Option<Vec<u8>> {
    let c = |w: &[u8]| ch.get(w).copied().unwrap_or(0) as i64;
    for w in ch.keys() {
        for p in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[p], w[p + 1]);
            let mut swapped = w.clone();
            swapped.swap(p, p + 1);
            if a.abs_diff(b) > 1 && c(w) != c(&swapped) {
                return Some(w.clone());
            }
        }
        for p in 0..w.len().saturating_sub(2) {
            let (x, y, z) = (w[p], w[p + 1], w[p + 2]);
            // Every window of the shape iij, iji or jii with |i − j| = 1.
            let (i, j) = if x == y { (x, z) } else if y == z { (y, x) } else if x == z { (x, y) } else { continue };
            if i.abs_diff(j) != 1 {
                continue;
            }
            let with = |t: [u8; 3]| {
                let mut v = w.clone();
                v[p..p + 3].copy_from_slice(&t);
                c(&v)
            };
            if with([i, i, j]) + with([j, i, i]) != 2 * with([i, j, i]) {
                return Some(w.clone());
            }
        }
    }
    None
}

/// Semistandard tableaux of shape `shape` with entries `≤ m`, counted by
/// peeling off the horizontal strip of largest entries.
pub fn count_ssyt_strips(shape: &[usize], m: usize) -> u64 {
    let shape: Vec<usize> = shape.iter().copied().filter(|&p| p > 0).collect();
    if shape.is_empty() {
        return 1;
    }
    if m == 0 || shape.len() > m {
        return 0;
    }
    // μ ⊆ λ with λ/μ a horizontal strip: λ_{i+1} ≤ μ_i ≤ λ_i.
    let mut total = 0;
    let mut mu = vec![0; shape.len()];
    fn go(shape: &[usize], i: usize, mu: &mut Vec<usize>, m: usize, total: &mut u64) {
        if i == shape.len() {
            *total += count_ssyt_strips(mu, m - 1);
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for v in lo..=shape[i] {
            mu[i] = v;
            go(shape, i + 1, mu, m, total);
        }
    }
    go(&shape, 0, &mut mu, m, &mut total);
    total
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Partitions of `size` as plain vectors.
pub fn partitions_of(size: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(p: &[usize]) -> Vec<usize> {
    (1..=p.first().copied().unwrap_or(0))
        .map(|c| p.iter().filter(|&&x| x >= c).count())
        .collect()
}
