//! Brute-force oracles. Nothing here calls into the library's combinatorics.
#![allow(dead_code)]

/// Partitions of `r` found by filtering all `2^{r-1}` compositions for the
/// non-increasing ones. Parts returned non-increasing.
pub fn brute_partitions(r: u32) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << (r - 1)) {
        // bit i set: cut between position i and i + 1
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..r - 1 {
            if mask & (1 << i) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            out.push(parts);
        }
    }
    out
}

pub fn brute_partition_count(r: u32) -> u64 {
    brute_partitions(r).len() as u64
}

/// All permutations of `0..r` by Heap's algorithm.
pub fn all_permutations(r: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            if k.is_multiple_of(2) {
                current.swap(i, k - 1);
            } else {
                current.swap(0, k - 1);
            }
        }
    }
    let mut out = Vec::new();
    heap(r, &mut (0..r).collect(), &mut out);
    out
}

/// The permutation `(0 … t_1-1)(t_1 … t_1+t_2-1)…` with the given cycle lengths.
pub fn permutation_with_cycle_type(parts: &[u32]) -> Vec<usize> {
    let r: u32 = parts.iter().sum();
    let mut perm: Vec<usize> = (0..r as usize).collect();
    let mut start = 0usize;
    for &t in parts {
        let t = t as usize;
        for i in 0..t {
            perm[start + i] = start + (i + 1) % t;
        }
        start += t;
    }
    perm
}

pub fn cycle_type(perm: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// Size of the centralizer of a permutation of the given cycle type, by
/// testing every element of `S_r`.
pub fn brute_centralizer_order(parts: &[u32]) -> u128 {
    let gamma = permutation_with_cycle_type(parts);
    let r = gamma.len();
    all_permutations(r)
        .iter()
        .filter(|g| compose(g, &gamma) == compose(&gamma, g))
        .count() as u128
}

/// Number of permutations of `S_r` with the given cycle type.
pub fn brute_class_size(parts: &[u32]) -> u128 {
    let r: u32 = parts.iter().sum();
    let mut target = parts.to_vec();
    target.sort_unstable_by(|a, b| b.cmp(a));
    all_permutations(r as usize)
        .iter()
        .filter(|p| cycle_type(p) == target)
        .count() as u128
}

pub fn distinct_count(parts: &[u32]) -> u32 {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() as u32
}

/// `Σ_{λ ⊢ r} 2^{k(λ) - 1}` with `k(λ)` the number of distinct parts.
pub fn brute_single_label_hp(r: u32) -> u64 {
    brute_partitions(r)
        .iter()
        .map(|p| 1u64 << (distinct_count(p) - 1))
        .sum()
}

pub fn binomial_row(k: u32) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..k {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}
