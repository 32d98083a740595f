//! Test-only oracles, independent of the library's own algorithms.
#![allow(dead_code)]

/// Number of standard tableaux of shape `parts`, by the hook-length formula.
pub fn hook_dim(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    let factorial: u128 = (1..=n as u128).product();
    let conj: Vec<usize> =
        (0..parts.first().copied().unwrap_or(0)).map(|j| parts.iter().filter(|&&p| p > j).count()).collect();
    let hooks: u128 = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| {
            let conj = &conj;
            (0..row).map(move |j| ((row - j - 1) + (conj[j] - i - 1) + 1) as u128)
        })
        .product();
    factorial / hooks
}

/// Every way of removing `k` boxes one corner at a time, as a sorted multiset
/// of resulting shapes.
pub fn deletion_multiset(parts: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![parts.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if parts[i] > next {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.pop();
            }
            out.extend(deletion_multiset(&smaller, k - 1));
        }
    }
    out.sort();
    out
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Smallest prime strictly above `n`.
pub fn prime_above(n: u64) -> u64 {
    (n + 1..).find(|&p| is_prime(p)).unwrap()
}
