//! Counting helpers and deterministic k-subset enumeration.

use num::{BigInt, One};

/// Binomial coefficient C(n, k) in u128, saturating on overflow. The
/// saturation only matters for budget comparisons, which treat any
/// overflowing count as "too many".
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = (n - i) as u128;
        acc = match acc.checked_mul(num) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of monomials of degree `t` in three variables: C(t+2, 2).
pub fn monomial_count(t: u32) -> usize {
    let t = t as usize;
    (t + 1) * (t + 2) / 2
}

/// Exact multinomial coefficient d!/(a! b! c!) for a+b+c = d.
pub fn multinomial(a: u32, b: u32, c: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut parts = [a, b, c];
    parts.sort_unstable();
    // d!/(a! b! c!) = C(a+b, b) * C(a+b+c, c); each incremental step divides
    // exactly because every prefix product is itself a binomial multiple.
    let mut n = parts[0];
    for &part in &parts[1..] {
        for i in 1..=part {
            acc = acc * BigInt::from(n + i) / BigInt::from(i);
        }
        n += part;
    }
    acc
}

/// The lexicographically `rank`-th k-subset of {0, .., n-1} (combinadic
/// unranking). `rank` must be < C(n, k).
pub fn unrank_subset(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    debug_assert!(rank < binomial(n, k));
    let mut out = Vec::with_capacity(k);
    let mut x = 0usize;
    let mut remaining = k;
    while remaining > 0 {
        let with_x = binomial(n - 1 - x, remaining - 1);
        if rank < with_x {
            out.push(x);
            remaining -= 1;
        } else {
            rank -= with_x;
        }
        x += 1;
    }
    out
}

/// Advances `subset` to its lexicographic successor among k-subsets of
/// {0, .., n-1}; returns false when `subset` was the last one.
pub fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Iterator over all k-subsets of {0, .., n-1} in lexicographic order,
/// optionally starting at a given rank.
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> KSubsets {
        let current = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        KSubsets { n, current }
    }

    pub fn starting_at(n: usize, k: usize, rank: u128) -> KSubsets {
        let current = if k <= n && rank < binomial(n, k) {
            Some(unrank_subset(n, k, rank))
        } else {
            None
        };
        KSubsets { n, current }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        if !next_subset(cur, self.n) {
            self.current = None;
        }
        Some(out)
    }
}
