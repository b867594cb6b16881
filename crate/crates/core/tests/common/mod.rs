//! Brute-force helpers shared by the integration tests. Nothing here calls
//! into the library, so they serve as independent oracles.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;

/// All arrangements of `{1^k, ..., n^k}` in lexicographic order.
pub fn multiset_permutations(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut w: Vec<u32> = (1..=n as u32).flat_map(|a| std::iter::repeat_n(a, k)).collect();
    let mut out = vec![w.clone()];
    loop {
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else { return out };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
        w.swap(i - 1, j);
        w[i..].reverse();
        out.push(w.clone());
    }
}

/// Some pair of letters appears as `abab`.
pub fn has_crossing(w: &[u32]) -> bool {
    let n = w.iter().copied().max().unwrap_or(0);
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            let mut want = [a, b, a, b].into_iter().peekable();
            for &x in w {
                if want.peek() == Some(&x) {
                    want.next();
                }
            }
            if want.peek().is_none() {
                return true;
            }
        }
    }
    false
}

/// Some letter lies between two copies of a larger one.
pub fn has_212(w: &[u32]) -> bool {
    (0..w.len()).any(|i| (i + 1..w.len()).any(|l| w[i] == w[l] && w[i + 1..l].iter().any(|&x| x < w[i])))
}

/// `(asc, des, plat)` with the word padded by zeros at both ends.
pub fn stats(w: &[u32]) -> (usize, usize, usize) {
    if w.is_empty() {
        return (0, 0, 0);
    }
    let mut padded = vec![0];
    padded.extend_from_slice(w);
    padded.push(0);
    let mut s = (0, 0, 0);
    for p in padded.windows(2) {
        match p[0].cmp(&p[1]) {
            std::cmp::Ordering::Less => s.0 += 1,
            std::cmp::Ordering::Greater => s.1 += 1,
            std::cmp::Ordering::Equal => s.2 += 1,
        }
    }
    s
}

pub fn quasi_stirling_words(n: usize, k: usize) -> Vec<Vec<u32>> {
    multiset_permutations(n, k).into_iter().filter(|w| !has_crossing(w)).collect()
}

pub fn stirling_words(n: usize, k: usize) -> Vec<Vec<u32>> {
    multiset_permutations(n, k).into_iter().filter(|w| !has_212(w)).collect()
}

/// Counts by descent number, indexed by `des`.
pub fn descent_counts(words: &[Vec<u32>]) -> Vec<u64> {
    let mut c = Vec::new();
    for w in words {
        let d = stats(w).1;
        if c.len() <= d {
            c.resize(d + 1, 0);
        }
        c[d] += 1;
    }
    c
}

/// Counts by `[asc, des, plat]`.
pub fn joint_counts(words: &[Vec<u32>]) -> BTreeMap<[usize; 3], u64> {
    let mut m = BTreeMap::new();
    for w in words {
        let (a, d, p) = stats(w);
        *m.entry([a, d, p]).or_insert(0) += 1;
    }
    m
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(r) * factorial(n - r))
}

/// `binom(kn, n) / ((k - 1) n + 1)`.
pub fn fuss_catalan(n: usize, k: usize) -> BigInt {
    binomial(k * n, n) / BigInt::from((k - 1) * n + 1)
}

pub fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// Mean and variance of a distribution given as counts by value.
pub fn mean_variance(counts: &[u64]) -> (BigRational, BigRational) {
    let total: BigInt = counts.iter().map(|&c| BigInt::from(c)).sum();
    let moment = |p: u32| -> BigRational {
        let s: BigInt = counts.iter().enumerate().map(|(i, &c)| BigInt::from(c) * BigInt::from(i).pow(p)).sum();
        BigRational::new(s, total.clone())
    };
    let mean = moment(1);
    let var = moment(2) - &mean * &mean;
    (mean, var)
}

/// `n` of an all-letters word, i.e. its largest letter.
pub fn letters(w: &[u32]) -> usize {
    w.iter().copied().max().unwrap_or(0) as usize
}
