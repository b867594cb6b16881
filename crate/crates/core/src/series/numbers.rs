//! Integer sequences used throughout: factorials, binomials, Catalan,
//! Narayana and Stirling numbers. All big-integer exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(2n-1)!!`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * (2 * i - 1))
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `C_{n,k} = binom(kn, n) / ((k-1)n + 1)`, the number of k-ary trees with
/// `n` internal vertices.
pub fn k_catalan(n: usize, k: usize) -> BigInt {
    binomial(k * n, n) / ((k.max(1) - 1) * n + 1)
}

/// Number of k-Stirling permutations: `prod_{i<n} (ik + 1)`.
pub fn k_stirling_count(n: usize, k: usize) -> BigInt {
    (0..n).fold(BigInt::one(), |acc, i| acc * (i * k + 1))
}

/// Narayana number `N(n,m) = binom(n,m) binom(n,m-1) / n` for `n >= 1`;
/// `N(0,0) = 1`.
pub fn narayana(n: usize, m: usize) -> BigInt {
    if n == 0 {
        return if m == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if m == 0 {
        return BigInt::zero();
    }
    binomial(n, m) * binomial(n, m - 1) / n
}

/// Stirling number of the second kind.
pub fn stirling2(n: usize, m: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::zero(); i + 1];
        for j in 1..=i {
            let carry = if j < row.len() { &row[j] * j } else { BigInt::zero() };
            next[j] = &row[j - 1] + carry;
        }
        row = next;
    }
    row.get(m).cloned().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(narayana(3, 2), 3.into());
        assert_eq!(stirling2(4, 2), 7.into());
        assert_eq!(stirling2(0, 0), 1.into());
        assert_eq!(stirling2(3, 0), 0.into());
        for n in 1..10 {
            assert_eq!(narayana(n, 1), 1.into());
        }
        assert_eq!(k_catalan(2, 3), 3.into());
        assert_eq!(k_catalan(4, 2), catalan(4));
        assert_eq!(double_factorial_odd(3), 15.into());
        assert_eq!(k_stirling_count(3, 2), 15.into());
        assert_eq!(binomial(5, 7), 0.into());
    }

    /// N(n, m) counts unlabeled plane trees with n edges and m leaves; the
    /// row sums are Catalan numbers.
    #[test]
    fn narayana_rows_sum_to_catalan() {
        for n in 1..12 {
            let s: BigInt = (1..=n).map(|m| narayana(n, m)).sum();
            assert_eq!(s, catalan(n));
        }
    }

    /// Direct count of set partitions by block count via restricted growth
    /// strings.
    #[test]
    fn stirling2_matches_partition_enumeration() {
        fn count(n: usize, m: usize) -> u64 {
            fn go(pos: usize, n: usize, max: usize, m: usize) -> u64 {
                if pos == n {
                    return (max == m) as u64;
                }
                (0..=max).map(|b| go(pos + 1, n, max.max(b + 1), m)).sum()
            }
            go(0, n, 0, m)
        }
        for n in 0..8 {
            for m in 0..=n {
                assert_eq!(stirling2(n, m), count(n, m).into(), "S({n},{m})");
            }
        }
    }
}
