//! Brute-force distributions used as independent checks on the formulas.

use serde::Serialize;

use super::AnalysisError;
use crate::series::{MPoly, Poly};
use crate::words::{enumerate_k_quasi_stirling, enumerate_k_stirling, EnumerationBound, MultisetWord};

/// Largest `n` for which injections into `[n]` are enumerated.
pub const EXCEDANCE_ORACLE_MAX_N: usize = 10;

/// Every injection `[s] -> [n]` as its sequence of images.
fn injections(s: usize, n: usize, mut visit: impl FnMut(&[u32])) {
    fn go(s: usize, n: usize, seq: &mut Vec<u32>, used: &mut [bool], visit: &mut impl FnMut(&[u32])) {
        if seq.len() == s {
            visit(seq);
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                seq.push(v as u32);
                go(s, n, seq, used, visit);
                seq.pop();
                used[v] = false;
            }
        }
    }
    go(s, n, &mut Vec::new(), &mut vec![false; n + 1], &mut visit);
}

fn tally(counts: &mut Vec<u64>, d: usize) {
    if counts.len() <= d {
        counts.resize(d + 1, 0);
    }
    counts[d] += 1;
}

fn check(n: usize, r: usize) -> Result<(), AnalysisError> {
    if r == 0 || r > n {
        return Err(AnalysisError::InvalidParameters(format!("need 1 <= r <= n, got n={n}, r={r}")));
    }
    if n > EXCEDANCE_ORACLE_MAX_N {
        return Err(AnalysisError::TooLarge(format!("n = {n} exceeds {EXCEDANCE_ORACLE_MAX_N}")));
    }
    Ok(())
}

/// `sum t^exc(pi)` over injections `pi: [n - r] -> [n]`, where
/// `exc(pi) = #{i : pi_i > i}`.
pub fn excedance_oracle(n: usize, r: usize) -> Result<Poly, AnalysisError> {
    check(n, r)?;
    let mut counts = Vec::new();
    injections(n - r, n, |seq| {
        let exc = seq.iter().enumerate().filter(|(i, &v)| v as usize > i + 1).count();
        tally(&mut counts, exc);
    });
    Ok(Poly::from_ints(counts))
}

/// `sum t^exc_r(pi)` over `S_n`, where `exc_r(pi) = #{i : pi_i >= i + r}`.
pub fn r_excedance_oracle(n: usize, r: usize) -> Result<Poly, AnalysisError> {
    check(n, r)?;
    let mut counts = Vec::new();
    injections(n, n, |seq| {
        let exc = seq.iter().enumerate().filter(|(i, &v)| v as usize >= i + 1 + r).count();
        tally(&mut counts, exc);
    });
    Ok(Poly::from_ints(counts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Asc,
    Des,
    Plat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Generated from compartmented trees.
    QuasiStirling,
    /// Generated by block insertion.
    Stirling,
}

fn words(
    family: Family,
    n: usize,
    k: usize,
    bound: EnumerationBound,
) -> Result<Box<dyn Iterator<Item = MultisetWord>>, AnalysisError> {
    Ok(match family {
        Family::QuasiStirling => Box::new(enumerate_k_quasi_stirling(n, k, bound)?),
        Family::Stirling => Box::new(enumerate_k_stirling(n, k, bound)?),
    })
}

/// Distribution of one statistic over the family.
pub fn empirical_distribution(
    statistic: Statistic,
    family: Family,
    n: usize,
    k: usize,
    bound: EnumerationBound,
) -> Result<Poly, AnalysisError> {
    let mut counts = Vec::new();
    for w in words(family, n, k, bound)? {
        let s = w.statistics();
        let d = match statistic {
            Statistic::Asc => s.asc,
            Statistic::Des => s.des,
            Statistic::Plat => s.plat,
        };
        tally(&mut counts, d);
    }
    Ok(Poly::from_ints(counts))
}

/// Joint `(asc, des, plat)` distribution over the family.
pub fn empirical_joint(family: Family, n: usize, k: usize, bound: EnumerationBound) -> Result<MPoly, AnalysisError> {
    Ok(MPoly::from_counts(words(family, n, k, bound)?.map(|w| (w.statistics().exponent(), 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::numbers::{binomial, factorial};
    use crate::series::{a_excedance_poly, j_poly, k_quasi_poly, rat};

    #[test]
    fn excedance_examples() {
        assert_eq!(excedance_oracle(4, 3).unwrap(), Poly::from_ints([1, 3]));
        assert_eq!(excedance_oracle(5, 5).unwrap(), Poly::one());
        assert_eq!(excedance_oracle(6, 3).unwrap().evaluate(&rat(1)), rat(120));
        assert_eq!(excedance_oracle(6, 3).unwrap(), j_poly(6, 3).unwrap());
        assert!(excedance_oracle(3, 4).is_err());
        assert!(excedance_oracle(11, 1).is_err());
    }

    #[test]
    fn r_excedance_matches_reversal() {
        for n in 1..=6 {
            for r in 1..=n {
                assert_eq!(r_excedance_oracle(n, r).unwrap(), a_excedance_poly(n, r).unwrap(), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn empirical_examples() {
        let b = EnumerationBound::default();
        let des3 = empirical_distribution(Statistic::Des, Family::QuasiStirling, 3, 2, b).unwrap();
        assert_eq!(des3, Poly::from_ints([0, 1, 13, 16]));
        let joint = empirical_joint(Family::QuasiStirling, 2, 3, b).unwrap();
        assert_eq!(joint, k_quasi_poly(2, 3).unwrap());
        let plat4 = empirical_distribution(Statistic::Plat, Family::QuasiStirling, 4, 2, b).unwrap();
        let expected = factorial(3) * binomial(4, 2) * binomial(4, 1);
        assert_eq!(plat4.coefficient(2), rat(expected));
        assert_eq!(plat4.coefficient(2), rat(144));
        let stirling = empirical_distribution(Statistic::Des, Family::Stirling, 3, 2, b).unwrap();
        assert_eq!(stirling.evaluate(&rat(1)), rat(15));
    }
}
