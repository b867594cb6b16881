//! Mean, variance and mode of the distribution encoded by a counting
//! polynomial, and the closed forms they are checked against.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use super::AnalysisError;
use crate::series::numbers::{binomial, factorial};
use crate::series::{quasi_stirling_poly, rat, Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    #[serde(serialize_with = "super::serialize_bigint")]
    pub population: BigInt,
    #[serde(serialize_with = "super::serialize_rat")]
    pub mean: Rat,
    #[serde(serialize_with = "super::serialize_rat")]
    pub variance: Rat,
    pub mode_indices: Vec<usize>,
}

pub fn moment_report(p: &Poly) -> Result<MomentReport, AnalysisError> {
    let one = Rat::one();
    let total = p.evaluate(&one);
    if total.is_zero() {
        return Err(AnalysisError::EmptyDistribution(p.to_string()));
    }
    let d1 = p.derivative().evaluate(&one);
    let d2 = p.derivative().derivative().evaluate(&one);
    let mean = &d1 / &total;
    let variance = (&d1 + &d2) / &total - &mean * &mean;
    let max = p.coeffs().iter().max().cloned().unwrap_or_else(Rat::zero);
    let mode_indices = p.coeffs().iter().enumerate().filter(|(_, c)| **c == max).map(|(i, _)| i).collect();
    Ok(MomentReport { population: total.to_integer(), mean, variance, mode_indices })
}

/// Every coefficient maximizer lies within distance 1 of `target`.
pub fn check_darroch(p: &Poly, target: &Rat) -> Result<bool, AnalysisError> {
    let report = moment_report(p)?;
    Ok(report.mode_indices.iter().all(|&m| (rat(m) - target).abs() < Rat::one()))
}

/// `(3n + 1) / 4`.
pub fn descent_mean(n: usize) -> Rat {
    Rat::new((3 * n + 1).into(), 4.into())
}

/// `(11n^2 - 6n - 5) / (48 (2n - 1))` for `n >= 1`.
pub fn descent_variance(n: usize) -> Rat {
    let n = rat(n);
    (rat(11) * &n * &n - rat(6) * &n - rat(5)) / (rat(48) * (rat(2) * &n - rat(1)))
}

/// `(n + 1) / 2`.
pub fn plateau_mean(n: usize) -> Rat {
    Rat::new((n + 1).into(), 2.into())
}

/// Both sides of `(Q'(1) + Q''(1)) / n! = (27n^3 + 10n^2 - 9n - 4) /
/// (12 n (n + 1)) * binom(2n - 2, n - 1)` for the quasi-Stirling
/// polynomial `Q`.
pub fn second_moment_sides(n: usize) -> Result<(Rat, Rat), AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::InvalidParameters("n must be at least 1".into()));
    }
    let q = quasi_stirling_poly(n)?;
    let one = Rat::one();
    let d1 = q.derivative();
    let lhs = (d1.evaluate(&one) + d1.derivative().evaluate(&one)) / Rat::from_integer(factorial(n));
    let m = rat(n);
    let cubic = rat(27) * &m * &m * &m + rat(10) * &m * &m - rat(9) * &m - rat(4);
    let rhs = cubic / (rat(12) * &m * (&m + rat(1))) * Rat::from_integer(binomial(2 * n - 2, n - 1));
    Ok((lhs, rhs))
}

pub fn second_moment_identity(n: usize) -> Result<bool, AnalysisError> {
    let (lhs, rhs) = second_moment_sides(n)?;
    Ok(lhs == rhs)
}

/// Standardized exact distribution against the standard normal.
#[derive(Debug, Clone, Serialize)]
pub struct NormalComparison {
    pub rows: Vec<NormalRow>,
    pub max_abs_difference: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalRow {
    pub value: usize,
    pub z: f64,
    pub exact_cdf: f64,
    pub normal_cdf: f64,
}

/// Compares `P(X <= m)` with `Phi((m + 1/2 - mean) / sd)` at every support
/// point. Informational only; no threshold is applied.
pub fn normal_comparison(p: &Poly) -> Result<NormalComparison, AnalysisError> {
    let report = moment_report(p)?;
    let to_f = |r: &Rat| r.to_f64().expect("finite");
    let mean = to_f(&report.mean);
    let sd = to_f(&report.variance).sqrt();
    let normal = Normal::standard();
    let total = Rat::from_integer(report.population.clone());
    let mut acc = Rat::zero();
    let mut rows = Vec::new();
    for (m, c) in p.coeffs().iter().enumerate() {
        acc += c;
        if c.is_zero() {
            continue;
        }
        let z = (m as f64 + 0.5 - mean) / sd;
        rows.push(NormalRow { value: m, z, exact_cdf: to_f(&(&acc / &total)), normal_cdf: normal.cdf(z) });
    }
    let max_abs_difference = rows.iter().map(|r| (r.exact_cdf - r.normal_cdf).abs()).fold(0.0, f64::max);
    Ok(NormalComparison { rows, max_abs_difference })
}
