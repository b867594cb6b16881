//! Generating-function identities checked coefficient by coefficient.

use num_traits::Zero;
use serde::Serialize;

use super::AnalysisError;
use crate::series::numbers::{binomial, stirling2};
use crate::series::{
    eulerian_series, homogenized_eulerian_series, k_quasi_series, quasi_stirling_poly, quasi_stirling_series, rat,
    stirling_ode_series, stirling_poly, Convention, MPoly, Poly, Rat, Series, SeriesError, Var,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub m: usize,
    #[serde(serialize_with = "super::serialize_rat")]
    pub lhs: Rat,
    #[serde(serialize_with = "super::serialize_rat")]
    pub rhs: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    /// Coefficients compared, `m = 0..=max_m`.
    pub max_m: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `[t^m] numer(t) / (1 - t)^e` with `target(m)` for
/// `0 <= m <= max_m`.
pub fn rational_series_check(numer: &Poly, e: usize, max_m: usize, target: impl Fn(usize) -> Rat) -> IdentityCheck {
    let first_mismatch = (0..=max_m).find_map(|m| {
        let lhs: Rat = numer
            .coeffs()
            .iter()
            .enumerate()
            .take(m + 1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let ways = if e == 0 {
                    Rat::from_integer(u8::from(m == j).into())
                } else {
                    rat(binomial(m - j + e - 1, e - 1))
                };
                c * ways
            })
            .sum();
        let rhs = target(m);
        (lhs != rhs).then_some(Mismatch { m, lhs, rhs })
    });
    IdentityCheck { max_m, first_mismatch }
}

/// `sum_m m^n binom(m+n, m) / (n+1) t^m = q(t) / (1-t)^{2n+1}` for a
/// candidate `q`.
pub fn qqn_check(q: &Poly, n: usize, max_m: usize) -> IdentityCheck {
    rational_series_check(q, 2 * n + 1, max_m, |m| {
        rat(num_traits::pow(num_bigint::BigInt::from(m), n) * binomial(m + n, m)) / rat(n + 1)
    })
}

/// `sum_m S(m+n, m) t^m = q(t) / (1-t)^{2n+1}` for a candidate `q`.
pub fn gs_check(q: &Poly, n: usize, max_m: usize) -> IdentityCheck {
    rational_series_check(q, 2 * n + 1, max_m, |m| rat(stirling2(m + n, m)))
}

/// The quasi-Stirling case, with `Q̄_n` from Lagrange inversion.
pub fn verify_qqn(n: usize, max_m: usize) -> Result<IdentityCheck, AnalysisError> {
    if n == 0 || max_m == 0 {
        return Err(AnalysisError::InvalidParameters("need n >= 1 and M >= 1".into()));
    }
    Ok(qqn_check(&quasi_stirling_poly(n)?, n, max_m))
}

/// The Stirling case, with `Q_n` from the differential equation.
pub fn verify_gs(n: usize, max_m: usize) -> Result<IdentityCheck, AnalysisError> {
    Ok(gs_check(&stirling_poly(n)?, n, max_m))
}

/// `A(t, z Q̄(t,z)) - Q̄(t,z)` to the given order.
pub fn lagrange_residual(order: usize) -> Result<Series<Poly>, SeriesError> {
    let qbar = quasi_stirling_series(order)?;
    let composed = qbar.mul_z().compose_into(&eulerian_series(order))?;
    composed.sub(&qbar)
}

/// `Â(q, t; z (P̄ - 1 + u)^{k-1}) - P̄` to the given order.
pub fn k_lagrange_residual(k: usize, order: usize) -> Result<Series<MPoly>, SeriesError> {
    let pbar = k_quasi_series(k, order)?;
    let shift = &MPoly::var(Var::U) - &MPoly::one();
    let inner = pbar.add_constant(&shift).pow((k - 1) as u32).mul_z();
    inner.compose_into(&homogenized_eulerian_series(order))?.sub(&pbar)
}

/// `P' - (P - 1 + q)(P - 1 + t)(P - 1 + u)^{k-1}` for the computed `P`.
pub fn ode_residual(k: usize, order: usize) -> Result<Series<MPoly>, SeriesError> {
    let p = stirling_ode_series(k, order)?;
    let factor = |v: Var| p.add_constant(&(&MPoly::var(v) - &MPoly::one()));
    let rhs = factor(Var::Q).mul(&factor(Var::T))?.mul(&factor(Var::U).pow((k - 1) as u32))?;
    let lhs = p.derivative();
    debug_assert_eq!(lhs.convention(), Convention::Egf);
    lhs.sub(&rhs)
}
