//! Exact polynomial and truncated power-series arithmetic, and every
//! generating-function computation built on it.

mod families;
mod fps;
mod mpoly;
pub mod numbers;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use families::{
    a_excedance_poly, eulerian, eulerian_series, eulerian_series_closed_form, homogenized_eulerian,
    homogenized_eulerian_series, j_poly, k_quasi_poly, k_quasi_series, k_stirling_poly, p_recurrence,
    quasi_stirling_poly, quasi_stirling_series, stirling_ode_series, stirling_poly, DEFAULT_ORDER,
};
pub use fps::{Convention, Series};
pub use mpoly::{Exponent, MPoly, Var};
pub use poly::Poly;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot combine an exponential and an ordinary generating function")]
    ConventionMismatch,
    #[error("operation requires a series with zero constant term")]
    NonzeroConstantTerm,
    #[error("series is not invertible over the coefficient ring")]
    NotInvertible,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{name} has a coefficient that is not a nonnegative integer: {poly}")]
    NotCounting { name: String, poly: String },
}

/// Coefficient ring for [`Series`]: a commutative ring containing the
/// rationals.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rat) -> Self;
    /// `self / other` when the quotient exists in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn from_rat(c: Rat) -> Self;
}

impl Coefficient for Rat {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
    fn from_rat(c: Rat) -> Self {
        c
    }
}

/// Shared term printer: `c*mono` joined with ` + ` / ` - `.
fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(Rat, String)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (c, mono)) in terms.iter().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if c.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    Ok(())
}

pub(crate) fn ensure_counting_poly(name: &str, p: Poly) -> Result<Poly, SeriesError> {
    if p.is_integral() && p.is_nonnegative() {
        Ok(p)
    } else {
        Err(SeriesError::NotCounting { name: name.to_string(), poly: p.to_string() })
    }
}

pub(crate) fn ensure_counting_mpoly(name: &str, p: MPoly) -> Result<MPoly, SeriesError> {
    if p.is_integral() && p.is_nonnegative() {
        Ok(p)
    } else {
        Err(SeriesError::NotCounting { name: name.to_string(), poly: p.to_string() })
    }
}
