//! Verification layer: exact root analysis, moments and modes, generating
//! function identities, brute-force oracles, and the claim runner behind
//! `qstirling verify`.

mod claims;
mod identities;
mod moments;
mod oracles;
mod roots;

use num_bigint::BigInt;
use serde::Serializer;
use thiserror::Error;

use crate::bijections::BijectionError;
use crate::series::{Rat, SeriesError};
use crate::trees::TreeError;
use crate::words::WordError;

pub use claims::{
    run_claim, run_claims, Claim, ClaimOptions, Status, VerificationReport, REFERENCE_QUASI_STIRLING_TABLE,
};
pub use identities::{
    gs_check, k_lagrange_residual, lagrange_residual, ode_residual, qqn_check, rational_series_check, verify_gs,
    verify_qqn, IdentityCheck, Mismatch,
};
pub use moments::{
    check_darroch, descent_mean, descent_variance, moment_report, normal_comparison, plateau_mean,
    second_moment_identity, second_moment_sides, MomentReport, NormalComparison, NormalRow,
};
pub use oracles::{
    empirical_distribution, empirical_joint, excedance_oracle, r_excedance_oracle, Family, Statistic,
    EXCEDANCE_ORACLE_MAX_N,
};
pub use roots::{
    distinct_real_roots, distinct_roots_between, real_roots_with_multiplicity, root_report, sturm_sequence, Point,
    RootReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("the zero polynomial has no root structure")]
    ZeroPolynomial,
    #[error("polynomial {0} has total weight zero")]
    EmptyDistribution(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("too large for brute force: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

/// `p/q` in lowest terms, or just `p` for an integer.
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

pub(crate) fn serialize_rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(r))
}

pub(crate) fn serialize_bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}
