//! Exact combinatorics of Stirling and quasi-Stirling permutations of the
//! multiset `{1^k, ..., n^k}`: statistics, tree bijections, generating
//! polynomials and verification of their identities.

pub mod analysis;
pub mod bijections;
pub mod cli;
pub mod series;
pub mod trees;
pub mod words;
