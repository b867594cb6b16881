//! Exact real-root counting with Sturm sequences.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::AnalysisError;
use crate::series::{Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    /// Real roots counted with multiplicity.
    pub real_root_count: usize,
    pub distinct_real_roots: usize,
    pub all_real: bool,
    pub all_distinct: bool,
    /// No real root is positive.
    pub all_nonpositive: bool,
}

/// Where a Sturm sequence is evaluated.
#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    NegInf,
    At(Rat),
    PosInf,
}

/// `p, p', -rem(p, p'), ...` down to the last nonzero remainder.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let rem = seq.last().unwrap().div_rem(&next).1;
        seq.push(next);
        next = -&rem;
    }
    seq
}

fn sign_at(p: &Poly, x: &Point) -> i8 {
    let s = match x {
        Point::At(v) => p.evaluate(v),
        Point::PosInf => p.leading().cloned().unwrap_or_else(Rat::zero),
        Point::NegInf => {
            let lead = p.leading().cloned().unwrap_or_else(Rat::zero);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -lead
            } else {
                lead
            }
        }
    };
    if s.is_positive() {
        1
    } else if s.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(seq: &[Poly], x: &Point) -> usize {
    let signs: Vec<i8> = seq.iter().map(|p| sign_at(p, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots in `(lo, hi]`. Neither endpoint may be a root.
pub fn distinct_roots_between(p: &Poly, lo: &Point, hi: &Point) -> usize {
    let seq = sturm_sequence(p);
    variations(&seq, lo).saturating_sub(variations(&seq, hi))
}

pub fn distinct_real_roots(p: &Poly) -> usize {
    distinct_roots_between(p, &Point::NegInf, &Point::PosInf)
}

/// Real roots with multiplicity: a root of multiplicity `m` is a root of
/// each of `p, gcd(p, p'), ...` for the first `m` terms of that chain.
pub fn real_roots_with_multiplicity(p: &Poly) -> usize {
    let mut total = 0;
    let mut g = p.clone();
    while g.degree().unwrap_or(0) > 0 {
        total += distinct_real_roots(&g);
        g = g.gcd(&g.derivative());
    }
    total
}

pub fn root_report(p: &Poly) -> Result<RootReport, AnalysisError> {
    let degree = p.degree().ok_or(AnalysisError::ZeroPolynomial)?;
    let real_root_count = real_roots_with_multiplicity(p);
    let distinct_real_roots = distinct_real_roots(p);
    let all_distinct = p.gcd(&p.derivative()).degree() == Some(0);
    // roots at 0 are divided out so that 0 is not an endpoint root
    let stripped = p.unshift(p.valuation().unwrap_or(0)).expect("divisible by t^valuation");
    let positive = distinct_roots_between(&stripped, &Point::At(Rat::zero()), &Point::PosInf);
    Ok(RootReport {
        degree,
        real_root_count,
        distinct_real_roots,
        all_real: real_root_count == degree,
        all_distinct,
        all_nonpositive: positive == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{p_recurrence, quasi_stirling_poly};

    fn report(c: &[i64]) -> RootReport {
        root_report(&Poly::from_ints(c.iter().copied())).unwrap()
    }

    #[test]
    fn small_cases() {
        let r = report(&[0, 1, 3]);
        assert!(r.all_real && r.all_distinct && r.all_nonpositive);
        assert_eq!((r.degree, r.real_root_count), (2, 2));
        let r = report(&[1, 0, 1]);
        assert!(!r.all_real);
        assert_eq!(r.real_root_count, 0);
        // (t - 1)^2 (t + 2)
        let r = report(&[2, -3, 0, 1]);
        assert!(r.all_real && !r.all_distinct && !r.all_nonpositive);
        assert_eq!((r.real_root_count, r.distinct_real_roots), (3, 2));
        // t^2 (t + 1)
        let r = report(&[0, 0, 1, 1]);
        assert!(r.all_real && !r.all_distinct && r.all_nonpositive);
        // (t + 1)(t + 2)(t - 3)
        assert!(!report(&[-6, -7, 0, 1]).all_nonpositive);
        let r = report(&[5]);
        assert!(r.all_real && r.all_distinct && r.all_nonpositive);
        assert_eq!(root_report(&Poly::zero()), Err(AnalysisError::ZeroPolynomial));
    }

    #[test]
    fn quasi_stirling_and_recurrence_polynomials() {
        for n in 1..=8 {
            let r = root_report(&quasi_stirling_poly(n).unwrap()).unwrap();
            assert!(r.all_real && r.all_distinct && r.all_nonpositive, "n={n}");
        }
        for n in 1..=6 {
            for r in 1..=n {
                let rep = root_report(&p_recurrence(n, r).unwrap()).unwrap();
                assert!(rep.all_real && rep.all_distinct && rep.all_nonpositive);
                assert_eq!(rep.degree, n - r + 1);
            }
        }
    }
}
