//! Sparse trivariate polynomials in `q` (ascents), `t` (descents) and
//! `u` (plateaus).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    T,
    U,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::T, Var::U];

    fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::U => "u",
        }
    }
}

/// Exponents of `(q, t, u)`.
pub type Exponent = [u32; 3];

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Exponent, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        MPoly::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: Rat, exp: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut exp = [0; 3];
        exp[v.index()] = 1;
        MPoly::monomial(Rat::one(), exp)
    }

    /// Builds a polynomial from `(exponent, count)` pairs, summing repeats.
    pub fn from_counts<I, C>(counts: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = MPoly::zero();
        for (e, c) in counts {
            p.add_term(e, Rat::from_integer(c.into()));
        }
        p
    }

    pub fn add_term(&mut self, exp: Exponent, c: Rat) {
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: Exponent) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    pub fn evaluate(&self, q: &Rat, t: &Rat, u: &Rat) -> Rat {
        let vals = [q, t, u];
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(vals).fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .sum()
    }

    /// Univariate polynomial in `keep`, with the other two variables set to 1.
    pub fn marginal(&self, keep: Var) -> Poly {
        let mut coeffs: Vec<Rat> = Vec::new();
        for (e, c) in &self.terms {
            let d = e[keep.index()] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rat::zero());
            }
            coeffs[d] += c;
        }
        Poly::new(coeffs)
    }

    /// Substitute `1` for `var`.
    pub fn set_one(&self, var: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut e = *e;
            e[var.index()] = 0;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Rename variables: the exponent of variable `i` moves to slot `perm[i]`.
    pub fn permute_vars(&self, perm: [usize; 3]) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut ne = [0; 3];
            for i in 0..3 {
                ne[perm[i]] = e[i];
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    pub fn total_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|e| e.iter().sum())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact division by a single term, if possible.
    fn div_by_monomial(&self, exp: &Exponent, c: &Rat) -> Option<MPoly> {
        let mut out = MPoly::zero();
        for (e, a) in &self.terms {
            if (0..3).any(|i| e[i] < exp[i]) {
                return None;
            }
            out.add_term([e[0] - exp[0], e[1] - exp[1], e[2] - exp[2]], a / c);
        }
        Some(out)
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::one()
    }
}

impl super::Coefficient for MPoly {
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
        MPoly::scale(self, c)
    }
    /// Only division by a single term is supported.
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.terms.len() != 1 {
            return None;
        }
        let (e, c) = other.terms.iter().next().unwrap();
        self.div_by_monomial(e, c)
    }
    fn from_rat(c: Rat) -> Self {
        MPoly::constant(c)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], a * b);
            }
        }
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl From<&Poly> for MPoly {
    /// Embeds a polynomial in `t`.
    fn from(p: &Poly) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term([0, i as u32, 0], c.clone());
        }
        out
    }
}

/// Terms in increasing `(q, t, u)` exponent order, e.g. `1*q*t^2*u^2`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rat, String)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = Var::ALL
                    .iter()
                    .zip(e)
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| if k == 1 { v.name().to_string() } else { format!("{}^{k}", v.name()) })
                    .collect();
                (c.clone(), mono.join("*"))
            })
            .collect();
        super::write_terms(f, &terms)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
