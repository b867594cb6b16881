//! Truncated power series in `z` with polynomial coefficients.
//!
//! A [`Series`] carries its convention (exponential or ordinary) as part of
//! its value. Binary operations between series of different conventions are
//! rejected. All operations are exact; the result of a binary operation is
//! truncated to the smaller of the two orders.

use num_bigint::BigInt;
use num_traits::One;

use super::numbers::{binomial, factorial};
use super::{Coefficient, Rat, SeriesError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `sum c_n z^n / n!`
    Egf,
    /// `sum c_n z^n`
    Ogf,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    convention: Convention,
    coeffs: Vec<C>,
}

fn rat_int(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

impl<C: Coefficient> Series<C> {
    /// Series of the given order (`coeffs.len() - 1`). Panics on an empty vector.
    pub fn new(convention: Convention, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { convention, coeffs }
    }

    pub fn from_fn(convention: Convention, order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series::new(convention, (0..=order).map(f).collect())
    }

    pub fn zero(convention: Convention, order: usize) -> Self {
        Series::from_fn(convention, order, |_| C::zero())
    }

    pub fn constant(convention: Convention, order: usize, c: C) -> Self {
        let mut s = Series::zero(convention, order);
        s.coeffs[0] = c;
        s
    }

    /// The series `z`.
    pub fn z(convention: Convention, order: usize) -> Self {
        let mut s = Series::zero(convention, order);
        if order >= 1 {
            s.coeffs[1] = C::one();
        }
        s
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Stored coefficient `c_n` (for an EGF this is `n! [z^n]`).
    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.convention, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> Series<D> {
        Series::new(self.convention, self.coeffs.iter().map(f).collect())
    }

    /// The same formal series expressed in the other convention.
    pub fn to_convention(&self, target: Convention) -> Self {
        if target == self.convention {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let f = rat_int(factorial(n));
                match target {
                    Convention::Ogf => c.scale(&f.recip()),
                    Convention::Egf => c.scale(&f),
                }
            })
            .collect();
        Series::new(target, coeffs)
    }

    fn check(&self, other: &Self) -> Result<usize, SeriesError> {
        if self.convention != other.convention {
            return Err(SeriesError::ConventionMismatch);
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check(other)?;
        Ok(Series::from_fn(self.convention, n, |i| self.coeffs[i].add_ref(&other.coeffs[i])))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check(other)?;
        Ok(Series::from_fn(self.convention, n, |i| self.coeffs[i].sub_ref(&other.coeffs[i])))
    }

    pub fn add_constant(&self, c: &C) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = s.coeffs[0].add_ref(c);
        s
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Multiply every coefficient by the same ring element.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    /// Cauchy product (ordinary) or binomial convolution (exponential).
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check(other)?;
        let egf = self.convention == Convention::Egf;
        Ok(Series::from_fn(self.convention, n, |m| {
            let mut acc = C::zero();
            for i in 0..=m {
                let (a, b) = (&self.coeffs[i], &other.coeffs[m - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let mut term = a.mul_ref(b);
                if egf {
                    term = term.scale(&rat_int(binomial(m, i)));
                }
                acc = acc.add_ref(&term);
            }
            acc
        }))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Series::constant(self.convention, self.order(), C::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same convention");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same convention");
            }
        }
        result
    }

    /// `z * self`, keeping the order.
    pub fn mul_z(&self) -> Self {
        let egf = self.convention == Convention::Egf;
        Series::from_fn(self.convention, self.order(), |n| {
            if n == 0 {
                C::zero()
            } else if egf {
                self.coeffs[n - 1].scale(&rat_int(n))
            } else {
                self.coeffs[n - 1].clone()
            }
        })
    }

    /// Formal derivative in `z`; the order drops by one (minimum zero).
    pub fn derivative(&self) -> Self {
        let egf = self.convention == Convention::Egf;
        let order = self.order().saturating_sub(1);
        Series::from_fn(self.convention, order, |n| match self.coeffs.get(n + 1) {
            None => C::zero(),
            Some(c) if egf => c.clone(),
            Some(c) => c.scale(&rat_int(n + 1)),
        })
    }

    fn require_zero_constant(&self) -> Result<(), SeriesError> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(SeriesError::NonzeroConstantTerm)
        }
    }

    /// `outer(self)`. The inner series must have zero constant term.
    pub fn compose_into(&self, outer: &Self) -> Result<Self, SeriesError> {
        let order = self.check(outer)?;
        self.require_zero_constant()?;
        let inner = self.truncate(order);
        let mut power = Series::constant(self.convention, order, C::one());
        let mut acc = Series::zero(self.convention, order);
        for r in 0..=order {
            let weight = match self.convention {
                Convention::Egf => rat_int(factorial(r)).recip(),
                Convention::Ogf => Rat::one(),
            };
            let term = power.mul_coeff(&outer.coeffs[r].scale(&weight));
            acc = acc.add(&term)?;
            power = power.mul(&inner)?;
        }
        Ok(acc)
    }

    /// `exp(self)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let s = self.to_convention(Convention::Ogf);
        let n = s.order();
        // (m+1) e_{m+1} = sum_{i=0}^{m} (i+1) s_{i+1} e_{m-i}
        let mut e: Vec<C> = vec![C::one()];
        for m in 0..n {
            let mut acc = C::zero();
            for i in 0..=m {
                acc = acc.add_ref(&s.coeffs[i + 1].mul_ref(&e[m - i]).scale(&rat_int(i + 1)));
            }
            e.push(acc.scale(&rat_int(m + 1).recip()));
        }
        Ok(Series::new(Convention::Ogf, e).to_convention(self.convention))
    }

    /// `log(1 + self)` for a series with zero constant term.
    pub fn log_one_plus(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let s = self.to_convention(Convention::Ogf);
        let n = s.order();
        // L' (1 + s) = s'  =>  (m+1) l_{m+1} = (m+1) s_{m+1} - sum_{i=1}^{m} s_i (m+1-i) l_{m+1-i}
        let mut l: Vec<C> = vec![C::zero()];
        for m in 0..n {
            let mut acc = s.coeffs[m + 1].scale(&rat_int(m + 1));
            for i in 1..=m {
                acc = acc.sub_ref(&s.coeffs[i].mul_ref(&l[m + 1 - i]).scale(&rat_int(m + 1 - i)));
            }
            l.push(acc.scale(&rat_int(m + 1).recip()));
        }
        Ok(Series::new(Convention::Ogf, l).to_convention(self.convention))
    }

    /// `self / den`, requiring exact coefficient division by the constant
    /// term of `den` at every step.
    pub fn div_exact(&self, den: &Self) -> Result<Self, SeriesError> {
        let order = self.check(den)?;
        let a = self.to_convention(Convention::Ogf);
        let d = den.to_convention(Convention::Ogf);
        let d0 = &d.coeffs[0];
        if d0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let mut q: Vec<C> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = a.coeffs[m].clone();
            for (i, qi) in q.iter().enumerate() {
                acc = acc.sub_ref(&qi.mul_ref(&d.coeffs[m - i]));
            }
            q.push(acc.div_exact(d0).ok_or(SeriesError::NotInvertible)?);
        }
        Ok(Series::new(Convention::Ogf, q).to_convention(self.convention))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Poly;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn rat_series(conv: Convention, v: &[i64]) -> Series<Rat> {
        Series::new(conv, v.iter().map(|&x| r(x)).collect())
    }

    #[test]
    fn pow_one_is_identity() {
        let s = rat_series(Convention::Egf, &[1, 2, 3, 4]);
        assert_eq!(s.pow(1), s);
    }

    #[test]
    fn exp_log_round_trip() {
        for conv in [Convention::Egf, Convention::Ogf] {
            let s = rat_series(conv, &[0, 1, -2, 5, 7, 0, 3]);
            let back = s.exp().unwrap().sub(&Series::constant(conv, 6, Rat::one())).unwrap();
            assert_eq!(back.log_one_plus().unwrap(), s);
            let l = s.log_one_plus().unwrap();
            let one_plus = s.add_constant(&Rat::one());
            assert_eq!(l.exp().unwrap(), one_plus);
        }
    }

    #[test]
    fn exp_of_z_is_all_ones_as_egf() {
        let e = Series::<Rat>::z(Convention::Egf, 6).exp().unwrap();
        assert!(e.coeffs().iter().all(|c| c == &Rat::one()));
    }

    #[test]
    fn convention_mismatch_is_an_error() {
        let a = rat_series(Convention::Egf, &[1, 1]);
        let b = rat_series(Convention::Ogf, &[1, 1]);
        assert_eq!(a.mul(&b), Err(SeriesError::ConventionMismatch));
        assert_eq!(a.add(&b), Err(SeriesError::ConventionMismatch));
    }

    #[test]
    fn geometric_division_and_composition() {
        // 1/(1-z) as OGF is all ones; composing 1/(1-x) with z gives the same.
        let one = rat_series(Convention::Ogf, &[1, 0, 0, 0, 0]);
        let den = rat_series(Convention::Ogf, &[1, -1, 0, 0, 0]);
        let geo = one.div_exact(&den).unwrap();
        assert!(geo.coeffs().iter().all(|c| c == &Rat::one()));
        let z = Series::<Rat>::z(Convention::Ogf, 4);
        assert_eq!(z.compose_into(&geo).unwrap(), geo);
        assert_eq!(geo.compose_into(&geo), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn egf_product_is_binomial() {
        // e^z * e^z = e^{2z}
        let e = Series::<Rat>::z(Convention::Egf, 5).exp().unwrap();
        let sq = e.mul(&e).unwrap();
        for (n, c) in sq.coeffs().iter().enumerate() {
            assert_eq!(c, &r(1 << n));
        }
    }

    #[test]
    fn polynomial_coefficients_divide_exactly() {
        let one_minus_t = Poly::from_ints([1, -1]);
        let num = Series::constant(Convention::Egf, 3, one_minus_t.clone());
        let den = Series::constant(Convention::Egf, 3, one_minus_t);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q.coeff(0), &Poly::one());
        assert!(q.coeffs()[1..].iter().all(|c| c.is_zero()));
    }
}
