//! Generating functions for the permutation families: Eulerian polynomials,
//! quasi-Stirling polynomials via Lagrange inversion, the r-excedance
//! recurrence, the trivariate k-quasi-Stirling polynomials and the
//! k-Stirling differential equation.

use super::numbers::factorial;
use super::{ensure_counting_mpoly, ensure_counting_poly, rat, Convention, MPoly, Poly, Rat, Series, SeriesError, Var};

/// Truncation order used when a caller does not supply one.
pub const DEFAULT_ORDER: usize = 8;

/// `p_{n,r}(t)` from `p_{r,r} = t` and
/// `p_{m,r} = m t p_{m-1,r} + t (1 - t) p'_{m-1,r}`.
pub fn p_recurrence(n: usize, r: usize) -> Result<Poly, SeriesError> {
    if r == 0 || r > n {
        return Err(SeriesError::InvalidParameters(format!("p_{{n,r}} needs 1 <= r <= n, got n={n}, r={r}")));
    }
    let t = Poly::t();
    let t_one_minus_t = Poly::from_ints([0, 1, -1]);
    let mut p = t.clone();
    for m in r + 1..=n {
        p = &(&t * &p).scale(&rat(m)) + &(&t_one_minus_t * &p.derivative());
    }
    ensure_counting_poly("p_{n,r}", p)
}

/// Excedance polynomial of injections `[n-r] -> [n]`: `J_{n,r} = p_{n,r} / t`.
pub fn j_poly(n: usize, r: usize) -> Result<Poly, SeriesError> {
    let p = p_recurrence(n, r)?;
    Ok(p.unshift(1).expect("p_{n,r} is divisible by t"))
}

/// r-excedance polynomial of `S_n`: `A_{n,r}(t) = r! t^{n-r} J_{n,r}(1/t)`.
pub fn a_excedance_poly(n: usize, r: usize) -> Result<Poly, SeriesError> {
    let j = j_poly(n, r)?;
    let a = j.reversed(n - r).scale(&Rat::from_integer(factorial(r)));
    ensure_counting_poly("A_{n,r}", a)
}

/// Eulerian polynomial with the final position counted as a descent, so
/// `A_1 = t` and `A_2 = t + t^2`. `A_0 = 1`.
pub fn eulerian(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    p_recurrence(n, 1).expect("r = 1 is valid for n >= 1")
}

/// `A(t, z)` as an EGF built from the recurrence.
pub fn eulerian_series(order: usize) -> Series<Poly> {
    Series::from_fn(Convention::Egf, order, eulerian)
}

/// `A(t, z)` expanded from `(1 - t) / (1 - t exp((1 - t) z))`.
pub fn eulerian_series_closed_form(order: usize) -> Series<Poly> {
    let one_minus_t = Poly::from_ints([1, -1]);
    let arg = Series::<Poly>::z(Convention::Egf, order).mul_coeff(&one_minus_t);
    let e = arg.exp().expect("zero constant term");
    let den = e.mul_coeff(&Poly::t()).scale(&rat(-1)).add_constant(&Poly::one());
    let num = Series::constant(Convention::Egf, order, one_minus_t);
    num.div_exact(&den).expect("closed form has polynomial coefficients")
}

/// `Â_n(q, t)`: the Eulerian polynomial homogenized to total degree `n + 1`
/// (every position of a permutation is an ascent or a descent).
pub fn homogenized_eulerian(n: usize) -> MPoly {
    if n == 0 {
        return MPoly::one();
    }
    let a = eulerian(n);
    let mut out = MPoly::zero();
    for (d, c) in a.coeffs().iter().enumerate() {
        out.add_term([(n + 1 - d) as u32, d as u32, 0], c.clone());
    }
    out
}

pub fn homogenized_eulerian_series(order: usize) -> Series<MPoly> {
    Series::from_fn(Convention::Egf, order, homogenized_eulerian)
}

/// `Q̄_n(t) = n!/(n+1) [z^n] A(t,z)^{n+1}`.
pub fn quasi_stirling_poly(n: usize) -> Result<Poly, SeriesError> {
    let power = eulerian_series(n).pow((n + 1) as u32);
    // the stored EGF coefficient already carries the n! factor
    let q = power.coeff(n).scale(&rat(n + 1).recip());
    ensure_counting_poly("quasi-Stirling polynomial", q)
}

pub fn quasi_stirling_series(order: usize) -> Result<Series<Poly>, SeriesError> {
    let coeffs = (0..=order).map(quasi_stirling_poly).collect::<Result<_, _>>()?;
    Ok(Series::new(Convention::Egf, coeffs))
}

/// Joint `(asc, des, plat)` polynomial of k-quasi-Stirling permutations:
/// `n!/((k-1)n+1) [z^n] (Â(q,t;z) - 1 + u)^{(k-1)n+1}`.
pub fn k_quasi_poly(n: usize, k: usize) -> Result<MPoly, SeriesError> {
    if k == 0 {
        return Err(SeriesError::InvalidParameters("k must be at least 1".into()));
    }
    if n == 0 {
        return Ok(MPoly::one());
    }
    let e = (k - 1) * n + 1;
    let base = homogenized_eulerian_series(n).add_constant(&MPoly::var(Var::U)).sub(&Series::constant(
        Convention::Egf,
        n,
        MPoly::one(),
    ))?;
    let p = base.pow(e as u32).coeff(n).scale(&rat(e).recip());
    ensure_counting_mpoly("k-quasi-Stirling polynomial", p)
}

pub fn k_quasi_series(k: usize, order: usize) -> Result<Series<MPoly>, SeriesError> {
    let coeffs = (0..=order).map(|n| k_quasi_poly(n, k)).collect::<Result<_, _>>()?;
    Ok(Series::new(Convention::Egf, coeffs))
}

/// Solves `P' = (P - 1 + q)(P - 1 + t)(P - 1 + u)^{k-1}`, `P(0) = 1`, term by
/// term. The EGF coefficients are the joint `(asc, des, plat)` polynomials of
/// k-Stirling permutations.
pub fn stirling_ode_series(k: usize, order: usize) -> Result<Series<MPoly>, SeriesError> {
    if k == 0 {
        return Err(SeriesError::InvalidParameters("k must be at least 1".into()));
    }
    let shift = |s: &Series<MPoly>, v: Var| s.add_constant(&(&MPoly::var(v) - &MPoly::one()));
    let mut coeffs = vec![MPoly::one()];
    for n in 0..order {
        let p = Series::new(Convention::Egf, coeffs.clone());
        let mut rhs = shift(&p, Var::Q).mul(&shift(&p, Var::T))?;
        rhs = rhs.mul(&shift(&p, Var::U).pow((k - 1) as u32))?;
        // EGF derivative: c_{n+1} is the n-th stored coefficient of P'
        let next = rhs.coeff(n).clone();
        coeffs.push(ensure_counting_mpoly("k-Stirling polynomial", next)?);
    }
    Ok(Series::new(Convention::Egf, coeffs))
}

/// `P_n^{(k)}(q, t, u)` for k-Stirling permutations.
pub fn k_stirling_poly(n: usize, k: usize) -> Result<MPoly, SeriesError> {
    Ok(stirling_ode_series(k, n)?.coeff(n).clone())
}

/// Stirling polynomial `Q_n(t) = P_n(1, t, 1)` at `k = 2`.
pub fn stirling_poly(n: usize) -> Result<Poly, SeriesError> {
    Ok(k_stirling_poly(n, 2)?.marginal(Var::T))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::numbers::{catalan, double_factorial_odd, k_catalan, narayana};
    use num_traits::One;

    /// All permutations of `0..n` by repeated insertion.
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for v in 0..n {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=p.len()).map(move |i| {
                        let mut q = p.clone();
                        q.insert(i, v);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Descents with the final position counted, ascents with position 0.
    fn asc_des(p: &[usize]) -> (u32, u32) {
        let d = p.windows(2).filter(|w| w[0] > w[1]).count() as u32;
        let a = p.windows(2).filter(|w| w[0] < w[1]).count() as u32;
        (a + 1, d + 1)
    }

    #[test]
    fn eulerian_matches_permutation_enumeration() {
        for n in 1..=7 {
            let mut counts = vec![0i64; n + 2];
            let mut joint = Vec::new();
            for p in permutations(n) {
                let (a, d) = asc_des(&p);
                counts[d as usize] += 1;
                joint.push(([a, d, 0], 1));
            }
            assert_eq!(eulerian(n), Poly::from_ints(counts), "A_{n}");
            assert_eq!(homogenized_eulerian(n), MPoly::from_counts(joint), "Â_{n}");
        }
        assert_eq!(eulerian(1), Poly::t());
        assert_eq!(eulerian(2), Poly::from_ints([0, 1, 1]));
    }

    #[test]
    fn eulerian_row_sums_are_factorials() {
        for n in 0..10 {
            assert_eq!(eulerian(n).evaluate(&Rat::one()), Rat::from_integer(factorial(n)));
        }
    }

    #[test]
    fn closed_form_agrees_with_recurrence() {
        let closed = eulerian_series_closed_form(8);
        assert_eq!(closed, eulerian_series(8));
        assert_eq!(closed.coeff(0), &Poly::one());
        assert_eq!(closed.coeff(1), &Poly::t());
    }

    #[test]
    fn homogenized_small_cases() {
        assert_eq!(homogenized_eulerian(1), MPoly::from_counts([([1, 1, 0], 1)]));
        assert_eq!(homogenized_eulerian(2), MPoly::from_counts([([2, 1, 0], 1), ([1, 2, 0], 1)]));
        for n in 1..8 {
            assert_eq!(homogenized_eulerian(n).marginal(Var::T), eulerian(n));
        }
    }

    #[test]
    fn quasi_stirling_table() {
        let table: [&[i64]; 7] = [
            &[0, 1],
            &[0, 1, 3],
            &[0, 1, 13, 16],
            &[0, 1, 39, 171, 125],
            &[0, 1, 101, 1091, 2551, 1296],
            &[0, 1, 243, 5498, 28838, 43653, 16807],
            &[0, 1, 561, 24270, 243790, 780585, 850809, 262144],
        ];
        for (i, row) in table.iter().enumerate() {
            let n = i + 1;
            let q = quasi_stirling_poly(n).unwrap();
            assert_eq!(q, Poly::from_ints(row.iter().copied()), "Q̄_{n}");
            let total = Rat::from_integer(factorial(n) * catalan(n));
            assert_eq!(q.evaluate(&Rat::one()), total);
        }
        assert_eq!(quasi_stirling_poly(0).unwrap(), Poly::one());
    }

    #[test]
    fn p_recurrence_examples() {
        assert_eq!(p_recurrence(4, 3).unwrap(), Poly::from_ints([0, 1, 3]));
        assert_eq!(j_poly(4, 3).unwrap(), Poly::from_ints([1, 3]));
        assert_eq!(j_poly(5, 5).unwrap(), Poly::one());
        assert!(p_recurrence(3, 4).is_err());
        assert!(p_recurrence(3, 0).is_err());
        for n in 1..9 {
            let a_over_t = eulerian(n).unshift(1).unwrap();
            assert_eq!(j_poly(n, 1).unwrap(), a_over_t);
            assert_eq!(a_excedance_poly(n, 1).unwrap(), a_over_t);
        }
        for n in 1..=6 {
            assert_eq!(p_recurrence(2 * n, n + 1).unwrap(), quasi_stirling_poly(n).unwrap());
        }
    }

    #[test]
    fn k_quasi_specializations() {
        for n in 1..=5 {
            let p2 = k_quasi_poly(n, 2).unwrap();
            assert_eq!(p2.marginal(Var::T), quasi_stirling_poly(n).unwrap());
            let plat = p2.marginal(Var::U);
            for m in 1..=n {
                let expected = factorial(n) * narayana(n, m);
                assert_eq!(plat.coefficient(m), Rat::from_integer(expected));
            }
            for k in 1..=4 {
                let p = k_quasi_poly(n, k).unwrap();
                let one = Rat::one();
                assert_eq!(
                    p.evaluate(&one, &one, &one),
                    Rat::from_integer(factorial(n) * k_catalan(n, k)),
                    "n={n} k={k}"
                );
                assert!(p.total_degrees().all(|d| d as usize == k * n + 1));
            }
            assert_eq!(k_quasi_poly(n, 1).unwrap(), homogenized_eulerian(n));
        }
    }

    #[test]
    fn ode_small_cases() {
        // Q_2 = {1122, 1221, 2211}: (asc,des,plat) = (2,1,2), (2,2,1), (1,2,2)
        let p2 = k_stirling_poly(2, 2).unwrap();
        assert_eq!(p2, MPoly::from_counts([([2, 1, 2], 1), ([2, 2, 1], 1), ([1, 2, 2], 1)]));
        for n in 1..=6 {
            let q = stirling_poly(n).unwrap();
            assert_eq!(q.evaluate(&Rat::one()), Rat::from_integer(double_factorial_odd(n)));
            let p1 = k_stirling_poly(n, 1).unwrap();
            assert_eq!(p1.set_one(Var::U), homogenized_eulerian(n));
        }
    }

    #[test]
    fn lagrange_residual_vanishes() {
        let qbar = quasi_stirling_series(7).unwrap();
        let lhs = qbar.mul_z().compose_into(&eulerian_series(7)).unwrap();
        assert_eq!(lhs, qbar);
    }
}
