//! Closed forms for one-vertex maps: the Harer–Zagier polynomial `G_n(N)`
//! (oriented) and the Goulden–Jackson polynomial `F_n(N)` (unoriented).
//!
//! Everything is written over a generic field scalar; the integer
//! coefficient tables use exact big rationals and check that every
//! denominator cancels.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

use crate::RationalPolynomial;

fn scalar<T: FromPrimitive>(v: i64) -> T {
    T::from_i64(v).expect("small integer is representable")
}

fn half<T: Num + FromPrimitive>() -> T {
    T::one() / scalar::<T>(2)
}

/// Generalized binomial `C(top, k) = top (top−1) … (top−k+1) / k!`.
/// `C(x, 0) = 1` for every `x`, including `C(−1, 0)`.
pub fn binomial<T: Clone + Num + FromPrimitive>(top: T, k: usize) -> T {
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * (top.clone() - scalar(i as i64)) / scalar((i + 1) as i64);
    }
    acc
}

/// `C(scale·N + shift, k)` as a polynomial in `N`.
pub fn binomial_poly<T: Clone + Num + FromPrimitive>(
    shift: T,
    scale: T,
    k: usize,
) -> Polynomial<T> {
    let mut acc = Polynomial::constant(T::one());
    for i in 0..k {
        let factor = Polynomial::linear(scale.clone(), shift.clone() - scalar(i as i64));
        acc = (&acc * &factor).scale(&(T::one() / scalar((i + 1) as i64)));
    }
    acc
}

/// `C(n − 1/2, m)`.
pub fn binomial_half<T: Clone + Num + FromPrimitive>(n: u64, m: usize) -> T {
    binomial(scalar::<T>(n as i64) - half(), m)
}

/// `(2n)! / (2^n n!) = (2n − 1)!!`.
fn odd_double_factorial<T: Clone + Num + FromPrimitive>(n: u64) -> T {
    (1..=n).fold(T::one(), |acc, k| acc * scalar((2 * k - 1) as i64))
}

fn pow2<T: Clone + Num + FromPrimitive>(e: u64) -> T {
    (0..e).fold(T::one(), |acc, _| acc * scalar(2))
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(())
}

/// `G_n(N) = (2n)!/(2^n n!) Σ_{k=0}^{n} 2^k C(n,k) C(N,k+1)` over any field.
pub fn harer_zagier_in<T: Clone + Num + FromPrimitive>(n: u64) -> Polynomial<T> {
    let mut sum = Polynomial::zero();
    for k in 0..=n {
        let c = pow2::<T>(k) * binomial(scalar::<T>(n as i64), k as usize);
        let term = binomial_poly(T::zero(), T::one(), (k + 1) as usize).scale(&c);
        sum = &sum + &term;
    }
    sum.scale(&odd_double_factorial(n))
}

/// `F_n(N) = n! Σ_k 2^{2n−k} Σ_r C(n−1/2, n−r) C(k+r−1, k) C((N−1)/2, r)
///         + (2n)!/(2^n n!) Σ_k 2^k C(n,k) C(N−1,k+1)` over any field.
pub fn goulden_jackson_in<T: Clone + Num + FromPrimitive>(n: u64) -> Polynomial<T> {
    let factorial = (1..=n).fold(T::one(), |acc, k| acc * scalar(k as i64));
    let mut first = Polynomial::zero();
    for k in 0..=n {
        let mut inner = Polynomial::zero();
        for r in 0..=n {
            let c = binomial_half::<T>(n, (n - r) as usize)
                * binomial(scalar::<T>((k + r) as i64 - 1), k as usize);
            if c.is_zero() {
                continue;
            }
            let b = binomial_poly(T::zero() - half::<T>(), half(), r as usize).scale(&c);
            inner = &inner + &b;
        }
        first = &first + &inner.scale(&pow2(2 * n - k));
    }
    let first = first.scale(&factorial);

    let mut second = Polynomial::zero();
    for k in 0..=n {
        let c = pow2::<T>(k) * binomial(scalar::<T>(n as i64), k as usize);
        let term = binomial_poly(T::zero() - T::one(), T::one(), (k + 1) as usize).scale(&c);
        second = &second + &term;
    }
    &first + &second.scale(&odd_double_factorial(n))
}

/// Harer–Zagier polynomial with exact rational coefficients.
pub fn harer_zagier(n: u64) -> Result<RationalPolynomial> {
    check_n(n)?;
    Ok(harer_zagier_in(n))
}

/// Goulden–Jackson polynomial with exact rational coefficients.
pub fn goulden_jackson(n: u64) -> Result<RationalPolynomial> {
    check_n(n)?;
    Ok(goulden_jackson_in(n))
}

/// A closed-form polynomial together with the integer counts read off it.
#[derive(Debug, Clone, PartialEq)]
pub struct OneVertexTable {
    pub n: u64,
    pub polynomial: RationalPolynomial,
    /// Genus (for `G_n`) or Euler characteristic (for `F_n`) -> count;
    /// only nonzero entries.
    pub coefficients: BTreeMap<i64, BigInt>,
}

impl OneVertexTable {
    /// Counts as `u64`, when they all fit.
    pub fn counts_u64(&self) -> Option<BTreeMap<i64, u64>> {
        self.coefficients
            .iter()
            .map(|(&k, v)| u64::try_from(v).ok().map(|v| (k, v)))
            .collect()
    }
}

fn integer(c: &BigRational, what: &str) -> Result<BigInt> {
    if !c.is_integer() {
        return Err(Error::InvalidArgument(format!(
            "{what}: non-integral coefficient {c}"
        )));
    }
    Ok(c.to_integer())
}

/// `a_{n,g}`, the coefficient of `N^{1+n−2g}` in `G_n(N)`.
pub fn harer_zagier_table(n: u64) -> Result<OneVertexTable> {
    let polynomial = harer_zagier(n)?;
    let mut coefficients = BTreeMap::new();
    for (power, c) in polynomial.coeffs().iter().enumerate() {
        let c = integer(c, "G_n")?;
        let shift = (1 + n as i64) - power as i64;
        if shift < 0 || shift % 2 != 0 {
            assert!(c.is_zero(), "G_{n} has a coefficient at N^{power}");
            continue;
        }
        if !c.is_zero() {
            assert!(c.is_positive());
            coefficients.insert(shift / 2, c);
        }
    }
    Ok(OneVertexTable {
        n,
        polynomial,
        coefficients,
    })
}

/// `f_{n,χ}`, the coefficient of `N^{n−1+χ}` in `F_n(N)`.
pub fn goulden_jackson_table(n: u64) -> Result<OneVertexTable> {
    let polynomial = goulden_jackson(n)?;
    let mut coefficients = BTreeMap::new();
    for (power, c) in polynomial.coeffs().iter().enumerate() {
        let c = integer(c, "F_n")?;
        if power == 0 {
            assert!(c.is_zero(), "F_{n} has a constant term");
            continue;
        }
        if !c.is_zero() {
            assert!(c.is_positive());
            coefficients.insert(power as i64 + 1 - n as i64, c);
        }
    }
    Ok(OneVertexTable {
        n,
        polynomial,
        coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn q(n: i64, d: i64) -> Q {
        Ratio::new(n, d)
    }

    fn big(v: &[i64]) -> Vec<BigRational> {
        v.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect()
    }

    fn table(t: &OneVertexTable) -> Vec<(i64, u64)> {
        t.counts_u64().unwrap().into_iter().collect()
    }

    #[test]
    fn binomial_polynomials() {
        let p = binomial_poly(q(0, 1), q(1, 1), 2);
        assert_eq!(p.coeffs(), &[q(0, 1), q(-1, 2), q(1, 2)]);
        let p = binomial_poly(q(-1, 2), q(1, 2), 1);
        assert_eq!(p.coeffs(), &[q(-1, 2), q(1, 2)]);
        assert_eq!(binomial_poly(q(7, 3), q(5, 1), 0).coeffs(), &[q(1, 1)]);
    }

    #[test]
    fn half_binomials() {
        assert_eq!(binomial_half::<Q>(1, 1), q(1, 2));
        assert_eq!(binomial_half::<Q>(2, 2), q(3, 8));
        assert_eq!(binomial_half::<Q>(5, 0), q(1, 1));
        assert_eq!(binomial::<Q>(q(-1, 1), 0), q(1, 1));
        assert_eq!(binomial::<Q>(q(0, 1), 1), q(0, 1));
        assert_eq!(binomial::<Q>(q(5, 1), 2), q(10, 1));
    }

    #[test]
    fn goulden_jackson_small_cases() {
        assert_eq!(
            goulden_jackson(1).unwrap().coeffs(),
            big(&[0, 1, 1]).as_slice()
        );
        assert_eq!(
            goulden_jackson(2).unwrap().coeffs(),
            big(&[0, 5, 5, 2]).as_slice()
        );
        assert_eq!(
            table(&goulden_jackson_table(1).unwrap()),
            vec![(1, 1), (2, 1)]
        );
        assert_eq!(
            table(&goulden_jackson_table(2).unwrap()),
            vec![(0, 5), (1, 5), (2, 2)]
        );
    }

    #[test]
    fn harer_zagier_rows() {
        assert_eq!(table(&harer_zagier_table(2).unwrap()), vec![(0, 2), (1, 1)]);
        assert_eq!(
            table(&harer_zagier_table(5).unwrap()),
            vec![(0, 42), (1, 420), (2, 483)]
        );
        assert_eq!(
            table(&harer_zagier_table(10).unwrap()),
            vec![
                (0, 16796),
                (1, 1385670),
                (2, 31039008),
                (3, 211083730),
                (4, 351683046),
                (5, 59520825)
            ]
        );
    }

    #[test]
    fn totals_are_matching_counts() {
        for n in 1..=12u64 {
            let odd: BigInt = (1..=n).map(|k| BigInt::from(2 * k - 1)).product();
            let hz: BigInt = harer_zagier_table(n).unwrap().coefficients.values().sum();
            assert_eq!(hz, odd, "n = {n}");
            let gj: BigInt = goulden_jackson_table(n)
                .unwrap()
                .coefficients
                .values()
                .sum();
            assert_eq!(gj, odd * BigInt::from(2).pow(n as u32), "n = {n}");
        }
    }

    #[test]
    fn sphere_counts_agree() {
        for n in 1..=6 {
            let hz = harer_zagier_table(n).unwrap();
            let gj = goulden_jackson_table(n).unwrap();
            assert_eq!(hz.coefficients[&0], gj.coefficients[&2], "n = {n}");
        }
    }

    #[test]
    fn float_evaluation_tracks_exact() {
        let exact = harer_zagier_in::<Q>(4).eval(&q(3, 1));
        let approx = harer_zagier_in::<f64>(4).eval(&3.0);
        assert!((approx - *exact.numer() as f64 / *exact.denom() as f64).abs() < 1e-9);
    }

    #[test]
    fn n_zero_is_rejected() {
        assert!(harer_zagier(0).is_err());
        assert!(goulden_jackson_table(0).is_err());
    }
}
