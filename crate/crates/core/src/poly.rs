//! Dense univariate polynomials over any `num_traits::Num` scalar.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, One, Zero};

/// `coeffs[i]` is the coefficient of `N^i`. The leading coefficient is never
/// zero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Polynomial<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The formal variable `N`.
    pub fn variable() -> Self {
        Self::from_coeffs(vec![T::zero(), T::one()])
    }

    /// `c·N + shift`.
    pub fn linear(c: T, shift: T) -> Self {
        Self::from_coeffs(vec![shift, c])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> T {
        self.coeffs.get(power).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<T: Clone + Num> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Clone + Num> One for Polynomial<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Clone + Num> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::from_coeffs(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Clone + Num> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Clone + Num + fmt::Display> fmt::Display for Polynomial<T> {
    /// Descending powers, e.g. `2*N^3 + 5*N^2 + 5*N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match power {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => f.write_str("N")?,
                1 => write!(f, "{c}*N")?,
                _ if c.is_one() => write!(f, "N^{power}")?,
                _ => write!(f, "{c}*N^{power}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type P = Polynomial<Ratio<i64>>;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn trims_leading_zeros() {
        let p = P::from_coeffs(vec![r(1, 1), r(0, 1), r(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(P::from_coeffs(vec![r(0, 1)]).is_zero());
        assert_eq!(P::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let n = P::variable();
        let one = P::one();
        let sq = &(&n - &one) * &n;
        assert_eq!(sq.coeffs(), &[r(0, 1), r(-1, 1), r(1, 1)]);
        assert_eq!((sq.clone() + one.clone()).eval(&r(3, 1)), r(7, 1));
        assert!((sq.clone() - sq.clone()).is_zero());
        assert_eq!((-&sq).eval(&r(2, 1)), r(-2, 1));
        assert!((sq * P::zero()).is_zero());
    }

    #[test]
    fn generic_over_floats() {
        let p = Polynomial::<f64>::from_coeffs(vec![0.0, 5.0, 5.0, 2.0]);
        assert_eq!(p.eval(&2.0), 46.0);
        assert_eq!(p.scale(&0.5).coeff(3), 1.0);
    }

    #[test]
    fn display() {
        let p = Polynomial::<i64>::from_coeffs(vec![0, 5, 5, 2]);
        assert_eq!(p.to_string(), "2*N^3 + 5*N^2 + 5*N");
        assert_eq!(
            Polynomial::<i64>::from_coeffs(vec![1, 1]).to_string(),
            "N + 1"
        );
        assert_eq!(Polynomial::<i64>::zero().to_string(), "0");
    }
}
