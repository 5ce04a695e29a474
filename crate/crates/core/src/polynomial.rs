//! Dense univariate polynomials with exact rational coefficients.
//!
//! Canonical form: no trailing zero coefficient is ever stored, and the
//! zero polynomial is the empty coefficient list (its degree is `None`).
//! All operations are exact and return new values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Signed, Zero};

use crate::rational::{factorial, rat_int, Rational};

/// A univariate polynomial `sum coeffs[i] * x^i` over the rationals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * x^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Polynomial { coeffs }
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros so the result is canonical.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Low-to-high coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact first derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Exact `order`-th derivative; the zero polynomial once `order`
    /// exceeds the degree.
    pub fn derivative_n(&self, order: usize) -> Polynomial {
        match self.degree() {
            None => Polynomial::zero(),
            Some(d) if order > d => Polynomial::zero(),
            _ => {
                let mut p = self.clone();
                for _ in 0..order {
                    p = p.derivative();
                }
                p
            }
        }
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat_int(i as i64 + 1));
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Scalar multiple `c * self`.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact composition with an affine argument: returns `p(a + b*x)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Polynomial {
        // Horner in the polynomial ring: p(a+bx) = (...(c_d (a+bx) + c_{d-1})...).
        let arg = Polynomial::from_coeffs(vec![a.clone(), b.clone()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// `p(1 - x)`.
    pub fn reflect_unit(&self) -> Polynomial {
        self.compose_affine(&Rational::one(), &rat_int(-1))
    }

    /// Exact division by `x`. Returns `None` when the constant term is
    /// nonzero (the quotient would not be a polynomial).
    pub fn divide_by_x(&self) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(Polynomial {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `x^(2k+1) / (2k+1)!`, the seed of the Lidstone recursion.
    pub fn odd_monomial_over_factorial(k: usize) -> Polynomial {
        let deg = 2 * k as u64 + 1;
        Polynomial::monomial(
            Rational::new(1.into(), factorial(deg)),
            deg as usize,
        )
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    /// Human form, highest power first: `1/6*x^3 - 1/6*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn lambda1() -> Polynomial {
        // x^3/6 - x/6
        Polynomial::from_coeffs(vec![rat_int(0), rat(-1, 6), rat_int(0), rat(1, 6)])
    }

    #[test]
    fn additive_inverse_gives_zero() {
        let x = Polynomial::x();
        let sum = &x + &(-&x);
        assert!(sum.is_zero());
        assert_eq!(sum.degree(), None);
    }

    #[test]
    fn monomial_product() {
        let x = Polynomial::x();
        assert_eq!(&x * &x, Polynomial::monomial(Rational::one(), 2));
    }

    #[test]
    fn cancelling_term_restores_cubic() {
        // (x^3/6 - x/6) + x/6 = x^3/6
        let sum = &lambda1() + &Polynomial::monomial(rat(1, 6), 1);
        assert_eq!(sum, Polynomial::monomial(rat(1, 6), 3));
    }

    #[test]
    fn second_derivative_of_cubic() {
        assert_eq!(lambda1().derivative_n(2), Polynomial::x());
    }

    #[test]
    fn derivative_past_degree_is_zero() {
        assert_eq!(Polynomial::x().derivative_n(5), Polynomial::zero());
    }

    #[test]
    fn power_rule() {
        let p = Polynomial::monomial(Rational::one(), 2);
        assert_eq!(p.derivative(), Polynomial::monomial(rat_int(2), 1));
    }

    #[test]
    fn integral_of_x() {
        let p = Polynomial::x().integral();
        assert_eq!(p, Polynomial::monomial(rat(1, 2), 2));
        assert_eq!(Polynomial::zero().integral(), Polynomial::zero());
    }

    #[test]
    fn eval_boundary_values() {
        assert!(lambda1().eval(&Rational::one()).is_zero());
        assert!(Polynomial::x().eval(&Rational::zero()).is_zero());
        // x^5/120 - x^3/36 + 7x/360 vanishes at 1
        let l2 = Polynomial::from_coeffs(vec![
            rat_int(0),
            rat(7, 360),
            rat_int(0),
            rat(-1, 36),
            rat_int(0),
            rat(1, 120),
        ]);
        assert!(l2.eval(&Rational::one()).is_zero());
    }

    #[test]
    fn compose_affine_reflection() {
        // p(x) = x^2: p(1-x) = 1 - 2x + x^2
        let p = Polynomial::monomial(Rational::one(), 2);
        let q = p.reflect_unit();
        assert_eq!(
            q,
            Polynomial::from_coeffs(vec![rat_int(1), rat_int(-2), rat_int(1)])
        );
        // reflecting twice is the identity
        assert_eq!(q.reflect_unit(), p);
    }

    #[test]
    fn divide_by_x_shifts() {
        let p = Polynomial::from_coeffs(vec![rat_int(0), rat_int(3), rat(1, 2)]);
        let q = p.divide_by_x().unwrap();
        assert_eq!(q, Polynomial::from_coeffs(vec![rat_int(3), rat(1, 2)]));
        assert!(Polynomial::constant(rat_int(1)).divide_by_x().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(lambda1().to_string(), "1/6*x^3 - 1/6*x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::x().to_string(), "x");
    }
}
