//! Exact values of the form `sum c_e * pi^e` with rational `c_e`.
//!
//! A `PiNumber` is a finite map from integer pi-exponent to a nonzero
//! rational coefficient. Negative exponents are allowed (they occur in the
//! interpolants' low-order coefficients). A map supported only on exponent
//! zero is exactly a rational.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::traits::{One, Signed, Zero};

use crate::bigfloat::BigFloat;
use crate::error::Result;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Exact finite sum of rational multiples of integer powers of pi.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PiNumber {
    terms: BTreeMap<i64, Rational>,
}

impl PiNumber {
    pub fn zero() -> Self {
        PiNumber::default()
    }

    /// A single term `c * pi^exponent` (normalizes away a zero `c`).
    pub fn term(exponent: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        PiNumber { terms }
    }

    pub fn from_rational(c: Rational) -> Self {
        PiNumber::term(0, c)
    }

    /// `pi^exponent`.
    pub fn pi_power(exponent: i64) -> Self {
        PiNumber::term(exponent, Rational::one())
    }

    /// Exact value of `p(pi)` for a rational polynomial `p`.
    pub fn from_poly_at_pi(p: &Polynomial) -> Self {
        let mut out = PiNumber::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.insert(i as i64, c.clone());
        }
        out
    }

    fn insert(&mut self, exponent: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the value has no pi-dependence (support within exponent 0).
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// The exact rational value, when `is_rational()`.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.is_rational() {
            return None;
        }
        Some(
            self.terms
                .get(&0)
                .cloned()
                .unwrap_or_else(Rational::zero),
        )
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Scalar multiple by an exact rational.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PiNumber::zero();
        }
        PiNumber {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplication by `pi^shift` (exponent shift).
    pub fn mul_pi_power(&self, shift: i64) -> Self {
        PiNumber {
            terms: self.terms.iter().map(|(&e, v)| (e + shift, v.clone())).collect(),
        }
    }

    /// Exact product of two pi-numbers.
    pub fn mul(&self, rhs: &PiNumber) -> Self {
        let mut out = PiNumber::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Numeric value to `digits` decimal digits of working precision.
    ///
    /// Fails when `digits` exceeds the stored pi constant's precision.
    pub fn to_bigfloat(&self, digits: u32) -> Result<BigFloat> {
        let frac_bits = BigFloat::frac_bits_for_digits(digits);
        // Extra head-room while powers of pi are assembled.
        let work = frac_bits + 32;
        let pi = BigFloat::pi(work, digits)?;
        let mut acc = BigFloat::zero(work);
        for (e, c) in self.terms() {
            let p = pi.powi(e);
            acc = &acc + &p.mul(&BigFloat::from_rational(c, work));
        }
        Ok(acc.with_frac_bits(frac_bits))
    }
}

impl Add for &PiNumber {
    type Output = PiNumber;
    fn add(self, rhs: &PiNumber) -> PiNumber {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert(e, c.clone());
        }
        out
    }
}

impl Sub for &PiNumber {
    type Output = PiNumber;
    fn sub(self, rhs: &PiNumber) -> PiNumber {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert(e, -c);
        }
        out
    }
}

impl Neg for &PiNumber {
    type Output = PiNumber;
    fn neg(self) -> PiNumber {
        PiNumber {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for PiNumber {
    /// Canonical form, decreasing exponent: `1/6*pi^2 - 3 + 1/2*pi^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
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
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "pi")?;
                } else {
                    write!(f, "pi^{e}")?;
                }
            }
        }
        Ok(())
    }
}
