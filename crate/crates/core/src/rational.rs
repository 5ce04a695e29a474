//! Exact rational scalars and small combinatorial helpers.
//!
//! `Rational` is the coefficient field for everything symbolic in this
//! crate. It is backed by `num`'s `BigRational`, which keeps values in
//! lowest terms with a positive denominator and performs exact (never
//! rounding) arithmetic.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Arbitrary-precision exact fraction, always in lowest terms.
pub type Rational = BigRational;

/// Shorthand for a rational from small numerator and denominator.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer (0 when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rising factorial `x (x+1) ... (x+len-1)` as a big integer.
pub fn rising_factorial(x: u64, len: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..len {
        acc *= x + i;
    }
    acc
}

/// True iff `|a - b| <= tol`. All three exact rationals.
pub fn within(a: &Rational, b: &Rational, tol: &Rational) -> bool {
    (a - b).abs() <= *tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &BigInt::zero());
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn binomial_row_five() {
        let row: Vec<BigInt> = (0..=5).map(|k| binomial(5, k)).collect();
        let expected: Vec<BigInt> = [1, 5, 10, 10, 5, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(row, expected);
        assert_eq!(binomial(4, 7), BigInt::zero());
    }

    #[test]
    fn rising_factorial_matches_products() {
        assert_eq!(rising_factorial(2, 3), BigInt::from(2 * 3 * 4));
        assert_eq!(rising_factorial(7, 1), BigInt::from(7));
        assert_eq!(rising_factorial(3, 0), BigInt::from(1));
    }
}
