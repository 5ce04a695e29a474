//! The compiled-in pi constant.
//!
//! Pi is supplied as a fixed decimal constant with 320 fractional digits;
//! every numeric conversion in the crate draws from it. The environment
//! variable `LIDZETA_PI_DIGITS` may cap the usable precision (useful for
//! exercising the precision-exceeded error paths).

use std::sync::OnceLock;

use num::bigint::BigInt;
use num::traits::pow::Pow;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// 320 fractional digits of pi, truncated (not rounded).
const PI_DIGITS: &str = "3\
14159265358979323846264338327950288419716939937510\
58209749445923078164062862089986280348253421170679\
82148086513282306647093844609550582231725359408128\
48111745028410270193852110555964462294895493038196\
44288109756659334461284756482337867831652712019091\
45648566923460348610454326648213393607260249141273\
7245870066063155881748815209209628292540917153643678";

/// Fractional decimal digits stored in `PI_DIGITS`.
pub const PI_STORED_DIGITS: u32 = 320;

/// log2(10), rounded up a hair so bit budgets err on the generous side.
pub(crate) const LOG2_10: f64 = 3.321928094887363;

/// Usable fractional digits: the stored 320 unless `LIDZETA_PI_DIGITS`
/// lowers it.
pub fn pi_available_digits() -> u32 {
    static CAP: OnceLock<u32> = OnceLock::new();
    *CAP.get_or_init(|| {
        match std::env::var("LIDZETA_PI_DIGITS") {
            Ok(v) => match v.trim().parse::<u32>() {
                Ok(d) => d.clamp(1, PI_STORED_DIGITS),
                Err(_) => PI_STORED_DIGITS,
            },
            Err(_) => PI_STORED_DIGITS,
        }
    })
}

/// Binary precision supported by the (possibly capped) constant.
pub(crate) fn pi_available_bits() -> u32 {
    (pi_available_digits() as f64 * LOG2_10).floor() as u32
}

/// Exact rational reading of the capped constant: an integer over a power
/// of ten, within `10^-cap` of pi.
pub fn pi_rational() -> &'static Rational {
    static PI_Q: OnceLock<Rational> = OnceLock::new();
    PI_Q.get_or_init(|| {
        let cap = pi_available_digits() as usize;
        let digits = &PI_DIGITS[..=cap];
        let numer: BigInt = digits.parse().expect("compiled-in pi digits are decimal");
        Rational::new(numer, BigInt::from(10u32).pow(cap))
    })
}

/// Exact rational bracket `[lo, hi]` containing pi, one last-digit unit wide.
pub fn pi_rational_bracket() -> (Rational, Rational) {
    let lo = pi_rational().clone();
    let ulp = Rational::new(
        BigInt::from(1),
        BigInt::from(10u32).pow(pi_available_digits() as usize),
    );
    let hi = &lo + ulp;
    (lo, hi)
}

/// Checks that a request for `digits` decimal digits plus `extra_bits` of
/// internal head-room fits inside the stored constant.
pub(crate) fn ensure_digits_supported(digits: u32, extra_bits: u32) -> Result<()> {
    if digits == 0 {
        return Err(Error::ZeroOrder { what: "digits" });
    }
    let needed = (digits as f64 * LOG2_10).ceil() as u32 + extra_bits;
    if needed > pi_available_bits() {
        return Err(Error::PiPrecisionExceeded {
            requested: digits,
            available: pi_available_digits(),
        });
    }
    Ok(())
}
