//! Helpers around `num_rational::BigRational`: robust float conversion
//! and the display roundings used by the report tables.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational used for all product accumulation. Always in lowest
/// terms with a positive denominator (`BigRational` maintains both).
pub type ExactRatio = BigRational;

pub fn ratio(num: i64, den: i64) -> ExactRatio {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Convert to f64 without overflowing huge numerators/denominators.
/// Both sides are truncated to ~80 significant bits first, so the
/// relative error is well below 2^-50.
pub fn to_f64(r: &ExactRatio) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let shift = num.bits().max(den.bits()) as i64 - 80;
    if shift > 0 {
        num >>= shift;
        den >>= shift;
    }
    let n = num.to_f64().expect("fits after shift");
    let d = den.to_f64().expect("fits after shift");
    n / d
}

/// Round to the nearest integer, ties away from zero.
pub fn round_half_away(r: &ExactRatio) -> BigInt {
    let two = BigInt::from(2);
    let num = r.numer();
    let den = r.denom();
    let doubled = num.abs() * &two + den;
    let q = doubled / (den * &two);
    if num.sign() == Sign::Minus {
        -q
    } else {
        q
    }
}

/// Render as a percentage with exactly two decimals, rounding half away
/// from zero (e.g. 3/7 -> "42.86%").
pub fn percent_2dp(r: &ExactRatio) -> String {
    let scaled = r * BigInt::from(10_000);
    let p = round_half_away(&scaled);
    let hundred = BigInt::from(100);
    let whole = &p / &hundred;
    let frac = (&p % &hundred).abs();
    format!("{whole}.{frac:02}%")
}
