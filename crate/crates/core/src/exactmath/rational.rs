use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest double (`NaN` only if the value is out of `f64` range).
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"7"`, `"-5/2"` or a plain decimal such as `"2.75"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
