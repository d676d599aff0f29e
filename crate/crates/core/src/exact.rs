//! Exact-arithmetic helpers shared by the geometry and number-theory modules.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Square root of `n` if `n` is a perfect square.
pub fn exact_isqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of a nonnegative rational if both reduced numerator and
/// denominator are perfect squares.
pub fn exact_rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().to_biguint()?;
    let den = q.denom().to_biguint()?;
    let rn = exact_isqrt(&num)?;
    let rd = exact_isqrt(&den)?;
    Some(BigRational::new(BigInt::from(rn), BigInt::from(rd)))
}

/// Nearest `f64` to a rational, without overflowing on large numerators
/// and denominators.
pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_zero() {
            0.0
        } else if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// The exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub fn biguint(q: &BigInt) -> Option<BigUint> {
    match q.sign() {
        Sign::Minus => None,
        _ => q.to_biguint(),
    }
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"2.75"` or
/// `"-1.5e-3"` into an exact rational.
pub fn parse_rational(input: &str) -> Result<BigRational> {
    let err = || Error::Parse {
        what: "rational number",
        input: input.to_string(),
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| err())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| err())?;
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u8);
    let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
    let mut value = if scale >= 0 {
        BigRational::from_integer(all * pow)
    } else {
        BigRational::new(all, pow)
    };
    if negative {
        value = -value;
    }
    Ok(value)
}
