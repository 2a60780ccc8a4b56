//! Exact rational exponents.
//!
//! All geometry in this crate is carried out over [`ExactRational`], an
//! arbitrary-precision fraction that is always kept in lowest terms with a
//! positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactRational = BigRational;

/// Parses `"p/q"`, an integer, or a decimal literal such as `"1.5"` or
/// `"-0.25"`. Decimals are converted exactly (`"1.5"` is `3/2`).
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let s = text.trim();
    let bad = || Error::ParseRational(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = parse_int(num.trim()).ok_or_else(bad)?;
        let den: BigInt = parse_int(den.trim()).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(whole) || !all_digits(frac) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    let value = BigRational::new(num, den);
    Ok(if negative { -value } else { value })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let body = s
        .strip_prefix('-')
        .or_else(|| s.strip_prefix('+'))
        .unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Renders `r` as `"p/q"`, including integers (`"2/1"`).
pub fn format_pq(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Renders `r` as `"p/q"`, or as a bare integer when the denominator is 1.
pub fn format_short(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format_pq(r)
    }
}

pub fn from_int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn from_u64(n: u64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> ExactRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn ceil_i64(r: &ExactRational) -> Result<i64> {
    r.ceil().to_integer().to_i64().ok_or(Error::Overflow)
}

pub fn floor_i64(r: &ExactRational) -> Result<i64> {
    r.floor().to_integer().to_i64().ok_or(Error::Overflow)
}

/// Smallest integer strictly greater than `u`.
pub fn next_integer(u: &ExactRational) -> BigInt {
    u.floor().to_integer() + 1
}

pub fn ensure_nonnegative(r: &ExactRational) -> Result<()> {
    if r.is_negative() {
        Err(Error::NegativeExponent(format_short(r)))
    } else {
        Ok(())
    }
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a ExactRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
