//! Exact rational scalars.
//!
//! Every decision procedure in this crate runs on [`Rational`], an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. Parsing accepts integers, `a/b` fractions and finite
//! decimals; decimals are converted exactly (`0.25` becomes `1/4`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses one scalar token. Returns `None` on anything that is not an
/// integer, an `a/b` fraction with nonzero `b`, or a finite decimal.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let token = token.trim();
    if token.is_empty() {
        return None;
    }
    if let Some((num, den)) = token.split_once('/') {
        let num = parse_integer(num)?;
        let den = parse_unsigned(den)?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    let (negative, body) = match token.as_bytes()[0] {
        b'-' => (true, &token[1..]),
        b'+' => (false, &token[1..]),
        _ => (false, token),
    };
    let value = match body.split_once('.') {
        Some((whole, frac)) => {
            if whole.is_empty() && frac.is_empty() {
                return None;
            }
            let whole = if whole.is_empty() {
                BigInt::zero()
            } else {
                parse_unsigned(whole)?
            };
            let frac_digits = if frac.is_empty() {
                BigInt::zero()
            } else {
                parse_unsigned(frac)?
            };
            let scale = num_traits::pow(BigInt::from(10u32), frac.len());
            Rational::new(whole * &scale + frac_digits, scale)
        }
        None => Rational::from_integer(parse_unsigned(body)?),
    };
    Some(if negative { -value } else { value })
}

fn parse_unsigned(digits: &str) -> Option<BigInt> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn parse_integer(text: &str) -> Option<BigInt> {
    match text.as_bytes().first()? {
        b'-' => parse_unsigned(&text[1..]).map(|v| -v),
        b'+' => parse_unsigned(&text[1..]),
        _ => parse_unsigned(text),
    }
}

/// Sum of a slice of rationals.
pub fn sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .fold(Rational::zero(), |acc, v| acc + v)
}
