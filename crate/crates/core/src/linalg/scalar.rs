//! Exact rational scalars and their text form.
//!
//! Scalars are [`BigRational`]s, which are always kept normalized
//! (positive denominator, numerator and denominator coprime, zero as `0/1`).

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Field element used throughout the crate.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses a rational literal of the form `p` or `p/q`.
///
/// The literal must already be in lowest terms with `q > 0`; `"2/4"`, `"1/-2"`
/// and `"0/3"` are rejected. No whitespace or leading `+` is accepted.
pub fn parse_rational(text: &str) -> Result<Scalar, Error> {
    let bad = |why: &str| Error::MalformedRational {
        text: text.to_string(),
        reason: why.to_string(),
    };
    let (num_txt, den_txt) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = parse_integer(num_txt).ok_or_else(|| bad("numerator is not an integer"))?;
    let den = match den_txt {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with('-') {
                return Err(bad("denominator must be positive"));
            }
            parse_integer(d).ok_or_else(|| bad("denominator is not an integer"))?
        }
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    if !num.gcd(&den).is_one() {
        return Err(bad("not in lowest terms"));
    }
    Ok(Scalar::new_raw(num, den))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text).ok()
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(x: &Scalar) -> String {
    x.to_string()
}

/// Exact square root, if `x` is the square of a rational.
pub fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}
