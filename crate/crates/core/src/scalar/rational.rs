//! Exact rationals over arbitrary-precision integers.
//!
//! `BigRational` keeps itself in lowest terms with a positive denominator, so
//! structural equality is value equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

/// Parses `p` or `p/q` (optional sign, decimal digits). `offset` is the column
/// of the first byte, used in error positions.
pub fn parse_rational(text: &str, offset: usize) -> Result<Rational> {
    let err = |message: &str| Error::Parse {
        column: offset + 1,
        message: format!("{message}: {text:?}"),
    };
    let t = text.trim();
    if t.is_empty() {
        return Err(err("empty rational"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let valid_int = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(err("invalid numerator"));
    }
    let numer: BigInt = num
        .trim_start_matches('+')
        .parse()
        .map_err(|_| err("invalid numerator"))?;
    let denom = match den {
        Some(d) => {
            if !valid_int(d, false) {
                return Err(err("invalid denominator"));
            }
            let d: BigInt = d.parse().map_err(|_| err("invalid denominator"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("6/4", 0).unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-3", 0).unwrap(), rat(-3));
        assert_eq!(parse_rational(" +2/ 6", 0).unwrap(), ratio(1, 3));
        assert_eq!(ratio(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0", 0).is_err());
        assert!(parse_rational("1.5", 0).is_err());
        assert!(parse_rational("", 0).is_err());
        assert!(parse_rational("2/-3", 0).is_err());
    }
}
