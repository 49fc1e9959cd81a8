//! Exact rational scalars.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly. Text form is `"p/q"`, or `"p"` when
//! the denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for building small constants.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty string".into());
    }
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("`{trimmed}` is not of the form p or p/q"))?;
    let den: BigInt = den.parse().map_err(|_| format!("`{trimmed}` is not of the form p or p/q"))?;
    if den.is_zero() {
        return Err(format!("`{trimmed}` has a zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Parse with the failing field named in the error.
pub fn parse_field(field: &str, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|message| Error::Parse { field: field.to_string(), message })
}

pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Sign as -1, 0 or 1.
pub fn sign(value: &Rational) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}

/// `(-1)^k` as a rational.
pub fn minus_one_pow(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Least common multiple of the denominators; used to clear fractions
/// before integer elimination.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational(" 7 / -14 ").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(8, 4)), "2");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn reciprocal_round_trip() {
        for (p, q) in [(3, 7), (-5, 2), (100, 99)] {
            let a = rat(p, q);
            assert_eq!(&a * a.recip(), Rational::one());
        }
    }
}
