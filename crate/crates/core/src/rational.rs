//! Exact rational scalars and their `"p/q"` string form.
//!
//! Every length, measure and coordinate in this crate is a
//! [`Rational`] (arbitrary-precision, always in lowest terms with a
//! positive denominator). Strings use `"p/q"`, or just `"p"` when the
//! denominator is 1, on both input and output.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parse `"p"` or `"p/q"` into a reduced rational with positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let mut parts = s.splitn(2, '/');
    let numer = parts.next().unwrap();
    let numer: BigInt = numer
        .parse()
        .map_err(|_| RationalParseError::Invalid(s.to_string()))?;
    match parts.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d
                .parse()
                .map_err(|_| RationalParseError::Invalid(s.to_string()))?;
            if denom.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Render as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Shorthand constructor, mostly for tests and fixtures.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest `f64`; rationals here stay far from overflow in practice.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of lossy conversions for huge terms.
        let n = r.numer().to_f64().unwrap_or(f64::MAX * r.numer().signum().to_f64().unwrap());
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3", "1/3", "-7/12", "2"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_reduces_and_fixes_sign() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&parse_rational("-4/2").unwrap()), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.5").is_err());
    }
}
