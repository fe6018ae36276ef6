//! Exact rational scalars.
//!
//! Every quantity in this crate is a `Rational` (arbitrary-precision,
//! always in lowest terms with positive denominator). There is no floating
//! point anywhere; all identities hold bit-exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    pub input: String,
}

impl std::fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid rational literal `{}`", self.input)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `"42"`, `"-3/4"` or a decimal string like `"0.25"` into an exact
/// rational. Decimal strings are converted without rounding (`0.1` becomes
/// exactly 1/10).
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    let err = || ParseRationalError {
        input: text.to_string(),
    };
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.strip_prefix(['-', '+']).unwrap_or(int_part);
        if !int_digits.chars().all(|c| c.is_ascii_digit()) || int_digits.is_empty() {
            return Err(err());
        }
        let joined = format!("{int_digits}{frac_part}");
        let num: BigInt = joined.parse().map_err(|_| err())?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let value = BigRational::new(num, den);
        return Ok(if negative { -value } else { value });
    }
    let num: BigInt = s.parse().map_err(|_| err())?;
    Ok(BigRational::from_integer(num))
}

/// Formats a rational as `p` when integral and `p/q` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// True when every entry is strictly positive.
pub fn all_positive(values: &[Rational]) -> bool {
    values.iter().all(|v| v.is_positive())
}
