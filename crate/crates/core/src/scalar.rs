//! Exact rational scalars and their text form.
//!
//! All matrix algebra in this crate runs on arbitrary-precision rationals so
//! that no result is ever rounded. Values serialize as plain strings, `"3"`
//! or `"-3/2"`, which keeps reports readable and round-trippable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced fraction `num/den`; `den` must be nonzero.
pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise (q > 0, reduced).
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Inverse of [`format_scalar`]; also accepts unreduced fractions.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = |reason: &str| Error::Parse {
        token: text.to_string(),
        reason: reason.to_string(),
    };
    let parse_int = |part: &str| -> Result<BigInt> {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| bad("expected an integer"))
    };
    match text.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Scalar::new(parse_int(num)?, den))
        }
    }
}
