use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `ceil(t * n)` for a nonnegative rational `t`.
///
/// Panics if the result does not fit in a `u64`; exponents of that size are
/// far outside anything the rest of the library can process.
pub fn ceil_mul(t: &Rational, n: u64) -> u64 {
    debug_assert!(!t.is_negative());
    let num = t.numer() * BigInt::from(n);
    let q = num.div_ceil(t.denom());
    q.to_u64().expect("exponent overflow")
}

/// Parses `"a"` or `"a/b"` (optional leading sign, surrounding whitespace
/// ignored). Reports the column of the offending character on failure.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = |column: usize, message: &str| Error::Parse {
        line: 1,
        column,
        message: message.to_string(),
    };
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(err(1, "expected a rational number"));
    }
    let (num_txt, den_txt, slash) = match body.find('/') {
        Some(i) => (&body[..i], Some(&body[i + 1..]), i),
        None => (body, None, body.len()),
    };
    let parse_int = |s: &str, offset: usize| -> Result<BigInt> {
        let trimmed = s.trim();
        let digits = trimmed.strip_prefix(['-', '+']).unwrap_or(trimmed);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            let bad = s
                .char_indices()
                .find(|(_, c)| !c.is_ascii_digit() && !c.is_whitespace() && *c != '-' && *c != '+')
                .map(|(i, _)| i)
                .unwrap_or(0);
            return Err(err(lead + offset + bad + 1, "expected an integer"));
        }
        trimmed
            .parse::<BigInt>()
            .map_err(|_| err(lead + offset + 1, "expected an integer"))
    };
    let num = parse_int(num_txt, 0)?;
    let den = match den_txt {
        Some(d) => parse_int(d, slash + 1)?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(err(lead + slash + 2, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}
