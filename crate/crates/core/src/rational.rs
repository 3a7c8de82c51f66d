//! Exact rationals for ε, θ and probability weights.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `p/q` or a bare integer. Decimal and floating-point forms are
/// rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let parse_int = |s: &str, offset: usize| -> Result<BigInt> {
        s.parse::<BigInt>()
            .map_err(|_| Error::parse(offset, format!("'{s}' is not an integer")))
    };
    let p = parse_int(num, 0)?;
    let q = parse_int(den, num.len() + 1)?;
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(p, q))
}

pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub(crate) fn is_strictly_between_zero_and_one(r: &Rational) -> bool {
    r.is_positive() && *r < Rational::one()
}
