//! Exact rationals and their text forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseError;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_from_big(n: impl Into<BigInt>) -> Q {
    Q::from_integer(n.into())
}

/// `num/den`, or just `num` for integers.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(text: &str) -> Result<Q, ParseError> {
    let t = text.trim();
    let bad = || ParseError::new(format!("bad rational `{text}`"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ParseError::new(format!("zero denominator in `{text}`")));
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Binomial coefficient `C(n, k)` for a possibly negative integer `n`.
pub fn binomial(n: i64, k: u32) -> Q {
    let mut acc = Q::one();
    for i in 0..k as i64 {
        acc = acc * q(n - i) / q(i + 1);
    }
    acc
}
