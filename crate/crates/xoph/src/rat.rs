//! Exact rational scalars.
//!
//! Coefficients throughout the crate are arbitrary-precision rationals kept
//! in reduced form with a positive denominator, which `BigRational`
//! guarantees by construction.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::Error;

/// Reduced arbitrary-precision rational: `gcd(|num|, den) = 1`, `den > 0`.
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// The fraction `p/q`, reduced.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient as a rational scalar.
pub fn binom(n: u32, k: u32) -> Rat {
    Rat::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// `2^j` as a rational scalar.
pub fn pow2(j: u32) -> Rat {
    Rat::from_integer(BigInt::one() << j)
}

/// Parses `"p"` or `"p/q"` with optional sign.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Plain text form: `"p"` when integral, `"p/q"` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// LaTeX form: `\frac{p}{q}` for proper fractions, with the sign pulled out.
pub fn latex_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}
