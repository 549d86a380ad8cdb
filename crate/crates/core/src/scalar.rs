//! Exact rational scalars.
//!
//! Scalars are arbitrary-precision rationals kept in canonical form
//! (positive denominator, coprime to the numerator). Equality is exact;
//! there is no floating-point mode. The wire format is `"p/q"`, or `"p"`
//! when the denominator is 1, which is exactly how [`Rat`] displays and
//! parses.

use crate::error::{Error, Result};
use crate::ring::Field;
use num::{BigInt, BigRational, Zero};
use std::str::FromStr;

/// Canonical exact scalar.
pub type Rat = BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Rational `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `v` as a scalar.
pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Multiplicative inverse, rejecting zero.
pub fn checked_inv<T: Field>(a: &T) -> Result<T> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(T::one() / a.clone())
}

/// Exact quotient `a / b`, rejecting division by zero.
pub fn checked_div<T: Field>(a: &T, b: &T) -> Result<T> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a.clone() / b.clone())
}

/// Parse the wire form `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("bad rational {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let numer = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let denom = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(numer, denom))
        }
        None => Ok(Rat::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

/// Render in wire form.
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}
