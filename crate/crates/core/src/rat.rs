//! Exact rational scalars and their wire format.
//!
//! Every bound, witness value, and certificate in this crate is a
//! `BigRational`; floating point only ever appears as a cross-check.
//! On the wire rationals are strings: `"27/5"`, or just `"3"` when the
//! denominator is 1.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_is_int(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Format as `num/den`, omitting the `/1` of integers.
pub fn rat_to_string(r: &Rat) -> String {
    if rat_is_int(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"a/b"` or `"a"`; the denominator must be nonzero.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let numer = BigInt::from_str(parts.next().ok_or_else(bad)?.trim()).map_err(|_| bad())?;
    let denom = match parts.next() {
        Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

pub fn rat_signum(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format_round_trip() {
        for (s, canonical) in [("27/5", "27/5"), ("3", "3"), ("6/2", "3"), ("-4/6", "-2/3")] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&r), canonical);
        }
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("abc").is_err());
        assert!(rat_from_str("").is_err());
    }

    #[test]
    fn helpers() {
        assert_eq!(rat_frac(27, 5), rat_from_str("27/5").unwrap());
        assert!(rat_is_int(&rat_int(7)));
        assert!(!rat_is_int(&rat_frac(1, 2)));
        assert_eq!(rat_signum(&rat_int(0)), 0);
        assert_eq!(rat_signum(&rat_frac(-1, 3)), -1);
    }
}
