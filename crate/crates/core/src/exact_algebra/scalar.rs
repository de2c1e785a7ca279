//! Exact rational scalars.
//!
//! `Scalar` is a reduced big rational with positive denominator, so `==` is
//! equality of canonical forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d`; panics on a zero denominator (programming error, not data error).
pub fn rat(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "rat: zero denominator");
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Integer power with negative exponents allowed for nonzero bases.
pub fn pow(x: &Scalar, e: i64) -> Scalar {
    if e == 0 {
        return Scalar::one();
    }
    let base = if e < 0 {
        assert!(!x.is_zero(), "pow: zero to a negative power");
        x.recip()
    } else {
        x.clone()
    };
    let mut k = e.unsigned_abs();
    let mut acc = Scalar::one();
    let mut sq = base;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &sq;
        }
        k >>= 1;
        if k > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

pub fn inv(x: &Scalar) -> Result<Scalar> {
    if x.is_zero() {
        Err(Error::DivisionByZero("reciprocal of zero".into()))
    } else {
        Ok(x.recip())
    }
}

pub fn div(x: &Scalar, y: &Scalar) -> Result<Scalar> {
    Ok(x * inv(y)?)
}

/// Exact square root when `x` is the square of a rational.
pub fn sqrt_exact(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}

/// `"num/den"`, always with an explicit denominator.
pub fn format_rational(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `p`, `p/q`, and finite decimals such as `-0.25`.
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Scalar::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = whole.starts_with('-');
        let whole: BigInt = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let frac_n: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Scalar::new(whole * &scale + frac_n, scale);
        return Ok(if neg { -mag } else { mag });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Scalar::from_integer(n))
}

pub fn to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -3), rat(-1, 3));
        assert!(rat(1, -3).denom() > &BigInt::zero());
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&rat(1, 2), 3), rat(1, 8));
        assert_eq!(pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow(&rat(-5, 7), 0), int(1));
    }

    #[test]
    fn parsing_and_formatting() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational(" -2 ").unwrap(), int(-2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_exact(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(sqrt_exact(&rat(1, 2)), None);
        assert_eq!(sqrt_exact(&rat(-1, 4)), None);
    }
}
