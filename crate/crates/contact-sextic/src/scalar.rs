//! Exact rational scalars.
//!
//! `Scalar` is an arbitrary-precision rational, always in lowest terms with a
//! positive denominator (maintained by `BigRational` itself). Text form is
//! `p` or `p/q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of leading digits for huge values
        let n = s.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = s.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Exact conversion of a finite float into a rational.
pub fn from_f64(v: f64) -> Result<Scalar> {
    BigRational::from_float(v).ok_or_else(|| Error::Invalid(format!("non-finite float {v}")))
}

/// Formats as `p` or `p/q`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p` or `p/q` with optional sign and surrounding whitespace.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {den:?}")))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Integer power with negative exponents allowed for nonzero bases.
pub fn pow(s: &Scalar, e: i64) -> Result<Scalar> {
    if e >= 0 {
        Ok(num_traits::pow::pow(s.clone(), e as usize))
    } else if s.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(num_traits::pow::pow(s.clone(), (-e) as usize).recip())
    }
}

/// Nearby rational with denominator bounded by `max_den`, by continued fractions.
pub fn rationalize(v: f64, max_den: u64) -> Option<Scalar> {
    if !v.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let mut x = v.abs();
    for _ in 0..64 {
        let a = x.floor();
        let ai = BigInt::from(a as i128);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > BigInt::from(max_den) {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = x - a;
        if frac.abs() < 1e-15 {
            break;
        }
        x = 1.0 / frac;
    }
    if q1.is_zero() {
        return None;
    }
    let mut r = BigRational::new(p1, q1);
    if v < 0.0 {
        r = -r;
    }
    Some(r)
}
