//! Exact rational scalars.
//!
//! The base field is the rationals with arbitrary-precision integers;
//! [`num::BigRational`] already keeps values in lowest terms with a
//! positive denominator, which is exactly the invariant we need.

use num::{BigInt, BigRational, One, Zero};

pub type Scalar = BigRational;

/// Integer as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact fraction `p/q`; panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Strict parse of `"p"` or `"p/q"`; rejects zero denominators.
pub fn parse(s: &str) -> Result<Scalar, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| format!("invalid numerator in `{s}`"))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| format!("invalid denominator in `{s}`"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_roundtrip() {
        assert_eq!(parse("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse("-6/8").unwrap(), frac(-3, 4));
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn reciprocal_product_is_one() {
        let a = frac(22, 7);
        assert_eq!(&a * frac(7, 22), one());
    }
}
