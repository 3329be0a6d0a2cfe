//! Exact integer, rational and real-quadratic-surd arithmetic.
//!
//! Every theorem check in the crate reduces to exact sign tests on values
//! built here. Floating point only appears in [`render_decimal`] output and
//! in the numeric measure integration.

mod interval;
mod surd;

pub use interval::{surd_to_interval, RatInterval};
pub use surd::{surd_arith, QuadSurd, SurdOp};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds the canonical representative of `num/den`.
pub fn rat_canonical(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num.into(), den))
}

/// Shorthand for small literal fractions; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `Some(s)` with `s*s == n` when `n` is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Exact square root of a nonnegative rational, if it is itself rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    let n = exact_isqrt(x.numer())?;
    let d = exact_isqrt(x.denom())?;
    Some(Rational::new(n, d))
}

/// Floor of a rational as an integer.
pub fn rat_floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn pow10(exp: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

fn round_half_even(x: &Rational) -> BigInt {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    let twice: BigInt = &r * 2;
    match twice.cmp(x.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    }
}

/// Display-only decimal rendering with `sig` significant digits, rounding
/// half to even. Exact values are never parsed back from this.
pub fn render_decimal(x: &Rational, sig: usize) -> String {
    assert!(sig >= 1, "need at least one significant digit");
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let a = x.abs();
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }
    let mut n = round_half_even(&(&a * pow10(sig as i64 - 1 - e)));
    if n == num_traits::pow(BigInt::from(10), sig) {
        n /= 10;
        e += 1;
    }
    let digits = n.to_string();
    let body = if (-7..21).contains(&e) {
        if e >= 0 {
            let int_len = e as usize + 1;
            if int_len >= digits.len() {
                format!("{}{}", digits, "0".repeat(int_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
        }
    } else if digits.len() > 1 {
        format!("{}.{}e{}", &digits[..1], &digits[1..], e)
    } else {
        format!("{}e{}", digits, e)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Fractions rendered as `["num", "den"]` string pairs.
pub fn frac_strings(x: &Rational) -> [String; 2] {
    [x.numer().to_string(), x.denom().to_string()]
}

pub fn parse_frac_strings(pair: &[String; 2]) -> Result<Rational> {
    let n: BigInt = pair[0].parse().map_err(|_| Error::Parse(pair[0].clone()))?;
    let d: BigInt = pair[1].parse().map_err(|_| Error::Parse(pair[1].clone()))?;
    rat_canonical(n, d)
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            rat_canonical(n, d)
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| Error::Parse(s.to_string()))?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Serde adapter for [`Rational`] fields as `["num","den"]`.
pub mod serde_frac {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&frac_strings(x), s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let pair = <[String; 2]>::deserialize(d)?;
        parse_frac_strings(&pair).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_reduction() {
        assert_eq!(rat_canonical(4, 6).unwrap(), rat(2, 3));
        let r = rat_canonical(-3, -9).unwrap();
        assert_eq!((r.numer().clone(), r.denom().clone()), (BigInt::from(1), BigInt::from(3)));
        let r = rat_canonical(201, 20201).unwrap();
        assert_eq!(r.numer(), &BigInt::from(201));
        assert_eq!(r.denom(), &BigInt::from(20201));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(rat_canonical(1, 0), Err(Error::DivisionByZero));
        assert_eq!(Error::DivisionByZero.to_string(), "division by zero");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(render_decimal(&rat(10100, 20201), 7), "0.4999752");
        assert_eq!(render_decimal(&rat(201, 20201), 7), "0.009950002");
        assert_eq!(render_decimal(&rat(1, 2), 10), "0.5000000000");
        assert_eq!(render_decimal(&rat(-3, 2), 3), "-1.50");
        assert_eq!(render_decimal(&int(123), 2), "120");
        assert_eq!(render_decimal(&rat(1, 3), 1), "0.3");
        assert_eq!(render_decimal(&rat(96, 100), 1), "1");
        assert_eq!(render_decimal(&rat(1, 1_000_000_000), 2), "1.0e-9");
        // ties go to even
        assert_eq!(render_decimal(&rat(25, 100), 1), "0.2");
        assert_eq!(render_decimal(&rat(35, 100), 1), "0.4");
        assert_eq!(render_decimal(&Rational::zero(), 5), "0");
    }

    #[test]
    fn sqrt_helpers() {
        assert_eq!(rational_sqrt(&rat(40401, 408080401)), Some(rat(201, 20201)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(exact_isqrt(&BigInt::from(-4)), None);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational(" 4/6 ").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
    }

    proptest! {
        #[test]
        fn canonical_is_idempotent_and_order_preserving(
            a in -10_000i64..10_000, b in 1i64..10_000, c in -10_000i64..10_000, d in 1i64..10_000,
        ) {
            let x = rat_canonical(a, b).unwrap();
            let again = rat_canonical(x.numer().clone(), x.denom().clone()).unwrap();
            prop_assert_eq!(&again, &x);
            prop_assert_eq!(x.numer().gcd(x.denom()), BigInt::one());
            let y = rat_canonical(c, d).unwrap();
            // cross-multiplication order
            prop_assert_eq!(x.cmp(&y), (a as i128 * d as i128).cmp(&(c as i128 * b as i128)));
        }
    }
}
