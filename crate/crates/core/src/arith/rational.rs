//! Scalar types and the handful of exact helpers every formula leans on.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Arbitrary-precision natural number.
pub type BigNat = BigUint;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn nat(v: &BigNat) -> Rational {
    Rational::from_integer(BigInt::from(v.clone()))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or `p`, optional leading minus, no whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses a decimal natural number of any length.
pub fn parse_nat(s: &str) -> Result<BigNat> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseNatural(s.to_string()));
    }
    s.parse().map_err(|_| Error::ParseNatural(s.to_string()))
}

/// Exact quotient; a zero divisor is an error rather than a panic.
pub fn checked_div(x: &Rational, y: &Rational) -> Result<Rational> {
    if y.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(x / y)
    }
}

/// `x^e` for a non-negative exponent, with `0^0 = 1`.
pub fn pow(x: &Rational, e: u64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let e32 = u32::try_from(e).expect("exponent exceeds u32");
    // numerator and denominator stay coprime under powers
    Rational::new_raw(x.numer().pow(e32), x.denom().pow(e32))
}

/// `x^e` for a signed exponent. Panics on `0^e` with `e < 0`.
pub fn powi(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        pow(x, e as u64)
    } else {
        assert!(!x.is_zero(), "zero raised to a negative power");
        pow(&x.recip(), e.unsigned_abs())
    }
}

/// `k^d` for natural `k` with `0^0 = 1`.
pub fn pow_nat(k: u64, d: u32) -> Rational {
    Rational::from_integer(BigInt::from(k).pow(d))
}

/// Exact `2^e` for any signed `e`.
pub fn pow2(e: i64) -> Rational {
    let big = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(big)
    } else {
        Rational::new_raw(BigInt::one(), big)
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`. Negative `n` is rejected.
pub fn binomial(n: i64, k: i64) -> Result<BigNat> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    if k < 0 || k > n {
        return Ok(BigNat::zero());
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigNat::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}

/// Binomial as a rational; the upper index is always non-negative at call sites.
pub(crate) fn binom(n: i64, k: i64) -> Rational {
    nat(&binomial(n, k).expect("negative upper index"))
}

/// Floor of a rational as a big integer.
pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `Some(j)` when the positive integer `v` equals `2^j`.
pub fn log2_exact(v: &BigInt) -> Option<u64> {
    if v.sign() != Sign::Plus {
        return None;
    }
    let tz = v.trailing_zeros()?;
    (v.magnitude().count_ones() == 1).then_some(tz)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2).unwrap(), BigNat::from(6u32));
        assert_eq!(binomial(3, -1).unwrap(), BigNat::zero());
        assert_eq!(binomial(5, 5).unwrap(), BigNat::one());
        assert_eq!(binomial(2, 3).unwrap(), BigNat::zero());
        assert_eq!(binomial(-1, 0), Err(Error::NegativeBinomial(-1)));
    }

    #[test]
    fn binomial_pascal_rows() {
        for n in 1..40i64 {
            for k in 1..n {
                let lhs = binomial(n, k).unwrap();
                let rhs = binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap();
                assert_eq!(lhs, rhs, "C({n},{k})");
            }
        }
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(format_rational(&ratio(4, -6)), "-2/3");
        assert_eq!(format_rational(&int(-7)), "-7");
        for bad in ["", "-", "1/0", " 1", "1 ", "+1", "1/-2", "1.5", "a", "1/", "/2", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
        assert!(parse_nat("0012").is_ok());
        assert!(parse_nat("-1").is_err());
        assert!(parse_nat("").is_err());
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(pow(&int(0), 0), int(1));
        assert_eq!(pow_nat(0, 0), int(1));
        assert_eq!(pow_nat(0, 1), int(0));
        assert_eq!(powi(&ratio(2, 3), -2), ratio(9, 4));
        assert_eq!(powi(&ratio(-2, 3), 3), ratio(-8, 27));
        assert_eq!(pow2(-3), ratio(1, 8));
        assert_eq!(pow2(5), int(32));
    }

    #[test]
    fn exact_powers_of_two() {
        assert_eq!(log2_exact(&BigInt::from(1)), Some(0));
        assert_eq!(log2_exact(&BigInt::from(64)), Some(6));
        assert_eq!(log2_exact(&BigInt::from(12)), None);
        assert_eq!(log2_exact(&BigInt::from(-4)), None);
        assert_eq!(log2_exact(&BigInt::from(0)), None);
    }

    #[test]
    fn division_by_zero_is_rejected_at_parse() {
        assert!(matches!(parse_rational("5/0"), Err(Error::ParseRational(_))));
    }

    #[test]
    fn checked_division() {
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&int(3), &int(6)).unwrap(), ratio(1, 2));
    }

    #[test]
    fn floors() {
        assert_eq!(floor(&ratio(7, 2)), BigInt::from(3));
        assert_eq!(floor(&ratio(-7, 2)), BigInt::from(-4));
    }
}
