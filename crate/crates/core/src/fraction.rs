//! Exact reduced rationals.
//!
//! `Fraction` is a thin wrapper over an arbitrary-precision rational that
//! upholds two invariants at all times: the denominator is at least 1, and
//! numerator and denominator are coprime. All arithmetic stays exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number, always stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(BigRational);

impl Fraction {
    /// Builds `numerator / denominator`, reducing and normalizing the sign.
    ///
    /// Panics if `denominator` is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        let d: BigInt = denominator.into();
        assert!(!d.is_zero(), "fraction denominator must be nonzero");
        Fraction(BigRational::new(numerator.into(), d))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Fraction(BigRational::zero())
    }

    pub fn one() -> Self {
        Fraction(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fraction(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        Fraction(self.0.recip())
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    /// Sign of the value relative to zero.
    pub fn sign(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }

    /// Lossy conversion for display and audio work.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// View of the underlying arbitrary-precision rational.
    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Fraction(r)
    }

    /// Fixed-point decimal rendering with `dp` digits, rounded half away
    /// from zero. Exact: the digit string is derived by integer arithmetic.
    pub fn to_decimal_string(&self, dp: usize) -> String {
        let scale = BigInt::from(10u8).pow(dp as u32);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let rounded: BigInt = if scaled.is_negative() {
            -((-&scaled) + &half).floor().to_integer()
        } else {
            (&scaled + &half).floor().to_integer()
        };
        let negative = rounded.is_negative();
        let mag = rounded.magnitude().clone();
        let (int_part, frac_part) = mag.div_rem(&scale.magnitude().clone());
        let mut s = String::new();
        if negative && (!int_part.is_zero() || !frac_part.is_zero()) {
            s.push('-');
        }
        s.push_str(&int_part.to_string());
        if dp > 0 {
            s.push('.');
            let frac_str = frac_part.to_string();
            for _ in frac_str.len()..dp {
                s.push('0');
            }
            s.push_str(&frac_str);
        }
        s
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction({})", self)
    }
}

/// Failure to read a fraction from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ParseError: {0}")]
pub struct FractionParseError(pub String);

impl FromStr for Fraction {
    type Err = FractionParseError;

    /// Accepts `n` or `n/d` with optional leading sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FractionParseError(format!("not a fraction: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(FractionParseError(format!("zero denominator: {s:?}")));
                }
                Ok(Fraction::new(n, d))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Fraction::from_integer(n))
            }
        }
    }
}

impl Fraction {
    /// Parses a plain decimal literal like `60`, `2.5`, or `-0.25` exactly.
    pub fn from_decimal_str(s: &str) -> Result<Self, FractionParseError> {
        let s = s.trim();
        let bad = || FractionParseError(format!("not a decimal: {s:?}"));
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let denom = BigInt::from(10u8).pow(frac_part.len() as u32);
        Ok(Fraction::new(numer * sign, denom))
    }
}

macro_rules! fraction_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                Fraction((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Fraction> for &'a Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &'a Fraction) -> Fraction {
                Fraction((&self.0).$method(&rhs.0))
            }
        }
    };
}

fraction_binop!(Add, add);
fraction_binop!(Sub, sub);
fraction_binop!(Mul, mul);

impl Div for Fraction {
    type Output = Fraction;
    fn div(self, rhs: Fraction) -> Fraction {
        assert!(!rhs.is_zero(), "division by zero fraction");
        Fraction(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn div(self, rhs: &'a Fraction) -> Fraction {
        assert!(!rhs.is_zero(), "division by zero fraction");
        Fraction(&self.0 / &rhs.0)
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-&self.0)
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_integer(n)
    }
}

impl From<BigInt> for Fraction {
    fn from(n: BigInt) -> Self {
        Fraction::from_integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let f = Fraction::new(6, -9);
        assert_eq!(f.numerator(), &BigInt::from(-2));
        assert_eq!(f.denominator(), &BigInt::from(3));
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!("7/3".parse::<Fraction>().unwrap(), Fraction::new(7, 3));
        assert_eq!("-4".parse::<Fraction>().unwrap(), Fraction::from_integer(-4));
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("x".parse::<Fraction>().is_err());
    }

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(Fraction::from_decimal_str("2.5").unwrap(), Fraction::new(5, 2));
        assert_eq!(Fraction::from_decimal_str("60").unwrap(), Fraction::from_integer(60));
        assert_eq!(
            Fraction::from_decimal_str("-0.125").unwrap(),
            Fraction::new(-1, 8)
        );
        assert!(Fraction::from_decimal_str("1.2.3").is_err());
    }

    #[test]
    fn floor_rounds_toward_negative_infinity() {
        assert_eq!(Fraction::new(7, 3).floor(), BigInt::from(2));
        assert_eq!(Fraction::new(-7, 3).floor(), BigInt::from(-3));
    }

    #[test]
    fn decimal_string_rounds_half_away() {
        assert_eq!(Fraction::new(1, 2).to_decimal_string(0), "1");
        assert_eq!(Fraction::new(-1, 2).to_decimal_string(0), "-1");
        assert_eq!(Fraction::new(1, 3).to_decimal_string(10), "0.3333333333");
        assert_eq!(Fraction::new(2, 3).to_decimal_string(10), "0.6666666667");
        assert_eq!(Fraction::new(5, 4).to_decimal_string(1), "1.3");
        assert_eq!(Fraction::from_integer(3).to_decimal_string(10), "3.0000000000");
    }
}
