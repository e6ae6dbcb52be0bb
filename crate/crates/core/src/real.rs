//! Real values with an exact-evaluation contract.
//!
//! Continued-fraction expansion and best-approximant enumeration need to
//! decide comparisons with certainty. Three representations support that:
//! exact fractions, exact golden-field values, and high-precision decimals
//! carried as rational intervals. A decimal input admits only the decisions
//! its stated precision certifies; anything else raises
//! [`PrecisionExhausted`] instead of guessing.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::fraction::{Fraction, FractionParseError};
use crate::golden::GoldenReal;

/// The stated precision of an input cannot certify the requested decision.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("PrecisionExhausted: {0}")]
pub struct PrecisionExhausted(pub String);

/// Digits of pi used wherever the library needs the constant.
/// Truncated, so the true value lies within 10^-50 above this literal.
pub const PI_50_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510";

/// A decimal known only to finitely many digits, kept as the exact rational
/// interval that the stated digits certify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    lo: BigRational,
    hi: BigRational,
}

impl Decimal {
    /// Reads a decimal literal; the declared precision is the number of
    /// fractional digits present, and the value is bracketed one unit in
    /// the last place on each side (covers truncated or rounded sources).
    pub fn parse(s: &str) -> Result<Self, FractionParseError> {
        let value = Fraction::from_decimal_str(s)?;
        let digits = match s.trim().split_once('.') {
            Some((_, frac)) => frac.len() as u32,
            None => 0,
        };
        let ulp = BigRational::new(BigInt::from(1), BigInt::from(10u8).pow(digits));
        let v = value.as_ratio();
        Ok(Decimal { lo: v - &ulp, hi: v + &ulp })
    }

    /// Pi at the library's standard 50-digit precision.
    pub fn pi() -> Self {
        Decimal::parse(PI_50_DIGITS).expect("pi literal parses")
    }

    pub fn from_interval(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Decimal { lo, hi }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// A real number the library can reason about exactly, or at least with a
/// certified error bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Real {
    Rational(Fraction),
    Golden(GoldenReal),
    Decimal(Decimal),
}

/// Golden values are widened to this bracket precision when an operation
/// mixes them with a decimal interval; far tighter than any decimal input.
const GOLDEN_BRACKET_DIGITS: u32 = 80;

impl Real {
    pub fn pi() -> Self {
        Real::Decimal(Decimal::pi())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Real::Rational(Fraction::from_integer(n))
    }

    /// Sign of `p * x - q` for integer `p`, `q`, certified or refused.
    ///
    /// Every branch cross-multiplies into plain integers, so no rational
    /// normalization happens on this hot path.
    pub fn linear_sign(&self, p: &BigInt, q: &BigInt) -> Result<Ordering, PrecisionExhausted> {
        match self {
            Real::Rational(f) => {
                // sign(p * n/d - q) = sign(p*n - q*d) for d > 0
                let lhs = p * f.numerator() - q * f.denominator();
                Ok(lhs.cmp(&BigInt::zero()))
            }
            Real::Golden(g) => {
                let scaled = g * &GoldenReal::from_integer(p.clone());
                Ok((&scaled - &GoldenReal::from_integer(q.clone())).sign())
            }
            Real::Decimal(d) => {
                let endpoint = |v: &BigRational| p * v.numer() - q * v.denom();
                let (a, b) = (endpoint(&d.lo), endpoint(&d.hi));
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                if lo.is_positive() {
                    Ok(Ordering::Greater)
                } else if hi.is_negative() {
                    Ok(Ordering::Less)
                } else if lo.is_zero() && hi.is_zero() {
                    Ok(Ordering::Equal)
                } else {
                    Err(PrecisionExhausted(format!(
                        "sign of {p}*x - {q} undecidable at the stated precision"
                    )))
                }
            }
        }
    }

    /// `floor(k * x)` for integer `k >= 1`, certified or refused.
    pub fn floor_mul(&self, k: &BigInt) -> Result<BigInt, PrecisionExhausted> {
        match self {
            Real::Rational(f) => {
                Ok((f.numerator() * k).div_floor(f.denominator()))
            }
            Real::Golden(g) => Ok((g * &GoldenReal::from_integer(k.clone())).floor()),
            Real::Decimal(d) => {
                let lo = (k * d.lo.numer()).div_floor(d.lo.denom());
                let hi = (k * d.hi.numer()).div_floor(d.hi.denom());
                if lo == hi {
                    Ok(lo)
                } else {
                    Err(PrecisionExhausted(format!(
                        "floor({k}*x) undecidable at the stated precision"
                    )))
                }
            }
        }
    }

    pub fn sign(&self) -> Result<Ordering, PrecisionExhausted> {
        self.linear_sign(&BigInt::from(1), &BigInt::from(0))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Rational(f) => f.to_f64(),
            Real::Golden(g) => g.to_f64(),
            Real::Decimal(d) => d.to_f64(),
        }
    }

    fn to_interval(&self) -> Decimal {
        match self {
            Real::Rational(f) => {
                let v = f.as_ratio().clone();
                Decimal::from_interval(v.clone(), v)
            }
            Real::Golden(g) => {
                let (lo, hi) = g.rational_bracket(GOLDEN_BRACKET_DIGITS);
                Decimal::from_interval(lo, hi)
            }
            Real::Decimal(d) => d.clone(),
        }
    }

    /// Exact product where possible, interval product otherwise.
    pub fn mul(&self, rhs: &Real) -> Real {
        match (self, rhs) {
            (Real::Rational(a), Real::Rational(b)) => Real::Rational(a * b),
            (Real::Rational(a), Real::Golden(b)) | (Real::Golden(b), Real::Rational(a)) => {
                Real::Golden(&GoldenReal::from_fraction(a.clone()) * b)
            }
            (Real::Golden(a), Real::Golden(b)) => Real::Golden(a * b),
            _ => {
                let a = self.to_interval();
                let b = rhs.to_interval();
                let products = [
                    &a.lo * &b.lo,
                    &a.lo * &b.hi,
                    &a.hi * &b.lo,
                    &a.hi * &b.hi,
                ];
                let lo = products.iter().min().unwrap().clone();
                let hi = products.iter().max().unwrap().clone();
                Real::Decimal(Decimal::from_interval(lo, hi))
            }
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Real {
        self.mul(&Real::Rational(Fraction::from_integer(k.clone())))
    }

    pub fn sub(&self, rhs: &Real) -> Real {
        match (self, rhs) {
            (Real::Rational(a), Real::Rational(b)) => Real::Rational(a - b),
            (Real::Rational(a), Real::Golden(b)) => {
                Real::Golden(&GoldenReal::from_fraction(a.clone()) - b)
            }
            (Real::Golden(a), Real::Rational(b)) => {
                Real::Golden(a - &GoldenReal::from_fraction(b.clone()))
            }
            (Real::Golden(a), Real::Golden(b)) => Real::Golden(a - b),
            _ => {
                let a = self.to_interval();
                let b = rhs.to_interval();
                Real::Decimal(Decimal::from_interval(&a.lo - &b.hi, &a.hi - &b.lo))
            }
        }
    }

    pub fn abs(&self) -> Real {
        match self {
            Real::Rational(f) => Real::Rational(f.abs()),
            Real::Golden(g) => Real::Golden(g.abs()),
            Real::Decimal(d) => {
                if !d.lo.is_negative() {
                    Real::Decimal(d.clone())
                } else if !d.hi.is_positive() {
                    Real::Decimal(Decimal::from_interval(-&d.hi, -&d.lo))
                } else {
                    let hi = std::cmp::max(-&d.lo, d.hi.clone());
                    Real::Decimal(Decimal::from_interval(BigRational::zero(), hi))
                }
            }
        }
    }

    /// Quotient `self / rhs`. The divisor must be certifiably nonzero.
    pub fn div(&self, rhs: &Real) -> Result<Real, PrecisionExhausted> {
        match (self, rhs) {
            (Real::Rational(a), Real::Rational(b)) => {
                assert!(!b.is_zero(), "division by zero");
                Ok(Real::Rational(a / b))
            }
            (Real::Rational(a), Real::Golden(b)) => {
                Ok(Real::Golden(&GoldenReal::from_fraction(a.clone()) / b))
            }
            (Real::Golden(a), Real::Rational(b)) => {
                Ok(Real::Golden(a / &GoldenReal::from_fraction(b.clone())))
            }
            (Real::Golden(a), Real::Golden(b)) => Ok(Real::Golden(a / b)),
            _ => {
                let a = self.to_interval();
                let b = rhs.to_interval();
                if !b.lo.is_positive() && !b.hi.is_negative() {
                    return Err(PrecisionExhausted(
                        "divisor interval straddles zero".into(),
                    ));
                }
                let quotients = [
                    &a.lo / &b.lo,
                    &a.lo / &b.hi,
                    &a.hi / &b.lo,
                    &a.hi / &b.hi,
                ];
                let lo = quotients.iter().min().unwrap().clone();
                let hi = quotients.iter().max().unwrap().clone();
                Ok(Real::Decimal(Decimal::from_interval(lo, hi)))
            }
        }
    }

    /// Certified comparison between two reals.
    pub fn cmp_real(&self, rhs: &Real) -> Result<Ordering, PrecisionExhausted> {
        self.sub(rhs).sign()
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rational(v) => write!(f, "{v}"),
            Real::Golden(v) => write!(f, "{v}"),
            Real::Decimal(d) => write!(f, "{:.10}", d.to_f64()),
        }
    }
}

impl From<Fraction> for Real {
    fn from(f: Fraction) -> Self {
        Real::Rational(f)
    }
}

impl From<GoldenReal> for Real {
    fn from(g: GoldenReal) -> Self {
        if g.is_rational() {
            Real::Rational(g.rational_part().clone())
        } else {
            Real::Golden(g)
        }
    }
}

impl FromStr for Real {
    type Err = FractionParseError;

    /// The period expression grammar plus the literal `pi`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "pi" {
            return Ok(Real::pi());
        }
        let g: GoldenReal = t.parse()?;
        Ok(Real::from(g))
    }
}
