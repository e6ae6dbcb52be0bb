//! Exact arithmetic in the quadratic field generated by the golden ratio.
//!
//! A `GoldenReal` is `rational + golden * phi` with both coefficients exact
//! fractions, where phi is the positive root of `x^2 = x + 1`. Sums,
//! differences, products, and quotients stay inside the field, and ordering
//! is decided exactly through the conjugate test, never through floats.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::fraction::{Fraction, FractionParseError};

/// An element `a + b*phi` of the golden quadratic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenReal {
    rational: Fraction,
    golden: Fraction,
}

impl GoldenReal {
    pub fn new(rational: Fraction, golden: Fraction) -> Self {
        GoldenReal { rational, golden }
    }

    pub fn from_fraction(f: Fraction) -> Self {
        GoldenReal { rational: f, golden: Fraction::zero() }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_fraction(Fraction::from_integer(n))
    }

    /// The golden ratio itself.
    pub fn phi() -> Self {
        GoldenReal { rational: Fraction::zero(), golden: Fraction::one() }
    }

    pub fn zero() -> Self {
        Self::from_fraction(Fraction::zero())
    }

    pub fn rational_part(&self) -> &Fraction {
        &self.rational
    }

    pub fn golden_part(&self) -> &Fraction {
        &self.golden
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.golden.is_zero()
    }

    /// True when the value lies in the plain rationals.
    pub fn is_rational(&self) -> bool {
        self.golden.is_zero()
    }

    /// Field conjugate, the image under `phi -> 1 - phi`.
    pub fn conjugate(&self) -> Self {
        GoldenReal {
            rational: &self.rational + &self.golden,
            golden: -&self.golden,
        }
    }

    /// Field norm `self * conjugate(self)`, a rational number.
    /// For `a + b*phi` this is `a^2 + a*b - b^2`.
    pub fn norm(&self) -> Fraction {
        let a = &self.rational;
        let b = &self.golden;
        &(&(a * a) + &(a * b)) - &(b * b)
    }

    /// Exact multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        let norm = self.norm();
        let conj = self.conjugate();
        GoldenReal {
            rational: &conj.rational / &norm,
            golden: &conj.golden / &norm,
        }
    }

    /// Exact sign of the value. Writes `a + b*phi` as `s + t*sqrt(5)` with
    /// `s = a + b/2`, `t = b/2`, and applies the standard quadratic test.
    pub fn sign(&self) -> Ordering {
        let two = Fraction::from_integer(2);
        let s = &self.rational + &(&self.golden / &two);
        let t = &self.golden / &two;
        match (s.sign(), t.sign()) {
            (Ordering::Equal, ts) => ts,
            (ss, Ordering::Equal) => ss,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            (Ordering::Greater, Ordering::Less) | (Ordering::Less, Ordering::Greater) => {
                // |s| vs |t|*sqrt(5): compare s^2 with 5 t^2, then the side
                // with the larger magnitude wins. Equality would force
                // sqrt(5) rational, so it cannot happen for nonzero t.
                let s2 = &s * &s;
                let five_t2 = &Fraction::from_integer(5) * &(&t * &t);
                match s2.cmp(&five_t2) {
                    Ordering::Greater => s.sign(),
                    Ordering::Less => t.sign(),
                    Ordering::Equal => unreachable!("sqrt(5) is irrational"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact floor. Brackets the irrational part with an integer square root
    /// and then verifies the candidate with exact comparisons.
    pub fn floor(&self) -> BigInt {
        // value = (alpha + beta*sqrt(5)) / gamma with integer alpha, beta
        // and positive integer gamma
        let two = Fraction::from_integer(2);
        let s = &self.rational + &(&self.golden / &two); // a + b/2
        let t = &self.golden / &two; // b/2
        let gamma: BigInt = s.denominator().lcm(t.denominator());
        let alpha: BigInt = s.numerator() * (&gamma / s.denominator());
        let beta: BigInt = t.numerator() * (&gamma / t.denominator());

        let m: BigInt = (BigInt::from(5) * &beta * &beta).sqrt();
        // beta >= 0: numerator in [alpha + m, alpha + m + 1)
        // beta <  0: numerator in (alpha - m - 1, alpha - m]
        let one = BigInt::from(1);
        let low_numer = if beta.is_negative() {
            &alpha - &m - &one
        } else {
            &alpha + &m
        };
        let mut n = low_numer.div_floor(&gamma);

        // The bracket has width below one, so at most one correction is
        // needed in each direction.
        while self.cmp_int(&(&n + &one)) != Ordering::Less {
            n = &n + &one;
        }
        while self.cmp_int(&n) == Ordering::Less {
            n = &n - &one;
        }
        n
    }

    fn cmp_int(&self, n: &BigInt) -> Ordering {
        (self - &GoldenReal::from_integer(n.clone())).sign()
    }

    /// Approximate value as a double, for display and synthesis.
    pub fn to_f64(&self) -> f64 {
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        self.rational.to_f64() + self.golden.to_f64() * phi
    }

    /// An exact rational bracket `[lo, hi]` with `hi - lo <= 10^-digits`.
    pub fn rational_bracket(&self, digits: u32) -> (BigRational, BigRational) {
        // sqrt(5) in [m, m+1] / 10^digits
        let scale = BigInt::from(10u8).pow(digits);
        let m = (BigInt::from(5) * &scale * &scale).sqrt();
        let sqrt5_lo = BigRational::new(m.clone(), scale.clone());
        let sqrt5_hi = BigRational::new(m + 1, scale);
        let two = Fraction::from_integer(2);
        let s = (&self.rational + &(&self.golden / &two)).as_ratio().clone();
        let t = (&self.golden / &two).as_ratio().clone();
        if t.is_negative() {
            (&s + &t * sqrt5_hi, &s + &t * sqrt5_lo)
        } else {
            (&s + &t * sqrt5_lo, &s + &t * sqrt5_hi)
        }
    }

    /// Fixed-point decimal rendering, exact, rounded half away from zero.
    pub fn to_decimal_string(&self, dp: usize) -> String {
        if self.golden.is_zero() {
            return self.rational.to_decimal_string(dp);
        }
        let scale = BigInt::from(10u8).pow(dp as u32);
        let scaled = self * &GoldenReal::from_integer(scale.clone());
        let n = scaled.floor();
        // The remainder is irrational here, so rounding to nearest never
        // meets an exact half-tie.
        let frac = &scaled - &GoldenReal::from_integer(n.clone());
        let above_half =
            (&frac - &GoldenReal::from_fraction(Fraction::new(1, 2))).sign() == Ordering::Greater;
        let rounded = if above_half { n + BigInt::from(1) } else { n };
        // `rounded / 10^dp` is an exact multiple of the grid, so formatting
        // it as a fraction reproduces the digits verbatim.
        Fraction::new(rounded, scale).to_decimal_string(dp)
    }
}

impl fmt::Display for GoldenReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.golden.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            return write!(f, "{}*phi", self.golden);
        }
        if self.golden.is_negative() {
            write!(f, "{}-{}*phi", self.rational, self.golden.abs())
        } else {
            write!(f, "{}+{}*phi", self.rational, self.golden)
        }
    }
}

impl fmt::Debug for GoldenReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenReal({})", self)
    }
}

impl PartialOrd for GoldenReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenReal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }
}

impl<'a> Add<&'a GoldenReal> for &'a GoldenReal {
    type Output = GoldenReal;
    fn add(self, rhs: &'a GoldenReal) -> GoldenReal {
        GoldenReal {
            rational: &self.rational + &rhs.rational,
            golden: &self.golden + &rhs.golden,
        }
    }
}

impl<'a> Sub<&'a GoldenReal> for &'a GoldenReal {
    type Output = GoldenReal;
    fn sub(self, rhs: &'a GoldenReal) -> GoldenReal {
        GoldenReal {
            rational: &self.rational - &rhs.rational,
            golden: &self.golden - &rhs.golden,
        }
    }
}

impl<'a> Mul<&'a GoldenReal> for &'a GoldenReal {
    type Output = GoldenReal;
    fn mul(self, rhs: &'a GoldenReal) -> GoldenReal {
        // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi, via phi^2 = phi + 1
        let (a, b) = (&self.rational, &self.golden);
        let (c, d) = (&rhs.rational, &rhs.golden);
        let bd = b * d;
        GoldenReal {
            rational: &(a * c) + &bd,
            golden: &(&(a * d) + &(b * c)) + &bd,
        }
    }
}

impl<'a> Div<&'a GoldenReal> for &'a GoldenReal {
    type Output = GoldenReal;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the field inverse
    fn div(self, rhs: &'a GoldenReal) -> GoldenReal {
        self * &rhs.recip()
    }
}

impl Neg for &GoldenReal {
    type Output = GoldenReal;
    fn neg(self) -> GoldenReal {
        GoldenReal {
            rational: -&self.rational,
            golden: -&self.golden,
        }
    }
}

macro_rules! golden_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for GoldenReal {
            type Output = GoldenReal;
            fn $method(self, rhs: GoldenReal) -> GoldenReal {
                (&self).$method(&rhs)
            }
        }
    )*};
}

golden_owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GoldenReal {
    type Output = GoldenReal;
    fn neg(self) -> GoldenReal {
        -&self
    }
}

impl From<Fraction> for GoldenReal {
    fn from(f: Fraction) -> Self {
        GoldenReal::from_fraction(f)
    }
}

impl FromStr for GoldenReal {
    type Err = FractionParseError;

    /// Accepts the period expression grammar: an integer, `a/b`, `phi`,
    /// `b*phi`, or `a+b*phi` / `a-b*phi` with rational `a` and `b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(FractionParseError("empty period expression".into()));
        }
        if s == "phi" {
            return Ok(GoldenReal::phi());
        }
        if s == "-phi" {
            return Ok(-GoldenReal::phi());
        }
        // split at a '+' or '-' that is not leading and not inside a fraction
        let bytes = s.as_bytes();
        let mut split_at = None;
        for (i, &c) in bytes.iter().enumerate().skip(1) {
            if (c == b'+' || c == b'-') && bytes[i - 1] != b'/' && bytes[i - 1] != b'+' {
                split_at = Some(i);
            }
        }
        if let Some(i) = split_at {
            if s[i..].contains("phi") {
                let head = &s[..i];
                let tail = &s[i..];
                let rational: Fraction = head.parse()?;
                let (sign, term) = match tail.strip_prefix('-') {
                    Some(rest) => (-1i64, rest),
                    None => (1, tail.strip_prefix('+').unwrap_or(tail)),
                };
                let golden = parse_phi_term(term)?;
                return Ok(GoldenReal::new(
                    rational,
                    &golden * &Fraction::from_integer(sign),
                ));
            }
        }
        if s.contains("phi") {
            let (sign, term) = match s.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1, s.as_str()),
            };
            let golden = parse_phi_term(term)?;
            return Ok(GoldenReal::new(
                Fraction::zero(),
                &golden * &Fraction::from_integer(sign),
            ));
        }
        Ok(GoldenReal::from_fraction(s.parse()?))
    }
}

fn parse_phi_term(term: &str) -> Result<Fraction, FractionParseError> {
    if term == "phi" {
        return Ok(Fraction::one());
    }
    match term.strip_suffix("*phi") {
        Some(coeff) => coeff.parse(),
        None => Err(FractionParseError(format!("not a phi term: {term:?}"))),
    }
}
