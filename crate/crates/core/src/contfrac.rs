//! Simple continued fractions and their convergents.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fraction::Fraction;
use crate::golden::GoldenReal;
use crate::real::{Decimal, PrecisionExhausted, Real};

/// A simple continued fraction `[a0; a1, a2, ...]`.
///
/// The leading coefficient may be any integer; every later coefficient is
/// at least 1. `terminated` records whether the expansion is complete, which
/// happens exactly when the expanded value was rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    coefficients: Vec<BigInt>,
    terminated: bool,
}

impl ContinuedFraction {
    pub fn new(coefficients: Vec<BigInt>, terminated: bool) -> Self {
        assert!(!coefficients.is_empty(), "continued fraction needs at least one coefficient");
        assert!(
            coefficients.iter().skip(1).all(|a| a >= &BigInt::one()),
            "continued fraction coefficients after the first must be >= 1"
        );
        ContinuedFraction { coefficients, terminated }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.coefficients[0])?;
        if self.coefficients.len() > 1 {
            write!(f, "; ")?;
            for (i, a) in self.coefficients.iter().skip(1).enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{a}")?;
            }
        }
        write!(f, "]")?;
        if !self.terminated {
            write!(f, "...")?;
        }
        Ok(())
    }
}

/// Expands `x` into at most `max_terms` partial quotients.
///
/// Rational and golden inputs expand exactly. Decimal inputs expand by
/// interval arithmetic on the certified bracket: a coefficient is emitted
/// only when both endpoints agree on it, otherwise the stated precision is
/// exhausted and the expansion refuses to guess.
pub fn expand_cf(x: &Real, max_terms: usize) -> Result<ContinuedFraction, PrecisionExhausted> {
    assert!(max_terms >= 1, "max_terms must be at least 1");
    match x {
        Real::Rational(f) => Ok(expand_rational(f, max_terms)),
        Real::Golden(g) => Ok(expand_golden(g, max_terms)),
        Real::Decimal(d) => expand_decimal(d, max_terms),
    }
}

fn expand_rational(f: &Fraction, max_terms: usize) -> ContinuedFraction {
    let mut n = f.numerator().clone();
    let mut d = f.denominator().clone();
    let mut coefficients = Vec::new();
    let mut terminated = false;
    while coefficients.len() < max_terms {
        let a = n.div_floor(&d);
        let r = &n - &a * &d;
        coefficients.push(a);
        if r.is_zero() {
            terminated = true;
            break;
        }
        n = d;
        d = r;
    }
    ContinuedFraction::new(coefficients, terminated)
}

fn expand_golden(g: &GoldenReal, max_terms: usize) -> ContinuedFraction {
    if g.is_rational() {
        return expand_rational(g.rational_part(), max_terms);
    }
    let mut x = g.clone();
    let mut coefficients = Vec::new();
    while coefficients.len() < max_terms {
        let a = x.floor();
        let frac = &x - &GoldenReal::from_integer(a.clone());
        coefficients.push(a);
        // A nonzero golden part keeps the value irrational forever, and the
        // fractional part of an irrational is never zero.
        debug_assert!(!frac.is_zero());
        x = frac.recip();
    }
    ContinuedFraction::new(coefficients, false)
}

fn expand_decimal(d: &Decimal, max_terms: usize) -> Result<ContinuedFraction, PrecisionExhausted> {
    let mut lo = d.lo().clone();
    let mut hi = d.hi().clone();
    let mut coefficients = Vec::new();
    loop {
        let a_lo = lo.floor().to_integer();
        let a_hi = hi.floor().to_integer();
        if a_lo != a_hi {
            return Err(PrecisionExhausted(format!(
                "coefficient {} of the expansion is uncertain at the stated precision",
                coefficients.len()
            )));
        }
        coefficients.push(a_lo.clone());
        if coefficients.len() == max_terms {
            return Ok(ContinuedFraction::new(coefficients, false));
        }
        let a = BigRational::from_integer(a_lo);
        let f_lo = &lo - &a;
        let f_hi = &hi - &a;
        if f_lo.is_zero() {
            // The value may be exactly this rational or just above it;
            // the bracket cannot say which.
            return Err(PrecisionExhausted(format!(
                "termination after coefficient {} is uncertain at the stated precision",
                coefficients.len() - 1
            )));
        }
        // invert the positive interval [f_lo, f_hi] inside (0, 1)
        lo = f_hi.recip();
        hi = f_lo.recip();
    }
}

/// Convergents `p_k / q_k` of a continued fraction, by the standard
/// two-term recurrence.
pub fn convergents(cf: &ContinuedFraction) -> Vec<Fraction> {
    let mut out = Vec::with_capacity(cf.len());
    let mut p_prev = BigInt::one();
    let mut p_prev2 = BigInt::zero();
    let mut q_prev = BigInt::zero();
    let mut q_prev2 = BigInt::one();
    for a in cf.coefficients() {
        let p = a * &p_prev + &p_prev2;
        let q = a * &q_prev + &q_prev2;
        out.push(Fraction::new(p.clone(), q.clone()));
        p_prev2 = std::mem::replace(&mut p_prev, p);
        q_prev2 = std::mem::replace(&mut q_prev, q);
    }
    out
}
