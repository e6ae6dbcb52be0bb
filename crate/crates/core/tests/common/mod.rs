//! Shared oracle helpers for the integration tests.
//!
//! Everything here is deliberately independent of the library's scan
//! machinery: values are carried as plain rational approximations with an
//! explicit error bound, and every comparison either certifies its answer
//! against that bound or panics the test.

// not every test target uses every helper
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use quasitone::Fraction;

/// A real number known as `value` with `|true - value| <= error`.
#[derive(Debug, Clone)]
pub struct Approx {
    pub value: BigRational,
    pub error: BigRational,
}

impl Approx {
    pub fn exact(value: BigRational) -> Self {
        Approx { value, error: BigRational::zero() }
    }
}

fn pow10(digits: u32) -> BigInt {
    BigInt::from(10u8).pow(digits)
}

/// The golden ratio to `digits` decimal digits, from the integer square
/// root of `5 * 10^(2 digits)`; independent of the library's golden-field
/// arithmetic.
pub fn golden_approx(digits: u32) -> Approx {
    let scale = pow10(digits);
    let m = (BigInt::from(5) * &scale * &scale).sqrt();
    // m <= sqrt(5) * 10^digits < m + 1
    let sqrt5 = BigRational::new(m, scale.clone());
    let value = (BigRational::one() + sqrt5) / BigRational::from_integer(BigInt::from(2));
    Approx { value, error: BigRational::new(BigInt::one(), scale) }
}

/// Pi by Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)` with the
/// alternating series truncated once terms drop below the error budget.
/// Independent of the library's embedded constant.
pub fn machin_pi(digits: u32) -> Approx {
    let budget = BigRational::new(BigInt::one(), pow10(digits));
    let quarter_budget = &budget / BigRational::from_integer(BigInt::from(64));
    let a = atan_inverse(5, &quarter_budget);
    let b = atan_inverse(239, &quarter_budget);
    let value = BigRational::from_integer(BigInt::from(16)) * a.value
        - BigRational::from_integer(BigInt::from(4)) * b.value;
    let error = BigRational::from_integer(BigInt::from(16)) * a.error
        + BigRational::from_integer(BigInt::from(4)) * b.error;
    assert!(error <= budget, "Machin error budget violated");
    Approx { value, error }
}

/// `atan(1/x)` summed until the next alternating term is below `budget`;
/// that term bounds the truncation error.
fn atan_inverse(x: u64, budget: &BigRational) -> Approx {
    let x2 = BigRational::from_integer(BigInt::from(x * x));
    let mut term = BigRational::new(BigInt::one(), BigInt::from(x));
    let mut sum = BigRational::zero();
    let mut k = 0u32;
    loop {
        let contribution = &term / BigRational::from_integer(BigInt::from(2 * k as i64 + 1));
        if contribution < *budget {
            return Approx { value: sum, error: contribution };
        }
        if k.is_multiple_of(2) {
            sum += contribution;
        } else {
            sum -= contribution;
        }
        term = &term / &x2;
        k += 1;
    }
}

/// Certified strict `x > y`. Exact inputs compare exactly; approximate
/// inputs must differ by more than the combined error bound, otherwise the
/// oracle refuses to decide and the test dies.
pub fn certified_gt(x: &Approx, y: &Approx) -> bool {
    let margin = &x.error + &y.error;
    if margin.is_zero() {
        return x.value > y.value;
    }
    let diff = &x.value - &y.value;
    if diff > margin {
        true
    } else if diff < -margin.clone() {
        false
    } else {
        panic!("oracle precision insufficient: diff {diff} within margin {margin}");
    }
}

/// Which approximation metric the definitional scan uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    First,
    Second,
}

/// `|y - a/b|` or `|b y - a|` with the propagated error bound.
pub fn metric(kind: OracleKind, y: &Approx, a: &BigInt, b: &BigInt) -> Approx {
    match kind {
        OracleKind::First => {
            let v = &y.value - BigRational::new(a.clone(), b.clone());
            Approx { value: v.abs(), error: y.error.clone() }
        }
        OracleKind::Second => {
            let v = &y.value * BigRational::from_integer(b.clone())
                - BigRational::from_integer(a.clone());
            Approx {
                value: v.abs(),
                error: &y.error * BigRational::from_integer(b.clone()),
            }
        }
    }
}

/// Nearby numerators for denominator `d`: every possible winner and every
/// metric-minimal competitor lies within one of `floor(d * y)`, and the
/// window is padded a step on each side.
fn numerator_window(y: &Approx, d: &BigInt) -> Vec<BigInt> {
    let scaled = &y.value * BigRational::from_integer(d.clone());
    let center = scaled.floor().to_integer();
    (-1..=2).map(|off| &center + BigInt::from(off)).collect()
}

/// Brute-force best approximants straight from the definition: enumerate
/// reduced candidates near `y` and require the defining strict inequality
/// against every competitor fraction of denominator up to the candidate's.
///
/// A fraction farther from `y` than the window is always beaten by the
/// nearest numerator at its own denominator, so the window loses nothing;
/// competitors are likewise screened by their per-denominator minimum.
pub fn brute_force_approximants(kind: OracleKind, y: &Approx, max_den: u64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for b_raw in 1..=max_den {
        let b = BigInt::from(b_raw);
        'candidate: for a in numerator_window(y, &b) {
            if a.gcd(&b) != BigInt::one() {
                continue;
            }
            let candidate_metric = metric(kind, y, &a, &b);
            // scan competitors; descending denominator finds the strongest
            // eliminator early but the check itself is the bare definition
            for d_raw in (1..=b_raw).rev() {
                let d = BigInt::from(d_raw);
                for c in numerator_window(y, &d) {
                    if &c * &b == &a * &d {
                        continue; // same rational value is not a competitor
                    }
                    let competitor_metric = metric(kind, y, &c, &d);
                    if !certified_gt(&competitor_metric, &candidate_metric) {
                        continue 'candidate;
                    }
                }
            }
            out.push(Fraction::new(a, b.clone()));
        }
    }
    out
}
