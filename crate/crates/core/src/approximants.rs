//! Best rational approximants of both classical kinds.
//!
//! Second kind: `a/b` beats every fraction `c/d` with `d <= b` under the
//! metric `|d*y - c|`. First kind: same, under `|y - c/d|`. Both scans are
//! exact; every comparison reduces to the sign of a linear form in `y`,
//! which each [`Real`] representation decides with certainty.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::fraction::Fraction;
use crate::real::{PrecisionExhausted, Real};

/// Which approximation metric a scan uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproximantKind {
    /// Distance `|y - a/b|`.
    First,
    /// Weighted distance `|b*y - a|`.
    Second,
}

impl ApproximantKind {
    pub fn label(self) -> &'static str {
        match self {
            ApproximantKind::First => "first",
            ApproximantKind::Second => "second",
        }
    }
}

/// Outcome of locating the integer nearest to `b*y`.
enum Nearest {
    Unique(BigInt),
    /// `y` sits exactly halfway between `m/b` and `(m+1)/b`.
    Tie(BigInt),
}

fn nearest_numerator(y: &Real, b: &BigInt) -> Result<Nearest, PrecisionExhausted> {
    let m = y.floor_mul(b)?;
    // compare b*y against the midpoint (2m+1)/2
    let two_b = b * BigInt::from(2);
    let mid = &m * BigInt::from(2) + BigInt::one();
    Ok(match y.linear_sign(&two_b, &mid)? {
        Ordering::Greater => Nearest::Unique(m + BigInt::one()),
        Ordering::Less => Nearest::Unique(m),
        Ordering::Equal => Nearest::Tie(m),
    })
}

/// Compares the metric of fraction `(a1, b1)` against `(a2, b2)` for the
/// given kind, exactly. Both `b` values must be positive.
///
/// Either metric comparison reduces to `sign(u - v) * sign(u + v)` where
/// `u` and `v` are the signed residuals, because `|u| > |v|` iff
/// `(u - v)(u + v) > 0`.
fn cmp_metric(
    y: &Real,
    kind: ApproximantKind,
    (a1, b1): (&BigInt, &BigInt),
    (a2, b2): (&BigInt, &BigInt),
) -> Result<Ordering, PrecisionExhausted> {
    let (s_diff, s_sum) = match kind {
        ApproximantKind::Second => {
            // u = b1*y - a1, v = b2*y - a2
            let diff = y.linear_sign(&(b1 - b2), &(a1 - a2))?;
            let sum = y.linear_sign(&(b1 + b2), &(a1 + a2))?;
            (diff, sum)
        }
        ApproximantKind::First => {
            // u = b2*(b1*y - a1), v = b1*(b2*y - a2); the difference
            // u - v = a2*b1 - a1*b2 is an integer
            let diff = (a2 * b1 - a1 * b2).cmp(&BigInt::zero());
            let sum = y.linear_sign(&(BigInt::from(2) * b1 * b2), &(a1 * b2 + a2 * b1))?;
            (diff, sum)
        }
    };
    if s_diff == Ordering::Equal || s_sum == Ordering::Equal {
        return Ok(Ordering::Equal);
    }
    Ok(if s_diff == s_sum {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

/// Enumerates every best rational approximant of `y` with denominator at
/// most `max_denominator`, sorted by denominator.
///
/// A candidate qualifies only by strict inequality against every fraction
/// of smaller or equal denominator, so exact ties exclude it.
pub fn best_approximants(
    y: &Real,
    max_denominator: u64,
    kind: ApproximantKind,
) -> Result<Vec<Fraction>, PrecisionExhausted> {
    assert!(max_denominator >= 1, "max_denominator must be at least 1");
    let mut out = Vec::new();
    // minimum metric achieved by any fraction with denominator seen so far
    let mut best: Option<(BigInt, BigInt)> = None;

    for b_raw in 1..=max_denominator {
        let b = BigInt::from(b_raw);
        let (a, tied) = match nearest_numerator(y, &b)? {
            Nearest::Unique(a) => (a, false),
            Nearest::Tie(a) => (a, true),
        };
        let g = a.gcd(&b);
        let (a_red, b_red) = (&a / &g, &b / &g);

        if !tied && g.is_one() {
            let qualifies = match &best {
                None => true,
                Some((c, d)) => {
                    cmp_metric(y, kind, (&a, &b), (c, d))? == Ordering::Less
                }
            };
            if qualifies {
                out.push(Fraction::new(a.clone(), b.clone()));
            }
        }

        // Track the running minimum with the reduced form; its metric is
        // never worse than the unreduced candidate's.
        let improves = match &best {
            None => true,
            Some((c, d)) => cmp_metric(y, kind, (&a_red, &b_red), (c, d))? == Ordering::Less,
        };
        if improves {
            best = Some((a_red, b_red));
        }
    }
    Ok(out)
}
