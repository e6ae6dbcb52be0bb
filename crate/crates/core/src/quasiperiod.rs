//! Near-coincidence analysis of two incommensurate periods.
//!
//! Integer multiples of two periods never meet again when the periods are
//! rationally independent, but best rational approximants of their ratio
//! mark the times when they come close. Each such time is a quasiperiod:
//! the combined signal nearly repeats there, and the gap between the two
//! multiples bounds how far from repetition it is.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::approximants::{best_approximants, ApproximantKind};
use crate::fraction::Fraction;
use crate::real::{PrecisionExhausted, Real};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuasiperiodError {
    #[error("ZeroPeriod: periods must be positive")]
    ZeroPeriod,
    #[error(transparent)]
    Precision(#[from] PrecisionExhausted),
}

/// One near-coincidence: for the approximant `a/b` of `p2/p1`, the times
/// `a*p1` and `b*p2` nearly agree.
///
/// The quasiperiod is reported as the smaller element of the pair; the pair
/// itself is kept so no information is lost by that convention.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiperiodReport {
    pub approximant: Fraction,
    /// `(a * p1, b * p2)` as approximate values.
    pub coincidence_pair: (f64, f64),
    /// `|a * p1 - b * p2|`.
    pub gap: f64,
    /// `min(a * p1, b * p2)`.
    pub quasiperiod: f64,
}

/// Computes the quasiperiod reports of the period pair `(p1, p2)` from the
/// best approximants of `p2 / p1` with denominator at most
/// `max_denominator`.
///
/// Only approximants that strictly tighten the coincidence gap produce
/// reports, so the gap column is strictly decreasing (second-kind
/// approximants always tighten it; first-kind ones need not).
pub fn quasiperiods(
    p1: &Real,
    p2: &Real,
    max_denominator: u64,
    kind: ApproximantKind,
) -> Result<Vec<QuasiperiodReport>, QuasiperiodError> {
    for p in [p1, p2] {
        match p.sign() {
            Ok(Ordering::Greater) => {}
            Ok(_) => return Err(QuasiperiodError::ZeroPeriod),
            Err(e) => return Err(e.into()),
        }
    }
    let ratio = p2.div(p1)?;
    let approximants = best_approximants(&ratio, max_denominator, kind)?;

    let mut reports = Vec::new();
    let mut best_gap: Option<Real> = None;
    for approximant in approximants {
        let a: BigInt = approximant.numerator().clone();
        let b: BigInt = approximant.denominator().clone();
        if a.sign() == num_bigint::Sign::Minus || a == BigInt::from(0) {
            // a non-positive numerator cannot mark a forward coincidence
            continue;
        }
        let first = p1.mul_int(&a);
        let second = p2.mul_int(&b);
        let gap = first.sub(&second).abs();
        let improves = match &best_gap {
            None => true,
            Some(previous) => gap.cmp_real(previous)? == Ordering::Less,
        };
        if !improves {
            continue;
        }
        let quasiperiod = match first.cmp_real(&second)? {
            Ordering::Less | Ordering::Equal => first.to_f64(),
            Ordering::Greater => second.to_f64(),
        };
        reports.push(QuasiperiodReport {
            approximant,
            coincidence_pair: (first.to_f64(), second.to_f64()),
            gap: gap.to_f64(),
            quasiperiod,
        });
        best_gap = Some(gap);
    }
    Ok(reports)
}

/// Confirms a report by brute force: scans every pair of period starts
/// `(i * p1, j * p2)` with both values below `quasiperiod + gap` and checks
/// that none comes closer than the reported gap (up to `scan_resolution`,
/// which absorbs floating-point noise at the boundary).
pub fn verify_near_coincidence(
    p1: &Real,
    p2: &Real,
    report: &QuasiperiodReport,
    scan_resolution: f64,
) -> bool {
    assert!(scan_resolution > 0.0, "scan_resolution must be positive");
    let p1 = p1.to_f64();
    let p2 = p2.to_f64();
    assert!(
        p1 > 0.0 && p2 > 0.0 && p1.is_finite() && p2.is_finite(),
        "periods must be positive and finite"
    );
    let bound = report.quasiperiod + report.gap;
    let mut i = 1u64;
    while (i as f64) * p1 < bound {
        let t1 = (i as f64) * p1;
        let mut j = 1u64;
        while (j as f64) * p2 < bound {
            let t2 = (j as f64) * p2;
            if (t1 - t2).abs() < report.gap - scan_resolution {
                return false;
            }
            j += 1;
        }
        i += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::GoldenReal;

    fn one() -> Real {
        Real::from_integer(1)
    }

    fn two_pi() -> Real {
        Real::pi().mul(&Real::from_integer(2))
    }

    fn phi() -> Real {
        Real::Golden(GoldenReal::phi())
    }

    #[test]
    fn sine_pair_demo_ends_at_nineteen_thirds() {
        for kind in [ApproximantKind::First, ApproximantKind::Second] {
            let reports = quasiperiods(&one(), &two_pi(), 3, kind).unwrap();
            let last = reports.last().unwrap();
            assert_eq!(last.approximant, Fraction::new(19, 3));
            assert!((last.coincidence_pair.0 - 19.0).abs() < 1e-9);
            let six_pi = 6.0 * std::f64::consts::PI;
            assert!((last.coincidence_pair.1 - six_pi).abs() < 1e-9);
            assert!((last.gap - (19.0 - six_pi)).abs() < 1e-9);
            assert!((last.gap - 0.150).abs() < 1e-3);
            assert!((last.quasiperiod - six_pi).abs() < 1e-9);
        }
    }

    #[test]
    fn golden_pair_reports_fibonacci_coincidences() {
        let reports = quasiperiods(&one(), &phi(), 5, ApproximantKind::Second).unwrap();
        let approximants: Vec<String> =
            reports.iter().map(|r| r.approximant.to_string()).collect();
        assert_eq!(approximants, ["2/1", "3/2", "5/3", "8/5"]);
        // gaps |2 - phi|, |3 - 2 phi|, |5 - 3 phi|, |8 - 5 phi| in exact form
        let phi_g = GoldenReal::phi();
        for (report, (a, b)) in reports.iter().zip([(2, 1), (3, 2), (5, 3), (8, 5)]) {
            let exact = (&GoldenReal::from_integer(a)
                - &(&GoldenReal::from_integer(b) * &phi_g))
                .abs();
            assert!((report.gap - exact.to_f64()).abs() < 1e-12);
        }
        assert!((reports[3].gap - 0.0902).abs() < 1e-4);
    }

    #[test]
    fn gaps_strictly_decrease_for_irrational_ratios() {
        for (p2, max_den) in [(phi(), 30), (two_pi(), 50)] {
            let reports =
                quasiperiods(&one(), &p2, max_den, ApproximantKind::Second).unwrap();
            assert!(reports.len() >= 3);
            for pair in reports.windows(2) {
                assert!(pair[1].gap < pair[0].gap);
            }
        }
    }

    #[test]
    fn commensurate_periods_collapse_to_one_exact_report() {
        let reports = quasiperiods(
            &Real::from_integer(2),
            &Real::from_integer(4),
            10,
            ApproximantKind::Second,
        )
        .unwrap();
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        assert_eq!(r.approximant, Fraction::new(2, 1));
        assert_eq!(r.coincidence_pair, (4.0, 4.0));
        assert_eq!(r.gap, 0.0);
        assert_eq!(r.quasiperiod, 4.0);
    }

    #[test]
    fn zero_period_is_rejected() {
        let err = quasiperiods(&Real::from_integer(0), &phi(), 3, ApproximantKind::Second);
        assert!(matches!(err, Err(QuasiperiodError::ZeroPeriod)));
    }

    #[test]
    fn verification_confirms_the_sine_pair_report() {
        let reports =
            quasiperiods(&one(), &two_pi(), 3, ApproximantKind::Second).unwrap();
        let last = reports.last().unwrap();
        assert!(verify_near_coincidence(&one(), &two_pi(), last, 1e-9));
    }

    #[test]
    fn verification_confirms_the_golden_report() {
        let reports = quasiperiods(&one(), &phi(), 5, ApproximantKind::Second).unwrap();
        let last = reports.last().unwrap();
        assert_eq!(last.approximant, Fraction::new(8, 5));
        assert!(verify_near_coincidence(&one(), &phi(), last, 1e-9));
    }

    #[test]
    fn overstated_gap_is_refuted() {
        let fake = QuasiperiodReport {
            approximant: Fraction::new(19, 3),
            coincidence_pair: (19.0, 6.0 * std::f64::consts::PI),
            gap: 0.5,
            quasiperiod: 6.0 * std::f64::consts::PI,
        };
        assert!(!verify_near_coincidence(&one(), &two_pi(), &fake, 1e-9));
    }
}
