//! Definitional oracles for the approximant machinery: an independent
//! brute-force scan, independently computed constants, and the classical
//! correspondence between second-kind approximants and convergents.

mod common;

use common::{
    brute_force_approximants, certified_gt, golden_approx, machin_pi, metric, Approx, OracleKind,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use quasitone::{
    best_approximants, convergents, expand_cf, ApproximantKind, Fraction, GoldenReal, Real,
    PI_50_DIGITS,
};

fn pi_200() -> Approx {
    machin_pi(200)
}

fn phi_200() -> Approx {
    golden_approx(200)
}

#[test]
fn embedded_pi_literal_agrees_with_machin() {
    let pi = pi_200();
    let literal = Fraction::from_decimal_str(PI_50_DIGITS).unwrap();
    let diff = (literal.as_ratio() - &pi.value).abs();
    // the literal is truncated at 50 digits, so it must sit within one
    // unit of the 50th place below the true value
    let ulp50 = BigRational::new(BigInt::from(1), BigInt::from(10u8).pow(50));
    assert!(diff < ulp50, "embedded literal disagrees with Machin's formula");
    assert!(literal.as_ratio() < &pi.value, "the literal is a truncation, so it is low");
}

#[test]
fn golden_bracket_agrees_with_library_phi() {
    let phi = phi_200();
    let (lo, hi) = GoldenReal::phi().rational_bracket(150);
    assert!(lo <= phi.value && phi.value <= hi);
}

#[test]
fn pi_cf_matches_long_division_of_published_digits() {
    // long-division continued fraction on the published 50-digit decimal
    let mut n = Fraction::from_decimal_str(PI_50_DIGITS).unwrap().numerator().clone();
    let mut d = Fraction::from_decimal_str(PI_50_DIGITS).unwrap().denominator().clone();
    let mut reference = Vec::new();
    for _ in 0..5 {
        let a = &n / &d; // both positive here, so truncation is floor
        reference.push(a.clone());
        let r = &n - &a * &d;
        n = d;
        d = r;
    }
    let got = expand_cf(&Real::pi(), 5).unwrap();
    assert_eq!(got.coefficients(), &reference[..]);
    assert_eq!(
        reference,
        [3, 7, 15, 1, 292].map(BigInt::from),
        "the first five partial quotients of pi"
    );
    assert!(!got.is_terminated());
}

#[test]
fn second_kind_scan_matches_brute_force_for_pi() {
    let oracle = brute_force_approximants(OracleKind::Second, &pi_200(), 500);
    let scan = best_approximants(&Real::pi(), 500, ApproximantKind::Second).unwrap();
    assert_eq!(scan, oracle);
}

#[test]
fn second_kind_scan_matches_brute_force_for_phi() {
    let oracle = brute_force_approximants(OracleKind::Second, &phi_200(), 500);
    let scan =
        best_approximants(&Real::Golden(GoldenReal::phi()), 500, ApproximantKind::Second).unwrap();
    assert_eq!(scan, oracle);
}

#[test]
fn second_kind_scan_matches_brute_force_for_seven_thirds() {
    let y = Approx::exact(BigRational::new(BigInt::from(7), BigInt::from(3)));
    let oracle = brute_force_approximants(OracleKind::Second, &y, 500);
    let scan = best_approximants(
        &Real::Rational(Fraction::new(7, 3)),
        500,
        ApproximantKind::Second,
    )
    .unwrap();
    assert_eq!(scan, oracle);
}

#[test]
fn first_kind_scan_matches_brute_force_for_pi() {
    let oracle = brute_force_approximants(OracleKind::First, &pi_200(), 500);
    let scan = best_approximants(&Real::pi(), 500, ApproximantKind::First).unwrap();
    assert_eq!(scan, oracle);
}

#[test]
fn first_kind_scan_matches_brute_force_for_phi_and_a_rational() {
    let oracle = brute_force_approximants(OracleKind::First, &phi_200(), 500);
    let scan =
        best_approximants(&Real::Golden(GoldenReal::phi()), 500, ApproximantKind::First).unwrap();
    assert_eq!(scan, oracle);

    let y = Approx::exact(BigRational::new(BigInt::from(-31), BigInt::from(24)));
    let oracle = brute_force_approximants(OracleKind::First, &y, 500);
    let scan = best_approximants(
        &Real::Rational(Fraction::new(-31, 24)),
        500,
        ApproximantKind::First,
    )
    .unwrap();
    assert_eq!(scan, oracle);
}

#[test]
fn nineteen_thirds_is_best_for_two_pi_under_both_kinds() {
    // the near-coincidence demo leans on 19/3; confirm it against the
    // definitional oracle for both metrics
    let two_pi = Approx {
        value: &pi_200().value * BigRational::from_integer(BigInt::from(2)),
        error: &pi_200().error * BigRational::from_integer(BigInt::from(2)),
    };
    for kind in [OracleKind::First, OracleKind::Second] {
        let oracle = brute_force_approximants(kind, &two_pi, 3);
        assert_eq!(
            oracle.last().unwrap(),
            &Fraction::new(19, 3),
            "19/3 must close the list for {kind:?}"
        );
    }
}

#[test]
fn golden_cf_agrees_with_its_certified_decimal_expansion() {
    // two routes to the same continued fraction: exact golden-field
    // arithmetic versus interval arithmetic on an independent 120-digit
    // bracket of the same value
    use quasitone::Decimal;
    let values = [
        GoldenReal::new(Fraction::new(3, 7), Fraction::new(5, 7)),
        GoldenReal::new(Fraction::new(-11, 4), Fraction::new(9, 2)),
        GoldenReal::new(Fraction::new(100, 1), Fraction::new(-61, 1)),
        GoldenReal::new(Fraction::new(-11, 4), Fraction::new(-9, 2)),
        GoldenReal::phi(),
    ];
    for value in values {
        // 120 digits certify comfortably more than 40 coefficients for
        // these values; the exact route has no such limit
        let exact_route = expand_cf(&Real::Golden(value.clone()), 40).unwrap();
        let (lo, hi) = value.rational_bracket(120);
        let interval_route =
            expand_cf(&Real::Decimal(Decimal::from_interval(lo, hi)), 40).unwrap();
        assert_eq!(
            exact_route.coefficients(),
            interval_route.coefficients(),
            "routes disagree for {value}"
        );
        // the exact route keeps going forever and its state must stay small
        let long = expand_cf(&Real::Golden(value.clone()), 500).unwrap();
        assert_eq!(long.len(), 500);
        assert!(!long.is_terminated());
    }
}

#[test]
fn second_kind_approximants_appear_among_convergents() {
    // golden ratio
    let approximants =
        best_approximants(&Real::Golden(GoldenReal::phi()), 1000, ApproximantKind::Second)
            .unwrap();
    let cf = expand_cf(&Real::Golden(GoldenReal::phi()), 30).unwrap();
    let convs = convergents(&cf);
    for a in approximants.iter().filter(|a| a.denominator() > &BigInt::from(1)) {
        assert!(convs.contains(a), "{a} missing from the convergent list");
    }

    // a handful of rationals
    for (n, d) in [(355, 113), (617, 433), (-100, 7), (1, 97)] {
        let x = Real::Rational(Fraction::new(n, d));
        let approximants = best_approximants(&x, 500, ApproximantKind::Second).unwrap();
        let cf = expand_cf(&x, 64).unwrap();
        assert!(cf.is_terminated());
        let convs = convergents(&cf);
        for a in approximants.iter().filter(|a| a.denominator() > &BigInt::from(1)) {
            assert!(convs.contains(a), "{a} missing from convergents of {n}/{d}");
        }
        assert_eq!(convs.last().unwrap(), &Fraction::new(n, d));
    }
}

#[test]
fn certified_comparison_refuses_blurry_calls() {
    let x = Approx {
        value: BigRational::from_integer(BigInt::from(1)),
        error: BigRational::new(BigInt::from(1), BigInt::from(2)),
    };
    let quiet = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let result = std::panic::catch_unwind(|| certified_gt(&x, &x));
    std::panic::set_hook(quiet);
    assert!(result.is_err(), "overlapping error bands must refuse to decide");
}

#[test]
fn oracle_metric_matches_hand_values() {
    let y = Approx::exact(BigRational::new(BigInt::from(7), BigInt::from(2)));
    let m = metric(OracleKind::Second, &y, &BigInt::from(10), &BigInt::from(3));
    assert_eq!(m.value, BigRational::new(BigInt::from(1), BigInt::from(2)));
    let m = metric(OracleKind::First, &y, &BigInt::from(10), &BigInt::from(3));
    assert_eq!(m.value, BigRational::new(BigInt::from(1), BigInt::from(6)));
}
