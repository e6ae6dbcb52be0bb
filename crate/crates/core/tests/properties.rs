//! Property tests over the exact arithmetic and the word engine.

mod common;

use common::{brute_force_approximants, Approx, OracleKind};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use quasitone::words::{classify_morse_hedlund, ComplexityVerdict};
use quasitone::{
    best_approximants, complexity, convergents, expand, expand_cf, fibonacci_word,
    ApproximantKind, Fraction, GoldenReal, Real, SubstitutionRule, Word,
};

fn fraction_strategy() -> impl Strategy<Value = Fraction> {
    (-2000i64..2000, 1i64..2000).prop_map(|(n, d)| Fraction::new(n, d))
}

fn golden_strategy() -> impl Strategy<Value = GoldenReal> {
    (fraction_strategy(), fraction_strategy())
        .prop_map(|(r, g)| GoldenReal::new(r, g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn golden_field_axioms(x in golden_strategy(), y in golden_strategy(), z in golden_strategy()) {
        let assoc = (&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(assoc.0, assoc.1);
        let distrib = (&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(distrib.0, distrib.1);
        if !y.is_zero() {
            let back = &(&x / &y) * &y;
            prop_assert_eq!(back, x.clone());
        }
    }

    #[test]
    fn golden_floor_brackets_the_value(x in golden_strategy()) {
        let n = x.floor();
        let lower = GoldenReal::from_integer(n.clone());
        let upper = GoldenReal::from_integer(n + BigInt::from(1));
        prop_assert!(lower <= x, "floor must not exceed the value");
        prop_assert!(x < upper, "floor + 1 must exceed the value");
    }

    #[test]
    fn golden_sign_agrees_with_floats_when_clear(x in golden_strategy()) {
        let approx = x.to_f64();
        if approx.abs() > 1e-6 {
            prop_assert_eq!(approx > 0.0, x.is_positive());
        }
    }

    #[test]
    fn golden_decimal_strings_preserve_order(mut values in prop::collection::vec(golden_strategy(), 2..8)) {
        values.sort();
        let decimals: Vec<Fraction> = values
            .iter()
            .map(|v| Fraction::from_decimal_str(&v.to_decimal_string(50)).unwrap())
            .collect();
        for w in decimals.windows(2) {
            prop_assert!(w[0] <= w[1], "50-digit decimals must not reorder");
        }
    }

    #[test]
    fn rational_cf_round_trips(f in fraction_strategy()) {
        let cf = expand_cf(&Real::Rational(f.clone()), 128).unwrap();
        prop_assert!(cf.is_terminated(), "rational expansions terminate");
        let convs = convergents(&cf);
        prop_assert_eq!(convs.last().unwrap(), &f);
        // denominators strictly increase from index 1 onward
        for w in convs.windows(2).skip(1) {
            prop_assert!(w[1].denominator() > w[0].denominator());
        }
    }

    #[test]
    fn scan_matches_definitional_oracle_on_rationals(f in fraction_strategy(), max_den in 1u64..48) {
        let y = Approx::exact(f.as_ratio().clone());
        for (kind, oracle_kind) in [
            (ApproximantKind::First, OracleKind::First),
            (ApproximantKind::Second, OracleKind::Second),
        ] {
            let scan = best_approximants(&Real::Rational(f.clone()), max_den, kind).unwrap();
            let oracle = brute_force_approximants(oracle_kind, &y, max_den);
            prop_assert_eq!(scan, oracle);
        }
    }

    #[test]
    fn second_kind_of_random_golden_matches_oracle(g in golden_strategy(), max_den in 1u64..32) {
        prop_assume!(!g.is_zero());
        let (lo, hi) = g.rational_bracket(120);
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        let err = (&hi - &lo) / BigRational::from_integer(BigInt::from(2));
        let y = Approx { value: mid, error: err };
        let scan = best_approximants(&Real::from(g.clone()), max_den, ApproximantKind::Second).unwrap();
        let oracle = brute_force_approximants(OracleKind::Second, &y, max_den);
        prop_assert_eq!(scan, oracle);
    }

    #[test]
    fn expansion_steps_compose(word_len in 1usize..6, iters in 0usize..5, seed in 0u64..1u64 << 48) {
        // random binary rule: images of length 1..=3 over {0, 1}
        let mut state = seed | 1;
        let mut nib = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        let image = |nib: &mut dyn FnMut() -> usize| -> String {
            let len = 1 + nib() % 3;
            (0..len).map(|_| if nib().is_multiple_of(2) { '0' } else { '1' }).collect()
        };
        let img0 = image(&mut nib);
        let img1 = image(&mut nib);
        let rule = SubstitutionRule::new(&[('0', &img0), ('1', &img1)]).unwrap();
        let axiom: String =
            (0..word_len).map(|_| if nib().is_multiple_of(2) { '0' } else { '1' }).collect();
        let axiom = Word::literal(axiom);

        let cap = 1_000_000;
        let direct = expand(&rule, &axiom, iters + 1, cap).unwrap();
        let staged = expand(&rule, &expand(&rule, &axiom, iters, cap).unwrap(), 1, cap).unwrap();
        prop_assert_eq!(direct.as_str(), staged.as_str());
    }

    #[test]
    fn complexity_respects_the_counting_bound(bits in prop::collection::vec(any::<bool>(), 2..200), n in 1usize..12) {
        let word: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        let word = Word::literal(word);
        prop_assume!(n <= word.len());
        let sigma = complexity(&word, n).unwrap();
        let cap = (word.len() - n + 1).min(1usize << n.min(30));
        prop_assert!(sigma >= 1);
        prop_assert!(sigma <= cap, "sigma {sigma} above cap {cap}");
    }
}

#[test]
fn fibonacci_sigma_is_nondecreasing_below_saturation() {
    let w = fibonacci_word(4000);
    let mut previous = 0;
    for n in 1..=40 {
        let sigma = complexity(&w, n).unwrap();
        assert!(sigma >= previous, "sigma must not dip while well below saturation");
        previous = sigma;
    }
}

#[test]
fn fibonacci_iterates_stay_prefixes_under_the_rule() {
    let rule = SubstitutionRule::fibonacci();
    let axiom = Word::literal("0");
    let mut previous = expand(&rule, &axiom, 0, 1_000_000).unwrap();
    for iterations in 1..=20 {
        let next = expand(&rule, &axiom, iterations, 1_000_000).unwrap();
        assert!(next.as_str().starts_with(previous.as_str()));
        previous = next;
    }
}

#[test]
fn long_periodic_words_flag_quickly() {
    let w = Word::literal("001".repeat(100));
    let report = classify_morse_hedlund(&w, 8).unwrap();
    assert_eq!(report.verdict, ComplexityVerdict::PeriodicConsistent);
    assert_eq!(report.flagged_n, Some(3), "sigma(3) = 3 for the period-3 word");
}
