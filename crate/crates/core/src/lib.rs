//! Aperiodic-order toolkit for music built from repeating measures whose
//! periods never share a common beat.
//!
//! The crate has three layers:
//!
//! - exact number theory: reduced fractions, golden-field arithmetic,
//!   continued fractions, and best rational approximants of both classical
//!   kinds ([`fraction`], [`golden`], [`real`], [`contfrac`],
//!   [`approximants`]);
//! - aperiodic-order analysis: substitution words with subword-complexity
//!   screening, rational-independence decisions with integer witnesses,
//!   torus functions, and quasiperiod (near-coincidence) reports
//!   ([`words`], [`independence`], [`torus`], [`quasiperiod`]);
//! - music: a score model with an exact event scheduler and a
//!   deterministic PCM renderer ([`score`], [`mod@render`]).
//!
//! Everything upstream of the renderer is exact. Onsets of the built-in
//! two-measure piece live in the golden field, so questions like "do these
//! two parts ever strike together again?" are answered by algebra, not by
//! floating-point coincidence.

pub mod approximants;
pub mod contfrac;
pub mod fraction;
pub mod golden;
pub mod independence;
pub mod quasiperiod;
pub mod real;
pub mod render;
pub mod score;
pub mod torus;
pub mod words;

pub use approximants::{best_approximants, ApproximantKind};
pub use contfrac::{convergents, expand_cf, ContinuedFraction};
pub use fraction::Fraction;
pub use golden::GoldenReal;
pub use independence::{rationally_independent, Independence};
pub use quasiperiod::{quasiperiods, verify_near_coincidence, QuasiperiodReport};
pub use real::{Decimal, PrecisionExhausted, Real, PI_50_DIGITS};
pub use render::{pitch_to_frequency, render, write_wav, RenderConfig};
pub use score::{
    combined_period, parse_score, parse_score_document, raindrops_preset, schedule,
    EventTimeline, Score,
};
pub use words::{
    classify_morse_hedlund, complexity, expand, fibonacci_word, SubstitutionRule, Word,
};
