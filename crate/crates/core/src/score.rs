//! Musical data model and the exact event scheduler.
//!
//! A score is a set of named parts, each a repeating measure with its own
//! period in seconds. Periods live in the golden field so irrational
//! period ratios stay exact; scheduling flattens the parts into a single
//! time-sorted event timeline without ever rounding an onset.

use std::cmp::Ordering;
use std::io::{self, Write};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::fraction::Fraction;
use crate::golden::GoldenReal;
use crate::independence::{rationally_independent, Independence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScoreError {
    #[error("EmptyScore: a score needs at least one part")]
    EmptyScore,
    #[error("ParseError: line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("InvalidPeriod: line {line}: period must be positive")]
    InvalidPeriod { line: usize },
    #[error("UnknownPitchName: {0:?}")]
    UnknownPitchName(String),
    #[error("InvalidEvent: {0}")]
    InvalidEvent(String),
}

/// One note inside a repeating measure. Onset and duration are exact
/// fractions of the measure period; the onset lies in `[0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NoteEvent {
    pub onset: Fraction,
    /// MIDI-style note number, A4 = 69.
    pub pitch: u8,
    /// Loudness in `(0, 1]`.
    pub velocity: f64,
    pub duration: Fraction,
}

impl NoteEvent {
    pub fn new(
        onset: Fraction,
        pitch: u8,
        velocity: f64,
        duration: Fraction,
    ) -> Result<Self, ScoreError> {
        if onset.is_negative() || !(&onset - &Fraction::one()).is_negative() {
            return Err(ScoreError::InvalidEvent(format!(
                "onset {onset} must lie in [0, 1)"
            )));
        }
        if !(velocity > 0.0 && velocity <= 1.0) {
            return Err(ScoreError::InvalidEvent(format!(
                "velocity {velocity} must lie in (0, 1]"
            )));
        }
        if !duration.is_positive() {
            return Err(ScoreError::InvalidEvent(format!(
                "duration {duration} must be positive"
            )));
        }
        if pitch > 127 {
            return Err(ScoreError::InvalidEvent(format!("pitch {pitch} above 127")));
        }
        Ok(NoteEvent { onset, pitch, velocity, duration })
    }
}

/// A repeating measure: a name, an exact period in seconds, and its notes.
#[derive(Debug, Clone, PartialEq)]
pub struct Part {
    pub name: String,
    pub period: GoldenReal,
    pub events: Vec<NoteEvent>,
}

impl Part {
    pub fn new(
        name: impl Into<String>,
        period: GoldenReal,
        events: Vec<NoteEvent>,
    ) -> Result<Self, ScoreError> {
        if !period.is_positive() {
            return Err(ScoreError::InvalidPeriod { line: 0 });
        }
        if events.is_empty() {
            return Err(ScoreError::InvalidEvent("part with no events".into()));
        }
        Ok(Part { name: name.into(), period, events })
    }
}

/// A collection of parts plus the result of checking their periods for
/// rational independence. A failed check is a recorded warning, not an
/// error: periodic music is a legitimate thing to write.
#[derive(Debug, Clone, PartialEq)]
pub struct Score {
    pub parts: Vec<Part>,
    /// True when the period set passed the independence check (or there is
    /// only one part).
    pub independence_checked: bool,
    /// The integer relation among the periods when the check failed.
    pub independence_witness: Option<Vec<BigInt>>,
}

impl Score {
    pub fn new(parts: Vec<Part>) -> Result<Self, ScoreError> {
        if parts.is_empty() {
            return Err(ScoreError::EmptyScore);
        }
        let (checked, witness) = if parts.len() == 1 {
            (true, None)
        } else {
            let periods: Vec<GoldenReal> = parts.iter().map(|p| p.period.clone()).collect();
            match rationally_independent(&periods) {
                Independence::Independent => (true, None),
                Independence::Dependent { witness } => (false, Some(witness)),
            }
        };
        Ok(Score { parts, independence_checked: checked, independence_witness: witness })
    }
}

/// One scheduled note: an exact onset in seconds plus everything the
/// renderer needs.
#[derive(Debug, Clone, PartialEq)]
pub struct TimelineEvent {
    pub onset: GoldenReal,
    pub part_index: usize,
    pub pitch: u8,
    pub velocity: f64,
    pub duration_seconds: f64,
}

/// Time-sorted events over a finite horizon. Ties in onset are broken by
/// `(part_index, pitch)` so rendering is reproducible byte for byte.
#[derive(Debug, Clone, PartialEq)]
pub struct EventTimeline {
    pub events: Vec<TimelineEvent>,
    /// Exclusive end of the scheduled window, in seconds.
    pub horizon: Fraction,
}

/// Replicates every part's measure over `[0, horizon)` and flattens the
/// result into one exact, deterministically ordered timeline.
pub fn schedule(score: &Score, horizon: &Fraction) -> Result<EventTimeline, ScoreError> {
    if score.parts.is_empty() {
        return Err(ScoreError::EmptyScore);
    }
    assert!(horizon.is_positive(), "horizon must be positive");
    let horizon_g = GoldenReal::from_fraction(horizon.clone());
    let mut events = Vec::new();
    for (part_index, part) in score.parts.iter().enumerate() {
        for note in &part.events {
            let duration_seconds =
                (&GoldenReal::from_fraction(note.duration.clone()) * &part.period).to_f64();
            let mut k = BigInt::from(0);
            loop {
                let cycles = &GoldenReal::from_fraction(&note.onset + &Fraction::from(k.clone()))
                    * &part.period;
                if cycles.cmp(&horizon_g) != Ordering::Less {
                    break;
                }
                events.push(TimelineEvent {
                    onset: cycles,
                    part_index,
                    pitch: note.pitch,
                    velocity: note.velocity,
                    duration_seconds,
                });
                k += BigInt::one();
            }
        }
    }
    events.sort_by(|x, y| {
        x.onset
            .cmp(&y.onset)
            .then_with(|| x.part_index.cmp(&y.part_index))
            .then_with(|| x.pitch.cmp(&y.pitch))
    });
    Ok(EventTimeline { events, horizon: horizon.clone() })
}

/// The library's built-in two-part piece: a one-second measure sounding A4
/// and E5, against a golden-ratio-second measure sounding C5 and G5, both
/// started together and repeated forever. The within-measure rhythm (one
/// note at the start of the measure, one at its midpoint) is an editorial
/// choice; the period pair and the pitch assignment are the point.
pub fn raindrops_preset() -> Score {
    let half = Fraction::new(1, 2);
    let vel = 0.8;
    let whole = Fraction::one();
    let part_one = Part::new(
        "measure-4-4",
        GoldenReal::from_integer(1),
        vec![
            NoteEvent::new(Fraction::zero(), pitch_a4(), vel, whole.clone()).unwrap(),
            NoteEvent::new(half.clone(), pitch_e5(), vel, whole.clone()).unwrap(),
        ],
    )
    .unwrap();
    let part_two = Part::new(
        "measure-6-4",
        GoldenReal::phi(),
        vec![
            NoteEvent::new(Fraction::zero(), pitch_c5(), vel, whole.clone()).unwrap(),
            NoteEvent::new(half, pitch_g5(), vel, whole).unwrap(),
        ],
    )
    .unwrap();
    Score::new(vec![part_one, part_two]).unwrap()
}

fn pitch_a4() -> u8 {
    69
}
fn pitch_e5() -> u8 {
    76
}
fn pitch_c5() -> u8 {
    72
}
fn pitch_g5() -> u8 {
    79
}

/// Least common multiple of the cycle lengths: how many base steps pass
/// before stacked periodic cycles realign.
pub fn combined_period(cycle_lengths: &[u64]) -> BigUint {
    assert!(!cycle_lengths.is_empty(), "need at least one cycle length");
    assert!(cycle_lengths.iter().all(|&n| n > 0), "cycle lengths must be positive");
    cycle_lengths
        .iter()
        .fold(BigUint::one(), |acc, &n| acc.lcm(&BigUint::from(n)))
}

/// Parses a pitch given as scientific pitch notation (`A4`, `C#5`, `Eb3`)
/// or as a raw MIDI number.
pub fn parse_pitch(token: &str) -> Result<u8, ScoreError> {
    let unknown = || ScoreError::UnknownPitchName(token.to_string());
    if token.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        let n: u32 = token.parse().map_err(|_| unknown())?;
        return u8::try_from(n).ok().filter(|&n| n <= 127).ok_or_else(unknown);
    }
    let mut chars = token.chars();
    let letter = chars.next().ok_or_else(unknown)?;
    let semitone: i32 = match letter.to_ascii_uppercase() {
        'C' => 0,
        'D' => 2,
        'E' => 4,
        'F' => 5,
        'G' => 7,
        'A' => 9,
        'B' => 11,
        _ => return Err(unknown()),
    };
    let rest: String = chars.collect();
    let (accidental, octave_str) = match rest.strip_prefix(['#', 'b']) {
        Some(tail) => (if rest.starts_with('#') { 1 } else { -1 }, tail),
        None => (0, rest.as_str()),
    };
    let octave: i32 = octave_str.parse().map_err(|_| unknown())?;
    let midi = 12 * (octave + 1) + semitone + accidental;
    u8::try_from(midi).ok().filter(|&n| n <= 127).ok_or_else(unknown)
}

/// A parsed score file: the score plus the optional score-level horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreDocument {
    pub score: Score,
    pub horizon: Option<Fraction>,
}

/// Parses the line-oriented score grammar:
///
/// ```text
/// # comment
/// horizon 60
/// part lead period 1
/// note A4 at 0 vel 0.8 dur 1
/// note E5 at 1/2 vel 0.8 dur 1
/// part shimmer period phi
/// note C5 at 0 vel 0.8 dur 1
/// ```
///
/// Periods accept an integer, `a/b`, `phi`, or `a+b*phi` with rational
/// coefficients. A dependent period set is recorded in the returned score
/// as a warning, not treated as an error.
pub fn parse_score_document(text: &str) -> Result<ScoreDocument, ScoreError> {
    let mut horizon: Option<Fraction> = None;
    let mut parts: Vec<Part> = Vec::new();
    let mut pending: Option<(usize, String, GoldenReal, Vec<NoteEvent>)> = None;

    let finish = |pending: &mut Option<(usize, String, GoldenReal, Vec<NoteEvent>)>,
                  parts: &mut Vec<Part>|
     -> Result<(), ScoreError> {
        if let Some((line, name, period, events)) = pending.take() {
            if events.is_empty() {
                return Err(ScoreError::ParseError {
                    line,
                    message: format!("part {name:?} has no events"),
                });
            }
            parts.push(Part { name, period, events });
        }
        Ok(())
    };

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.split_once('#') {
            Some((head, _)) => head.trim(),
            None => raw_line.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| ScoreError::ParseError { line: line_no, message };
        match tokens[0] {
            "horizon" => {
                if tokens.len() != 2 {
                    return Err(err("expected: horizon <seconds>".into()));
                }
                let h = Fraction::from_decimal_str(tokens[1])
                    .map_err(|e| err(e.to_string()))?;
                if !h.is_positive() {
                    return Err(err("horizon must be positive".into()));
                }
                horizon = Some(h);
            }
            "part" => {
                if tokens.len() != 4 || tokens[2] != "period" {
                    return Err(err("expected: part <name> period <expr>".into()));
                }
                finish(&mut pending, &mut parts)?;
                let period: GoldenReal =
                    tokens[3].parse().map_err(|_| err(format!(
                        "bad period expression {:?}",
                        tokens[3]
                    )))?;
                if !period.is_positive() {
                    return Err(ScoreError::InvalidPeriod { line: line_no });
                }
                pending = Some((line_no, tokens[1].to_string(), period, Vec::new()));
            }
            "note" => {
                if tokens.len() != 8 || tokens[2] != "at" || tokens[4] != "vel" || tokens[6] != "dur"
                {
                    return Err(err(
                        "expected: note <pitch> at <fraction> vel <0..1> dur <fraction>".into(),
                    ));
                }
                let Some((_, _, _, events)) = pending.as_mut() else {
                    return Err(err("note before any part header".into()));
                };
                let pitch = parse_pitch(tokens[1])?;
                let onset: Fraction = tokens[3]
                    .parse()
                    .map_err(|_| err(format!("bad onset fraction {:?}", tokens[3])))?;
                let velocity: f64 = tokens[5]
                    .parse()
                    .map_err(|_| err(format!("bad velocity {:?}", tokens[5])))?;
                let duration: Fraction = tokens[7]
                    .parse()
                    .map_err(|_| err(format!("bad duration fraction {:?}", tokens[7])))?;
                let event = NoteEvent::new(onset, pitch, velocity, duration)
                    .map_err(|e| err(e.to_string()))?;
                events.push(event);
            }
            other => {
                return Err(err(format!("unknown directive {other:?}")));
            }
        }
    }
    finish(&mut pending, &mut parts)?;
    let score = Score::new(parts)?;
    Ok(ScoreDocument { score, horizon })
}

/// Parses a score file, discarding any score-level horizon.
pub fn parse_score(text: &str) -> Result<Score, ScoreError> {
    Ok(parse_score_document(text)?.score)
}

/// Writes a timeline as tab-separated text, one event per line:
/// onset (10 decimal places, exact rounding), part index, pitch, velocity,
/// duration.
pub fn write_timeline_tsv<W: Write>(timeline: &EventTimeline, mut out: W) -> io::Result<()> {
    writeln!(out, "# quasitone timeline v1")?;
    writeln!(out, "# onset\tpart\tpitch\tvelocity\tduration")?;
    for e in &timeline.events {
        writeln!(
            out,
            "{}\t{}\t{}\t{:.10}\t{:.10}",
            e.onset.to_decimal_string(10),
            e.part_index,
            e.pitch,
            e.velocity,
            e.duration_seconds
        )?;
    }
    Ok(())
}
