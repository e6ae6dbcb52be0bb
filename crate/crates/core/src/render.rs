//! Deterministic synthesis of an event timeline to 16-bit mono PCM.
//!
//! Each note is a single sinusoid under a bell-like envelope (a short
//! linear attack, then an exponential decay). Tones are summed in timeline
//! order at double precision, scaled by a fixed master gain, and quantized
//! once at the end, so identical inputs give byte-identical audio.

use std::f64::consts::TAU;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::fraction::Fraction;
use crate::golden::GoldenReal;
use crate::score::EventTimeline;

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error("OutOfRange: pitch {0} is outside 0..=127")]
    OutOfRange(u32),
    #[error("BufferTooLarge: {samples} samples exceed the 2^31 limit")]
    BufferTooLarge { samples: u128 },
    #[error("Clipped: sample {index} has magnitude {magnitude:.6} after gain; lower master_gain")]
    Clipped { index: usize, magnitude: f64 },
    #[error("IoFailure: {0}")]
    IoFailure(#[from] io::Error),
}

/// Amplitude envelope: zero before the onset, a linear rise over the
/// attack, then `exp(-t / tau)` decay measured from the onset.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeSpec {
    pub attack_seconds: f64,
    pub decay_time_constant: f64,
    pub family: EnvelopeFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeFamily {
    Bell,
}

impl EnvelopeSpec {
    pub fn bell(attack_seconds: f64, decay_time_constant: f64) -> Self {
        assert!(attack_seconds >= 0.0, "attack must be nonnegative");
        assert!(decay_time_constant > 0.0, "decay time constant must be positive");
        EnvelopeSpec { attack_seconds, decay_time_constant, family: EnvelopeFamily::Bell }
    }

    /// Envelope value at `t` seconds after the onset; in `[0, 1]`.
    pub fn value(&self, t: f64) -> f64 {
        if t < 0.0 {
            return 0.0;
        }
        let ramp = if self.attack_seconds > 0.0 {
            (t / self.attack_seconds).min(1.0)
        } else {
            1.0
        };
        ramp * (-t / self.decay_time_constant).exp()
    }
}

impl Default for EnvelopeSpec {
    fn default() -> Self {
        EnvelopeSpec::bell(0.002, 0.6)
    }
}

/// Fixed rendering parameters. 16-bit mono PCM only.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub sample_rate: u32,
    pub bit_depth: u16,
    pub channels: u16,
    /// Fixed scale applied to the mixed signal; clipping is an error, not a
    /// silent limiter, so mixing stays linear.
    pub master_gain: f64,
    pub envelope: EnvelopeSpec,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            sample_rate: 44_100,
            bit_depth: 16,
            channels: 1,
            master_gain: 0.25,
            envelope: EnvelopeSpec::default(),
        }
    }
}

impl RenderConfig {
    fn validate(&self) {
        assert!(self.sample_rate >= 8_000, "sample_rate must be at least 8000");
        assert!(self.bit_depth == 16, "only 16-bit output is supported");
        assert!(self.channels == 1, "only mono output is supported");
        assert!(
            self.master_gain > 0.0 && self.master_gain <= 1.0,
            "master_gain must lie in (0, 1]"
        );
    }
}

/// Contributions below this envelope value are dropped from the mix; with
/// the default gain that is three orders of magnitude under one 16-bit
/// step, and the cutoff is a fixed function of the inputs, so rendering
/// stays deterministic and per-event linear.
const TAIL_EPSILON: f64 = 1e-6;

/// Equal-tempered frequency with A4 = 440 Hz: `440 * 2^((pitch - 69) / 12)`.
pub fn pitch_to_frequency(pitch: u8) -> Result<f64, RenderError> {
    if pitch > 127 {
        return Err(RenderError::OutOfRange(pitch as u32));
    }
    Ok(440.0 * ((pitch as f64 - 69.0) / 12.0).exp2())
}

/// Number of samples covering `[0, horizon)` at the given rate, exactly.
fn sample_count(horizon: &Fraction, sample_rate: u32) -> Result<usize, RenderError> {
    let scaled = horizon * &Fraction::from_integer(sample_rate as i64);
    let count = scaled.floor();
    let count_u128 = count
        .to_u128()
        .ok_or(RenderError::BufferTooLarge { samples: u128::MAX })?;
    if count_u128 > (1u128 << 31) {
        return Err(RenderError::BufferTooLarge { samples: count_u128 });
    }
    Ok(count_u128 as usize)
}

/// Sums every event's tone into a double-precision buffer, in timeline
/// order, without applying the master gain.
pub fn mix(timeline: &EventTimeline, config: &RenderConfig) -> Result<Vec<f64>, RenderError> {
    config.validate();
    let n = sample_count(&timeline.horizon, config.sample_rate)?;
    let rate = config.sample_rate as f64;
    let mut buffer = vec![0.0f64; n];
    let tail_seconds = config.envelope.attack_seconds
        + config.envelope.decay_time_constant * (1.0 / TAIL_EPSILON).ln();
    for event in &timeline.events {
        let freq = pitch_to_frequency(event.pitch)?;
        // exact onset-to-grid conversion: first sample index k with
        // k / rate >= onset is found by exact floor, never by rounding phi
        let scaled =
            &event.onset * &GoldenReal::from_integer(BigInt::from(config.sample_rate));
        let start_floor = scaled.floor();
        let start = start_floor.to_i64().unwrap_or(i64::MAX).max(0) as usize;
        let onset = event.onset.to_f64();
        let end = (((onset + tail_seconds) * rate).ceil() as usize).min(n);
        for (k, slot) in buffer.iter_mut().enumerate().take(end).skip(start) {
            let t = k as f64 / rate - onset;
            if t < 0.0 {
                continue;
            }
            let env = config.envelope.value(t);
            *slot += (TAU * freq * t).sin() * env * event.velocity;
        }
    }
    Ok(buffer)
}

/// Mixes, applies the master gain, checks for clipping, and quantizes to
/// 16-bit with round-half-away-from-zero.
pub fn render(timeline: &EventTimeline, config: &RenderConfig) -> Result<Vec<i16>, RenderError> {
    let mixed = mix(timeline, config)?;
    let mut out = Vec::with_capacity(mixed.len());
    for (index, &raw) in mixed.iter().enumerate() {
        let scaled = raw * config.master_gain;
        if scaled.abs() > 1.0 {
            return Err(RenderError::Clipped { index, magnitude: scaled.abs() });
        }
        out.push(quantize(scaled));
    }
    Ok(out)
}

fn quantize(x: f64) -> i16 {
    let y = x * 32767.0;
    let rounded = if y >= 0.0 { (y + 0.5).floor() } else { (y - 0.5).ceil() };
    rounded.clamp(-32768.0, 32767.0) as i16
}

/// Writes a canonical 44-byte-header RIFF/WAVE file: PCM format tag 1,
/// little-endian, 16-bit signed, mono.
pub fn write_wav<W: Write>(
    samples: &[i16],
    config: &RenderConfig,
    mut out: W,
) -> Result<(), RenderError> {
    config.validate();
    let data_size = samples.len() as u64 * 2;
    if data_size + 36 > u32::MAX as u64 {
        return Err(RenderError::BufferTooLarge { samples: samples.len() as u128 });
    }
    let byte_rate = config.sample_rate * 2;
    out.write_all(b"RIFF")?;
    out.write_all(&(36 + data_size as u32).to_le_bytes())?;
    out.write_all(b"WAVE")?;
    out.write_all(b"fmt ")?;
    out.write_all(&16u32.to_le_bytes())?; // fmt chunk size
    out.write_all(&1u16.to_le_bytes())?; // PCM format tag
    out.write_all(&1u16.to_le_bytes())?; // channels
    out.write_all(&config.sample_rate.to_le_bytes())?;
    out.write_all(&byte_rate.to_le_bytes())?;
    out.write_all(&2u16.to_le_bytes())?; // block align
    out.write_all(&16u16.to_le_bytes())?; // bits per sample
    out.write_all(b"data")?;
    out.write_all(&(data_size as u32).to_le_bytes())?;
    for s in samples {
        out.write_all(&s.to_le_bytes())?;
    }
    Ok(())
}

/// Raw sample dump for golden tests: one integer per line.
pub fn write_samples_text<W: Write>(samples: &[i16], mut out: W) -> io::Result<()> {
    for s in samples {
        writeln!(out, "{s}")?;
    }
    Ok(())
}
