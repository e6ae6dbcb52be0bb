//! Separable functions on the n-torus and their evaluation along a line.
//!
//! A value `f(x)` is produced by winding `x` around each circle coordinate
//! at its own frequency and summing per-coordinate envelope components, one
//! vector of output channels per coordinate.

use std::f64::consts::TAU;

use crate::real::Real;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("DimensionMismatch: {frequencies} frequencies for {components} components")]
    DimensionMismatch { frequencies: usize, components: usize },
    #[error("InvalidFrequency: {0}")]
    InvalidFrequency(String),
    #[error("InvalidComponent: {0}")]
    InvalidComponent(String),
}

/// How frequency-vector entries are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrequencyUnit {
    /// Entry `w` advances the coordinate by `x * w` radians.
    RadiansPerUnit,
    /// Entry `w` advances the coordinate by `2 pi * x * w` radians;
    /// equivalently the coordinate's period is `1/w` seconds.
    CyclesPerSecond,
}

/// Frequencies for each torus coordinate, with their unit declared.
#[derive(Debug, Clone)]
pub struct FrequencyVector {
    entries: Vec<Real>,
    unit: FrequencyUnit,
}

impl FrequencyVector {
    pub fn new(entries: Vec<Real>, unit: FrequencyUnit) -> Result<Self, TorusError> {
        if entries.is_empty() {
            return Err(TorusError::InvalidFrequency("frequency vector is empty".into()));
        }
        for (i, e) in entries.iter().enumerate() {
            match e.sign() {
                Ok(std::cmp::Ordering::Equal) => {
                    return Err(TorusError::InvalidFrequency(format!("entry {i} is zero")));
                }
                Ok(_) => {}
                Err(_) => {
                    return Err(TorusError::InvalidFrequency(format!(
                        "entry {i} is not certifiably nonzero"
                    )));
                }
            }
        }
        Ok(FrequencyVector { entries, unit })
    }

    pub fn entries(&self) -> &[Real] {
        &self.entries
    }

    pub fn unit(&self) -> FrequencyUnit {
        self.unit
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A 2 pi-periodic scalar envelope, one building block of a component.
#[derive(Debug, Clone, PartialEq)]
pub enum PeriodicEnvelope {
    /// `amplitude * sin(theta + phase)`.
    Sine { amplitude: f64, phase: f64 },
    /// A bell-shaped pulse per revolution: a linear rise over the first
    /// `attack_fraction` of the cycle, then an exponential decay with time
    /// constant `decay_fraction` of the cycle, shifted so the value returns
    /// to zero at the end of the revolution and stays continuous.
    Bell {
        amplitude: f64,
        attack_fraction: f64,
        decay_fraction: f64,
    },
}

impl PeriodicEnvelope {
    pub fn bell(amplitude: f64, attack_fraction: f64, decay_fraction: f64) -> Result<Self, TorusError> {
        if !(attack_fraction > 0.0 && attack_fraction < 1.0) {
            return Err(TorusError::InvalidComponent(
                "bell attack_fraction must lie strictly between 0 and 1".into(),
            ));
        }
        if decay_fraction <= 0.0 {
            return Err(TorusError::InvalidComponent(
                "bell decay_fraction must be positive".into(),
            ));
        }
        Ok(PeriodicEnvelope::Bell { amplitude, attack_fraction, decay_fraction })
    }

    /// Value at angle `theta`; periodic with period 2 pi.
    pub fn eval(&self, theta: f64) -> f64 {
        match *self {
            PeriodicEnvelope::Sine { amplitude, phase } => amplitude * (theta + phase).sin(),
            PeriodicEnvelope::Bell { amplitude, attack_fraction, decay_fraction } => {
                let t = theta.rem_euclid(TAU);
                let attack = TAU * attack_fraction;
                let decay = TAU * decay_fraction;
                // tail value subtracted and renormalized so the pulse is 0
                // at both ends of the revolution
                let tail = (-(TAU - attack) / decay).exp();
                if t <= attack {
                    amplitude * (t / attack)
                } else {
                    amplitude * ((-(t - attack) / decay).exp() - tail) / (1.0 - tail)
                }
            }
        }
    }

    /// An upper bound on `|d/d theta|`, used to budget how much a function
    /// value can move under a small angular offset.
    pub fn lipschitz_bound(&self) -> f64 {
        match *self {
            PeriodicEnvelope::Sine { amplitude, .. } => amplitude.abs(),
            PeriodicEnvelope::Bell { amplitude, attack_fraction, decay_fraction } => {
                let attack = TAU * attack_fraction;
                let decay = TAU * decay_fraction;
                let tail = (-(TAU - attack) / decay).exp();
                let rise = 1.0 / attack;
                let fall = 1.0 / (decay * (1.0 - tail));
                amplitude.abs() * rise.max(fall)
            }
        }
    }
}

/// Per-coordinate envelopes, one per output channel.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusComponent {
    pub channels: Vec<PeriodicEnvelope>,
}

impl TorusComponent {
    pub fn scalar(envelope: PeriodicEnvelope) -> Self {
        TorusComponent { channels: vec![envelope] }
    }
}

/// A separable function on the n-torus with m output channels:
/// the value at `(t1, ..., tn)` is the channel-wise sum of the
/// per-coordinate components.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusFunction {
    components: Vec<TorusComponent>,
    output_dimension: usize,
}

impl TorusFunction {
    pub fn new(components: Vec<TorusComponent>) -> Result<Self, TorusError> {
        let Some(first) = components.first() else {
            return Err(TorusError::InvalidComponent("no components".into()));
        };
        let m = first.channels.len();
        if m == 0 {
            return Err(TorusError::InvalidComponent("component with no channels".into()));
        }
        if components.iter().any(|c| c.channels.len() != m) {
            return Err(TorusError::InvalidComponent(
                "components disagree on the output dimension".into(),
            ));
        }
        Ok(TorusFunction { components, output_dimension: m })
    }

    pub fn components(&self) -> &[TorusComponent] {
        &self.components
    }

    pub fn output_dimension(&self) -> usize {
        self.output_dimension
    }
}

/// Evaluates `f(x) = Q(x w1, ..., x wn)` channel-wise.
pub fn evaluate(
    q: &TorusFunction,
    omega: &FrequencyVector,
    x: f64,
) -> Result<Vec<f64>, TorusError> {
    if omega.len() != q.components.len() {
        return Err(TorusError::DimensionMismatch {
            frequencies: omega.len(),
            components: q.components.len(),
        });
    }
    let mut out = vec![0.0; q.output_dimension];
    for (component, entry) in q.components.iter().zip(omega.entries()) {
        let w = entry.to_f64();
        let theta = match omega.unit() {
            FrequencyUnit::RadiansPerUnit => (x * w).rem_euclid(TAU),
            FrequencyUnit::CyclesPerSecond => (TAU * x * w).rem_euclid(TAU),
        };
        for (acc, envelope) in out.iter_mut().zip(&component.channels) {
            *acc += envelope.eval(theta);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fraction::Fraction;

    fn sine() -> PeriodicEnvelope {
        PeriodicEnvelope::Sine { amplitude: 1.0, phase: 0.0 }
    }

    /// The two-frequency sum `sin(x) + sin(2 pi x)`.
    fn two_sine_system() -> (TorusFunction, FrequencyVector) {
        let q = TorusFunction::new(vec![
            TorusComponent::scalar(sine()),
            TorusComponent::scalar(sine()),
        ])
        .unwrap();
        let omega = FrequencyVector::new(
            vec![Real::from_integer(1), Real::pi().mul(&Real::from_integer(2))],
            FrequencyUnit::RadiansPerUnit,
        )
        .unwrap();
        (q, omega)
    }

    #[test]
    fn vanishes_at_zero() {
        let (q, omega) = two_sine_system();
        let v = evaluate(&q, &omega, 0.0).unwrap();
        assert_eq!(v, vec![0.0]);
    }

    #[test]
    fn quarter_point_matches_direct_evaluation() {
        let (q, omega) = two_sine_system();
        let v = evaluate(&q, &omega, 0.25).unwrap();
        let expected = 0.25_f64.sin() + (std::f64::consts::PI / 2.0).sin();
        assert!((v[0] - expected).abs() < 1e-9, "got {} want {}", v[0], expected);
        assert!((v[0] - 1.2474).abs() < 1e-4);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let (q, _) = two_sine_system();
        let omega =
            FrequencyVector::new(vec![Real::from_integer(1)], FrequencyUnit::RadiansPerUnit)
                .unwrap();
        let err = evaluate(&q, &omega, 1.0).unwrap_err();
        assert!(matches!(err, TorusError::DimensionMismatch { .. }));
    }

    #[test]
    fn zero_frequency_rejected() {
        let err = FrequencyVector::new(
            vec![Real::from_integer(0)],
            FrequencyUnit::CyclesPerSecond,
        );
        assert!(err.is_err());
    }

    #[test]
    fn envelopes_are_two_pi_periodic() {
        let family = [
            sine(),
            PeriodicEnvelope::bell(0.8, 0.01, 0.2).unwrap(),
            PeriodicEnvelope::Sine { amplitude: 0.5, phase: 1.0 },
        ];
        for envelope in &family {
            for k in 0..200 {
                let theta = k as f64 * 0.37;
                let a = envelope.eval(theta);
                let b = envelope.eval(theta + TAU);
                assert!((a - b).abs() < 1e-12, "period failure at {theta}");
            }
        }
    }

    #[test]
    fn bell_is_continuous_across_the_wrap() {
        let bell = PeriodicEnvelope::bell(1.0, 0.05, 0.15).unwrap();
        let before = bell.eval(TAU - 1e-9);
        let after = bell.eval(TAU + 1e-9);
        assert!(before.abs() < 1e-6);
        assert!(after.abs() < 1e-6);
    }

    #[test]
    fn lipschitz_bound_holds_on_samples() {
        let family = [sine(), PeriodicEnvelope::bell(1.0, 0.02, 0.1).unwrap()];
        for envelope in &family {
            let bound = envelope.lipschitz_bound();
            let step = 1e-5;
            let mut worst: f64 = 0.0;
            for k in 0..1_000_000 {
                let theta = k as f64 * TAU / 1_000_000.0;
                let slope = (envelope.eval(theta + step) - envelope.eval(theta)) / step;
                worst = worst.max(slope.abs());
            }
            assert!(
                worst <= bound * (1.0 + 1e-3),
                "sampled slope {worst} exceeds bound {bound}"
            );
        }
    }

    #[test]
    fn single_component_reduces_to_plain_periodicity() {
        let q = TorusFunction::new(vec![TorusComponent::scalar(sine())]).unwrap();
        let omega = FrequencyVector::new(
            vec![Real::Rational(Fraction::new(3, 2))],
            FrequencyUnit::RadiansPerUnit,
        )
        .unwrap();
        // period in x is 2 pi / (3/2)
        let period = TAU / 1.5;
        for k in 0..50 {
            let x = k as f64 * 0.113;
            let a = evaluate(&q, &omega, x).unwrap()[0];
            let b = evaluate(&q, &omega, x + period).unwrap()[0];
            assert!((a - b).abs() < 1e-12);
        }
    }
}
