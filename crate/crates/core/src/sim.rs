//! Synthetic fixtures: analytic test signals, time warps, and simulated
//! annotators.
//!
//! The test signal is an analytic function of *content time*: a melody whose
//! note boundaries and beat positions are known exactly. Rendering it through
//! a time warp moves those note onsets around (tempo) while every oscillator
//! keeps its nominal frequency — the way two performances of the same piece
//! differ in timing but not in pitch. That gives end-to-end tests an exact
//! notion of where every beat "really" lies in both renderings, with content
//! that a spectral aligner can actually match across them.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::audio::AudioBuffer;

/// Monotone piecewise-linear map from rendering time to content time.
///
/// Knots are (render_t, content_u) pairs; segments between knots have
/// constant slope (the local tempo ratio).
#[derive(Debug, Clone)]
pub struct TimeMap {
    knots: Vec<(f64, f64)>,
}

impl TimeMap {
    /// Identity map over `duration` seconds.
    pub fn identity(duration: f64) -> Self {
        assert!(duration > 0.0);
        TimeMap {
            knots: vec![(0.0, 0.0), (duration, duration)],
        }
    }

    /// Random map covering `content_duration` seconds of content with
    /// segments of roughly `segment_len` seconds (render time) and slopes
    /// drawn uniformly from `slope_range`.
    pub fn random(
        content_duration: f64,
        segment_len: f64,
        slope_range: (f64, f64),
        seed: u64,
    ) -> Self {
        assert!(content_duration > 0.0 && segment_len > 0.0);
        assert!(0.0 < slope_range.0 && slope_range.0 <= slope_range.1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut knots = vec![(0.0, 0.0)];
        let (mut t, mut u) = (0.0f64, 0.0f64);
        while u < content_duration {
            let slope = rng.gen_range(slope_range.0..=slope_range.1);
            let mut dt = segment_len;
            if u + slope * dt >= content_duration {
                // Final segment: stop exactly at the end of the content.
                dt = (content_duration - u) / slope;
            }
            t += dt;
            u += slope * dt;
            knots.push((t, u));
        }
        // Kill accumulated rounding on the final knot.
        knots.last_mut().unwrap().1 = content_duration;
        TimeMap { knots }
    }

    pub fn render_duration(&self) -> f64 {
        self.knots.last().unwrap().0
    }

    pub fn content_duration(&self) -> f64 {
        self.knots.last().unwrap().1
    }

    /// Content time at render time `t` (clamped to the map's range).
    pub fn apply(&self, t: f64) -> f64 {
        Self::interp(&self.knots, t, |k| (k.0, k.1))
    }

    /// Render time at content time `u` (clamped to the map's range).
    pub fn invert(&self, u: f64) -> f64 {
        Self::interp(&self.knots, u, |k| (k.1, k.0))
    }

    fn interp(knots: &[(f64, f64)], x: f64, axes: impl Fn(&(f64, f64)) -> (f64, f64)) -> f64 {
        let (x0, y0) = axes(&knots[0]);
        if x <= x0 {
            return y0;
        }
        let (xn, yn) = axes(knots.last().unwrap());
        if x >= xn {
            return yn;
        }
        let idx = knots.partition_point(|k| axes(k).0 <= x);
        let (xa, ya) = axes(&knots[idx - 1]);
        let (xb, yb) = axes(&knots[idx]);
        // Slope form: on an identity segment the slope is exactly 1.0, so
        // apply/invert round-trip bit-exactly there.
        ya + (x - xa) * ((yb - ya) / (xb - xa))
    }

    /// Slopes (content seconds per render second) of all segments.
    pub fn slopes(&self) -> Vec<f64> {
        self.knots
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
struct Note {
    start: f64,
    f0: f64,
    /// Accumulated fundamental phase at the note boundary, keeping the
    /// oscillator continuous across note changes.
    phase0: f64,
}

/// Analytic harmonic-plus-noise signal defined over content time.
///
/// A melody of random scale notes (harmonic stacks with a fast attack and
/// slow decay) over a fixed bed of incommensurate low-level sinusoids. The
/// value at any real-valued time is exact, so warped renderings introduce no
/// interpolation artifacts.
#[derive(Debug, Clone)]
pub struct HarmonicSignal {
    notes: Vec<Note>,
    bed: Vec<(f64, f64, f64)>, // (frequency, amplitude, phase)
    duration: f64,
}

const HARMONIC_COUNT: usize = 6;
const NOTE_LEVEL: f64 = 0.25;
const ATTACK_S: f64 = 0.008;
const DECAY_S: f64 = 1.2;

impl HarmonicSignal {
    pub fn random(duration: f64, seed: u64) -> Self {
        assert!(duration > 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        let mut notes = Vec::new();
        let mut start = 0.0f64;
        let mut phase = 0.0f64;
        let mut prev_step = i32::MIN;
        while start < duration {
            // Semitone steps around A3; force an actual pitch change so
            // consecutive notes give the aligner something to lock onto.
            let mut step = rng.gen_range(-12..=12);
            if step == prev_step {
                step = if step < 12 { step + 1 } else { step - 2 };
            }
            prev_step = step;
            let f0 = 220.0 * (2.0f64).powf(step as f64 / 12.0);
            notes.push(Note {
                start,
                f0,
                phase0: phase,
            });
            let len = rng.gen_range(0.3..0.6);
            // Advance the phase from the onset difference, the same arithmetic
            // renderers use, so recomputed baselines agree to the last bit.
            let next = start + len;
            phase += std::f64::consts::TAU * f0 * (next - start);
            start = next;
        }

        let bed = (0..48)
            .map(|_| {
                let r: f64 = rng.gen_range(0.0..1.0);
                let freq = 80.0 * (7000.0f64 / 80.0).powf(r);
                let amp = 0.006 * (80.0 / freq).powf(0.3);
                let phase = rng.gen_range(0.0..std::f64::consts::TAU);
                (freq, amp, phase)
            })
            .collect();

        HarmonicSignal {
            notes,
            bed,
            duration,
        }
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    /// Signal value at content time `u`; zero outside [0, duration].
    pub fn sample(&self, u: f64) -> f64 {
        if u < 0.0 || u > self.duration {
            return 0.0;
        }
        let idx = self.notes.partition_point(|n| n.start <= u);
        let idx = idx.saturating_sub(1);
        self.value_at(idx, u - self.notes[idx].start, self.notes[idx].phase0, u)
    }

    /// One sample of the melody-plus-bed mix: note `idx`, `age` seconds past
    /// its onset, fundamental phase `phase_base` at that onset, and the bed
    /// evaluated at `bed_time`. Callers choose whether those clocks run in
    /// content time or in render time.
    fn value_at(&self, idx: usize, age: f64, phase_base: f64, bed_time: f64) -> f64 {
        let note = &self.notes[idx];
        let env = (1.0 - (-age / ATTACK_S).exp()) * (-age / DECAY_S).exp();
        let phase = phase_base + std::f64::consts::TAU * note.f0 * age;
        let mut v = 0.0;
        for h in 1..=HARMONIC_COUNT {
            let hf = h as f64;
            v += NOTE_LEVEL / (hf * hf) * (hf * phase).sin();
        }
        v *= env;
        for &(freq, amp, ph) in &self.bed {
            v += amp * (std::f64::consts::TAU * freq * bed_time + ph).sin();
        }
        v
    }
}

/// Render the signal through a time map as a tempo warp: each note's onset is
/// moved to the render time the map assigns it, but its oscillators run at
/// their nominal frequencies and its envelope at its nominal speed, so pitch
/// and timbre survive the warp the way they do across two performances of the
/// same piece. With [`TimeMap::identity`] this reproduces direct sampling of
/// the content signal exactly.
pub fn render(signal: &HarmonicSignal, map: &TimeMap, sample_rate: u32, label: &str) -> AudioBuffer {
    let n = (map.render_duration() * sample_rate as f64).floor() as usize;

    // Note onsets in render time, plus fundamental-phase baselines accumulated
    // over the *render* length of each note so the oscillator stays continuous
    // across note changes in this rendering.
    let onsets: Vec<f64> = signal
        .notes
        .iter()
        .map(|nt| map.invert(nt.start))
        .collect();
    let mut phases = Vec::with_capacity(onsets.len());
    let mut phase = 0.0f64;
    for (k, nt) in signal.notes.iter().enumerate() {
        phases.push(phase);
        if k + 1 < onsets.len() {
            phase += std::f64::consts::TAU * nt.f0 * (onsets[k + 1] - onsets[k]);
        }
    }

    let samples = (0..n)
        .map(|i| {
            let t = i as f64 / sample_rate as f64;
            let idx = onsets.partition_point(|&o| o <= t).saturating_sub(1);
            signal.value_at(idx, t - onsets[idx], phases[idx], t) as f32
        })
        .collect();
    AudioBuffer {
        samples,
        sample_rate,
        source_path: label.to_string(),
    }
}

/// Beat markers every `spacing` seconds of content time, starting at
/// `spacing` and staying at least `spacing / 2` clear of the end.
pub fn content_markers(content_duration: f64, spacing: f64) -> Vec<f64> {
    assert!(spacing > 0.0);
    let mut out = Vec::new();
    let mut t = spacing;
    while t < content_duration - spacing / 2.0 {
        out.push(t);
        t += spacing;
    }
    out
}

/// One simulated annotator: true times plus i.i.d. Gaussian jitter, kept
/// strictly increasing so the result is always a writable marker sequence.
pub fn simulate_annotator(truth: &[f64], sigma_s: f64, rng: &mut impl Rng) -> Vec<f64> {
    let noise = Normal::new(0.0, sigma_s).expect("sigma must be finite and >= 0");
    let mut out: Vec<f64> = truth.iter().map(|t| t + noise.sample(rng)).collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for i in 1..out.len() {
        if out[i] <= out[i - 1] {
            out[i] = out[i - 1] + 1e-9;
        }
    }
    out
}
