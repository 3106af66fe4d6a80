//! Pitch-class (chroma) features from the STFT, plus the quantized and
//! temporally smoothed variant used for coarse, tempo-robust matching.

use ndarray::{Array1, Array2};

use crate::audio::AudioBuffer;

use super::stft::stft_power;
use super::{finish_sequence, FeatureConfig, FeatureError, FeatureFamily, FeatureSequence};

/// Bins below this frequency (Hz) are ignored — roughly C1, the practical
/// bottom of pitched musical content.
pub const CHROMA_FMIN_HZ: f64 = 32.7;

/// Quantization thresholds and the per-step weight for the smoothed variant.
const QUANT_THRESHOLDS: [f64; 4] = [0.05, 0.1, 0.2, 0.4];
const QUANT_STEP: f64 = 0.25;

/// Temporal smoothing window length in frames.
const SMOOTH_LEN: usize = 41;

/// 12-class chroma: each spectral bin at or above [`CHROMA_FMIN_HZ`] is mapped
/// to the nearest equal-tempered pitch class relative to `tuning_ref` (class 0
/// = C when `tuning_ref` is an A), bin energies are accumulated per class, and
/// every frame is scaled to peak 1 (all-zero frames stay zero).
pub fn chroma_stft(
    audio: &AudioBuffer,
    config: &FeatureConfig,
) -> Result<FeatureSequence, FeatureError> {
    if config.family != FeatureFamily::ChromaStft {
        return Err(FeatureError::InvalidConfig("family must be chroma".into()));
    }
    config.validate()?;
    let (raw, grid) = accumulate_classes(audio, config)?;
    let mut frames = raw;
    for mut row in frames.rows_mut() {
        let max = row.iter().cloned().fold(0.0f64, f64::max);
        if max > 0.0 {
            row.mapv_inplace(|v| v / max);
        }
    }
    Ok(finish_sequence(frames, &grid, config.clone(), &audio.source_path))
}

/// Smoothed chroma: per frame l1-normalize and quantize through the threshold
/// ladder, then convolve each class band with a Hann window over time and
/// l2-normalize each frame. Slow-moving and robust to local dynamics.
pub fn chroma_cens(
    audio: &AudioBuffer,
    config: &FeatureConfig,
) -> Result<FeatureSequence, FeatureError> {
    if config.family != FeatureFamily::ChromaCens {
        return Err(FeatureError::InvalidConfig(
            "family must be the smoothed chroma variant".into(),
        ));
    }
    config.validate()?;
    let (mut frames, grid) = accumulate_classes(audio, config)?;

    for mut row in frames.rows_mut() {
        let sum: f64 = row.iter().sum();
        if sum > 0.0 {
            row.mapv_inplace(|v| quantize(v / sum));
        }
    }

    let frames = smooth_bands(&frames);

    let mut frames = frames;
    for mut row in frames.rows_mut() {
        let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            row.mapv_inplace(|v| v / norm);
        }
    }
    Ok(finish_sequence(frames, &grid, config.clone(), &audio.source_path))
}

fn quantize(v: f64) -> f64 {
    QUANT_STEP * QUANT_THRESHOLDS.iter().filter(|&&t| v > t).count() as f64
}

/// Symmetric Hann smoothing kernel, normalized to unit sum.
pub(crate) fn smoothing_kernel() -> Array1<f64> {
    let mut k = Array1::from_iter((0..SMOOTH_LEN).map(|n| {
        0.5 - 0.5 * (std::f64::consts::TAU * n as f64 / (SMOOTH_LEN - 1) as f64).cos()
    }));
    let sum = k.sum();
    k.mapv_inplace(|v| v / sum);
    k
}

/// Same-length convolution of each class band with the smoothing kernel,
/// zero-padded at the edges.
fn smooth_bands(frames: &Array2<f64>) -> Array2<f64> {
    let kernel = smoothing_kernel();
    let half = SMOOTH_LEN / 2;
    let l_len = frames.nrows();
    let mut out = Array2::<f64>::zeros(frames.raw_dim());
    for l in 0..l_len {
        for (o, &w) in kernel.iter().enumerate() {
            // Kernel tap o looks at input frame l + o - half.
            let src = l as isize + o as isize - half as isize;
            if src >= 0 && (src as usize) < l_len {
                for c in 0..frames.ncols() {
                    out[[l, c]] += w * frames[[src as usize, c]];
                }
            }
        }
    }
    out
}

fn accumulate_classes(
    audio: &AudioBuffer,
    config: &FeatureConfig,
) -> Result<(Array2<f64>, crate::audio::FrameGrid), FeatureError> {
    let (power, grid) = stft_power(audio, config.fft_size, config.hop_size)?;
    let n_bins = power.ncols();
    let class_of: Vec<Option<usize>> = (0..n_bins)
        .map(|k| {
            let f = k as f64 * audio.sample_rate as f64 / config.fft_size as f64;
            if f < CHROMA_FMIN_HZ {
                None
            } else {
                Some(pitch_class(f, config.tuning_ref))
            }
        })
        .collect();

    let mut chroma = Array2::<f64>::zeros((grid.frame_count, 12));
    for (l, row) in power.rows().into_iter().enumerate() {
        for (k, &p) in row.iter().enumerate() {
            if let Some(c) = class_of[k] {
                chroma[[l, c]] += p;
            }
        }
    }
    Ok((chroma, grid))
}

/// Nearest equal-tempered pitch class of a frequency, with class 0 = C when
/// the reference is an A (the reference lands on class 9).
fn pitch_class(freq: f64, tuning_ref: f64) -> usize {
    let semitones = (12.0 * (freq / tuning_ref).log2()).round() as i64;
    (semitones + 9).rem_euclid(12) as usize
}
