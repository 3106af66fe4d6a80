//! Short-time Fourier transform over the zero-padded frame grid.

use ndarray::Array2;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::audio::{AudioBuffer, FrameGrid};

use super::FeatureError;

/// Periodic Hann window: `w[n] = 0.5 − 0.5·cos(2πn/len)`.
pub fn hann_window(len: usize) -> Vec<f64> {
    (0..len)
        .map(|n| 0.5 - 0.5 * (std::f64::consts::TAU * n as f64 / len as f64).cos())
        .collect()
}

/// Power spectrogram: `L × (fft/2 + 1)` squared magnitudes of the Hann-windowed
/// real-input DFT, one row per frame of the grid.
pub fn stft_power(
    audio: &AudioBuffer,
    fft_size: usize,
    hop_size: usize,
) -> Result<(Array2<f64>, FrameGrid), FeatureError> {
    if hop_size == 0 || hop_size > fft_size {
        return Err(FeatureError::InvalidConfig(format!(
            "hop_size {hop_size} must satisfy 0 < hop <= fft ({fft_size})"
        )));
    }
    let grid = FrameGrid::new(audio.samples.len(), fft_size, hop_size, audio.sample_rate)?;

    let window = hann_window(fft_size);
    let fft = FftPlanner::<f64>::new().plan_fft_forward(fft_size);
    let n_bins = fft_size / 2 + 1;

    let mut power = Array2::<f64>::zeros((grid.frame_count, n_bins));
    let mut buf = vec![Complex::new(0.0, 0.0); fft_size];
    let mut scratch = vec![Complex::new(0.0, 0.0); fft.get_inplace_scratch_len()];

    for l in 0..grid.frame_count {
        let start = l * hop_size;
        let avail = audio.samples.len().saturating_sub(start).min(fft_size);
        for n in 0..avail {
            buf[n] = Complex::new(audio.samples[start + n] as f64 * window[n], 0.0);
        }
        for slot in buf.iter_mut().take(fft_size).skip(avail) {
            *slot = Complex::new(0.0, 0.0);
        }
        fft.process_with_scratch(&mut buf, &mut scratch);
        let mut row = power.row_mut(l);
        for (k, slot) in buf.iter().take(n_bins).enumerate() {
            row[k] = slot.re * slot.re + slot.im * slot.im;
        }
    }
    Ok((power, grid))
}

/// Magnitude spectrogram — elementwise square root of [`stft_power`].
pub fn stft_magnitude(
    audio: &AudioBuffer,
    fft_size: usize,
    hop_size: usize,
) -> Result<(Array2<f64>, FrameGrid), FeatureError> {
    let (mut power, grid) = stft_power(audio, fft_size, hop_size)?;
    power.mapv_inplace(f64::sqrt);
    Ok((power, grid))
}
