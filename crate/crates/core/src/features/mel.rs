//! Triangular mel filterbank on the STFT bin grid.

use ndarray::Array2;

/// `mel(f) = 2595·log10(1 + f/700)`.
pub fn hz_to_mel(hz: f64) -> f64 {
    2595.0 * (1.0 + hz / 700.0).log10()
}

pub fn mel_to_hz(mel: f64) -> f64 {
    700.0 * (10f64.powf(mel / 2595.0) - 1.0)
}

/// Filterbank matrix `n_mels × (fft/2 + 1)`: triangular filters with edges
/// equally spaced on the mel scale over `[0, sr/2]`, each normalized to unit
/// area (height `2/(f_hi − f_lo)`), sampled at the bin center frequencies.
pub fn mel_filterbank(n_mels: usize, fft_size: usize, sample_rate: u32) -> Array2<f64> {
    let n_bins = fft_size / 2 + 1;
    let nyquist = sample_rate as f64 / 2.0;
    let mel_max = hz_to_mel(nyquist);
    let edges: Vec<f64> = (0..n_mels + 2)
        .map(|i| mel_to_hz(mel_max * i as f64 / (n_mels + 1) as f64))
        .collect();

    let mut fb = Array2::<f64>::zeros((n_mels, n_bins));
    for j in 0..n_mels {
        let (lo, mid, hi) = (edges[j], edges[j + 1], edges[j + 2]);
        let height = 2.0 / (hi - lo);
        for k in 0..n_bins {
            let f = k as f64 * sample_rate as f64 / fft_size as f64;
            let w = ((f - lo) / (mid - lo)).min((hi - f) / (hi - mid));
            if w > 0.0 {
                fb[[j, k]] = w * height;
            }
        }
    }
    fb
}
