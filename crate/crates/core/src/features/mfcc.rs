//! Mel-frequency cepstral coefficients, plain and skip-coefficient variants.
//!
//! Pipeline: power spectrum → mel filterbank → `ln` with floor → orthonormal
//! DCT-II. The skip variant computes 120 cepstra and discards the leading
//! `n_skip`, which removes the loudness-carrying coefficient 0 and with it any
//! dependence on overall signal gain.

use ndarray::Array2;

use crate::audio::AudioBuffer;

use super::mel::mel_filterbank;
use super::stft::stft_power;
use super::{finish_sequence, FeatureConfig, FeatureError, FeatureFamily, FeatureSequence};

/// Floor applied to mel energies before the log, so digital silence maps to a
/// finite constant instead of −∞. Tests rely on this exact value.
pub const LOG_FLOOR: f64 = 1e-10;

pub fn mfcc(audio: &AudioBuffer, config: &FeatureConfig) -> Result<FeatureSequence, FeatureError> {
    if config.family != FeatureFamily::Mfcc {
        return Err(FeatureError::InvalidConfig("family must be plain MFCC".into()));
    }
    config.validate()?;
    let (log_mel, grid) = log_mel_energies(audio, config)?;
    let coeffs = dct_rows(&log_mel, config.n_mfcc);
    Ok(finish_sequence(coeffs, &grid, config.clone(), &audio.source_path))
}

pub fn mfcc_mod(
    audio: &AudioBuffer,
    config: &FeatureConfig,
) -> Result<FeatureSequence, FeatureError> {
    if config.family != FeatureFamily::MfccMod {
        return Err(FeatureError::InvalidConfig(
            "family must be the skip-coefficient MFCC variant".into(),
        ));
    }
    config.validate()?;
    let (log_mel, grid) = log_mel_energies(audio, config)?;
    let all = dct_rows(&log_mel, config.n_total);
    let kept = all.slice(ndarray::s![.., config.n_skip..]).to_owned();
    Ok(finish_sequence(kept, &grid, config.clone(), &audio.source_path))
}

fn log_mel_energies(
    audio: &AudioBuffer,
    config: &FeatureConfig,
) -> Result<(Array2<f64>, crate::audio::FrameGrid), FeatureError> {
    let (power, grid) = stft_power(audio, config.fft_size, config.hop_size)?;
    let fb = mel_filterbank(config.n_mels, config.fft_size, audio.sample_rate);
    let mut energies = power.dot(&fb.t());
    energies.mapv_inplace(|e| e.max(LOG_FLOOR).ln());
    Ok((energies, grid))
}

/// Orthonormal DCT-II of each row, keeping the first `n_out` coefficients.
///
/// Computed on the row with its first element subtracted, with the constant
/// added back to coefficient 0 afterwards. Algebraically identical, but it
/// makes two properties exact in floating point: a constant row yields
/// exactly-zero coefficients 1.., and adding a constant to a row leaves
/// coefficients 1.. bit-identical.
fn dct_rows(rows: &Array2<f64>, n_out: usize) -> Array2<f64> {
    let j_len = rows.ncols();
    let scale0 = (1.0 / j_len as f64).sqrt();
    let scale = (2.0 / j_len as f64).sqrt();

    let mut cos_table = Array2::<f64>::zeros((n_out, j_len));
    for k in 0..n_out {
        for j in 0..j_len {
            cos_table[[k, j]] =
                (std::f64::consts::PI * k as f64 * (2 * j + 1) as f64 / (2 * j_len) as f64).cos();
        }
    }

    let mut out = Array2::<f64>::zeros((rows.nrows(), n_out));
    let mut centered = vec![0.0f64; j_len];
    for (l, row) in rows.rows().into_iter().enumerate() {
        let v0 = row[0];
        for (j, c) in centered.iter_mut().enumerate() {
            *c = row[j] - v0;
        }
        for k in 0..n_out {
            let table_row = cos_table.row(k);
            let mut acc = 0.0;
            for (c, t) in centered.iter().zip(table_row.iter()) {
                acc += c * t;
            }
            out[[l, k]] = if k == 0 {
                scale0 * acc + (j_len as f64).sqrt() * v0
            } else {
                scale * acc
            };
        }
    }
    out
}
