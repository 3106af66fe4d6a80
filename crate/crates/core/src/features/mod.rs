//! Feature extraction: MFCC, the skip-coefficient MFCC variant, STFT chroma,
//! and smoothed/quantized (CENS-style) chroma.
//!
//! All features are computed in `f64` and returned as an `L×D` matrix with one
//! center time-stamp per frame. The on-disk cache stores `f32` — see [`cache`].

mod chroma;
mod mel;
mod mfcc;
mod stft;

pub mod cache;

pub use chroma::{chroma_cens, chroma_stft};
pub use mfcc::{mfcc, mfcc_mod};
pub use stft::{hann_window, stft_magnitude, stft_power};

use ndarray::Array2;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::audio::{AudioError, FrameGrid};

#[derive(Debug, Error)]
pub enum FeatureError {
    #[error("invalid feature config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Audio(#[from] AudioError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeatureFamily {
    Mfcc,
    MfccMod,
    ChromaStft,
    ChromaCens,
}

impl FeatureFamily {
    pub fn name(&self) -> &'static str {
        match self {
            FeatureFamily::Mfcc => "mfcc",
            FeatureFamily::MfccMod => "mfcc_mod",
            FeatureFamily::ChromaStft => "chroma_stft",
            FeatureFamily::ChromaCens => "chroma_cens",
        }
    }
}

/// Total cepstra computed by the skip-coefficient MFCC variant before the
/// leading `n_skip` are dropped.
pub const MFCC_MOD_TOTAL: usize = 120;

/// Default mel-band count; must stay ≥ [`MFCC_MOD_TOTAL`].
pub const DEFAULT_N_MELS: usize = 128;

/// Default reference frequency (Hz) for the pitch-class mapping.
pub const DEFAULT_TUNING_HZ: f64 = 440.0;

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureConfig {
    pub family: FeatureFamily,
    pub fft_size: usize,
    pub hop_size: usize,
    /// Retained cepstral coefficients (plain MFCC only).
    pub n_mfcc: usize,
    /// Cepstra computed before skipping (skip variant only; fixed at 120).
    pub n_total: usize,
    /// Leading cepstra discarded (skip variant only).
    pub n_skip: usize,
    pub n_mels: usize,
    /// Reference frequency in Hz for chroma pitch classes.
    pub tuning_ref: f64,
}

impl FeatureConfig {
    pub fn mfcc(fft_size: usize, hop_size: usize, n_mfcc: usize) -> Self {
        FeatureConfig {
            family: FeatureFamily::Mfcc,
            fft_size,
            hop_size,
            n_mfcc,
            n_total: 0,
            n_skip: 0,
            n_mels: DEFAULT_N_MELS,
            tuning_ref: DEFAULT_TUNING_HZ,
        }
    }

    pub fn mfcc_mod(fft_size: usize, hop_size: usize, n_skip: usize) -> Self {
        FeatureConfig {
            family: FeatureFamily::MfccMod,
            fft_size,
            hop_size,
            n_mfcc: 0,
            n_total: MFCC_MOD_TOTAL,
            n_skip,
            n_mels: DEFAULT_N_MELS,
            tuning_ref: DEFAULT_TUNING_HZ,
        }
    }

    pub fn chroma_stft(fft_size: usize, hop_size: usize) -> Self {
        FeatureConfig {
            family: FeatureFamily::ChromaStft,
            fft_size,
            hop_size,
            n_mfcc: 0,
            n_total: 0,
            n_skip: 0,
            n_mels: DEFAULT_N_MELS,
            tuning_ref: DEFAULT_TUNING_HZ,
        }
    }

    pub fn chroma_cens(fft_size: usize, hop_size: usize) -> Self {
        FeatureConfig {
            family: FeatureFamily::ChromaCens,
            ..FeatureConfig::chroma_stft(fft_size, hop_size)
        }
    }

    /// Output dimensionality for this configuration.
    pub fn dimension(&self) -> usize {
        match self.family {
            FeatureFamily::Mfcc => self.n_mfcc,
            FeatureFamily::MfccMod => self.n_total - self.n_skip,
            FeatureFamily::ChromaStft | FeatureFamily::ChromaCens => 12,
        }
    }

    pub fn validate(&self) -> Result<(), FeatureError> {
        let bad = |msg: String| Err(FeatureError::InvalidConfig(msg));
        if self.fft_size < 2 {
            return bad(format!("fft_size {} too small", self.fft_size));
        }
        if self.hop_size == 0 || self.hop_size > self.fft_size {
            return bad(format!(
                "hop_size {} must satisfy 0 < hop <= fft ({})",
                self.hop_size, self.fft_size
            ));
        }
        match self.family {
            FeatureFamily::Mfcc => {
                if self.n_mfcc == 0 || self.n_mfcc > self.n_mels {
                    return bad(format!(
                        "n_mfcc {} must be in 1..={}",
                        self.n_mfcc, self.n_mels
                    ));
                }
            }
            FeatureFamily::MfccMod => {
                if self.n_total != MFCC_MOD_TOTAL {
                    return bad(format!("n_total must be {MFCC_MOD_TOTAL}, got {}", self.n_total));
                }
                if self.n_skip >= self.n_total {
                    return bad(format!(
                        "n_skip {} leaves no coefficients (n_total {})",
                        self.n_skip, self.n_total
                    ));
                }
                if self.n_mels < self.n_total {
                    return bad(format!(
                        "n_mels {} must be >= n_total {}",
                        self.n_mels, self.n_total
                    ));
                }
                if self.n_skip % 10 != 0 || self.n_skip == 0 || self.n_skip > 80 {
                    log::warn!(
                        "n_skip {} outside the usual 10..=80 step-10 range",
                        self.n_skip
                    );
                }
            }
            FeatureFamily::ChromaStft | FeatureFamily::ChromaCens => {
                if !(self.tuning_ref.is_finite() && self.tuning_ref > 0.0) {
                    return bad(format!("tuning_ref {} must be positive", self.tuning_ref));
                }
            }
        }
        Ok(())
    }

    /// Stable digest over every parameter that affects the output values.
    /// Used as the feature-cache key and as part of grid-cell identifiers.
    pub fn digest(&self) -> [u8; 32] {
        let canonical = match self.family {
            FeatureFamily::Mfcc => format!(
                "family=mfcc;fft={};hop={};n_mfcc={};n_mels={}",
                self.fft_size, self.hop_size, self.n_mfcc, self.n_mels
            ),
            FeatureFamily::MfccMod => format!(
                "family=mfcc_mod;fft={};hop={};n_total={};n_skip={};n_mels={}",
                self.fft_size, self.hop_size, self.n_total, self.n_skip, self.n_mels
            ),
            FeatureFamily::ChromaStft | FeatureFamily::ChromaCens => format!(
                "family={};fft={};hop={};tuning={}",
                self.family.name(),
                self.fft_size,
                self.hop_size,
                self.tuning_ref
            ),
        };
        Sha256::digest(canonical.as_bytes()).into()
    }

    pub fn digest_hex(&self) -> String {
        self.digest().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// A time-stamped feature matrix: `frames` is `L×D`, `times[l]` is the center
/// time of frame `l` in seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureSequence {
    pub frames: Array2<f64>,
    pub times: Vec<f64>,
    pub config: FeatureConfig,
    pub source: String,
    pub sample_rate: u32,
}

impl FeatureSequence {
    pub fn len(&self) -> usize {
        self.frames.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.nrows() == 0
    }

    pub fn dim(&self) -> usize {
        self.frames.ncols()
    }
}

pub(crate) fn finish_sequence(
    frames: Array2<f64>,
    grid: &FrameGrid,
    config: FeatureConfig,
    source: &str,
) -> FeatureSequence {
    debug_assert_eq!(frames.nrows(), grid.frame_count);
    debug_assert!(frames.iter().all(|v| v.is_finite()), "non-finite feature");
    FeatureSequence {
        frames,
        times: grid.times(),
        config,
        source: source.to_string(),
        sample_rate: grid.sample_rate,
    }
}

/// Dispatch on the configured family.
pub fn extract(
    audio: &crate::audio::AudioBuffer,
    config: &FeatureConfig,
) -> Result<FeatureSequence, FeatureError> {
    match config.family {
        FeatureFamily::Mfcc => mfcc(audio, config),
        FeatureFamily::MfccMod => mfcc_mod(audio, config),
        FeatureFamily::ChromaStft => chroma_stft(audio, config),
        FeatureFamily::ChromaCens => chroma_cens(audio, config),
    }
}
