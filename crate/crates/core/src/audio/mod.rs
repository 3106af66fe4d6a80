//! Audio decoding and the frame-center time model.
//!
//! Everything downstream works on mono buffers and time-stamps frames at the
//! *center* of their analysis block: frame `l` with FFT size `F` and hop `H`
//! covers samples `[l·H, l·H + F)` and carries the time-stamp
//! `(l·H + F/2) / sample_rate`.

mod wav;

pub use wav::{load_wav, write_wav, WavEncoding};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AudioError {
    #[error("I/O error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("not a RIFF/WAVE file ({0})")]
    MalformedHeader(String),
    #[error("unsupported WAVE encoding: {0}")]
    UnsupportedEncoding(String),
    #[error("truncated data: header declares {declared} bytes, file holds {available}")]
    TruncatedData { declared: usize, available: usize },
    #[error("frame index {index} out of range (frame_count {count})")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("invalid frame grid: hop {hop} must satisfy 0 < hop <= fft {fft}")]
    InvalidGrid { fft: usize, hop: usize },
}

/// Decoded mono signal. Samples are in `[-1, 1]`; integer PCM is scaled by the
/// format's full-scale value, float input is clamped.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioBuffer {
    pub samples: Vec<f32>,
    pub sample_rate: u32,
    pub source_path: String,
}

impl AudioBuffer {
    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }
}

/// Analysis framing of a signal: block size, hop, and how many blocks cover it.
///
/// The signal is conceptually zero-padded at the tail so the last block is
/// always full; a signal shorter than one block still yields one frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameGrid {
    pub fft_size: usize,
    pub hop_size: usize,
    pub frame_count: usize,
    pub sample_rate: u32,
}

impl FrameGrid {
    pub fn new(
        signal_len: usize,
        fft_size: usize,
        hop_size: usize,
        sample_rate: u32,
    ) -> Result<Self, AudioError> {
        if hop_size == 0 || hop_size > fft_size {
            return Err(AudioError::InvalidGrid {
                fft: fft_size,
                hop: hop_size,
            });
        }
        let frame_count = if signal_len <= fft_size {
            1
        } else {
            // Last frame start is the smallest multiple of hop at or past
            // len - fft, so the tail is covered (and zero-padded).
            (signal_len - fft_size).div_ceil(hop_size) + 1
        };
        Ok(FrameGrid {
            fft_size,
            hop_size,
            frame_count,
            sample_rate,
        })
    }

    /// Time-stamps for every frame, in order.
    pub fn times(&self) -> Vec<f64> {
        (0..self.frame_count)
            .map(|l| frame_time_unchecked(l, self))
            .collect()
    }
}

/// Center time of frame `frame_index` in seconds:
/// `(frame_index · hop + fft/2) / sample_rate`.
pub fn frame_time(frame_index: usize, grid: &FrameGrid) -> Result<f64, AudioError> {
    if frame_index >= grid.frame_count {
        return Err(AudioError::IndexOutOfRange {
            index: frame_index,
            count: grid.frame_count,
        });
    }
    Ok(frame_time_unchecked(frame_index, grid))
}

fn frame_time_unchecked(frame_index: usize, grid: &FrameGrid) -> f64 {
    (frame_index as f64 * grid.hop_size as f64 + grid.fft_size as f64 / 2.0)
        / grid.sample_rate as f64
}
