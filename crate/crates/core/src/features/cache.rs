//! Flat binary feature cache: one matrix per (recording, config).
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! offset  size  field
//!      0     8  magic "PFALFEAT"
//!      8     4  format version (currently 1)
//!     12     4  L  (frame count)
//!     16     4  D  (dimension)
//!     20     4  sample rate in Hz
//!     24    32  config digest (sha-256 of the canonical config string)
//!     56  L·D·4 payload, row-major f32
//! ```
//!
//! The payload is `f32`, so caching is lossy relative to the in-memory `f64`
//! matrices. Callers that need run-to-run byte stability should push features
//! through [`quantize_in_place`] whether or not they hit the cache.

use std::fs;
use std::path::Path;

use ndarray::Array2;
use thiserror::Error;

use crate::audio::FrameGrid;

use super::{FeatureConfig, FeatureSequence};

const MAGIC: &[u8; 8] = b"PFALFEAT";
const VERSION: u32 = 1;
const HEADER_LEN: usize = 56;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}: not a feature-cache file (bad magic)")]
    BadMagic(String),
    #[error("{path}: unsupported cache version {found} (expected {VERSION})")]
    UnsupportedVersion { path: String, found: u32 },
    #[error("{0}: cached config digest does not match the requested config")]
    DigestMismatch(String),
    #[error("{path}: corrupt cache file: {detail}")]
    Corrupt { path: String, detail: String },
}

pub fn write_feature_cache(
    path: impl AsRef<Path>,
    seq: &FeatureSequence,
) -> Result<(), CacheError> {
    let path = path.as_ref();
    let (l_len, d_len) = (seq.len(), seq.dim());
    let mut out = Vec::with_capacity(HEADER_LEN + l_len * d_len * 4);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(l_len as u32).to_le_bytes());
    out.extend_from_slice(&(d_len as u32).to_le_bytes());
    out.extend_from_slice(&seq.sample_rate.to_le_bytes());
    out.extend_from_slice(&seq.config.digest());
    for &v in seq.frames.iter() {
        out.extend_from_slice(&(v as f32).to_le_bytes());
    }
    fs::write(path, &out).map_err(|source| CacheError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Load a cached matrix, verifying it was produced by `config`. Frame
/// time-stamps are rebuilt from the config's grid and the stored sample rate.
pub fn read_feature_cache(
    path: impl AsRef<Path>,
    config: &FeatureConfig,
    source: &str,
) -> Result<FeatureSequence, CacheError> {
    let path = path.as_ref();
    let path_str = path.display().to_string();
    let bytes = fs::read(path).map_err(|source| CacheError::Io {
        path: path_str.clone(),
        source,
    })?;

    if bytes.len() < HEADER_LEN || &bytes[0..8] != MAGIC {
        return Err(CacheError::BadMagic(path_str));
    }
    let version = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
    if version != VERSION {
        return Err(CacheError::UnsupportedVersion {
            path: path_str,
            found: version,
        });
    }
    let l_len = u32::from_le_bytes(bytes[12..16].try_into().unwrap()) as usize;
    let d_len = u32::from_le_bytes(bytes[16..20].try_into().unwrap()) as usize;
    let sample_rate = u32::from_le_bytes(bytes[20..24].try_into().unwrap());
    if bytes[24..56] != config.digest() {
        return Err(CacheError::DigestMismatch(path_str));
    }
    if d_len != config.dimension() {
        return Err(CacheError::Corrupt {
            path: path_str,
            detail: format!("dimension {d_len} != config dimension {}", config.dimension()),
        });
    }
    let expected = l_len
        .checked_mul(d_len)
        .and_then(|n| n.checked_mul(4))
        .map(|n| n + HEADER_LEN);
    if expected != Some(bytes.len()) {
        return Err(CacheError::Corrupt {
            path: path_str,
            detail: format!(
                "payload length {} != {l_len}x{d_len} floats",
                bytes.len() - HEADER_LEN.min(bytes.len())
            ),
        });
    }

    let mut frames = Array2::<f64>::zeros((l_len, d_len));
    for (i, v) in frames.iter_mut().enumerate() {
        let off = HEADER_LEN + i * 4;
        *v = f32::from_le_bytes(bytes[off..off + 4].try_into().unwrap()) as f64;
    }

    let grid = FrameGrid {
        fft_size: config.fft_size,
        hop_size: config.hop_size,
        frame_count: l_len,
        sample_rate,
    };
    Ok(FeatureSequence {
        frames,
        times: grid.times(),
        config: config.clone(),
        source: source.to_string(),
        sample_rate,
    })
}

/// Round every value through `f32`, the cache payload precision. Applying this
/// to freshly computed features makes results independent of whether they came
/// from the cache or not.
pub fn quantize_in_place(seq: &mut FeatureSequence) {
    seq.frames.mapv_inplace(|v| v as f32 as f64);
}
