//! Minimal RIFF/WAVE codec: reads PCM 16/24-bit and IEEE float 32-bit with any
//! channel count, writes the same formats for fixtures and transfer output.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use super::{AudioBuffer, AudioError};

const FMT_PCM: u16 = 0x0001;
const FMT_IEEE_FLOAT: u16 = 0x0003;
const FMT_EXTENSIBLE: u16 = 0xFFFE;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WavEncoding {
    Pcm16,
    Pcm24,
    Float32,
}

struct FmtChunk {
    format: u16,
    channels: u16,
    sample_rate: u32,
    bits_per_sample: u16,
}

/// Decode a WAVE file to a mono buffer (channel mean), keeping the sample rate
/// verbatim. Integer PCM is divided by its full-scale value; float data is
/// clamped to `[-1, 1]`.
pub fn load_wav(path: impl AsRef<Path>) -> Result<AudioBuffer, AudioError> {
    let path = path.as_ref();
    let path_str = path.display().to_string();
    let bytes = fs::read(path).map_err(|source| AudioError::Io {
        path: path_str.clone(),
        source,
    })?;

    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(AudioError::MalformedHeader(format!(
            "{path_str}: missing RIFF/WAVE signature"
        )));
    }

    let mut fmt: Option<FmtChunk> = None;
    let mut data: Option<(usize, usize)> = None; // (offset, declared length)

    // Walk the chunk list. Chunks are word-aligned, so odd sizes are padded.
    let mut pos = 12usize;
    while pos + 8 <= bytes.len() {
        let id = &bytes[pos..pos + 4];
        let size = u32::from_le_bytes(bytes[pos + 4..pos + 8].try_into().unwrap()) as usize;
        let body = pos + 8;
        match id {
            b"fmt " => {
                if size < 16 || body + size > bytes.len() {
                    return Err(AudioError::MalformedHeader(format!(
                        "{path_str}: fmt chunk too short"
                    )));
                }
                let f = &bytes[body..body + size];
                let mut format = u16::from_le_bytes([f[0], f[1]]);
                if format == FMT_EXTENSIBLE {
                    // WAVE_FORMAT_EXTENSIBLE: the real code is the first two
                    // bytes of the SubFormat GUID at offset 24.
                    if size < 40 {
                        return Err(AudioError::MalformedHeader(format!(
                            "{path_str}: extensible fmt chunk too short"
                        )));
                    }
                    format = u16::from_le_bytes([f[24], f[25]]);
                }
                fmt = Some(FmtChunk {
                    format,
                    channels: u16::from_le_bytes([f[2], f[3]]),
                    sample_rate: u32::from_le_bytes([f[4], f[5], f[6], f[7]]),
                    bits_per_sample: u16::from_le_bytes([f[14], f[15]]),
                });
            }
            b"data" => {
                if body + size > bytes.len() {
                    return Err(AudioError::TruncatedData {
                        declared: size,
                        available: bytes.len().saturating_sub(body),
                    });
                }
                data = Some((body, size));
            }
            _ => {} // fact, LIST, cue, ... — ignored
        }
        pos = body + size + (size & 1);
    }

    let fmt = fmt.ok_or_else(|| {
        AudioError::MalformedHeader(format!("{path_str}: no fmt chunk"))
    })?;
    let (data_off, data_len) = data.ok_or_else(|| {
        AudioError::MalformedHeader(format!("{path_str}: no data chunk"))
    })?;
    if fmt.channels == 0 || fmt.sample_rate == 0 {
        return Err(AudioError::MalformedHeader(format!(
            "{path_str}: zero channels or sample rate"
        )));
    }

    let bytes_per_sample = match (fmt.format, fmt.bits_per_sample) {
        (FMT_PCM, 16) => 2,
        (FMT_PCM, 24) => 3,
        (FMT_IEEE_FLOAT, 32) => 4,
        (f, b) => {
            return Err(AudioError::UnsupportedEncoding(format!(
                "format code {f:#06x} at {b} bits (PCM 16/24-bit and float 32-bit only)"
            )))
        }
    };

    let channels = fmt.channels as usize;
    let frame_bytes = bytes_per_sample * channels;
    let n_frames = data_len / frame_bytes;
    if n_frames == 0 {
        return Err(AudioError::MalformedHeader(format!(
            "{path_str}: empty data chunk"
        )));
    }

    let raw = &bytes[data_off..data_off + n_frames * frame_bytes];
    let mut samples = Vec::with_capacity(n_frames);
    for frame in raw.chunks_exact(frame_bytes) {
        let mut acc = 0.0f64;
        for ch in frame.chunks_exact(bytes_per_sample) {
            acc += match bytes_per_sample {
                2 => i16::from_le_bytes([ch[0], ch[1]]) as f64 / 32768.0,
                3 => {
                    let v = (ch[0] as i32) | (ch[1] as i32) << 8 | (ch[2] as i32) << 16;
                    // Sign-extend from 24 bits.
                    ((v << 8) >> 8) as f64 / 8_388_608.0
                }
                4 => f32::from_le_bytes([ch[0], ch[1], ch[2], ch[3]])
                    .clamp(-1.0, 1.0) as f64,
                _ => unreachable!(),
            };
        }
        samples.push((acc / channels as f64) as f32);
    }

    Ok(AudioBuffer {
        samples,
        sample_rate: fmt.sample_rate,
        source_path: path_str,
    })
}

/// Write interleaved samples (values in `[-1, 1]`, clamped on conversion) as a
/// WAVE file. `samples.len()` must be a multiple of `channels`.
pub fn write_wav(
    path: impl AsRef<Path>,
    samples: &[f32],
    channels: u16,
    sample_rate: u32,
    encoding: WavEncoding,
) -> Result<(), AudioError> {
    assert!(channels > 0, "need at least one channel");
    assert_eq!(
        samples.len() % channels as usize,
        0,
        "interleaved length must be a multiple of the channel count"
    );
    let path = path.as_ref();
    let io_err = |source| AudioError::Io {
        path: path.display().to_string(),
        source,
    };

    let bytes_per_sample: usize = match encoding {
        WavEncoding::Pcm16 => 2,
        WavEncoding::Pcm24 => 3,
        WavEncoding::Float32 => 4,
    };
    let (format_code, needs_fact) = match encoding {
        WavEncoding::Float32 => (FMT_IEEE_FLOAT, true),
        _ => (FMT_PCM, false),
    };
    let data_len = samples.len() * bytes_per_sample;
    let fact_len = if needs_fact { 12 } else { 0 };
    let riff_len = 4 + (8 + 16) + fact_len + (8 + data_len) + (data_len & 1);

    let mut out = Vec::with_capacity(12 + riff_len);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(riff_len as u32).to_le_bytes());
    out.extend_from_slice(b"WAVE");

    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&format_code.to_le_bytes());
    out.extend_from_slice(&channels.to_le_bytes());
    out.extend_from_slice(&sample_rate.to_le_bytes());
    let block_align = channels as usize * bytes_per_sample;
    out.extend_from_slice(&((sample_rate as usize * block_align) as u32).to_le_bytes());
    out.extend_from_slice(&(block_align as u16).to_le_bytes());
    out.extend_from_slice(&((bytes_per_sample * 8) as u16).to_le_bytes());

    if needs_fact {
        out.extend_from_slice(b"fact");
        out.extend_from_slice(&4u32.to_le_bytes());
        out.extend_from_slice(&((samples.len() / channels as usize) as u32).to_le_bytes());
    }

    out.extend_from_slice(b"data");
    out.extend_from_slice(&(data_len as u32).to_le_bytes());
    for &s in samples {
        match encoding {
            WavEncoding::Pcm16 => {
                let v = (s as f64 * 32768.0).round().clamp(-32768.0, 32767.0) as i16;
                out.extend_from_slice(&v.to_le_bytes());
            }
            WavEncoding::Pcm24 => {
                let v = (s as f64 * 8_388_608.0)
                    .round()
                    .clamp(-8_388_608.0, 8_388_607.0) as i32;
                out.extend_from_slice(&v.to_le_bytes()[0..3]);
            }
            WavEncoding::Float32 => out.extend_from_slice(&s.to_le_bytes()),
        }
    }
    if data_len & 1 == 1 {
        out.push(0);
    }

    let mut file = fs::File::create(path).map_err(io_err)?;
    file.write_all(&out).map_err(io_err)?;
    Ok(())
}
