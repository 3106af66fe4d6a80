//! Beat-marker ingestion, ground-truth averaging, and marker transfer through
//! a warp path.
//!
//! Marker files are plain text, one marker per line: the first whitespace- or
//! tab-separated token is a time in seconds, anything after it is a label and
//! is ignored. Blank lines and lines starting with `#` are skipped. The same
//! format is written back out, so transferred markers can be reopened in the
//! tools the originals came from.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::dtw::WarpPath;

#[derive(Debug, Error)]
pub enum AnnotationError {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}: no parseable markers")]
    NoMarkers(String),
    #[error("line {line}: cannot parse {content:?} as a marker time")]
    UnparseableLine { line: usize, content: String },
    #[error("line {line}: marker {value} s does not increase past {prev} s")]
    NonMonotonic { line: usize, prev: f64, value: f64 },
    #[error("annotation lengths differ: {expected} vs {got} events")]
    LengthMismatch { expected: usize, got: usize },
    #[error("averaged ground truth is not strictly increasing at event {index}")]
    NonMonotonicResult { index: usize },
    #[error("need at least two annotation sequences, got {0}")]
    TooFewAnnotators(usize),
    #[error("annotations describe different recordings: {a:?} vs {b:?}")]
    RecordingMismatch { a: String, b: String },
    #[error("cannot transfer through an empty warp path")]
    EmptyPath,
}

/// One annotator's markers for one recording, ordered by score event.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnotationSequence {
    pub times: Vec<f64>,
    pub annotator: String,
    pub recording: String,
}

/// Per-event mean of several annotators' markers.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundTruth {
    pub times: Vec<f64>,
    pub n_annotators: usize,
    pub recording: String,
}

impl GroundTruth {
    /// Treat a single annotation as ground truth (for transfer sources that
    /// only have one annotator).
    pub fn from_single(annotation: &AnnotationSequence) -> Self {
        GroundTruth {
            times: annotation.times.clone(),
            n_annotators: 1,
            recording: annotation.recording.clone(),
        }
    }
}

pub fn parse_annotation_file(path: impl AsRef<Path>) -> Result<AnnotationSequence, AnnotationError> {
    let path = path.as_ref();
    let path_str = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| AnnotationError::Io {
        path: path_str.clone(),
        source,
    })?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let mut seq = parse_annotation_text(&text, &path_str)?;
    seq.annotator = stem;
    Ok(seq)
}

/// Parser body, separated from file I/O. `origin` only feeds error messages.
pub fn parse_annotation_text(
    text: &str,
    origin: &str,
) -> Result<AnnotationSequence, AnnotationError> {
    let mut times = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let token = trimmed.split_whitespace().next().unwrap();
        let value: f64 = token.parse().map_err(|_| AnnotationError::UnparseableLine {
            line,
            content: raw.to_string(),
        })?;
        if !value.is_finite() || value < 0.0 {
            return Err(AnnotationError::UnparseableLine {
                line,
                content: raw.to_string(),
            });
        }
        if let Some(&prev) = times.last() {
            if value <= prev {
                return Err(AnnotationError::NonMonotonic { line, prev, value });
            }
        }
        times.push(value);
    }
    if times.is_empty() {
        return Err(AnnotationError::NoMarkers(origin.to_string()));
    }
    Ok(AnnotationSequence {
        times,
        annotator: String::new(),
        recording: String::new(),
    })
}

/// Serialize marker times in the same plain-text format the parser accepts.
pub fn format_annotation(times: &[f64]) -> String {
    let mut out = String::with_capacity(times.len() * 10);
    for t in times {
        let _ = writeln!(out, "{t:.6}");
    }
    out
}

pub fn write_annotation_file(
    path: impl AsRef<Path>,
    times: &[f64],
) -> Result<(), AnnotationError> {
    let path = path.as_ref();
    std::fs::write(path, format_annotation(times)).map_err(|source| AnnotationError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Element-wise mean across annotators. All sequences must cover the same
/// events (equal lengths — a short file signals a missed event, not a
/// different piece) and the result must still be strictly increasing.
pub fn build_ground_truth(
    annotations: &[AnnotationSequence],
) -> Result<GroundTruth, AnnotationError> {
    if annotations.len() < 2 {
        return Err(AnnotationError::TooFewAnnotators(annotations.len()));
    }
    let first = &annotations[0];
    for a in &annotations[1..] {
        if a.recording != first.recording {
            return Err(AnnotationError::RecordingMismatch {
                a: first.recording.clone(),
                b: a.recording.clone(),
            });
        }
        if a.times.len() != first.times.len() {
            return Err(AnnotationError::LengthMismatch {
                expected: first.times.len(),
                got: a.times.len(),
            });
        }
    }
    let n = annotations.len() as f64;
    let times: Vec<f64> = (0..first.times.len())
        .map(|i| annotations.iter().map(|a| a.times[i]).sum::<f64>() / n)
        .collect();
    for (i, w) in times.windows(2).enumerate() {
        if w[1] <= w[0] {
            return Err(AnnotationError::NonMonotonicResult { index: i + 1 });
        }
    }
    Ok(GroundTruth {
        times,
        n_annotators: annotations.len(),
        recording: first.recording.clone(),
    })
}

/// Markers mapped into the target timeline, with a count of how many had to be
/// raised to keep the sequence non-decreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferOutcome {
    pub times: Vec<f64>,
    pub clipped: usize,
}

/// Push each ground-truth marker of the source recording through the warp
/// path: snap the marker to the nearest source frame center (ties toward the
/// earlier frame), gather every target frame the path matches to it, and take
/// the median of their times. The result is then made non-decreasing by
/// clipping each value to its predecessor.
pub fn transfer_annotations(
    gt_x: &GroundTruth,
    path: &WarpPath,
    times_x: &[f64],
    times_y: &[f64],
) -> Result<TransferOutcome, AnnotationError> {
    let raw = map_markers(&gt_x.times, path, times_x, times_y)?;
    let mut clipped = 0usize;
    let mut times = raw;
    for i in 1..times.len() {
        if times[i] < times[i - 1] {
            times[i] = times[i - 1];
            clipped += 1;
        }
    }
    Ok(TransferOutcome { times, clipped })
}

/// The transfer mapping without the monotonicity repair — used for signed
/// per-event error measurement, where clipping would mask sign flips.
pub fn map_markers(
    markers: &[f64],
    path: &WarpPath,
    times_x: &[f64],
    times_y: &[f64],
) -> Result<Vec<f64>, AnnotationError> {
    if path.pairs.is_empty() {
        return Err(AnnotationError::EmptyPath);
    }
    debug_assert!(path.validate(times_x.len(), times_y.len()).is_ok());

    let out = markers
        .iter()
        .map(|&g| {
            let l = nearest_frame(times_x, g);
            // Path pairs are sorted by source index; the matches form one
            // contiguous run.
            let start = path.pairs.partition_point(|&(pl, _)| pl < l);
            let end = path.pairs.partition_point(|&(pl, _)| pl <= l);
            debug_assert!(start < end, "path skips a frame");
            let run = &path.pairs[start..end];
            // Target indices increase along the run, so the median needs no
            // sort; an even run takes the midpoint of the two middle times.
            let n = run.len();
            if n % 2 == 1 {
                times_y[run[n / 2].1]
            } else {
                0.5 * (times_y[run[n / 2 - 1].1] + times_y[run[n / 2].1])
            }
        })
        .collect();
    Ok(out)
}

/// Index of the frame center closest to `t`; ties resolve to the earlier one.
fn nearest_frame(times: &[f64], t: f64) -> usize {
    let i = times.partition_point(|&ft| ft < t);
    if i == 0 {
        return 0;
    }
    if i == times.len() {
        return times.len() - 1;
    }
    let before = t - times[i - 1];
    let after = times[i] - t;
    if before <= after {
        i - 1
    } else {
        i
    }
}
