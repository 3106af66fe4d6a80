//! Annotation-precision statistics.
//!
//! The central quantity is the *difference sequence* between two annotators'
//! beat markers. Because a difference of two independent jitters has twice
//! the variance of one, the estimator `σ̂² = Σδ²/(2N)` recovers the per-
//! annotator marker SD. On top of that this module provides block-pooled SD
//! curves (how precision evolves over a piece), a median-of-blocks global
//! summary, a Shapiro–Wilk normality test, and QQ-plot data with a robust
//! quartile line and 95% pointwise band.

pub mod dist;
mod swilk;

pub use swilk::shapiro_wilk;

use thiserror::Error;

use crate::annotation::AnnotationSequence;
use dist::{normal_pdf, normal_quantile};

/// Default pooling window, in score events.
pub const DEFAULT_BLOCK_LEN: usize = 24;
/// Default hop between pooling windows, in score events.
pub const DEFAULT_BLOCK_HOP: usize = 12;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("sequences have different lengths: {expected} vs {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("sample size {n} outside the supported range [3, 5000]")]
    SampleSizeOutOfRange { n: usize },
    #[error("sample has zero range; statistic undefined")]
    DegenerateSample,
    #[error("empty input")]
    EmptyInput,
}

/// Per-event differences between two marker sequences, with the systematic
/// offset between the annotators split out.
#[derive(Debug, Clone)]
pub struct DifferenceSequence {
    /// δ_n in seconds, offset-removed (zero mean).
    pub deltas: Vec<f64>,
    /// The removed mean of (first − second), in seconds.
    pub mean_offset: f64,
    /// Annotator ids the differences came from.
    pub pair: (String, String),
}

/// Where a SD estimate was pooled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaScope {
    Global,
    Block { start_event: usize, length: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaEstimate {
    /// Estimated per-annotator marker SD, in milliseconds.
    pub sigma_ms: f64,
    /// Number of differences pooled.
    pub n: usize,
    pub scope: SigmaScope,
}

/// Difference sequence δ_n = θ¹_n − θ²_n − mean(θ¹ − θ²).
pub fn diff_sequences(
    a1: &AnnotationSequence,
    a2: &AnnotationSequence,
) -> Result<DifferenceSequence, StatsError> {
    if a1.times.len() != a2.times.len() {
        return Err(StatsError::LengthMismatch {
            expected: a1.times.len(),
            got: a2.times.len(),
        });
    }
    if a1.times.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let raw: Vec<f64> = a1
        .times
        .iter()
        .zip(&a2.times)
        .map(|(x, y)| x - y)
        .collect();
    let mean_offset = raw.iter().sum::<f64>() / raw.len() as f64;
    let deltas: Vec<f64> = raw.iter().map(|d| d - mean_offset).collect();
    debug_assert!(deltas.iter().sum::<f64>().abs() / deltas.len() as f64 <= 1e-12);
    Ok(DifferenceSequence {
        deltas,
        mean_offset,
        pair: (a1.annotator.clone(), a2.annotator.clone()),
    })
}

fn sigma_from_deltas(deltas: &[f64], scope: SigmaScope) -> Result<SigmaEstimate, StatsError> {
    if deltas.len() < 2 {
        return Err(StatsError::TooFewSamples {
            needed: 2,
            got: deltas.len(),
        });
    }
    let ssq: f64 = deltas.iter().map(|d| d * d).sum();
    let sigma_ms = (ssq / (2.0 * deltas.len() as f64)).sqrt() * 1000.0;
    Ok(SigmaEstimate {
        sigma_ms,
        n: deltas.len(),
        scope,
    })
}

/// Global SD estimate from offset-removed differences.
pub fn estimate_sigma(d: &DifferenceSequence) -> Result<SigmaEstimate, StatsError> {
    sigma_from_deltas(&d.deltas, SigmaScope::Global)
}

/// Variant of [`estimate_sigma`] that keeps the systematic offset inside the
/// differences, for comparison against the offset-removed default.
pub fn estimate_sigma_raw(d: &DifferenceSequence) -> Result<SigmaEstimate, StatsError> {
    let raw: Vec<f64> = d.deltas.iter().map(|v| v + d.mean_offset).collect();
    sigma_from_deltas(&raw, SigmaScope::Global)
}

/// SD curve over overlapping blocks of score events.
///
/// Blocks start every `hop` events and span `block_len` events. Events past
/// the last full block form a tail block if it reaches at least half a block;
/// otherwise the last block is extended to the end of the sequence.
pub fn blockwise_sigma(
    d: &DifferenceSequence,
    block_len: usize,
    hop: usize,
) -> Result<Vec<SigmaEstimate>, StatsError> {
    assert!(block_len >= 2 && hop >= 1, "degenerate block geometry");
    let n = d.deltas.len();
    if n < block_len {
        return Err(StatsError::TooFewSamples {
            needed: block_len,
            got: n,
        });
    }
    let mut spans: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    while start + block_len <= n {
        spans.push((start, block_len));
        start += hop;
    }
    let (last_start, last_len) = *spans.last().expect("at least one block fits");
    if last_start + last_len < n {
        let tail_start = last_start + hop;
        let tail_len = n - tail_start;
        if tail_len >= block_len / 2 {
            spans.push((tail_start, tail_len));
        } else {
            // Too small to stand alone; fold the leftover events into the
            // last block.
            spans.last_mut().unwrap().1 = n - last_start;
        }
    }
    spans
        .into_iter()
        .map(|(start_event, length)| {
            sigma_from_deltas(
                &d.deltas[start_event..start_event + length],
                SigmaScope::Block {
                    start_event,
                    length,
                },
            )
        })
        .collect()
}

/// Median of per-block SD estimates, lower-middle convention for even counts
/// (so the result is always an attained block value).
pub fn median_sd(blocks: &[SigmaEstimate]) -> Result<f64, StatsError> {
    if blocks.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let mut sigmas: Vec<f64> = blocks.iter().map(|b| b.sigma_ms).collect();
    sigmas.sort_by(|a, b| a.partial_cmp(b).expect("non-finite sigma"));
    Ok(sigmas[(sigmas.len() - 1) / 2])
}

/// Per-event SD across annotators, in milliseconds.
#[derive(Debug, Clone)]
pub struct PerEventSd {
    pub sigmas_ms: Vec<f64>,
    pub annotator_count: usize,
    /// Set when the estimate rests on too few annotators to be trusted;
    /// with the usual 3 annotators a per-event SD is extremely noisy.
    pub low_confidence: bool,
}

/// Sample SD (ddof = 1) of each event's markers across annotators.
pub fn per_event_sd(annotators: &[&[f64]]) -> Result<PerEventSd, StatsError> {
    if annotators.len() < 2 {
        return Err(StatsError::TooFewSamples {
            needed: 2,
            got: annotators.len(),
        });
    }
    let len = annotators[0].len();
    for seq in annotators {
        if seq.len() != len {
            return Err(StatsError::LengthMismatch {
                expected: len,
                got: seq.len(),
            });
        }
    }
    if len == 0 {
        return Err(StatsError::EmptyInput);
    }
    let k = annotators.len() as f64;
    let sigmas_ms = (0..len)
        .map(|event| {
            let mean = annotators.iter().map(|s| s[event]).sum::<f64>() / k;
            let ssq = annotators
                .iter()
                .map(|s| (s[event] - mean).powi(2))
                .sum::<f64>();
            (ssq / (k - 1.0)).sqrt() * 1000.0
        })
        .collect();
    Ok(PerEventSd {
        sigmas_ms,
        annotator_count: annotators.len(),
        low_confidence: annotators.len() < 10,
    })
}

/// One point of a normal QQ plot, with the 95% band around the fitted line.
#[derive(Debug, Clone, Copy)]
pub struct QqPoint {
    pub theoretical: f64,
    pub sample: f64,
    pub band_lower: f64,
    pub band_upper: f64,
}

#[derive(Debug, Clone)]
pub struct QqReport {
    pub points: Vec<QqPoint>,
    /// Robust line through the first/third quartile points.
    pub slope: f64,
    pub intercept: f64,
}

/// Linear interpolation of sorted `values` at probability `p`, consistent
/// with plotting positions (i − 0.5)/n.
fn quantile_interp(values: &[f64], p: f64) -> f64 {
    let n = values.len();
    let h = n as f64 * p - 0.5;
    if h <= 0.0 {
        return values[0];
    }
    if h >= (n - 1) as f64 {
        return values[n - 1];
    }
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    values[lo] * (1.0 - frac) + values[lo + 1] * frac
}

/// Normal QQ-plot data: ordered sample against normal quantiles at plotting
/// positions (i − 0.5)/n, a line fitted through the first/third quartiles,
/// and a pointwise ±1.96·SE band from the order-statistic density
/// approximation.
pub fn qq_data(samples: &[f64]) -> Result<QqReport, StatsError> {
    let n = samples.len();
    if n < 4 {
        return Err(StatsError::TooFewSamples { needed: 4, got: n });
    }
    let mut ordered = samples.to_vec();
    ordered.sort_by(|a, b| a.partial_cmp(b).expect("non-finite sample value"));

    let n_f = n as f64;
    let positions: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n_f).collect();
    let theoretical: Vec<f64> = positions.iter().map(|&p| normal_quantile(p)).collect();

    // Quartiles of both axes interpolated the same way, so a sample that is
    // itself a set of normal scores yields slope 1 / intercept 0 exactly.
    let sample_q1 = quantile_interp(&ordered, 0.25);
    let sample_q3 = quantile_interp(&ordered, 0.75);
    let theo_q1 = quantile_interp(&theoretical, 0.25);
    let theo_q3 = quantile_interp(&theoretical, 0.75);
    let slope = (sample_q3 - sample_q1) / (theo_q3 - theo_q1);
    let intercept = sample_q1 - slope * theo_q1;

    let points = (0..n)
        .map(|i| {
            let z = theoretical[i];
            let p = positions[i];
            let fitted = slope * z + intercept;
            let se = slope * (p * (1.0 - p) / n_f).sqrt() / normal_pdf(z);
            QqPoint {
                theoretical: z,
                sample: ordered[i],
                band_lower: fitted - 1.96 * se,
                band_upper: fitted + 1.96 * se,
            }
        })
        .collect();

    Ok(QqReport {
        points,
        slope,
        intercept,
    })
}
