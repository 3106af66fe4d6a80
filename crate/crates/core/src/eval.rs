//! Alignment evaluation against ground-truth beat annotations.
//!
//! An alignment of recordings X and Y is scored by pushing X's ground-truth
//! markers through the warp path and measuring, per event, how far the
//! arrival lands from Y's ground truth (and the mirror image for the other
//! direction). On top of the per-event error sequences sit summary metrics,
//! a robustness filter with top-k ranking, a one-way ANOVA across the
//! leaders, and eCDF data for plotting.

use thiserror::Error;

use crate::annotation::{map_markers, AnnotationError, GroundTruth};
use crate::dtw::WarpPath;
use crate::stats::dist::f_survival;

/// Robustness cutoff: configs whose pooled maximum absolute error reaches
/// this are dropped before ranking.
pub const DEFAULT_THRESHOLD_MS: f64 = 5000.0;
/// How many configs the ranking keeps.
pub const DEFAULT_TOP_K: usize = 10;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("ground-truth sequences have different lengths: {expected} vs {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Annotation(#[from] AnnotationError),
    #[error("empty input")]
    Empty,
    #[error("need at least 2 groups, got {got}")]
    TooFewGroups { got: usize },
    #[error("group {index} has {got} values; need at least 2")]
    SmallGroup { index: usize, got: usize },
}

/// Which recording's markers were pushed through the path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    XToY,
    YToX,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::XToY => "x_to_y",
            Direction::YToX => "y_to_x",
        }
    }
}

/// Signed per-event alignment errors for one direction of one configuration.
#[derive(Debug, Clone)]
pub struct ErrorSequence {
    /// e_n in milliseconds: transferred marker minus target ground truth.
    pub errors: Vec<f64>,
    pub direction: Direction,
    /// Recording identifiers, always in (X, Y) order.
    pub pair: (String, String),
    pub config_digest: String,
}

/// Per-event alignment errors in one direction.
///
/// For `XToY`, each of X's ground-truth markers is mapped through the warp
/// path (same nearest-frame / median-target rule as annotation transfer,
/// without monotonicity clipping) and compared against Y's ground truth for
/// the same event. `YToX` swaps the roles using the reversed path.
pub fn error_sequence(
    gt_x: &GroundTruth,
    gt_y: &GroundTruth,
    path: &WarpPath,
    times_x: &[f64],
    times_y: &[f64],
    direction: Direction,
    config_digest: &str,
) -> Result<ErrorSequence, EvalError> {
    if gt_x.times.len() != gt_y.times.len() {
        return Err(EvalError::LengthMismatch {
            expected: gt_x.times.len(),
            got: gt_y.times.len(),
        });
    }
    let mapped = match direction {
        Direction::XToY => map_markers(&gt_x.times, path, times_x, times_y)?,
        Direction::YToX => {
            // Swapping each pair keeps both coordinates non-decreasing, so
            // the reversed pairs form a valid path for the (Y, X) alignment.
            let reversed = WarpPath {
                pairs: path.pairs.iter().map(|&(l, m)| (m, l)).collect(),
                cost: path.cost,
            };
            map_markers(&gt_y.times, &reversed, times_y, times_x)?
        }
    };
    let target = match direction {
        Direction::XToY => &gt_y.times,
        Direction::YToX => &gt_x.times,
    };
    let errors = mapped
        .iter()
        .zip(target)
        .map(|(m, g)| (m - g) * 1000.0)
        .collect();
    Ok(ErrorSequence {
        errors,
        direction,
        pair: (gt_x.recording.clone(), gt_y.recording.clone()),
        config_digest: config_digest.to_string(),
    })
}

/// (mean, max, median) of the absolute errors, in milliseconds. The median
/// uses the lower-middle convention for even counts.
pub fn summarize(e: &ErrorSequence) -> Result<(f64, f64, f64), EvalError> {
    if e.errors.is_empty() {
        return Err(EvalError::Empty);
    }
    let mut abs: Vec<f64> = e.errors.iter().map(|v| v.abs()).collect();
    abs.sort_by(|a, b| a.partial_cmp(b).expect("non-finite error"));
    let mean = abs.iter().sum::<f64>() / abs.len() as f64;
    let max = *abs.last().unwrap();
    let median = abs[(abs.len() - 1) / 2];
    Ok((mean, max, median))
}

#[derive(Debug, Clone)]
pub struct RankEntry {
    pub config_digest: String,
    pub mean_abs_ms: f64,
    pub max_abs_ms: f64,
    /// True when both directions were pooled into the statistics.
    pub pooled: bool,
}

#[derive(Debug, Clone)]
pub struct RankingReport {
    /// Ascending by mean absolute error; at most `top_k` entries. Empty when
    /// every candidate failed the robustness filter.
    pub entries: Vec<RankEntry>,
    pub threshold_ms: f64,
    pub top_k: usize,
}

impl RankingReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Rank configurations by pooled mean absolute error.
///
/// Each input pair holds the two directions of one configuration. Both are
/// pooled into a single error collection; configurations whose pooled
/// maximum absolute error reaches `threshold_ms` are discarded, the rest are
/// sorted ascending by pooled mean (ties broken by digest) and truncated to
/// `top_k`. An empty entry list is a legitimate outcome, not an error.
pub fn rank_alignments(
    all: &[(ErrorSequence, ErrorSequence)],
    threshold_ms: f64,
    top_k: usize,
) -> Result<RankingReport, EvalError> {
    if all.is_empty() {
        return Err(EvalError::Empty);
    }
    let mut entries: Vec<RankEntry> = Vec::new();
    for (fwd, bwd) in all {
        debug_assert_eq!(fwd.config_digest, bwd.config_digest);
        let pooled_abs: Vec<f64> = fwd
            .errors
            .iter()
            .chain(&bwd.errors)
            .map(|v| v.abs())
            .collect();
        if pooled_abs.is_empty() {
            continue;
        }
        let max = pooled_abs.iter().cloned().fold(f64::MIN, f64::max);
        if max >= threshold_ms {
            continue;
        }
        let mean = pooled_abs.iter().sum::<f64>() / pooled_abs.len() as f64;
        entries.push(RankEntry {
            config_digest: fwd.config_digest.clone(),
            mean_abs_ms: mean,
            max_abs_ms: max,
            pooled: true,
        });
    }
    entries.sort_by(|a, b| {
        a.mean_abs_ms
            .partial_cmp(&b.mean_abs_ms)
            .expect("non-finite mean")
            .then_with(|| a.config_digest.cmp(&b.config_digest))
    });
    entries.truncate(top_k);

    // Structural guarantees the rest of the pipeline relies on.
    assert!(entries.windows(2).all(|w| w[0].mean_abs_ms <= w[1].mean_abs_ms));
    assert!(entries.iter().all(|e| e.max_abs_ms < threshold_ms));

    Ok(RankingReport {
        entries,
        threshold_ms,
        top_k,
    })
}

/// Classic one-way ANOVA. Returns `(F, p)`.
///
/// When every group is internally constant and all group means agree there
/// is no variance to compare, and the result is defined as `(0, 1)`.
pub fn one_way_anova(groups: &[Vec<f64>]) -> Result<(f64, f64), EvalError> {
    if groups.len() < 2 {
        return Err(EvalError::TooFewGroups { got: groups.len() });
    }
    for (index, g) in groups.iter().enumerate() {
        if g.len() < 2 {
            return Err(EvalError::SmallGroup {
                index,
                got: g.len(),
            });
        }
    }
    let k = groups.len() as f64;
    let n_total: usize = groups.iter().map(|g| g.len()).sum();
    let n = n_total as f64;
    let grand_mean = groups.iter().flatten().sum::<f64>() / n;

    let mut ss_between = 0.0;
    let mut ss_within = 0.0;
    for g in groups {
        let m = g.iter().sum::<f64>() / g.len() as f64;
        ss_between += g.len() as f64 * (m - grand_mean).powi(2);
        ss_within += g.iter().map(|v| (v - m).powi(2)).sum::<f64>();
    }

    if ss_within == 0.0 {
        return Ok(if ss_between == 0.0 {
            (0.0, 1.0)
        } else {
            (f64::INFINITY, 0.0)
        });
    }
    let df_between = k - 1.0;
    let df_within = n - k;
    let f = (ss_between / df_between) / (ss_within / df_within);
    let p = f_survival(f, df_between, df_within);
    Ok((f, p))
}

/// Empirical CDF support points: strictly increasing values with their
/// cumulative fractions. Duplicates collapse into one step; the final
/// fraction is exactly 1.
pub fn ecdf(values: &[f64]) -> Result<Vec<(f64, f64)>, EvalError> {
    if values.is_empty() {
        return Err(EvalError::Empty);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite value"));
    let n = sorted.len();
    let mut out: Vec<(f64, f64)> = Vec::new();
    let mut seen = 0usize;
    let mut i = 0usize;
    while i < n {
        let v = sorted[i];
        let mut j = i;
        while j < n && sorted[j] == v {
            j += 1;
        }
        seen += j - i;
        out.push((v, seen as f64 / n as f64));
        i = j;
    }
    debug_assert_eq!(out.last().unwrap().1, 1.0);
    Ok(out)
}
