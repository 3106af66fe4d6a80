//! Dynamic time warping: exact dynamic programming and the multiscale
//! approximation, over three distance measures.
//!
//! The DP always runs with two rolling cost rows plus a packed 2-bit
//! backpointer table, windowed to per-row column ranges. Exact DTW is the
//! full-window special case; the multiscale variant recurses on half-rate
//! sequences and only fills a tube around the projected coarse path.

use std::io::{self, Write};

use ndarray::{Array2, ArrayView1, ArrayView2};
use thiserror::Error;

use crate::features::FeatureSequence;

#[derive(Debug, Error)]
pub enum DtwError {
    #[error("dimension mismatch: {x_dim} vs {y_dim}")]
    DimensionMismatch { x_dim: usize, y_dim: usize },
    #[error("cannot align an empty sequence")]
    EmptySequence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceMetric {
    L1,
    L2,
    Cosine,
}

impl DistanceMetric {
    pub fn name(&self) -> &'static str {
        match self {
            DistanceMetric::L1 => "l1",
            DistanceMetric::L2 => "l2",
            DistanceMetric::Cosine => "cosine",
        }
    }
}

/// Pointwise distance. Cosine uses the convention that two zero vectors are at
/// distance 0 and a zero/nonzero pair at distance 1, and is clamped to [0, 2].
pub fn distance(x: &[f64], y: &[f64], metric: DistanceMetric) -> Result<f64, DtwError> {
    if x.len() != y.len() {
        return Err(DtwError::DimensionMismatch {
            x_dim: x.len(),
            y_dim: y.len(),
        });
    }
    Ok(dist_views(
        ArrayView1::from(x),
        ArrayView1::from(y),
        metric,
    ))
}

fn dist_views(x: ArrayView1<f64>, y: ArrayView1<f64>, metric: DistanceMetric) -> f64 {
    match metric {
        DistanceMetric::L1 => x.iter().zip(y.iter()).map(|(a, b)| (a - b).abs()).sum(),
        DistanceMetric::L2 => x
            .iter()
            .zip(y.iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt(),
        DistanceMetric::Cosine => {
            let mut dot = 0.0;
            let mut nx = 0.0;
            let mut ny = 0.0;
            for (a, b) in x.iter().zip(y.iter()) {
                dot += a * b;
                nx += a * a;
                ny += b * b;
            }
            if nx == 0.0 && ny == 0.0 {
                0.0
            } else if nx == 0.0 || ny == 0.0 {
                1.0
            } else {
                (1.0 - dot / (nx.sqrt() * ny.sqrt())).clamp(0.0, 2.0)
            }
        }
    }
}

/// A monotone frame-to-frame correspondence with its accumulated cost.
#[derive(Debug, Clone, PartialEq)]
pub struct WarpPath {
    pub pairs: Vec<(usize, usize)>,
    pub cost: f64,
}

impl WarpPath {
    /// Check boundary and step structure against the two sequence lengths.
    pub fn validate(&self, l_len: usize, m_len: usize) -> Result<(), String> {
        if self.pairs.is_empty() {
            return Err("empty path".into());
        }
        if self.pairs[0] != (0, 0) {
            return Err(format!("path starts at {:?}, not (0,0)", self.pairs[0]));
        }
        let last = *self.pairs.last().unwrap();
        if last != (l_len - 1, m_len - 1) {
            return Err(format!(
                "path ends at {last:?}, not ({},{})",
                l_len - 1,
                m_len - 1
            ));
        }
        for (i, w) in self.pairs.windows(2).enumerate() {
            let dl = w[1].0 as i64 - w[0].0 as i64;
            let dm = w[1].1 as i64 - w[0].1 as i64;
            if !matches!((dl, dm), (1, 0) | (0, 1) | (1, 1)) {
                return Err(format!("illegal step {:?}→{:?} at index {i}", w[0], w[1]));
            }
        }
        if self.cost < 0.0 || !self.cost.is_finite() {
            return Err(format!("bad cost {}", self.cost));
        }
        Ok(())
    }

    /// Re-evaluate the summed pointwise distance along the path, in path
    /// order. Matches `cost` to rounding error.
    pub fn recompute_cost(
        &self,
        x: ArrayView2<f64>,
        y: ArrayView2<f64>,
        metric: DistanceMetric,
    ) -> f64 {
        self.pairs
            .iter()
            .map(|&(l, m)| dist_views(x.row(l), y.row(m), metric))
            .sum()
    }

    /// Two-column CSV of matched indices, prefixed by a comment line that
    /// records which recordings and configuration produced the path.
    pub fn write_csv(
        &self,
        out: &mut impl Write,
        source_x: &str,
        source_y: &str,
        config_digest: &str,
    ) -> io::Result<()> {
        writeln!(out, "# x={source_x} y={source_y} config={config_digest}")?;
        writeln!(out, "l,m")?;
        for &(l, m) in &self.pairs {
            writeln!(out, "{l},{m}")?;
        }
        Ok(())
    }
}

/// Globally optimal alignment between two feature sequences.
pub fn dtw_exact(
    x: &FeatureSequence,
    y: &FeatureSequence,
    metric: DistanceMetric,
) -> Result<WarpPath, DtwError> {
    dtw_exact_matrix(x.frames.view(), y.frames.view(), metric)
}

pub fn dtw_exact_matrix(
    x: ArrayView2<f64>,
    y: ArrayView2<f64>,
    metric: DistanceMetric,
) -> Result<WarpPath, DtwError> {
    check_inputs(x, y)?;
    let win = Window::full(x.nrows(), y.nrows());
    let path = dtw_windowed(x, y, metric, &win);
    debug_assert!(path.validate(x.nrows(), y.nrows()).is_ok());
    Ok(path)
}

/// Multiscale approximate alignment. A recursive half-resolution pass first
/// estimates the shape of the alignment; the estimate is projected back up to
/// full resolution, widened by `radius` cells in every direction, and the
/// constrained problem is solved inside that tube. The shape estimate does not
/// depend on `radius`, so growing the radius only widens the tube: the cost is
/// non-increasing in `radius`, never below the exact optimum, and equal to it
/// whenever `radius ≥ max(L, M)`.
pub fn fastdtw(
    x: &FeatureSequence,
    y: &FeatureSequence,
    metric: DistanceMetric,
    radius: usize,
) -> Result<WarpPath, DtwError> {
    fastdtw_matrix(x.frames.view(), y.frames.view(), metric, radius)
}

pub fn fastdtw_matrix(
    x: ArrayView2<f64>,
    y: ArrayView2<f64>,
    metric: DistanceMetric,
    radius: usize,
) -> Result<WarpPath, DtwError> {
    check_inputs(x, y)?;
    let path = fastdtw_rec(x, y, metric, radius);
    debug_assert!(path.validate(x.nrows(), y.nrows()).is_ok());
    Ok(path)
}

fn check_inputs(x: ArrayView2<f64>, y: ArrayView2<f64>) -> Result<(), DtwError> {
    if x.nrows() == 0 || y.nrows() == 0 {
        return Err(DtwError::EmptySequence);
    }
    if x.ncols() != y.ncols() {
        return Err(DtwError::DimensionMismatch {
            x_dim: x.ncols(),
            y_dim: y.ncols(),
        });
    }
    Ok(())
}

fn fastdtw_rec(
    x: ArrayView2<f64>,
    y: ArrayView2<f64>,
    metric: DistanceMetric,
    radius: usize,
) -> WarpPath {
    let (l_len, m_len) = (x.nrows(), y.nrows());
    if l_len.min(m_len) <= radius + 2 {
        return dtw_windowed(x, y, metric, &Window::full(l_len, m_len));
    }
    let xc = coarsen(x);
    let yc = coarsen(y);
    let guess = shape_guess(xc.view(), yc.view(), metric);
    let win = Window::around_projected_path(&guess.pairs, l_len, m_len, radius);
    dtw_windowed(x, y, metric, &win)
}

/// Width of the tube used while estimating the alignment shape at coarse
/// resolutions. Fixed (rather than the caller's radius) so two runs with
/// different radii share the same shape estimate and differ only in how far
/// the final tube extends around it.
const GUESS_MARGIN: usize = 2;

fn shape_guess(x: ArrayView2<f64>, y: ArrayView2<f64>, metric: DistanceMetric) -> WarpPath {
    let (l_len, m_len) = (x.nrows(), y.nrows());
    if l_len.min(m_len) <= GUESS_MARGIN + 2 {
        return dtw_windowed(x, y, metric, &Window::full(l_len, m_len));
    }
    let xc = coarsen(x);
    let yc = coarsen(y);
    let coarse = shape_guess(xc.view(), yc.view(), metric);
    let win = Window::around_projected_path(&coarse.pairs, l_len, m_len, GUESS_MARGIN);
    dtw_windowed(x, y, metric, &win)
}

/// Halve the frame rate by averaging adjacent frame pairs; an odd trailing
/// frame is carried through unaveraged.
fn coarsen(x: ArrayView2<f64>) -> Array2<f64> {
    let l_len = x.nrows();
    let out_len = l_len.div_ceil(2);
    let mut out = Array2::<f64>::zeros((out_len, x.ncols()));
    for i in 0..l_len / 2 {
        let a = x.row(2 * i);
        let b = x.row(2 * i + 1);
        let mut row = out.row_mut(i);
        for c in 0..x.ncols() {
            row[c] = 0.5 * (a[c] + b[c]);
        }
    }
    if l_len % 2 == 1 {
        out.row_mut(out_len - 1).assign(&x.row(l_len - 1));
    }
    out
}

/// Per-row inclusive column ranges the DP is allowed to visit.
struct Window {
    lo: Vec<usize>,
    hi: Vec<usize>,
}

impl Window {
    fn full(l_len: usize, m_len: usize) -> Self {
        Window {
            lo: vec![0; l_len],
            hi: vec![m_len - 1; l_len],
        }
    }

    /// Project a half-resolution path onto the fine grid (each coarse cell
    /// covers a 2×2 block) and dilate the covered cells by `radius` in both
    /// directions.
    fn around_projected_path(
        coarse: &[(usize, usize)],
        l_len: usize,
        m_len: usize,
        radius: usize,
    ) -> Self {
        let mut lo = vec![usize::MAX; l_len];
        let mut hi = vec![0usize; l_len];
        for &(ci, cj) in coarse {
            let cols = (2 * cj, (2 * cj + 1).min(m_len - 1));
            for r in [2 * ci, 2 * ci + 1] {
                if r < l_len {
                    lo[r] = lo[r].min(cols.0);
                    hi[r] = hi[r].max(cols.1);
                }
            }
        }
        debug_assert!(lo.iter().all(|&v| v != usize::MAX), "row left uncovered");
        debug_assert!(lo.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(hi.windows(2).all(|w| w[0] <= w[1]));

        // Column dilation, then row dilation. The projected ranges are
        // monotone, so the row-direction min/max reduce to index offsets.
        for r in 0..l_len {
            lo[r] = lo[r].saturating_sub(radius);
            hi[r] = (hi[r] + radius).min(m_len - 1);
        }
        let lo2: Vec<usize> = (0..l_len).map(|r| lo[r.saturating_sub(radius)]).collect();
        let hi2: Vec<usize> = (0..l_len).map(|r| hi[(r + radius).min(l_len - 1)]).collect();
        Window { lo: lo2, hi: hi2 }
    }

    fn contains(&self, l: usize, m: usize) -> bool {
        self.lo[l] <= m && m <= self.hi[l]
    }
}

/// Backpointer codes, packed four to a byte.
const BP_DIAG: u8 = 0;
const BP_LEFT: u8 = 1;
const BP_UP: u8 = 2;
const BP_START: u8 = 3;

struct PackedBacktrack {
    rows: Vec<Vec<u8>>,
    lo: Vec<usize>,
}

impl PackedBacktrack {
    fn new(win: &Window) -> Self {
        let rows = win
            .lo
            .iter()
            .zip(&win.hi)
            .map(|(&lo, &hi)| vec![0u8; (hi - lo + 1).div_ceil(4)])
            .collect();
        PackedBacktrack {
            rows,
            lo: win.lo.clone(),
        }
    }

    fn set(&mut self, l: usize, m: usize, v: u8) {
        let idx = m - self.lo[l];
        let shift = (idx & 3) * 2;
        let byte = &mut self.rows[l][idx >> 2];
        *byte = (*byte & !(0b11 << shift)) | (v << shift);
    }

    fn get(&self, l: usize, m: usize) -> u8 {
        let idx = m - self.lo[l];
        (self.rows[l][idx >> 2] >> ((idx & 3) * 2)) & 0b11
    }
}

/// Windowed DP over the cost lattice. Cells outside the window are treated as
/// unreachable; the window must contain (0,0) and (L−1,M−1). On cost ties the
/// stored predecessor prefers the diagonal step, then (0,1), then (1,0).
fn dtw_windowed(
    x: ArrayView2<f64>,
    y: ArrayView2<f64>,
    metric: DistanceMetric,
    win: &Window,
) -> WarpPath {
    let (l_len, m_len) = (x.nrows(), y.nrows());
    assert!(win.contains(0, 0) && win.contains(l_len - 1, m_len - 1));

    let mut bp = PackedBacktrack::new(win);
    let mut prev: Vec<f64> = Vec::new();
    let mut prev_range = (1usize, 0usize); // empty
    let mut cur: Vec<f64> = Vec::new();

    for l in 0..l_len {
        let (lo, hi) = (win.lo[l], win.hi[l]);
        cur.clear();
        cur.resize(hi - lo + 1, f64::INFINITY);
        let xr = x.row(l);
        for m in lo..=hi {
            let d = dist_views(xr, y.row(m), metric);
            let (mut best, mut code) = (f64::INFINITY, BP_START);
            if l == 0 && m == 0 {
                best = 0.0;
            } else {
                let in_prev =
                    |mm: usize| -> bool { l > 0 && prev_range.0 <= mm && mm <= prev_range.1 };
                if m > 0 && in_prev(m - 1) {
                    let c = prev[m - 1 - prev_range.0];
                    if c < best {
                        best = c;
                        code = BP_DIAG;
                    }
                }
                if m > lo {
                    let c = cur[m - 1 - lo];
                    if c < best {
                        best = c;
                        code = BP_LEFT;
                    }
                }
                if in_prev(m) {
                    let c = prev[m - prev_range.0];
                    if c < best {
                        best = c;
                        code = BP_UP;
                    }
                }
            }
            if best.is_finite() {
                cur[m - lo] = best + d;
                bp.set(l, m, code);
            }
        }
        std::mem::swap(&mut prev, &mut cur);
        prev_range = (lo, hi);
    }

    let cost = prev[m_len - 1 - prev_range.0];
    debug_assert!(cost.is_finite(), "goal cell unreachable inside window");

    let mut pairs = Vec::with_capacity(l_len.max(m_len));
    let (mut l, mut m) = (l_len - 1, m_len - 1);
    loop {
        pairs.push((l, m));
        match bp.get(l, m) {
            BP_DIAG => {
                l -= 1;
                m -= 1;
            }
            BP_LEFT => m -= 1,
            BP_UP => l -= 1,
            _ => break,
        }
    }
    pairs.reverse();
    WarpPath { pairs, cost }
}
