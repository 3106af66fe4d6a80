//! Deterministic expansion of the configured parameter grid into cells.
//!
//! Each cell pairs one feature configuration with one distance metric.
//! Expansion order is fixed — family, then FFT size, then the family
//! parameter (coefficient count, skip count, or hop), then metric — so two
//! runs of the same config enumerate identical cell lists.
//!
//! Family rules:
//! - `mfcc`: hop is always fft/2, except 16384 which keeps hop 4096.
//! - `mfcc_mod`: same hop rule; 120 coefficients with the first `n_skip`
//!   dropped.
//! - `chroma_stft` / `chroma_cens`: explicit hop list; combinations with
//!   hop > fft are dropped.
//! - `chroma_cqt`: validated against the declared FFT like the other chroma
//!   families, then realized as `chroma_stft` with the FFT doubled (the
//!   longer window stands in for the lower frequency resolution bound of a
//!   constant-Q front end). The cell id keeps the declared FFT and the
//!   `alias` flag records the substitution.

use perfalign::dtw::DistanceMetric;
use perfalign::features::FeatureConfig;

use crate::config::{
    ExperimentConfig, DEFAULT_CENS_HOPS, DEFAULT_CHROMA_FFTS, DEFAULT_CHROMA_HOPS,
    DEFAULT_MFCC_FFTS, DEFAULT_N_MFCC, DEFAULT_N_SKIP,
};
use crate::CliError;

#[derive(Debug, Clone)]
pub struct GridCell {
    /// Stable, human-readable identifier, unique within the grid.
    pub id: String,
    pub family: &'static str,
    /// FFT size as declared in the config (for `chroma_cqt` this is half the
    /// size actually used).
    pub declared_fft: usize,
    pub feature: FeatureConfig,
    pub metric: DistanceMetric,
    /// True when the feature config was substituted (chroma_cqt alias).
    pub alias: bool,
}

impl GridCell {
    /// Parameter column for reports: coefficient count, skip count, or hop.
    pub fn param(&self) -> usize {
        match self.family {
            "mfcc" => self.feature.n_mfcc,
            "mfcc_mod" => self.feature.n_skip,
            _ => self.feature.hop_size,
        }
    }
}

fn parse_metrics(names: &[String]) -> Result<Vec<DistanceMetric>, CliError> {
    if names.is_empty() {
        return Ok(vec![
            DistanceMetric::L1,
            DistanceMetric::L2,
            DistanceMetric::Cosine,
        ]);
    }
    let mut out = Vec::new();
    for name in names {
        let m = match name.as_str() {
            "l1" => DistanceMetric::L1,
            "l2" => DistanceMetric::L2,
            "cosine" => DistanceMetric::Cosine,
            other => {
                return Err(CliError::config(format!(
                    "unknown metric {other:?} (expected l1, l2, or cosine)"
                )))
            }
        };
        if out.contains(&m) {
            return Err(CliError::config(format!("metric {name:?} listed twice")));
        }
        out.push(m);
    }
    Ok(out)
}

fn mfcc_hop(fft: usize) -> usize {
    if fft == 16384 {
        4096
    } else {
        fft / 2
    }
}

fn check_fft(family: &str, fft: usize) -> Result<(), CliError> {
    if !fft.is_power_of_two() || fft < 32 {
        return Err(CliError::config(format!(
            "{family}: fft size {fft} must be a power of two >= 32"
        )));
    }
    Ok(())
}

fn or_default(declared: &[usize], default: &[usize]) -> Vec<usize> {
    if declared.is_empty() {
        default.to_vec()
    } else {
        declared.to_vec()
    }
}

/// Expands the configured grid into an ordered, duplicate-free cell list.
pub fn build_grid(cfg: &ExperimentConfig) -> Result<Vec<GridCell>, CliError> {
    let metrics = parse_metrics(&cfg.grid.metrics)?;
    let mut cells: Vec<GridCell> = Vec::new();

    let mut push = |family: &'static str,
                    declared_fft: usize,
                    param_tag: char,
                    param: usize,
                    feature: FeatureConfig,
                    alias: bool,
                    metric: DistanceMetric| {
        let id = format!(
            "{family}-f{declared_fft}-{param_tag}{param}-{}",
            metric.name()
        );
        cells.push(GridCell {
            id,
            family,
            declared_fft,
            feature,
            metric,
            alias,
        });
    };

    if let Some(block) = &cfg.grid.mfcc {
        let ffts = or_default(&block.ffts, DEFAULT_MFCC_FFTS);
        let counts = or_default(&block.n_mfcc, DEFAULT_N_MFCC);
        for &fft in &ffts {
            check_fft("mfcc", fft)?;
            for &n in &counts {
                // Coefficient-count coherence is the feature layer's rule; a
                // bad value fails those cells at extraction instead of
                // aborting the whole run here.
                for &metric in &metrics {
                    let f = FeatureConfig::mfcc(fft, mfcc_hop(fft), n);
                    push("mfcc", fft, 'c', n, f, false, metric);
                }
            }
        }
    }

    if let Some(block) = &cfg.grid.mfcc_mod {
        let ffts = or_default(&block.ffts, DEFAULT_MFCC_FFTS);
        let skips = or_default(&block.n_skip, DEFAULT_N_SKIP);
        for &fft in &ffts {
            check_fft("mfcc_mod", fft)?;
            for &skip in &skips {
                for &metric in &metrics {
                    let f = FeatureConfig::mfcc_mod(fft, mfcc_hop(fft), skip);
                    push("mfcc_mod", fft, 's', skip, f, false, metric);
                }
            }
        }
    }

    let chroma_blocks: [(&'static str, &Option<crate::config::ChromaBlock>, &[usize]); 3] = [
        ("chroma_stft", &cfg.grid.chroma_stft, DEFAULT_CHROMA_HOPS),
        ("chroma_cens", &cfg.grid.chroma_cens, DEFAULT_CENS_HOPS),
        ("chroma_cqt", &cfg.grid.chroma_cqt, DEFAULT_CENS_HOPS),
    ];
    for (family, block, default_hops) in chroma_blocks {
        let Some(block) = block else { continue };
        let ffts = or_default(&block.ffts, DEFAULT_CHROMA_FFTS);
        let hops = or_default(&block.hops, default_hops);
        for &fft in &ffts {
            check_fft(family, fft)?;
            for &hop in &hops {
                if hop > fft {
                    log::debug!("{family}: dropping hop {hop} > fft {fft}");
                    continue;
                }
                for &metric in &metrics {
                    let (f, alias) = match family {
                        "chroma_stft" => (FeatureConfig::chroma_stft(fft, hop), false),
                        "chroma_cens" => (FeatureConfig::chroma_cens(fft, hop), false),
                        _ => (FeatureConfig::chroma_stft(fft * 2, hop), true),
                    };
                    push(family, fft, 'h', hop, f, alias, metric);
                }
            }
        }
    }

    if cells.is_empty() {
        return Err(CliError::config(
            "grid expands to zero cells (declare at least one family block)",
        ));
    }

    let mut seen = std::collections::HashSet::new();
    for cell in &cells {
        if !seen.insert(cell.id.as_str()) {
            return Err(CliError::config(format!(
                "grid contains duplicate cell {:?}",
                cell.id
            )));
        }
    }
    Ok(cells)
}
