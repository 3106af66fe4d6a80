//! Experiment configuration: a TOML file declaring recordings, pairs, the
//! feature grid, DTW settings, and report thresholds.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::CliError;

pub const DEFAULT_MFCC_FFTS: &[usize] = &[1024, 2048, 4096, 8192, 16384];
pub const DEFAULT_CHROMA_FFTS: &[usize] = &[1024, 2048, 4096, 8192];
pub const DEFAULT_N_MFCC: &[usize] = &[13, 20, 30, 40, 50, 80, 100];
pub const DEFAULT_N_SKIP: &[usize] = &[10, 20, 30, 40, 50, 60, 70, 80];
pub const DEFAULT_CHROMA_HOPS: &[usize] = &[512, 1024];
pub const DEFAULT_CENS_HOPS: &[usize] = &[512, 1024, 2048];

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub seed: u64,
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub recordings: Vec<RecordingSpec>,
    #[serde(default)]
    pub pairs: Vec<PairSpec>,
    #[serde(default)]
    pub grid: GridSpec,
    #[serde(default)]
    pub dtw: DtwSpec,
    #[serde(default)]
    pub thresholds: ThresholdSpec,
    #[serde(default)]
    pub cache: CacheSpec,
    pub transfer: Option<TransferSpec>,
    pub simulation: Option<SimulationSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordingSpec {
    pub id: String,
    pub audio: PathBuf,
    #[serde(default)]
    pub annotations: Vec<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    /// Distance metrics, by name (`l1`, `l2`, `cosine`). Empty means all.
    #[serde(default)]
    pub metrics: Vec<String>,
    pub mfcc: Option<MfccBlock>,
    pub mfcc_mod: Option<MfccModBlock>,
    pub chroma_stft: Option<ChromaBlock>,
    pub chroma_cens: Option<ChromaBlock>,
    /// Alias family: expanded like a chroma block, realized as `chroma_stft`
    /// with a doubled FFT size and flagged in the output metadata.
    pub chroma_cqt: Option<ChromaBlock>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MfccBlock {
    #[serde(default)]
    pub ffts: Vec<usize>,
    #[serde(default)]
    pub n_mfcc: Vec<usize>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MfccModBlock {
    #[serde(default)]
    pub ffts: Vec<usize>,
    #[serde(default)]
    pub n_skip: Vec<usize>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChromaBlock {
    #[serde(default)]
    pub ffts: Vec<usize>,
    #[serde(default)]
    pub hops: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DtwSpec {
    /// `fast` (default) or `exact`.
    #[serde(default = "default_dtw_mode")]
    pub mode: String,
    #[serde(default = "default_radius")]
    pub radius: usize,
}

impl Default for DtwSpec {
    fn default() -> Self {
        DtwSpec {
            mode: default_dtw_mode(),
            radius: default_radius(),
        }
    }
}

fn default_dtw_mode() -> String {
    "fast".to_string()
}

fn default_radius() -> usize {
    10
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThresholdSpec {
    #[serde(default = "default_robustness_ms")]
    pub robustness_ms: f64,
    #[serde(default = "default_top_k")]
    pub top_k: usize,
}

impl Default for ThresholdSpec {
    fn default() -> Self {
        ThresholdSpec {
            robustness_ms: default_robustness_ms(),
            top_k: default_top_k(),
        }
    }
}

fn default_robustness_ms() -> f64 {
    perfalign::eval::DEFAULT_THRESHOLD_MS
}

fn default_top_k() -> usize {
    perfalign::eval::DEFAULT_TOP_K
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheSpec {
    /// Cache directory; defaults to `<output_dir>/cache`.
    pub dir: Option<PathBuf>,
    /// Recompute features even when a cache file exists.
    #[serde(default)]
    pub bypass: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransferSpec {
    /// Recording id whose annotations are transferred.
    pub reference: String,
    /// Recording id that receives the markers.
    pub target: String,
    /// Grid cell id to align with; defaults to the first cell.
    pub cell: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationSpec {
    #[serde(default = "default_sim_duration")]
    pub duration_s: f64,
    #[serde(default = "default_marker_spacing")]
    pub marker_spacing_s: f64,
    #[serde(default = "default_sigma_ms")]
    pub sigma_ms: f64,
    #[serde(default = "default_annotators")]
    pub annotators: usize,
    /// Also render a straight/warped synthetic audio pair with annotations.
    #[serde(default)]
    pub audio: bool,
    #[serde(default = "default_sim_sample_rate")]
    pub sample_rate: u32,
    #[serde(default = "default_segment_len")]
    pub warp_segment_s: f64,
}

impl Default for SimulationSpec {
    fn default() -> Self {
        SimulationSpec {
            duration_s: default_sim_duration(),
            marker_spacing_s: default_marker_spacing(),
            sigma_ms: default_sigma_ms(),
            annotators: default_annotators(),
            audio: false,
            sample_rate: default_sim_sample_rate(),
            warp_segment_s: default_segment_len(),
        }
    }
}

fn default_sim_duration() -> f64 {
    30.0
}

fn default_marker_spacing() -> f64 {
    0.5
}

fn default_sigma_ms() -> f64 {
    30.0
}

fn default_annotators() -> usize {
    3
}

fn default_sim_sample_rate() -> u32 {
    22050
}

fn default_segment_len() -> f64 {
    2.0
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("cannot read config {}: {e}", path.display())))?;
        let cfg: ExperimentConfig = toml::from_str(&text)
            .map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let mut ids = HashSet::new();
        for r in &self.recordings {
            if r.id.is_empty() {
                return Err(CliError::config("recording with empty id"));
            }
            if !ids.insert(r.id.as_str()) {
                return Err(CliError::config(format!("duplicate recording id {:?}", r.id)));
            }
        }
        for p in &self.pairs {
            for end in [&p.x, &p.y] {
                if !ids.contains(end.as_str()) {
                    return Err(CliError::config(format!(
                        "pair references undeclared recording {end:?}"
                    )));
                }
            }
        }
        if let Some(t) = &self.transfer {
            for end in [&t.reference, &t.target] {
                if !ids.contains(end.as_str()) {
                    return Err(CliError::config(format!(
                        "transfer references undeclared recording {end:?}"
                    )));
                }
            }
        }
        if self.dtw.mode != "fast" && self.dtw.mode != "exact" {
            return Err(CliError::config(format!(
                "dtw.mode must be \"fast\" or \"exact\", got {:?}",
                self.dtw.mode
            )));
        }
        if self.thresholds.top_k == 0 {
            return Err(CliError::config("thresholds.top_k must be positive"));
        }
        if !(self.thresholds.robustness_ms > 0.0) {
            return Err(CliError::config("thresholds.robustness_ms must be positive"));
        }
        if let Some(sim) = &self.simulation {
            if !(sim.duration_s > 0.0) || !(sim.marker_spacing_s > 0.0) {
                return Err(CliError::config("simulation durations must be positive"));
            }
            if sim.sigma_ms < 0.0 {
                return Err(CliError::config("simulation sigma_ms must be nonnegative"));
            }
            if sim.annotators < 2 {
                return Err(CliError::config("simulation needs at least 2 annotators"));
            }
        }
        Ok(())
    }

    pub fn recording(&self, id: &str) -> Result<&RecordingSpec, CliError> {
        self.recordings
            .iter()
            .find(|r| r.id == id)
            .ok_or_else(|| CliError::config(format!("unknown recording id {id:?}")))
    }

    /// Output directory after applying the CLI override; errors if neither
    /// the config nor the command line provides one.
    pub fn resolve_output_dir(&self, cli_out: Option<&Path>) -> Result<PathBuf, CliError> {
        cli_out
            .map(Path::to_path_buf)
            .or_else(|| self.output_dir.clone())
            .ok_or_else(|| CliError::config("no output directory (set output_dir or pass --out)"))
    }
}
