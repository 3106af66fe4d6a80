//! Experiment driver behind the subcommands: loads recordings, provisions
//! features through the disk cache, aligns grid cells in parallel, and
//! writes the CSV reports.
//!
//! Failure policy for `grid`: a broken config aborts the run, a broken cell
//! (bad feature pairing, degenerate input, ...) is recorded in `failed.csv`
//! and skipped. Only when *every* cell fails does the run itself fail.

use std::collections::HashMap;
use std::fs;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use perfalign::annotation::{
    build_ground_truth, parse_annotation_file, transfer_annotations, write_annotation_file,
    AnnotationSequence, GroundTruth,
};
use perfalign::audio::{load_wav, write_wav, AudioBuffer, WavEncoding};
use perfalign::dtw::{dtw_exact, fastdtw, DistanceMetric, DtwError, WarpPath};
use perfalign::eval::{
    ecdf, error_sequence, one_way_anova, rank_alignments, summarize, Direction, ErrorSequence,
};
use perfalign::features::cache::{quantize_in_place, read_feature_cache, write_feature_cache};
use perfalign::features::{extract, FeatureConfig, FeatureSequence};
use perfalign::sim::{
    content_markers, render, simulate_annotator, HarmonicSignal, TimeMap,
};
use perfalign::stats::{
    blockwise_sigma, diff_sequences, estimate_sigma, estimate_sigma_raw, median_sd, per_event_sd,
    qq_data, shapiro_wilk, DEFAULT_BLOCK_HOP, DEFAULT_BLOCK_LEN,
};

use crate::config::ExperimentConfig;
use crate::grid::{build_grid, GridCell};
use crate::report::{
    write_anova_csv, write_ecdf_csv, write_failed_csv, write_feature_index_csv,
    write_per_event_csv, write_qq_csv, write_ranking_csv, write_sd_blocks_csv,
    write_sd_global_csv, write_summary_csv, AnovaRow, FailedRow, FeatureIndexRow, PerEventRow,
    SdBlockRow, SdGlobalRow, SummaryRow,
};
use crate::{CliError, Overrides};

const WARP_SLOPE_RANGE: (f64, f64) = (0.8, 1.25);

pub struct LoadedRecording {
    pub id: String,
    pub audio: AudioBuffer,
    /// SHA-256 of the raw audio file, hex — cache key component.
    pub audio_digest: String,
    pub annotations: Vec<AnnotationSequence>,
    pub ground_truth: Option<GroundTruth>,
}

fn load_recording(spec: &crate::config::RecordingSpec) -> Result<LoadedRecording, CliError> {
    let bytes = fs::read(&spec.audio)
        .map_err(|e| CliError::io(format!("cannot read {}: {e}", spec.audio.display())))?;
    let audio_digest = hex(&Sha256::digest(&bytes));
    let audio = load_wav(&spec.audio).map_err(|e| CliError::io(e.to_string()))?;

    let mut annotations = Vec::new();
    for path in &spec.annotations {
        let mut a = parse_annotation_file(path).map_err(|e| CliError::io(e.to_string()))?;
        a.recording = spec.id.clone();
        annotations.push(a);
    }
    let ground_truth = match annotations.len() {
        0 => None,
        1 => Some(GroundTruth::from_single(&annotations[0])),
        _ => Some(build_ground_truth(&annotations).map_err(|e| CliError::io(e.to_string()))?),
    };
    Ok(LoadedRecording {
        id: spec.id.clone(),
        audio,
        audio_digest,
        annotations,
        ground_truth,
    })
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn load_recordings(
    cfg: &ExperimentConfig,
    ids: &[&str],
) -> Result<HashMap<String, LoadedRecording>, CliError> {
    let mut out = HashMap::new();
    for id in ids {
        if out.contains_key(*id) {
            continue;
        }
        let rec = load_recording(cfg.recording(id)?)?;
        log::info!(
            "loaded {}: {:.1} s at {} Hz, {} annotation file(s)",
            rec.id,
            rec.audio.duration_secs(),
            rec.audio.sample_rate,
            rec.annotations.len()
        );
        out.insert(id.to_string(), rec);
    }
    Ok(out)
}

/// Disk-backed feature provider. Results are always routed through `f32`
/// quantization, so a run produces identical numbers whether or not it hit
/// the cache.
pub struct FeatureStore {
    dir: PathBuf,
    bypass: bool,
    tmp_counter: AtomicU64,
}

impl FeatureStore {
    pub fn new(dir: PathBuf, bypass: bool) -> Result<Self, CliError> {
        fs::create_dir_all(&dir)
            .map_err(|e| CliError::io(format!("cannot create cache dir {}: {e}", dir.display())))?;
        Ok(FeatureStore {
            dir,
            bypass,
            tmp_counter: AtomicU64::new(0),
        })
    }

    pub fn cache_path(&self, audio_digest: &str, config: &FeatureConfig) -> PathBuf {
        self.dir
            .join(format!("{}-{}.feat", &audio_digest[..16], &config.digest_hex()[..16]))
    }

    pub fn get(
        &self,
        rec: &LoadedRecording,
        config: &FeatureConfig,
    ) -> Result<FeatureSequence, CliError> {
        let path = self.cache_path(&rec.audio_digest, config);
        if !self.bypass && path.exists() {
            match read_feature_cache(&path, config, &rec.id) {
                Ok(seq) => return Ok(seq),
                Err(e) => log::warn!("ignoring unusable cache file: {e}"),
            }
        }
        let mut seq = extract(&rec.audio, config).map_err(|e| CliError::io(e.to_string()))?;
        quantize_in_place(&mut seq);

        // Best-effort write via a unique temp name + rename, so parallel
        // writers of the same cell never interleave bytes.
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            self.tmp_counter.fetch_add(1, Ordering::Relaxed)
        ));
        match write_feature_cache(&tmp, &seq).map_err(|e| e.to_string()).and_then(|()| {
            fs::rename(&tmp, &path).map_err(|e| e.to_string())
        }) {
            Ok(()) => {}
            Err(e) => {
                let _ = fs::remove_file(&tmp);
                log::warn!("could not cache {}: {e}", path.display());
            }
        }
        Ok(seq)
    }
}

fn effective_dtw(cfg: &ExperimentConfig, ov: &Overrides) -> (bool, usize) {
    let exact = ov.exact || cfg.dtw.mode == "exact";
    let radius = ov.radius.unwrap_or(cfg.dtw.radius);
    (exact, radius)
}

fn align(
    x: &FeatureSequence,
    y: &FeatureSequence,
    metric: DistanceMetric,
    exact: bool,
    radius: usize,
) -> Result<WarpPath, DtwError> {
    if exact {
        dtw_exact(x, y, metric)
    } else {
        fastdtw(x, y, metric, radius)
    }
}

fn cache_dir(cfg: &ExperimentConfig, out_dir: &Path) -> PathBuf {
    cfg.cache
        .dir
        .clone()
        .unwrap_or_else(|| out_dir.join("cache"))
}

struct CellOk {
    pair_idx: usize,
    cell_idx: usize,
    fwd: ErrorSequence,
    bwd: ErrorSequence,
}

/// Mean, max, and lower-middle median of pooled absolute errors.
fn pooled_stats(fwd: &ErrorSequence, bwd: &ErrorSequence) -> (f64, f64, f64, usize) {
    let mut abs: Vec<f64> = fwd
        .errors
        .iter()
        .chain(&bwd.errors)
        .map(|v| v.abs())
        .collect();
    abs.sort_by(|a, b| a.partial_cmp(b).expect("non-finite error"));
    let n = abs.len();
    let mean = abs.iter().sum::<f64>() / n as f64;
    let max = abs[n - 1];
    let median = abs[(n - 1) / 2];
    (mean, max, median, n)
}

fn write_report(path: &Path, body: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>) -> Result<(), CliError> {
    let file = File::create(path)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    body(&mut w)
        .and_then(|()| w.flush())
        .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))
}

pub fn run_grid(cfg: &ExperimentConfig, ov: &Overrides) -> Result<(), CliError> {
    let out_dir = cfg.resolve_output_dir(ov.out.as_deref())?;
    fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", out_dir.display())))?;
    let cells = build_grid(cfg)?;
    if cfg.pairs.is_empty() {
        return Err(CliError::config("grid run needs at least one [[pairs]] entry"));
    }

    let ids: Vec<&str> = cfg
        .pairs
        .iter()
        .flat_map(|p| [p.x.as_str(), p.y.as_str()])
        .collect();
    let recs = load_recordings(cfg, &ids)?;
    for p in &cfg.pairs {
        let (gx, gy) = (&recs[&p.x].ground_truth, &recs[&p.y].ground_truth);
        let (Some(gx), Some(gy)) = (gx, gy) else {
            return Err(CliError::config(format!(
                "pair ({}, {}): both recordings need annotations for evaluation",
                p.x, p.y
            )));
        };
        if gx.times.len() != gy.times.len() {
            return Err(CliError::config(format!(
                "pair ({}, {}): ground truths cover {} vs {} events",
                p.x,
                p.y,
                gx.times.len(),
                gy.times.len()
            )));
        }
    }

    let store = FeatureStore::new(cache_dir(cfg, &out_dir), cfg.cache.bypass)?;
    let (exact, radius) = effective_dtw(cfg, ov);
    log::info!(
        "aligning {} pair(s) x {} cell(s), {}",
        cfg.pairs.len(),
        cells.len(),
        if exact {
            "exact".to_string()
        } else {
            format!("fast radius {radius}")
        }
    );

    let tasks: Vec<(usize, usize)> = (0..cfg.pairs.len())
        .flat_map(|p| (0..cells.len()).map(move |c| (p, c)))
        .collect();

    let run_cell = |&(pair_idx, cell_idx): &(usize, usize)| -> Result<CellOk, (usize, usize, String)> {
        let fail = |msg: String| (pair_idx, cell_idx, msg);
        let pair = &cfg.pairs[pair_idx];
        let cell = &cells[cell_idx];
        let (rx, ry) = (&recs[&pair.x], &recs[&pair.y]);
        let fx = store.get(rx, &cell.feature).map_err(|e| fail(e.to_string()))?;
        let fy = store.get(ry, &cell.feature).map_err(|e| fail(e.to_string()))?;
        let path = align(&fx, &fy, cell.metric, exact, radius)
            .map_err(|e| fail(e.to_string()))?;
        let (gx, gy) = (
            rx.ground_truth.as_ref().unwrap(),
            ry.ground_truth.as_ref().unwrap(),
        );
        let fwd = error_sequence(gx, gy, &path, &fx.times, &fy.times, Direction::XToY, &cell.id)
            .map_err(|e| fail(e.to_string()))?;
        let bwd = error_sequence(gx, gy, &path, &fx.times, &fy.times, Direction::YToX, &cell.id)
            .map_err(|e| fail(e.to_string()))?;
        Ok(CellOk {
            pair_idx,
            cell_idx,
            fwd,
            bwd,
        })
    };

    let results: Vec<Result<CellOk, (usize, usize, String)>> = match ov.workers {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::config(format!("cannot build worker pool: {e}")))?
            .install(|| tasks.par_iter().map(run_cell).collect()),
        _ => tasks.par_iter().map(run_cell).collect(),
    };

    let mut ok: Vec<CellOk> = Vec::new();
    let mut failed_raw: Vec<(usize, usize, String)> = Vec::new();
    for r in results {
        match r {
            Ok(c) => ok.push(c),
            Err(f) => failed_raw.push(f),
        }
    }
    ok.sort_by_key(|c| (c.pair_idx, c.cell_idx));
    failed_raw.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));

    let mut summary_rows = Vec::new();
    for c in &ok {
        let pair = &cfg.pairs[c.pair_idx];
        let cell = &cells[c.cell_idx];
        let base = |direction, n, stats: (f64, f64, f64)| SummaryRow {
            pair: (pair.x.clone(), pair.y.clone()),
            cell_id: cell.id.clone(),
            family: cell.family,
            fft: cell.declared_fft,
            hop: cell.feature.hop_size,
            param: cell.param(),
            metric: cell.metric.name(),
            substituted: cell.alias,
            direction,
            n_events: n,
            mean_abs_ms: stats.0,
            max_abs_ms: stats.1,
            median_abs_ms: stats.2,
        };
        let s_fwd = summarize(&c.fwd).map_err(|e| CliError::io(e.to_string()))?;
        let s_bwd = summarize(&c.bwd).map_err(|e| CliError::io(e.to_string()))?;
        let (p_mean, p_max, p_median, p_n) = pooled_stats(&c.fwd, &c.bwd);
        summary_rows.push(base(c.fwd.direction.name(), c.fwd.errors.len(), s_fwd));
        summary_rows.push(base(c.bwd.direction.name(), c.bwd.errors.len(), s_bwd));
        summary_rows.push(base("pooled", p_n, (p_mean, p_max, p_median)));
    }

    let mut rankings = Vec::new();
    let mut anova_rows = Vec::new();
    let mut ecdf_curves = Vec::new();
    for (pair_idx, pair) in cfg.pairs.iter().enumerate() {
        let pair_cells: Vec<&CellOk> = ok.iter().filter(|c| c.pair_idx == pair_idx).collect();
        if pair_cells.is_empty() {
            continue;
        }
        let seqs: Vec<(ErrorSequence, ErrorSequence)> = pair_cells
            .iter()
            .map(|c| (c.fwd.clone(), c.bwd.clone()))
            .collect();
        let ranking = rank_alignments(&seqs, cfg.thresholds.robustness_ms, cfg.thresholds.top_k)
            .map_err(|e| CliError::io(e.to_string()))?;

        let ranked_errors: Vec<Vec<f64>> = ranking
            .entries
            .iter()
            .map(|e| {
                let c = pair_cells
                    .iter()
                    .find(|c| cells[c.cell_idx].id == e.config_digest)
                    .expect("ranked cell not in results");
                c.fwd
                    .errors
                    .iter()
                    .chain(&c.bwd.errors)
                    .map(|v| v.abs())
                    .collect()
            })
            .collect();

        if ranked_errors.len() >= 2 {
            match one_way_anova(&ranked_errors) {
                Ok((f_stat, p_value)) => anova_rows.push(AnovaRow {
                    pair: (pair.x.clone(), pair.y.clone()),
                    groups: ranked_errors.len(),
                    total_n: ranked_errors.iter().map(Vec::len).sum(),
                    f_stat,
                    p_value,
                }),
                Err(e) => log::warn!("anova skipped for ({}, {}): {e}", pair.x, pair.y),
            }
        }
        if !ranked_errors.is_empty() {
            let pooled: Vec<f64> = ranked_errors.iter().flatten().copied().collect();
            let points = ecdf(&pooled).map_err(|e| CliError::io(e.to_string()))?;
            ecdf_curves.push(((pair.x.clone(), pair.y.clone()), points));
        }
        rankings.push(((pair.x.clone(), pair.y.clone()), ranking));
    }

    let failed_rows: Vec<FailedRow> = failed_raw
        .iter()
        .map(|(p, c, e)| FailedRow {
            pair: (cfg.pairs[*p].x.clone(), cfg.pairs[*p].y.clone()),
            cell_id: cells[*c].id.clone(),
            error: e.clone(),
        })
        .collect();

    write_report(&out_dir.join("summary.csv"), |w| {
        write_summary_csv(w, &summary_rows)
    })?;
    write_report(&out_dir.join("ranking.csv"), |w| {
        write_ranking_csv(w, &rankings)
    })?;
    write_report(&out_dir.join("anova.csv"), |w| write_anova_csv(w, &anova_rows))?;
    write_report(&out_dir.join("ecdf.csv"), |w| write_ecdf_csv(w, &ecdf_curves))?;
    write_report(&out_dir.join("failed.csv"), |w| {
        write_failed_csv(w, &failed_rows)
    })?;

    log::info!(
        "grid finished: {} cell(s) ok, {} failed",
        ok.len(),
        failed_rows.len()
    );
    if ok.is_empty() {
        return Err(CliError::AllCellsFailed);
    }
    Ok(())
}

pub fn run_features(cfg: &ExperimentConfig, ov: &Overrides) -> Result<(), CliError> {
    let out_dir = cfg.resolve_output_dir(ov.out.as_deref())?;
    fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", out_dir.display())))?;
    let cells = build_grid(cfg)?;
    if cfg.recordings.is_empty() {
        return Err(CliError::config("no recordings declared"));
    }

    // Cells differing only in metric share a feature config; extract each
    // distinct config once.
    let mut configs: Vec<&GridCell> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for cell in &cells {
        if seen.insert(cell.feature.digest()) {
            configs.push(cell);
        }
    }

    let ids: Vec<&str> = cfg.recordings.iter().map(|r| r.id.as_str()).collect();
    let recs = load_recordings(cfg, &ids)?;
    let store = FeatureStore::new(cache_dir(cfg, &out_dir), cfg.cache.bypass)?;

    let mut rows = Vec::new();
    for spec in &cfg.recordings {
        let rec = &recs[&spec.id];
        let computed: Vec<Result<FeatureIndexRow, CliError>> = configs
            .par_iter()
            .map(|cell| {
                let seq = store.get(rec, &cell.feature)?;
                Ok(FeatureIndexRow {
                    recording: rec.id.clone(),
                    family: cell.family,
                    fft: cell.declared_fft,
                    hop: cell.feature.hop_size,
                    param: cell.param(),
                    frames: seq.len(),
                    dim: seq.dim(),
                    cache_file: store
                        .cache_path(&rec.audio_digest, &cell.feature)
                        .file_name()
                        .unwrap()
                        .to_string_lossy()
                        .into_owned(),
                })
            })
            .collect();
        for r in computed {
            rows.push(r?);
        }
    }

    write_report(&out_dir.join("features.csv"), |w| {
        write_feature_index_csv(w, &rows)
    })?;
    log::info!(
        "cached {} feature matrices ({} configs x {} recordings)",
        rows.len(),
        configs.len(),
        cfg.recordings.len()
    );
    Ok(())
}

pub fn run_align(cfg: &ExperimentConfig, ov: &Overrides) -> Result<(), CliError> {
    let out_dir = cfg.resolve_output_dir(ov.out.as_deref())?;
    fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", out_dir.display())))?;
    let cells = build_grid(cfg)?;
    let pair = cfg
        .pairs
        .first()
        .ok_or_else(|| CliError::config("align needs a [[pairs]] entry"))?;
    let cell = &cells[0];

    let recs = load_recordings(cfg, &[pair.x.as_str(), pair.y.as_str()])?;
    let (rx, ry) = (&recs[&pair.x], &recs[&pair.y]);
    let store = FeatureStore::new(cache_dir(cfg, &out_dir), cfg.cache.bypass)?;
    let (exact, radius) = effective_dtw(cfg, ov);

    let fx = store.get(rx, &cell.feature)?;
    let fy = store.get(ry, &cell.feature)?;
    let path = align(&fx, &fy, cell.metric, exact, radius)
        .map_err(|e| CliError::io(e.to_string()))?;

    let path_file = out_dir.join(format!("path-{}-{}-{}.csv", pair.x, pair.y, cell.id));
    write_report(&path_file, |w| {
        path.write_csv(w, &pair.x, &pair.y, &cell.id)
    })?;
    println!(
        "aligned {} ({} frames) to {} ({} frames) with {}: path length {}, cost {:.6}",
        pair.x,
        fx.len(),
        pair.y,
        fy.len(),
        cell.id,
        path.pairs.len(),
        path.cost
    );

    // With ground truth on both sides the alignment is also scored.
    if let (Some(gx), Some(gy)) = (&rx.ground_truth, &ry.ground_truth) {
        if gx.times.len() == gy.times.len() {
            let fwd =
                error_sequence(gx, gy, &path, &fx.times, &fy.times, Direction::XToY, &cell.id)
                    .map_err(|e| CliError::io(e.to_string()))?;
            let bwd =
                error_sequence(gx, gy, &path, &fx.times, &fy.times, Direction::YToX, &cell.id)
                    .map_err(|e| CliError::io(e.to_string()))?;
            for seq in [&fwd, &bwd] {
                let (mean, max, median) = summarize(seq).map_err(|e| CliError::io(e.to_string()))?;
                println!(
                    "  {}: mean {:.3} ms, max {:.3} ms, median {:.3} ms over {} events",
                    seq.direction.name(),
                    mean,
                    max,
                    median,
                    seq.errors.len()
                );
            }
        } else {
            log::warn!(
                "ground truths cover different event counts ({} vs {}); skipping scoring",
                gx.times.len(),
                gy.times.len()
            );
        }
    }
    Ok(())
}

pub fn run_transfer(cfg: &ExperimentConfig, ov: &Overrides) -> Result<(), CliError> {
    let out_dir = cfg.resolve_output_dir(ov.out.as_deref())?;
    fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", out_dir.display())))?;
    let spec = cfg
        .transfer
        .as_ref()
        .ok_or_else(|| CliError::config("transfer needs a [transfer] section"))?;
    let cells = build_grid(cfg)?;
    let cell = match &spec.cell {
        Some(id) => cells
            .iter()
            .find(|c| &c.id == id)
            .ok_or_else(|| CliError::config(format!("transfer.cell {id:?} is not in the grid")))?,
        None => &cells[0],
    };

    let recs = load_recordings(cfg, &[spec.reference.as_str(), spec.target.as_str()])?;
    let reference = &recs[&spec.reference];
    let target = &recs[&spec.target];
    let gt = reference
        .ground_truth
        .as_ref()
        .ok_or_else(|| {
            CliError::config(format!(
                "transfer reference {:?} has no annotations",
                spec.reference
            ))
        })?;

    let store = FeatureStore::new(cache_dir(cfg, &out_dir), cfg.cache.bypass)?;
    let (exact, radius) = effective_dtw(cfg, ov);
    let fx = store.get(reference, &cell.feature)?;
    let fy = store.get(target, &cell.feature)?;
    let path = align(&fx, &fy, cell.metric, exact, radius)
        .map_err(|e| CliError::io(e.to_string()))?;

    let outcome = transfer_annotations(gt, &path, &fx.times, &fy.times)
        .map_err(|e| CliError::io(e.to_string()))?;
    let out_file = out_dir.join(format!("{}_from_{}.txt", spec.target, spec.reference));
    write_annotation_file(&out_file, &outcome.times).map_err(|e| CliError::io(e.to_string()))?;
    println!(
        "wrote {} markers to {} ({} clipped to stay non-decreasing)",
        outcome.times.len(),
        out_file.display(),
        outcome.clipped
    );
    Ok(())
}

pub fn run_annstats(cfg: &ExperimentConfig, ov: &Overrides) -> Result<(), CliError> {
    let out_dir = cfg.resolve_output_dir(ov.out.as_deref())?;
    fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", out_dir.display())))?;

    let multi: Vec<&crate::config::RecordingSpec> = cfg
        .recordings
        .iter()
        .filter(|r| r.annotations.len() >= 2)
        .collect();
    if multi.is_empty() {
        return Err(CliError::config(
            "annstats needs at least one recording with two or more annotation files",
        ));
    }

    let mut global_rows = Vec::new();
    let mut block_rows = Vec::new();
    let mut qq_curves = Vec::new();
    let mut per_event_rows = Vec::new();

    for spec in multi {
        // Annotation-only subcommand: the audio itself is not needed, so the
        // files are parsed directly rather than through load_recording.
        let mut seqs = Vec::new();
        for path in &spec.annotations {
            let mut a = parse_annotation_file(path).map_err(|e| CliError::io(e.to_string()))?;
            a.recording = spec.id.clone();
            seqs.push(a);
        }

        for i in 0..seqs.len() {
            for j in (i + 1)..seqs.len() {
                let (a, b) = (&seqs[i], &seqs[j]);
                let d = match diff_sequences(a, b) {
                    Ok(d) => d,
                    Err(e) => {
                        log::warn!("{}: pair ({}, {}): {e}", spec.id, a.annotator, b.annotator);
                        continue;
                    }
                };
                let deltas_ms: Vec<f64> = d.deltas.iter().map(|v| v * 1000.0).collect();
                let est = match estimate_sigma(&d) {
                    Ok(e) => e,
                    Err(e) => {
                        log::warn!("{}: pair ({}, {}): {e}", spec.id, a.annotator, b.annotator);
                        continue;
                    }
                };
                let raw = estimate_sigma_raw(&d).map_err(|e| CliError::io(e.to_string()))?;
                let blocks = blockwise_sigma(&d, DEFAULT_BLOCK_LEN, DEFAULT_BLOCK_HOP)
                    .map_err(|e| CliError::io(e.to_string()))?;
                let median_block = median_sd(&blocks).map_err(|e| CliError::io(e.to_string()))?;
                let sw_global = match shapiro_wilk(&deltas_ms) {
                    Ok(wp) => Some(wp),
                    Err(e) => {
                        log::warn!(
                            "{}: normality test unavailable for ({}, {}): {e}",
                            spec.id,
                            a.annotator,
                            b.annotator
                        );
                        None
                    }
                };

                global_rows.push(SdGlobalRow {
                    recording: spec.id.clone(),
                    annotator_a: a.annotator.clone(),
                    annotator_b: b.annotator.clone(),
                    n: est.n,
                    sigma_ms: est.sigma_ms,
                    sigma_raw_ms: raw.sigma_ms,
                    offset_ms: d.mean_offset * 1000.0,
                    median_block_sd_ms: median_block,
                    sw_w: sw_global.map(|v| v.0),
                    sw_p: sw_global.map(|v| v.1),
                });

                for b_est in &blocks {
                    let perfalign::stats::SigmaScope::Block { start_event, length } = b_est.scope
                    else {
                        continue;
                    };
                    let slice = &deltas_ms[start_event..start_event + length];
                    let sw = shapiro_wilk(slice).ok();
                    block_rows.push(SdBlockRow {
                        recording: spec.id.clone(),
                        annotator_a: a.annotator.clone(),
                        annotator_b: b.annotator.clone(),
                        event_start: start_event,
                        block_len: length,
                        sigma_ms: b_est.sigma_ms,
                        sw_w: sw.map(|v| v.0),
                        sw_p: sw.map(|v| v.1),
                    });
                }

                match qq_data(&deltas_ms) {
                    Ok(report) => qq_curves.push((
                        spec.id.clone(),
                        a.annotator.clone(),
                        b.annotator.clone(),
                        report,
                    )),
                    Err(e) => log::warn!(
                        "{}: qq data unavailable for ({}, {}): {e}",
                        spec.id,
                        a.annotator,
                        b.annotator
                    ),
                }
            }
        }

        let refs: Vec<&[f64]> = seqs.iter().map(|s| s.times.as_slice()).collect();
        match per_event_sd(&refs) {
            Ok(pe) => {
                for (event, sd_ms) in pe.sigmas_ms.iter().enumerate() {
                    per_event_rows.push(PerEventRow {
                        recording: spec.id.clone(),
                        event,
                        sd_ms: *sd_ms,
                        annotators: pe.annotator_count,
                        low_confidence: pe.low_confidence,
                    });
                }
            }
            Err(e) => log::warn!("{}: per-event SD unavailable: {e}", spec.id),
        }
    }

    write_report(&out_dir.join("sd_global.csv"), |w| {
        write_sd_global_csv(w, &global_rows)
    })?;
    write_report(&out_dir.join("sd_blocks.csv"), |w| {
        write_sd_blocks_csv(w, &block_rows)
    })?;
    write_report(&out_dir.join("qq.csv"), |w| write_qq_csv(w, &qq_curves))?;
    write_report(&out_dir.join("per_event.csv"), |w| {
        write_per_event_csv(w, &per_event_rows)
    })?;
    log::info!(
        "annstats finished: {} annotator pair(s), {} block row(s)",
        global_rows.len(),
        block_rows.len()
    );
    Ok(())
}

pub fn run_simulate(cfg: &ExperimentConfig, ov: &Overrides) -> Result<(), CliError> {
    let out_dir = cfg.resolve_output_dir(ov.out.as_deref())?;
    fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", out_dir.display())))?;
    let sim = cfg.simulation.clone().unwrap_or_default();
    let seed = ov.seed.unwrap_or(cfg.seed);

    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let signal_seed: u64 = master.gen();
    let warp_seed: u64 = master.gen();

    let identity = TimeMap::identity(sim.duration_s);
    let warp = TimeMap::random(sim.duration_s, sim.warp_segment_s, WARP_SLOPE_RANGE, warp_seed);

    let truth_u = content_markers(sim.duration_s, sim.marker_spacing_s);
    let truth_x = truth_u.clone();
    let truth_y: Vec<f64> = truth_u.iter().map(|&u| warp.invert(u)).collect();

    let mut manifest: Vec<(String, &str, &str)> = Vec::new();
    let write_markers = |name: String, times: &[f64], role: &'static str, rec: &'static str, manifest: &mut Vec<(String, &str, &str)>| -> Result<(), CliError> {
        write_annotation_file(out_dir.join(&name), times)
            .map_err(|e| CliError::io(e.to_string()))?;
        manifest.push((name, role, rec));
        Ok(())
    };

    write_markers("x_truth.txt".into(), &truth_x, "truth", "x", &mut manifest)?;
    write_markers("y_truth.txt".into(), &truth_y, "truth", "y", &mut manifest)?;

    let sigma_s = sim.sigma_ms / 1000.0;
    for k in 1..=sim.annotators {
        let jx = simulate_annotator(&truth_x, sigma_s, &mut master);
        write_markers(format!("x_ann{k}.txt"), &jx, "annotation", "x", &mut manifest)?;
    }
    for k in 1..=sim.annotators {
        let jy = simulate_annotator(&truth_y, sigma_s, &mut master);
        write_markers(format!("y_ann{k}.txt"), &jy, "annotation", "y", &mut manifest)?;
    }

    if sim.audio {
        let signal = HarmonicSignal::random(sim.duration_s, signal_seed);
        for (name, map, rec) in [("x.wav", &identity, "x"), ("y.wav", &warp, "y")] {
            let buf = render(&signal, map, sim.sample_rate, &format!("sim:{rec}"));
            write_wav(
                out_dir.join(name),
                &buf.samples,
                1,
                sim.sample_rate,
                WavEncoding::Pcm16,
            )
            .map_err(|e| CliError::io(e.to_string()))?;
            manifest.push((name.to_string(), "audio", rec));
        }
    }

    write_report(&out_dir.join("manifest.csv"), |w| {
        writeln!(w, "file,role,recording")?;
        for (file, role, rec) in &manifest {
            writeln!(w, "{file},{role},{rec}")?;
        }
        Ok(())
    })?;
    println!(
        "simulated {} events x {} annotator(s) per side into {} (seed {seed})",
        truth_u.len(),
        sim.annotators,
        out_dir.display()
    );
    Ok(())
}
