//! CSV report writers.
//!
//! Every writer emits a header line, one record per row, `\n` endings, and
//! floats formatted with six decimals, so a repeated run over identical
//! inputs produces byte-identical files.

use std::io::{self, Write};

use perfalign::eval::RankingReport;
use perfalign::stats::QqReport;

pub fn fmt6(v: f64) -> String {
    format!("{v:.6}")
}

/// Quote a field if it contains CSV metacharacters.
fn escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub struct SummaryRow {
    pub pair: (String, String),
    pub cell_id: String,
    pub family: &'static str,
    pub fft: usize,
    pub hop: usize,
    pub param: usize,
    pub metric: &'static str,
    /// True when the realized feature config differs from the declared
    /// family (the doubled-FFT stand-in).
    pub substituted: bool,
    pub direction: &'static str,
    pub n_events: usize,
    pub mean_abs_ms: f64,
    pub max_abs_ms: f64,
    pub median_abs_ms: f64,
}

pub fn write_summary_csv(w: &mut impl Write, rows: &[SummaryRow]) -> io::Result<()> {
    writeln!(
        w,
        "pair_x,pair_y,cell,family,fft,hop,param,metric,substituted,direction,n_events,mean_abs_ms,max_abs_ms,median_abs_ms"
    )?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.pair.0,
            r.pair.1,
            r.cell_id,
            r.family,
            r.fft,
            r.hop,
            r.param,
            r.metric,
            r.substituted,
            r.direction,
            r.n_events,
            fmt6(r.mean_abs_ms),
            fmt6(r.max_abs_ms),
            fmt6(r.median_abs_ms)
        )?;
    }
    Ok(())
}

pub struct FailedRow {
    pub pair: (String, String),
    pub cell_id: String,
    pub error: String,
}

pub fn write_failed_csv(w: &mut impl Write, rows: &[FailedRow]) -> io::Result<()> {
    writeln!(w, "pair_x,pair_y,cell,error")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{}",
            r.pair.0,
            r.pair.1,
            r.cell_id,
            escape(&r.error)
        )?;
    }
    Ok(())
}

pub fn write_ranking_csv(
    w: &mut impl Write,
    rankings: &[((String, String), RankingReport)],
) -> io::Result<()> {
    writeln!(w, "pair_x,pair_y,rank,cell,mean_abs_ms,max_abs_ms,pooled")?;
    for (pair, report) in rankings {
        for (i, e) in report.entries.iter().enumerate() {
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                pair.0,
                pair.1,
                i + 1,
                e.config_digest,
                fmt6(e.mean_abs_ms),
                fmt6(e.max_abs_ms),
                e.pooled
            )?;
        }
    }
    Ok(())
}

pub struct AnovaRow {
    pub pair: (String, String),
    pub groups: usize,
    pub total_n: usize,
    pub f_stat: f64,
    pub p_value: f64,
}

pub fn write_anova_csv(w: &mut impl Write, rows: &[AnovaRow]) -> io::Result<()> {
    writeln!(w, "pair_x,pair_y,groups,total_n,f_stat,p_value")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.pair.0,
            r.pair.1,
            r.groups,
            r.total_n,
            fmt6(r.f_stat),
            fmt6(r.p_value)
        )?;
    }
    Ok(())
}

pub fn write_ecdf_csv(
    w: &mut impl Write,
    curves: &[((String, String), Vec<(f64, f64)>)],
) -> io::Result<()> {
    writeln!(w, "pair_x,pair_y,abs_error_ms,fraction")?;
    for (pair, points) in curves {
        for &(value, fraction) in points {
            writeln!(
                w,
                "{},{},{},{}",
                pair.0,
                pair.1,
                fmt6(value),
                fmt6(fraction)
            )?;
        }
    }
    Ok(())
}

/// One global row per annotator pair. Empty strings stand in for normality
/// statistics that could not be computed (degenerate or oversized samples).
pub struct SdGlobalRow {
    pub recording: String,
    pub annotator_a: String,
    pub annotator_b: String,
    pub n: usize,
    pub sigma_ms: f64,
    pub sigma_raw_ms: f64,
    pub offset_ms: f64,
    pub median_block_sd_ms: f64,
    pub sw_w: Option<f64>,
    pub sw_p: Option<f64>,
}

fn opt6(v: Option<f64>) -> String {
    v.map(fmt6).unwrap_or_default()
}

pub fn write_sd_global_csv(w: &mut impl Write, rows: &[SdGlobalRow]) -> io::Result<()> {
    writeln!(
        w,
        "recording,annotator_a,annotator_b,n,sigma_ms,sigma_raw_ms,offset_ms,median_block_sd_ms,sw_w,sw_p"
    )?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{}",
            r.recording,
            r.annotator_a,
            r.annotator_b,
            r.n,
            fmt6(r.sigma_ms),
            fmt6(r.sigma_raw_ms),
            fmt6(r.offset_ms),
            fmt6(r.median_block_sd_ms),
            opt6(r.sw_w),
            opt6(r.sw_p)
        )?;
    }
    Ok(())
}

pub struct SdBlockRow {
    pub recording: String,
    pub annotator_a: String,
    pub annotator_b: String,
    pub event_start: usize,
    pub block_len: usize,
    pub sigma_ms: f64,
    pub sw_w: Option<f64>,
    pub sw_p: Option<f64>,
}

pub fn write_sd_blocks_csv(w: &mut impl Write, rows: &[SdBlockRow]) -> io::Result<()> {
    writeln!(
        w,
        "recording,annotator_a,annotator_b,event_start,block_len,sigma_ms,sw_w,sw_p"
    )?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            r.recording,
            r.annotator_a,
            r.annotator_b,
            r.event_start,
            r.block_len,
            fmt6(r.sigma_ms),
            opt6(r.sw_w),
            opt6(r.sw_p)
        )?;
    }
    Ok(())
}

pub fn write_qq_csv(
    w: &mut impl Write,
    curves: &[(String, String, String, QqReport)],
) -> io::Result<()> {
    writeln!(
        w,
        "recording,annotator_a,annotator_b,theoretical,sample_ms,band_lower_ms,band_upper_ms,slope,intercept"
    )?;
    for (recording, a, b, report) in curves {
        for p in &report.points {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{}",
                recording,
                a,
                b,
                fmt6(p.theoretical),
                fmt6(p.sample),
                fmt6(p.band_lower),
                fmt6(p.band_upper),
                fmt6(report.slope),
                fmt6(report.intercept)
            )?;
        }
    }
    Ok(())
}

pub struct PerEventRow {
    pub recording: String,
    pub event: usize,
    pub sd_ms: f64,
    pub annotators: usize,
    pub low_confidence: bool,
}

pub fn write_per_event_csv(w: &mut impl Write, rows: &[PerEventRow]) -> io::Result<()> {
    writeln!(w, "recording,event,sd_ms,annotators,low_confidence")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{}",
            r.recording,
            r.event,
            fmt6(r.sd_ms),
            r.annotators,
            r.low_confidence
        )?;
    }
    Ok(())
}

pub struct FeatureIndexRow {
    pub recording: String,
    pub family: &'static str,
    pub fft: usize,
    pub hop: usize,
    pub param: usize,
    pub frames: usize,
    pub dim: usize,
    pub cache_file: String,
}

pub fn write_feature_index_csv(w: &mut impl Write, rows: &[FeatureIndexRow]) -> io::Result<()> {
    writeln!(w, "recording,family,fft,hop,param,frames,dim,cache_file")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            r.recording, r.family, r.fft, r.hop, r.param, r.frames, r.dim, r.cache_file
        )?;
    }
    Ok(())
}
