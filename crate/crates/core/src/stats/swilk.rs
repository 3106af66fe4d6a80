//! Shapiro–Wilk normality test (AS R94 algorithm, valid for 3 ≤ n ≤ 5000).
//!
//! W is the squared correlation between the ordered sample and the expected
//! normal order statistics; the p-value comes from Royston's normalizing
//! transformation of W (an exact arcsin form at n = 3).

use super::dist::{normal_quantile, normal_sf};
use super::StatsError;

const MIN_N: usize = 3;
const MAX_N: usize = 5000;

// Polynomial coefficient sets from AS R94, lowest order first.
const C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056];
const C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];
const C3: [f64; 4] = [0.544, -0.39978, 0.025054, -6.714e-4];
const C4: [f64; 4] = [1.3822, -0.77857, 0.062767, -0.0020322];
const C5: [f64; 4] = [-1.5861, -0.31082, -0.083751, 0.0038915];
const C6: [f64; 3] = [-0.4803, -0.082676, 0.0030302];
const G: [f64; 2] = [-2.273, 0.459];

fn poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Upper-half coefficients of the W statistic for a sample of size `n`.
///
/// Entry `i` (0-based) weights the gap between order statistics `n-i` and
/// `i+1`; all returned values are positive.
fn weights(n: usize) -> Vec<f64> {
    let half = n / 2;
    if n == 3 {
        return vec![0.5f64.sqrt()];
    }
    let an = n as f64;
    let an25 = an + 0.25;
    // Blom-like normal scores for the lower half.
    let mut m: Vec<f64> = (1..=half)
        .map(|i| normal_quantile((i as f64 - 0.375) / an25))
        .collect();
    let ssq: f64 = 2.0 * m.iter().map(|v| v * v).sum::<f64>();
    let root_ssq = ssq.sqrt();
    let rsn = 1.0 / an.sqrt();

    let a1 = poly(&C1, rsn) - m[0] / root_ssq;
    let (first_untouched, a2, normalizer) = if n > 5 {
        let a2 = poly(&C2, rsn) - m[1] / root_ssq;
        let fac = ((ssq - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1])
            / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2))
            .sqrt();
        (2, Some(a2), fac)
    } else {
        let fac = ((ssq - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1)).sqrt();
        (1, None, fac)
    };

    // Lower-half scores are negative; dividing by -normalizer flips them into
    // the positive upper-half convention used by the W loop below.
    for v in m.iter_mut().skip(first_untouched) {
        *v /= -normalizer;
    }
    m[0] = a1;
    if let Some(a2) = a2 {
        m[1] = a2;
    }
    m
}

/// Shapiro–Wilk test. Returns `(w, p_value)`.
///
/// The sample does not need to be sorted. Fails for n outside [3, 5000] and
/// for samples with zero range, where W is undefined.
pub fn shapiro_wilk(samples: &[f64]) -> Result<(f64, f64), StatsError> {
    let n = samples.len();
    if !(MIN_N..=MAX_N).contains(&n) {
        return Err(StatsError::SampleSizeOutOfRange { n });
    }
    let mut x = samples.to_vec();
    x.sort_by(|a, b| a.partial_cmp(b).expect("non-finite sample value"));
    let range = x[n - 1] - x[0];
    if range <= 0.0 {
        return Err(StatsError::DegenerateSample);
    }

    let a = weights(n);

    // Accumulate means of the scaled sample and of the signed coefficients.
    // Scaling by the range keeps the sums well conditioned for extreme data.
    let mut sx = 0.0;
    let mut sa = 0.0;
    for (i, &v) in x.iter().enumerate() {
        sx += v / range;
        let j = n - 1 - i;
        if i != j {
            let sign = if i < j { -1.0 } else { 1.0 };
            sa += sign * a[i.min(j)];
        }
    }
    let mean_x = sx / n as f64;
    let mean_a = sa / n as f64;

    // W = 1 − (ssa·ssx − sax²)/(ssa·ssx), written to avoid cancellation.
    let mut ssa = 0.0;
    let mut ssx = 0.0;
    let mut sax = 0.0;
    for (i, &v) in x.iter().enumerate() {
        let j = n - 1 - i;
        let coeff = if i == j {
            0.0
        } else {
            let sign = if i < j { -1.0 } else { 1.0 };
            sign * a[i.min(j)]
        };
        let da = coeff - mean_a;
        let dx = v / range - mean_x;
        ssa += da * da;
        ssx += dx * dx;
        sax += da * dx;
    }
    let ssassx = (ssa * ssx).sqrt();
    let w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
    let w = (1.0 - w1).clamp(0.0, 1.0);

    Ok((w, p_value(w, n)))
}

fn p_value(w: f64, n: usize) -> f64 {
    let an = n as f64;
    if n == 3 {
        // Exact distribution at n = 3.
        let stqr = (0.75f64.sqrt()).asin();
        let p = 6.0 / std::f64::consts::PI * (w.sqrt().asin() - stqr);
        return p.clamp(0.0, 1.0);
    }
    let y = (1.0 - w).ln();
    let (z, mean, sd) = if n <= 11 {
        let gamma = poly(&G, an);
        if y >= gamma {
            // W is so small that the transform is out of range.
            return f64::MIN_POSITIVE;
        }
        let y = -(gamma - y).ln();
        (y, poly(&C3, an), poly(&C4, an).exp())
    } else {
        let ln_n = an.ln();
        (y, poly(&C5, ln_n), poly(&C6, ln_n).exp())
    };
    normal_sf((z - mean) / sd).clamp(0.0, 1.0)
}
