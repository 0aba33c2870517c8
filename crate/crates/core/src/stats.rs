//! Shared statistical primitives: population moments, percentiles,
//! Scott-rule histograms, and a validation periodogram.

use rustfft::{num_complex::Complex, FftPlanner};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("empty input")]
    EmptyInput,
    #[error("percentile fraction must lie in (0, 1), got {0}")]
    BadFraction(f64),
    #[error("degenerate sample: standard deviation is zero")]
    DegenerateSample,
    #[error("series too short for a periodogram (need >= 8 points, got {0})")]
    TooShort(usize),
}

/// Summary row as reported per profile: extremes, moments, and the
/// horizon integral (sum of hourly prices, quarter values weighted by 1/4).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct StatsSummary {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub std: f64,
    pub integral: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
}

impl Histogram {
    pub fn total_count(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Arithmetic mean and population standard deviation (divisor `n`).
///
/// All scaling-factor formulas are ratios of population standard
/// deviations, so the `n - 1` form is never used in this crate.
pub fn moments(values: &[f64]) -> Result<(f64, f64), StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    Ok((mean, var.sqrt()))
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Population standard deviation; 0.0 for an empty slice is never needed
/// here, callers guarantee non-empty input.
pub fn population_std(values: &[f64]) -> f64 {
    moments(values).map(|(_, s)| s).unwrap_or(0.0)
}

/// Order statistic with linear interpolation between closest ranks:
/// position `1 + f * (n - 1)` on the sorted sample.
pub fn percentile(values: &[f64], f: f64) -> Result<f64, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    if !(f > 0.0 && f < 1.0) {
        return Err(StatsError::BadFraction(f));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite value in percentile input"));
    let pos = f * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    Ok(sorted[lo] + frac * (sorted[hi] - sorted[lo]))
}

/// Histogram with bin width `h = 3.49 * std * n^(-1/3)` (Scott's rule).
/// Edges span `[min, max]`; the last bin is right-closed.
pub fn scott_histogram(values: &[f64]) -> Result<Histogram, StatsError> {
    if values.len() < 2 {
        return Err(StatsError::EmptyInput);
    }
    let (_, std) = moments(values)?;
    if std == 0.0 {
        return Err(StatsError::DegenerateSample);
    }
    let n = values.len() as f64;
    let h = 3.49 * std * n.powf(-1.0 / 3.0);
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let n_bins = ((max - min) / h).ceil().max(1.0) as usize;
    let bin_edges: Vec<f64> = (0..=n_bins).map(|i| min + i as f64 * h).collect();
    let mut counts = vec![0u64; n_bins];
    for &v in values {
        let mut idx = ((v - min) / h).floor() as usize;
        if idx >= n_bins {
            idx = n_bins - 1; // max lands in the right-closed last bin
        }
        counts[idx] += 1;
    }
    Ok(Histogram { bin_edges, counts })
}

/// Discrete-Fourier periodogram of the mean-removed series. Returns the
/// `top_k` spectral peaks by power, zero frequency excluded, frequencies
/// in 1/h for a sample spacing of `dt` hours.
pub fn dominant_frequencies(
    values: &[f64],
    dt: f64,
    top_k: usize,
) -> Result<Vec<(f64, f64)>, StatsError> {
    let n = values.len();
    if n < 8 {
        return Err(StatsError::TooShort(n));
    }
    let m = mean(values);
    let mut buf: Vec<Complex<f64>> = values.iter().map(|&v| Complex::new(v - m, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);

    let scale: f64 = values.iter().map(|v| (v - m) * (v - m)).sum::<f64>().max(1.0);
    let mut peaks: Vec<(f64, f64)> = (1..=n / 2)
        .map(|j| (j as f64 / (n as f64 * dt), buf[j].norm_sqr() / n as f64))
        .filter(|&(_, p)| p > 1e-12 * scale)
        .collect();
    peaks.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.partial_cmp(&b.0).unwrap()));
    peaks.truncate(top_k);
    Ok(peaks)
}
