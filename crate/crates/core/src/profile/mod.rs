//! Representative DA/ID price profile construction.
//!
//! A profile is built in five steps: average the historical DA prices per
//! slot, scale the averaged profile around its mean by `beta`, average the
//! quarter-hourly ID-DA market deviation, correct it to zero cumulative sum
//! (so DA and ID integrals coincide), and scale the corrected deviation by
//! `gamma` so the ID profile reproduces a target standard deviation.
//!
//! All operations accept generic horizon lengths (H hours, 4H quarters);
//! the CLI pins them to 24/96 (day) and 168/672 (week).

pub mod day;
pub mod week;

use crate::stats::{self, StatsSummary};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use day::{
    average_da_day, average_id_deviation_day, beta_extreme_day, beta_nominal_day,
    build_day_scenario, DayProfile,
};
pub use week::{
    average_da_week, beta_week, build_week_scenario, gamma_week, id_deviation_week, WeekProfile,
};

/// Default upper-tail fraction for `Extreme` scaling: the 15% highest
/// daily (or weekly) standard deviations.
pub const DEFAULT_EXTREME_TAIL: f64 = 0.85;

#[derive(Debug, Error, PartialEq)]
pub enum ProfileError {
    #[error("empty input: at least one record required")]
    EmptyInput,
    #[error("at least {required} records required for {mode} scaling, got {got}")]
    NotEnoughRecords { required: usize, got: usize, mode: &'static str },
    #[error("scaling factor must be positive, got {0}")]
    NonpositiveBeta(f64),
    #[error("tail fraction must lie in (0, 1), got {0}")]
    BadTailFraction(f64),
    #[error("averaged profile is flat; beta is undefined")]
    DegenerateAverage,
    #[error("corrected deviation is identically zero; gamma is undefined")]
    ZeroDeviation,
    #[error("target std {target} is unreachable: infimum over gamma > 0 is {infimum}")]
    UnreachableTarget { target: f64, infimum: f64 },
    #[error("records have inconsistent horizon lengths")]
    HorizonMismatch,
}

/// Scaling mode requested by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ScalingMode {
    Unscaled,
    Nominal,
    Extreme { tail: f64 },
    Manual { beta: f64, gamma: f64 },
}

impl ScalingMode {
    pub fn label(&self) -> &'static str {
        match self {
            ScalingMode::Unscaled => "unscaled",
            ScalingMode::Nominal => "nominal",
            ScalingMode::Extreme { .. } => "extreme",
            ScalingMode::Manual { .. } => "manual",
        }
    }
}

/// A scaling mode together with the factors it resolved to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalingSpec {
    #[serde(flatten)]
    pub mode: ScalingMode,
    pub beta: f64,
    pub gamma: f64,
}

/// Mean-anchored affine scaling: `out[k] = mean + beta * (p[k] - mean)`.
/// The mean is preserved for every `beta`.
pub fn scale_profile(profile: &[f64], beta: f64) -> Result<Vec<f64>, ProfileError> {
    if beta <= 0.0 {
        return Err(ProfileError::NonpositiveBeta(beta));
    }
    let mean = stats::mean(profile);
    Ok(profile.iter().map(|&p| mean + beta * (p - mean)).collect())
}

/// Subtract the mean so the deviation sums to zero over the block.
pub fn zero_mean_correct(deviation: &[f64]) -> Vec<f64> {
    if deviation.is_empty() {
        return Vec::new();
    }
    let mean = stats::mean(deviation);
    deviation.iter().map(|&d| d - mean).collect()
}

/// Solve for `gamma > 0` such that the population std of
/// `a[q] + gamma * d[q]` equals `target_std`, where `a` is the scaled DA
/// deviation replicated per quarter and `d` the corrected ID deviation.
///
/// The left-hand side is strictly increasing for
/// `gamma >= max(0, -sum(a*d)/sum(d*d))`; a bracketing bisection on that
/// branch is deterministic and derivative-free.
pub fn gamma_for_target_std(
    da_scaled_dev: &[f64],
    corrected_dev: &[f64],
    target_std: f64,
) -> Result<f64, ProfileError> {
    assert_eq!(da_scaled_dev.len(), corrected_dev.len());
    let q = da_scaled_dev.len() as f64;
    let sum_dd: f64 = corrected_dev.iter().map(|d| d * d).sum();
    if sum_dd == 0.0 {
        return Err(ProfileError::ZeroDeviation);
    }
    let sum_ad: f64 = da_scaled_dev
        .iter()
        .zip(corrected_dev)
        .map(|(a, d)| a * d)
        .sum();

    let lhs = |g: f64| -> f64 {
        let ss: f64 = da_scaled_dev
            .iter()
            .zip(corrected_dev)
            .map(|(a, d)| {
                let v = a + g * d;
                v * v
            })
            .sum();
        (ss / q).sqrt()
    };

    // Vertex of the quadratic under the root; left of it the lhs decreases.
    let gamma_lo = (-sum_ad / sum_dd).max(0.0);
    let infimum = lhs(gamma_lo);
    if target_std < infimum || (gamma_lo == 0.0 && target_std <= infimum) {
        return Err(ProfileError::UnreachableTarget { target: target_std, infimum });
    }

    let mut lo = gamma_lo;
    let mut hi = (2.0 * gamma_lo).max(1.0);
    let mut guard = 0;
    while lhs(hi) < target_std {
        hi *= 2.0;
        guard += 1;
        assert!(guard < 2048, "gamma bracket failed to expand");
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if lhs(mid) < target_std {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Replicate each hourly value over its four quarter-hours.
pub fn replicate_quarters(hourly: &[f64]) -> Vec<f64> {
    hourly.iter().flat_map(|&v| std::iter::repeat_n(v, 4)).collect()
}

/// DA and ID summary rows: min/max/mean/std plus the horizon integral
/// (sum of hourly DA prices; quarter-hour ID values weighted by 1/4).
pub fn profile_stats(da: &[f64], id: &[f64]) -> (StatsSummary, StatsSummary) {
    let summarize = |values: &[f64], integral: f64| {
        let (mean, std) = stats::moments(values).expect("profile is non-empty");
        StatsSummary {
            min: values.iter().cloned().fold(f64::INFINITY, f64::min),
            max: values.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
            mean,
            std,
            integral,
        }
    };
    let da_integral: f64 = da.iter().sum();
    let id_integral: f64 = id.iter().sum::<f64>() / 4.0;
    (summarize(da, da_integral), summarize(id, id_integral))
}

pub(crate) fn check_uniform_horizon<'a, I>(records: I) -> Result<(usize, usize), ProfileError>
where
    I: IntoIterator<Item = (&'a [f64], &'a [f64])>,
{
    let mut dims: Option<(usize, usize)> = None;
    for (da, id) in records {
        let d = (da.len(), id.len());
        if d.1 != 4 * d.0 {
            return Err(ProfileError::HorizonMismatch);
        }
        match dims {
            None => dims = Some(d),
            Some(prev) if prev != d => return Err(ProfileError::HorizonMismatch),
            _ => {}
        }
    }
    dims.ok_or(ProfileError::EmptyInput)
}

pub(crate) use check_uniform_horizon as uniform_horizon;
