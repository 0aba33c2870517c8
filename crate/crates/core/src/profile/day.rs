//! Single-day DA and ID profile construction.

use super::{
    gamma_for_target_std, profile_stats, replicate_quarters, scale_profile, uniform_horizon,
    zero_mean_correct, ProfileError, ScalingMode, ScalingSpec,
};
use crate::ingest::DayRecord;
use crate::stats::{self, StatsSummary};
use serde::Serialize;

/// A constructed single-day scenario: the scaled DA vector, the corrected
/// and scaled ID vector, the corrected (pre-gamma) deviation, and the
/// scaling that produced them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DayProfile {
    pub da: Vec<f64>,
    pub id: Vec<f64>,
    /// Corrected ID-DA deviation, zero-sum over the day.
    pub deviation: Vec<f64>,
    pub scaling: ScalingSpec,
    pub da_mean: f64,
}

impl DayProfile {
    pub fn stats(&self) -> (StatsSummary, StatsSummary) {
        profile_stats(&self.da, &self.id)
    }
}

fn records(days: &[DayRecord]) -> impl Iterator<Item = (&[f64], &[f64])> {
    days.iter().map(|d| (d.da.as_slice(), d.id.as_slice()))
}

/// Per-hour average of the historical DA prices over all days.
pub fn average_da_day(days: &[DayRecord]) -> Result<Vec<f64>, ProfileError> {
    let (hours, _) = uniform_horizon(records(days))?;
    let n = days.len() as f64;
    Ok((0..hours)
        .map(|k| days.iter().map(|d| d.da[k]).sum::<f64>() / n)
        .collect())
}

fn averaged_dev_norm(days: &[DayRecord]) -> Result<f64, ProfileError> {
    let avg = average_da_day(days)?;
    let mean = stats::mean(&avg);
    let ss: f64 = avg.iter().map(|v| (v - mean) * (v - mean)).sum();
    if ss == 0.0 {
        return Err(ProfileError::DegenerateAverage);
    }
    Ok(ss)
}

/// Explicit nominal scaling factor: the per-day ratio of historical to
/// averaged-profile dispersion, averaged over all days. Scaling by this
/// factor makes the profile std match the average daily std.
pub fn beta_nominal_day(days: &[DayRecord]) -> Result<f64, ProfileError> {
    let denom = averaged_dev_norm(days)?;
    let n = days.len() as f64;
    let sum: f64 = days
        .iter()
        .map(|d| {
            let m = stats::mean(&d.da);
            let num: f64 = d.da.iter().map(|v| (v - m) * (v - m)).sum();
            (num / denom).sqrt()
        })
        .sum();
    Ok(sum / n)
}

/// Extreme scaling factor: the upper-tail percentile of the daily stds
/// over the std of the averaged profile.
pub fn beta_extreme_day(days: &[DayRecord], tail: f64) -> Result<f64, ProfileError> {
    if !(tail > 0.0 && tail < 1.0) {
        return Err(ProfileError::BadTailFraction(tail));
    }
    let avg = average_da_day(days)?;
    let avg_std = stats::population_std(&avg);
    if avg_std == 0.0 {
        return Err(ProfileError::DegenerateAverage);
    }
    let daily_stds: Vec<f64> = days.iter().map(|d| stats::population_std(&d.da)).collect();
    let q = stats::percentile(&daily_stds, tail).expect("non-empty, tail checked");
    Ok(q / avg_std)
}

/// Per-quarter average of the ID-DA market deviation, using the ceiling
/// map from quarter to hour.
pub fn average_id_deviation_day(days: &[DayRecord]) -> Result<Vec<f64>, ProfileError> {
    let (_, quarters) = uniform_horizon(records(days))?;
    let n = days.len() as f64;
    Ok((0..quarters)
        .map(|q| days.iter().map(|d| d.id[q] - d.da[q / 4]).sum::<f64>() / n)
        .collect())
}

fn resolve_beta(days: &[DayRecord], mode: ScalingMode) -> Result<f64, ProfileError> {
    match mode {
        ScalingMode::Unscaled => Ok(1.0),
        ScalingMode::Manual { beta, .. } => {
            if beta <= 0.0 {
                return Err(ProfileError::NonpositiveBeta(beta));
            }
            Ok(beta)
        }
        ScalingMode::Nominal => beta_nominal_day(days),
        ScalingMode::Extreme { tail } => beta_extreme_day(days, tail),
    }
}

/// End-to-end single-day scenario: average, beta-scale, correct the ID
/// deviation to zero sum, and gamma-scale it onto the DA reference.
pub fn build_day_scenario(
    days: &[DayRecord],
    mode: ScalingMode,
) -> Result<DayProfile, ProfileError> {
    uniform_horizon(records(days))?;
    if days.len() < 2 && matches!(mode, ScalingMode::Nominal | ScalingMode::Extreme { .. }) {
        return Err(ProfileError::NotEnoughRecords {
            required: 2,
            got: days.len(),
            mode: mode.label(),
        });
    }

    let avg = average_da_day(days)?;
    let da_mean = stats::mean(&avg);
    let beta = resolve_beta(days, mode)?;
    let da = scale_profile(&avg, beta)?;

    let deviation = zero_mean_correct(&average_id_deviation_day(days)?);
    let da_quarter = replicate_quarters(&da);

    let gamma = match mode {
        ScalingMode::Unscaled => 1.0,
        ScalingMode::Manual { gamma, .. } => {
            if gamma <= 0.0 {
                return Err(ProfileError::NonpositiveBeta(gamma));
            }
            gamma
        }
        ScalingMode::Nominal | ScalingMode::Extreme { .. } => {
            let daily_id_stds: Vec<f64> =
                days.iter().map(|d| stats::population_std(&d.id)).collect();
            let target = match mode {
                ScalingMode::Nominal => stats::mean(&daily_id_stds),
                ScalingMode::Extreme { tail } => stats::percentile(&daily_id_stds, tail)
                    .map_err(|_| ProfileError::BadTailFraction(tail))?,
                _ => unreachable!(),
            };
            let scaled_dev: Vec<f64> = da_quarter.iter().map(|v| v - da_mean).collect();
            gamma_for_target_std(&scaled_dev, &deviation, target)?
        }
    };

    let id: Vec<f64> = da_quarter
        .iter()
        .zip(&deviation)
        .map(|(base, dev)| base + gamma * dev)
        .collect();

    Ok(DayProfile {
        da,
        id,
        deviation,
        scaling: ScalingSpec { mode, beta, gamma },
        da_mean,
    })
}
