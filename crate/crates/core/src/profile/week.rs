//! Single-week (168 h / 672 quarter-hour) profile construction.
//!
//! The weekly cumulative ID-DA deviation is not zero-mean, so the offset
//! correction is applied separately for each of the seven days (daily
//! closure) instead of once over the whole week.

use super::{
    gamma_for_target_std, profile_stats, replicate_quarters, scale_profile, uniform_horizon,
    zero_mean_correct, ProfileError, ScalingMode, ScalingSpec,
};
use crate::ingest::WeekRecord;
use crate::stats::{self, StatsSummary};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeekProfile {
    pub da: Vec<f64>,
    pub id: Vec<f64>,
    /// Corrected deviation; each weekday block of quarters sums to zero.
    pub deviation: Vec<f64>,
    pub scaling: ScalingSpec,
    pub da_mean: f64,
}

impl WeekProfile {
    pub fn stats(&self) -> (StatsSummary, StatsSummary) {
        profile_stats(&self.da, &self.id)
    }

    /// Hours per contained day (24 for real data, smaller in toy fixtures).
    pub fn day_hours(&self) -> usize {
        self.da.len() / 7
    }
}

/// Which statistic the scaling factors should reproduce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeekTarget {
    Nominal,
    Extreme { tail: f64 },
}

fn flat_weeks(weeks: &[WeekRecord]) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>), ProfileError> {
    if weeks.is_empty() {
        return Err(ProfileError::EmptyInput);
    }
    let da: Vec<Vec<f64>> = weeks.iter().map(|w| w.da_flat()).collect();
    let id: Vec<Vec<f64>> = weeks.iter().map(|w| w.id_flat()).collect();
    uniform_horizon(da.iter().map(|d| d.as_slice()).zip(id.iter().map(|i| i.as_slice())))?;
    if weeks.iter().any(|w| w.days.len() != 7) {
        return Err(ProfileError::HorizonMismatch);
    }
    Ok((da, id))
}

/// Per-slot average of the hourly DA prices over all weeks.
pub fn average_da_week(weeks: &[WeekRecord]) -> Result<Vec<f64>, ProfileError> {
    let (da, _) = flat_weeks(weeks)?;
    let slots = da[0].len();
    let n = da.len() as f64;
    Ok((0..slots).map(|s| da.iter().map(|w| w[s]).sum::<f64>() / n).collect())
}

/// Weekly scaling factor over the 168-point horizon: explicit per-week
/// std ratio (Nominal) or percentile of weekly stds over the averaged
/// profile's std (Extreme).
pub fn beta_week(weeks: &[WeekRecord], target: WeekTarget) -> Result<f64, ProfileError> {
    let (da, _) = flat_weeks(weeks)?;
    let avg = average_da_week(weeks)?;
    let avg_mean = stats::mean(&avg);
    let denom: f64 = avg.iter().map(|v| (v - avg_mean) * (v - avg_mean)).sum();
    if denom == 0.0 {
        return Err(ProfileError::DegenerateAverage);
    }
    match target {
        WeekTarget::Nominal => {
            let w = da.len() as f64;
            let sum: f64 = da
                .iter()
                .map(|week| {
                    let m = stats::mean(week);
                    let num: f64 = week.iter().map(|v| (v - m) * (v - m)).sum();
                    (num / denom).sqrt()
                })
                .sum();
            Ok(sum / w)
        }
        WeekTarget::Extreme { tail } => {
            if !(tail > 0.0 && tail < 1.0) {
                return Err(ProfileError::BadTailFraction(tail));
            }
            let weekly_stds: Vec<f64> = da.iter().map(|w| stats::population_std(w)).collect();
            let q = stats::percentile(&weekly_stds, tail)
                .map_err(|_| ProfileError::BadTailFraction(tail))?;
            Ok(q / (denom / avg.len() as f64).sqrt())
        }
    }
}

/// Average ID-DA deviation per week slot with per-day closure applied:
/// every weekday's block of quarters sums to zero.
pub fn id_deviation_week(weeks: &[WeekRecord]) -> Result<Vec<f64>, ProfileError> {
    let (da, id) = flat_weeks(weeks)?;
    let quarters = id[0].len();
    let n = weeks.len() as f64;
    let raw: Vec<f64> = (0..quarters)
        .map(|q| {
            da.iter()
                .zip(&id)
                .map(|(week_da, week_id)| week_id[q] - week_da[q / 4])
                .sum::<f64>()
                / n
        })
        .collect();
    let per_day = quarters / 7;
    let mut corrected = Vec::with_capacity(quarters);
    for block in raw.chunks(per_day) {
        corrected.extend(zero_mean_correct(block));
    }
    Ok(corrected)
}

/// Solve the weekly gamma equation for a fixed beta.
pub fn gamma_week(
    weeks: &[WeekRecord],
    beta: f64,
    target: WeekTarget,
) -> Result<f64, ProfileError> {
    let (_, id) = flat_weeks(weeks)?;
    let avg = average_da_week(weeks)?;
    let avg_mean = stats::mean(&avg);
    let scaled = scale_profile(&avg, beta)?;
    let scaled_dev: Vec<f64> = replicate_quarters(&scaled).iter().map(|v| v - avg_mean).collect();
    let deviation = id_deviation_week(weeks)?;
    let weekly_id_stds: Vec<f64> = id.iter().map(|w| stats::population_std(w)).collect();
    let target_std = match target {
        WeekTarget::Nominal => stats::mean(&weekly_id_stds),
        WeekTarget::Extreme { tail } => stats::percentile(&weekly_id_stds, tail)
            .map_err(|_| ProfileError::BadTailFraction(tail))?,
    };
    gamma_for_target_std(&scaled_dev, &deviation, target_std)
}

/// End-to-end single-week scenario with per-day ID closure.
pub fn build_week_scenario(
    weeks: &[WeekRecord],
    mode: ScalingMode,
) -> Result<WeekProfile, ProfileError> {
    flat_weeks(weeks)?;
    if weeks.len() < 2 && matches!(mode, ScalingMode::Extreme { .. }) {
        return Err(ProfileError::NotEnoughRecords {
            required: 2,
            got: weeks.len(),
            mode: mode.label(),
        });
    }

    let avg = average_da_week(weeks)?;
    let da_mean = stats::mean(&avg);
    let beta = match mode {
        ScalingMode::Unscaled => 1.0,
        ScalingMode::Manual { beta, .. } => {
            if beta <= 0.0 {
                return Err(ProfileError::NonpositiveBeta(beta));
            }
            beta
        }
        ScalingMode::Nominal => beta_week(weeks, WeekTarget::Nominal)?,
        ScalingMode::Extreme { tail } => beta_week(weeks, WeekTarget::Extreme { tail })?,
    };
    let da = scale_profile(&avg, beta)?;
    let deviation = id_deviation_week(weeks)?;

    let gamma = match mode {
        ScalingMode::Unscaled => 1.0,
        ScalingMode::Manual { gamma, .. } => {
            if gamma <= 0.0 {
                return Err(ProfileError::NonpositiveBeta(gamma));
            }
            gamma
        }
        ScalingMode::Nominal => gamma_week(weeks, beta, WeekTarget::Nominal)?,
        ScalingMode::Extreme { tail } => gamma_week(weeks, beta, WeekTarget::Extreme { tail })?,
    };

    let id: Vec<f64> = replicate_quarters(&da)
        .iter()
        .zip(&deviation)
        .map(|(base, dev)| base + gamma * dev)
        .collect();

    Ok(WeekProfile {
        da,
        id,
        deviation,
        scaling: ScalingSpec { mode, beta, gamma },
        da_mean,
    })
}
