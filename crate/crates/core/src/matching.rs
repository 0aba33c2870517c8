//! Best-fit retrieval of the historical day or week that most closely
//! matches a constructed scenario, by mean absolute deviation over the
//! DA and ID vectors jointly (quarter terms weighted by 1/4).

use crate::ingest::{DayRecord, WeekRecord};
use crate::profile::{DayProfile, WeekProfile};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MatchError {
    #[error("empty candidate set")]
    EmptyInput,
    #[error("profile horizon does not match the candidate records")]
    HorizonMismatch,
}

/// Which markets enter the fitting objective. Extreme profiles often fit
/// poorly jointly; DA-only / ID-only fitting is offered for those.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchScope {
    Joint,
    DaOnly,
    IdOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchResult {
    /// 1-based day or week index of the best fit.
    pub index: usize,
    pub total_mad: f64,
    pub da_mad: f64,
    pub id_mad: f64,
}

fn abs_dev(profile: &[f64], candidate: &[f64]) -> f64 {
    profile.iter().zip(candidate).map(|(p, c)| (p - c).abs()).sum()
}

fn best_fit(
    candidates: impl Iterator<Item = (usize, f64, f64)>,
    scope: MatchScope,
) -> Option<MatchResult> {
    let mut best: Option<MatchResult> = None;
    for (index, da_mad, id_mad) in candidates {
        let total = match scope {
            MatchScope::Joint => da_mad + id_mad,
            MatchScope::DaOnly => da_mad,
            MatchScope::IdOnly => id_mad,
        };
        // ties broken by smallest index; iteration is in index order
        if best.as_ref().is_none_or(|b| total < b.total_mad) {
            best = Some(MatchResult { index, total_mad: total, da_mad, id_mad });
        }
    }
    best
}

/// Historical day minimizing the (scoped) mean absolute deviation against
/// the constructed profile.
pub fn best_fit_day(
    days: &[DayRecord],
    profile: &DayProfile,
    scope: MatchScope,
) -> Result<MatchResult, MatchError> {
    if days.is_empty() {
        return Err(MatchError::EmptyInput);
    }
    if days
        .iter()
        .any(|d| d.da.len() != profile.da.len() || d.id.len() != profile.id.len())
    {
        return Err(MatchError::HorizonMismatch);
    }
    Ok(best_fit(
        days.iter().map(|d| {
            (
                d.day_index,
                abs_dev(&profile.da, &d.da),
                abs_dev(&profile.id, &d.id) / 4.0,
            )
        }),
        scope,
    )
    .expect("non-empty"))
}

/// Historical week minimizing the (scoped) mean absolute deviation.
pub fn best_fit_week(
    weeks: &[WeekRecord],
    profile: &WeekProfile,
    scope: MatchScope,
) -> Result<MatchResult, MatchError> {
    if weeks.is_empty() {
        return Err(MatchError::EmptyInput);
    }
    let flats: Vec<(usize, Vec<f64>, Vec<f64>)> = weeks
        .iter()
        .map(|w| (w.week_index, w.da_flat(), w.id_flat()))
        .collect();
    if flats
        .iter()
        .any(|(_, da, id)| da.len() != profile.da.len() || id.len() != profile.id.len())
    {
        return Err(MatchError::HorizonMismatch);
    }
    Ok(best_fit(
        flats.iter().map(|(idx, da, id)| {
            (
                *idx,
                abs_dev(&profile.da, da),
                abs_dev(&profile.id, id) / 4.0,
            )
        }),
        scope,
    )
    .expect("non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::DayRecord;
    use crate::profile::{build_day_scenario, replicate_quarters, ScalingMode};
    use chrono::{Datelike, NaiveDate};

    fn day(index: usize, da: Vec<f64>, id: Vec<f64>) -> DayRecord {
        let date = NaiveDate::from_ymd_opt(2023, 3, 6).unwrap()
            + chrono::Duration::days(index as i64 - 1);
        DayRecord {
            day_index: index,
            date,
            weekday: date.weekday().num_days_from_monday() as u8,
            da,
            id,
        }
    }

    fn profile_from(da: Vec<f64>, id: Vec<f64>) -> DayProfile {
        let mean = crate::stats::mean(&da);
        DayProfile {
            deviation: vec![0.0; id.len()],
            da,
            id,
            scaling: crate::profile::ScalingSpec {
                mode: ScalingMode::Unscaled,
                beta: 1.0,
                gamma: 1.0,
            },
            da_mean: mean,
        }
    }

    #[test]
    fn exact_member_has_zero_mad() {
        let da = vec![10.0, 20.0, 30.0, 40.0];
        let id = replicate_quarters(&da);
        let days = vec![
            day(1, vec![0.0; 4], vec![0.0; 16]),
            day(2, da.clone(), id.clone()),
            day(3, vec![99.0; 4], vec![99.0; 16]),
        ];
        let result = best_fit_day(&days, &profile_from(da, id), MatchScope::Joint).unwrap();
        assert_eq!(result.index, 2);
        assert_eq!(result.total_mad, 0.0);
    }

    #[test]
    fn joint_picks_by_summed_objective() {
        // day 1 matches DA exactly but misses ID by 2 per quarter (id_mad 8);
        // day 2 matches ID exactly but misses DA by 1 per hour (da_mad 4).
        let da = vec![10.0, 20.0, 30.0, 40.0];
        let id = replicate_quarters(&da);
        let id_off: Vec<f64> = id.iter().map(|v| v + 2.0).collect();
        let da_off: Vec<f64> = da.iter().map(|v| v + 1.0).collect();
        let days = vec![day(1, da.clone(), id_off), day(2, da_off, id.clone())];
        let profile = profile_from(da, id);
        let joint = best_fit_day(&days, &profile, MatchScope::Joint).unwrap();
        assert_eq!(joint.index, 2);
        assert!((joint.total_mad - 4.0).abs() < 1e-12);
        // scoped objectives flip the winner
        assert_eq!(best_fit_day(&days, &profile, MatchScope::DaOnly).unwrap().index, 1);
        assert_eq!(best_fit_day(&days, &profile, MatchScope::IdOnly).unwrap().index, 2);
    }

    #[test]
    fn joint_equals_da_plus_id_at_same_index() {
        let days: Vec<DayRecord> = (1..=4)
            .map(|i| {
                let da: Vec<f64> = (0..4).map(|k| (i * k) as f64).collect();
                let id: Vec<f64> =
                    replicate_quarters(&da).iter().map(|v| v + i as f64 * 0.5).collect();
                day(i, da, id)
            })
            .collect();
        let profile = build_day_scenario(&days, ScalingMode::Unscaled).unwrap();
        let joint = best_fit_day(&days, &profile, MatchScope::Joint).unwrap();
        let target = &days[joint.index - 1];
        let da_mad = abs_dev(&profile.da, &target.da);
        let id_mad = abs_dev(&profile.id, &target.id) / 4.0;
        assert!((joint.total_mad - (da_mad + id_mad)).abs() < 1e-12);
        // exhaustive argmin check
        for d in &days {
            let other = abs_dev(&profile.da, &d.da) + abs_dev(&profile.id, &d.id) / 4.0;
            assert!(joint.total_mad <= other + 1e-12);
        }
    }

    #[test]
    fn argmin_invariant_under_constant_shift() {
        let days: Vec<DayRecord> = (1..=5)
            .map(|i| {
                let da: Vec<f64> = (0..4).map(|k| ((i + k) % 3) as f64 * 7.0).collect();
                let id = replicate_quarters(&da);
                day(i, da, id)
            })
            .collect();
        let profile = build_day_scenario(&days, ScalingMode::Unscaled).unwrap();
        let base = best_fit_day(&days, &profile, MatchScope::Joint).unwrap();

        let shift = 123.0;
        let shifted_days: Vec<DayRecord> = days
            .iter()
            .map(|d| {
                let mut d = d.clone();
                d.da.iter_mut().for_each(|v| *v += shift);
                d.id.iter_mut().for_each(|v| *v += shift);
                d
            })
            .collect();
        let mut shifted_profile = profile.clone();
        shifted_profile.da.iter_mut().for_each(|v| *v += shift);
        shifted_profile.id.iter_mut().for_each(|v| *v += shift);
        let moved = best_fit_day(&shifted_days, &shifted_profile, MatchScope::Joint).unwrap();
        assert_eq!(base.index, moved.index);
    }

    #[test]
    fn single_week_is_always_best() {
        use crate::ingest::WeekRecord;
        let days: Vec<DayRecord> = (0..7)
            .map(|d| {
                let da = vec![d as f64, 10.0 - d as f64];
                let id = replicate_quarters(&da);
                day(d + 1, da, id)
            })
            .collect();
        let week = WeekRecord { week_index: 1, days };
        let profile = crate::profile::build_week_scenario(
            std::slice::from_ref(&week),
            ScalingMode::Unscaled,
        )
        .unwrap();
        let result = best_fit_week(&[week], &profile, MatchScope::Joint).unwrap();
        assert_eq!(result.index, 1);
        assert!(result.total_mad < 1e-9);
    }

    #[test]
    fn empty_input_is_error() {
        let profile = profile_from(vec![1.0; 4], vec![1.0; 16]);
        assert_eq!(best_fit_day(&[], &profile, MatchScope::Joint), Err(MatchError::EmptyInput));
    }
}
