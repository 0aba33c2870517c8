//! Plain-text artifact emission: CSV tables and JSON bundles. Every
//! writer is a pure function of its inputs, so re-running a pipeline on
//! unchanged data produces byte-identical files.

use crate::clustering::ClusterSet;
use crate::ingest::DayRecord;
use crate::matching::MatchResult;
use crate::profile::{DayProfile, ScalingSpec, WeekProfile};
use crate::scheduling::{BenchmarkReport, ScheduleResult};
use crate::stats::Histogram;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Content hash over the raw input bytes, recorded in every JSON bundle
/// so artifact provenance is checkable.
pub fn fingerprint(inputs: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for chunk in inputs {
        hasher.update(chunk);
    }
    format!("{:x}", hasher.finalize())
}

fn table(header: &str, rows: impl Iterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn day_da_csv(profile: &DayProfile) -> String {
    table(
        "hour,price_eur_mwh",
        profile.da.iter().enumerate().map(|(h, p)| format!("{h},{p}")),
    )
}

pub fn day_id_csv(profile: &DayProfile) -> String {
    table(
        "quarter,price_eur_mwh",
        profile.id.iter().enumerate().map(|(q, p)| format!("{q},{p}")),
    )
}

pub fn week_da_csv(profile: &WeekProfile) -> String {
    table(
        "hour_of_week,price",
        profile.da.iter().enumerate().map(|(h, p)| format!("{h},{p}")),
    )
}

pub fn week_id_csv(profile: &WeekProfile) -> String {
    table(
        "quarter_of_week,price",
        profile.id.iter().enumerate().map(|(q, p)| format!("{q},{p}")),
    )
}

const WEEKDAYS: [&str; 7] = [
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
];

#[derive(Serialize)]
struct ProfileBundle<'a> {
    horizon: &'static str,
    #[serde(flatten)]
    scaling: &'a ScalingSpec,
    da: &'a [f64],
    id: &'a [f64],
    #[serde(skip_serializing_if = "Option::is_none")]
    weekday_labels: Option<Vec<&'static str>>,
    source_fingerprint: &'a str,
}

pub fn day_profile_json(profile: &DayProfile, source_fingerprint: &str) -> String {
    let bundle = ProfileBundle {
        horizon: "day",
        scaling: &profile.scaling,
        da: &profile.da,
        id: &profile.id,
        weekday_labels: None,
        source_fingerprint,
    };
    serde_json::to_string_pretty(&bundle).expect("bundle serializes")
}

pub fn week_profile_json(profile: &WeekProfile, source_fingerprint: &str) -> String {
    let bundle = ProfileBundle {
        horizon: "week",
        scaling: &profile.scaling,
        da: &profile.da,
        id: &profile.id,
        weekday_labels: Some(WEEKDAYS.to_vec()),
        source_fingerprint,
    };
    serde_json::to_string_pretty(&bundle).expect("bundle serializes")
}

pub fn histogram_csv(h: &Histogram) -> String {
    table(
        "bin_lo,bin_hi,count",
        h.counts
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{},{},{c}", h.bin_edges[i], h.bin_edges[i + 1])),
    )
}

pub fn match_csv(result: &MatchResult, date: &str) -> String {
    table(
        "index,date,total_mad,da_mad,id_mad",
        std::iter::once(format!(
            "{},{date},{},{},{}",
            result.index, result.total_mad, result.da_mad, result.id_mad
        )),
    )
}

pub fn cluster_assignment_csv(cs: &ClusterSet, days: &[DayRecord]) -> String {
    table(
        "date,cluster",
        days.iter()
            .zip(&cs.assignment)
            .map(|(d, c)| format!("{},{c}", d.date)),
    )
}

pub fn cluster_weights_csv(cs: &ClusterSet) -> String {
    table(
        "cluster,weight",
        cs.weights.iter().enumerate().map(|(c, w)| format!("{c},{w}")),
    )
}

pub fn benchmark_csv(report: &BenchmarkReport) -> String {
    table(
        "scenario,generation,k,wdc_eur,dev_percent",
        report.rows.iter().map(|r| {
            format!("{},{},{},{},{}", r.scenario, r.generation, r.k, r.wdc_eur, r.dev_percent)
        }),
    )
}

pub fn schedule_csv(result: &ScheduleResult) -> String {
    table(
        "t,p_da_mw,p_id_mw,m_tph,s_t",
        (0..result.p_da.len()).map(|t| {
            format!(
                "{t},{},{},{},{}",
                result.p_da[t], result.p_id[t], result.m[t], result.s[t]
            )
        }),
    )
}
