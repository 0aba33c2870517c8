//! Parsing, validation, and calendar slicing of historical DA/ID price data.
//!
//! Input CSV format: `timestamp,price_eur_mwh`, ISO-8601 local market time,
//! hourly rows for the DA market and quarter-hourly rows for ID.
//!
//! DST policy: the spring-forward missing hour is filled by linear
//! interpolation of its neighbours and the fall-back duplicated hour is
//! averaged into one, so every day carries exactly 24 hourly / 96
//! quarter-hourly values. Both repairs are logged in the [`CalendarReport`].

use chrono::{Datelike, Duration, NaiveDate, NaiveDateTime, NaiveTime, Weekday};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::Read;
use thiserror::Error;

pub const HOURS_PER_DAY: usize = 24;
pub const QUARTERS_PER_DAY: usize = 96;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: malformed row: {message}")]
    MalformedRow { line: usize, message: String },
    #[error("missing timestamp {0} (beyond DST tolerance)")]
    Gap(NaiveDateTime),
    #[error("DA and ID series cover different date ranges: DA {da_start}..={da_end}, ID {id_start}..={id_end}")]
    MisalignedSeries {
        da_start: NaiveDate,
        da_end: NaiveDate,
        id_start: NaiveDate,
        id_end: NaiveDate,
    },
    #[error("no complete day of data in input")]
    NoCompleteDay,
    #[error("non-finite price at {0}")]
    NonFinitePrice(NaiveDateTime),
    #[error("no full Monday-to-Sunday week in series")]
    NoFullWeek,
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// One year (or any run of whole days) of aligned hourly DA and
/// quarter-hourly ID prices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PriceSeries {
    pub start_date: NaiveDate,
    /// Hourly DA prices, length `24 * n_days`.
    pub da: Vec<f64>,
    /// Quarter-hourly ID prices, length `96 * n_days`.
    pub id: Vec<f64>,
    pub n_days: usize,
}

impl PriceSeries {
    pub fn new(start_date: NaiveDate, da: Vec<f64>, id: Vec<f64>) -> Result<Self, IngestError> {
        assert!(!da.is_empty() && da.len().is_multiple_of(HOURS_PER_DAY), "da length must be 24*n");
        assert_eq!(da.len() * 4, id.len(), "id must hold 4 quarters per DA hour");
        let n_days = da.len() / HOURS_PER_DAY;
        for (i, &p) in da.iter().enumerate() {
            if !p.is_finite() {
                let ts = start_date.and_hms_opt(0, 0, 0).unwrap()
                    + Duration::hours(i as i64);
                return Err(IngestError::NonFinitePrice(ts));
            }
        }
        for (i, &p) in id.iter().enumerate() {
            if !p.is_finite() {
                let ts = start_date.and_hms_opt(0, 0, 0).unwrap()
                    + Duration::minutes(15 * i as i64);
                return Err(IngestError::NonFinitePrice(ts));
            }
        }
        Ok(Self { start_date, da, id, n_days })
    }

    pub fn end_date(&self) -> NaiveDate {
        self.start_date + Duration::days(self.n_days as i64 - 1)
    }
}

/// One calendar day: `day_index` is 1-based within the series,
/// `weekday` uses 0 = Monday.
#[derive(Debug, Clone, PartialEq)]
pub struct DayRecord {
    pub day_index: usize,
    pub date: NaiveDate,
    pub weekday: u8,
    pub da: Vec<f64>,
    pub id: Vec<f64>,
}

/// Seven consecutive DayRecords, Monday through Sunday.
#[derive(Debug, Clone, PartialEq)]
pub struct WeekRecord {
    pub week_index: usize,
    pub days: Vec<DayRecord>,
}

impl WeekRecord {
    /// Hourly prices of the whole week, Monday 00:00 first (168 values).
    pub fn da_flat(&self) -> Vec<f64> {
        self.days.iter().flat_map(|d| d.da.iter().copied()).collect()
    }

    /// Quarter-hourly prices of the whole week (672 values).
    pub fn id_flat(&self) -> Vec<f64> {
        self.days.iter().flat_map(|d| d.id.iter().copied()).collect()
    }
}

/// Record of every calendar repair applied during parsing.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CalendarReport {
    pub dst_filled: Vec<String>,
    pub duplicates_averaged: Vec<String>,
    pub notes: Vec<String>,
}

impl CalendarReport {
    pub fn is_clean(&self) -> bool {
        self.dst_filled.is_empty() && self.duplicates_averaged.is_empty()
    }
}

/// Optional sidecar manifest accompanying a price CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub market: String,
    pub year: i32,
    pub timezone: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Granularity {
    Hourly,
    QuarterHourly,
}

impl Granularity {
    fn step(self) -> Duration {
        match self {
            Granularity::Hourly => Duration::hours(1),
            Granularity::QuarterHourly => Duration::minutes(15),
        }
    }

    fn per_day(self) -> usize {
        match self {
            Granularity::Hourly => HOURS_PER_DAY,
            Granularity::QuarterHourly => QUARTERS_PER_DAY,
        }
    }
}

fn parse_timestamp(s: &str) -> Option<NaiveDateTime> {
    for fmt in ["%Y-%m-%dT%H:%M:%S", "%Y-%m-%dT%H:%M", "%Y-%m-%d %H:%M:%S", "%Y-%m-%d %H:%M"] {
        if let Ok(ts) = NaiveDateTime::parse_from_str(s, fmt) {
            return Some(ts);
        }
    }
    None
}

/// A missing slot is tolerated only if it falls in the spring-forward hour:
/// 02:00..03:00 local time on a Sunday in late March.
fn is_spring_forward_slot(ts: NaiveDateTime) -> bool {
    ts.date().weekday() == Weekday::Sun
        && ts.date().month() == 3
        && ts.date().day() >= 25
        && ts.time() >= NaiveTime::from_hms_opt(2, 0, 0).unwrap()
        && ts.time() < NaiveTime::from_hms_opt(3, 0, 0).unwrap()
}

fn is_fall_back_slot(ts: NaiveDateTime) -> bool {
    ts.date().weekday() == Weekday::Sun
        && ts.date().month() == 10
        && ts.date().day() >= 25
        && ts.time() >= NaiveTime::from_hms_opt(2, 0, 0).unwrap()
        && ts.time() < NaiveTime::from_hms_opt(3, 0, 0).unwrap()
}

struct ParsedColumn {
    start_date: NaiveDate,
    values: Vec<f64>,
    n_days: usize,
}

fn read_rows<R: Read>(source: R) -> Result<BTreeMap<NaiveDateTime, Vec<f64>>, IngestError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(source);
    let mut rows: BTreeMap<NaiveDateTime, Vec<f64>> = BTreeMap::new();
    for (idx, record) in reader.records().enumerate() {
        let line = idx + 2; // header is line 1
        let record = record.map_err(|e| IngestError::MalformedRow {
            line,
            message: e.to_string(),
        })?;
        if record.len() < 2 {
            return Err(IngestError::MalformedRow {
                line,
                message: format!("expected 2 fields, got {}", record.len()),
            });
        }
        let ts = parse_timestamp(record[0].trim()).ok_or_else(|| IngestError::MalformedRow {
            line,
            message: format!("unparseable timestamp {:?}", &record[0]),
        })?;
        let price: f64 = record[1].trim().parse().map_err(|_| IngestError::MalformedRow {
            line,
            message: format!("unparseable price {:?}", &record[1]),
        })?;
        if !price.is_finite() {
            return Err(IngestError::NonFinitePrice(ts));
        }
        rows.entry(ts).or_default().push(price);
    }
    Ok(rows)
}

fn assemble_column<R: Read>(
    source: R,
    gran: Granularity,
    report: &mut CalendarReport,
) -> Result<ParsedColumn, IngestError> {
    let rows = read_rows(source)?;
    if rows.is_empty() {
        return Err(IngestError::NoCompleteDay);
    }

    let midnight = NaiveTime::from_hms_opt(0, 0, 0).unwrap();
    let first = *rows.keys().next().unwrap();
    let last = *rows.keys().next_back().unwrap();

    // Trim to the whole days present.
    let start_date = if first.time() == midnight { first.date() } else { first.date().succ_opt().unwrap() };
    let last_slot = midnight + gran.step() * (gran.per_day() as i32 - 1);
    let end_date = if last.time() >= last_slot { last.date() } else { last.date().pred_opt().unwrap() };
    if end_date < start_date {
        return Err(IngestError::NoCompleteDay);
    }
    let n_days = (end_date - start_date).num_days() as usize + 1;

    let mut values = Vec::with_capacity(n_days * gran.per_day());
    let mut pending_gaps: Vec<(usize, NaiveDateTime)> = Vec::new();
    let mut ts = start_date.and_time(midnight);
    for slot in 0..n_days * gran.per_day() {
        match rows.get(&ts) {
            Some(prices) if prices.len() == 1 => values.push(prices[0]),
            Some(prices) => {
                // Duplicated timestamp: DST fall-back repetition, averaged.
                let avg = prices.iter().sum::<f64>() / prices.len() as f64;
                values.push(avg);
                let entry = format!("{ts}: averaged {} duplicate rows", prices.len());
                if is_fall_back_slot(ts) {
                    report.dst_filled.push(format!("{entry} (fall-back)"));
                } else {
                    report.duplicates_averaged.push(entry);
                }
            }
            None => {
                if is_spring_forward_slot(ts) {
                    pending_gaps.push((slot, ts));
                    values.push(f64::NAN); // patched below
                } else {
                    return Err(IngestError::Gap(ts));
                }
            }
        }
        ts += gran.step();
    }

    for (slot, gap_ts) in pending_gaps {
        let before = values[..slot].iter().rev().find(|v| v.is_finite()).copied();
        let after = values[slot + 1..].iter().find(|v| v.is_finite()).copied();
        let filled = match (before, after) {
            (Some(a), Some(b)) => (a + b) / 2.0,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(IngestError::Gap(gap_ts)),
        };
        values[slot] = filled;
        report
            .dst_filled
            .push(format!("{gap_ts}: spring-forward gap filled by interpolation ({filled:.2})"));
    }

    Ok(ParsedColumn { start_date, values, n_days })
}

#[derive(Debug)]
pub struct ParseOutcome {
    pub series: PriceSeries,
    pub report: CalendarReport,
}

/// Parse aligned DA (hourly) and ID (quarter-hourly) CSV streams into a
/// [`PriceSeries`] spanning exactly the whole days present in both.
pub fn parse_price_csv<R1: Read, R2: Read>(
    da_source: R1,
    id_source: R2,
) -> Result<ParseOutcome, IngestError> {
    let mut report = CalendarReport::default();
    let da = assemble_column(da_source, Granularity::Hourly, &mut report)?;
    let id = assemble_column(id_source, Granularity::QuarterHourly, &mut report)?;
    if da.start_date != id.start_date || da.n_days != id.n_days {
        return Err(IngestError::MisalignedSeries {
            da_start: da.start_date,
            da_end: da.start_date + Duration::days(da.n_days as i64 - 1),
            id_start: id.start_date,
            id_end: id.start_date + Duration::days(id.n_days as i64 - 1),
        });
    }
    let series = PriceSeries::new(da.start_date, da.values, id.values)?;
    Ok(ParseOutcome { series, report })
}

/// Serialize a series back to the two input CSVs (prices at cent resolution).
pub fn write_price_csv<W1: std::io::Write, W2: std::io::Write>(
    series: &PriceSeries,
    mut da_sink: W1,
    mut id_sink: W2,
) -> Result<(), IngestError> {
    let start = series.start_date.and_hms_opt(0, 0, 0).unwrap();
    writeln!(da_sink, "timestamp,price_eur_mwh")?;
    for (i, p) in series.da.iter().enumerate() {
        let ts = start + Duration::hours(i as i64);
        writeln!(da_sink, "{},{:.2}", ts.format("%Y-%m-%dT%H:%M:%S"), p)?;
    }
    writeln!(id_sink, "timestamp,price_eur_mwh")?;
    for (i, p) in series.id.iter().enumerate() {
        let ts = start + Duration::minutes(15 * i as i64);
        writeln!(id_sink, "{},{:.2}", ts.format("%Y-%m-%dT%H:%M:%S"), p)?;
    }
    Ok(())
}

fn weekday_index(date: NaiveDate) -> u8 {
    date.weekday().num_days_from_monday() as u8
}

/// Split a series into its daily records.
pub fn slice_days(series: &PriceSeries) -> Vec<DayRecord> {
    (0..series.n_days)
        .map(|i| {
            let date = series.start_date + Duration::days(i as i64);
            DayRecord {
                day_index: i + 1,
                date,
                weekday: weekday_index(date),
                da: series.da[i * HOURS_PER_DAY..(i + 1) * HOURS_PER_DAY].to_vec(),
                id: series.id[i * QUARTERS_PER_DAY..(i + 1) * QUARTERS_PER_DAY].to_vec(),
            }
        })
        .collect()
}

/// Split into complete Monday-to-Sunday weeks; leading days before the
/// first Monday and any trailing partial week are dropped.
pub fn slice_weeks(series: &PriceSeries) -> Result<Vec<WeekRecord>, IngestError> {
    let days = slice_days(series);
    let first_monday = days
        .iter()
        .position(|d| d.weekday == 0)
        .ok_or(IngestError::NoFullWeek)?;
    let full_weeks = (days.len() - first_monday) / 7;
    if full_weeks == 0 {
        return Err(IngestError::NoFullWeek);
    }
    Ok((0..full_weeks)
        .map(|w| WeekRecord {
            week_index: w + 1,
            days: days[first_monday + 7 * w..first_monday + 7 * (w + 1)].to_vec(),
        })
        .collect())
}
