//! Construction of representative day-ahead (DA) and intraday (ID)
//! electricity-price scenarios from historical spot-market data, with
//! clustering baselines and an LP-based demand-response scheduling
//! benchmark.

pub mod clustering;
pub mod export;
pub mod ingest;
pub mod lp;
pub mod matching;
pub mod profile;
pub mod scheduling;
pub mod stats;
pub mod synth;

pub use clustering::{Algorithm, ClusterSet, Criterion, FeatureMatrix};
pub use ingest::{DayRecord, PriceSeries, WeekRecord};
pub use matching::{MatchResult, MatchScope};
pub use profile::{DayProfile, ScalingMode, ScalingSpec, WeekProfile};
