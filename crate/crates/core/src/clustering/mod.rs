//! Baseline scenario generation by clustering daily price features.
//!
//! Three criteria span the feature space: (a) daily DA mean, (b) daily DA
//! mean and std, equally weighted, (c) daily DA mean and daily std of the
//! ID-DA deviation. Columns are z-normalized so "equally weighted" holds
//! in Euclidean distance. All algorithms are deterministic: seeding,
//! iteration order, and tie-breaks are fixed.

mod elbow;
mod hierarchical;
mod kmeans;
mod kmedoids;

pub use elbow::{elbow_k, kneedle_index};
pub use hierarchical::hierarchical;
pub use kmeans::kmeans;
pub use kmedoids::kmedoids;

use crate::ingest::DayRecord;
use crate::profile::{DayProfile, ScalingMode, ScalingSpec};
use crate::stats;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ClusterError {
    #[error("empty input")]
    EmptyInput,
    #[error("cluster count k={k} must satisfy 1 <= k <= {n}")]
    BadK { k: usize, n: usize },
    #[error("k_max must be >= 2, got {0}")]
    BadKMax(usize),
}

/// Clustering criterion selecting the feature columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    /// Daily DA mean.
    A,
    /// Daily DA mean and daily DA std.
    B,
    /// Daily DA mean and daily std of the ID-DA deviation.
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Representative {
    Centroid,
    Medoid,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ColumnNorm {
    pub shift: f64,
    pub scale: f64,
}

/// Day-by-feature matrix after per-column z-normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    pub rows: Vec<Vec<f64>>,
    pub normalization: Vec<ColumnNorm>,
    pub criterion: Criterion,
}

impl FeatureMatrix {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Cluster assignment with weights and the representative rule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterSet {
    pub k: usize,
    /// Cluster id per input row.
    pub assignment: Vec<usize>,
    /// Member-count fractions, summing to 1.
    pub weights: Vec<f64>,
    pub representative: Representative,
    /// Row index of each cluster's medoid (medoid representatives only).
    pub medoid_indices: Option<Vec<usize>>,
}

impl ClusterSet {
    pub fn members(&self, cluster: usize) -> Vec<usize> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == cluster)
            .map(|(i, _)| i)
            .collect()
    }
}

pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    squared_distance(a, b).sqrt()
}

pub(crate) fn centroid_of(rows: &[Vec<f64>], members: &[usize]) -> Vec<f64> {
    let dim = rows[members[0]].len();
    let mut c = vec![0.0; dim];
    for &m in members {
        for (ci, v) in c.iter_mut().zip(&rows[m]) {
            *ci += v;
        }
    }
    for ci in c.iter_mut() {
        *ci /= members.len() as f64;
    }
    c
}

/// Member row minimizing the summed in-cluster distance; ties by index.
pub(crate) fn medoid_of(rows: &[Vec<f64>], members: &[usize]) -> usize {
    let mut best = members[0];
    let mut best_cost = f64::INFINITY;
    for &candidate in members {
        let cost: f64 = members.iter().map(|&m| distance(&rows[candidate], &rows[m])).sum();
        if cost < best_cost {
            best_cost = cost;
            best = candidate;
        }
    }
    best
}

pub(crate) fn weights_from_assignment(assignment: &[usize], k: usize) -> Vec<f64> {
    let n = assignment.len() as f64;
    let mut counts = vec![0usize; k];
    for &c in assignment {
        counts[c] += 1;
    }
    counts.iter().map(|&c| c as f64 / n).collect()
}

/// Raw per-day features for the chosen criterion, then per-column
/// z-normalization (constant columns are shifted to zero and left there).
pub fn extract_features(
    days: &[DayRecord],
    criterion: Criterion,
) -> Result<FeatureMatrix, ClusterError> {
    if days.is_empty() {
        return Err(ClusterError::EmptyInput);
    }
    let raw: Vec<Vec<f64>> = days
        .iter()
        .map(|d| {
            let (da_mean, da_std) = stats::moments(&d.da).expect("day is non-empty");
            match criterion {
                Criterion::A => vec![da_mean],
                Criterion::B => vec![da_mean, da_std],
                Criterion::C => {
                    let dev: Vec<f64> =
                        d.id.iter().enumerate().map(|(q, v)| v - d.da[q / 4]).collect();
                    vec![da_mean, stats::population_std(&dev)]
                }
            }
        })
        .collect();

    let dim = raw[0].len();
    let mut normalization = Vec::with_capacity(dim);
    let mut rows = vec![vec![0.0; dim]; raw.len()];
    for col in 0..dim {
        let column: Vec<f64> = raw.iter().map(|r| r[col]).collect();
        let (mean, std) = stats::moments(&column).expect("non-empty");
        let scale = if std > 0.0 { std } else { 1.0 };
        normalization.push(ColumnNorm { shift: mean, scale });
        for (row, r) in rows.iter_mut().zip(&raw) {
            row[col] = (r[col] - mean) / scale;
        }
    }
    Ok(FeatureMatrix { rows, normalization, criterion })
}

/// Per-cluster representative day profiles with their weights. Centroid
/// representatives are elementwise means of the member days; medoid
/// representatives are the medoid day's raw prices. No scaling is
/// applied: clustering baselines are unscaled by construction.
pub fn cluster_scenarios(cs: &ClusterSet, days: &[DayRecord]) -> Vec<(DayProfile, f64)> {
    assert_eq!(cs.assignment.len(), days.len());
    (0..cs.k)
        .map(|cluster| {
            let members = cs.members(cluster);
            let (da, id) = match cs.representative {
                Representative::Medoid => {
                    let m = cs
                        .medoid_indices
                        .as_ref()
                        .map(|ids| ids[cluster])
                        .expect("medoid representative requires medoid indices");
                    (days[m].da.clone(), days[m].id.clone())
                }
                Representative::Centroid => {
                    let n = members.len() as f64;
                    let da = (0..days[0].da.len())
                        .map(|k| members.iter().map(|&m| days[m].da[k]).sum::<f64>() / n)
                        .collect();
                    let id = (0..days[0].id.len())
                        .map(|q| members.iter().map(|&m| days[m].id[q]).sum::<f64>() / n)
                        .collect();
                    (da, id)
                }
            };
            let da_mean = stats::mean(&da);
            let deviation: Vec<f64> = id.iter().enumerate().map(|(q, v)| v - da[q / 4]).collect();
            let profile = DayProfile {
                da,
                id,
                deviation,
                scaling: ScalingSpec { mode: ScalingMode::Unscaled, beta: 1.0, gamma: 1.0 },
                da_mean,
            };
            (profile, cs.weights[cluster])
        })
        .collect()
}

/// Total within-cluster sum of squared distances to the member centroids.
pub fn wcss(features: &FeatureMatrix, cs: &ClusterSet) -> f64 {
    (0..cs.k)
        .map(|cluster| {
            let members = cs.members(cluster);
            if members.is_empty() {
                return 0.0;
            }
            let c = centroid_of(&features.rows, &members);
            members.iter().map(|&m| squared_distance(&features.rows[m], &c)).sum::<f64>()
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Kmeans,
    Kmedoids,
    HierarchicalM,
    HierarchicalC,
}

impl Algorithm {
    pub fn run(&self, features: &FeatureMatrix, k: usize) -> Result<ClusterSet, ClusterError> {
        match self {
            Algorithm::Kmeans => kmeans(features, k),
            Algorithm::Kmedoids => kmedoids(features, k),
            Algorithm::HierarchicalM => hierarchical(features, k, Representative::Medoid),
            Algorithm::HierarchicalC => hierarchical(features, k, Representative::Centroid),
        }
    }
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    /// Feature matrix straight from points, no normalization.
    pub fn matrix(points: &[&[f64]]) -> FeatureMatrix {
        FeatureMatrix {
            rows: points.iter().map(|p| p.to_vec()).collect(),
            normalization: vec![],
            criterion: Criterion::A,
        }
    }

    /// Two well-separated 2-D blobs of three points each.
    pub fn two_blobs() -> FeatureMatrix {
        matrix(&[
            &[0.0, 0.0],
            &[0.5, 0.1],
            &[0.1, 0.4],
            &[10.0, 10.0],
            &[10.4, 9.8],
            &[9.7, 10.2],
        ])
    }

    /// Brute-force best 2-partition by WCSS over all assignments.
    pub fn best_two_partition(features: &FeatureMatrix) -> (f64, Vec<usize>) {
        let n = features.len();
        let mut best = (f64::INFINITY, vec![]);
        for mask in 1..(1u32 << n) - 1 {
            let assignment: Vec<usize> =
                (0..n).map(|i| ((mask >> i) & 1) as usize).collect();
            let cs = ClusterSet {
                k: 2,
                weights: weights_from_assignment(&assignment, 2),
                assignment,
                representative: Representative::Centroid,
                medoid_indices: None,
            };
            let cost = wcss(features, &cs);
            if cost < best.0 {
                best = (cost, cs.assignment);
            }
        }
        best
    }
}
