//! Elbow selection of the cluster count via the kneedle construction:
//! normalize the WCSS curve to [0,1] x [0,1] and pick the k with the
//! largest vertical gap below the chord joining the endpoints.

use super::{wcss, Algorithm, ClusterError, FeatureMatrix};

/// Index (0-based) of the knee in a decreasing curve. Ties go to the
/// smaller index; a flat curve yields index 0.
pub fn kneedle_index(curve: &[f64]) -> usize {
    if curve.len() < 3 {
        return 0;
    }
    let first = curve[0];
    let last = curve[curve.len() - 1];
    let span = first - last;
    if span <= 0.0 {
        return 0;
    }
    let m = (curve.len() - 1) as f64;
    let mut best = 0;
    let mut best_gap = f64::NEG_INFINITY;
    for (i, &y) in curve.iter().enumerate() {
        let x = i as f64 / m;
        let y_norm = (first - y) / span; // increasing, 0..1
        let gap = y_norm - x; // height above the straight-line reference
        if gap > best_gap {
            best_gap = gap;
            best = i;
        }
    }
    best
}

/// Run `algorithm` for k = 1..=k_max, collect the WCSS curve, and return
/// the elbow k together with the curve.
pub fn elbow_k(
    features: &FeatureMatrix,
    algorithm: Algorithm,
    k_max: usize,
) -> Result<(usize, Vec<f64>), ClusterError> {
    if k_max < 2 {
        return Err(ClusterError::BadKMax(k_max));
    }
    let k_max = k_max.min(features.len());
    let curve: Vec<f64> = (1..=k_max)
        .map(|k| algorithm.run(features, k).map(|cs| wcss(features, &cs)))
        .collect::<Result<_, _>>()?;
    Ok((kneedle_index(&curve) + 1, curve))
}
