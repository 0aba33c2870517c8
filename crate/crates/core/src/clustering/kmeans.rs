//! Lloyd's k-means with deterministic farthest-point seeding.

use super::{
    centroid_of, squared_distance, weights_from_assignment, ClusterError, ClusterSet,
    FeatureMatrix, Representative,
};

const MAX_ITER: usize = 300;

/// Seeds: first the row closest to the global centroid, then repeatedly
/// the row farthest from its nearest chosen seed. Ties by lowest index.
fn seed_indices(rows: &[Vec<f64>], k: usize) -> Vec<usize> {
    let all: Vec<usize> = (0..rows.len()).collect();
    let global = centroid_of(rows, &all);
    let mut seeds = Vec::with_capacity(k);
    let mut first = 0;
    let mut best = f64::INFINITY;
    for (i, row) in rows.iter().enumerate() {
        let d = squared_distance(row, &global);
        if d < best {
            best = d;
            first = i;
        }
    }
    seeds.push(first);
    while seeds.len() < k {
        let mut next = usize::MAX;
        let mut far = -1.0;
        for (i, row) in rows.iter().enumerate() {
            if seeds.contains(&i) {
                continue;
            }
            let near = seeds
                .iter()
                .map(|&s| squared_distance(row, &rows[s]))
                .fold(f64::INFINITY, f64::min);
            if near > far {
                far = near;
                next = i;
            }
        }
        seeds.push(next);
    }
    seeds
}

pub fn kmeans(features: &FeatureMatrix, k: usize) -> Result<ClusterSet, ClusterError> {
    let n = features.len();
    if n == 0 {
        return Err(ClusterError::EmptyInput);
    }
    if k == 0 || k > n {
        return Err(ClusterError::BadK { k, n });
    }
    let rows = &features.rows;
    let mut centroids: Vec<Vec<f64>> =
        seed_indices(rows, k).into_iter().map(|i| rows[i].clone()).collect();
    let mut assignment = vec![usize::MAX; n];

    for _ in 0..MAX_ITER {
        let mut next = Vec::with_capacity(n);
        for row in rows {
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for (c, centroid) in centroids.iter().enumerate() {
                let d = squared_distance(row, centroid);
                if d < best_d {
                    best_d = d;
                    best = c;
                }
            }
            next.push(best);
        }
        // keep every cluster populated: hand the point farthest from its
        // centroid to each empty cluster, in cluster order
        for cluster in 0..k {
            if next.contains(&cluster) {
                continue;
            }
            let donor = (0..n)
                .filter(|&i| {
                    let c = next[i];
                    next.iter().filter(|&&x| x == c).count() > 1
                })
                .max_by(|&a, &b| {
                    let da = squared_distance(&rows[a], &centroids[next[a]]);
                    let db = squared_distance(&rows[b], &centroids[next[b]]);
                    da.partial_cmp(&db).unwrap().then(b.cmp(&a))
                })
                .expect("k <= n guarantees a donor");
            next[donor] = cluster;
        }
        let converged = next == assignment;
        assignment = next;
        for (cluster, centroid) in centroids.iter_mut().enumerate() {
            let members: Vec<usize> =
                (0..n).filter(|&i| assignment[i] == cluster).collect();
            *centroid = centroid_of(rows, &members);
        }
        if converged {
            break;
        }
    }

    Ok(ClusterSet {
        k,
        weights: weights_from_assignment(&assignment, k),
        assignment,
        representative: Representative::Centroid,
        medoid_indices: None,
    })
}
