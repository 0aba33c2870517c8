//! Agglomerative clustering with Ward linkage (Lance-Williams update).

use super::{
    medoid_of, squared_distance, weights_from_assignment, ClusterError, ClusterSet,
    FeatureMatrix, Representative,
};

pub fn hierarchical(
    features: &FeatureMatrix,
    k: usize,
    representative: Representative,
) -> Result<ClusterSet, ClusterError> {
    let n = features.len();
    if n == 0 {
        return Err(ClusterError::EmptyInput);
    }
    if k == 0 || k > n {
        return Err(ClusterError::BadK { k, n });
    }
    let rows = &features.rows;

    // Ward linkage on squared Euclidean distances: d(i,j) = |i||j|/(|i|+|j|) * ||ci-cj||^2
    // seeded from singletons, then updated by the Lance-Williams recurrence.
    let mut active: Vec<usize> = (0..n).collect();
    let mut size = vec![1.0f64; n];
    let mut members: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut link = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = 0.5 * squared_distance(&rows[i], &rows[j]);
            link[i][j] = d;
            link[j][i] = d;
        }
    }

    while active.len() > k {
        let mut best = (0usize, 0usize);
        let mut best_d = f64::INFINITY;
        for (ai, &i) in active.iter().enumerate() {
            for &j in &active[ai + 1..] {
                if link[i][j] < best_d {
                    best_d = link[i][j];
                    best = (i, j);
                }
            }
        }
        let (i, j) = best;
        // merge j into i (i < j by scan order), Lance-Williams update
        let (si, sj) = (size[i], size[j]);
        for &h in &active {
            if h == i || h == j {
                continue;
            }
            let sh = size[h];
            let d = ((si + sh) * link[i][h] + (sj + sh) * link[j][h] - sh * best_d)
                / (si + sj + sh);
            link[i][h] = d;
            link[h][i] = d;
        }
        size[i] += size[j];
        let moved = std::mem::take(&mut members[j]);
        members[i].extend(moved);
        active.retain(|&h| h != j);
    }

    let mut assignment = vec![0usize; n];
    for (cluster, &root) in active.iter().enumerate() {
        for &m in &members[root] {
            assignment[m] = cluster;
        }
    }
    let medoid_indices = match representative {
        Representative::Medoid => Some(
            active.iter().map(|&root| medoid_of(rows, &members[root])).collect(),
        ),
        Representative::Centroid => None,
    };

    Ok(ClusterSet {
        k,
        weights: weights_from_assignment(&assignment, k),
        assignment,
        representative,
        medoid_indices,
    })
}
