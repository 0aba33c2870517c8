//! Partitioning Around Medoids (BUILD + SWAP), Euclidean dissimilarity.

use super::{
    distance, weights_from_assignment, ClusterError, ClusterSet, FeatureMatrix, Representative,
};

fn total_cost(dist: &[Vec<f64>], medoids: &[usize]) -> f64 {
    dist.iter()
        .map(|row| medoids.iter().map(|&m| row[m]).fold(f64::INFINITY, f64::min))
        .sum()
}

pub fn kmedoids(features: &FeatureMatrix, k: usize) -> Result<ClusterSet, ClusterError> {
    let n = features.len();
    if n == 0 {
        return Err(ClusterError::EmptyInput);
    }
    if k == 0 || k > n {
        return Err(ClusterError::BadK { k, n });
    }
    let dist: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| distance(&features.rows[i], &features.rows[j])).collect())
        .collect();

    // BUILD: greedily add the medoid that lowers total cost most
    let mut medoids: Vec<usize> = Vec::with_capacity(k);
    while medoids.len() < k {
        let mut best = usize::MAX;
        let mut best_cost = f64::INFINITY;
        for candidate in 0..n {
            if medoids.contains(&candidate) {
                continue;
            }
            medoids.push(candidate);
            let cost = total_cost(&dist, &medoids);
            medoids.pop();
            if cost < best_cost {
                best_cost = cost;
                best = candidate;
            }
        }
        medoids.push(best);
    }

    // SWAP: apply the single best improving swap until a fixpoint
    let mut current = total_cost(&dist, &medoids);
    loop {
        let mut best_swap: Option<(usize, usize, f64)> = None;
        for slot in 0..k {
            for candidate in 0..n {
                if medoids.contains(&candidate) {
                    continue;
                }
                let old = medoids[slot];
                medoids[slot] = candidate;
                let cost = total_cost(&dist, &medoids);
                medoids[slot] = old;
                if cost < current - 1e-12
                    && best_swap.is_none_or(|(_, _, c)| cost < c)
                {
                    best_swap = Some((slot, candidate, cost));
                }
            }
        }
        match best_swap {
            Some((slot, candidate, cost)) => {
                medoids[slot] = candidate;
                current = cost;
            }
            None => break,
        }
    }
    medoids.sort_unstable();

    let assignment: Vec<usize> = (0..n)
        .map(|i| {
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for (c, &m) in medoids.iter().enumerate() {
                if dist[i][m] < best_d {
                    best_d = dist[i][m];
                    best = c;
                }
            }
            best
        })
        .collect();

    Ok(ClusterSet {
        k,
        weights: weights_from_assignment(&assignment, k),
        assignment,
        representative: Representative::Medoid,
        medoid_indices: Some(medoids),
    })
}
