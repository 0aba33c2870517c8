//! Criterion benchmarks for the hot paths: profile construction,
//! clustering, the LP solver, and single-day scheduling.

use criterion::{black_box, criterion_group, criterion_main, Criterion as Bench};
use priceforge_core::clustering::{extract_features, Algorithm, Criterion};
use priceforge_core::ingest::slice_days;
use priceforge_core::lp::solve_lp;
use priceforge_core::profile::{build_day_scenario, build_week_scenario, ScalingMode};
use priceforge_core::scheduling::{solve_block, PlantParams, Setup};
use priceforge_core::synth::synth2023;

fn bench_profiles(c: &mut Bench) {
    let series = synth2023();
    let days = slice_days(&series);
    let weeks = priceforge_core::ingest::slice_weeks(&series).unwrap();

    c.bench_function("profile/day-nominal", |b| {
        b.iter(|| build_day_scenario(black_box(&days), ScalingMode::Nominal).unwrap())
    });
    c.bench_function("profile/week-nominal", |b| {
        b.iter(|| build_week_scenario(black_box(&weeks), ScalingMode::Nominal).unwrap())
    });
}

fn bench_clustering(c: &mut Bench) {
    let series = synth2023();
    let days = slice_days(&series);
    let features = extract_features(&days, Criterion::B).unwrap();

    c.bench_function("cluster/kmeans-k4", |b| {
        b.iter(|| Algorithm::Kmeans.run(black_box(&features), 4).unwrap())
    });
    c.bench_function("cluster/kmedoids-k4", |b| {
        b.iter(|| Algorithm::Kmedoids.run(black_box(&features), 4).unwrap())
    });
    c.bench_function("cluster/ward-k4", |b| {
        b.iter(|| Algorithm::HierarchicalC.run(black_box(&features), 4).unwrap())
    });
}

/// Deterministic dense LP: min c.x, A x <= b, 0 <= x <= 5, with b > 0 so
/// the origin is feasible and the instance is always solvable.
fn dense_lp(m: usize, n: usize) -> priceforge_core::lp::LpProblem {
    let mut seed = 0x2545f4914f6cdd1du64;
    let mut uniform = move || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (seed >> 11) as f64 / (1u64 << 53) as f64
    };
    priceforge_core::lp::LpProblem {
        c: (0..n).map(|_| uniform() * 2.0 - 1.0).collect(),
        a_eq: vec![],
        b_eq: vec![],
        a_in: (0..m).map(|_| (0..n).map(|_| uniform() * 2.0 - 1.0).collect()).collect(),
        b_in: (0..m).map(|_| uniform() * 4.0 + 1.0).collect(),
        lower: vec![0.0; n],
        upper: vec![5.0; n],
        names: vec![],
    }
}

fn bench_scheduling(c: &mut Bench) {
    let series = synth2023();
    let params = PlantParams::default();
    let da_day: Vec<f64> = series.da[..24]
        .iter()
        .flat_map(|&v| std::iter::repeat_n(v, 4))
        .collect();
    let id_day = &series.id[..96];

    c.bench_function("schedule/day-setup-i", |b| {
        b.iter(|| solve_block(black_box(&da_day), None, &params, Setup::I).unwrap())
    });
    c.bench_function("schedule/day-setup-ii", |b| {
        b.iter(|| solve_block(black_box(&da_day), Some(id_day), &params, Setup::II).unwrap())
    });

    // solver-only timing on a dense 40x60 LP with x = 0 feasible
    let lp = dense_lp(40, 60);
    c.bench_function("lp/dense-40x60", |b| b.iter(|| solve_lp(black_box(&lp)).unwrap()));
}

criterion_group!(benches, bench_profiles, bench_clustering, bench_scheduling);
criterion_main!(benches);
