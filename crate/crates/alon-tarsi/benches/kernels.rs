//! Parallel versus forced-sequential timings for the sharded enumeration
//! kernels. Results are identical on both paths; only the wall clock moves.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion};

use alon_tarsi::algebra::{ryser_permanent_scalar, scheim_coefficient, RingMatrix};
use alon_tarsi::budget::Budget;
use alon_tarsi::certify::{euler_diff, graph_polynomial_lazy, weighted_subgraph_sum, WeightScheme};
use alon_tarsi::exec;
use alon_tarsi::graph::{canonical_orientation, generate_family, Family, MultiGraph};
use alon_tarsi::scalar::ExactScalar;

fn fam(family: Family) -> MultiGraph {
    generate_family(&family)
        .unwrap()
        .as_graph()
        .unwrap()
        .clone()
}

/// 15x15 zero-diagonal 0/1 matrix; its permanent counts derangements.
fn derangement_matrix(n: usize) -> RingMatrix<ExactScalar> {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ExactScalar::from_i64(i64::from(i != j)))
                .collect()
        })
        .collect();
    RingMatrix::from_rows(rows).unwrap()
}

fn bench_ryser(c: &mut Criterion) {
    let budget = Budget::default();
    let matrix = derangement_matrix(15);
    let mut group = c.benchmark_group("ryser_permanent/derangement_15");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(5));
    group.bench_function("parallel", |b| {
        b.iter(|| ryser_permanent_scalar(black_box(&matrix), &budget).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| exec::sequential(|| ryser_permanent_scalar(black_box(&matrix), &budget).unwrap()))
    });
    group.finish();
}

fn bench_euler(c: &mut Criterion) {
    let budget = Budget::default();
    let d = canonical_orientation(&fam(Family::CyclePower(8, 2)));
    let mut group = c.benchmark_group("euler_diff/c8_squared");
    group.sample_size(20);
    group.measurement_time(Duration::from_secs(5));
    group.bench_function("parallel", |b| {
        b.iter(|| euler_diff(black_box(&d), &budget).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| exec::sequential(|| euler_diff(black_box(&d), &budget).unwrap()))
    });
    group.finish();
}

fn bench_weighted(c: &mut Criterion) {
    let budget = Budget::default();
    let d = canonical_orientation(&fam(Family::CyclePower(8, 2)));
    let scheme = WeightScheme::consecutive(&d.out_degrees());
    let mut group = c.benchmark_group("weighted_subgraph_sum/c8_squared");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(5));
    group.bench_function("parallel", |b| {
        b.iter(|| weighted_subgraph_sum(black_box(&d), &scheme, &budget).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            exec::sequential(|| weighted_subgraph_sum(black_box(&d), &scheme, &budget).unwrap())
        })
    });
    group.finish();
}

fn bench_box_scan(c: &mut Criterion) {
    let budget = Budget::default();
    let lazy = graph_polynomial_lazy(&fam(Family::Complete(5)));
    // volume 7^5 crosses the sharding threshold while the target stays a
    // legal overshoot of the degree-10 product
    let s = [6u32; 5];
    let mut group = c.benchmark_group("scheim_box/k5");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(5));
    group.bench_function("parallel", |b| {
        b.iter(|| scheim_coefficient(black_box(&lazy), &s, &budget).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| exec::sequential(|| scheim_coefficient(black_box(&lazy), &s, &budget).unwrap()))
    });
    group.finish();
}

criterion_group!(kernels, bench_ryser, bench_euler, bench_weighted, bench_box_scan);
criterion_main!(kernels);
