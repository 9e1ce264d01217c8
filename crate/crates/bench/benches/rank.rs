use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mlt_bench::workload;
use mlt_core::engine::mlt_bounds;
use mlt_core::rigidity::{pebble_game, rank_of_graph, rigidity_matrix};
use mlt_core::linalg::ff_rank;
use mlt_core::splitting::birank_check;
use mlt_core::{Prime, Settings};
use std::hint::black_box;

fn rank(c: &mut Criterion) {
    let s = Settings::default();
    let mut group = c.benchmark_group("rank_of_graph");
    for (name, g) in workload() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| b.iter(|| rank_of_graph(black_box(g), &s)));
    }
    group.finish();
}

fn generic_rank(c: &mut Criterion) {
    let s = Settings::default();
    let mut group = c.benchmark_group("rigidity_matrix_rank_d3");
    for (name, g) in workload() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| ff_rank(&rigidity_matrix(black_box(g), 3, Prime::P61, &s.rng())))
        });
    }
    group.finish();
}

fn pebble(c: &mut Criterion) {
    let mut group = c.benchmark_group("pebble_game_2_3");
    for (name, g) in workload() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| b.iter(|| pebble_game(black_box(g), 2, 3)));
    }
    group.finish();
}

fn birank(c: &mut Criterion) {
    let s = Settings::default();
    let g = mlt_core::generate_named("complete_bipartite", &[5, 5]).unwrap();
    let b = g.bipartite_between(&[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]).unwrap();
    c.bench_function("birank_k55_2_2", |bench| bench.iter(|| birank_check(black_box(&b), 2, 2, s.trials, s.prime, &s.rng())));
}

fn bounds(c: &mut Criterion) {
    let s = Settings::default();
    let mut group = c.benchmark_group("mlt_bounds");
    group.sample_size(10);
    for (name, g) in workload() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| b.iter(|| mlt_bounds(black_box(g), &s)));
    }
    group.finish();
}

criterion_group!(benches, rank, generic_rank, pebble, birank, bounds);
criterion_main!(benches);
