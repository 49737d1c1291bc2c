use criterion::{black_box, criterion_group, criterion_main, Criterion};

use akempic::enumerate::{self, CountMode};
use akempic::ivec::IndexVector;
use akempic::numthy::{self, TCountMode};
use akempic::tri;

fn bench_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("counting");
    group.bench_function("d_formula_n360360", |b| {
        b.iter(|| enumerate::d_count(black_box(360_360), CountMode::Formula).unwrap())
    });
    group.bench_function("d_partition_n60", |b| {
        b.iter(|| enumerate::d_count(black_box(60), CountMode::Partition).unwrap())
    });
    group.bench_function("codes_partition_n120", |b| {
        b.iter(|| enumerate::codes_partition(black_box(120)).unwrap())
    });
    group.bench_function("t_brute_n99991", |b| {
        b.iter(|| numthy::t_count(black_box(99_991), TCountMode::Brute).unwrap())
    });
    group.bench_function("t_formula_n99991", |b| {
        b.iter(|| numthy::t_count(black_box(99_991), TCountMode::Formula).unwrap())
    });
    group.bench_function("billiard_s7_m100000", |b| {
        b.iter(|| numthy::billiard_sequence(black_box(7), black_box(100_000)).unwrap())
    });
    group.finish();
}

fn bench_graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("graphs");
    let v30 = IndexVector::new(1, 30, 7).unwrap();
    let v60 = IndexVector::new(2, 30, 7).unwrap();
    group.bench_function("build_km30", |b| {
        b.iter(|| tri::build(black_box(v30)).unwrap())
    });
    group.bench_function("build_km60", |b| {
        b.iter(|| tri::build(black_box(v60)).unwrap())
    });
    let g = tri::build(v60).unwrap();
    group.bench_function("measure_km60", |b| {
        b.iter(|| tri::index_vectors_from_graph(black_box(&g)).unwrap())
    });
    group.bench_function("canonical_form_km60", |b| {
        b.iter(|| tri::canonical_form(black_box(&g), false))
    });
    group.finish();
}

fn bench_kempe(c: &mut Criterion) {
    let mut group = c.benchmark_group("kempe");
    let open = tri::build(IndexVector::new(1, 6, 3).unwrap()).unwrap();
    let closed = tri::build(IndexVector::new(1, 7, 2).unwrap()).unwrap();
    let open_coloring = tri::nonsingular_coloring(&open).unwrap();
    let closed_coloring = tri::nonsingular_coloring(&closed).unwrap();
    group.bench_function("closure_open_14v", |b| {
        b.iter(|| tri::kempe_closure(black_box(&open), black_box(&open_coloring)).unwrap())
    });
    group.bench_function("closure_singleton_16v", |b| {
        b.iter(|| tri::kempe_closure(black_box(&closed), black_box(&closed_coloring)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_counting, bench_graphs, bench_kempe);
criterion_main!(benches);
