use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gridfree_bench::{sparse_grid, strip};
use gridfree_core::additive::sidon_in_interval;
use gridfree_core::detectors::pythagorean_pairs;
use gridfree_core::{count_all, verify_free, ConfigClass, CountMethod};

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_fast");
    let ps = sparse_grid(40, 6);
    for class in ConfigClass::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(class), &ps, |b, ps| {
            b.iter(|| count_all(ps, class, CountMethod::Fast).unwrap().count)
        });
    }
    group.finish();
}

fn fast_vs_brute(c: &mut Criterion) {
    let mut group = c.benchmark_group("rhombus_count");
    let ps = sparse_grid(24, 3);
    for method in [CountMethod::Fast, CountMethod::Brute] {
        group.bench_with_input(BenchmarkId::from_parameter(method), &ps, |b, ps| {
            b.iter(|| count_all(ps, ConfigClass::Rhombus, method).unwrap().count)
        });
    }
    group.finish();
}

fn rhombus_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("rhombus_verify_strip");
    group.sample_size(10);
    for n in [64u64, 128, 256] {
        let ps = strip(n as i64, sidon_in_interval(n).unwrap().elements());
        group.bench_with_input(BenchmarkId::from_parameter(n), &ps, |b, ps| {
            b.iter(|| verify_free(ps, ConfigClass::Rhombus).free)
        });
    }
    group.finish();
}

fn pythagorean(c: &mut Criterion) {
    c.bench_function("pythagorean_pairs_1e5", |b| b.iter(|| pythagorean_pairs(100_000).len()));
}

criterion_group!(benches, counting, fast_vs_brute, rhombus_verify, pythagorean);
criterion_main!(benches);
