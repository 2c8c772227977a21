use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qplanar_core::enumeration::{canonical_form, extremal_search, gen_triangulations, Source};
use qplanar_core::graph::build_h;
use qplanar_core::rewiring::{build_config, detect_config, Config};

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("gen_triangulations");
    group.sample_size(10);
    for n in [8, 9, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| gen_triangulations(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("extremal_search");
    group.sample_size(10);
    group.bench_function("10", |b| b.iter(|| extremal_search(black_box(10), Source::Generated).unwrap()));
    group.finish();
}

fn canon(c: &mut Criterion) {
    let h = build_h(40).unwrap();
    c.bench_function("canonical_form/h/40", |b| b.iter(|| canonical_form(black_box(&h)).unwrap()));
    let d3 = build_config(Config::D3, 40, 20, None).unwrap();
    c.bench_function("detect_config/d3/40", |b| b.iter(|| detect_config(black_box(&d3)).unwrap()));
}

criterion_group!(benches, generation, search, canon);
criterion_main!(benches);
