use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qplanar_core::certificates::{certify_upper, Fixture};
use qplanar_core::graph::build_h;

fn certify(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify_upper");
    group.sample_size(20);
    for (name, fixture) in [
        ("near_wheel", Fixture::NearWheel { sunk: 1 }),
        ("two_hub_gap_9", Fixture::TwoHub { gap: 9, sunk: false }),
        ("two_hub_gap_60", Fixture::TwoHub { gap: 60, sunk: false }),
    ] {
        let g = fixture.build(500).unwrap();
        group.bench_function(name, |b| b.iter(|| certify_upper(black_box(&g)).unwrap()));
    }
    let h = build_h(500).unwrap();
    group.bench_function("h_500", |b| b.iter(|| certify_upper(black_box(&h)).unwrap()));
    group.finish();
}

criterion_group!(benches, certify);
criterion_main!(benches);
