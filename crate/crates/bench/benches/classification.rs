use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use dynkin_core::catalog::canonical::canonical_form;
use dynkin_core::catalog::enumerate::enumerate_hyperbolic_matrices;
use dynkin_core::classify::classify_indecomposable;
use dynkin_core::standard;
use dynkin_core::symmetrize::symmetrizer;
use dynkin_core::weyl::positive_roots;

fn classification(c: &mut Criterion) {
    let e10 = standard::e10();
    c.bench_function("classify E10", |b| {
        b.iter(|| classify_indecomposable(black_box(&e10)).unwrap())
    });
    c.bench_function("canonical form E10", |b| b.iter(|| canonical_form(black_box(&e10))));
    c.bench_function("symmetrizer E10", |b| b.iter(|| symmetrizer(black_box(&e10)).unwrap()));
    let e8 = standard::e(8);
    c.bench_function("positive roots E8", |b| b.iter(|| positive_roots(black_box(&e8)).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    g.bench_function("ranks 3..=5", |b| {
        b.iter(|| enumerate_hyperbolic_matrices(3, 5).unwrap())
    });
    g.finish();
}

criterion_group!(benches, classification, enumeration);
criterion_main!(benches);
