use criterion::{criterion_group, criterion_main, Criterion};
use repstab_core::exactlin::Field;
use repstab_core::figmod::free_module;
use repstab_core::homalg::{bar_complex, central_complex, SstCache, TorMethod};
use repstab_core::symgrp::{induce, trivial_rep};

fn bench_bar(c: &mut Criterion) {
    let m1 = free_module(1, 5, Field::Q);
    c.bench_function("bar homology M(1) n=5", |b| {
        b.iter(|| bar_complex(&m1, 5).homology_dims())
    });
}

fn bench_central(c: &mut Criterion) {
    let m0 = free_module(0, 6, Field::Q);
    c.bench_function("central homology M(0) n=6", |b| {
        b.iter(|| central_complex(&m0, 6).homology_dims())
    });
}

fn bench_induce(c: &mut Criterion) {
    let triv = trivial_rep(3, Field::Q);
    c.bench_function("induce trivial 3x3 -> 6", |b| {
        b.iter(|| induce(6, &[3, 3], &[triv.clone(), triv.clone()]).unwrap())
    });
}

fn bench_koszul(c: &mut Criterion) {
    let m1 = free_module(1, 5, Field::Q);
    let sst = SstCache::new(Field::Q);
    c.bench_function("koszul tor M(1) n=5", |b| {
        b.iter(|| repstab_core::homalg::tor_dims(&m1, 5, TorMethod::Koszul, &sst).unwrap())
    });
}

criterion_group!(benches, bench_bar, bench_central, bench_induce, bench_koszul);
criterion_main!(benches);
