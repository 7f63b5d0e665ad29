use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use heller_core::liecore::lie_module;
use heller_core::modrep::{heller, hom_space, Module};
use heller_core::symgrp::Group;
use heller_core::{field_make, Mat};

fn rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (p, n) in [(2, 256), (2, 1024), (3, 256)] {
        let f = field_make(p, 1).unwrap();
        let a = Mat::random(&f, n, n, &mut rng);
        group.bench_with_input(BenchmarkId::new(format!("GF({p})"), n), &a, |b, a| b.iter(|| a.rref()));
    }
    group.finish();
}

fn hom(c: &mut Criterion) {
    let f = field_make(3, 1).unwrap();
    let lie = lie_module(4, &f).unwrap();
    let reg = Module::regular(&Group::symmetric(4).unwrap(), &f);
    c.bench_function("hom Lie(4) -> F S4 over GF(3)", |b| b.iter(|| hom_space(&lie, &reg).unwrap()));
}

fn heller_trivial(c: &mut Criterion) {
    let mut group = c.benchmark_group("heller of trivial S5");
    group.sample_size(10);
    for p in [2, 5] {
        let f = field_make(p, 1).unwrap();
        let triv = Module::trivial(&Group::symmetric(5).unwrap(), &f);
        group.bench_function(format!("GF({p})"), |b| b.iter(|| heller(&triv).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, rref, hom, heller_trivial);
criterion_main!(benches);
