use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superpi_core::constructions::build_family;
use superpi_core::polynomials::CapelliSpec;
use superpi_core::rational::rat;
use superpi_core::{
    capelli_threshold, evaluate, evaluate_alternating_fast, is_capelli_identity, AnalysisConfig,
    FamilyTag, Rational, VarKind,
};

fn assignment(d: usize, slots: usize) -> Vec<Vec<Rational>> {
    (0..slots)
        .map(|s| (0..d).map(|i| rat(((s * 7 + i * 3) % 5) as i64 - 2)).collect())
        .collect()
}

fn fast_vs_naive(c: &mut Criterion) {
    let alg = build_family(FamilyTag::MhlT { h: 2, l: 1 }).unwrap();
    let mut group = c.benchmark_group("capelli_eval");
    for m in [3usize, 4, 5] {
        let spec = CapelliSpec::full(m, VarKind::Any).unwrap();
        let poly = spec.materialize();
        let a = assignment(alg.dim(), spec.num_slots());
        group.bench_with_input(BenchmarkId::new("fast", m), &m, |b, _| {
            b.iter(|| evaluate_alternating_fast(&alg, &spec, black_box(&a)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("naive", m), &m, |b, _| {
            b.iter(|| evaluate(&alg, &poly, black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn identity_search(c: &mut Criterion) {
    let cfg = AnalysisConfig::default();
    let m11 = build_family(FamilyTag::MhlT { h: 1, l: 1 }).unwrap();
    let exc = build_family(FamilyTag::MhlExc { h: 1, l: 1 }).unwrap();
    let mut group = c.benchmark_group("identity");
    group.sample_size(10);
    group.bench_function("threshold_y+_M11", |b| {
        b.iter(|| capelli_threshold(&m11, VarKind::YPlus, 4, &cfg).unwrap())
    });
    let spec = CapelliSpec::full(5, VarKind::Any).unwrap();
    group.bench_function("exhaustive_cap5_exc11", |b| {
        b.iter(|| is_capelli_identity(&exc, &spec, &cfg).unwrap())
    });
    group.finish();
}

criterion_group!(benches, fast_vs_naive, identity_search);
criterion_main!(benches);
