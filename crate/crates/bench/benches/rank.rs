use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superpi_core::analysis::evaluation_matrix;
use superpi_core::constructions::build_family;
use superpi_core::linalg::{matrix_rank, rank_mod_p};
use superpi_core::{codim_graded, AnalysisConfig, FamilyTag, VarKind};

fn codimensions(c: &mut Criterion) {
    let cfg = AnalysisConfig::default();
    let alg = build_family(FamilyTag::MhlExc { h: 1, l: 1 }).unwrap();
    let mut group = c.benchmark_group("codim_graded_exc11");
    group.sample_size(10);
    for n in [2usize, 3, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| codim_graded(&alg, n, &cfg).unwrap())
        });
    }
    group.finish();
}

fn matrix_ranks(c: &mut Criterion) {
    let cfg = AnalysisConfig::default();
    let alg = build_family(FamilyTag::MhlT { h: 2, l: 0 }).unwrap();
    let m = evaluation_matrix(&alg, &[VarKind::Any; 4], &cfg).unwrap();
    let mut group = c.benchmark_group("rank_m2_n4");
    group.bench_function("exact", |b| b.iter(|| matrix_rank(black_box(&m))));
    group.bench_function("mod_p", |b| b.iter(|| rank_mod_p(black_box(&m), 2_147_483_647).unwrap()));
    group.finish();
}

criterion_group!(benches, codimensions, matrix_ranks);
criterion_main!(benches);
