//! Sequential against parallel execution on the batch workloads.

use chibound::engine::{color_in_class, EngineConfig};
use chibound::harness::{generate, run_lemma_suite, FamilyKind, Instance, InstanceFamily};
use chibound::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for (kind, params) in [
        (FamilyKind::Hyperhole, &[("k", "5")][..]),
        (FamilyKind::SpecialBlowupM, &[("max_size", "1")][..]),
        (FamilyKind::NiceBlowupPlusAttachments, &[][..]),
    ] {
        let fam = InstanceFamily::new(kind, params, 7).expect("valid family");
        out.extend(generate(&fam, 16, Execution::Sequential).expect("family generates"));
    }
    out
}

fn modes() -> [(&'static str, Execution); 2] {
    [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel),
    ]
}

fn lemma_suite(c: &mut Criterion) {
    let instances = corpus();
    let mut group = c.benchmark_group("lemma_suite");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_lemma_suite(black_box(&instances), &[], exec).expect("registry runs"))
        });
    }
    group.finish();
}

fn certified_coloring(c: &mut Criterion) {
    let instances = corpus();
    let mut group = c.benchmark_group("color_in_class");
    group.sample_size(10);
    for (name, exec) in modes() {
        let cfg = EngineConfig {
            exec: Execution::Sequential,
            ..EngineConfig::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                exec.map(black_box(&instances), |i| {
                    color_in_class(&i.graph, &cfg).expect("in class").colors
                })
            })
        });
    }
    group.finish();
}

fn generation(c: &mut Criterion) {
    let fam =
        InstanceFamily::new(FamilyKind::NiceBlowupPlusAttachments, &[], 11).expect("valid family");
    let mut group = c.benchmark_group("generate");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| generate(black_box(&fam), 32, exec).expect("family generates"))
        });
    }
    group.finish();
}

criterion_group!(benches, lemma_suite, certified_coloring, generation);
criterion_main!(benches);
