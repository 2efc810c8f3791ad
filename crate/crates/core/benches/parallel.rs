//! Sequential versus parallel verification and hunting.

use berge_core::verify::{hunt, verify_theorem, HuntParams, PredicateConfig, RunFiles, VerifyParams};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_n4_m4_7");
    group.sample_size(10);
    for jobs in [1, 0] {
        let mut p = VerifyParams::new((4, 4), (4, 7), Some(4), PredicateConfig::three_conn_quarter());
        p.jobs = jobs;
        let label = if jobs == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &p, |b, p| {
            b.iter(|| verify_theorem(p, &RunFiles::default()).unwrap())
        });
    }
    group.finish();
}

fn bench_hunt(c: &mut Criterion) {
    let mut group = c.benchmark_group("hunt_n6_2000");
    group.sample_size(10);
    let config = PredicateConfig::three_conn_quarter();
    for jobs in [1, 0] {
        let p = HuntParams { n: 6, m: (6, 9), delta: 6, samples: 2_000, seed: 1, budget: 1_000_000, jobs };
        let label = if jobs == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &p, |b, p| {
            b.iter(|| hunt(&config, p, &RunFiles::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_verify, bench_hunt);
criterion_main!(benches);
