//! Parallel-vs-sequential timing of the sweep drivers.
//!
//! The library parallelises through the ambient rayon pool, so the
//! sequential baseline is a one-thread pool around the same call. Building
//! without the `parallel` feature benches only the sequential path.

use criterion::{criterion_group, criterion_main, Criterion};

use howe_weyl::verify::{verify_extremal, verify_springer, verify_unitary};
use howe_weyl::weyl::{omega, CorrCase};

fn bench_omega(c: &mut Criterion) {
    let mut group = c.benchmark_group("omega_so1_12_4");
    group.sample_size(20);
    run_both(&mut group, || omega(CorrCase::SoSame, 12, 4).len());
    group.finish();
}

fn bench_extremal_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_extremal_so1_7_3");
    group.sample_size(10);
    run_both(&mut group, || {
        verify_extremal(CorrCase::SoSame, 7, 3).summary.total
    });
    group.finish();
}

fn bench_extremal_sweep_large(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_extremal_so1_10_5");
    group.sample_size(10);
    run_both(&mut group, || {
        verify_extremal(CorrCase::SoSame, 10, 5).summary.total
    });
    group.finish();
}

fn bench_springer_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_springer_8");
    group.sample_size(10);
    run_both(&mut group, || verify_springer(8).summary.total);
    group.finish();
}

fn bench_unitary_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_unitary_12");
    group.sample_size(10);
    run_both(&mut group, || verify_unitary(12).summary.total);
    group.finish();
}

#[cfg(feature = "parallel")]
fn run_both<M: criterion::measurement::Measurement, R: Send>(
    group: &mut criterion::BenchmarkGroup<'_, M>,
    work: impl Fn() -> R + Sync,
) {
    let sequential = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("one-thread pool");
    group.bench_function("sequential", |b| b.iter(|| sequential.install(&work)));
    let parallel = rayon::ThreadPoolBuilder::new()
        .build()
        .expect("default pool");
    group.bench_function("parallel", |b| b.iter(|| parallel.install(&work)));
}

#[cfg(not(feature = "parallel"))]
fn run_both<M: criterion::measurement::Measurement, R>(
    group: &mut criterion::BenchmarkGroup<'_, M>,
    work: impl Fn() -> R + Sync,
) {
    group.bench_function("sequential", |b| b.iter(&work));
}

criterion_group!(
    benches,
    bench_omega,
    bench_extremal_sweep,
    bench_extremal_sweep_large,
    bench_springer_sweep,
    bench_unitary_sweep
);
criterion_main!(benches);
