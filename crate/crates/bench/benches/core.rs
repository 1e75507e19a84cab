use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pz_bench::{example_system, nilpotent_x_part, third_order};
use pz_core::algebra::{rat, series_implicit_solve};
use pz_core::portrait::{integrate, verify_pipeline};
use pz_core::transforms::{full_pipeline, remove_subleading};
use pz_core::PZParams;

fn series(c: &mut Criterion) {
    let x = nilpotent_x_part();
    c.bench_function("series_implicit_solve n=16", |b| b.iter(|| series_implicit_solve(black_box(&x), 16).unwrap()));
}

fn gauge(c: &mut Criterion) {
    let ode = third_order();
    c.bench_function("remove_subleading order 3", |b| b.iter(|| remove_subleading(black_box(&ode), &rat(0, 1)).unwrap()));
}

fn integration(c: &mut Criterion) {
    let sys = example_system();
    c.bench_function("integrate t=10 tol=1e-10", |b| b.iter(|| integrate(&sys, black_box((-1.0, 0.5)), 10.0, 1e-10).unwrap()));
}

fn pipeline(c: &mut Criterion) {
    let report = full_pipeline(&PZParams::from_ints(1, 1, 3, 1, 1)).unwrap();
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    group.bench_function("verify (1,1,3,1,1)", |b| b.iter(|| verify_pipeline(black_box(&report), 20).unwrap()));
    group.finish();
}

criterion_group!(benches, series, gauge, integration, pipeline);
criterion_main!(benches);
