//! Timings for the hot paths: single certificates, full sweeps, discrete
//! sums, and the dimension-range check. All workloads are exact rational
//! arithmetic, so these track BigInt churn rather than float throughput.

use criterion::{criterion_group, criterion_main, Criterion};
use jetcert_core::{
    certify_threefold, discrete_budget_sum, lemma_l2_check, sweep, Candidate, Mode,
};
use std::hint::black_box;

fn bench_certify(c: &mut Criterion) {
    let small = Candidate::threefold(3, 7).unwrap();
    let large = Candidate::threefold(5, 11).unwrap();
    c.bench_function("certify_threefold small-q (3,7)", |b| {
        b.iter(|| certify_threefold(black_box(&small)).unwrap())
    });
    c.bench_function("certify_threefold large-q (5,11)", |b| {
        b.iter(|| certify_threefold(black_box(&large)).unwrap())
    });
}

fn bench_sweep(c: &mut Criterion) {
    c.bench_function("sweep q_max 60", |b| {
        b.iter(|| sweep(black_box(60)).unwrap())
    });
}

fn bench_discrete(c: &mut Criterion) {
    let cand = Candidate::threefold(3, 7).unwrap();
    c.bench_function("discrete_budget_sum (3,7) n=280", |b| {
        b.iter(|| discrete_budget_sum(black_box(&cand), Mode::SmallQ, 280).unwrap())
    });
}

fn bench_dimension(c: &mut Criterion) {
    c.bench_function("lemma_l2_check 4..=64", |b| {
        b.iter(|| lemma_l2_check(black_box(4), black_box(64), 10).unwrap())
    });
}

criterion_group!(
    benches,
    bench_certify,
    bench_sweep,
    bench_discrete,
    bench_dimension
);
criterion_main!(benches);
