use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use residues_core::identity::{half_count, sweep_identity};
use residues_core::quad::{enumerate_irreducibles, minimal_nonresidue, sweep_theorem2};
use residues_core::sweeps::sweep_primes;
use residues_core::{CountMode, ResidueTable, Ring};
use std::hint::black_box;

fn bench_residue_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("residue_table");
    for m in [997u64, 9973] {
        group.bench_with_input(BenchmarkId::new("build_k2", m), &m, |b, &m| {
            b.iter(|| ResidueTable::build(black_box(m), 2))
        });
        group.bench_with_input(BenchmarkId::new("run_stats", m), &m, |b, &m| {
            let table = ResidueTable::build(m, 2);
            b.iter(|| table.run_stats())
        });
    }
    group.finish();
}

fn bench_prime_sweep(c: &mut Criterion) {
    c.bench_function("sweep_primes_2000_k23", |b| {
        b.iter(|| sweep_primes(black_box(2000), &[2, 3]))
    });
}

fn bench_quad(c: &mut Criterion) {
    let ring = Ring::new(-1).unwrap();
    c.bench_function("enumerate_irreducibles_gauss_5000", |b| {
        b.iter(|| enumerate_irreducibles(black_box(ring), 5000))
    });
    let pi = ring.element(57, 82); // norm 9973, prime
    assert!(pi.is_irreducible());
    c.bench_function("minimal_nonresidue_n9973_k2", |b| {
        b.iter(|| minimal_nonresidue(black_box(&pi), 2).unwrap())
    });
    c.bench_function("sweep_theorem2_all_rings_500", |b| {
        b.iter(|| sweep_theorem2(&Ring::all(), black_box(500), &[2, 3, 4, 5, 6]).unwrap())
    });
}

fn bench_identity(c: &mut Criterion) {
    c.bench_function("half_count_9999", |b| {
        b.iter(|| half_count(black_box(9999), 1234, CountMode::Strict))
    });
    c.bench_function("sweep_identity_weak_12", |b| {
        b.iter(|| sweep_identity(12, 12, 12, CountMode::Weak))
    });
}

criterion_group!(
    benches,
    bench_residue_table,
    bench_prime_sweep,
    bench_quad,
    bench_identity
);
criterion_main!(benches);
