use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hadastick_core::{QMatrix, Rational};
use std::hint::black_box;

/// Dense matrix with entries `((i + 1)(j + 2) + i^2 j) / (j + 1)`.
fn matrix(rows: usize, cols: usize) -> QMatrix {
    let entries = (0..rows)
        .flat_map(|i| {
            (0..cols).map(move |j| {
                let num = ((i + 1) * (j + 2) + i * i * j) as i64;
                Rational::new(num.into(), ((j + 1) as i64).into())
            })
        })
        .collect();
    QMatrix::new(rows, cols, entries).unwrap()
}

fn linalg(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_linalg");
    for n in [4, 8, 16, 32] {
        let m = matrix(n, n);
        group.bench_with_input(BenchmarkId::new("det", n), &m, |b, m| {
            b.iter(|| black_box(m).det().unwrap())
        });
        group.bench_with_input(BenchmarkId::new("rank", n), &m, |b, m| {
            b.iter(|| black_box(m).rank())
        });
        let wide = matrix(n, n + 4);
        group.bench_with_input(BenchmarkId::new("kernel", n), &wide, |b, m| {
            b.iter(|| black_box(m).kernel_basis())
        });
    }
    group.finish();
}

criterion_group!(benches, linalg);
criterion_main!(benches);
