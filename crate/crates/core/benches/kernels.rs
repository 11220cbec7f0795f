//! Parallel kernels on a single-thread pool against the default pool.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::{ThreadPool, ThreadPoolBuilder};

use arith_matroid::fixtures::toric_triple;
use arith_matroid::representations::all_representations;
use arith_matroid::shnf::shnf;
use arith_matroid::toric::{homology, independence_poset, layers_poset, order_complex};
use arith_matroid::{ArithmeticMatroid, IntMatrix};

fn pools() -> Vec<(String, ThreadPool)> {
    let default = ThreadPoolBuilder::new().build().unwrap();
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    vec![
        ("1 thread".to_string(), single),
        (format!("default pool ({})", default.current_num_threads()), default),
    ]
}

fn random_matrix(r: usize, n: usize) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    IntMatrix::from_rows(&rows)
}

fn kernels(c: &mut Criterion) {
    let a = toric_triple()[0].clone();
    let m = ArithmeticMatroid::from_matrix(&a).unwrap();
    let wide = random_matrix(4, 14);
    let layers = layers_poset(&a).unwrap();
    let mut group = c.benchmark_group("kernels");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_with_input(BenchmarkId::new("from_matrix 4x14", &name), &wide, |b, x| {
            b.iter(|| pool.install(|| ArithmeticMatroid::from_matrix(black_box(x)).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("all_representations", &name), &m, |b, x| {
            b.iter(|| pool.install(|| all_representations(black_box(x)).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("independence_poset", &name), &a, |b, x| {
            b.iter(|| pool.install(|| independence_poset(black_box(x)).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("layer homology", &name), &layers, |b, p| {
            b.iter(|| pool.install(|| homology(&order_complex(black_box(p), true).unwrap())))
        });
    }
    group.finish();

    // sequential reference point for the canonical form
    let square = random_matrix(16, 32);
    c.bench_function("shnf 16x32", |b| b.iter(|| shnf(black_box(&square))));
}

criterion_group!(benches, kernels);
criterion_main!(benches);
