use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use okc_bench::{config_batch, poly_batch};
use okc_core::comparison::{verify_fundamental_triangle, CompleteIntersection};
use okc_core::divisor::verify_divclass;
use okc_core::fgl::FormalGroupLaw;
use okc_core::lazard::lazard_truncation;
use okc_core::proj::MultiProj;

fn bench_poly_mul(c: &mut Criterion) {
    let polys = poly_batch(16);
    c.bench_function("poly_mul_p4x4x4", |b| {
        b.iter(|| {
            let mut acc = polys[0].clone();
            for p in &polys[1..] {
                acc = black_box(acc.mul(p).unwrap());
            }
            acc
        })
    });
}

fn bench_lazard(c: &mut Criterion) {
    c.bench_function("lazard_truncation_4", |b| {
        b.iter(|| black_box(lazard_truncation(4).unwrap()))
    });
    let mut slow = c.benchmark_group("lazard");
    slow.sample_size(20);
    slow.bench_function("lazard_truncation_6", |b| {
        b.iter(|| black_box(lazard_truncation(6).unwrap()))
    });
    slow.finish();
}

fn bench_multi_sum(c: &mut Criterion) {
    let law = FormalGroupLaw::multiplicative(13).unwrap();
    c.bench_function("multi_sum_mult_3_3_3_3", |b| {
        b.iter(|| black_box(law.multi_sum(&[3, 3, 3, 3]).unwrap()))
    });
}

fn bench_divclass(c: &mut Criterion) {
    let configs = config_batch(8);
    let mut group = c.benchmark_group("divclass");
    group.sample_size(20);
    group.bench_function("verify_divclass_batch8", |b| {
        b.iter(|| {
            for config in &configs {
                assert!(black_box(verify_divclass(config).unwrap()).verified);
            }
        })
    });
    group.finish();
}

fn bench_triangle(c: &mut Criterion) {
    let ambient = MultiProj::new(vec![2, 2, 2]).unwrap();
    let x = CompleteIntersection::new(
        ambient,
        vec![vec![3, 1, 0], vec![1, 2, 3], vec![0, 0, 2]],
    )
    .unwrap();
    c.bench_function("fundamental_triangle_p2x2x2", |b| {
        b.iter(|| assert!(black_box(verify_fundamental_triangle(&x)).verified))
    });
}

criterion_group!(
    benches,
    bench_poly_mul,
    bench_lazard,
    bench_multi_sum,
    bench_divclass,
    bench_triangle
);
criterion_main!(benches);
