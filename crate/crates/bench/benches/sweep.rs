use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use skewplane_core::{
    enumerate_skew_shapes, for_each_filling, parse_shape, sweep_weight, table_oracle, verify,
    Side, Variant, VerifyOptions,
};

fn fillings(c: &mut Criterion) {
    let shape = parse_shape("4,3,2,1").unwrap();
    c.bench_function("fillings 4,3,2,1 weight 20", |b| {
        b.iter(|| {
            let mut count = 0u64;
            for_each_filling(&shape, black_box(20), |_| count += 1);
            count
        })
    });
    c.bench_function("shape inventory |outer| <= 8", |b| {
        b.iter(|| enumerate_skew_shapes(black_box(8), 1, 8).len())
    });
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_weight");
    for n in [6u32, 8, 10] {
        group.bench_with_input(BenchmarkId::new("workers=1", n), &n, |b, &n| {
            b.iter(|| sweep_weight(n, 1).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("workers=4", n), &n, |b, &n| {
            b.iter(|| sweep_weight(n, 4).unwrap())
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    c.bench_function("verify above restricted max_n 6", |b| {
        b.iter(|| verify(Side::Above, 6, Variant::Restricted, VerifyOptions::default()).unwrap())
    });
    c.bench_function("table oracle n 5 k 1", |b| {
        b.iter(|| table_oracle(5, 1, Side::Above).unwrap())
    });
}

criterion_group!(benches, fillings, sweeps, verification);
criterion_main!(benches);
