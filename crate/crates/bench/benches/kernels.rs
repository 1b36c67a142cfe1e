use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sliceworks::slice_fn::symmetrize_poly;
use sliceworks::testkit::{run_property_suite, OracleConfig};
use sliceworks::zeros::{complex_roots, find_zeros, ZeroOptions};
use sliceworks::SliceDomain;
use sliceworks_bench::{linear_products, polynomials};

fn roots(c: &mut Criterion) {
    let mut group = c.benchmark_group("complex_roots");
    for degree in [4, 8, 16] {
        let sym: Vec<Vec<f64>> =
            linear_products(16, degree / 2, 3).iter().map(|p| symmetrize_poly(p).unwrap().real_coeffs_1d()).collect();
        group.bench_with_input(BenchmarkId::from_parameter(degree), &sym, |b, sym| {
            b.iter(|| sym.iter().map(|p| complex_roots(black_box(p)).unwrap().len()).sum::<usize>())
        });
    }
    group.finish();
}

fn zeros(c: &mut Criterion) {
    let omega = SliceDomain::whole();
    let opts = ZeroOptions::asserted();
    let mut group = c.benchmark_group("find_zeros");
    for degree in [2, 4, 8] {
        let fs = linear_products(16, degree, 5);
        group.bench_with_input(BenchmarkId::from_parameter(degree), &fs, |b, fs| {
            b.iter(|| fs.iter().map(|f| find_zeros(black_box(f), &omega, &opts).unwrap().value.total_multiplicity()).sum::<usize>())
        });
    }
    group.finish();
}

fn star(c: &mut Criterion) {
    let fs = polynomials(32, 8, 7);
    c.bench_function("star_product/deg8", |b| {
        b.iter(|| fs.windows(2).filter_map(|w| w[0].star(black_box(&w[1])).unwrap().degree()).sum::<u32>())
    });
}

fn suite(c: &mut Criterion) {
    let cfg = OracleConfig { trials: 50, ..OracleConfig::default() };
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_function("trials=50", |b| b.iter(|| run_property_suite(black_box(&cfg)).pass));
    group.finish();
}

criterion_group!(benches, roots, zeros, star, suite);
criterion_main!(benches);
