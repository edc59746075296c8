use bottsam_bench::{long_word, sl4_positive};
use bottsam_core::{
    cech_weight, cohomology_table, condition_profile, demazure_table, DivisorCoeffs, TableOptions, ToricDivisor,
    Weight,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn tables(c: &mut Criterion) {
    let (bott, div) = sl4_positive();
    let opts = TableOptions::default();
    c.bench_function("closed_form_sl4", |b| b.iter(|| cohomology_table(&bott, black_box(&div), &opts).unwrap()));
    c.bench_function("demazure_sl4", |b| b.iter(|| demazure_table(&bott, black_box(&div), &opts).unwrap()));

    let mut group = c.benchmark_group("closed_form_by_length");
    for len in [4, 6, 8] {
        let bott = long_word(len);
        let div = ToricDivisor::picard(vec![1; len]);
        group.bench_with_input(BenchmarkId::from_parameter(len), &len, |b, _| {
            b.iter(|| cohomology_table(&bott, black_box(&div), &opts).unwrap())
        });
    }
    group.finish();
}

fn conditions(c: &mut Criterion) {
    let mut group = c.benchmark_group("condition_profile");
    for len in [4, 8, 12] {
        let bott = long_word(len);
        let coeffs = DivisorCoeffs((0..len as i64).map(|i| i % 3 - 1).collect());
        group.bench_with_input(BenchmarkId::from_parameter(len), &len, |b, _| {
            b.iter(|| condition_profile(&bott, black_box(&coeffs)).unwrap())
        });
    }
    group.finish();
}

fn cech(c: &mut Criterion) {
    let (bott, div) = sl4_positive();
    let witness = Weight(vec![-3, -2, -2, 0]);
    c.bench_function("cech_weight_sl4", |b| b.iter(|| cech_weight(&bott, &div, black_box(&witness)).unwrap()));
}

criterion_group!(benches, tables, conditions, cech);
criterion_main!(benches);
