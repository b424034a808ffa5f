use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use order66::arithmetic::{fp2, Fp};
use order66::elliptic::{factor_places, x66, y66};
use order66::{
    count_points, enumerate_profiles, run_tame_case, run_wild_case, solve, CongruenceSystem, ProfileConstraint,
};

fn profiles(c: &mut Criterion) {
    use ProfileConstraint::*;
    let cs = [ExactProfileOrder(66), ContainsFullOrbit(66), RequiresEigenvalueOne];
    c.bench_function("enumerate tame profiles", |b| {
        b.iter(|| enumerate_profiles(22, black_box(&cs)).unwrap())
    });
}

fn factoring(c: &mut Criterion) {
    let x = x66();
    let d = x.discriminant();
    c.bench_function("factor x66 discriminant over Q", |b| {
        b.iter(|| factor_places(x.field(), black_box(&d)).unwrap())
    });
    let y = y66();
    let d = y.discriminant();
    c.bench_function("factor y66 discriminant over F11", |b| {
        b.iter(|| factor_places(y.field(), black_box(&d)).unwrap())
    });
}

fn weights(c: &mut Criterion) {
    let sys = CongruenceSystem::new(66, &["a", "b", "c"])
        .unwrap()
        .with("3a = 2b = 12c = c; 11a = 22; 11b = 33")
        .unwrap();
    c.bench_function("solve weights mod 66", |b| b.iter(|| solve(black_box(&sys)).unwrap()));
}

fn counting(c: &mut Criterion) {
    let y = y66();
    let f11 = Fp::new(11).unwrap();
    let f121 = fp2(11).unwrap();
    c.bench_function("count y66 over F11", |b| {
        b.iter(|| count_points(black_box(&y), &f11).unwrap())
    });
    c.bench_function("count y66 over F121", |b| {
        b.iter(|| count_points(black_box(&y), &f121).unwrap())
    });
}

fn cases(c: &mut Criterion) {
    let mut g = c.benchmark_group("cases");
    g.sample_size(10);
    g.bench_function("tame char 0", |b| b.iter(|| run_tame_case(black_box(0)).unwrap()));
    g.bench_function("wild", |b| b.iter(run_wild_case));
    g.finish();
}

criterion_group!(benches, profiles, factoring, weights, counting, cases);
criterion_main!(benches);
