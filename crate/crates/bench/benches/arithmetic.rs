use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use num_bigint::BigInt;
use valdim::order::compare_exponents;
use valdim::rings::random::{random_laurent_v, random_v, random_w, seeded};
use valdim::text::{parse_matrix, parse_quad};
use valdim::VElem;

fn quad(c: &mut Criterion) {
    let a = parse_quad("3/7+5/11 s2").unwrap();
    let b = parse_quad("-2/3+1/5 s2").unwrap();
    c.bench_function("quad/mul", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("quad/cmp", |bench| bench.iter(|| black_box(&a).cmp(black_box(&b))));
}

fn order(c: &mut Criterion) {
    let m = parse_matrix("1,s2,0;0,1,1;1,0,0").unwrap();
    let e: Vec<BigInt> = [4, -7, 2].map(BigInt::from).to_vec();
    let f: Vec<BigInt> = [3, -6, 9].map(BigInt::from).to_vec();
    c.bench_function("order/compare", |bench| bench.iter(|| compare_exponents(&m, black_box(&e), black_box(&f))));
}

fn rings(c: &mut Criterion) {
    let mut rng = seeded(1);
    let pairs: Vec<(VElem, VElem)> = (0..32).map(|_| (random_v(&mut rng), random_v(&mut rng))).collect();
    c.bench_function("v/mul", |bench| {
        bench.iter(|| pairs.iter().map(|(a, b)| a.clone() * b.clone()).count())
    });
    c.bench_function("v/add", |bench| {
        bench.iter(|| pairs.iter().map(|(a, b)| a.clone() + b.clone()).count())
    });
    let ws: Vec<_> = (0..32).map(|_| (random_w(&mut rng), random_w(&mut rng))).collect();
    c.bench_function("w/add", |bench| {
        bench.iter(|| ws.iter().map(|(a, b)| a.clone() + b.clone()).count())
    });
}

fn evaluation(c: &mut Criterion) {
    let mut rng = seeded(2);
    let p = random_laurent_v(&mut rng, 2, 6).clear_denominators();
    let pts = [random_v(&mut rng), random_v(&mut rng)];
    c.bench_function("laurent/evaluate", |bench| {
        bench.iter_batched(|| pts.clone(), |pts| p.evaluate(&pts), BatchSize::SmallInput)
    });
}

criterion_group!(benches, quad, order, rings, evaluation);
criterion_main!(benches);
