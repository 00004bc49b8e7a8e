use criterion::{criterion_group, criterion_main, Criterion};
use valdim::rings::random::{random_r, random_v, seeded};
use valdim::suite;
use valdim::witness::{lex_witness_pair, vdim_witness, ValuationOracle};

fn pairs(c: &mut Criterion) {
    let mut rng = seeded(3);
    let v: Vec<_> = (0..16).map(|_| (random_v(&mut rng), random_v(&mut rng))).collect();
    let r: Vec<_> = (0..16).map(|_| (random_r(&mut rng), random_r(&mut rng))).collect();
    c.bench_function("lex-pair/V", |bench| {
        bench.iter(|| v.iter().map(|(a, b)| lex_witness_pair(a, b, true).unwrap()).count())
    });
    c.bench_function("lex-pair/R", |bench| {
        bench.iter(|| r.iter().map(|(a, b)| lex_witness_pair(a, b, false).unwrap()).count())
    });
}

fn pipelines(c: &mut Criterion) {
    let mut rng = seeded(4);
    let m = suite::tdim_matrix();
    let a = [random_v(&mut rng), random_v(&mut rng)];
    c.bench_function("vdim/tdim-matrix", |bench| bench.iter(|| vdim_witness(&m, &a, &ValuationOracle).unwrap()));

    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    group.bench_function("w-preorder", |bench| bench.iter(|| suite::w_preorder_witnesses(5, 2)));
    group.bench_function("overring", |bench| bench.iter(|| suite::overring_pipeline(5, 2)));
    group.finish();
}

criterion_group!(benches, pairs, pipelines);
criterion_main!(benches);
