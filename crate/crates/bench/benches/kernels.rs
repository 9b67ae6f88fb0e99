//! Timings of the main kernels at desk-scale sizes.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use qgrass_core::gkm;
use qgrass_core::graphs::EdgeLabeledGraph;
use qgrass_core::noncrossing::enumerate_nc;
use qgrass_core::pluecker::verify_vanishing;
use qgrass_core::polytopes::check_fixed_points;
use qgrass_core::presentations::{qsym_quotient, tensor_presentation};
use qgrass_core::Composition;

fn combinatorics(c: &mut Criterion) {
    c.bench_function("enumerate_nc(9)", |b| b.iter(|| enumerate_nc(black_box(9)).unwrap()));
    c.bench_function("quasi_johnson(3,7)", |b| b.iter(|| EdgeLabeledGraph::quasi_johnson(black_box(3), 7).unwrap()));
}

fn algebra(c: &mut Criterion) {
    let g = EdgeLabeledGraph::quasi_johnson(3, 6).unwrap();
    c.bench_function("all_flowups(3,6)", |b| b.iter(|| gkm::all_flowups(black_box(&g)).unwrap()));
    c.bench_function("qsym_quotient(2,5,7)", |b| b.iter(|| qsym_quotient(black_box(2), 5, 7)));
    c.bench_function("tensor_presentation(2,5,7)", |b| b.iter(|| tensor_presentation(black_box(2), 5, 7)));
}

fn sampling(c: &mut Criterion) {
    c.bench_function("verify_vanishing(2,5,20)", |b| b.iter(|| verify_vanishing(black_box(2), 5, 20, 7).unwrap()));
    let comps = Composition::all_in_comp(3, 6);
    c.bench_function("check_fixed_points(3,6)", |b| {
        b.iter(|| comps.iter().all(|a| check_fixed_points(a, 3, 6).unwrap().all_agree()))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = combinatorics, algebra, sampling
}
criterion_main!(benches);
